#include "ekr/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "ekr/error.hpp"

namespace ekr {

namespace {

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

AbelianSpec from_prime_exponents(const std::map<int, std::vector<int>>& exps) {
  std::size_t rank = 0;
  for (const auto& [p, es] : exps) rank = std::max(rank, es.size());
  std::vector<int> factors(rank, 1);
  for (const auto& [p, es] : exps) {
    auto sorted = es;
    std::sort(sorted.rbegin(), sorted.rend());
    for (std::size_t i = 0; i < sorted.size(); ++i) factors[i] *= ipow(p, sorted[i]);
  }
  factors.erase(std::remove(factors.begin(), factors.end(), 1), factors.end());
  return AbelianSpec{factors};
}

std::vector<std::vector<int>> partitions(int n, int max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = std::min(n, max_part); first >= 1; --first)
    for (auto& rest : partitions(n - first, first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    if (tok.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) fail(ErrorKind::invalid_argument, "expected integers, got '" + text + "'");
    out.push_back(v);
  }
  return out;
}

std::size_t param_size(const std::map<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) fail(ErrorKind::invalid_argument, "missing parameter --" + key);
  auto v = parse_ints(it->second);
  if (v.size() != 1 || v[0] < 0) fail(ErrorKind::invalid_argument, "parameter --" + key + " must be a non-negative integer");
  return static_cast<std::size_t>(v[0]);
}

Permutation from_map(std::size_t degree, const std::function<std::size_t(std::size_t)>& f) {
  std::vector<Point> im(degree);
  for (std::size_t k = 0; k < degree; ++k) im[k] = static_cast<Point>(f(k));
  return Permutation(std::move(im));
}

}  // namespace

AbelianSpec AbelianSpec::canonical(std::vector<int> factors) {
  std::map<int, std::vector<int>> exps;
  for (int f : factors) {
    if (f < 1) fail(ErrorKind::invalid_argument, "invariant factors must be positive");
    for (auto [p, e] : factorize(f)) exps[p].push_back(e);
  }
  return from_prime_exponents(exps);
}

std::size_t AbelianSpec::size() const {
  std::size_t s = 1;
  for (int f : invariant_factors) s *= static_cast<std::size_t>(f);
  return s;
}

bool AbelianSpec::is_elementary_abelian_2() const {
  return std::all_of(invariant_factors.begin(), invariant_factors.end(), [](int f) { return f == 2; });
}

std::string AbelianSpec::to_string() const {
  if (invariant_factors.empty()) return "C1";
  std::string out;
  for (std::size_t i = 0; i < invariant_factors.size(); ++i) {
    if (i) out += 'x';
    out += "C" + std::to_string(invariant_factors[i]);
  }
  return out;
}

std::vector<AbelianSpec> abelian_specs_of_order(std::size_t order) {
  std::vector<AbelianSpec> out{AbelianSpec{}};
  std::vector<std::map<int, std::vector<int>>> partial{{}};
  for (auto [p, e] : factorize(static_cast<int>(order))) {
    std::vector<std::map<int, std::vector<int>>> next;
    for (const auto& base : partial)
      for (const auto& part : partitions(e, e)) {
        auto m = base;
        m[p] = part;
        next.push_back(std::move(m));
      }
    partial = std::move(next);
  }
  out.clear();
  for (const auto& m : partial) out.push_back(from_prime_exponents(m));
  std::sort(out.begin(), out.end(),
            [](const AbelianSpec& a, const AbelianSpec& b) { return a.invariant_factors < b.invariant_factors; });
  return out;
}

AbelianGroup::AbelianGroup(AbelianSpec spec) : spec_(std::move(spec)), size_(spec_.size()) {
  for (int f : spec_.invariant_factors)
    if (f < 2) fail(ErrorKind::invalid_argument, "invariant factors must be at least 2");
}

std::vector<int> AbelianGroup::coords(std::size_t a) const {
  const auto& m = spec_.invariant_factors;
  std::vector<int> c(m.size());
  for (std::size_t i = m.size(); i-- > 0;) {
    c[i] = static_cast<int>(a % static_cast<std::size_t>(m[i]));
    a /= static_cast<std::size_t>(m[i]);
  }
  return c;
}

std::size_t AbelianGroup::index(const std::vector<int>& c) const {
  const auto& m = spec_.invariant_factors;
  if (c.size() != m.size()) fail(ErrorKind::invalid_argument, "coordinate tuple has the wrong length");
  std::size_t a = 0;
  for (std::size_t i = 0; i < m.size(); ++i) a = a * static_cast<std::size_t>(m[i]) + static_cast<std::size_t>(((c[i] % m[i]) + m[i]) % m[i]);
  return a;
}

std::size_t AbelianGroup::add(std::size_t a, std::size_t b) const {
  auto ca = coords(a);
  auto cb = coords(b);
  for (std::size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
  return index(ca);
}

std::size_t AbelianGroup::neg(std::size_t a) const {
  auto c = coords(a);
  for (auto& v : c) v = -v;
  return index(c);
}

std::size_t AbelianGroup::order(std::size_t a) const {
  const auto c = coords(a);
  std::size_t o = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const int m = spec_.invariant_factors[i];
    o = std::lcm(o, static_cast<std::size_t>(m / std::gcd(m, c[i])));
  }
  return o;
}

std::vector<std::size_t> AbelianGroup::squares() const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < size_; ++b) out.push_back(twice(b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GroupTable cyclic_regular(std::size_t n) {
  if (n < 1) fail(ErrorKind::invalid_argument, "cyclic_regular needs n >= 1");
  auto g = abelian_regular(AbelianSpec::canonical({static_cast<int>(n)}));
  return g.renamed("C" + std::to_string(n));
}

GroupTable abelian_regular(const AbelianSpec& spec) {
  AbelianGroup a(spec);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < spec.invariant_factors.size(); ++i) {
    std::vector<int> unit(spec.invariant_factors.size(), 0);
    unit[i] = 1;
    const auto u = a.index(unit);
    gens.push_back(from_map(a.size(), [&](std::size_t x) { return a.add(u, x); }));
  }
  return close(gens, kDefaultClosureCap, spec.to_string(), a.size());
}

GeneralizedDihedral generalized_dihedral_structure(const AbelianSpec& spec) {
  if (spec.is_elementary_abelian_2())
    fail(ErrorKind::invalid_argument, "D(A) needs A that is not an elementary abelian 2-group");
  AbelianGroup a(spec);
  const auto n = a.size();
  auto rot = [&](std::size_t c) { return from_map(n, [&](std::size_t x) { return a.add(c, x); }); };
  auto refl = [&](std::size_t c) { return from_map(n, [&](std::size_t x) { return a.neg(a.add(x, c)); }); };

  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < spec.invariant_factors.size(); ++i) {
    std::vector<int> unit(spec.invariant_factors.size(), 0);
    unit[i] = 1;
    gens.push_back(rot(a.index(unit)));
  }
  gens.push_back(refl(0));
  auto group = close(gens, kDefaultClosureCap, "D(" + spec.to_string() + ")", n);

  std::vector<ElementId> rotation(n), reflection(n);
  for (std::size_t c = 0; c < n; ++c) {
    rotation[c] = group.id_of(rot(c));
    reflection[c] = group.id_of(refl(c));
  }
  return GeneralizedDihedral{std::move(a), std::move(group), std::move(rotation), std::move(reflection)};
}

GroupTable generalized_dihedral(const AbelianSpec& spec) { return generalized_dihedral_structure(spec).group; }

GroupTable dihedral(std::size_t n) {
  if (n < 3) fail(ErrorKind::invalid_argument, "dihedral needs n >= 3");
  return generalized_dihedral(AbelianSpec::canonical({static_cast<int>(n)})).renamed("D" + std::to_string(2 * n));
}

Dicyclic dicyclic_structure(const AbelianSpec& spec, std::optional<std::size_t> y) {
  AbelianGroup a(spec);
  const auto n = a.size();
  if (!y) {
    if (!spec.is_cyclic() || n % 2 != 0)
      fail(ErrorKind::invalid_argument, "the involution y must be given unless A is cyclic of even order");
    y = n / 2;
  }
  if (*y >= n || a.order(*y) != 2) fail(ErrorKind::invalid_argument, "y must be an element of order 2 in A");
  const auto yy = *y;

  // Point e*n + b stands for b*x^e; left multiplication by (c, e).
  auto act = [&](std::size_t c, int e) {
    return from_map(2 * n, [&, c, e](std::size_t p) {
      const std::size_t b = p % n;
      const int f = static_cast<int>(p / n);
      if (e == 0) return f * n + a.add(c, b);
      const std::size_t base = a.add(c, a.neg(b));  // c x b = c b^-1 x
      return f == 0 ? n + base : a.add(base, yy);
    });
  };
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < spec.invariant_factors.size(); ++i) {
    std::vector<int> unit(spec.invariant_factors.size(), 0);
    unit[i] = 1;
    gens.push_back(act(a.index(unit), 0));
  }
  gens.push_back(act(0, 1));
  auto group = close(gens, kDefaultClosureCap, "Dic(" + spec.to_string() + ")", 2 * n);
  std::vector<ElementId> rotation(n), coset(n);
  for (std::size_t c = 0; c < n; ++c) {
    rotation[c] = group.id_of(act(c, 0));
    coset[c] = group.id_of(act(c, 1));
  }
  return Dicyclic{std::move(a), std::move(group), yy, std::move(rotation), std::move(coset)};
}

GroupTable dicyclic_regular(const AbelianSpec& spec, std::optional<std::size_t> y) {
  return dicyclic_structure(spec, y).group;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::size_t primitive_root(std::size_t p) {
  if (!is_prime(p)) fail(ErrorKind::invalid_argument, std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  for (std::size_t g = 2; g < p; ++g) {
    std::size_t x = 1, ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) return g;
  }
  return 1;
}

GroupTable agl1p(std::size_t p) {
  if (!is_prime(p) || p > 97) fail(ErrorKind::invalid_argument, "agl1p needs a prime p <= 97");
  const auto g = primitive_root(p);
  std::vector<Permutation> gens{from_map(p, [&](std::size_t x) { return (x + 1) % p; })};
  if (g != 1) gens.push_back(from_map(p, [&](std::size_t x) { return x * g % p; }));
  return close(gens, kDefaultClosureCap, "AGL(1," + std::to_string(p) + ")", p);
}

GroupTable pgl2p(std::size_t p) {
  if (!is_prime(p) || p > 13) fail(ErrorKind::invalid_argument, "pgl2p needs a prime p <= 13");
  const auto inf = p;
  const auto g = primitive_root(p);
  auto inverse_mod = [&](std::size_t x) {
    for (std::size_t y = 1; y < p; ++y)
      if (x * y % p == 1) return y;
    return std::size_t{0};
  };
  std::vector<Permutation> gens{
      from_map(p + 1, [&](std::size_t z) { return z == inf ? inf : (z + 1) % p; }),
      from_map(p + 1, [&](std::size_t z) { return z == inf ? std::size_t{0} : z == 0 ? inf : (p - inverse_mod(z)) % p; }),
  };
  if (g != 1) gens.push_back(from_map(p + 1, [&](std::size_t z) { return z == inf ? inf : z * g % p; }));
  return close(gens, kDefaultClosureCap, "PGL(2," + std::to_string(p) + ")", p + 1);
}

GroupTable symmetric(std::size_t n) {
  if (n < 1 || n > 8) fail(ErrorKind::guard_exceeded, "symmetric(n) is enumerated only for 1 <= n <= 8");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(from_map(n, [&](std::size_t x) { return x == 0 ? 1 : x == 1 ? 0 : x; }));
    gens.push_back(from_map(n, [&](std::size_t x) { return (x + 1) % n; }));
  }
  return close(gens, kDefaultClosureCap, "Sym(" + std::to_string(n) + ")", n);
}

GroupTable alternating(std::size_t n) {
  if (n < 3 || n > 8) fail(ErrorKind::guard_exceeded, "alternating(n) is enumerated only for 3 <= n <= 8");
  std::vector<Permutation> gens;
  for (std::size_t k = 2; k < n; ++k)
    gens.push_back(from_map(n, [&](std::size_t x) { return x == 0 ? 1 : x == 1 ? k : x == k ? 0 : x; }));
  return close(gens, kDefaultClosureCap, "Alt(" + std::to_string(n) + ")", n);
}

GroupTable matching_join(std::size_t m) {
  if (m < 2) fail(ErrorKind::invalid_argument, "matching_join needs m >= 2");
  const auto n = 2 * m;
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < m; ++i)
    gens.push_back(from_map(n, [&](std::size_t x) { return x / 2 == i ? x ^ 1 : x; }));
  gens.push_back(from_map(n, [&](std::size_t x) { return (x + 2) % n; }));
  return close(gens, kDefaultClosureCap, "MatchingJoin(" + std::to_string(m) + ")", n);
}

ElementSet matching_join_base(const GroupTable& g) {
  std::vector<ElementId> gens;
  for (std::size_t i = 0; i + 1 < g.generators().size(); ++i) gens.push_back(g.id_of(g.generators()[i]));
  return subgroup_generated(g, gens);
}

GroupTable build_family(const std::string& family, const std::map<std::string, std::string>& params,
                        FamilyDescriptor* descriptor) {
  auto spec_param = [&]() {
    auto it = params.find("abelian");
    if (it == params.end()) fail(ErrorKind::invalid_argument, "missing parameter --abelian");
    return AbelianSpec::canonical(parse_ints(it->second));
  };
  GroupTable g = [&]() -> GroupTable {
    if (family == "cyclic") return cyclic_regular(param_size(params, "n"));
    if (family == "abelian") return abelian_regular(spec_param());
    if (family == "dihedral") return dihedral(param_size(params, "n"));
    if (family == "gendihedral") return generalized_dihedral(spec_param());
    if (family == "dicyclic") {
      auto spec = spec_param();
      std::optional<std::size_t> y;
      if (auto it = params.find("y"); it != params.end()) y = AbelianGroup(spec).index(parse_ints(it->second));
      return dicyclic_regular(spec, y);
    }
    if (family == "agl1p") return agl1p(param_size(params, "p"));
    if (family == "pgl2p") return pgl2p(param_size(params, "p"));
    if (family == "sym") return symmetric(param_size(params, "n"));
    if (family == "alt") return alternating(param_size(params, "n"));
    if (family == "matching-join") return matching_join(param_size(params, "m"));
    fail(ErrorKind::invalid_argument, "unknown family '" + family + "'");
  }();
  if (descriptor) {
    descriptor->family = family;
    descriptor->params = params;
    descriptor->degree = g.degree();
    descriptor->order = g.order();
    descriptor->provenance = "constructed: " + g.name();
  }
  return g;
}

}  // namespace ekr
