#include <algorithm>
#include <map>

#include "ekr/error.hpp"
#include "ekr/parallel.hpp"
#include "ekr/verify.hpp"
#include "verify_util.hpp"

namespace ekr {

using namespace detail;

namespace {

struct Dihedral {
  std::shared_ptr<GeneralizedDihedral> s;
  GroupPtr g;
  // For each element id: rotation index, or -1 - reflection index.
  std::vector<long> where;

  bool rotation(ElementId x) const { return where[x] >= 0; }
  std::size_t index(ElementId x) const { return where[x] >= 0 ? where[x] : -1 - where[x]; }
};

Dihedral make(const AbelianSpec& spec) {
  auto s = std::make_shared<GeneralizedDihedral>(generalized_dihedral_structure(spec));
  Dihedral d;
  d.g = GroupPtr(s, &s->group);
  d.where.assign(s->group.order(), 0);
  for (std::size_t c = 0; c < s->abelian.size(); ++c) {
    d.where[s->rotation[c]] = static_cast<long>(c);
    d.where[s->reflection[c]] = -1 - static_cast<long>(c);
  }
  d.s = std::move(s);
  return d;
}

// D(A) is not faithful on the cosets of <x> when every element of A is an involution.
std::optional<Verdict> unfaithful(const char* claim, const AbelianSpec& spec) {
  if (!spec.is_elementary_abelian_2()) return std::nullopt;
  Verdict v;
  v.claim = claim;
  v.params["abelian"] = spec.to_string();
  return hypothesis_failed(std::move(v), "x acts trivially on the cosets of <x> for elementary abelian 2-groups");
}

Verdict start_spec(std::string claim, const Dihedral& d) {
  auto v = start(std::move(claim), *d.g);
  v.params["abelian"] = d.s->abelian.spec().to_string();
  return v;
}

bool rotations_even(const Dihedral& d) {
  return std::all_of(d.s->rotation.begin(), d.s->rotation.end(),
                     [&](ElementId x) { return d.g->element(x).is_even(); });
}

// Post-removal alpha of one label in D(A), as the case table predicts it.
std::pair<std::size_t, std::string> predict_one(const Dihedral& d, ElementId x) {
  if (!d.rotation(x)) return {2, "reflection"};
  const auto& a = d.s->abelian;
  const auto c = d.index(x);
  if (a.order(c) == 3) return {6, "order3"};
  const auto sq = a.squares();
  if (std::find(sq.begin(), sq.end(), c) != sq.end()) return {4, "square"};
  return {2, "nonsquare"};
}

}  // namespace

Verdict gendi_fixed_point_form(const AbelianSpec& spec) {
  if (auto bad = unfaithful("gendi_fixed_point_form", spec)) return std::move(*bad);
  const auto d = make(spec);
  auto v = start_spec("gendi_fixed_point_form", d);
  const auto& a = d.s->abelian;
  std::vector<std::size_t> scan, form;
  for (std::size_t c = 0; c < a.size(); ++c)
    if (!d.g->is_derangement(d.s->reflection[c])) scan.push_back(c);
  for (auto c : a.squares()) form.push_back(c);
  std::sort(form.begin(), form.end());
  form.erase(std::unique(form.begin(), form.end()), form.end());
  json fixed = json::array();
  for (auto c : scan) fixed.push_back(d.g->element(d.s->reflection[c]).to_cycles());
  v.predicted["non_derangement_reflections"] = form.size();
  v.computed["non_derangement_reflections"] = scan.size();
  v.computed["sets_agree"] = scan == form;
  v.witness["reflections"] = fixed;
  v.pass = scan == form;
  return v;
}

ScanResult gendi_remove_one(const AbelianSpec& spec, std::size_t workers) {
  ScanResult out;
  if (auto bad = unfaithful("gendi_remove_one", spec)) {
    out.verdict = std::move(*bad);
    return out;
  }
  const auto d = make(spec);
  auto& v = out.verdict;
  v = start_spec("gendi_remove_one", d);
  if (spec.size() % 2) {
    v = hypothesis_failed(std::move(v), "|A| is odd, so D(A) is a kernel group");
    return out;
  }
  const auto gamma = derangement_graph(d.g);
  const std::vector<Label> labels(gamma.connection().begin(), gamma.connection().end());
  const auto alphas = parallel_map(labels.size(), workers, [&](std::size_t i) {
    return alpha(remove_labels(gamma, LabelSet{labels[i]}), std::nullopt, nullptr);
  });
  std::size_t matched = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [pred, tag] = predict_one(d, labels[i].lo);
    out.cases.push_back({{labels[i]}, alphas[i], pred, tag});
    matched += alphas[i] == pred;
  }
  v.predicted["matching_labels"] = labels.size();
  v.computed["matching_labels"] = matched;
  v.computed["labels"] = labels.size();
  v.pass = matched == labels.size();
  return out;
}

ScanResult dihedral_remove_two(std::size_t n, std::size_t workers) {
  ScanResult out;
  if (n % 2 || n < 6 || n > 20) fail(ErrorKind::invalid_argument, "pair scan needs even n with 6 <= n <= 20");
  const auto d = make(AbelianSpec::canonical({static_cast<int>(n)}));
  auto& v = out.verdict;
  v = start_spec("dihedral_remove_two", d);
  const auto& g = *d.g;
  const auto gamma = derangement_graph(d.g);
  const std::vector<Label> labels(gamma.connection().begin(), gamma.connection().end());
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j) pairs.emplace_back(i, j);

  auto rotation_set = [&](const Label& a, const Label& b) {
    std::vector<std::size_t> idx;
    for (auto x : {a.lo, a.hi, b.lo, b.hi})
      if (d.rotation(x)) idx.push_back(d.index(x));
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    return idx;
  };
  auto even_rotation = [&](ElementId x) { return d.rotation(x) && g.element(x).is_even(); };
  auto odd_rotation = [&](ElementId x) { return d.rotation(x) && !g.element(x).is_even(); };
  auto squares_to = [&](ElementId x, const Label& l) {
    const auto sq = g.mul(x, x);
    return sq == l.lo || sq == l.hi;
  };
  // Cases are tried in the order they are listed; the first match wins.
  auto predict = [&](const Label& lz, const Label& ly) -> std::pair<std::size_t, std::string> {
    const auto z = lz.lo, y = ly.lo;
    if ((odd_rotation(z) && odd_rotation(y)) || (!d.rotation(z) && !d.rotation(y))) return {2, "odd_or_reflections"};
    if (d.rotation(z) && d.rotation(y)) {
      const auto set = rotation_set(lz, ly);
      if (n % 5 == 0 && set == std::vector<std::size_t>{n / 5, 2 * n / 5, 3 * n / 5, 4 * n / 5})
        return {10, "fifths"};
      if (n % 8 == 0 && set == std::vector<std::size_t>{n / 4, n / 2, 3 * n / 4}) return {8, "quarters"};
    }
    if (even_rotation(z) && even_rotation(y) && (squares_to(y, lz) || squares_to(z, ly))) return {6, "square_pair"};
    if (g.element_order(z) == 3 || g.element_order(y) == 3) return {6, "order3"};
    return {4, "other"};
  };

  const auto alphas = parallel_map(pairs.size(), workers, [&](std::size_t k) {
    const auto [i, j] = pairs[k];
    return alpha(remove_labels(gamma, LabelSet{labels[i], labels[j]}), std::nullopt, nullptr);
  });
  std::size_t matched = 0;
  std::map<std::string, std::size_t> tags;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    auto [pred, tag] = predict(labels[i], labels[j]);
    ++tags[tag];
    out.cases.push_back({{labels[i], labels[j]}, alphas[k], pred, tag});
    matched += alphas[k] == pred;
  }
  v.params["n"] = n;
  v.predicted["matching_pairs"] = pairs.size();
  v.computed["matching_pairs"] = matched;
  v.computed["pairs"] = pairs.size();
  v.computed["cases"] = tags;
  v.pass = matched == pairs.size();
  return out;
}

Verdict gendi_remove_rotations(const AbelianSpec& spec) {
  if (auto bad = unfaithful("gendi_keep_rotations", spec)) return std::move(*bad);
  const auto d = make(spec);
  auto v = start_spec("gendi_keep_rotations", d);
  const auto& g = *d.g;
  ElementSet rot(d.s->rotation.begin() + 1, d.s->rotation.end());
  std::sort(rot.begin(), rot.end());
  auto minimal = labels_of(g, rot);
  auto extended = minimal;
  std::size_t added = 0;
  for (const auto& l : all_labels(g)) {
    if (!d.rotation(l.lo) && added % 2 == 0) extended.insert(l);
    added += !d.rotation(l.lo);
  }
  const auto a1 = alpha(build(d.g, minimal), std::nullopt, nullptr);
  const auto a2 = alpha(build(d.g, extended), std::nullopt, nullptr);
  v.predicted["alpha"] = 2;
  v.computed["alpha_rotations_only"] = a1;
  v.computed["alpha_with_some_reflections"] = a2;
  v.pass = a1 == 2 && a2 == 2;
  return v;
}

Verdict gendi_remove_odd_rotations(const AbelianSpec& spec) {
  if (auto bad = unfaithful("gendi_keep_even_rotations", spec)) return std::move(*bad);
  const auto d = make(spec);
  auto v = start_spec("gendi_keep_even_rotations", d);
  const auto& g = *d.g;
  if (spec.size() % 2) return hypothesis_failed(std::move(v), "|A| is odd");
  if (rotations_even(d)) return hypothesis_failed(std::move(v), "A lies in the alternating group");
  ElementId tau = 0;
  for (auto r : d.s->reflection)
    if (g.is_derangement(r) && (tau == 0 || r < tau)) tau = r;
  ElementSet conn;
  for (auto r : d.s->rotation) {
    if (!g.element(r).is_even()) continue;
    if (r != GroupTable::identity()) conn.push_back(r);
    conn.push_back(g.mul(tau, r));
  }
  std::sort(conn.begin(), conn.end());
  for (auto x : conn)
    if (!g.is_derangement(x)) return hypothesis_failed(std::move(v), "the prescribed set holds a non-derangement");
  const auto a = alpha(build(d.g, labels_of(g, conn)), std::nullopt, nullptr);
  v.params["tau"] = g.element(tau).to_cycles();
  v.predicted["alpha"] = 2;
  v.computed["alpha"] = a;
  v.computed["connection_size"] = conn.size();
  v.pass = a == 2;
  return v;
}

ScanResult gendi_no_alpha3(const AbelianSpec& spec, std::size_t workers) {
  ScanResult out;
  if (auto bad = unfaithful("gendi_no_alpha3", spec)) {
    out.verdict = std::move(*bad);
    return out;
  }
  const auto d = make(spec);
  auto& v = out.verdict;
  v = start_spec("gendi_no_alpha3", d);
  if (spec.size() % 2) {
    v = hypothesis_failed(std::move(v), "|A| is odd");
    return out;
  }
  if (rotations_even(d)) {
    v = hypothesis_failed(std::move(v), "A lies in the alternating group");
    return out;
  }
  const auto all = all_labels(*d.g);
  const std::vector<Label> labels(all.begin(), all.end());
  if (labels.size() > 20) {
    v.budget_exceeded = true;
    v.notes.push_back("more than 20 labels");
    return out;
  }
  const std::size_t subsets = std::size_t{1} << labels.size();
  const auto alphas = parallel_map(subsets, workers, [&](std::size_t mask) {
    LabelSet conn;
    for (std::size_t b = 0; b < labels.size(); ++b)
      if ((mask >> b) & 1u) conn.insert(labels[b]);
    return alpha(build(d.g, conn), std::nullopt, nullptr);
  });
  bool monotone = true;
  std::size_t threes = 0;
  std::set<std::size_t> values;
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    values.insert(alphas[mask]);
    threes += alphas[mask] == 3;
    for (std::size_t b = 0; b < labels.size(); ++b)
      if (!((mask >> b) & 1u)) monotone = monotone && alphas[mask | (std::size_t{1} << b)] <= alphas[mask];
    RemovalCase c;
    for (std::size_t b = 0; b < labels.size(); ++b)
      if (!((mask >> b) & 1u)) c.removed.push_back(labels[b]);
    c.alpha = alphas[mask];
    c.tag = alphas[mask] == 3 ? "alpha3" : "ok";
    out.cases.push_back(std::move(c));
  }
  v.predicted["alpha3_sets"] = 0;
  v.predicted["monotone"] = true;
  v.computed["alpha3_sets"] = threes;
  v.computed["monotone"] = monotone;
  v.computed["subsets"] = subsets;
  v.computed["values"] = values;
  v.pass = threes == 0 && monotone;
  return out;
}

Verdict gendi_bulk_removals(const AbelianSpec& spec, std::size_t workers) {
  if (auto bad = unfaithful("gendi_bulk_removals", spec)) return std::move(*bad);
  const auto d = make(spec);
  auto v = start_spec("gendi_bulk_removals", d);
  const auto keep_rot = gendi_remove_rotations(spec);
  const auto keep_even = gendi_remove_odd_rotations(spec);
  const auto no3 = gendi_no_alpha3(spec, workers).verdict;
  v.computed["keep_rotations"] = keep_rot.pass;
  v.computed["keep_even_rotations"] = keep_even.hypothesis ? json(keep_even.pass) : json(nullptr);
  v.computed["never_alpha3"] = no3.hypothesis && !no3.budget_exceeded ? json(no3.pass) : json(nullptr);
  for (const auto* sub : {&keep_even, &no3})
    for (const auto& note : sub->notes) v.notes.push_back(sub->claim + ": " + note);
  v.budget_exceeded = no3.budget_exceeded;
  v.pass = keep_rot.pass && (!keep_even.hypothesis || keep_even.pass) && (!no3.hypothesis || no3.pass) &&
           !no3.budget_exceeded;
  return v;
}

Verdict gendi_alpha3_witness(const AbelianSpec& spec) {
  if (auto bad = unfaithful("gendi_alpha3_witness", spec)) return std::move(*bad);
  const auto d = make(spec);
  auto v = start_spec("gendi_alpha3_witness", d);
  const auto& g = *d.g;
  const auto& a = d.s->abelian;
  const auto squares = a.squares().size();
  v.computed["squares"] = squares;
  v.predicted["squares_at_most"] = a.size() / 4;
  if (a.size() % 2) return hypothesis_failed(std::move(v), "|A| is odd");
  if (!rotations_even(d)) return hypothesis_failed(std::move(v), "A contains odd permutations");
  // a: least element id among the rotations of maximum order.
  ElementId best = 0;
  std::size_t best_order = 0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const auto id = d.s->rotation[c];
    const auto o = a.order(c);
    if (o > best_order || (o == best_order && id < best)) {
      best = id;
      best_order = o;
    }
  }
  std::optional<ElementId> y;
  for (ElementId x = 0; x < g.order(); ++x) {
    if (d.rotation(x) || !g.is_derangement(x)) continue;
    if (g.is_derangement(g.mul(x, best))) {
      y = x;
      break;
    }
  }
  if (!y) return hypothesis_failed(std::move(v), "no reflection y with y and ya derangements");
  const auto ya = g.mul(*y, best);
  const LabelSet removed{label_of(g, best), label_of(g, *y), label_of(g, ya)};
  ElementSet w;
  const auto al = alpha(remove_labels(derangement_graph(d.g), removed), std::nullopt, &w);
  const VertexSet small{GroupTable::identity(), *y, ya};
  v.params["a"] = g.element(best).to_cycles();
  v.params["y"] = g.element(*y).to_cycles();
  v.predicted["alpha"] = 3;
  v.computed["alpha"] = al;
  v.witness["removed"] = labels_json(g, removed);
  v.witness["independent_set"] = cycles_json(g, w);
  const bool base_ok = is_independent(remove_labels(derangement_graph(d.g), removed).adjacency(), small);
  v.pass = al == 3 && squares <= a.size() / 4 && base_ok;
  return v;
}

}  // namespace ekr
