#include "ekr/cli_io.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <sstream>

#include "ekr/error.hpp"
#include "verify_util.hpp"

namespace ekr {

namespace fs = std::filesystem;

std::uint64_t fnv1a(std::string_view bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = digits[h & 0xf];
  return out;
}

std::string canonical_dump(const json& j) { return j.dump(2); }

json to_json(const RunRecord& r) {
  return json{{"command", r.command}, {"params", r.params},       {"payload", r.payload},      {"version", r.version},
              {"timestamp", r.timestamp}, {"input_hash", r.input_hash}, {"cache", r.cache}};
}

RunRecord record_from_json(const json& j) {
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.params = j.at("params");
  r.payload = j.at("payload");
  r.version = j.at("version").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  r.input_hash = j.at("input_hash").get<std::string>();
  return r;
}

std::string input_hash(const std::string& command, const json& params, const std::map<std::string, std::string>& inputs) {
  json key{{"command", command}, {"params", params}, {"version", kToolVersion}};
  json files = json::object();
  // content hashes only, the raw bytes could be large
  for (const auto& [name, text] : inputs) files[name] = hex64(fnv1a(text));
  key["inputs"] = files;
  return hex64(fnv1a(key.dump()));
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

fs::path default_cache_dir() {
  if (const char* d = std::getenv("EKR_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "ekr";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "ekr";
  return fs::temp_directory_path() / "ekr-cache";
}

fs::path ResultCache::path_for(const std::string& command, const std::string& hash) const {
  std::string safe = command;
  for (auto& c : safe)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.') c = '_';
  return dir_ / (safe + "-" + hash + ".json");
}

std::optional<RunRecord> ResultCache::load(const std::string& command, const std::string& hash) const {
  std::ifstream in(path_for(command, hash));
  if (!in) return std::nullopt;
  try {
    auto r = record_from_json(json::parse(in));
    if (r.input_hash != hash || r.command != command) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;  // corrupt entry, recompute
  }
}

void ResultCache::store(const RunRecord& r) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  const auto target = path_for(r.command, r.input_hash);
  const auto tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;  // unwritable cache is not an error
    auto j = to_json(r);
    j.erase("cache");
    out << canonical_dump(j) << '\n';
  }
  fs::rename(tmp, target, ec);
}

namespace {

struct ClaimDefaults {
  std::string family;
  std::map<std::string, std::string> params;
};

// Which parameters each claim reads, with its default value.
const std::map<std::string, ClaimDefaults>& claim_table() {
  static const std::map<std::string, ClaimDefaults> table{
      {"prop2.1", {"sym", {{"n", "4"}}}},
      {"cor3.3", {"cyclic", {{"n", "9"}}}},
      {"prop3.5", {"", {{"abelian", "4"}}}},
      {"prop3.6", {"cyclic", {{"n", "6"}}}},
      {"lem4.2", {"", {{"abelian", "6"}}}},
      {"prop4.3", {"", {{"abelian", "6"}}}},
      {"prop4.5", {"", {{"n", "8"}}}},
      {"lem4.6", {"", {{"abelian", "6"}}}},
      {"lem4.7", {"", {{"abelian", "6"}}}},
      {"cor4.8", {"", {{"abelian", "6"}}}},
      {"prop4.11", {"", {{"abelian", "4,2"}}}},
      {"thm5.1", {"", {{"p", "3"}}}},
      {"lem5.3", {"", {{"n", "5"}}}},
      {"lem5.4", {"", {{"p", "5"}}}},
      {"sym5", {"", {}}},
      {"lem6.4", {"", {{"abelian", "4"}}}},
      {"lem6.5", {"matching-join", {{"m", "3"}}}},
      {"table1", {"", {{"n", "all"}}}},
  };
  return table;
}

const ClaimDefaults& defaults_for(const std::string& claim) {
  const auto& t = claim_table();
  auto it = t.find(claim);
  if (it == t.end()) fail(ErrorKind::invalid_argument, "unknown claim id '" + claim + "'");
  return it->second;
}

std::size_t to_size(const std::string& key, const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) fail(ErrorKind::invalid_argument, "--" + key + " expects a non-negative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

AbelianSpec spec_of(const std::string& s) {
  std::vector<int> f;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty()) continue;
    f.push_back(static_cast<int>(to_size("abelian", part)));
  }
  if (f.empty()) fail(ErrorKind::invalid_argument, "--abelian needs factors such as 6 or 4,2");
  return AbelianSpec::canonical(f);
}

// Explicit flags win over defaults; flags the claim does not read are dropped.
std::map<std::string, std::string> resolve(const ClaimDefaults& d, const GroupArgs& args, bool family_claim) {
  std::map<std::string, std::string> out = d.params;
  if (family_claim && args.family) return args.params;
  for (auto& [k, v] : out)
    if (auto it = args.params.find(k); it != args.params.end()) v = it->second;
  return out;
}

bool is_family_claim(const ClaimDefaults& d) { return !d.family.empty(); }

json wrap_scan(const ScanResult& s, const GroupTable& g) {
  auto j = to_json(s.verdict);
  json cases = json::array();
  for (const auto& c : s.cases) cases.push_back(to_json(g, c));
  j["cases"] = cases;
  return j;
}

json table1(const ClaimOptions& opts, const std::string& which) {
  Verdict v;
  v.claim = "table1";
  v.params["degrees"] = which;
  std::vector<std::size_t> degrees{4, 6, 8, 10};
  if (which != "all") degrees = {to_size("n", which)};
  bool all = true, missing = false;
  json rows = json::array();
  for (auto n : degrees) {
    const auto path = opts.catalog_dir / ("transitive_deg" + std::to_string(n) + ".jsonl");
    if (!fs::exists(path)) {
      missing = true;
      v.notes.push_back("catalog not found: " + path.string());
      continue;
    }
    const auto cat = parse_catalog(path.string());
    const auto scan = catalog_scan(cat, n, opts.workers);
    rows.push_back({{"degree", n},
                    {"entries", scan.computed["entries"]},
                    {"count", scan.computed["count"]},
                    {"predicted", scan.predicted.value("count", json(nullptr))},
                    {"pass", scan.pass},
                    {"groups", scan.computed["groups"]}});
    all = all && scan.pass;
  }
  v.computed["rows"] = rows;
  if (missing) {
    v.hypothesis = false;
    v.notes.push_back("skipped: bundled catalogs are missing");
    return to_json(v);
  }
  v.pass = all;
  return to_json(v);
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids{"prop2.1", "cor3.3", "prop3.5", "prop3.6", "lem4.2",  "prop4.3",
                                            "prop4.5", "lem4.6", "lem4.7",  "cor4.8",  "prop4.11", "thm5.1",
                                            "lem5.3",  "lem5.4", "sym5",    "lem6.4",  "lem6.5",  "table1"};
  return ids;
}

GroupPtr build_group(const GroupArgs& args, const std::string& default_family,
                     const std::map<std::string, std::string>& defaults) {
  if (args.family) return std::make_shared<const GroupTable>(build_family(*args.family, args.params));
  if (default_family.empty()) fail(ErrorKind::invalid_argument, "--family is required");
  auto params = defaults;
  for (const auto& [k, v] : args.params) params[k] = v;
  return std::make_shared<const GroupTable>(build_family(default_family, params));
}

json claim_params(const std::string& claim, const ClaimOptions& opts) {
  const auto& d = defaults_for(claim);
  json p = json::object();
  if (is_family_claim(d)) p["family"] = opts.group.family.value_or(d.family);
  for (const auto& [k, v] : resolve(d, opts.group, is_family_claim(d))) p[k] = v;
  return p;
}

json run_claim(const std::string& claim, const ClaimOptions& opts) {
  const auto& d = defaults_for(claim);
  const auto params = resolve(d, opts.group, is_family_claim(d));
  auto get = [&](const std::string& k) { return params.at(k); };
  const auto w = opts.workers;
  auto group = [&] {
    GroupArgs a;
    a.family = opts.group.family.value_or(d.family);
    a.params = params;
    return std::make_shared<const GroupTable>(build_family(*a.family, a.params));
  };

  if (claim == "prop2.1") return to_json(binary_star_check(group()));
  if (claim == "cor3.3") {
    const auto g = group();
    return wrap_scan(kernel_remove_scan(g, w), *g);
  }
  if (claim == "prop3.5") {
    std::optional<std::size_t> y;
    const auto spec = spec_of(get("abelian"));
    if (auto it = opts.group.params.find("y"); it != opts.group.params.end()) {
      std::vector<int> c;
      std::stringstream in(it->second);
      std::string part;
      while (std::getline(in, part, ',')) c.push_back(static_cast<int>(to_size("y", part)));
      y = AbelianGroup(spec).index(c);
    }
    return to_json(dicyclic_only_regular(spec, y));
  }
  if (claim == "prop3.6") return to_json(kernel_odd_removal(group()));
  if (claim == "lem4.2") return to_json(gendi_fixed_point_form(spec_of(get("abelian"))));
  if (claim == "prop4.3") {
    const auto spec = spec_of(get("abelian"));
    const auto s = gendi_remove_one(spec, w);
    if (!s.verdict.hypothesis) return to_json(s.verdict);
    return wrap_scan(s, generalized_dihedral(spec));
  }
  if (claim == "prop4.5") {
    const auto n = to_size("n", get("n"));
    const auto s = dihedral_remove_two(n, w);
    if (!s.verdict.hypothesis) return to_json(s.verdict);
    return wrap_scan(s, dihedral(n));
  }
  if (claim == "lem4.6") return to_json(gendi_remove_rotations(spec_of(get("abelian"))));
  if (claim == "lem4.7") return to_json(gendi_remove_odd_rotations(spec_of(get("abelian"))));
  if (claim == "cor4.8") {
    const auto spec = spec_of(get("abelian"));
    const auto s = gendi_no_alpha3(spec, w);
    if (!s.verdict.hypothesis) return to_json(s.verdict);
    return wrap_scan(s, generalized_dihedral(spec));
  }
  if (claim == "prop4.11") return to_json(gendi_alpha3_witness(spec_of(get("abelian"))));
  if (claim == "thm5.1") return to_json(pgl_certificate(to_size("p", get("p"))));
  if (claim == "lem5.3") return to_json(sym_label_formula(to_size("n", get("n"))));
  if (claim == "lem5.4") return to_json(prime_clique_lower_bound(to_size("p", get("p"))));
  if (claim == "sym5") return to_json(sym5_witness());
  if (claim == "lem6.4") {
    const auto s = generalized_dihedral_structure(spec_of(get("abelian")));
    const auto g = std::make_shared<const GroupTable>(s.group);
    ElementSet h(s.rotation.begin(), s.rotation.end());
    std::sort(h.begin(), h.end());
    LabelSet removed;
    for (auto r : s.reflection)
      if (g->is_derangement(r)) removed.insert(label_of(*g, r));
    return to_json(hom_transfer(g, h, removed));
  }
  if (claim == "lem6.5") return to_json(subgroup_matching(group()));
  if (claim == "table1") return table1(opts, get("n"));
  fail(ErrorKind::invalid_argument, "unknown claim id '" + claim + "'");
}

json describe_group(const GroupArgs& args) {
  if (!args.family) fail(ErrorKind::invalid_argument, "--family is required");
  FamilyDescriptor desc;
  const auto g = build_family(*args.family, args.params, &desc);
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(p.to_cycles());
  return json{{"family", desc.family},
              {"params", desc.params},
              {"name", g.name()},
              {"degree", g.degree()},
              {"order", g.order()},
              {"generators", gens},
              {"transitive", is_transitive(g)},
              {"regular", is_regular(g)},
              {"derangements", derangement_set(g).size()},
              {"labels", all_labels(g).size()},
              {"provenance", desc.provenance}};
}

json profile_group(const GroupArgs& args) {
  const auto g = build_group(args, "", {});
  const auto p = profile(*g);
  return json{{"name", g->name()},
              {"degree", p.degree},
              {"order", p.order},
              {"derangements", p.derangements},
              {"labels", p.labels},
              {"star_size", p.star_size},
              {"d_G", p.d_g ? json(*p.d_g) : json(nullptr)},
              {"d_G_pair", {p.witness.first + 1, p.witness.second + 1}},
              {"two_way_labels", p.two_way_labels},
              {"transitive", p.transitive}};
}

std::vector<std::string> read_label_file(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

json alpha_report(const GroupArgs& args, const std::vector<std::string>& removed_cycles) {
  const auto g = build_group(args, "", {});
  LabelSet removed;
  for (const auto& c : removed_cycles) {
    const auto id = g->find(Permutation::from_cycles(c, g->degree()));
    if (!id) fail(ErrorKind::invalid_argument, "'" + c + "' is not an element of the group");
    if (!g->is_derangement(*id)) fail(ErrorKind::invalid_argument, "'" + c + "' is not a derangement");
    removed.insert(label_of(*g, *id));
  }
  const auto graph = remove_labels(derangement_graph(g), removed);
  ElementSet witness;
  const auto a = detail::alpha(graph, std::nullopt, &witness);
  return json{{"name", g->name()},
              {"vertices", g->order()},
              {"valency", graph.valency()},
              {"removed", labels_json(*g, removed)},
              {"alpha", a},
              {"star_size", star_size(*g)},
              {"witness", cycles_json(*g, witness)}};
}

json robustness_report(const GroupArgs& args, std::size_t workers, std::size_t budget) {
  return to_json(ekr_robust_exhaustive(build_group(args, "", {}), workers, budget));
}

json catalog_report(const std::string& path, std::size_t degree, std::size_t workers) {
  std::vector<CatalogWarning> warnings;
  const auto cat = parse_catalog(path, &warnings);
  auto j = to_json(catalog_scan(cat, degree, workers));
  for (const auto& w : warnings) j["notes"].push_back("line " + std::to_string(w.line) + ": " + w.message);
  return j;
}

int exit_code(const json& verdict) {
  if (!verdict.contains("pass")) return 0;
  if (verdict.value("budget_exceeded", false)) return 4;
  if (!verdict.value("hypothesis", true)) return 3;
  return verdict.value("pass", false) ? 0 : 1;
}

std::string cases_csv(const json& cases) {
  std::ostringstream out;
  out << "case,removed,alpha,predicted,tag\n";
  std::size_t i = 0;
  for (const auto& c : cases) {
    std::string removed;
    for (const auto& l : c.at("removed")) {
      if (!removed.empty()) removed += ' ';
      removed += l.get<std::string>();
    }
    out << i++ << ",\"" << removed << "\"," << c.at("alpha").get<std::size_t>() << ','
        << c.at("predicted").get<std::size_t>() << ',' << c.at("tag").get<std::string>() << '\n';
  }
  return out.str();
}

namespace {

void leaves(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object() && !j.empty()) {
    for (auto it = j.begin(); it != j.end(); ++it) leaves(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    return;
  }
  out.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

}  // namespace

std::string table_text(const json& payload) {
  std::vector<std::pair<std::string, std::string>> rows;
  if (payload.contains("claim") && payload.contains("pass")) {
    for (const char* section : {"params", "predicted", "computed"}) leaves(payload.at(section), section, rows);
    if (payload.contains("cases")) rows.emplace_back("cases", std::to_string(payload.at("cases").size()));
  } else {
    for (auto it = payload.begin(); it != payload.end(); ++it)
      if (it.key() != "witness") leaves(it.value(), it.key(), rows);
  }
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  if (payload.contains("notes"))
    for (const auto& n : payload.at("notes")) out << "note: " << n.get<std::string>() << '\n';
  if (payload.contains("pass")) {
    const int code = exit_code(payload);
    const char* word = code == 0 ? "PASS" : code == 1 ? "FAIL" : code == 3 ? "HYPOTHESIS NOT MET" : "BUDGET EXCEEDED";
    out << payload.value("claim", std::string("verdict")) << ": " << word << '\n';
  }
  return out.str();
}

}  // namespace ekr
