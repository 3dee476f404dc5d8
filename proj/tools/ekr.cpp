// ekr: command-line front end for the derangement-graph checks.

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "ekr/cli_io.hpp"
#include "ekr/error.hpp"

namespace fs = std::filesystem;
using ekr::json;

#ifndef EKR_DEFAULT_CATALOG_DIR
#define EKR_DEFAULT_CATALOG_DIR "data/catalogs"
#endif

namespace {

struct FamilyFlags {
  std::string family, n, p, m, abelian, y;

  ekr::GroupArgs args() const {
    ekr::GroupArgs a;
    if (!family.empty()) a.family = family;
    for (auto [k, v] : {std::pair{"n", &n}, {"p", &p}, {"m", &m}, {"abelian", &abelian}, {"y", &y}})
      if (!v->empty()) a.params[k] = *v;
    return a;
  }
};

void add_family_flags(CLI::App* sub, FamilyFlags& f) {
  sub->add_option("--family", f.family,
                  "cyclic, abelian, dihedral, gendihedral, dicyclic, agl1p, pgl2p, sym, alt, matching-join");
  sub->add_option("--n", f.n, "degree or size parameter");
  sub->add_option("--p", f.p, "prime");
  sub->add_option("--m", f.m, "number of matchings for matching-join");
  sub->add_option("--abelian", f.abelian, "invariant factors, e.g. 6 or 4,2");
  sub->add_option("--y", f.y, "dicyclic: coordinates of the order-2 element");
}

struct Output {
  std::string json_path, csv_path;
  bool no_cache = false;
};

void add_output_flags(CLI::App* sub, Output& o, bool csv) {
  sub->add_option("--json", o.json_path, "write the run record as JSON ('-' for stdout)");
  if (csv) sub->add_option("--csv", o.csv_path, "write removal cases as CSV");
  sub->add_flag("--no-cache", o.no_cache, "recompute even if a cached result exists");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) ekr::fail(ekr::ErrorKind::invalid_argument, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) ekr::fail(ekr::ErrorKind::invalid_argument, "cannot write " + path);
  out << text;
}

json params_json(const ekr::GroupArgs& a) {
  json p = json::object();
  if (a.family) p["family"] = *a.family;
  for (const auto& [k, v] : a.params) p[k] = v;
  return p;
}

// Cache lookup, compute, emit. Returns the exit code.
int execute(const std::string& command, const json& params, const std::map<std::string, std::string>& inputs,
            const Output& out, const std::function<json()>& compute) {
  ekr::RunRecord rec;
  rec.command = command;
  rec.params = params;
  rec.input_hash = ekr::input_hash(command, params, inputs);
  rec.timestamp = ekr::utc_timestamp();
  const ekr::ResultCache cache(ekr::default_cache_dir());
  std::optional<ekr::RunRecord> hit;
  if (!out.no_cache) hit = cache.load(command, rec.input_hash);
  if (hit) {
    rec.payload = hit->payload;
    rec.cache = "hit";
  } else {
    rec.payload = compute();
    if (!out.no_cache) {
      rec.cache = "miss";
      cache.store(rec);
    }
  }
  if (!out.csv_path.empty()) {
    if (!rec.payload.contains("cases")) ekr::fail(ekr::ErrorKind::invalid_argument, "--csv needs a scan claim");
    write_file(out.csv_path, ekr::cases_csv(rec.payload["cases"]));
  }
  const auto text = ekr::canonical_dump(ekr::to_json(rec)) + "\n";
  if (out.json_path == "-") {
    std::cout << text;
  } else {
    if (!out.json_path.empty()) write_file(out.json_path, text);
    std::cout << ekr::table_text(rec.payload);
  }
  return ekr::exit_code(rec.payload);
}

std::size_t default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string catalog_dir_default() {
  if (const char* d = std::getenv("EKR_CATALOG_DIR"); d && *d) return d;
  return EKR_DEFAULT_CATALOG_DIR;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Erdos-Ko-Rado checks on derangement graphs of permutation groups"};
  app.require_subcommand(1);
  std::size_t workers = default_workers();

  FamilyFlags gflags;
  Output gout;
  auto* group = app.add_subcommand("group", "build a group and describe it");
  add_family_flags(group, gflags);
  add_output_flags(group, gout, false);

  FamilyFlags pflags;
  Output pout;
  auto* prof = app.add_subcommand("profile", "degree, order, derangements, labels and d_G");
  add_family_flags(prof, pflags);
  add_output_flags(prof, pout, false);

  FamilyFlags aflags;
  Output aout;
  std::string remove_file;
  auto* alpha = app.add_subcommand("alpha", "exact independence number of the derangement graph");
  add_family_flags(alpha, aflags);
  add_output_flags(alpha, aout, false);
  alpha->add_option("--remove-labels", remove_file, "file with one derangement per line; their labels are removed")
      ->check(CLI::ExistingFile);

  FamilyFlags vflags;
  Output vout;
  std::string claim;
  std::string catalog_dir = catalog_dir_default();
  auto* verify = app.add_subcommand("verify", "check one claim");
  std::string ids;
  for (const auto& c : ekr::claim_ids()) ids += (ids.empty() ? "" : ", ") + c;
  verify->add_option("claim", claim, "claim id: " + ids)->required()->check(CLI::IsMember(ekr::claim_ids()));
  add_family_flags(verify, vflags);
  add_output_flags(verify, vout, true);
  verify->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--catalog-dir", catalog_dir, "directory with transitive_deg<n>.jsonl");

  auto* scan = app.add_subcommand("scan", "bulk scans");
  scan->require_subcommand(1);
  FamilyFlags rflags;
  Output rout;
  std::size_t budget = 1'000'000;
  auto* robust = scan->add_subcommand("robustness", "every label set of size d_G - 1");
  add_family_flags(robust, rflags);
  add_output_flags(robust, rout, false);
  robust->add_option("--budget", budget, "maximum number of label sets");
  robust->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);

  auto* cat = app.add_subcommand("catalog", "catalog operations");
  cat->require_subcommand(1);
  Output cout_;
  std::string catalog_file;
  std::size_t degree = 0;
  auto* cscan = cat->add_subcommand("scan", "count catalog groups with a matching-join derangement graph");
  cscan->add_option("--catalog", catalog_file, "JSON-lines catalog")->required()->check(CLI::ExistingFile);
  cscan->add_option("--degree", degree, "degree to scan")->required();
  cscan->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
  add_output_flags(cscan, cout_, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*group) {
      const auto a = gflags.args();
      return execute("group", params_json(a), {}, gout, [&] { return ekr::describe_group(a); });
    }
    if (*prof) {
      const auto a = pflags.args();
      return execute("profile", params_json(a), {}, pout, [&] { return ekr::profile_group(a); });
    }
    if (*alpha) {
      const auto a = aflags.args();
      std::map<std::string, std::string> inputs;
      std::vector<std::string> removed;
      if (!remove_file.empty()) {
        inputs["remove-labels"] = slurp(remove_file);
        removed = ekr::read_label_file(inputs["remove-labels"]);
      }
      return execute("alpha", params_json(a), inputs, aout, [&] { return ekr::alpha_report(a, removed); });
    }
    if (*verify) {
      ekr::ClaimOptions opts;
      opts.group = vflags.args();
      opts.workers = workers;
      opts.catalog_dir = catalog_dir;
      auto params = ekr::claim_params(claim, opts);
      std::map<std::string, std::string> inputs;
      if (claim == "table1") {
        // key on catalog contents, not the directory name
        for (std::size_t n : {4, 6, 8, 10}) {
          const auto path = fs::path(catalog_dir) / ("transitive_deg" + std::to_string(n) + ".jsonl");
          if (fs::exists(path)) inputs[path.filename().string()] = slurp(path.string());
        }
      }
      return execute("verify " + claim, params, inputs, vout, [&] { return ekr::run_claim(claim, opts); });
    }
    if (*robust) {
      const auto a = rflags.args();
      auto params = params_json(a);
      params["budget"] = budget;
      return execute("scan robustness", params, {}, rout, [&] { return ekr::robustness_report(a, workers, budget); });
    }
    if (*cscan) {
      json params{{"degree", degree}};
      const std::map<std::string, std::string> inputs{{"catalog", slurp(catalog_file)}};
      return execute("catalog scan", params, inputs, cout_,
                     [&] { return ekr::catalog_report(catalog_file, degree, workers); });
    }
  } catch (const ekr::Error& e) {
    std::cerr << "ekr: " << e.what() << '\n';
    return e.kind() == ekr::ErrorKind::guard_exceeded ? 4 : 2;
  } catch (const std::exception& e) {
    std::cerr << "ekr: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
