#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "ekr/cli_io.hpp"
#include "ekr/error.hpp"

using namespace ekr;
namespace fs = std::filesystem;

#ifndef EKR_SOURCE_DIR
#define EKR_SOURCE_DIR "."
#endif

namespace {

const fs::path kCatalogs = fs::path(EKR_SOURCE_DIR) / "data" / "catalogs";

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ekr-test-" + hex64(fnv1a(std::to_string(std::rand()) + __TIME__)));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("bundled catalogs") {
  const std::size_t expect[] = {5, 5, 16, 7, 50, 34, 45};
  for (std::size_t n = 4; n <= 10; ++n) {
    std::vector<CatalogWarning> w;
    const auto cat = parse_catalog((kCatalogs / ("transitive_deg" + std::to_string(n) + ".jsonl")).string(), &w);
    CHECK(cat.size() == expect[n - 4]);
    CHECK(w.empty());
    for (const auto& e : cat) CHECK(e.degree == n);
  }
}

TEST_CASE("catalog parsing errors carry line numbers") {
  CHECK(parse_catalog_text("", "empty").empty());
  CHECK(parse_catalog_text("\n\n", "blank").empty());
  try {
    parse_catalog_text("{\"degree\": 4, \"name\": \"x\", \"generators\": [\"(1,2,3,4)\"]}\n{oops\n", "cat.jsonl");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::parse_error);
    CHECK(std::string(e.what()).find("cat.jsonl:2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_catalog_text(R"j({"degree": 3, "name": "x", "generators": ["(1,5)"]})j", "s"), Error);
  CHECK_THROWS_AS(parse_catalog_text(R"j({"name": "x", "generators": []})j", "s"), Error);
  std::vector<CatalogWarning> w;
  const auto cat = parse_catalog_text(R"j({"degree": 4, "name": "V", "generators": ["(1,2)(3,4)"]})j", "s", &w);
  CHECK(cat.empty());
  REQUIRE(w.size() == 1);
  CHECK(w[0].line == 1);
  CHECK_THROWS_AS(parse_catalog("/nonexistent/catalog.jsonl"), Error);
}

TEST_CASE("fnv1a and hex") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cull);
  CHECK(hex64(0xaf63dc4c8601ec8cull) == "af63dc4c8601ec8c");
  CHECK(hex64(1) == "0000000000000001");
}

TEST_CASE("canonical JSON sorts keys") {
  json j;
  j["zeta"] = 1;
  j["alpha"] = {{"b", 2}, {"a", 1}};
  CHECK(canonical_dump(j).find("\"alpha\"") < canonical_dump(j).find("\"zeta\""));
  CHECK(json::parse(canonical_dump(j)) == j);
}

TEST_CASE("input hash ignores the timestamp and tracks inputs") {
  const json p{{"abelian", "6"}};
  const auto h1 = input_hash("verify prop4.3", p, {});
  CHECK(h1 == input_hash("verify prop4.3", p, {}));
  CHECK(h1 != input_hash("verify prop4.3", json{{"abelian", "8"}}, {}));
  CHECK(input_hash("alpha", p, {{"f", "x"}}) != input_hash("alpha", p, {{"f", "y"}}));
  CHECK(h1.size() == 16);
}

TEST_CASE("result cache round-trip") {
  TempDir tmp;
  ResultCache cache(tmp.path);
  RunRecord r;
  r.command = "verify sym5";
  r.params = json::object();
  r.payload = {{"pass", true}};
  r.timestamp = utc_timestamp();
  r.input_hash = input_hash(r.command, r.params, {});
  CHECK_FALSE(cache.load(r.command, r.input_hash));
  cache.store(r);
  const auto back = cache.load(r.command, r.input_hash);
  REQUIRE(back);
  CHECK(back->payload == r.payload);
  CHECK(back->timestamp == r.timestamp);
  CHECK(cache.path_for(r.command, r.input_hash).filename() == "verify_sym5-" + r.input_hash + ".json");
  std::ofstream(cache.path_for(r.command, r.input_hash)) << "{broken";
  CHECK_FALSE(cache.load(r.command, r.input_hash));
}

TEST_CASE("cache directory honours the environment") {
  setenv("EKR_CACHE_DIR", "/tmp/elsewhere", 1);
  CHECK(default_cache_dir() == fs::path("/tmp/elsewhere"));
  unsetenv("EKR_CACHE_DIR");
  CHECK(default_cache_dir() != fs::path("/tmp/elsewhere"));
}

TEST_CASE("exit codes") {
  CHECK(exit_code(json{{"pass", true}, {"hypothesis", true}, {"budget_exceeded", false}}) == 0);
  CHECK(exit_code(json{{"pass", false}, {"hypothesis", true}, {"budget_exceeded", false}}) == 1);
  CHECK(exit_code(json{{"pass", false}, {"hypothesis", false}, {"budget_exceeded", false}}) == 3);
  CHECK(exit_code(json{{"pass", false}, {"hypothesis", true}, {"budget_exceeded", true}}) == 4);
  CHECK(exit_code(json{{"alpha", 6}}) == 0);
}

TEST_CASE("claim parameters and defaults") {
  CHECK(claim_ids().size() == 18);
  ClaimOptions o;
  CHECK(claim_params("prop4.3", o) == json{{"abelian", "6"}});
  o.group.params["abelian"] = "8";
  o.group.params["n"] = "5";  // not read by this claim
  CHECK(claim_params("prop4.3", o) == json{{"abelian", "8"}});
  ClaimOptions f;
  f.group.family = "agl1p";
  f.group.params["p"] = "5";
  CHECK(claim_params("cor3.3", f) == json({{"family", "agl1p"}, {"p", "5"}}));
  CHECK_THROWS_AS(claim_params("thm9.9", o), Error);
}

TEST_CASE("running claims") {
  ClaimOptions o;
  o.group.params["abelian"] = "6";
  const auto v = run_claim("prop4.3", o);
  CHECK(v["pass"] == true);
  REQUIRE(v.contains("cases"));
  CHECK(v["cases"].size() == 6);
  const auto csv = cases_csv(v["cases"]);
  CHECK(csv.rfind("case,removed,alpha,predicted,tag\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
  for (const auto& id : {"prop2.1", "prop3.5", "prop3.6", "lem4.2", "lem4.6", "lem4.7", "prop4.11", "thm5.1",
                         "lem5.3", "lem5.4", "sym5", "lem6.4", "lem6.5"})
    CHECK_MESSAGE(run_claim(id, ClaimOptions{})["pass"] == true, id);
  ClaimOptions c;
  c.catalog_dir = kCatalogs;
  c.group.params["n"] = "4";
  const auto t = run_claim("table1", c);
  CHECK(t["computed"]["rows"][0]["count"] == 3);
  CHECK(t["computed"]["rows"][0]["entries"] == 5);
  ClaimOptions missing;
  missing.catalog_dir = "/nonexistent";
  CHECK(run_claim("table1", missing)["hypothesis"] == false);
}

TEST_CASE("replaying a claim reproduces the payload") {
  ClaimOptions o;
  o.group.params["n"] = "10";
  o.workers = 1;
  const auto a = canonical_dump(run_claim("prop4.5", o));
  o.workers = 3;
  CHECK(canonical_dump(run_claim("prop4.5", o)) == a);
}

TEST_CASE("group reports") {
  GroupArgs g;
  g.family = "sym";
  g.params["n"] = "4";
  CHECK(alpha_report(g, {})["alpha"] == 6);
  CHECK(profile_group(g)["d_G"] == 3);
  CHECK(describe_group(g)["order"] == 24);
  GroupArgs m;
  m.family = "matching-join";
  m.params["m"] = "2";
  CHECK(alpha_report(m, read_label_file("# sigma\n(1,2)(3,4)\n\n"))["alpha"] == 4);
  CHECK_THROWS_AS(alpha_report(m, {"(1,2)"}), Error);
  CHECK_THROWS_AS(alpha_report(m, {"(1,2,3)"}), Error);
  GroupArgs none;
  CHECK_THROWS_AS(describe_group(none), Error);
}

TEST_CASE("table text lists every compared value") {
  ClaimOptions o;
  const auto v = run_claim("sym5", o);
  const auto text = table_text(v);
  CHECK(text.find("computed.alpha_removed") != std::string::npos);
  CHECK(text.find("sym5_witness: PASS") != std::string::npos);
  json g{{"alpha", 6}, {"witness", json::array({"()"})}};
  CHECK(table_text(g) == "alpha  6\n");
}
