#include "ekr/catalog.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "ekr/error.hpp"
#include "ekr/permutation.hpp"

namespace ekr {

namespace {

bool generators_transitive(const std::vector<Permutation>& gens, std::size_t degree) {
  std::vector<bool> seen(degree, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (const auto& g : gens) {
      const auto img = g(static_cast<Permutation::Point>(queue[k]));
      if (!seen[img]) {
        seen[img] = true;
        queue.push_back(img);
      }
    }
  return queue.size() == degree;
}

}  // namespace

std::vector<CatalogEntry> parse_catalog_text(const std::string& text, const std::string& source,
                                             std::vector<CatalogWarning>* warnings) {
  std::vector<CatalogEntry> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto bad = [&](const std::string& what) {
    fail(ErrorKind::parse_error, source + ":" + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      bad(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("degree") || !j.contains("generators") || !j["degree"].is_number_unsigned() ||
        !j["generators"].is_array())
      bad("expected an object with degree and generators");
    CatalogEntry e;
    e.degree = j["degree"].get<std::size_t>();
    e.name = j.value("name", std::string{});
    e.source = j.value("source", source);
    e.line = lineno;
    if (e.degree < 1) bad("degree must be positive");
    std::vector<Permutation> gens;
    for (const auto& g : j["generators"]) {
      if (!g.is_string()) bad("generators must be strings");
      e.generators.push_back(g.get<std::string>());
      try {
        auto p = Permutation::from_cycles(e.generators.back(), e.degree);
        if (p.degree() != e.degree) bad("generator " + e.generators.back() + " has the wrong degree");
        gens.push_back(std::move(p));
      } catch (const Error& err) {
        if (err.kind() == ErrorKind::parse_error) throw;
        bad("generator " + e.generators.back() + ": " + err.what());
      }
    }
    if (!generators_transitive(gens, e.degree)) {
      if (warnings) warnings->push_back({lineno, "entry " + e.name + " is intransitive; skipped"});
      continue;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> parse_catalog(const std::string& path, std::vector<CatalogWarning>* warnings) {
  std::ifstream f(path);
  if (!f) fail(ErrorKind::invalid_argument, "cannot open catalog " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_catalog_text(buf.str(), path, warnings);
}

}  // namespace ekr
