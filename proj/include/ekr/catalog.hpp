#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ekr {

struct CatalogEntry {
  std::size_t degree = 0;
  std::string name;
  /// 1-based cycle notation, one string per generator.
  std::vector<std::string> generators;
  std::string source;
  std::size_t line = 0;
};

struct CatalogWarning {
  std::size_t line = 0;
  std::string message;
};

/// Reads a JSON-lines catalog. Malformed lines throw with their line number;
/// entries whose generators act intransitively are skipped and reported.
std::vector<CatalogEntry> parse_catalog(const std::string& path, std::vector<CatalogWarning>* warnings = nullptr);
std::vector<CatalogEntry> parse_catalog_text(const std::string& text, const std::string& source,
                                             std::vector<CatalogWarning>* warnings = nullptr);

}  // namespace ekr
