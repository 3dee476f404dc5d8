#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ekr/catalog.hpp"
#include "ekr/dergraph.hpp"
#include "ekr/families.hpp"
#include "ekr/solver.hpp"

namespace ekr {

using json = nlohmann::json;

struct Verdict {
  std::string claim;
  json params = json::object();
  json predicted = json::object();
  json computed = json::object();
  json witness = json::object();
  bool pass = false;
  /// False when the input does not meet the statement's hypotheses.
  bool hypothesis = true;
  bool budget_exceeded = false;
  std::vector<std::string> notes;
};

json to_json(const Verdict& v);

/// One label-removal instance of a scan.
struct RemovalCase {
  std::vector<Label> removed;
  std::size_t alpha = 0;
  std::size_t predicted = 0;
  std::string tag;
};

json to_json(const GroupTable& g, const RemovalCase& c);
/// One row per case: removed labels, alpha, predicted, tag.
std::string removal_csv(const GroupTable& g, const std::vector<RemovalCase>& cases);

struct ScanResult {
  Verdict verdict;
  std::vector<RemovalCase> cases;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Sorted cycle strings for a set of elements.
json cycles_json(const GroupTable& g, const ElementSet& s);
json labels_json(const GroupTable& g, const LabelSet& labels);

std::size_t star_size(const GroupTable& g);

Verdict ekr_property(const GroupPtr& g);
/// Tests every label set of size d_G - 1; at most `combination_budget` sets.
Verdict ekr_robust_exhaustive(const GroupPtr& g, std::size_t workers = 1, std::size_t combination_budget = 1'000'000);
/// Checks one removal set D: passes when D has fewer than d_G labels and alpha grows.
Verdict ekr_robust_witness(const GroupPtr& g, const LabelSet& d);

Verdict kernel_classification(const GroupPtr& g);
Verdict kernel_remove_one(const GroupPtr& g, const Label& label);
/// Every single-label removal of a kernel group, with the gap check.
ScanResult kernel_remove_scan(const GroupPtr& g, std::size_t workers = 1);
Verdict kernel_odd_removal(const GroupPtr& g);

/// True iff the only core-free subgroup is trivial.
Verdict only_regular_action(const GroupTable& g);
Verdict dicyclic_only_regular(const AbelianSpec& spec, std::optional<std::size_t> y = std::nullopt);

Verdict binary_star_check(const GroupPtr& g);

Verdict gendi_fixed_point_form(const AbelianSpec& spec);
ScanResult gendi_remove_one(const AbelianSpec& spec, std::size_t workers = 1);
ScanResult dihedral_remove_two(std::size_t n, std::size_t workers = 1);
Verdict gendi_remove_rotations(const AbelianSpec& spec);
Verdict gendi_remove_odd_rotations(const AbelianSpec& spec);
/// All inverse-closed connection subsets: alpha is never 3, and alpha is monotone.
ScanResult gendi_no_alpha3(const AbelianSpec& spec, std::size_t workers = 1);
/// Bundles the three checks above.
Verdict gendi_bulk_removals(const AbelianSpec& spec, std::size_t workers = 1);
Verdict gendi_alpha3_witness(const AbelianSpec& spec);

Verdict pgl_certificate(std::size_t p);
Verdict prime_clique_lower_bound(std::size_t p);
Verdict sym_label_formula(std::size_t n);
/// The two explicit sets printed for Sym(5).
std::vector<std::string> sym5_removed_set();
std::vector<std::string> sym5_independent_set();
Verdict sym5_witness();
Verdict sym_obstruction_set(std::size_t n, std::uint64_t node_limit = 50'000'000);

/// H is given as an element set of G.
Verdict hom_transfer(const GroupPtr& g, const ElementSet& h, const LabelSet& d);
Verdict subgroup_matching(const GroupPtr& g);


/// Reference counts of transitive groups with a matching-join derangement graph, by degree.
std::optional<std::size_t> table_count(std::size_t degree);
/// Counts entries passing subgroup_matching; computed.groups holds one row per entry.
Verdict catalog_scan(const std::vector<CatalogEntry>& catalog, std::size_t degree, std::size_t workers = 1);

}  // namespace ekr
