#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ekr/verify.hpp"

namespace ekr::detail {

/// Exact alpha of a Cayley graph; the witness is re-verified before returning.
std::size_t alpha(const LabeledGraph& graph, std::optional<std::size_t> target, ElementSet* witness);
Verdict start(std::string claim, const GroupTable& g);
Verdict hypothesis_failed(Verdict v, std::string note);
ElementSet stabilizer(const GroupTable& g, Point i);
bool transitive_on_points(const GroupTable& g, const ElementSet& h);
/// Every nonempty subset of the first max_bits indices, as index lists.
std::vector<ElementSet> subsets_of(const std::vector<Label>& labels, std::size_t max_bits);

}  // namespace ekr::detail
