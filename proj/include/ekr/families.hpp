#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ekr/group.hpp"

namespace ekr {

/// A ≅ C_{m1} x ... x C_{mk}; canonical form has m1 >= m2 >= ... with m_{i+1} | m_i.
struct AbelianSpec {
  std::vector<int> invariant_factors;

  /// Canonicalizes any factor list (e.g. {2,3} -> {6}, {2,4} -> {4,2}); factors of 1 are dropped.
  static AbelianSpec canonical(std::vector<int> factors);

  std::size_t size() const;
  bool is_cyclic() const { return invariant_factors.size() <= 1; }
  bool is_elementary_abelian_2() const;
  /// "C6", "C4xC2", "C1" for the trivial group.
  std::string to_string() const;

  bool operator==(const AbelianSpec&) const = default;
};

/// Every canonical spec of the given order, in lexicographic order of factors.
std::vector<AbelianSpec> abelian_specs_of_order(std::size_t order);

/// Additive model of an abelian group; elements are indexed in lexicographic
/// (mixed-radix) order of their coordinate tuples, so 0 is the identity.
class AbelianGroup {
 public:
  explicit AbelianGroup(AbelianSpec spec);

  const AbelianSpec& spec() const noexcept { return spec_; }
  std::size_t size() const noexcept { return size_; }
  std::vector<int> coords(std::size_t a) const;
  std::size_t index(const std::vector<int>& coords) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t neg(std::size_t a) const;
  std::size_t twice(std::size_t a) const { return add(a, a); }
  std::size_t order(std::size_t a) const;
  /// Elements of the form b + b.
  std::vector<std::size_t> squares() const;

 private:
  AbelianSpec spec_;
  std::size_t size_ = 1;
};

struct FamilyDescriptor {
  std::string family;
  std::map<std::string, std::string> params;
  std::size_t degree = 0;
  std::size_t order = 0;
  std::string provenance;
};

GroupTable cyclic_regular(std::size_t n);
/// Regular action of A on itself; points are the elements of A in AbelianGroup order.
GroupTable abelian_regular(const AbelianSpec& spec);

/// D(A) acting on the cosets of <x>, points labelled by A: c in A acts as
/// a -> c + a and the reflection x*c acts as a -> -(a + c).
struct GeneralizedDihedral {
  AbelianGroup abelian;
  GroupTable group;
  std::vector<ElementId> rotation;    // rotation[a] = id of a
  std::vector<ElementId> reflection;  // reflection[a] = id of x*a
};

GeneralizedDihedral generalized_dihedral_structure(const AbelianSpec& spec);
GroupTable generalized_dihedral(const AbelianSpec& spec);
GroupTable dihedral(std::size_t n);

/// Dic(A, y) = <x, A : x^2 = y, x^-1 a x = a^-1> acting regularly on itself.
/// Point e*|A| + a stands for a*x^e.
struct Dicyclic {
  AbelianGroup abelian;
  GroupTable group;
  std::size_t y = 0;
  std::vector<ElementId> rotation;  // rotation[a] = id of a
  std::vector<ElementId> coset;     // coset[a] = id of a*x
};

/// Without y, the involution of a cyclic A is used.
Dicyclic dicyclic_structure(const AbelianSpec& spec, std::optional<std::size_t> y = std::nullopt);
GroupTable dicyclic_regular(const AbelianSpec& spec, std::optional<std::size_t> y = std::nullopt);

bool is_prime(std::size_t p);
std::size_t primitive_root(std::size_t p);

/// x -> a x + b over the p-element field.
GroupTable agl1p(std::size_t p);
/// Natural action on the p + 1 points of the projective line; point p is infinity.
GroupTable pgl2p(std::size_t p);
GroupTable symmetric(std::size_t n);
GroupTable alternating(std::size_t n);
/// <(1,2), (3,4), ..., (2m-1,2m), (1,3,...,2m-1)(2,4,...,2m)> of degree 2m.
GroupTable matching_join(std::size_t m);
/// The subgroup generated by the m disjoint transpositions of matching_join(m).
ElementSet matching_join_base(const GroupTable& g);

/// Builds a family by its CLI name: cyclic, abelian, dihedral, gendihedral,
/// dicyclic, agl1p, pgl2p, sym, alt, matching-join. Parameters use the keys
/// n, p, m, abelian (comma-separated factors) and y (comma-separated coords).
GroupTable build_family(const std::string& family, const std::map<std::string, std::string>& params,
                        FamilyDescriptor* descriptor = nullptr);

}  // namespace ekr
