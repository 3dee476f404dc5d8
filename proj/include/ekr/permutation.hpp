#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ekr {

enum class Parity { even, odd };

/// A bijection of {0, ..., n-1}; entry k of the image array is the image of point k.
///
/// Points are 0-based here. Text and JSON forms (cycle notation, image arrays)
/// are 1-based.
class Permutation {
 public:
  using Point = std::uint16_t;

  Permutation() = default;
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Parses 1-based cycle notation such as "(1,2)(3,4)". With degree 0 the
  /// degree is the largest point mentioned.
  static Permutation from_cycles(std::string_view text, std::size_t degree = 0);
  static Permutation from_images_1based(std::span<const int> images);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(std::size_t k) const { return images_[k]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation inverse() const;
  std::uint64_t order() const;
  Parity parity() const;
  bool is_even() const { return parity() == Parity::even; }
  std::vector<Point> fixed_points() const;
  std::size_t num_fixed_points() const;
  bool is_derangement() const { return num_fixed_points() == 0; }
  bool is_identity() const { return num_fixed_points() == degree(); }
  /// Cycle lengths in descending order, fixed points included as 1-cycles.
  std::vector<std::size_t> cycle_type() const;

  std::string to_cycles() const;
  std::vector<int> to_images_1based() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::vector<Point> images_;
};

/// (p * q)(k) = p(q(k)): apply q first, then p.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// g * h * g^-1
Permutation conjugate(const Permutation& h, const Permutation& g);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace ekr
