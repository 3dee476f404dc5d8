#include "ekr/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ekr/error.hpp"

namespace ekr {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty()) fail(ErrorKind::invalid_argument, "permutation degree must be at least 1");
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v])
      fail(ErrorKind::invalid_argument, "image array is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  return Permutation(std::move(im), Unchecked{});
}

namespace {

void skip_space(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

}  // namespace

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t max_point = 0;
  std::size_t i = 0;
  skip_space(text, i);
  while (i < text.size()) {
    if (text[i] != '(')
      fail(ErrorKind::parse_error, "expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space(text, i);
      if (i >= text.size()) fail(ErrorKind::parse_error, "unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(ErrorKind::parse_error, "expected a point in cycle notation: " + std::string(text));
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > 65535) fail(ErrorKind::parse_error, "point out of range: " + std::string(text));
        ++i;
      }
      if (v == 0) fail(ErrorKind::parse_error, "points are 1-based: " + std::string(text));
      cycle.push_back(v - 1);
      max_point = std::max(max_point, v);
      skip_space(text, i);
      if (i < text.size() && text[i] == ',') ++i;
    }
    cycles.push_back(std::move(cycle));
    skip_space(text, i);
  }
  if (degree == 0) degree = std::max<std::size_t>(max_point, 1);
  if (max_point > degree)
    fail(ErrorKind::parse_error, "point exceeds degree " + std::to_string(degree) + ": " + std::string(text));

  std::vector<Point> im(degree);
  std::iota(im.begin(), im.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (used[c[k]]) fail(ErrorKind::parse_error, "point repeated in cycle notation: " + std::string(text));
      used[c[k]] = true;
      im[c[k]] = static_cast<Point>(c[(k + 1) % c.size()]);
    }
  }
  return Permutation(std::move(im));
}

Permutation Permutation::from_images_1based(std::span<const int> images) {
  std::vector<Point> im;
  im.reserve(images.size());
  for (int v : images) {
    if (v < 1 || static_cast<std::size_t>(v) > images.size())
      fail(ErrorKind::parse_error, "image array entry out of range");
    im.push_back(static_cast<Point>(v - 1));
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<Point> im(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) im[images_[k]] = static_cast<Point>(k);
  return Permutation(std::move(im), Unchecked{});
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lens;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (seen[k]) continue;
    std::size_t len = 0;
    for (std::size_t j = k; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::uint64_t Permutation::order() const {
  std::uint64_t o = 1;
  for (auto len : cycle_type()) o = std::lcm(o, static_cast<std::uint64_t>(len));
  return o;
}

Parity Permutation::parity() const {
  std::size_t transpositions = 0;
  for (auto len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<Permutation::Point> Permutation::fixed_points() const {
  std::vector<Point> pts;
  for (std::size_t k = 0; k < images_.size(); ++k)
    if (images_[k] == k) pts.push_back(static_cast<Point>(k));
  return pts;
}

std::size_t Permutation::num_fixed_points() const {
  std::size_t c = 0;
  for (std::size_t k = 0; k < images_.size(); ++k) c += images_[k] == k;
  return c;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (seen[k] || images_[k] == k) continue;
    out += '(';
    for (std::size_t j = k; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != k) out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<int> Permutation::to_images_1based() const {
  std::vector<int> out;
  out.reserve(images_.size());
  for (auto v : images_) out.push_back(static_cast<int>(v) + 1);
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    fail(ErrorKind::invalid_argument, "cannot compose permutations of degrees " + std::to_string(p.degree()) +
                                          " and " + std::to_string(q.degree()));
  std::vector<Permutation::Point> im(p.degree());
  for (std::size_t k = 0; k < im.size(); ++k) im[k] = p(q(k));
  return Permutation(std::move(im), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& h, const Permutation& g) { return g * h * g.inverse(); }

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace ekr
