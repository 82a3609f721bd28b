#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace landau {

using Point = std::uint32_t;
using Cycle = std::vector<Point>;

/// A permutation of {1..degree} stored as an image array.
///
/// Products follow the right-action convention used by GAP: for
/// `g * h` the point i is first moved by g, then by h, i.e.
/// i^(gh) = (i^g)^h. Conjugation is x^g = g^-1 x g.
///
/// The public interface is 1-based; the image array is 0-based internally.
/// Ordering is lexicographic on the image array, which gives groups a
/// reproducible element order.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(std::size_t degree);

  /// Throws Error(invalid_permutation) unless `images` is a bijection on
  /// {1..images.size()}.
  static Permutation from_images(std::span<const Point> images);

  /// Cycles use 1-based points; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree, std::span<const Cycle> cycles);

  std::size_t degree() const noexcept { return images_.size(); }

  /// Image of the 1-based point `p`.
  Point operator()(Point p) const { return images_[p - 1] + 1; }

  bool is_identity() const noexcept;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation pow(long long exponent) const;

  /// x^g = g^-1 * x * g
  Permutation conjugate_by(const Permutation& g) const;

  std::size_t order() const;

  /// Non-trivial cycles, each starting at its smallest point, sorted by
  /// that point.
  std::vector<Cycle> cycles() const;

  /// GAP-style cycle notation, e.g. "(1,2,3)(4,5)"; the identity is "()".
  std::string to_string() const;

  std::span<const std::uint32_t> raw_images() const noexcept { return images_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {}

  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace landau
