#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmred/errors.hpp"

namespace cmred {

/// Bijection on the points {1..n}. Points are stored 0-based internally;
/// cycle notation I/O is 1-based.
///
/// The product p * q applies p first, then q. All orderings in this library
/// derive from the lexicographic order on image sequences.
class Permutation {
public:
  /// Identity on `degree` points. degree >= 1.
  static Permutation identity(std::size_t degree);

  /// Takes the 0-based image sequence; rejects non-bijections.
  explicit Permutation(std::vector<std::uint32_t> images);

  std::size_t degree() const noexcept { return images_.size(); }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  /// Image of a 0-based point.
  std::uint32_t apply(std::uint32_t point) const { return images_[point]; }

  bool is_identity() const noexcept;

  Permutation inverse() const;

  /// Least k >= 1 with p^k = identity.
  std::size_t order() const;

  /// Same mapping viewed on a larger point set (new points fixed).
  Permutation extended(std::size_t degree) const;

  /// Disjoint-cycle notation, 1-based, fixed points omitted, cycles sorted by
  /// least moved point; identity prints as "()".
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.images_ == b.images_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.images_ < b.images_;
  }

private:
  struct unchecked_tag {};
  Permutation(std::vector<std::uint32_t> images, unchecked_tag)
      : images_(std::move(images)) {}

  std::vector<std::uint32_t> images_;
};

}  // namespace cmred
