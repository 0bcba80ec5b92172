#include "cmred/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace cmred {

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0) throw invalid_input("permutation degree must be positive");
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images), unchecked_tag{});
}

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  if (images_.empty()) throw invalid_input("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t img : images_) {
    if (img >= images_.size() || seen[img])
      throw invalid_input("image sequence is not a bijection of {1..n}");
    seen[img] = true;
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = i;
  return Permutation(std::move(inv), unchecked_tag{});
}

std::size_t Permutation::order() const {
  std::size_t result = 1;
  std::vector<bool> visited(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    std::uint32_t x = start;
    do {
      visited[x] = true;
      x = images_[x];
      ++len;
    } while (x != start);
    result = std::lcm(result, len);
  }
  return result;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size())
    throw invalid_input("cannot shrink a permutation's degree");
  std::vector<std::uint32_t> images = images_;
  images.reserve(degree);
  for (std::size_t i = images_.size(); i < degree; ++i)
    images.push_back(static_cast<std::uint32_t>(i));
  return Permutation(std::move(images), unchecked_tag{});
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> visited(images_.size(), false);
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (visited[start] || images_[start] == start) {
      visited[start] = true;
      continue;
    }
    out.push_back('(');
    std::uint32_t x = start;
    bool first = true;
    do {
      if (!first) out.push_back(',');
      out += std::to_string(x + 1);
      visited[x] = true;
      x = images_[x];
      first = false;
    } while (x != start);
    out.push_back(')');
  }
  if (out.empty()) out = "()";
  return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw invalid_input("degree mismatch in permutation product");
  std::vector<std::uint32_t> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = q.images_[p.images_[i]];
  return Permutation(std::move(images), Permutation::unchecked_tag{});
}

}  // namespace cmred
