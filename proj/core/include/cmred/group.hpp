#pragma once

#include <cstdint>
#include <vector>

#include "cmred/permutation.hpp"

namespace cmred {

/// Fully enumerated permutation group. Elements are kept sorted by image
/// sequence, so element indices are stable across runs; every ordering in
/// this library rides on that.
class FiniteGroup {
public:
  static constexpr std::size_t default_order_cap = 10'000;

  /// Closure of `generators` on `degree` points. Throws capacity_error if the
  /// closure exceeds `order_cap`, invalid_input on degree mismatch. An empty
  /// generator list yields the trivial group.
  static FiniteGroup generate(std::size_t degree,
                              std::vector<Permutation> generators,
                              std::size_t order_cap = default_order_cap);

  /// Convenience: degree taken from the generators (list must be nonempty).
  static FiniteGroup generate(std::vector<Permutation> generators,
                              std::size_t order_cap = default_order_cap);

  static FiniteGroup trivial(std::size_t degree);

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const Permutation& element(std::size_t index) const { return elements_[index]; }

  bool contains(const Permutation& p) const;
  /// Index of p in the sorted element list; throws invalid_input if absent.
  std::size_t index_of(const Permutation& p) const;

  bool is_subgroup_of(const FiniteGroup& g) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.degree_ == b.degree_ && a.elements_ == b.elements_;
  }
  friend bool operator<(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
    return a.elements_ < b.elements_;
  }

private:
  FiniteGroup(std::size_t degree, std::vector<Permutation> generators,
              std::vector<Permutation> sorted_elements)
      : degree_(degree),
        generators_(std::move(generators)),
        elements_(std::move(sorted_elements)) {}

  friend FiniteGroup subgroup_from_sorted_elements(const FiniteGroup& parent,
                                                   std::vector<Permutation> gens,
                                                   std::vector<Permutation> elems);

  std::size_t degree_ = 1;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;
};

/// Elements commuting with every generator (hence with the whole group).
FiniteGroup center(const FiniteGroup& g);

/// Central elements of order exactly two, in element order.
std::vector<Permutation> central_involutions(const FiniteGroup& g);

constexpr std::size_t default_subgroup_search_cap = 400;

/// All subgroups of order exactly m, deterministically ordered by element
/// list. Bottom-up generation: grow subgroups one outside element at a time,
/// keeping closures whose order divides m. Complete for |G| <= search_cap.
std::vector<FiniteGroup> subgroups_of_order(
    const FiniteGroup& g, std::size_t m,
    std::size_t search_cap = default_subgroup_search_cap);

/// Same, restricted to subgroups not containing `exclude`.
std::vector<FiniteGroup> subgroups_of_order(
    const FiniteGroup& g, std::size_t m, const Permutation& exclude,
    std::size_t search_cap = default_subgroup_search_cap);

/// Smallest subgroup of g containing a and all of h.
FiniteGroup join_subgroup(const FiniteGroup& g, const Permutation& a,
                          const FiniteGroup& h);

/// Every subgroup k with h <= k <= g (h and g included), ordered by element
/// list.
std::vector<FiniteGroup> overgroups(const FiniteGroup& g, const FiniteGroup& h);

/// One left coset r*H; members sorted, representative = least member.
struct Coset {
  Permutation representative;
  std::vector<Permutation> members;
};

/// Partition of G into left cosets g*H, ordered by representative.
class CosetSpace {
public:
  CosetSpace(FiniteGroup parent, FiniteGroup subgroup);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const FiniteGroup& subgroup() const noexcept { return subgroup_; }
  std::size_t index() const noexcept { return cosets_.size(); }
  const std::vector<Coset>& cosets() const noexcept { return cosets_; }

  /// Coset id of an element of G; total on G.
  std::size_t coset_of(const Permutation& element) const;

  /// Id of (actor * rep) H — the left-multiplication action.
  std::size_t left_translate(std::size_t coset_id, const Permutation& actor) const;

  /// Id of (rep * actor) H. Only well defined when actor is central or
  /// normalizes H; callers are expected to have checked.
  std::size_t right_translate(std::size_t coset_id, const Permutation& actor) const;

private:
  FiniteGroup parent_;
  FiniteGroup subgroup_;
  std::vector<Coset> cosets_;
  std::vector<std::uint32_t> coset_id_by_element_;  // indexed by element index
};

CosetSpace left_cosets(const FiniteGroup& g, const FiniteGroup& h);

enum class CosetAction { LeftMultiplication, RightMultiplication };

/// Number of orbits of <actor> on the cosets. The right action is validated
/// (actor central or normalizing the subgroup) and rejected otherwise.
std::size_t orbit_count(const CosetSpace& space, CosetAction action,
                        const Permutation& actor);

}  // namespace cmred
