#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmred/group.hpp"
#include "cmred/words.hpp"

namespace cmred {

/// A CM type on a coset space: one coset picked from each conjugation pair.
/// Members are sorted coset ids; the space is carried by the caller.
struct CMType {
  std::vector<std::uint32_t> members;
};

/// The permutation of coset ids induced by right multiplication with iota.
/// Validates that iota is a central involution of the parent group and that
/// it pairs the cosets freely (an involution without fixed points).
std::vector<std::uint32_t> conjugation_on_cosets(const CosetSpace& space,
                                                 const Permutation& iota);

/// All 2^g subsets choosing one coset from each conjugation pair, ordered by
/// the binary choice counter over pairs sorted by least id. With
/// `collapse_conjugates` only one of {S, conjugate(S)} is kept, halving the
/// list.
std::vector<CMType> enumerate_cm_types(const CosetSpace& space,
                                       const Permutation& iota,
                                       bool collapse_conjugates = false);

/// Stabilizer criterion: the union of member cosets, as an element set, is
/// right-stabilized exactly by the subgroup itself. The independent
/// overgroup-fiber criterion lives in the test suite.
bool is_primitive(const CosetSpace& space, const CMType& type);

/// Cycles of the left-multiplication action of `actor` on the cosets. Each
/// cycle starts at its least coset id; cycles are listed by starting id.
std::vector<std::vector<std::uint32_t>> left_translation_cycles(
    const CosetSpace& space, const Permutation& actor);

/// Reading direction for turning a translation cycle into a word.
enum class Orientation { Forward, Reverse };

/// One raw circular word per cycle: the letter at a vertex is V for members
/// of the CM type and F otherwise, read along the cycle in the given
/// orientation. Raw words may be decomposable.
WordMultiset orbit_words(const std::vector<std::vector<std::uint32_t>>& cycles,
                         const CMType& type, Orientation orientation);

/// Decomposition type (alpha, beta) plus the orbit profile: conjugate pairs
/// of cycles are recorded once with their common size.
struct DecompositionSignature {
  struct Part {
    std::uint32_t size = 0;
    bool self_conjugate = false;

    friend bool operator==(const Part& a, const Part& b) {
      return a.size == b.size && a.self_conjugate == b.self_conjugate;
    }
  };

  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;
  std::vector<Part> profile;  // pairs first (size desc), then self-conjugates

  /// Prime-pattern label: conjugate pairs then self-conjugate primes,
  /// numbered when beta > 1 (e.g. "𝒫", "𝒫𝒫ᶜ", "𝒫₁𝒫₁ᶜ𝒫₂").
  std::string label() const;

  friend bool operator==(const DecompositionSignature& a,
                         const DecompositionSignature& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.profile == b.profile;
  }
};

/// Pairs the cycles under the coset conjugation. alpha = number of cycles,
/// beta = number of {cycle, conjugate cycle} classes.
DecompositionSignature decomposition_signature(
    const std::vector<std::vector<std::uint32_t>>& cycles,
    const std::vector<std::uint32_t>& conjugation);

}  // namespace cmred
