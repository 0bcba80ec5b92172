#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmred/errors.hpp"

namespace cmred {

/// Index of the lexicographically least rotation of s (Booth's algorithm,
/// O(n)). A naive oracle for this lives in the test suite.
std::size_t least_rotation_index(std::string_view s);

/// Rotation-equivalence class of a nonempty word over {F, V}, stored as its
/// lexicographically least rotation (F < V).
class CircularWord {
public:
  /// Canonicalizes a raw letter sequence; rejects empty input and any symbol
  /// outside {F, V}.
  static CircularWord from_letters(std::string_view raw);

  /// Accepts "FFVV" or the bracketed class form "[FFVV]".
  static CircularWord parse(std::string_view text);

  const std::string& text() const noexcept { return canonical_; }
  std::string bracketed() const { return "[" + canonical_ + "]"; }
  std::size_t length() const noexcept { return canonical_.size(); }

  /// Letters swapped F <-> V, re-canonicalized. An involution.
  CircularWord dual() const;
  bool is_self_dual() const { return dual() == *this; }

  /// Least period t' | t as (t', t/t'). Aperiodic iff the multiplicity t/t'
  /// is 1. The root itself comes from primitive_root().
  std::pair<std::size_t, std::size_t> primitive_period() const;
  /// The aperiodic root; primitive_period().second copies of it make up this
  /// class.
  CircularWord primitive_root() const;
  bool is_aperiodic() const { return primitive_period().second == 1; }

  /// Number of cyclic F->V adjacencies; the class's additive contribution to
  /// the a-number. Zero exactly for the one-letter-alphabet classes.
  std::size_t fv_transitions() const;

  friend bool operator==(const CircularWord& a, const CircularWord& b) {
    return a.canonical_ == b.canonical_;
  }
  friend bool operator!=(const CircularWord& a, const CircularWord& b) {
    return !(a == b);
  }
  friend bool operator<(const CircularWord& a, const CircularWord& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.canonical_ < b.canonical_;
  }

private:
  struct canonical_tag {};
  CircularWord(std::string canonical, canonical_tag)
      : canonical_(std::move(canonical)) {}

  friend std::vector<CircularWord> aperiodic_classes(std::size_t n);

  std::string canonical_;
};

/// All aperiodic classes of length n, sorted. Generated as Lyndon words
/// (Duval), which are exactly the canonical forms of aperiodic classes.
std::vector<CircularWord> aperiodic_classes(std::size_t n);

/// Multiset of circular-word classes.
class WordMultiset {
public:
  WordMultiset() = default;

  void add(const CircularWord& w, std::size_t multiplicity = 1);

  const std::map<CircularWord, std::size_t>& entries() const noexcept {
    return entries_;
  }
  bool empty() const noexcept { return entries_.empty(); }
  /// Sum of length * multiplicity.
  std::size_t total_length() const;
  /// Number of words counted with multiplicity.
  std::size_t word_count() const;
  std::size_t multiplicity_of(const CircularWord& w) const;

  bool is_self_dual() const;
  bool all_aperiodic() const;

  /// Every entry replaced by its primitive root with multiplicity folded in.
  WordMultiset factored() const;

  /// Bracketed words repeated by multiplicity, in class order.
  std::vector<std::string> expanded_texts() const;
  /// Comma-joined expanded texts; the deduplication key for records.
  std::string canonical_text() const;

  friend bool operator==(const WordMultiset& a, const WordMultiset& b) {
    return a.entries_ == b.entries_;
  }
  friend bool operator<(const WordMultiset& a, const WordMultiset& b) {
    return a.entries_ < b.entries_;
  }

private:
  std::map<CircularWord, std::size_t> entries_;
};

struct SchemeInvariants {
  std::size_t p_rank = 0;  // multiplicity of the class [F]
  std::size_t a_number = 0;  // sum of fv_transitions over the multiset
};

/// Invariants of a factored multiset; rejects decomposable entries (callers
/// factor first).
SchemeInvariants invariants(const WordMultiset& factored);

/// One quasi-polarized piece: a single self-dual class, or a dual pair of
/// distinct classes (sorted).
struct QuasiPolarizedPiece {
  std::vector<CircularWord> words;

  bool is_self_dual_word() const { return words.size() == 1; }
  /// Half-order g of the piece: the singleton word has length 2g, a dual pair
  /// has two words of length g each.
  std::size_t half_order() const;
  std::size_t a_number() const;
  std::string text() const;

  friend bool operator==(const QuasiPolarizedPiece& a,
                         const QuasiPolarizedPiece& b) {
    return a.words == b.words;
  }
  friend bool operator<(const QuasiPolarizedPiece& a,
                        const QuasiPolarizedPiece& b) {
    return a.words < b.words;
  }
};

/// Deterministic pairing of a self-dual multiset of indecomposable classes
/// into quasi-polarized pieces. Rejects non-self-dual input, naming the
/// unmatched class.
std::vector<QuasiPolarizedPiece> quasi_polarized_pieces(
    const WordMultiset& factored);

}  // namespace cmred
