#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmred/catalog.hpp"
#include "cmred/cm_types.hpp"
#include "cmred/group.hpp"
#include "cmred/words.hpp"

namespace cmred {

/// Name of a quasi-polarized piece: the split multiplicative pair, a dictionary
/// type for half-order <= 5, or the raw words beyond the dictionary.
struct SchemeName {
  enum class Kind { MuPair, TypeI, TypeJ, Raw };

  Kind kind = Kind::Raw;
  std::uint32_t g = 0;
  std::uint32_t a = 0;
  std::vector<CircularWord> raw_words;

  /// "μ_p × Z/pZ", "I_{4,3}", "J_{5,2}", or "G[...]" for raw pieces.
  std::string base_text() const;
  /// Base text with a multiplicity exponent, parenthesized where the base
  /// itself contains a product (e.g. "(μ_p × Z/pZ)^2"). `standalone` keeps a
  /// lone multiplicity-one μ-pair unparenthesized.
  std::string rendered(std::size_t multiplicity, bool standalone) const;

  friend bool operator==(const SchemeName& x, const SchemeName& y) {
    return x.kind == y.kind && x.g == y.g && x.a == y.a &&
           x.raw_words == y.raw_words;
  }
};

struct NamedPiece {
  QuasiPolarizedPiece piece;
  SchemeName name;
  std::uint32_t multiplicity = 1;
};

/// Aggregates identical pieces and names them against the half-order <= 5
/// dictionary; unknown pieces come back as Raw (never an error).
std::vector<NamedPiece> name_pieces(const std::vector<QuasiPolarizedPiece>& pieces);

/// "A × B^2 × ..." rendering of a named decomposition.
std::string render_scheme_decomposition(const std::vector<NamedPiece>& pieces);

struct Provenance {
  std::string iota;
  std::string delta_generators;
  std::vector<std::uint32_t> cm_type;  // member coset ids
  std::string sigma;
};

/// One output row: a decomposition type together with one admissible
/// decomposition into quasi-polarized pieces.
struct CorrespondenceRecord {
  std::string group_label;
  std::uint32_t g = 0;
  DecompositionSignature signature;
  WordMultiset words;  // factored, indecomposable entries
  std::vector<NamedPiece> pieces;
  std::uint32_t p_rank = 0;
  std::uint32_t a_number = 0;
  std::optional<Provenance> provenance;

  /// Deduplication key: (alpha, beta, canonical word text).
  std::string dedup_key() const;
};

struct RunOptions {
  std::optional<std::uint32_t> g;
  /// Explicit subgroup generators (cycle notation); bypasses the subgroup
  /// search.
  std::optional<std::string> delta_generators;
  bool include_imprimitive = false;
  bool dedup = true;
  bool verbose_provenance = false;
  std::size_t subgroup_cap = default_subgroup_search_cap;
  std::size_t order_cap = FiniteGroup::default_order_cap;
  Orientation orientation = Orientation::Reverse;
  /// Aggregate-only shortcut: conjugacy-class representatives for the inner
  /// element loop and one CM type per conjugate pair. Requires dedup.
  bool fast_path = false;
  unsigned threads = 1;
  /// Collects human-readable warnings (no admissible subgroups, ...).
  std::vector<std::string>* warnings = nullptr;
};

/// The full driver: for every central involution, every admissible subgroup,
/// every (primitive) CM type and every group element, emit the decomposition
/// record. Deduplicated and sorted by (alpha, beta, words) unless dedup is
/// off, in which case records stream in loop order.
std::vector<CorrespondenceRecord> compute_correspondences(
    const LabeledGroup& labeled, const RunOptions& options);

/// Cross-group union with the same deduplication and ordering.
std::vector<CorrespondenceRecord> merge_records(
    const std::vector<std::vector<CorrespondenceRecord>>& per_group);

struct ClassificationEntry {
  QuasiPolarizedPiece piece;
  SchemeName name;
  std::uint32_t a_number = 0;
};

/// Every quasi-polarized indecomposable piece of half-order g: self-dual
/// aperiodic classes of length 2g plus dual pairs of aperiodic classes of
/// length g, sorted by (a-number, words).
std::vector<ClassificationEntry> classification_table(std::uint32_t g);

/// ((p-rank, a-number), (alpha, beta)) tuple.
struct InvariantPair {
  std::uint32_t p_rank = 0;
  std::uint32_t a_number = 0;
  std::uint32_t alpha = 0;
  std::uint32_t beta = 0;

  friend bool operator<(const InvariantPair& x, const InvariantPair& y) {
    if (x.p_rank != y.p_rank) return x.p_rank < y.p_rank;
    if (x.a_number != y.a_number) return x.a_number < y.a_number;
    if (x.alpha != y.alpha) return x.alpha < y.alpha;
    return x.beta < y.beta;
  }
  friend bool operator==(const InvariantPair& x, const InvariantPair& y) {
    return x.p_rank == y.p_rank && x.a_number == y.a_number &&
           x.alpha == y.alpha && x.beta == y.beta;
  }
};

std::set<InvariantPair> invariant_pairs(
    const std::vector<CorrespondenceRecord>& records);

/// Reference table of the admissible ((f, a), (alpha, beta)) combinations for
/// dimensions up to 5.
const std::set<InvariantPair>& admissible_invariant_pairs();
bool is_admissible_pair(const InvariantPair& pair);

}  // namespace cmred
