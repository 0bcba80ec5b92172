#include "cmred/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <stdexcept>
#include <thread>

namespace cmred {

namespace {

struct DictionaryRow {
  std::vector<const char*> words;
  SchemeName::Kind kind;
  std::uint32_t g;
  std::uint32_t a;
};

// Naming dictionary for quasi-polarized pieces of half-order <= 5. Raw
// spellings are canonicalized at init, so rotated aliases resolve too.
const std::map<std::string, SchemeName>& name_dictionary() {
  static const std::map<std::string, SchemeName> dict = [] {
    const std::vector<DictionaryRow> rows = {
        {{"F", "V"}, SchemeName::Kind::MuPair, 1, 0},
        {{"FV"}, SchemeName::Kind::TypeI, 1, 1},
        {{"FFVV"}, SchemeName::Kind::TypeI, 2, 1},
        {{"FFFVVV"}, SchemeName::Kind::TypeI, 3, 1},
        {{"FFV", "VVF"}, SchemeName::Kind::TypeI, 3, 2},
        {{"FFFFVVVV"}, SchemeName::Kind::TypeI, 4, 1},
        {{"FFFV", "VVVF"}, SchemeName::Kind::TypeI, 4, 2},
        {{"FFVFVVFV"}, SchemeName::Kind::TypeI, 4, 3},
        {{"FFFFFVVVVV"}, SchemeName::Kind::TypeI, 5, 1},
        {{"FFFFV", "VVVVF"}, SchemeName::Kind::TypeI, 5, 2},
        {{"FFFVV", "VVVFF"}, SchemeName::Kind::TypeJ, 5, 2},
        {{"FFFVFVVVFV"}, SchemeName::Kind::TypeI, 5, 3},
        {{"FFVFFVVFVV"}, SchemeName::Kind::TypeJ, 5, 3},
        {{"FFVFV", "VVFVF"}, SchemeName::Kind::TypeI, 5, 4},
    };
    std::map<std::string, SchemeName> out;
    for (const DictionaryRow& row : rows) {
      QuasiPolarizedPiece piece;
      for (const char* text : row.words)
        piece.words.push_back(CircularWord::from_letters(text));
      std::sort(piece.words.begin(), piece.words.end());
      SchemeName name;
      name.kind = row.kind;
      name.g = row.g;
      name.a = row.a;
      out.emplace(piece.text(), std::move(name));
    }
    return out;
  }();
  return dict;
}

SchemeName lookup_name(const QuasiPolarizedPiece& piece) {
  const auto& dict = name_dictionary();
  auto it = dict.find(piece.text());
  if (it != dict.end()) return it->second;
  SchemeName raw;
  raw.kind = SchemeName::Kind::Raw;
  raw.g = static_cast<std::uint32_t>(piece.half_order());
  raw.a = static_cast<std::uint32_t>(piece.a_number());
  raw.raw_words = piece.words;
  return raw;
}

bool name_order(const NamedPiece& x, const NamedPiece& y) {
  auto rank = [](const SchemeName& n) {
    switch (n.kind) {
      case SchemeName::Kind::MuPair: return 0;
      case SchemeName::Kind::TypeI: return 1;
      case SchemeName::Kind::TypeJ: return 2;
      case SchemeName::Kind::Raw: return 3;
    }
    return 3;
  };
  if (x.name.kind == SchemeName::Kind::MuPair ||
      y.name.kind == SchemeName::Kind::MuPair)
    return rank(x.name) < rank(y.name);
  if (x.name.g != y.name.g) return x.name.g < y.name.g;
  if (x.name.a != y.name.a) return x.name.a < y.name.a;
  if (rank(x.name) != rank(y.name)) return rank(x.name) < rank(y.name);
  return x.piece < y.piece;
}

}  // namespace

std::string SchemeName::base_text() const {
  switch (kind) {
    case Kind::MuPair: return "μ_p × Z/pZ";
    case Kind::TypeI:
      return "I_{" + std::to_string(g) + "," + std::to_string(a) + "}";
    case Kind::TypeJ:
      return "J_{" + std::to_string(g) + "," + std::to_string(a) + "}";
    case Kind::Raw: {
      std::string out;
      for (std::size_t i = 0; i < raw_words.size(); ++i) {
        if (i > 0) out += " ⊕ ";
        out += "G" + raw_words[i].bracketed();
      }
      return out;
    }
  }
  return {};
}

std::string SchemeName::rendered(std::size_t multiplicity, bool standalone) const {
  const bool composite = kind == Kind::MuPair ||
                         (kind == Kind::Raw && raw_words.size() > 1);
  std::string base = base_text();
  if (composite && (multiplicity > 1 || !standalone)) base = "(" + base + ")";
  if (multiplicity > 1) base += "^" + std::to_string(multiplicity);
  return base;
}

std::vector<NamedPiece> name_pieces(const std::vector<QuasiPolarizedPiece>& pieces) {
  std::map<QuasiPolarizedPiece, std::uint32_t> counts;
  for (const QuasiPolarizedPiece& piece : pieces) ++counts[piece];
  std::vector<NamedPiece> out;
  out.reserve(counts.size());
  for (const auto& [piece, count] : counts)
    out.push_back(NamedPiece{piece, lookup_name(piece), count});
  std::sort(out.begin(), out.end(), name_order);
  return out;
}

std::string render_scheme_decomposition(const std::vector<NamedPiece>& pieces) {
  const bool standalone = pieces.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (i > 0) out += " × ";
    out += pieces[i].name.rendered(pieces[i].multiplicity, standalone);
  }
  return out;
}

std::string CorrespondenceRecord::dedup_key() const {
  return std::to_string(signature.alpha) + "|" + std::to_string(signature.beta) +
         "|" + words.canonical_text();
}

namespace {

struct WorkItem {
  Permutation iota;
  FiniteGroup delta;
};

std::vector<Permutation> conjugacy_class_representatives(const FiniteGroup& g) {
  std::vector<bool> covered(g.order(), false);
  std::vector<Permutation> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (covered[i]) continue;
    reps.push_back(g.element(i));
    for (const Permutation& h : g.elements()) {
      const Permutation conj = h.inverse() * g.element(i) * h;
      covered[g.index_of(conj)] = true;
    }
  }
  return reps;
}

std::vector<CorrespondenceRecord> process_item(const LabeledGroup& labeled,
                                               const WorkItem& item,
                                               const RunOptions& options,
                                               const std::vector<Permutation>& sigmas) {
  const FiniteGroup& g = labeled.group;
  CosetSpace space(g, item.delta);
  const std::uint32_t dim = static_cast<std::uint32_t>(space.index() / 2);
  const std::vector<std::uint32_t> conj = conjugation_on_cosets(space, item.iota);
  const FiniteGroup h0 = join_subgroup(g, item.iota, item.delta);
  const CosetSpace h0_space(g, h0);

  // The translation cycles and the signature do not depend on the CM type;
  // hoist them out of the type loop.
  std::vector<std::vector<std::vector<std::uint32_t>>> cycles_by_sigma;
  std::vector<DecompositionSignature> signature_by_sigma;
  cycles_by_sigma.reserve(sigmas.size());
  for (const Permutation& sigma : sigmas) {
    auto cycles = left_translation_cycles(space, sigma);
    DecompositionSignature sig = decomposition_signature(cycles, conj);
    const std::size_t beta_check =
        left_translation_cycles(h0_space, sigma).size();
    if (sig.beta != beta_check)
      throw std::logic_error("signature beta disagrees with the orbit count on "
                             "the totally-real coset space");
    if (sig.beta > sig.alpha || sig.alpha > 2 * sig.beta)
      throw std::logic_error("decomposition signature violates beta <= alpha "
                             "<= 2*beta");
    cycles_by_sigma.push_back(std::move(cycles));
    signature_by_sigma.push_back(std::move(sig));
  }

  std::vector<CMType> types =
      enumerate_cm_types(space, item.iota, options.fast_path);
  if (!options.include_imprimitive) {
    std::vector<CMType> primitive;
    for (CMType& type : types)
      if (is_primitive(space, type)) primitive.push_back(std::move(type));
    types = std::move(primitive);
  }

  std::vector<CorrespondenceRecord> records;
  for (const CMType& type : types) {
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
      const auto& cycles = cycles_by_sigma[s];
      WordMultiset raw = orbit_words(cycles, type, options.orientation);
      if (raw.total_length() != 2 * dim)
        throw std::logic_error("raw orbit words do not cover the coset space");
      if (raw.word_count() != signature_by_sigma[s].alpha)
        throw std::logic_error("raw orbit word count disagrees with alpha");
      WordMultiset factored = raw.factored();
      if (!factored.is_self_dual())
        throw std::logic_error("orbit word multiset is not self-dual");

      const SchemeInvariants inv = invariants(factored);
      CorrespondenceRecord record;
      record.group_label = labeled.label;
      record.g = dim;
      record.signature = signature_by_sigma[s];
      record.pieces = name_pieces(quasi_polarized_pieces(factored));
      record.words = std::move(factored);
      record.p_rank = static_cast<std::uint32_t>(inv.p_rank);
      record.a_number = static_cast<std::uint32_t>(inv.a_number);
      if (options.verbose_provenance) {
        Provenance prov;
        prov.iota = item.iota.cycle_string();
        prov.delta_generators = print_cycles(item.delta.generators());
        prov.cm_type = type.members;
        prov.sigma = sigmas[s].cycle_string();
        record.provenance = std::move(prov);
      }
      records.push_back(std::move(record));
    }
  }
  return records;
}

void warn(const RunOptions& options, std::string message) {
  if (options.warnings) options.warnings->push_back(std::move(message));
}

}  // namespace

std::vector<CorrespondenceRecord> compute_correspondences(
    const LabeledGroup& labeled, const RunOptions& options) {
  const FiniteGroup& g = labeled.group;
  if (!options.g && !options.delta_generators)
    throw invalid_input("either the dimension g or explicit subgroup "
                        "generators are required");
  if (options.fast_path && !options.dedup)
    throw invalid_input("the fast path is only valid with deduplication");

  const std::vector<Permutation> iotas = central_involutions(g);
  if (iotas.empty())
    throw invalid_input("not a CM Galois datum: " + labeled.label +
                        " has no central involution");

  std::vector<WorkItem> items;
  if (options.delta_generators) {
    std::vector<Permutation> gens = parse_cycles(*options.delta_generators);
    for (Permutation& p : gens) {
      if (p.degree() > g.degree())
        throw invalid_input("subgroup generators (--delta): a generator moves "
                            "points beyond the group's degree");
      p = p.extended(g.degree());
      if (!g.contains(p))
        throw invalid_input("subgroup generators (--delta): " +
                            p.cycle_string() + " does not belong to the group");
    }
    FiniteGroup delta = FiniteGroup::generate(g.degree(), std::move(gens),
                                              g.order());
    if (g.order() % delta.order() != 0 ||
        (g.order() / delta.order()) % 2 != 0)
      throw invalid_input("subgroup generators (--delta): the subgroup has odd "
                          "index, so no CM types exist");
    if (options.g && g.order() / delta.order() != 2 * *options.g)
      throw invalid_input("subgroup generators (--delta): the subgroup's index "
                          "disagrees with --g");
    for (const Permutation& iota : iotas)
      if (!delta.contains(iota)) items.push_back(WorkItem{iota, delta});
    if (items.empty())
      warn(options, "every central involution lies in the supplied subgroup; "
                    "no CM data to process");
  } else {
    const std::uint32_t dim = *options.g;
    if (dim == 0) throw invalid_input("the dimension g must be positive");
    if (g.order() % (2 * static_cast<std::size_t>(dim)) != 0) {
      warn(options, "group order is not divisible by 2g; no admissible "
                    "subgroups");
      return {};
    }
    const std::size_t m = g.order() / (2 * static_cast<std::size_t>(dim));
    for (const Permutation& iota : iotas)
      for (FiniteGroup& delta :
           subgroups_of_order(g, m, iota, options.subgroup_cap))
        items.push_back(WorkItem{iota, std::move(delta)});
    if (items.empty())
      warn(options, "no subgroup of order " + std::to_string(m) +
                        " avoids the central involution(s); empty result");
  }

  const std::vector<Permutation> sigmas =
      options.fast_path ? conjugacy_class_representatives(g)
                        : g.elements();

  // Parallel over (iota, Delta) items; the merge below keeps item order, so
  // the output is independent of the thread count.
  std::vector<std::vector<CorrespondenceRecord>> per_item(items.size());
  const unsigned thread_count =
      std::max(1u, std::min<unsigned>(options.threads,
                                      static_cast<unsigned>(items.size())));
  if (thread_count <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i)
      per_item[i] = process_item(labeled, items[i], options, sigmas);
  } else {
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(thread_count);
    std::atomic<std::size_t> cursor{0};
    for (unsigned w = 0; w < thread_count; ++w) {
      workers.emplace_back([&, w] {
        try {
          while (true) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= items.size()) break;
            per_item[i] = process_item(labeled, items[i], options, sigmas);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& worker : workers) worker.join();
    for (const std::exception_ptr& error : errors)
      if (error) std::rethrow_exception(error);
  }

  std::vector<CorrespondenceRecord> all;
  for (std::vector<CorrespondenceRecord>& chunk : per_item)
    for (CorrespondenceRecord& record : chunk) all.push_back(std::move(record));

  bool outside_reference = false;
  std::uint32_t run_dim = 0;
  for (const CorrespondenceRecord& record : all) {
    run_dim = record.g;
    if (record.g <= 5 &&
        !is_admissible_pair({record.p_rank, record.a_number,
                             record.signature.alpha, record.signature.beta}))
      outside_reference = true;
  }
  if (outside_reference)
    warn(options, "some records fall outside the dimension <= 5 reference "
                  "table of admissible pairs");
  if (run_dim > 5)
    warn(options, "dimension exceeds 5; reference-table consistency is not "
                  "checked");

  if (!options.dedup) return all;

  std::vector<CorrespondenceRecord> unique;
  std::set<std::string> seen;
  for (CorrespondenceRecord& record : all)
    if (seen.insert(record.dedup_key()).second)
      unique.push_back(std::move(record));
  std::sort(unique.begin(), unique.end(),
            [](const CorrespondenceRecord& x, const CorrespondenceRecord& y) {
              if (x.signature.alpha != y.signature.alpha)
                return x.signature.alpha < y.signature.alpha;
              if (x.signature.beta != y.signature.beta)
                return x.signature.beta < y.signature.beta;
              return x.words < y.words;
            });
  return unique;
}

std::vector<CorrespondenceRecord> merge_records(
    const std::vector<std::vector<CorrespondenceRecord>>& per_group) {
  std::vector<CorrespondenceRecord> unique;
  std::set<std::string> seen;
  for (const std::vector<CorrespondenceRecord>& group : per_group)
    for (const CorrespondenceRecord& record : group)
      if (seen.insert(record.dedup_key()).second) unique.push_back(record);
  std::sort(unique.begin(), unique.end(),
            [](const CorrespondenceRecord& x, const CorrespondenceRecord& y) {
              if (x.signature.alpha != y.signature.alpha)
                return x.signature.alpha < y.signature.alpha;
              if (x.signature.beta != y.signature.beta)
                return x.signature.beta < y.signature.beta;
              return x.words < y.words;
            });
  return unique;
}

std::vector<ClassificationEntry> classification_table(std::uint32_t g) {
  if (g == 0) throw invalid_input("the dimension g must be positive");
  std::vector<ClassificationEntry> entries;
  for (const CircularWord& w : aperiodic_classes(2 * g)) {
    if (!w.is_self_dual()) continue;
    QuasiPolarizedPiece piece{{w}};
    ClassificationEntry entry;
    entry.a_number = static_cast<std::uint32_t>(piece.a_number());
    entry.name = lookup_name(piece);
    entry.piece = std::move(piece);
    entries.push_back(std::move(entry));
  }
  for (const CircularWord& w : aperiodic_classes(g)) {
    const CircularWord dual = w.dual();
    if (!(w < dual)) continue;
    QuasiPolarizedPiece piece{{w, dual}};
    ClassificationEntry entry;
    entry.a_number = static_cast<std::uint32_t>(piece.a_number());
    entry.name = lookup_name(piece);
    entry.piece = std::move(piece);
    entries.push_back(std::move(entry));
  }
  std::sort(entries.begin(), entries.end(),
            [](const ClassificationEntry& x, const ClassificationEntry& y) {
              if (x.a_number != y.a_number) return x.a_number < y.a_number;
              return x.piece < y.piece;
            });
  return entries;
}

std::set<InvariantPair> invariant_pairs(
    const std::vector<CorrespondenceRecord>& records) {
  std::set<InvariantPair> out;
  for (const CorrespondenceRecord& record : records)
    out.insert({record.p_rank, record.a_number, record.signature.alpha,
                record.signature.beta});
  return out;
}

const std::set<InvariantPair>& admissible_invariant_pairs() {
  static const std::set<InvariantPair> table = [] {
    // Cell (f, a) -> list of (alpha, beta).
    struct Cell {
      std::uint32_t f, a;
      std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    };
    const std::vector<Cell> cells = {
        {0, 1, {{1, 1}}},
        {0, 2, {{2, 1}, {2, 2}}},
        {0, 3, {{1, 1}, {3, 2}, {3, 3}}},
        {0, 4, {{2, 1}, {2, 2}, {4, 2}, {4, 3}, {4, 4}}},
        {0, 5, {{1, 1}, {3, 2}, {3, 3}, {5, 3}, {5, 4}, {5, 5}}},
        {1, 0, {{2, 1}}},
        {1, 1, {{3, 2}}},
        {1, 2, {{4, 2}, {4, 3}}},
        {1, 3, {{3, 2}, {5, 3}, {5, 4}}},
        {1, 4, {{4, 2}, {4, 3}, {6, 3}, {6, 4}, {6, 5}}},
        {2, 0, {{2, 1}, {4, 2}}},
        {2, 1, {{3, 2}, {5, 3}}},
        {2, 2, {{4, 2}, {4, 3}, {6, 3}, {6, 4}}},
        {2, 3, {{5, 3}, {5, 4}, {7, 4}, {7, 5}}},
        {3, 0, {{2, 1}, {4, 2}, {6, 3}}},
        {3, 1, {{3, 2}, {5, 3}, {7, 4}}},
        {3, 2, {{4, 2}, {4, 3}, {6, 3}, {6, 4}, {8, 4}, {8, 5}}},
        {4, 0, {{2, 1}, {4, 2}, {6, 3}, {8, 4}}},
        {4, 1, {{3, 2}, {5, 3}, {7, 4}, {9, 5}}},
        {5, 0, {{2, 1}, {4, 2}, {6, 3}, {8, 4}, {10, 5}}},
    };
    std::set<InvariantPair> out;
    for (const Cell& cell : cells)
      for (const auto& [alpha, beta] : cell.pairs)
        out.insert({cell.f, cell.a, alpha, beta});
    return out;
  }();
  return table;
}

bool is_admissible_pair(const InvariantPair& pair) {
  return admissible_invariant_pairs().count(pair) > 0;
}

}  // namespace cmred
