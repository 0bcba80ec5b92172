#include "cmred/cm_types.hpp"

#include <algorithm>
#include <stdexcept>

namespace cmred {

std::vector<std::uint32_t> conjugation_on_cosets(const CosetSpace& space,
                                                 const Permutation& iota) {
  const FiniteGroup& g = space.parent();
  if (!g.contains(iota))
    throw invalid_input("conjugation element does not belong to the group");
  if (iota.is_identity() || !(iota * iota).is_identity())
    throw invalid_input("conjugation element must be an involution");
  for (const Permutation& gen : g.generators())
    if (!(iota * gen == gen * iota))
      throw invalid_input("conjugation element must be central");

  std::vector<std::uint32_t> conj(space.index());
  for (std::size_t i = 0; i < space.index(); ++i)
    conj[i] = static_cast<std::uint32_t>(space.right_translate(i, iota));
  for (std::size_t i = 0; i < conj.size(); ++i) {
    if (conj[i] == i)
      throw invalid_input("conjugation fixes a coset; the subgroup contains "
                          "the involution");
    if (conj[conj[i]] != i)
      throw std::logic_error("coset conjugation is not an involution");
  }
  return conj;
}

std::vector<CMType> enumerate_cm_types(const CosetSpace& space,
                                       const Permutation& iota,
                                       bool collapse_conjugates) {
  const std::vector<std::uint32_t> conj = conjugation_on_cosets(space, iota);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < conj.size(); ++i)
    if (i < conj[i]) pairs.emplace_back(i, conj[i]);

  const std::size_t g = pairs.size();
  if (g > 24)
    throw capacity_error("too many conjugation pairs for CM-type enumeration: " +
                         std::to_string(g));

  std::vector<CMType> out;
  const std::uint64_t limit = std::uint64_t{1} << g;
  for (std::uint64_t choice = 0; choice < limit; ++choice) {
    // The conjugate CM type flips every choice bit; keeping bit 0 clear keeps
    // one representative per conjugate pair of types.
    if (collapse_conjugates && g > 0 && (choice & 1)) continue;
    CMType type;
    type.members.reserve(g);
    for (std::size_t b = 0; b < g; ++b)
      type.members.push_back((choice >> b) & 1 ? pairs[b].second
                                                : pairs[b].first);
    std::sort(type.members.begin(), type.members.end());
    out.push_back(std::move(type));
  }
  return out;
}

bool is_primitive(const CosetSpace& space, const CMType& type) {
  const FiniteGroup& g = space.parent();
  const std::size_t n = g.order();

  std::vector<bool> in_union(n, false);
  for (std::uint32_t id : type.members)
    for (const Permutation& member : space.cosets()[id].members)
      in_union[g.index_of(member)] = true;

  // The right stabilizer H of the member-coset union is a union of left
  // cosets of the subgroup and always contains it, so testing one
  // representative per coset is enough. Primitive <=> only the subgroup's own
  // coset stabilizes.
  for (std::size_t c = 0; c < space.index(); ++c) {
    const Permutation& rep = space.cosets()[c].representative;
    if (rep.is_identity()) continue;
    bool stabilizes = true;
    for (std::size_t e = 0; e < n && stabilizes; ++e) {
      if (!in_union[e]) continue;
      stabilizes = in_union[g.index_of(g.element(e) * rep)];
    }
    if (stabilizes) return false;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> left_translation_cycles(
    const CosetSpace& space, const Permutation& actor) {
  const std::size_t n = space.index();
  std::vector<std::uint32_t> next(n);
  for (std::size_t i = 0; i < n; ++i)
    next[i] = static_cast<std::uint32_t>(space.left_translate(i, actor));

  std::vector<std::vector<std::uint32_t>> cycles;
  std::vector<bool> visited(n, false);
  for (std::uint32_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<std::uint32_t> cycle;
    std::uint32_t x = start;
    do {
      visited[x] = true;
      cycle.push_back(x);
      x = next[x];
    } while (x != start);
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

WordMultiset orbit_words(const std::vector<std::vector<std::uint32_t>>& cycles,
                         const CMType& type, Orientation orientation) {
  WordMultiset out;
  for (const std::vector<std::uint32_t>& cycle : cycles) {
    std::string letters;
    letters.reserve(cycle.size());
    for (std::uint32_t id : cycle)
      letters.push_back(std::binary_search(type.members.begin(),
                                           type.members.end(), id)
                            ? 'V'
                            : 'F');
    if (orientation == Orientation::Reverse)
      std::reverse(letters.begin(), letters.end());
    out.add(CircularWord::from_letters(letters));
  }
  return out;
}

namespace {

const char* const k_subscripts[10] = {"₀", "₁", "₂", "₃", "₄",
                                      "₅", "₆", "₇", "₈", "₉"};

void append_prime(std::string& out, std::size_t index, bool numbered,
                  bool conjugate) {
  out += "𝒫";
  if (numbered) {
    std::string digits = std::to_string(index);
    for (char d : digits) out += k_subscripts[d - '0'];
  }
  if (conjugate) out += "ᶜ";
}

}  // namespace

std::string DecompositionSignature::label() const {
  std::string out;
  const bool numbered = beta > 1;
  std::size_t index = 1;
  for (const Part& part : profile) {
    if (part.self_conjugate) {
      append_prime(out, index, numbered, false);
    } else {
      append_prime(out, index, numbered, false);
      append_prime(out, index, numbered, true);
    }
    ++index;
  }
  return out;
}

DecompositionSignature decomposition_signature(
    const std::vector<std::vector<std::uint32_t>>& cycles,
    const std::vector<std::uint32_t>& conjugation) {
  const std::size_t n = conjugation.size();
  std::vector<std::uint32_t> cycle_of(n);
  for (std::uint32_t c = 0; c < cycles.size(); ++c)
    for (std::uint32_t id : cycles[c]) cycle_of[id] = c;

  DecompositionSignature sig;
  sig.alpha = static_cast<std::uint32_t>(cycles.size());

  std::vector<DecompositionSignature::Part> pairs;
  std::vector<DecompositionSignature::Part> selfs;
  for (std::uint32_t c = 0; c < cycles.size(); ++c) {
    // Central conjugation maps cycles to cycles, so one member determines the
    // image cycle.
    const std::uint32_t image = cycle_of[conjugation[cycles[c][0]]];
    if (image == c) {
      selfs.push_back({static_cast<std::uint32_t>(cycles[c].size()), true});
    } else if (c < image) {
      if (cycles[c].size() != cycles[image].size())
        throw std::logic_error("conjugate translation cycles differ in size");
      pairs.push_back({static_cast<std::uint32_t>(cycles[c].size()), false});
    }
  }
  auto by_size_desc = [](const DecompositionSignature::Part& a,
                         const DecompositionSignature::Part& b) {
    return a.size > b.size;
  };
  std::stable_sort(pairs.begin(), pairs.end(), by_size_desc);
  std::stable_sort(selfs.begin(), selfs.end(), by_size_desc);

  sig.beta = static_cast<std::uint32_t>(pairs.size() + selfs.size());
  sig.profile = std::move(pairs);
  sig.profile.insert(sig.profile.end(), selfs.begin(), selfs.end());
  return sig;
}

}  // namespace cmred
