#include "cmred/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace cmred {

namespace {

void check_common_degree(const std::vector<Permutation>& perms) {
  for (std::size_t i = 1; i < perms.size(); ++i)
    if (perms[i].degree() != perms[0].degree())
      throw invalid_input("generators have mismatched degrees");
}

}  // namespace

FiniteGroup subgroup_from_sorted_elements(const FiniteGroup& parent,
                                          std::vector<Permutation> gens,
                                          std::vector<Permutation> elems) {
  return FiniteGroup(parent.degree(), std::move(gens), std::move(elems));
}

FiniteGroup FiniteGroup::generate(std::size_t degree,
                                  std::vector<Permutation> generators,
                                  std::size_t order_cap) {
  if (degree == 0) throw invalid_input("group degree must be positive");
  if (order_cap == 0) throw invalid_input("order cap must be positive");
  check_common_degree(generators);
  if (!generators.empty() && generators[0].degree() != degree)
    throw invalid_input("generators do not match the requested degree");

  // Plain orbit closure: right-multiplying new elements by every generator.
  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  seen.insert(Permutation::identity(degree));
  queue.push_back(Permutation::identity(degree));
  while (!queue.empty()) {
    Permutation current = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& gen : generators) {
      Permutation next = current * gen;
      if (seen.insert(next).second) {
        if (seen.size() > order_cap)
          throw capacity_error("group closure exceeds order cap " +
                               std::to_string(order_cap));
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<Permutation> elements(seen.begin(), seen.end());
  return FiniteGroup(degree, std::move(generators), std::move(elements));
}

FiniteGroup FiniteGroup::generate(std::vector<Permutation> generators,
                                  std::size_t order_cap) {
  if (generators.empty())
    throw invalid_input("cannot infer degree from an empty generator list");
  std::size_t degree = generators[0].degree();
  return generate(degree, std::move(generators), order_cap);
}

FiniteGroup FiniteGroup::trivial(std::size_t degree) {
  return generate(degree, {});
}

bool FiniteGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t FiniteGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p))
    throw invalid_input("element does not belong to the group");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FiniteGroup::is_subgroup_of(const FiniteGroup& g) const {
  if (degree_ != g.degree()) return false;
  for (const Permutation& p : elements_)
    if (!g.contains(p)) return false;
  return true;
}

FiniteGroup center(const FiniteGroup& g) {
  std::vector<Permutation> central;
  for (const Permutation& x : g.elements()) {
    bool commutes = true;
    for (const Permutation& gen : g.generators()) {
      if (!(x * gen == gen * x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) central.push_back(x);
  }
  std::vector<Permutation> gens = central;  // already a closed, sorted set
  return subgroup_from_sorted_elements(g, std::move(gens), std::move(central));
}

std::vector<Permutation> central_involutions(const FiniteGroup& g) {
  const FiniteGroup z = center(g);
  std::vector<Permutation> result;
  for (const Permutation& x : z.elements())
    if (!x.is_identity() && (x * x).is_identity()) result.push_back(x);
  return result;
}

namespace {

// Index-based subgroup search machinery. Element indices refer to the sorted
// element list of the ambient group; products go through a Cayley table.
class IndexedGroup {
public:
  explicit IndexedGroup(const FiniteGroup& g) : group_(g) {
    const std::size_t n = g.order();
    table_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      table_[i].resize(n);
      for (std::size_t j = 0; j < n; ++j)
        table_[i][j] = static_cast<std::uint16_t>(
            g.index_of(g.element(i) * g.element(j)));
    }
    identity_ = static_cast<std::uint16_t>(
        g.index_of(Permutation::identity(g.degree())));
  }

  std::size_t order() const { return table_.size(); }
  std::uint16_t identity() const { return identity_; }
  std::uint16_t mul(std::uint16_t a, std::uint16_t b) const {
    return table_[a][b];
  }

  // Closure of the generator indices; empty result if it grows past cap.
  std::vector<std::uint16_t> closure(const std::vector<std::uint16_t>& gens,
                                     std::size_t cap) const {
    std::vector<bool> in(order(), false);
    std::vector<std::uint16_t> members;
    std::vector<std::uint16_t> queue;
    in[identity_] = true;
    members.push_back(identity_);
    queue.push_back(identity_);
    while (!queue.empty()) {
      std::uint16_t cur = queue.back();
      queue.pop_back();
      for (std::uint16_t gen : gens) {
        std::uint16_t next = mul(cur, gen);
        if (!in[next]) {
          if (members.size() + 1 > cap) return {};
          in[next] = true;
          members.push_back(next);
          queue.push_back(next);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  FiniteGroup materialize(const std::vector<std::uint16_t>& gens,
                          const std::vector<std::uint16_t>& members) const {
    std::vector<Permutation> gen_perms;
    gen_perms.reserve(gens.size());
    for (std::uint16_t i : gens) gen_perms.push_back(group_.element(i));
    if (gen_perms.empty()) gen_perms.push_back(Permutation::identity(group_.degree()));
    std::vector<Permutation> elems;
    elems.reserve(members.size());
    for (std::uint16_t i : members) elems.push_back(group_.element(i));
    return subgroup_from_sorted_elements(group_, std::move(gen_perms),
                                         std::move(elems));
  }

private:
  const FiniteGroup& group_;
  std::vector<std::vector<std::uint16_t>> table_;
  std::uint16_t identity_ = 0;
};

struct SearchNode {
  std::vector<std::uint16_t> generators;
  std::vector<std::uint16_t> members;  // sorted
};

// Grows subgroups from `seed` one outside element at a time. Closures larger
// than `closure_cap` are discarded; `keep` decides whether a closure stays on
// the frontier. Every subgroup reachable through kept intermediate closures
// is visited exactly once.
template <typename Keep, typename Visit>
void grow_subgroups(const IndexedGroup& ig, SearchNode seed,
                    std::size_t closure_cap, Keep keep, Visit visit) {
  std::set<std::vector<std::uint16_t>> seen;
  std::deque<SearchNode> frontier;
  seen.insert(seed.members);
  visit(seed);
  frontier.push_back(std::move(seed));

  const std::size_t n = ig.order();
  while (!frontier.empty()) {
    SearchNode node = std::move(frontier.front());
    frontier.pop_front();

    // One candidate per right coset H*x is enough: <H, xh> = <H, x>.
    std::vector<bool> covered(n, false);
    for (std::uint16_t m : node.members) covered[m] = true;
    for (std::uint16_t x = 0; x < n; ++x) {
      if (covered[x]) continue;
      for (std::uint16_t m : node.members) covered[ig.mul(m, x)] = true;

      std::vector<std::uint16_t> gens = node.generators;
      gens.push_back(x);
      std::vector<std::uint16_t> members = ig.closure(gens, closure_cap);
      if (members.empty()) continue;  // closure rejected by cap
      if (!keep(members)) continue;
      if (!seen.insert(members).second) continue;
      SearchNode next{std::move(gens), std::move(members)};
      visit(next);
      frontier.push_back(std::move(next));
    }
  }
}

std::vector<FiniteGroup> sorted_results(const IndexedGroup& ig,
                                        std::vector<SearchNode> nodes) {
  std::sort(nodes.begin(), nodes.end(),
            [](const SearchNode& a, const SearchNode& b) {
              return a.members < b.members;
            });
  std::vector<FiniteGroup> out;
  out.reserve(nodes.size());
  for (const SearchNode& node : nodes)
    out.push_back(ig.materialize(node.generators, node.members));
  return out;
}

}  // namespace

std::vector<FiniteGroup> subgroups_of_order(const FiniteGroup& g, std::size_t m,
                                            std::size_t search_cap) {
  if (m == 0 || g.order() % m != 0)
    throw invalid_input("requested subgroup order does not divide the group order");
  if (g.order() > search_cap)
    throw capacity_error(
        "group order " + std::to_string(g.order()) +
        " exceeds the subgroup search cap " + std::to_string(search_cap) +
        "; supply the subgroup explicitly (e.g. via --delta)");
  if (m == g.order()) return {g};

  IndexedGroup ig(g);
  std::vector<SearchNode> hits;
  SearchNode seed{{}, {ig.identity()}};
  grow_subgroups(
      ig, std::move(seed), m,
      [m](const std::vector<std::uint16_t>& members) {
        return m % members.size() == 0;
      },
      [&](const SearchNode& node) {
        if (node.members.size() == m) hits.push_back(node);
      });
  return sorted_results(ig, std::move(hits));
}

std::vector<FiniteGroup> subgroups_of_order(const FiniteGroup& g, std::size_t m,
                                            const Permutation& exclude,
                                            std::size_t search_cap) {
  if (!g.contains(exclude))
    throw invalid_input("excluded element does not belong to the group");
  if (m == 0 || g.order() % m != 0)
    throw invalid_input("requested subgroup order does not divide the group order");
  if (g.order() > search_cap)
    throw capacity_error(
        "group order " + std::to_string(g.order()) +
        " exceeds the subgroup search cap " + std::to_string(search_cap) +
        "; supply the subgroup explicitly (e.g. via --delta)");
  if (exclude.is_identity())
    throw invalid_input("the excluded element must not be the identity");
  if (m == g.order()) return {};  // the only full-order subgroup contains everything

  IndexedGroup ig(g);
  const std::uint16_t banned = static_cast<std::uint16_t>(g.index_of(exclude));
  std::vector<SearchNode> hits;
  SearchNode seed{{}, {ig.identity()}};
  // Pruning closures that contain the banned element is complete: every
  // intermediate closure sits inside the target subgroup.
  grow_subgroups(
      ig, std::move(seed), m,
      [m, banned](const std::vector<std::uint16_t>& members) {
        if (m % members.size() != 0) return false;
        return !std::binary_search(members.begin(), members.end(), banned);
      },
      [&](const SearchNode& node) {
        if (node.members.size() == m) hits.push_back(node);
      });
  return sorted_results(ig, std::move(hits));
}

FiniteGroup join_subgroup(const FiniteGroup& g, const Permutation& a,
                          const FiniteGroup& h) {
  if (!g.contains(a))
    throw invalid_input("joined element does not belong to the group");
  if (!h.is_subgroup_of(g))
    throw invalid_input("join operand is not a subgroup of the group");
  std::vector<Permutation> gens = h.generators();
  gens.push_back(a);
  return FiniteGroup::generate(g.degree(), std::move(gens), g.order());
}

std::vector<FiniteGroup> overgroups(const FiniteGroup& g, const FiniteGroup& h) {
  if (!h.is_subgroup_of(g))
    throw invalid_input("overgroups requires a subgroup of the group");
  IndexedGroup ig(g);
  std::vector<std::uint16_t> seed_gens;
  std::vector<std::uint16_t> seed_members;
  for (const Permutation& p : h.generators())
    seed_gens.push_back(static_cast<std::uint16_t>(g.index_of(p)));
  for (const Permutation& p : h.elements())
    seed_members.push_back(static_cast<std::uint16_t>(g.index_of(p)));
  std::sort(seed_members.begin(), seed_members.end());

  std::vector<SearchNode> hits;
  grow_subgroups(
      ig, SearchNode{std::move(seed_gens), std::move(seed_members)}, ig.order(),
      [](const std::vector<std::uint16_t>&) { return true; },
      [&](const SearchNode& node) { hits.push_back(node); });
  return sorted_results(ig, std::move(hits));
}

CosetSpace::CosetSpace(FiniteGroup parent, FiniteGroup subgroup)
    : parent_(std::move(parent)), subgroup_(std::move(subgroup)) {
  if (!subgroup_.is_subgroup_of(parent_))
    throw invalid_input("coset space requires a subgroup of the parent group");
  const std::size_t n = parent_.order();
  coset_id_by_element_.assign(n, static_cast<std::uint32_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (coset_id_by_element_[i] != n) continue;
    // Sweeping in element order, so i is the least member of its coset.
    const Permutation& rep = parent_.element(i);
    Coset coset{rep, {}};
    coset.members.reserve(subgroup_.order());
    for (const Permutation& d : subgroup_.elements()) {
      Permutation member = rep * d;
      coset_id_by_element_[parent_.index_of(member)] =
          static_cast<std::uint32_t>(cosets_.size());
      coset.members.push_back(std::move(member));
    }
    std::sort(coset.members.begin(), coset.members.end());
    cosets_.push_back(std::move(coset));
  }
}

std::size_t CosetSpace::coset_of(const Permutation& element) const {
  return coset_id_by_element_[parent_.index_of(element)];
}

std::size_t CosetSpace::left_translate(std::size_t coset_id,
                                       const Permutation& actor) const {
  return coset_of(actor * cosets_[coset_id].representative);
}

std::size_t CosetSpace::right_translate(std::size_t coset_id,
                                        const Permutation& actor) const {
  return coset_of(cosets_[coset_id].representative * actor);
}

CosetSpace left_cosets(const FiniteGroup& g, const FiniteGroup& h) {
  return CosetSpace(g, h);
}

namespace {

bool is_central(const FiniteGroup& g, const Permutation& x) {
  for (const Permutation& gen : g.generators())
    if (!(x * gen == gen * x)) return false;
  return true;
}

bool normalizes(const FiniteGroup& h, const Permutation& x) {
  const Permutation xinv = x.inverse();
  for (const Permutation& gen : h.generators())
    if (!h.contains(xinv * gen * x)) return false;
  return true;
}

}  // namespace

std::size_t orbit_count(const CosetSpace& space, CosetAction action,
                        const Permutation& actor) {
  if (!space.parent().contains(actor))
    throw invalid_input("orbit actor does not belong to the parent group");
  if (action == CosetAction::RightMultiplication &&
      !is_central(space.parent(), actor) && !normalizes(space.subgroup(), actor))
    throw invalid_input(
        "right action on cosets is ill-defined: actor is neither central nor "
        "normalizing the subgroup");

  const std::size_t n = space.index();
  std::vector<std::uint32_t> next(n);
  for (std::size_t i = 0; i < n; ++i)
    next[i] = static_cast<std::uint32_t>(
        action == CosetAction::LeftMultiplication
            ? space.left_translate(i, actor)
            : space.right_translate(i, actor));

  std::vector<bool> visited(n, false);
  std::size_t orbits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (visited[i]) continue;
    ++orbits;
    std::size_t x = i;
    while (!visited[x]) {
      visited[x] = true;
      x = next[x];
    }
  }
  return orbits;
}

}  // namespace cmred
