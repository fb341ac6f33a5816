#include "nbrecon/families.h"

#include <algorithm>
#include <unordered_set>

#include "nbrecon/errors.h"

namespace nbrecon {
namespace {

void check_universe(const VertexSet& s, int universe, const char* what) {
  if (s.universe() != universe) {
    throw InputError(std::string(what) + ": set universe " +
                     std::to_string(s.universe()) + " does not match " +
                     std::to_string(universe));
  }
}

}  // namespace

SetFamily::SetFamily(int universe, std::vector<VertexSet> members)
    : universe_(universe), members_(std::move(members)) {
  if (universe < 0 || universe > kMaxVertices) {
    throw InputError("family universe " + std::to_string(universe) +
                     " outside [0, " + std::to_string(kMaxVertices) + "]");
  }
  for (const auto& s : members_) check_universe(s, universe, "SetFamily");
  std::sort(members_.begin(), members_.end(), CanonicalLess{});
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(const VertexSet& s) const {
  return std::binary_search(members_.begin(), members_.end(), s, CanonicalLess{});
}

std::string SetFamily::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ", ";
    out += members_[i].to_string();
  }
  return out + "}";
}

NeighborhoodMultiset::NeighborhoodMultiset(int universe,
                                           std::span<const VertexSet> sets)
    : universe_(universe) {
  std::vector<VertexSet> sorted(sets.begin(), sets.end());
  for (const auto& s : sorted) check_universe(s, universe, "NeighborhoodMultiset");
  std::sort(sorted.begin(), sorted.end(), CanonicalLess{});
  for (const auto& s : sorted) {
    if (!entries_.empty() && entries_.back().set == s) {
      ++entries_.back().multiplicity;
    } else {
      entries_.push_back({s, 1});
    }
  }
}

int NeighborhoodMultiset::total() const {
  int sum = 0;
  for (const auto& e : entries_) sum += e.multiplicity;
  return sum;
}

int NeighborhoodMultiset::multiplicity(const VertexSet& s) const {
  for (const auto& e : entries_) {
    if (e.set == s) return e.multiplicity;
  }
  return 0;
}

std::vector<VertexSet> NeighborhoodMultiset::expanded() const {
  std::vector<VertexSet> out;
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.set);
  return out;
}

NeighborhoodMultiset neighborhood_multiset(const Graph& g, NeighborhoodKind kind) {
  std::vector<VertexSet> sets;
  sets.reserve(g.n());
  for (int v = 0; v < g.n(); ++v) {
    sets.push_back(kind == NeighborhoodKind::kClosed ? closed_neighborhood(g, v)
                                                     : open_neighborhood(g, v));
  }
  return NeighborhoodMultiset(g.n(), sets);
}

SetFamily support_of(const NeighborhoodMultiset& m) {
  std::vector<VertexSet> members;
  members.reserve(m.entries().size());
  for (const auto& e : m.entries()) members.push_back(e.set);
  return SetFamily(m.universe(), std::move(members));
}

SetFamily closed_support(const Graph& g) {
  return support_of(neighborhood_multiset(g, NeighborhoodKind::kClosed));
}

SetFamily union_closure(const SetFamily& f, std::size_t ceiling) {
  std::unordered_set<std::uint64_t> seen{0};
  std::vector<std::uint64_t> order{0};
  for (const auto& generator : f) {
    const std::size_t frontier = order.size();
    for (std::size_t i = 0; i < frontier; ++i) {
      const std::uint64_t joined = order[i] | generator.bits();
      if (seen.insert(joined).second) {
        if (order.size() >= ceiling) {
          throw ResourceError("union closure exceeds the ceiling of " +
                              std::to_string(ceiling) + " members");
        }
        order.push_back(joined);
      }
    }
  }
  std::vector<VertexSet> members;
  members.reserve(order.size());
  for (auto bits : order) members.push_back(VertexSet::from_bits(f.universe(), bits));
  return SetFamily(f.universe(), std::move(members));
}

bool cn_subset(const VertexSet& a, const VertexSet& b, const SetFamily& gen) {
  check_universe(a, gen.universe(), "cn_subset");
  check_universe(b, gen.universe(), "cn_subset");
  // Generators suffice: A meets M1 ∪ M2 iff it meets M1 or M2, and then B
  // meets that same generator.
  for (const auto& m : gen) {
    if (a.intersects(m) && !b.intersects(m)) return false;
  }
  return true;
}

bool cn_equal(const VertexSet& a, const VertexSet& b, const SetFamily& gen) {
  check_universe(a, gen.universe(), "cn_equal");
  check_universe(b, gen.universe(), "cn_equal");
  for (const auto& m : gen) {
    if (a.intersects(m) != b.intersects(m)) return false;
  }
  return true;
}

SetFamily union_basis(int universe, std::span<const VertexSet> members) {
  std::vector<VertexSet> basis;
  for (const auto& a : members) {
    check_universe(a, universe, "union_basis");
    if (a.empty()) continue;
    VertexSet below(universe);
    for (const auto& b : members) {
      if (b.is_subset_of(a) && b != a) below |= b;
    }
    if (below != a) basis.push_back(a);
  }
  return SetFamily(universe, std::move(basis));
}

SetFamily union_basis(const SetFamily& f) {
  return union_basis(f.universe(), f.members());
}

bool spans(const SetFamily& basis, const SetFamily& f) {
  for (const auto& a : f) {
    VertexSet cover(f.universe());
    for (const auto& b : basis) {
      if (b.is_subset_of(a)) cover |= b;
    }
    if (cover != a) return false;
  }
  return true;
}

VertexSet dominated_members(int v, const VertexSet& pool, const SetFamily& gen) {
  const int n = gen.universe();
  const VertexSet single_v = VertexSet::single(n, v);
  VertexSet out(n);
  for (int u : pool) {
    if (cn_subset(VertexSet::single(n, u), single_v, gen)) out.insert(u);
  }
  return out;
}

VertexSet base_vertices(const SetFamily& gen, int universe) {
  if (gen.universe() != universe) {
    throw InputError("base_vertices: family universe does not match");
  }
  // A vertex kept once stays non-removable as the pool shrinks, so a single
  // pass reaches a fixpoint. Among candidates A ⊆ S∖{v} with N[A] ⊆ N[v] the
  // dominated set is the largest, so testing it alone decides existence.
  VertexSet s = VertexSet::full(universe);
  for (int v = universe - 1; v >= 0; --v) {
    VertexSet pool = s;
    pool.erase(v);
    const VertexSet candidate = dominated_members(v, pool, gen);
    if (cn_equal(VertexSet::single(universe, v), candidate, gen)) s.erase(v);
  }
  return s;
}

}  // namespace nbrecon
