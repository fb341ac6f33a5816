#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nbrecon/graph.h"
#include "nbrecon/vertex_set.h"

namespace nbrecon {

// A finite set of vertex sets over a common universe. Members are
// deduplicated and kept in canonical order (size, then lexicographic).
class SetFamily {
 public:
  SetFamily() = default;
  explicit SetFamily(int universe) : universe_(universe) {}
  SetFamily(int universe, std::vector<VertexSet> members);

  int universe() const { return universe_; }
  const std::vector<VertexSet>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const VertexSet& s) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const SetFamily&) const = default;

  std::string to_string() const;

 private:
  int universe_ = 0;
  std::vector<VertexSet> members_;
};

// A multiset of vertex sets, stored as canonical-ordered (set, multiplicity)
// entries with every multiplicity >= 1.
class NeighborhoodMultiset {
 public:
  struct Entry {
    VertexSet set;
    int multiplicity = 0;
    bool operator==(const Entry&) const = default;
  };

  NeighborhoodMultiset() = default;
  explicit NeighborhoodMultiset(int universe) : universe_(universe) {}
  // Each element of sets counts once; repeats raise the multiplicity.
  NeighborhoodMultiset(int universe, std::span<const VertexSet> sets);

  int universe() const { return universe_; }
  const std::vector<Entry>& entries() const { return entries_; }
  int total() const;
  int multiplicity(const VertexSet& s) const;
  // Members repeated by multiplicity, in canonical order.
  std::vector<VertexSet> expanded() const;

  bool operator==(const NeighborhoodMultiset&) const = default;

 private:
  int universe_ = 0;
  std::vector<Entry> entries_;
};

enum class NeighborhoodKind { kClosed, kOpen };

NeighborhoodMultiset neighborhood_multiset(const Graph& g, NeighborhoodKind kind);
SetFamily support_of(const NeighborhoodMultiset& m);

// supp of the closed-neighborhood multiset.
SetFamily closed_support(const Graph& g);

inline constexpr std::size_t kDefaultClosureCeiling = std::size_t{1} << 20;

// All unions of subfamilies of f, the empty union included. Throws
// ResourceError once the closure would grow past `ceiling` members.
SetFamily union_closure(const SetFamily& f,
                        std::size_t ceiling = kDefaultClosureCeiling);

// Decides N[A] ⊆ N[B] from any family whose union closure is U(N[G]).
bool cn_subset(const VertexSet& a, const VertexSet& b, const SetFamily& gen);
// Decides N[A] = N[B] under the same contract as cn_subset.
bool cn_equal(const VertexSet& a, const VertexSet& b, const SetFamily& gen);

// The unique minimal subfamily spanning f: its union-irreducible members.
SetFamily union_basis(const SetFamily& f);
// Same, for a member list in arbitrary order (duplicates allowed).
SetFamily union_basis(int universe, std::span<const VertexSet> members);

// True when every member of f is a union of members of basis.
bool spans(const SetFamily& basis, const SetFamily& f);

// A set of base vertices of the graph described by gen: the closed
// neighborhoods of the result form the union basis of its support. Removal
// is attempted from the highest id down, so the lowest id of each group of
// equal neighborhoods survives.
VertexSet base_vertices(const SetFamily& gen, int universe);

// {u in pool : N[u] ⊆ N[v]}, the largest A ⊆ pool with N[A] ⊆ N[v].
VertexSet dominated_members(int v, const VertexSet& pool, const SetFamily& gen);

}  // namespace nbrecon
