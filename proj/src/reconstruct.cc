#include "nbrecon/reconstruct.h"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "nbrecon/convexity.h"
#include "nbrecon/errors.h"

namespace nbrecon {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

ReconstructionResult infeasible(std::string reason, Clock::time_point start,
                                std::uint64_t nodes = 0) {
  ReconstructionResult r;
  r.verdict = Verdict::kInfeasible;
  r.reason = std::move(reason);
  r.solution_count = 0;
  r.stats = {nodes, seconds_since(start)};
  return r;
}

void check_options(const SearchOptions& options) {
  if (options.limit == 0) throw InputError("search limit must be positive");
}

// Exact backtracking over assignments v -> M_v with v ∈ M_v. Adjacency is
// forced by u ~ v iff u ∈ M_v and v ∈ M_u, so a full assignment realizes the
// multiset exactly when membership is symmetric: u ∈ M_v iff v ∈ M_u.
class MultisetRealizer {
 public:
  MultisetRealizer(const NeighborhoodMultiset& m, const SearchOptions& options)
      : m_(m), options_(options), n_(m.universe()) {
    for (const auto& e : m.entries()) {
      sets_.push_back(e.set.bits());
      remaining_.push_back(e.multiplicity);
    }
    keep_ = options.mode == SearchMode::kFirst ? 2 : options.limit;
  }

  // Cheap necessary conditions; returns a reason when one fails.
  std::optional<std::string> precheck() {
    if (m_.total() != n_) {
      return "total multiplicity " + std::to_string(m_.total()) +
             " differs from universe size " + std::to_string(n_);
    }
    long degree_sum = 0;
    for (const auto& e : m_.entries()) {
      if (e.set.empty()) return "the empty set is not a closed neighborhood";
      degree_sum += static_cast<long>(e.multiplicity) * (e.set.size() - 1);
    }
    if (degree_sum % 2 != 0) return "degree sum is odd";

    candidates_.assign(n_, {});
    for (int v = 0; v < n_; ++v) {
      for (std::size_t i = 0; i < sets_.size(); ++i) {
        if ((sets_[i] >> v) & 1U) candidates_[v].push_back(static_cast<int>(i));
      }
      if (candidates_[v].empty()) {
        return "no set contains vertex " + std::to_string(v);
      }
    }
    if (!has_perfect_assignment()) {
      return "no assignment of sets to vertices respects the multiplicities";
    }
    return std::nullopt;
  }

  void run() {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return candidates_[a].size() < candidates_[b].size();
    });
    chosen_.assign(n_, -1);
    in_sets_.assign(n_, 0);
    assigned_ = 0;
    search(0);
  }

  std::vector<Graph> found;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
  bool stopped = false;

 private:
  bool has_perfect_assignment() const {
    // Kuhn's augmenting paths with entry capacities.
    std::vector<std::vector<int>> holders(sets_.size());
    std::vector<int> match(n_, -1);
    for (int v = 0; v < n_; ++v) {
      std::vector<bool> visited(sets_.size(), false);
      if (!augment(v, visited, holders, match)) return false;
    }
    return true;
  }

  bool augment(int v, std::vector<bool>& visited,
               std::vector<std::vector<int>>& holders,
               std::vector<int>& match) const {
    for (int i : candidates_[v]) {
      if (visited[i]) continue;
      visited[i] = true;
      if (static_cast<int>(holders[i].size()) < remaining_[i]) {
        holders[i].push_back(v);
        match[v] = i;
        return true;
      }
      for (auto& holder : holders[i]) {
        const int displaced = holder;
        if (augment(displaced, visited, holders, match)) {
          // displaced now sits elsewhere; v takes its slot.
          auto& slots = holders[i];
          *std::find(slots.begin(), slots.end(), displaced) = v;
          match[v] = i;
          return true;
        }
      }
    }
    return false;
  }

  // Every unassigned w still needs a set whose assigned members are exactly
  // the assigned vertices already pointing at w.
  bool forward_feasible() const {
    for (int w = 0; w < n_; ++w) {
      if ((assigned_ >> w) & 1U) continue;
      bool any = false;
      for (int i : candidates_[w]) {
        if (remaining_[i] > 0 && (sets_[i] & assigned_) == in_sets_[w]) {
          any = true;
          break;
        }
      }
      if (!any) return false;
    }
    return true;
  }

  // Returns false when the search should stop.
  bool search(int depth) {
    ++nodes;
    if (depth == n_) return record();
    const int v = order_[depth];
    const std::uint64_t bit = std::uint64_t{1} << v;
    for (int i : candidates_[v]) {
      if (remaining_[i] == 0) continue;
      const std::uint64_t set = sets_[i];
      if ((set & assigned_) != in_sets_[v]) continue;

      --remaining_[i];
      chosen_[v] = i;
      assigned_ |= bit;
      for (std::uint64_t rest = set; rest; rest &= rest - 1) {
        in_sets_[std::countr_zero(rest)] |= bit;
      }
      const bool keep_going = !forward_feasible() || search(depth + 1);
      for (std::uint64_t rest = set; rest; rest &= rest - 1) {
        in_sets_[std::countr_zero(rest)] &= ~bit;
      }
      assigned_ &= ~bit;
      chosen_[v] = -1;
      ++remaining_[i];
      if (!keep_going) return false;
    }
    return true;
  }

  bool record() {
    Graph h(n_);
    for (int v = 0; v < n_; ++v) {
      for (std::uint64_t rest = sets_[chosen_[v]]; rest; rest &= rest - 1) {
        const int u = std::countr_zero(rest);
        if (u > v) h.add_edge(u, v);
      }
    }
    if (neighborhood_multiset(h, NeighborhoodKind::kClosed) != m_) return true;
    ++count;
    if (found.size() < keep_) found.push_back(std::move(h));
    const bool done = options_.mode == SearchMode::kFirst ? count >= 2
                      : options_.mode == SearchMode::kAll ? count > options_.limit
                                                          : false;
    if (done) stopped = true;
    return !done;
  }

  const NeighborhoodMultiset& m_;
  SearchOptions options_;
  int n_;
  std::size_t keep_;
  std::vector<std::uint64_t> sets_;
  std::vector<int> remaining_;
  std::vector<std::vector<int>> candidates_;
  std::vector<int> order_;
  std::vector<int> chosen_;
  std::vector<std::uint64_t> in_sets_;
  std::uint64_t assigned_ = 0;
};

// Turns a list of verified realizations into a verdict.
void settle(ReconstructionResult& r, bool truncated,
            std::optional<std::uint64_t> count) {
  r.truncated = truncated || (count && *count > r.graphs.size());
  r.solution_count = truncated ? std::nullopt : count;
  if (r.graphs.empty()) {
    r.verdict = Verdict::kInfeasible;
  } else if (r.graphs.size() == 1 && !truncated && count && *count == 1) {
    r.verdict = Verdict::kUnique;
  } else {
    r.verdict = Verdict::kAmbiguous;
  }
}

VertexSet compact(const VertexSet& set, const std::vector<int>& ids) {
  VertexSet out(static_cast<int>(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (set.contains(ids[i])) out.insert(static_cast<int>(i));
  }
  return out;
}

struct PartialReconstruction {
  std::vector<Graph> graphs;
  bool truncated = false;
  std::uint64_t nodes = 0;
  std::string reason;
};

// Realizations of a union-closed family u = U(N[G]) over its universe.
PartialReconstruction reconstruct_from_unions(const SetFamily& u,
                                              const SearchOptions& options) {
  PartialReconstruction out;
  const int n = u.universe();
  if (n == 1) {
    out.graphs.emplace_back(1);
    return out;
  }

  const VertexSet base = base_vertices(u, n);
  if (base.empty()) {
    out.reason = "no base vertices";
    return out;
  }
  if (base.is_full()) {
    // All closed neighborhoods are distinct and union-irreducible, so the
    // support is exactly the union basis.
    const ReconstructionResult r = from_support(union_basis(u), options);
    out.graphs = r.graphs;
    out.truncated = r.truncated;
    out.nodes = r.stats.nodes;
    out.reason = r.reason;
    return out;
  }

  // G' = G[S] is induced, so N_G'[A] = N_G[A] ∩ S for A ⊆ S, and every
  // member of U is N_G[A] for some A ⊆ S because each removed vertex's
  // neighborhood unfolds into base-vertex neighborhoods. Hence
  // U(N[G']) = {M ∩ S : M ∈ U}.
  const std::vector<int> ids = base.members();
  std::vector<VertexSet> restricted;
  restricted.reserve(u.size());
  for (const auto& m : u) restricted.push_back(compact(m & base, ids));
  const PartialReconstruction sub =
      reconstruct_from_unions(SetFamily(static_cast<int>(ids.size()), restricted),
                              options);
  out.nodes = sub.nodes;
  out.truncated = sub.truncated;
  if (sub.graphs.empty()) {
    out.reason = sub.reason.empty() ? "induced base subgraph is not realizable"
                                    : sub.reason;
    return out;
  }

  // Every vertex v gets a representation A_v ⊆ S with N[v] = N[A_v].
  std::vector<VertexSet> rep(n, VertexSet(n));
  for (int v = 0; v < n; ++v) {
    if (base.contains(v)) {
      rep[v] = VertexSet::single(n, v);
      continue;
    }
    rep[v] = dominated_members(v, base, u);
    if (!cn_equal(VertexSet::single(n, v), rep[v], u)) {
      out.reason = "vertex " + std::to_string(v) +
                   " is not represented by base vertices";
      out.graphs.clear();
      return out;
    }
  }

  // u ∈ N[v] iff some a ∈ A_v lies in N[u] = N[A_u], i.e. iff
  // N_G'[A_u] meets A_v; all of it happens inside S where G' is known.
  for (const Graph& sub_graph : sub.graphs) {
    std::vector<VertexSet> reach(n, VertexSet(n));
    for (int x = 0; x < n; ++x) {
      for (int a : rep[x]) {
        const auto pos = std::lower_bound(ids.begin(), ids.end(), a) - ids.begin();
        for (int b : closed_neighborhood(sub_graph, static_cast<int>(pos))) {
          reach[x].insert(ids[b]);
        }
      }
    }
    Graph g(n);
    bool symmetric = true;
    for (int x = 0; x < n && symmetric; ++x) {
      for (int y = x + 1; y < n; ++y) {
        const bool xy = reach[x].intersects(rep[y]);
        if (xy != reach[y].intersects(rep[x])) {
          symmetric = false;
          break;
        }
        if (xy) g.add_edge(x, y);
      }
    }
    if (symmetric) out.graphs.push_back(std::move(g));
  }
  if (out.graphs.empty()) out.reason = "base-vertex expansion is inconsistent";
  return out;
}

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kUnique:
      return "unique";
    case Verdict::kAmbiguous:
      return "ambiguous";
    case Verdict::kInfeasible:
      return "infeasible";
  }
  return "unknown";
}

EquivalenceClasses equivalence_classes(const SetFamily& gen, int universe) {
  if (gen.universe() != universe) {
    throw InputError("equivalence_classes: family universe does not match");
  }
  EquivalenceClasses out;
  out.universe = universe;
  out.class_of.assign(universe, -1);
  for (int v = 0; v < universe; ++v) {
    const VertexSet single_v = VertexSet::single(universe, v);
    for (int c = 0; c < out.size(); ++c) {
      if (cn_equal(single_v, VertexSet::single(universe, out.representative[c]), gen)) {
        out.class_of[v] = c;
        out.blocks[c].insert(v);
        break;
      }
    }
    if (out.class_of[v] < 0) {
      out.class_of[v] = out.size();
      out.blocks.push_back(single_v);
      out.representative.push_back(v);
    }
  }
  return out;
}

std::optional<SetFamily> quotient_family(const SetFamily& gen,
                                         const EquivalenceClasses& classes) {
  const int m = classes.size();
  std::vector<VertexSet> members;
  members.reserve(gen.size());
  for (const auto& a : gen) {
    VertexSet q(m);
    for (int i = 0; i < m; ++i) {
      const VertexSet& block = classes.blocks[i];
      if (block.is_subset_of(a)) {
        q.insert(i);
      } else if (block.intersects(a)) {
        return std::nullopt;
      }
    }
    members.push_back(q);
  }
  return SetFamily(m, std::move(members));
}

Graph expand_quotient(const Graph& quotient, const EquivalenceClasses& classes) {
  if (quotient.n() != classes.size()) {
    throw InputError("quotient graph order does not match the class count");
  }
  Graph g(classes.universe);
  for (int u = 0; u < classes.universe; ++u) {
    for (int v = u + 1; v < classes.universe; ++v) {
      const int cu = classes.class_of[u];
      const int cv = classes.class_of[v];
      if (cu == cv || quotient.adjacent(cu, cv)) g.add_edge(u, v);
    }
  }
  return g;
}

ReconstructionResult from_multiset(const NeighborhoodMultiset& m,
                                   const SearchOptions& options) {
  check_options(options);
  const auto start = Clock::now();
  MultisetRealizer realizer(m, options);
  if (auto reason = realizer.precheck()) return infeasible(*reason, start);
  realizer.run();

  ReconstructionResult r;
  r.graphs = std::move(realizer.found);
  r.stats = {realizer.nodes, seconds_since(start)};
  settle(r, realizer.stopped, realizer.count);
  if (r.verdict == Verdict::kInfeasible) r.reason = "no graph has these closed neighborhoods";
  return r;
}

ReconstructionResult from_support(const SetFamily& f, const SearchOptions& options) {
  check_options(options);
  const auto start = Clock::now();
  const int n = f.universe();
  if (n == 0) {
    ReconstructionResult r;
    if (!f.empty()) return infeasible("nonempty family over an empty universe", start);
    r.graphs.emplace_back(0);
    settle(r, false, 1);
    return r;
  }
  if (f.contains(VertexSet(n))) {
    return infeasible("the empty set is not a closed neighborhood", start);
  }

  const EquivalenceClasses classes = equivalence_classes(f, n);
  const auto quotient = quotient_family(f, classes);
  if (!quotient) {
    return infeasible("a member splits a class of equal closed neighborhoods", start);
  }
  if (static_cast<int>(quotient->size()) != classes.size()) {
    return infeasible("quotient family has " + std::to_string(quotient->size()) +
                          " members for " + std::to_string(classes.size()) +
                          " classes",
                      start);
  }

  const NeighborhoodMultiset quotient_multiset(classes.size(), quotient->members());
  const ReconstructionResult inner = from_multiset(quotient_multiset, options);
  if (inner.verdict == Verdict::kInfeasible) {
    return infeasible("quotient family is not realizable: " + inner.reason, start,
                      inner.stats.nodes);
  }

  ReconstructionResult r;
  for (const Graph& q : inner.graphs) {
    Graph g = expand_quotient(q, classes);
    if (realizes(g, f, FamilyKind::kSupport)) r.graphs.push_back(std::move(g));
  }
  r.stats = {inner.stats.nodes, seconds_since(start)};
  settle(r, !inner.solution_count.has_value(), inner.solution_count);
  if (r.verdict == Verdict::kInfeasible) r.reason = "blown-up graphs fail verification";
  return r;
}

ReconstructionResult from_digital_convexity(const SetFamily& d,
                                            const SearchOptions& options) {
  check_options(options);
  const auto start = Clock::now();
  const int n = d.universe();
  if (n == 0) {
    if (d != SetFamily(0, {VertexSet(0)}))
      return infeasible("over an empty universe the only convexity is {empty set}", start);
    ReconstructionResult r;
    r.graphs.emplace_back(0);
    settle(r, false, 1);
    return r;
  }
  const AxiomReport axioms = check_convexity_axioms(d);
  if (!axioms.ok) return infeasible("not a convexity: " + axioms.violation, start);

  const PartialReconstruction partial =
      reconstruct_from_unions(complement_family(d), options);

  ReconstructionResult r;
  for (const Graph& g : partial.graphs) {
    if (realizes(g, d, FamilyKind::kConvexity)) r.graphs.push_back(g);
  }
  r.stats = {partial.nodes, seconds_since(start)};
  const std::optional<std::uint64_t> count =
      partial.truncated ? std::nullopt : std::optional<std::uint64_t>(r.graphs.size());
  settle(r, partial.truncated, count);
  if (r.verdict == Verdict::kInfeasible) {
    r.reason = partial.reason.empty() ? "no graph has this digital convexity"
                                      : partial.reason;
  }
  return r;
}

bool realizes(const Graph& g, const NeighborhoodMultiset& m) {
  return g.n() == m.universe() &&
         neighborhood_multiset(g, NeighborhoodKind::kClosed) == m;
}

bool realizes(const Graph& g, const SetFamily& f, FamilyKind kind) {
  if (g.n() != f.universe()) return false;
  switch (kind) {
    case FamilyKind::kSupport:
      return closed_support(g) == f;
    case FamilyKind::kConvexity:
      if (g.n() <= kConvexitySweepCeiling) return digital_convexity(g) == f;
      try {
        // Digitally convex sets are exactly the complements of U(N[G]); a
        // closure larger than f already disagrees with it.
        return complement_family(union_closure(closed_support(g), f.size() + 1)) == f;
      } catch (const ResourceError&) {
        return false;
      }
  }
  return false;
}

}  // namespace nbrecon
