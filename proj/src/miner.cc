#include "nbrecon/miner.h"

#include <algorithm>
#include <array>
#include <thread>

#include <json.hpp>

#include "nbrecon/errors.h"
#include "nbrecon/families.h"
#include "nbrecon/graph_io.h"

namespace nbrecon {
namespace {

// Per-pass working set for the collision sweep, in entries.
constexpr std::uint64_t kEntriesPerPass = std::uint64_t{1} << 24;

struct Keyed {
  std::uint64_t fingerprint;
  std::uint32_t mask;
  bool operator<(const Keyed& o) const {
    return fingerprint != o.fingerprint ? fingerprint < o.fingerprint : mask < o.mask;
  }
};

std::vector<Edge> pairs_in_order(int n) {
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  return pairs;
}

void check_order(int n, bool allow_deep) {
  const int ceiling = allow_deep ? kDeepEnumerationCeiling : kEnumerationCeiling;
  if (n < 1 || n > ceiling) {
    std::string msg = "exhaustive enumeration supports 1 <= n <= " +
                      std::to_string(ceiling);
    if (!allow_deep && n <= kDeepEnumerationCeiling) msg += " (n = 8 needs --deep)";
    throw ResourceError(msg);
  }
}

class Fingerprinter {
 public:
  Fingerprinter(int n, CollisionKind kind) : n_(n), kind_(kind), pairs_(pairs_in_order(n)) {}

  std::uint64_t operator()(std::uint32_t mask) const {
    std::array<std::uint8_t, 8> rows{};
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const auto& [i, j] = pairs_[std::countr_zero(rest)];
      rows[i] |= static_cast<std::uint8_t>(1U << j);
      rows[j] |= static_cast<std::uint8_t>(1U << i);
    }
    if (kind_ != CollisionKind::kOpenMultiset) {
      for (int v = 0; v < n_; ++v) rows[v] |= static_cast<std::uint8_t>(1U << v);
    }
    std::sort(rows.begin(), rows.begin() + n_);
    int used = n_;
    if (kind_ == CollisionKind::kClosedSupport) {
      used = static_cast<int>(std::unique(rows.begin(), rows.begin() + n_) - rows.begin());
    }
    std::uint64_t fp = 0;
    for (int k = 0; k < used; ++k) fp |= std::uint64_t{rows[k]} << (8 * k);
    return fp;
  }

 private:
  int n_;
  CollisionKind kind_;
  std::vector<Edge> pairs_;
};

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  return x;
}

std::string pair_name(const Graph& g, const Graph& h) {
  return encode_graph6(g) + " / " + encode_graph6(h);
}

}  // namespace

int pair_count(int n) { return n * (n - 1) / 2; }

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  const auto pairs = pairs_in_order(n);
  if (pairs.size() < 64 && (mask >> pairs.size()) != 0) {
    throw InputError("edge mask has bits beyond the " + std::to_string(pairs.size()) +
                     " vertex pairs");
  }
  Graph g(n);
  for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
    const auto& [i, j] = pairs[std::countr_zero(rest)];
    g.add_edge(i, j);
  }
  return g;
}

std::uint64_t edge_mask_of(const Graph& g) {
  const auto pairs = pairs_in_order(g.n());
  if (pairs.size() > 64) throw InputError("graph too large for a 64-bit edge mask");
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (g.adjacent(pairs[k].first, pairs[k].second)) mask |= std::uint64_t{1} << k;
  }
  return mask;
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& visit,
                            bool allow_deep) {
  check_order(n, allow_deep);
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) visit(graph_from_edge_mask(n, mask));
}

std::vector<Graph> enumerate_labeled_graphs(int n, bool allow_deep) {
  std::vector<Graph> out;
  for_each_labeled_graph(n, [&](const Graph& g) { out.push_back(g); }, allow_deep);
  return out;
}

const char* collision_kind_name(CollisionKind kind) {
  switch (kind) {
    case CollisionKind::kClosedMultiset:
      return "closed-multiset";
    case CollisionKind::kClosedSupport:
      return "closed-support";
    case CollisionKind::kOpenMultiset:
      return "open-multiset";
  }
  return "unknown";
}

std::optional<CollisionKind> parse_collision_kind(const std::string& name) {
  for (auto kind : {CollisionKind::kClosedMultiset, CollisionKind::kClosedSupport,
                    CollisionKind::kOpenMultiset}) {
    if (name == collision_kind_name(kind)) return kind;
  }
  return std::nullopt;
}

std::vector<CollisionGroup> find_collisions(int n, CollisionKind kind,
                                            const MiningOptions& options) {
  check_order(n, options.allow_deep);
  const Fingerprinter fingerprint(n, kind);
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  const std::uint64_t passes = std::max<std::uint64_t>(1, total / kEntriesPerPass);
  const int jobs = std::max(1, options.jobs);

  std::vector<CollisionGroup> groups;
  for (std::uint64_t pass = 0; pass < passes; ++pass) {
    // Workers own disjoint edge-mask ranges and private buffers.
    std::vector<std::vector<Keyed>> buffers(jobs);
    auto sweep = [&](int worker) {
      const std::uint64_t begin = total * worker / jobs;
      const std::uint64_t end = total * (worker + 1) / jobs;
      auto& out = buffers[worker];
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        const std::uint64_t fp = fingerprint(static_cast<std::uint32_t>(mask));
        if (passes == 1 || mix(fp) % passes == pass) {
          out.push_back({fp, static_cast<std::uint32_t>(mask)});
        }
      }
    };
    if (jobs == 1) {
      sweep(0);
    } else {
      std::vector<std::thread> threads;
      for (int w = 0; w < jobs; ++w) threads.emplace_back(sweep, w);
      for (auto& t : threads) t.join();
    }

    std::vector<Keyed> items;
    for (auto& b : buffers) {
      items.insert(items.end(), b.begin(), b.end());
      std::vector<Keyed>().swap(b);
    }
    std::sort(items.begin(), items.end());
    for (std::size_t i = 0; i < items.size();) {
      std::size_t j = i + 1;
      while (j < items.size() && items[j].fingerprint == items[i].fingerprint) ++j;
      if (j - i >= 2) {
        CollisionGroup group;
        group.fingerprint = items[i].fingerprint;
        for (std::size_t k = i; k < j; ++k) {
          group.members.push_back(graph_from_edge_mask(n, items[k].mask));
        }
        groups.push_back(std::move(group));
      }
      i = j;
    }
  }
  std::sort(groups.begin(), groups.end(),
            [](const CollisionGroup& a, const CollisionGroup& b) {
              return a.fingerprint < b.fingerprint;
            });
  return groups;
}

std::optional<PermutationWitness> witness_permutation(const Graph& g, const Graph& h,
                                                      bool closed) {
  if (g.n() != h.n()) return std::nullopt;
  const int n = g.n();
  const auto kind = closed ? NeighborhoodKind::kClosed : NeighborhoodKind::kOpen;
  if (neighborhood_multiset(g, kind) != neighborhood_multiset(h, kind)) {
    return std::nullopt;
  }
  auto hood = [closed](const Graph& x, int v) {
    return closed ? closed_neighborhood(x, v) : open_neighborhood(x, v);
  };
  // Compatible targets form complete bipartite blocks of equal size, so
  // taking the smallest free target at each step never dead-ends and yields
  // the lexicographically least sigma.
  std::vector<int> sigma(n, -1);
  std::vector<bool> used(n, false);
  for (int v = 0; v < n; ++v) {
    const VertexSet target = hood(g, v);
    for (int u = 0; u < n; ++u) {
      if (!used[u] && hood(h, u) == target) {
        sigma[v] = u;
        used[u] = true;
        break;
      }
    }
    if (sigma[v] < 0) return std::nullopt;
  }
  return PermutationWitness::from_sigma(std::move(sigma));
}

PairChecks check_collision_pair(const Graph& g, const Graph& h,
                                const PermutationWitness& sigma) {
  PairChecks c;
  c.same_edge_count = g.edge_count() == h.edge_count();

  c.orbits_are_cliques = true;
  for (const auto& orbit : sigma.orbits) {
    for (int u : orbit) {
      VertexSet others = orbit;
      others.erase(u);
      if (!others.is_subset_of(g.neighbors(u)) || !others.is_subset_of(h.neighbors(u))) {
        c.orbits_are_cliques = false;
      }
    }
  }

  const std::vector<int> inverse = sigma.inverse();
  c.edge_transit = true;
  for (int b = 0; b < g.n(); ++b) {
    // a ∈ N_G[b] ⇒ a ∈ N_H[σ(b)], and c ∈ N_H[b] ⇒ c ∈ N_G[σ⁻¹(b)].
    if (!closed_neighborhood(g, b).is_subset_of(closed_neighborhood(h, sigma.sigma[b])) ||
        !closed_neighborhood(h, b).is_subset_of(closed_neighborhood(g, inverse[b]))) {
      c.edge_transit = false;
    }
  }

  c.both_contain_c4 = contains_induced_c4(g) && contains_induced_c4(h);
  return c;
}

std::string CollisionReport::to_json() const {
  nlohmann::json doc = {
      {"n", n},
      {"graphs", graphs},
      {"closed_multiset_groups", multiset_groups},
      {"closed_multiset_pairs", multiset_pairs},
      {"closed_support_groups", support_groups},
      {"closed_support_pairs", support_pairs},
      {"edge_count_violations", edge_count_violations},
      {"orbit_clique_violations", orbit_clique_violations},
      {"edge_transit_violations", edge_transit_violations},
      {"induced_c4_violations", c4_violations},
      {"witness_failures", witness_failures},
      {"violations", violations},
      {"ok", ok()},
  };
  return doc.dump();
}

CollisionReport verify_collision_properties(int n, const MiningOptions& options) {
  CollisionReport report;
  report.n = n;
  report.graphs = std::uint64_t{1} << pair_count(n);

  for (const auto& group : find_collisions(n, CollisionKind::kClosedMultiset, options)) {
    ++report.multiset_groups;
    const auto& m = group.members;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        ++report.multiset_pairs;
        const auto sigma = witness_permutation(m[i], m[j]);
        if (!sigma) {
          ++report.witness_failures;
          report.violations.push_back("no witness permutation: " + pair_name(m[i], m[j]));
          continue;
        }
        const PairChecks c = check_collision_pair(m[i], m[j], *sigma);
        if (!c.same_edge_count) ++report.edge_count_violations;
        if (!c.orbits_are_cliques) ++report.orbit_clique_violations;
        if (!c.edge_transit) ++report.edge_transit_violations;
        if (!c.both_contain_c4) ++report.c4_violations;
        if (!c.all()) {
          report.violations.push_back("closed-multiset pair " + pair_name(m[i], m[j]) +
                                      " sigma " + sigma->cycle_notation());
        }
      }
    }
  }

  for (const auto& group : find_collisions(n, CollisionKind::kClosedSupport, options)) {
    ++report.support_groups;
    const std::uint64_t k = group.members.size();
    report.support_pairs += k * (k - 1) / 2;
    for (const Graph& g : group.members) {
      if (!contains_induced_c4(g)) {
        ++report.c4_violations;
        report.violations.push_back("C4-free member of a closed-support collision: " +
                                    encode_graph6(g));
      }
    }
  }
  return report;
}

}  // namespace nbrecon
