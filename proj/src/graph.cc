#include "nbrecon/graph.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "nbrecon/errors.h"

namespace nbrecon {

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxVertices) + "]");
  }
  adj_.assign(n, VertexSet(n));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n()) {
    throw InputError("vertex id " + std::to_string(v) + " out of range for " +
                     std::to_string(n()) + "-vertex graph");
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("loop at vertex " + std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return;
  adj_[u].erase(v);
  adj_[v].erase(u);
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u].contains(v);
}

const VertexSet& Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::edge_count() const {
  int total = 0;
  for (const auto& row : adj_) total += row.size();
  return total / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n()) {
    throw InputError("expected " + std::to_string(n()) + " labels, got " +
                     std::to_string(labels.size()));
  }
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw InputError("duplicate label '" + l + "'");
  }
  labels_ = std::move(labels);
}

std::string Graph::label(int v) const {
  check_vertex(v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

VertexSet closed_neighborhood_of_set(const Graph& g, const VertexSet& a) {
  if (a.universe() != g.n()) {
    throw InputError("vertex set universe " + std::to_string(a.universe()) +
                     " does not match graph order " + std::to_string(g.n()));
  }
  VertexSet out(g.n());
  for (int v : a) out |= closed_neighborhood(g, v);
  return out;
}

VertexSet open_neighborhood(const Graph& g, int v) { return g.neighbors(v); }

bool contains_induced_c4(const Graph& g) {
  // An induced C4 is a non-adjacent pair u, v with two non-adjacent common
  // neighbors.
  const int n = g.n();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.neighbors(u).contains(v)) continue;
      const VertexSet common = g.neighbors(u) & g.neighbors(v);
      if (common.size() < 2) continue;
      for (int x : common) {
        if (!(common - closed_neighborhood(g, x)).empty()) return true;
      }
    }
  }
  return false;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.n();
  int best = n + 1;
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{root};
    dist[root] = 0;
    parent[root] = -1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      // Cycles found beyond this depth cannot beat the current best.
      if (2 * dist[u] >= best) break;
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

Graph blow_up(const Graph& g, int v, const std::vector<std::string>& new_labels) {
  const int n = g.n();
  if (v < 0 || v >= n) {
    throw InputError("blow-up vertex " + std::to_string(v) + " out of range");
  }
  const int k = static_cast<int>(new_labels.size());
  if (k < 1) throw InputError("blow-up needs at least one new label");
  if (n - 1 + k > kMaxVertices) {
    throw ResourceError("blow-up would exceed " + std::to_string(kMaxVertices) +
                        " vertices");
  }

  std::vector<std::string> labels;
  labels.reserve(n - 1 + k);
  for (int w = 0; w < n; ++w) {
    if (w != v) labels.push_back(g.label(w));
  }
  std::set<std::string> used(labels.begin(), labels.end());
  for (const auto& l : new_labels) {
    if (!used.insert(l).second) {
      throw InputError("blow-up label '" + l + "' is duplicate or already used");
    }
    labels.push_back(l);
  }

  const auto compact = [v](int w) { return w < v ? w : w - 1; };
  Graph out(n - 1 + k);
  for (const auto& [a, b] : g.edges()) {
    if (a != v && b != v) out.add_edge(compact(a), compact(b));
  }
  for (int i = 0; i < k; ++i) {
    const int fresh = n - 1 + i;
    for (int j = 0; j < i; ++j) out.add_edge(fresh, n - 1 + j);
    for (int w : g.neighbors(v)) out.add_edge(fresh, compact(w));
  }
  out.set_labels(std::move(labels));
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n()) {
    throw InputError("vertex set universe does not match graph order");
  }
  if (s.empty()) throw InputError("induced subgraph on an empty vertex set");

  InducedSubgraph out;
  out.original_id = s.members();
  const int m = static_cast<int>(out.original_id.size());
  std::vector<int> position(g.n(), -1);
  for (int i = 0; i < m; ++i) position[out.original_id[i]] = i;

  out.graph = Graph(m);
  for (int i = 0; i < m; ++i) {
    for (int w : g.neighbors(out.original_id[i]) & s) {
      if (position[w] > i) out.graph.add_edge(i, position[w]);
    }
  }
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (int old : out.original_id) labels.push_back(g.label(old));
    out.graph.set_labels(std::move(labels));
  }
  return out;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.n() > kIsomorphismCeiling || h.n() > kIsomorphismCeiling) {
    throw UnsupportedError("brute-force isomorphism supports at most " +
                           std::to_string(kIsomorphismCeiling) + " vertices");
  }
  if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
  const int n = g.n();

  std::vector<int> dg(n), dh(n);
  for (int v = 0; v < n; ++v) {
    dg[v] = g.degree(v);
    dh[v] = h.degree(v);
  }
  std::vector<int> sg = dg, sh = dh;
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return false;

  std::vector<int> image(n, -1);
  std::uint64_t used = 0;
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v == n) return true;
    for (int u = 0; u < n; ++u) {
      if ((used >> u) & 1U || dh[u] != dg[v]) continue;
      bool consistent = true;
      for (int w = 0; w < v && consistent; ++w) {
        consistent = g.adjacent(v, w) == h.adjacent(u, image[w]);
      }
      if (!consistent) continue;
      image[v] = u;
      used |= std::uint64_t{1} << u;
      if (extend(v + 1)) return true;
      used &= ~(std::uint64_t{1} << u);
    }
    return false;
  };
  return extend(0);
}

PermutationWitness PermutationWitness::from_sigma(std::vector<int> sigma) {
  const int n = static_cast<int>(sigma.size());
  if (n > kMaxVertices) throw InputError("permutation too large");
  std::vector<bool> hit(n, false);
  for (int image : sigma) {
    if (image < 0 || image >= n || hit[image]) {
      throw InputError("sigma is not a bijection on {0.." +
                       std::to_string(n - 1) + "}");
    }
    hit[image] = true;
  }
  PermutationWitness w;
  w.sigma = std::move(sigma);
  std::vector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    VertexSet orbit(n);
    for (int v = start; !seen[v]; v = w.sigma[v]) {
      seen[v] = true;
      orbit.insert(v);
    }
    w.orbits.push_back(orbit);
  }
  return w;
}

std::vector<int> PermutationWitness::inverse() const {
  std::vector<int> inv(sigma.size());
  for (std::size_t v = 0; v < sigma.size(); ++v) inv[sigma[v]] = static_cast<int>(v);
  return inv;
}

std::string PermutationWitness::cycle_notation(const Graph* labels) const {
  std::string out;
  for (const auto& orbit : orbits) {
    if (orbit.size() < 2) continue;
    out += '(';
    const int start = orbit.min();
    int v = start;
    do {
      if (v != start) out += ' ';
      out += labels ? labels->label(v) : std::to_string(v);
      v = sigma[v];
    } while (v != start);
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace nbrecon
