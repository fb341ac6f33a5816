#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nbrecon/vertex_set.h"

namespace nbrecon {

using Edge = std::pair<int, int>;

// A labeled simple graph on vertex ids 0..n-1 with one adjacency word per
// vertex. Adjacency is kept symmetric and irreflexive by every mutator.
// Labels are optional display names; they do not take part in equality.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int n() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return VertexSet::full(n()); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool adjacent(int u, int v) const;

  const VertexSet& neighbors(int v) const;
  int degree(int v) const { return neighbors(v).size(); }
  int edge_count() const;
  // Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);
  // Label of v, or its decimal id when the graph is unlabeled.
  std::string label(int v) const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  void check_vertex(int v) const;

  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

// N[v] = N(v) + {v}.
VertexSet closed_neighborhood(const Graph& g, int v);
// N[A] = union of N[v] over v in A. N[{}] = {}.
VertexSet closed_neighborhood_of_set(const Graph& g, const VertexSet& a);
VertexSet open_neighborhood(const Graph& g, int v);

bool contains_induced_c4(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// Replaces v by a clique on new_labels.size() vertices, each adjacent to
// N(v). Surviving vertices keep their relative order; the new vertices take
// the ids n-1 .. n-2+k in the order given.
Graph blow_up(const Graph& g, int v, const std::vector<std::string>& new_labels);

struct InducedSubgraph {
  Graph graph;
  // original_id[i] is the id in the parent graph of vertex i.
  std::vector<int> original_id;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// Brute-force isomorphism test for graphs up to this many vertices.
inline constexpr int kIsomorphismCeiling = 10;
bool is_isomorphic(const Graph& g, const Graph& h);

// A permutation of {0..n-1} together with its cycle decomposition.
struct PermutationWitness {
  std::vector<int> sigma;
  std::vector<VertexSet> orbits;  // ordered by smallest member

  // Validates that sigma is a bijection and computes the orbits.
  static PermutationWitness from_sigma(std::vector<int> sigma);

  std::vector<int> inverse() const;
  // Cycle notation without fixed points, e.g. "(0 3)(1 4)"; "()" for the
  // identity. With a graph, vertices print by label.
  std::string cycle_notation(const Graph* labels = nullptr) const;
};

}  // namespace nbrecon
