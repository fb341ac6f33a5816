#include "nbrecon/property_suite.h"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "nbrecon/convexity.h"
#include "nbrecon/errors.h"
#include "nbrecon/families.h"
#include "nbrecon/graph_io.h"
#include "nbrecon/reconstruct.h"

namespace nbrecon {
namespace {

constexpr int kExhaustiveRoundTrip = 6;
constexpr int kExhaustivePairs = 5;

class Recorder {
 public:
  explicit Recorder(std::string name) { check_.name = std::move(name); }

  void expect(bool ok, const std::string& context) {
    ++check_.cases;
    if (ok) return;
    if (check_.failures++ == 0) check_.first_failure = context;
  }

  PropertyCheck take() { return std::move(check_); }

 private:
  PropertyCheck check_;
};

bool unique_is(const ReconstructionResult& r, const Graph& g) {
  return r.verdict == Verdict::kUnique && r.graphs.size() == 1 && r.graphs[0] == g;
}

VertexSet random_set(int n, std::mt19937_64& rng) {
  return VertexSet::from_bits(n, rng());
}

}  // namespace

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_c4_free_graph(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> density(0.0, 0.5);
  for (;;) {
    Graph g(n);
    if (rng() & 1U) {
      g = random_graph(n, density(rng), rng);
    } else {
      const int base_order = std::uniform_int_distribution<int>(1, n)(rng);
      const Graph base = random_graph(base_order, density(rng), rng);
      std::vector<int> owner(n);
      std::iota(owner.begin(), owner.begin() + base_order, 0);
      std::uniform_int_distribution<int> pick(0, base_order - 1);
      for (int v = base_order; v < n; ++v) owner[v] = pick(rng);
      std::shuffle(owner.begin(), owner.end(), rng);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (owner[u] == owner[v] || base.adjacent(owner[u], owner[v])) g.add_edge(u, v);
        }
      }
    }
    if (!contains_induced_c4(g)) return g;
  }
}

bool PropertySuiteReport::ok() const {
  for (const auto& c : checks) {
    if (c.failures != 0) return false;
  }
  return !collisions_ran || collisions.ok();
}

std::string PropertySuiteReport::to_json() const {
  nlohmann::json doc;
  doc["n"] = n;
  doc["seed"] = seed;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json item = {{"name", c.name}, {"cases", c.cases}, {"failures", c.failures}};
    if (c.failures) item["first_failure"] = c.first_failure;
    arr.push_back(item);
  }
  doc["checks"] = arr;
  if (collisions_ran) doc["collisions"] = nlohmann::json::parse(collisions.to_json());
  doc["ok"] = ok();
  return doc.dump();
}

PropertySuiteReport run_property_suite(int n, const PropertySuiteOptions& options) {
  if (n < 1 || n > kPropertySuiteCeiling) {
    throw ResourceError("property suite supports 1 <= n <= " +
                        std::to_string(kPropertySuiteCeiling));
  }
  PropertySuiteReport report;
  report.n = n;
  report.seed = options.seed;
  std::mt19937_64 rng(options.seed);

  // Graph sources: every labeled graph when small, random draws otherwise.
  std::vector<Graph> graphs;
  std::vector<Graph> c4_free;
  if (n <= kExhaustiveRoundTrip) {
    graphs = enumerate_labeled_graphs(n);
    for (const auto& g : graphs) {
      if (!contains_induced_c4(g)) c4_free.push_back(g);
    }
  } else {
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int i = 0; i < options.samples; ++i) {
      graphs.push_back(random_graph(n, density(rng), rng));
      c4_free.push_back(random_c4_free_graph(n, rng));
    }
  }

  Recorder multiset_trip("round_trip_multiset");
  Recorder support_trip("round_trip_support");
  Recorder convexity_trip("round_trip_digital_convexity");
  for (const Graph& g : c4_free) {
    const std::string name = encode_graph6(g);
    multiset_trip.expect(
        unique_is(from_multiset(neighborhood_multiset(g, NeighborhoodKind::kClosed)), g),
        name);
    support_trip.expect(unique_is(from_support(closed_support(g)), g), name);
    convexity_trip.expect(unique_is(from_digital_convexity(digital_convexity(g)), g), name);
  }
  report.checks.push_back(multiset_trip.take());
  report.checks.push_back(support_trip.take());
  report.checks.push_back(convexity_trip.take());

  Recorder bridge("convex_iff_complement_in_unions");
  Recorder axioms("convexity_axioms");
  Recorder reduction("generator_reduction");
  for (const Graph& g : graphs) {
    const std::string name = encode_graph6(g);
    const SetFamily supp = closed_support(g);
    const SetFamily unions = union_closure(supp);
    const SetFamily convex = digital_convexity(g);
    axioms.expect(check_convexity_axioms(convex).ok, name);
    bridge.expect(complement_family(convex) == unions, name);

    if (n <= kExhaustivePairs) {
      const std::uint64_t subsets = std::uint64_t{1} << n;
      for (std::uint64_t s = 0; s < subsets; ++s) {
        const VertexSet set = VertexSet::from_bits(n, s);
        bridge.expect(is_digitally_convex(g, set) == unions.contains(set.complement()),
                      name + " S=" + set.to_string());
        for (std::uint64_t t = 0; t < subsets; ++t) {
          const VertexSet other = VertexSet::from_bits(n, t);
          const bool direct = closed_neighborhood_of_set(g, set).is_subset_of(
              closed_neighborhood_of_set(g, other));
          reduction.expect(cn_subset(set, other, supp) == direct &&
                               cn_subset(set, other, unions) == direct,
                           name + " A=" + set.to_string() + " B=" + other.to_string());
        }
      }
    } else {
      for (int i = 0; i < 16; ++i) {
        const VertexSet set = random_set(n, rng);
        const VertexSet other = random_set(n, rng);
        bridge.expect(is_digitally_convex(g, set) == unions.contains(set.complement()),
                      name + " S=" + set.to_string());
        const bool direct = closed_neighborhood_of_set(g, set).is_subset_of(
            closed_neighborhood_of_set(g, other));
        reduction.expect(cn_subset(set, other, supp) == direct,
                         name + " A=" + set.to_string() + " B=" + other.to_string());
      }
    }
  }
  report.checks.push_back(bridge.take());
  report.checks.push_back(axioms.take());
  report.checks.push_back(reduction.take());

  Recorder basis("union_basis_unique_and_minimal");
  std::uniform_int_distribution<int> family_size(1, 2 * n + 2);
  for (int i = 0; i < options.samples; ++i) {
    std::vector<VertexSet> members;
    const int size = family_size(rng);
    for (int k = 0; k < size; ++k) members.push_back(random_set(n, rng));
    const SetFamily f(n, members);
    const SetFamily b = union_basis(f);
    bool ok = spans(b, f);
    for (const auto& drop : b) {
      std::vector<VertexSet> rest;
      for (const auto& x : b) {
        if (x != drop) rest.push_back(x);
      }
      ok = ok && !spans(SetFamily(n, rest), f);
    }
    for (int shuffle = 0; shuffle < 20 && ok; ++shuffle) {
      std::shuffle(members.begin(), members.end(), rng);
      ok = union_basis(n, members) == b;
    }
    basis.expect(ok, f.to_string());
  }
  report.checks.push_back(basis.take());

  const int ceiling = options.mining.allow_deep ? kDeepEnumerationCeiling
                                                : kEnumerationCeiling;
  if (n <= ceiling) {
    report.collisions = verify_collision_properties(n, options.mining);
    report.collisions_ran = true;
  }
  return report;
}

}  // namespace nbrecon
