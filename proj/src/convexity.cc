#include "nbrecon/convexity.h"

#include <array>
#include <bit>

#include "nbrecon/errors.h"

namespace nbrecon {

ConvexityCheck check_digitally_convex(const Graph& g, const VertexSet& s) {
  const VertexSet covered = closed_neighborhood_of_set(g, s);
  ConvexityCheck out;
  for (int v : s.complement()) {
    const VertexSet private_part = closed_neighborhood(g, v) - covered;
    if (private_part.empty()) {
      out.private_neighbors.clear();
      out.violator = v;
      return out;
    }
    out.private_neighbors.emplace_back(v, private_part.min());
  }
  out.convex = true;
  return out;
}

bool is_digitally_convex(const Graph& g, const VertexSet& s) {
  const VertexSet covered = closed_neighborhood_of_set(g, s);
  for (int v : s.complement()) {
    if (closed_neighborhood(g, v).is_subset_of(covered)) return false;
  }
  return true;
}

SetFamily digital_convexity(const Graph& g) {
  const int n = g.n();
  if (n > kConvexitySweepCeiling) {
    throw ResourceError("digital convexity sweep supports at most " +
                        std::to_string(kConvexitySweepCeiling) + " vertices");
  }
  std::array<std::uint64_t, kConvexitySweepCeiling> closed{};
  for (int v = 0; v < n; ++v) closed[v] = closed_neighborhood(g, v).bits();

  // Gray-code walk: one vertex toggles per step and cover[x] counts members
  // of S whose closed neighborhood contains x, so N[S] updates in O(n).
  std::array<int, kConvexitySweepCeiling> cover{};
  std::uint64_t s = 0;
  std::uint64_t ns = 0;
  const std::uint64_t all = VertexSet::universe_mask(n);
  std::vector<VertexSet> convex;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t step = 0; step < steps; ++step) {
    if (step > 0) {
      const int v = std::countr_zero(step);
      const std::uint64_t bit = std::uint64_t{1} << v;
      const int delta = (s & bit) ? -1 : 1;
      s ^= bit;
      for (std::uint64_t rest = closed[v]; rest; rest &= rest - 1) {
        const int x = std::countr_zero(rest);
        cover[x] += delta;
        if (cover[x] == 0) {
          ns &= ~(std::uint64_t{1} << x);
        } else {
          ns |= std::uint64_t{1} << x;
        }
      }
    }
    bool ok = true;
    for (std::uint64_t rest = all & ~s; rest && ok; rest &= rest - 1) {
      ok = (closed[std::countr_zero(rest)] & ~ns) != 0;
    }
    if (ok) convex.push_back(VertexSet::from_bits(n, s));
  }
  return SetFamily(n, std::move(convex));
}

SetFamily complement_family(const SetFamily& f) {
  std::vector<VertexSet> out;
  out.reserve(f.size());
  for (const auto& s : f) out.push_back(s.complement());
  return SetFamily(f.universe(), std::move(out));
}

AxiomReport check_convexity_axioms(const SetFamily& f) {
  const int n = f.universe();
  AxiomReport report;
  if (!f.contains(VertexSet(n))) {
    report.violation = "empty set missing";
    return report;
  }
  if (!f.contains(VertexSet::full(n))) {
    report.violation = "universe " + VertexSet::full(n).to_string() + " missing";
    return report;
  }
  const auto& m = f.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const VertexSet meet = m[i] & m[j];
      if (!f.contains(meet)) {
        report.violation = m[i].to_string() + " ∩ " + m[j].to_string() + " = " +
                           meet.to_string() + " missing";
        report.pair = std::make_pair(m[i], m[j]);
        return report;
      }
    }
  }
  report.ok = true;
  return report;
}

}  // namespace nbrecon
