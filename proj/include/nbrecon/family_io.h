#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nbrecon/families.h"

namespace nbrecon {

// {"universe": n, "sets": [[0, 1], [1, 2]], "labels": ["a", "b", "c"]}
// Sets hold vertex ids in 0..n-1; "labels" is optional display metadata.
// A multiset repeats a set once per occurrence.
struct FamilyDocument {
  int universe = 0;
  std::vector<VertexSet> sets;  // file order, repeats kept
  std::vector<std::string> labels;

  SetFamily family() const { return SetFamily(universe, sets); }
  NeighborhoodMultiset multiset() const { return NeighborhoodMultiset(universe, sets); }
};

// Throws ParseError (with byte offset) on malformed JSON and InputError on
// out-of-range ids or a bad shape.
FamilyDocument parse_family_json(std::string_view text);

// Canonical serialization: sets sorted by (size, lexicographic), members
// ascending, so equal families print identically.
std::string family_to_json(const SetFamily& f,
                           const std::vector<std::string>& labels = {});
std::string multiset_to_json(const NeighborhoodMultiset& m,
                             const std::vector<std::string>& labels = {});

}  // namespace nbrecon
