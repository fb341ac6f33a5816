#include "nbrecon/family_io.h"

#include <json.hpp>

#include "nbrecon/errors.h"

namespace nbrecon {
namespace {

using json = nlohmann::json;

std::string dump(int universe, const std::vector<VertexSet>& sets,
                 const std::vector<std::string>& labels) {
  json doc;
  doc["universe"] = universe;
  json arr = json::array();
  for (const auto& s : sets) arr.push_back(s.members());
  doc["sets"] = arr;
  if (!labels.empty()) doc["labels"] = labels;
  return doc.dump();
}

}  // namespace

FamilyDocument parse_family_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("family JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("universe") || !doc.contains("sets")) {
    throw InputError("family JSON: expected an object with \"universe\" and \"sets\"");
  }
  FamilyDocument out;
  try {
    out.universe = doc["universe"].get<int>();
    if (out.universe < 0 || out.universe > kMaxVertices) {
      throw InputError("family JSON: universe " + std::to_string(out.universe) +
                       " outside [0, " + std::to_string(kMaxVertices) + "]");
    }
    const auto sets = doc["sets"].get<std::vector<std::vector<int>>>();
    for (std::size_t i = 0; i < sets.size(); ++i) {
      VertexSet s(out.universe);
      for (int v : sets[i]) {
        if (v < 0 || v >= out.universe) {
          throw InputError("family JSON: set " + std::to_string(i) + " holds id " +
                           std::to_string(v) + " outside the universe");
        }
        s.insert(v);
      }
      out.sets.push_back(s);
    }
    if (doc.contains("labels")) {
      out.labels = doc["labels"].get<std::vector<std::string>>();
      if (static_cast<int>(out.labels.size()) != out.universe) {
        throw InputError("family JSON: expected " + std::to_string(out.universe) +
                         " labels");
      }
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("family JSON: ") + e.what());
  }
  return out;
}

std::string family_to_json(const SetFamily& f, const std::vector<std::string>& labels) {
  return dump(f.universe(), f.members(), labels);
}

std::string multiset_to_json(const NeighborhoodMultiset& m,
                             const std::vector<std::string>& labels) {
  return dump(m.universe(), m.expanded(), labels);
}

}  // namespace nbrecon
