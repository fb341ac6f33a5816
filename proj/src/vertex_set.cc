#include "nbrecon/vertex_set.h"

namespace nbrecon {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int v : *this) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

bool canonical_less(const VertexSet& a, const VertexSet& b) {
  const int sa = a.size();
  const int sb = b.size();
  if (sa != sb) return sa < sb;
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return a.universe() < b.universe();
  // Equal sizes: the sorted member lists first differ at the lowest element
  // of the symmetric difference, and whichever set holds it sorts first.
  const std::uint64_t lowest = diff & (~diff + 1);
  return (a.bits() & lowest) != 0;
}

}  // namespace nbrecon
