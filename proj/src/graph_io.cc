#include "nbrecon/graph_io.h"

#include <cctype>
#include <map>

#include <json.hpp>

#include "nbrecon/errors.h"

namespace nbrecon {
namespace {

using json = nlohmann::json;

constexpr int kGraph6Bias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::size_t skip_space(std::string_view text, std::size_t pos) {
  while (pos < text.size() && is_space(text[pos])) ++pos;
  return pos;
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const int n = g.n();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 0x3F) + kGraph6Bias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3F) + kGraph6Bias));
    out.push_back(static_cast<char>((n & 0x3F) + kGraph6Bias));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Bias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((acc << (6 - filled)) + kGraph6Bias));
  }
  return out;
}

Graph decode_graph6(std::string_view text) {
  std::size_t pos = skip_space(text, 0);
  if (text.substr(pos, kGraph6Header.size()) == kGraph6Header) {
    pos += kGraph6Header.size();
  }
  std::size_t end = text.size();
  while (end > pos && is_space(text[end - 1])) --end;

  auto value_at = [&](std::size_t p) -> int {
    if (p >= end) throw ParseError("graph6: unexpected end of input", p);
    const int c = static_cast<unsigned char>(text[p]);
    if (c < kGraph6Bias || c > 126) {
      throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", p);
    }
    return c - kGraph6Bias;
  };

  long n = 0;
  if (pos < end && text[pos] == '~') {
    if (pos + 1 < end && text[pos + 1] == '~') {
      throw ParseError("graph6: orders above 258047 are not supported", pos);
    }
    n = (value_at(pos + 1) << 12) | (value_at(pos + 2) << 6) | value_at(pos + 3);
    pos += 4;
  } else {
    n = value_at(pos);
    pos += 1;
  }
  if (n > kMaxVertices) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxVertices),
                     pos - 1);
  }

  const long bits = n * (n - 1) / 2;
  const std::size_t expected = static_cast<std::size_t>((bits + 5) / 6);
  if (end - pos != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) +
                         " data bytes for order " + std::to_string(n) + ", found " +
                         std::to_string(end - pos),
                     end < pos + expected ? end : pos + expected);
  }

  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t p = pos + static_cast<std::size_t>(k / 6);
      if ((value_at(p) >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + expected - 1;
    const int padding = static_cast<int>(6 - bits % 6);
    if ((value_at(last) & ((1 << padding) - 1)) != 0) {
      throw ParseError("graph6: nonzero padding bits", last);
    }
  }
  return g;
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::string out = "graph " + std::string(name) + " {\n";
  for (int v = 0; v < g.n(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + g.label(v) + "\"];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  }
  out += "}\n";
  return out;
}

Graph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("graph JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object() || !doc.contains("adjacency")) {
    throw ParseError("graph JSON: expected an object with \"adjacency\"", 0);
  }
  const json& adjacency = doc["adjacency"];
  try {
    if (doc.contains("labels")) {
      const auto labels = doc["labels"].get<std::vector<std::string>>();
      std::map<std::string, int> id;
      for (std::size_t i = 0; i < labels.size(); ++i) id[labels[i]] = static_cast<int>(i);
      Graph g(static_cast<int>(labels.size()));
      g.set_labels(labels);
      if (!adjacency.is_object()) {
        throw InputError("graph JSON: labelled adjacency must be an object");
      }
      for (const auto& [from, targets] : adjacency.items()) {
        if (!id.count(from)) throw InputError("graph JSON: unknown label '" + from + "'");
        for (const auto& to : targets.get<std::vector<std::string>>()) {
          if (!id.count(to)) throw InputError("graph JSON: unknown label '" + to + "'");
          g.add_edge(id[from], id[to]);
        }
      }
      return g;
    }
    const auto lists = adjacency.get<std::vector<std::vector<int>>>();
    const int n = doc.contains("n") ? doc["n"].get<int>() : static_cast<int>(lists.size());
    if (static_cast<int>(lists.size()) != n) {
      throw InputError("graph JSON: \"n\" does not match adjacency length");
    }
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v : lists[u]) g.add_edge(u, v);
    }
    return g;
  } catch (const json::exception& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
}

std::string graph_to_json(const Graph& g) {
  json doc;
  if (g.has_labels()) {
    doc["labels"] = g.labels();
    json adjacency = json::object();
    for (int v = 0; v < g.n(); ++v) {
      std::vector<std::string> targets;
      for (int w : g.neighbors(v)) targets.push_back(g.label(w));
      adjacency[g.label(v)] = targets;
    }
    doc["adjacency"] = adjacency;
  } else {
    doc["n"] = g.n();
    json adjacency = json::array();
    for (int v = 0; v < g.n(); ++v) adjacency.push_back(g.neighbors(v).members());
    doc["adjacency"] = adjacency;
  }
  return doc.dump();
}

Graph read_graph(std::string_view text) {
  const std::size_t pos = skip_space(text, 0);
  if (pos < text.size() && text[pos] == '{') return parse_graph_json(text);
  return decode_graph6(text);
}

}  // namespace nbrecon
