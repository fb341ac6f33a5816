#include "nbrecon/cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nbrecon/convexity.h"
#include "nbrecon/errors.h"
#include "nbrecon/families.h"
#include "nbrecon/family_io.h"
#include "nbrecon/graph_io.h"
#include "nbrecon/miner.h"
#include "nbrecon/property_suite.h"
#include "nbrecon/reconstruct.h"

namespace nbrecon {
namespace {

using json = nlohmann::json;

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

json edges_json(const Graph& g) {
  json arr = json::array();
  for (const auto& [u, v] : g.edges()) arr.push_back({u, v});
  return arr;
}

std::vector<int> parse_id_list(const std::string& text, int universe) {
  std::vector<int> ids;
  std::string token;
  std::istringstream stream(text);
  while (std::getline(stream, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(), ::isspace), token.end());
    if (token.empty()) continue;
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || v < 0 || v >= universe) {
      throw InputError("--set: bad vertex id '" + token + "'");
    }
    ids.push_back(v);
  }
  return ids;
}

// A JSON object with a "universe" key is a set family; anything else is a
// graph whose invariant is computed first.
bool looks_like_family(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos || text[start] != '{') return false;
  try {
    return json::parse(text).contains("universe");
  } catch (const json::parse_error&) {
    return true;  // let the family parser report the position
  }
}

struct NbhdArgs {
  std::string input = "-";
  bool open = false;
  bool support = false;
};

int cmd_nbhd(const NbhdArgs& a, std::istream& in, std::ostream& out) {
  const Graph g = read_graph(slurp(a.input, in));
  const auto m = neighborhood_multiset(
      g, a.open ? NeighborhoodKind::kOpen : NeighborhoodKind::kClosed);
  out << (a.support ? family_to_json(support_of(m), g.labels())
                    : multiset_to_json(m, g.labels()))
      << '\n';
  return kExitOk;
}

struct ConvexArgs {
  std::string input = "-";
  bool as_json = false;
  std::string set;
};

int cmd_convex(const ConvexArgs& a, std::istream& in, std::ostream& out) {
  const Graph g = read_graph(slurp(a.input, in));
  if (!a.set.empty()) {
    const auto s = VertexSet::from_range(g.n(), parse_id_list(a.set, g.n()));
    const auto check = check_digitally_convex(g, s);
    json doc = {{"set", s.members()}, {"convex", check.convex}};
    if (check.convex) {
      json witnesses = json::array();
      for (const auto& [v, x] : check.private_neighbors) witnesses.push_back({v, x});
      doc["private_neighbors"] = witnesses;
    } else {
      doc["violator"] = *check.violator;
    }
    out << doc.dump() << '\n';
    return kExitOk;
  }
  const SetFamily d = digital_convexity(g);
  if (a.as_json) {
    out << family_to_json(d, g.labels()) << '\n';
  } else {
    for (const auto& s : d) out << json(s.members()).dump() << '\n';
  }
  return kExitOk;
}

struct ReconstructArgs {
  std::string input = "-";
  std::string from = "multiset";
  bool all = false;
  bool count = false;
  std::size_t limit = 16;
  bool dot = false;
};

int cmd_reconstruct(const ReconstructArgs& a, std::istream& in, std::ostream& out) {
  const std::string text = slurp(a.input, in);
  SearchOptions options;
  options.mode = a.count ? SearchMode::kCount : a.all ? SearchMode::kAll : SearchMode::kFirst;
  options.limit = a.limit;

  NeighborhoodMultiset multiset;
  SetFamily family;
  std::vector<std::string> labels;
  if (looks_like_family(text)) {
    const FamilyDocument doc = parse_family_json(text);
    multiset = doc.multiset();
    family = doc.family();
    labels = doc.labels;
  } else {
    const Graph g = read_graph(text);
    labels = g.labels();
    multiset = neighborhood_multiset(g, NeighborhoodKind::kClosed);
    family = a.from == "dc" ? digital_convexity(g) : support_of(multiset);
  }

  ReconstructionResult r;
  if (a.from == "multiset") {
    r = from_multiset(multiset, options);
  } else if (a.from == "support") {
    r = from_support(family, options);
  } else {
    r = from_digital_convexity(family, options);
  }

  if (a.dot) {
    for (std::size_t i = 0; i < r.graphs.size(); ++i) {
      Graph g = r.graphs[i];
      if (!labels.empty()) g.set_labels(labels);
      out << to_dot(g, "G" + std::to_string(i));
    }
  } else {
    json doc;
    doc["verdict"] = verdict_name(r.verdict);
    json graphs = json::array();
    for (const auto& g : r.graphs) {
      graphs.push_back({{"graph6", encode_graph6(g)}, {"edges", edges_json(g)}});
    }
    doc["graphs"] = graphs;
    doc["truncated"] = r.truncated;
    doc["solution_count"] = r.solution_count ? json(*r.solution_count) : json(nullptr);
    doc["stats"] = {{"nodes", r.stats.nodes}, {"seconds", r.stats.seconds}};
    if (!labels.empty()) doc["labels"] = labels;
    if (!r.reason.empty()) doc["reason"] = r.reason;
    out << doc.dump() << '\n';
  }
  switch (r.verdict) {
    case Verdict::kUnique:
      return kExitOk;
    case Verdict::kAmbiguous:
      return kExitAmbiguous;
    case Verdict::kInfeasible:
      return kExitInfeasible;
  }
  return kExitError;
}

struct MineArgs {
  int n = 4;
  std::string kind = "closed-multiset";
  bool deep = false;
  int jobs = 1;
};

int cmd_mine(const MineArgs& a, std::ostream& out) {
  const auto kind = parse_collision_kind(a.kind);
  if (!kind) throw InputError("unknown collision kind '" + a.kind + "'");
  const MiningOptions options{a.deep, a.jobs};
  const bool closed = *kind != CollisionKind::kOpenMultiset;
  for (const auto& group : find_collisions(a.n, *kind, options)) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(group.fingerprint));
    json members = json::array();
    for (const auto& g : group.members) members.push_back(encode_graph6(g));
    json pairs = json::array();
    const Graph& first = group.members.front();
    for (std::size_t j = 1; j < group.members.size(); ++j) {
      const Graph& other = group.members[j];
      json item = {{"pair", {0, j}}};
      const auto sigma = witness_permutation(first, other, closed);
      item["witness"] = sigma ? json(sigma->cycle_notation()) : json(nullptr);
      json checks = {{"both_contain_c4",
                      contains_induced_c4(first) && contains_induced_c4(other)}};
      if (*kind == CollisionKind::kClosedMultiset && sigma) {
        const PairChecks c = check_collision_pair(first, other, *sigma);
        checks["same_edge_count"] = c.same_edge_count;
        checks["orbits_are_cliques"] = c.orbits_are_cliques;
        checks["edge_transit"] = c.edge_transit;
      }
      item["checks"] = checks;
      pairs.push_back(item);
    }
    out << json{{"kind", a.kind},
                {"fingerprint", hex},
                {"members", members},
                {"pairs", pairs}}
               .dump()
        << '\n';
  }
  return kExitOk;
}

struct VerifyArgs {
  int n = 5;
  int samples = 200;
  bool deep = false;
  int jobs = 1;
};

int cmd_verify(const VerifyArgs& a, std::uint64_t seed, std::ostream& out) {
  PropertySuiteOptions options;
  options.seed = seed;
  options.samples = a.samples;
  options.mining = MiningOptions{a.deep, a.jobs};
  const auto report = run_property_suite(a.n, options);
  out << report.to_json() << '\n';
  return report.ok() ? kExitOk : kExitError;
}

struct ConvertArgs {
  std::string input = "-";
  std::string to = "graph6";
};

int cmd_convert(const ConvertArgs& a, std::istream& in, std::ostream& out) {
  const Graph g = read_graph(slurp(a.input, in));
  if (a.to == "graph6") {
    out << encode_graph6(g) << '\n';
  } else if (a.to == "json") {
    out << graph_to_json(g) << '\n';
  } else if (a.to == "dot") {
    out << to_dot(g);
  } else {
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Reconstruct graphs from neighborhood families and digital convexities"};
  app.require_subcommand(1);
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for randomized sampling");

  NbhdArgs nbhd;
  auto* nbhd_cmd = app.add_subcommand("nbhd", "Print the neighborhood family of a graph");
  nbhd_cmd->add_option("input", nbhd.input, "graph6 or JSON graph, - for stdin");
  auto* closed_flag = nbhd_cmd->add_flag("--closed", "Closed neighborhoods (default)");
  nbhd_cmd->add_flag("--open", nbhd.open, "Open neighborhoods")->excludes(closed_flag);
  auto* multiset_flag = nbhd_cmd->add_flag("--multiset", "Keep multiplicities (default)");
  nbhd_cmd->add_flag("--support", nbhd.support, "Distinct sets only")->excludes(multiset_flag);

  ConvexArgs convex;
  auto* convex_cmd = app.add_subcommand("convex", "Digitally convex sets of a graph");
  convex_cmd->add_option("input", convex.input, "graph6 or JSON graph, - for stdin");
  convex_cmd->add_flag("--json", convex.as_json, "Print one family object");
  convex_cmd->add_option("--set", convex.set, "Test one set, e.g. 0,2");

  ReconstructArgs recon;
  auto* recon_cmd = app.add_subcommand("reconstruct", "Recover graphs from an invariant");
  recon_cmd->add_option("input", recon.input, "JSON family or graph6, - for stdin");
  recon_cmd->add_option("--from", recon.from, "Invariant kind")
      ->check(CLI::IsMember({"multiset", "support", "dc"}));
  auto* all_flag = recon_cmd->add_flag("--all", recon.all, "List realizations up to --limit");
  recon_cmd->add_flag("--count", recon.count, "Count every realization")->excludes(all_flag);
  recon_cmd->add_option("--limit", recon.limit, "Maximum graphs to list")
      ->check(CLI::PositiveNumber);
  recon_cmd->add_flag("--dot", recon.dot, "Print DOT drawings");

  MineArgs mine;
  auto* mine_cmd = app.add_subcommand("mine", "Find labeled graphs sharing an invariant");
  mine_cmd->add_option("--n", mine.n, "Vertex count")->check(CLI::Range(1, 8));
  mine_cmd->add_option("--kind", mine.kind, "Invariant")
      ->check(CLI::IsMember({"closed-multiset", "closed-support", "open-multiset"}));
  mine_cmd->add_flag("--deep", mine.deep, "Allow n = 8");
  mine_cmd->add_option("--jobs", mine.jobs, "Worker threads")->check(CLI::PositiveNumber);

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the property suite at one order");
  verify_cmd->add_option("--n", verify.n, "Vertex count")
      ->check(CLI::Range(1, kPropertySuiteCeiling));
  verify_cmd->add_option("--samples", verify.samples, "Random cases per sampled check")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", seed, "Seed for randomized sampling");
  verify_cmd->add_flag("--deep", verify.deep, "Allow the n = 8 collision sweep");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);

  ConvertArgs convert;
  auto* convert_cmd = app.add_subcommand("convert", "Convert between graph formats");
  convert_cmd->add_option("input", convert.input, "graph6 or JSON graph, - for stdin");
  convert_cmd->add_option("--to", convert.to, "Output format")
      ->check(CLI::IsMember({"graph6", "json", "dot", "edges"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*nbhd_cmd) return cmd_nbhd(nbhd, in, out);
    if (*convex_cmd) return cmd_convex(convex, in, out);
    if (*recon_cmd) return cmd_reconstruct(recon, in, out);
    if (*mine_cmd) return cmd_mine(mine, out);
    if (*verify_cmd) return cmd_verify(verify, seed, out);
    if (*convert_cmd) return cmd_convert(convert, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace nbrecon
