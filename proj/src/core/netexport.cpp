#include "netexport.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace bcast {

bool operator==(const NetworkInstance& a, const NetworkInstance& b) {
  auto node_eq = [](const NetworkInstance::Node& x, const NetworkInstance::Node& y) {
    return x.id == y.id && x.kind == y.kind;
  };
  auto edge_eq = [](const NetworkInstance::NetEdge& x, const NetworkInstance::NetEdge& y) {
    return x.from == y.from && x.to == y.to && x.infinite == y.infinite &&
           (x.infinite || x.capacity == y.capacity);
  };
  auto demand_eq = [](const NetworkInstance::Demand& x, const NetworkInstance::Demand& y) {
    return x.sink == y.sink && x.source == y.source && x.block == y.block;
  };
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size() ||
      a.demands.size() != b.demands.size())
    return false;
  for (std::size_t i = 0; i < a.nodes.size(); ++i)
    if (!node_eq(a.nodes[i], b.nodes[i])) return false;
  for (std::size_t i = 0; i < a.edges.size(); ++i)
    if (!edge_eq(a.edges[i], b.edges[i])) return false;
  for (std::size_t i = 0; i < a.demands.size(); ++i)
    if (!demand_eq(a.demands[i], b.demands[i])) return false;
  return true;
}

NetworkInstance to_network(const BroadcastHypergraph& h, std::int64_t capacity) {
  validate_or_throw(h);
  NetworkInstance net;
  auto edges = h.canonical_edges();
  for (int i = 1; i <= h.n; ++i) net.nodes.push_back({"s" + std::to_string(i), "source"});
  for (std::size_t e = 0; e < edges.size(); ++e)
    net.nodes.push_back({"t" + std::to_string(e + 1), "sink"});
  net.nodes.push_back({"u", "relay"});
  net.nodes.push_back({"w", "relay"});

  for (int i = 1; i <= h.n; ++i)
    net.edges.push_back({"s" + std::to_string(i), "u", true, 0});
  net.edges.push_back({"u", "w", false, capacity});
  for (std::size_t e = 0; e < edges.size(); ++e) {
    std::string sink = "t" + std::to_string(e + 1);
    net.edges.push_back({"w", sink, true, 0});
    for (int j : edges[e].known)
      net.edges.push_back({"s" + std::to_string(j), sink, true, 0});
    net.demands.push_back({sink, "s" + std::to_string(edges[e].target), edges[e].target});
  }
  return net;
}

std::string network_to_json(const NetworkInstance& net) {
  nlohmann::json j;
  j["nodes"] = nlohmann::json::array();
  for (const auto& node : net.nodes)
    j["nodes"].push_back({{"id", node.id}, {"kind", node.kind}});
  j["edges"] = nlohmann::json::array();
  for (const auto& e : net.edges) {
    nlohmann::json je = {{"from", e.from}, {"to", e.to}};
    if (e.infinite)
      je["capacity"] = "inf";
    else
      je["capacity"] = e.capacity;
    j["edges"].push_back(je);
  }
  j["demands"] = nlohmann::json::array();
  for (const auto& d : net.demands)
    j["demands"].push_back({{"sink", d.sink}, {"source", d.source}, {"block", d.block}});
  return j.dump(2) + "\n";
}

NetworkInstance parse_network_json(const std::string& text) {
  NetworkInstance net;
  nlohmann::json j = nlohmann::json::parse(text);
  for (const auto& node : j.at("nodes"))
    net.nodes.push_back({node.at("id").get<std::string>(), node.at("kind").get<std::string>()});
  for (const auto& e : j.at("edges")) {
    NetworkInstance::NetEdge edge;
    edge.from = e.at("from").get<std::string>();
    edge.to = e.at("to").get<std::string>();
    const auto& cap = e.at("capacity");
    if (cap.is_string()) {
      if (cap.get<std::string>() != "inf") fail(Errc::parse_error, "bad capacity token");
      edge.infinite = true;
    } else {
      edge.infinite = false;
      edge.capacity = cap.get<std::int64_t>();
    }
    net.edges.push_back(edge);
  }
  for (const auto& d : j.at("demands"))
    net.demands.push_back({d.at("sink").get<std::string>(), d.at("source").get<std::string>(),
                           d.at("block").get<int>()});
  return net;
}

std::string network_to_dot(const NetworkInstance& net) {
  std::ostringstream os;
  os << "digraph broadcast {\n  rankdir=LR;\n";
  for (const auto& node : net.nodes) {
    std::string shape = node.kind == "source" ? "box" : node.kind == "sink" ? "doublecircle"
                                                                            : "circle";
    os << "  " << node.id << " [shape=" << shape << "];\n";
  }
  for (const auto& e : net.edges) {
    os << "  " << e.from << " -> " << e.to;
    if (e.infinite)
      os << " [label=\"inf\"]";
    else
      os << " [label=\"" << e.capacity << "\",style=bold]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

GapReport gap_report(int linear_lower, int n, std::uint64_t gamma) {
  if (linear_lower < 1) fail(Errc::invalid_argument, "need a positive linear lower bound");
  if (gamma == 0 || gamma >= (std::uint64_t{1} << n))
    fail(Errc::invalid_argument, "gamma must satisfy 1 <= gamma < 2^n");
  GapReport g;
  g.linear_lower = linear_lower;
  g.n = n;
  g.gamma = gamma;
  double beta_star_upper = n - std::log2(static_cast<double>(gamma));
  g.ratio = linear_lower / beta_star_upper;
  std::ostringstream os;
  os << "linear length >= " << linear_lower << " (min-rank over the fitting matrices); "
     << "beta <= beta* <= " << n << " - log2(" << gamma << ") ~ " << beta_star_upper
     << " (independent set of size " << gamma << " in the confusion graph); ratio >= "
     << g.ratio;
  g.chain = os.str();
  return g;
}

}  // namespace bcast
