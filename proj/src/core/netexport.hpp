#pragma once

#include <string>
#include <vector>

#include "model.hpp"

namespace bcast {

// The reduction of a broadcast network to a network-coding instance: one
// source per block, one sink per receiver, and a single finite-capacity
// bottleneck edge (u,w). "Infinite" capacity is a token, never a number.
struct NetworkInstance {
  struct Node {
    std::string id;
    std::string kind;  // source | sink | relay
  };
  struct NetEdge {
    std::string from, to;
    bool infinite = true;
    std::int64_t capacity = 0;  // meaningful when !infinite
  };
  struct Demand {
    std::string sink, source;
    int block = 0;
  };

  std::vector<Node> nodes;
  std::vector<NetEdge> edges;
  std::vector<Demand> demands;

  friend bool operator==(const NetworkInstance& a, const NetworkInstance& b);
};

NetworkInstance to_network(const BroadcastHypergraph& h, std::int64_t capacity);

std::string network_to_json(const NetworkInstance& net);
NetworkInstance parse_network_json(const std::string& text);
std::string network_to_dot(const NetworkInstance& net);

// Corollary 1.5 style gap between the linear lower bound and the beta*
// upper bound, with the provenance chain rendered for the report.
struct GapReport {
  int linear_lower = 0;
  int n = 0;
  std::uint64_t gamma = 0;
  double ratio = 0;
  std::string chain;
};

GapReport gap_report(int linear_lower, int n, std::uint64_t gamma);

}  // namespace bcast
