#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"

namespace bcast {

// A word of n blocks, t bits each. Block i (1-based) occupies bit
// positions (i-1)*t .. i*t-1 of `bits`, least significant bit first.
struct Word {
  word_t bits = 0;
  int n = 0;
  int t = 1;

  Word() = default;
  Word(word_t bits_, int n_, int t_) : bits(bits_), n(n_), t(t_) {}

  word_t block(int i) const {  // i is 1-based
    return (bits >> ((i - 1) * t)) & ((word_t{1} << t) - 1);
  }

  friend Word operator^(const Word& a, const Word& b) {
    if (a.n != b.n || a.t != b.t) fail(Errc::invalid_argument, "xor of mismatched word shapes");
    return Word(a.bits ^ b.bits, a.n, a.t);
  }
  friend bool operator==(const Word& a, const Word& b) {
    return a.bits == b.bits && a.n == b.n && a.t == b.t;
  }
};

// One receiver: wants block `target`, already knows the blocks in `known`.
struct Edge {
  int target = 0;                // 1-based block index
  std::vector<int> known;        // sorted ascending, no duplicates

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.target == b.target && a.known == b.known;
  }
  friend bool operator<(const Edge& a, const Edge& b) {
    if (a.target != b.target) return a.target < b.target;
    return a.known < b.known;
  }
};

// The network H: n data blocks plus one edge per receiver. Duplicate
// receivers are retained in `edges`; canonical() collapses them.
struct BroadcastHypergraph {
  int n = 0;
  std::vector<Edge> edges;

  std::vector<Edge> canonical_edges() const;

  friend bool operator==(const BroadcastHypergraph& a, const BroadcastHypergraph& b) {
    return a.n == b.n && a.canonical_edges() == b.canonical_edges();
  }
};

struct ValidationIssue {
  Errc code;
  int edge_index;  // offending edge, -1 for whole-network problems
  std::string message;
};

// std::nullopt means every invariant holds.
std::optional<ValidationIssue> validate(const BroadcastHypergraph& h);
void validate_or_throw(const BroadcastHypergraph& h);

// Directed side-information graph: arc (i,j) means the receiver of block
// i knows block j.
struct SideInfoGraph {
  int n = 0;
  std::set<std::pair<int, int>> arcs;
  bool undirected = false;
};

void validate_or_throw(const SideInfoGraph& g);
BroadcastHypergraph from_side_info_graph(const SideInfoGraph& g);

BroadcastHypergraph disjoint_union(const BroadcastHypergraph& a, const BroadcastHypergraph& b);
BroadcastHypergraph k_copies(const BroadcastHypergraph& h, int k);

// relabel block i to perm[i-1] (perm is a 1-based permutation of 1..n)
BroadcastHypergraph relabel(const BroadcastHypergraph& h, const std::vector<int>& perm);

// ".bhg" text format:
//   blocks <n>
//   wants <i> knows <j1> <j2> ...
// '#' starts a comment. Serialization is canonical: deduplicated edges
// sorted by (target, known-set).
std::string to_bhg(const BroadcastHypergraph& h);
BroadcastHypergraph parse_bhg(const std::string& text);
BroadcastHypergraph load_bhg(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace bcast
