#pragma once

#include <vector>

#include "model.hpp"

namespace bcast {

// Cayley graph over Z2^k given by its generator set. Used both for the
// side-information layer of the pair-miss construction and for the
// Hamming threshold graphs.
struct PairMissSpec {
  int k = 0;
  std::vector<word_t> generators;  // nonzero, sorted, distinct
};

void validate_or_throw(const PairMissSpec& spec);

// cycle: receiver i knows its two cyclic neighbours
BroadcastHypergraph cycle_instance(int n);

// odd antihole: receiver i knows everything except i-1, i, i+1
BroadcastHypergraph antihole_instance(int m);

// all nonzero elements of Z2^k; one receiver per ordered pair (i,j),
// missing exactly blocks i and j
BroadcastHypergraph two_missing_instance(int k);

// all 2^k group elements as blocks; receivers missing exactly two blocks,
// one pair per Cayley edge of the side-information graph
BroadcastHypergraph pair_miss_instance(const PairMissSpec& spec);

// generators = all vectors of Hamming weight >= d
PairMissSpec hamming_threshold_graph(int k, int d);

// Simple undirected graph as an edge list over 0-based vertices.
struct ExplicitGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (u,v), u < v, sorted
};

// vertices are the s-subsets of {1..k} in lexicographic order of their
// sorted element tuples; edges join disjoint subsets
ExplicitGraph kneser_graph(int k, int s);

// vertex id -> subset bitmask, same order kneser_graph uses
std::vector<word_t> kneser_vertex_masks(int k, int s);

// complement of the n-cycle (used by the min-rank module)
ExplicitGraph antihole_graph(int m);

// ".elg": `vertices <n>` then `edge <u> <v>` lines, 1-based
std::string to_elg(const ExplicitGraph& g);
ExplicitGraph parse_elg(const std::string& text);

}  // namespace bcast
