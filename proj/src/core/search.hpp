#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "cayley.hpp"
#include "instances.hpp"

namespace bcast {

// Explicit adjacency-matrix graph for the exact searches.
struct DenseGraph {
  int n = 0;
  std::vector<Bitset> adj;

  static DenseGraph from_cayley(const CayleyGraph& c, std::size_t vertex_limit);
  static DenseGraph from_edges(const ExplicitGraph& g);

  DenseGraph complement() const;
  bool adjacent(int u, int v) const { return adj[u].test(v); }
};

// ---- certificates ----------------------------------------------------

struct IndependentSetCert {
  int m = 0;                   // vertices are words in Z2^m
  std::vector<word_t> words;   // sorted ascending
  bool exact = false;          // claimed maximum (exact search finished)
  std::string note;

  std::size_t size() const { return words.size(); }
};

struct ColoringCert {
  enum class Kind { table, construction };
  Kind kind = Kind::table;
  int m = 0;
  std::vector<std::int32_t> table;     // 2^m entries when kind == table
  std::string name;                    // construction name
  std::vector<std::string> params;     // construction parameters
  std::string base_dir;                // directory for file-valued params
  int color_count = 0;
};

std::string to_iset(const IndependentSetCert& c);
IndependentSetCert parse_iset(const std::string& text);
std::string to_col(const ColoringCert& c);
ColoringCert parse_col(const std::string& text, const std::string& base_dir = "");

// ---- exact searches ---------------------------------------------------

// maximum clique; target > 0 stops as soon as a clique that size is found
std::vector<std::uint32_t> max_clique(const DenseGraph& g, std::size_t target = 0,
                                      std::uint64_t node_budget = ~std::uint64_t{0});

std::optional<std::vector<std::uint32_t>> find_clique(const DenseGraph& g, std::size_t target);

// clique search inside {0} + generators; for a Cayley graph a maximum
// clique can always be translated to contain vertex 0
std::vector<word_t> find_clique(const CayleyGraph& c, std::size_t target);

// exact maximum independent set (branch and bound on the complement);
// vertex_transitive allows fixing vertex 0 into the solution
std::vector<std::uint32_t> max_independent_set_exact(const DenseGraph& g,
                                                     bool vertex_transitive = false,
                                                     std::uint64_t node_budget = ~std::uint64_t{0});

IndependentSetCert max_independent_set_exact(const CayleyGraph& c, const Limits& limits = {});

// ---- colorings ---------------------------------------------------------

// sequential greedy in the supplied vertex order (identity if empty)
std::vector<std::int32_t> greedy_coloring(const DenseGraph& g,
                                          const std::vector<std::uint32_t>& order = {});

// greedy over all 2^m words without materializing adjacency rows
std::vector<std::int32_t> greedy_coloring(const CayleyGraph& c, const Limits& limits = {});

struct ChromaticResult {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  std::vector<std::int32_t> coloring;  // proper with `upper` colors

  int chi() const { return upper; }
};

// iterative k-colorability with DSATUR branching, clique seeding and, when
// alpha_hint > 0, independence-capacity pruning
ChromaticResult exact_chromatic(const DenseGraph& g, std::size_t vertex_limit,
                                int alpha_hint = 0,
                                std::uint64_t node_budget = 40'000'000);

ChromaticResult exact_chromatic(const CayleyGraph& c, const Limits& limits = {},
                                int alpha_hint = 0);

// ---- verification -----------------------------------------------------

using WitnessEdge = std::pair<word_t, word_t>;

std::optional<WitnessEdge> verify_independent_set(const CayleyGraph& c,
                                                  const std::vector<word_t>& words,
                                                  int workers = 1);
std::optional<WitnessEdge> verify_independent_set(const CayleyGraph& c,
                                                  const IndependentSetCert& cert,
                                                  int workers = 1);
std::optional<WitnessEdge> verify_independent_set(const DenseGraph& g,
                                                  const std::vector<std::uint32_t>& vs);

// expands named constructions (see codes.hpp) before checking
std::optional<WitnessEdge> verify_coloring(const CayleyGraph& c, const ColoringCert& cert,
                                           const Limits& limits = {}, int workers = 1);
std::optional<WitnessEdge> verify_coloring(const DenseGraph& g,
                                           const std::vector<std::int32_t>& colors);

int count_colors(const std::vector<std::int32_t>& colors);

// chi_f = |V| / alpha, valid for vertex-transitive graphs
Rational fractional_chromatic_vt(const CayleyGraph& c, std::size_t alpha);

// property (ii) style cover by random translates of an independent set
ColoringCert random_translate_cover(const CayleyGraph& c, const IndependentSetCert& iset,
                                    std::uint64_t seed, const Limits& limits = {});

// ---- heuristic search ---------------------------------------------------

// Iterated local search over the adjacency oracle, seeded from subgroup
// coset unions; deterministic for a fixed (seed, budget) pair and
// monotone in budget. budget counts local-search iterations.
IndependentSetCert independent_set_heuristic(const CayleyGraph& c, std::uint64_t seed,
                                             std::uint64_t budget, const Limits& limits = {},
                                             const IndependentSetCert* warm_start = nullptr);

}  // namespace bcast
