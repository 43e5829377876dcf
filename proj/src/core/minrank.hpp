#pragma once

#include <array>
#include <optional>

#include "instances.hpp"

namespace bcast {

// GF(q) for q in {2,3,4,5,7,8} with full operation tables; the extension
// fields reuse the GF(2^t) reduction polynomials from the codes module.
struct SmallField {
  int q = 2;
  std::array<std::array<std::uint8_t, 8>, 8> add{}, mul{};
  std::array<std::uint8_t, 8> neg{}, inv{};

  static SmallField make(int q);
};

using Matrix = std::vector<std::vector<int>>;

// nonzero diagonal, zero at non-edges, free at edges
bool fits(const Matrix& a, const ExplicitGraph& g);

int rank_gf(const Matrix& a, int q);

struct MinRankResult {
  bool found = false;
  int rank = 0;          // valid when found
  int r_max = 0;
  Matrix witness;        // fitting matrix of the reported rank
};

// Smallest r <= r_max admitting a fitting matrix of rank <= r. Enumerates
// rank-r row spaces as reduced row echelon forms, then fills each matrix
// row independently; per-vertex constraints decouple given the row space.
MinRankResult min_rank_search(const ExplicitGraph& g, int q, int r_max,
                              std::uint64_t op_budget = 2'000'000'000ULL);

// Claim A.1: no matrix fitting an odd antihole has rank <= 2. Returns a
// counterexample matrix if the exhaustive run ever finds one.
std::optional<Matrix> antihole_rank2_refute(int m, int q);

// ".mat": `field GF(q)` / `size n` / n rows of n entries
std::string to_mat(const Matrix& a, int q);
std::pair<Matrix, int> parse_mat(const std::string& text);

}  // namespace bcast
