#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>

#include "search.hpp"

namespace bcast {

using bigint = boost::multiprecision::cpp_int;

// largest S such that every member has a receiver edge whose known set
// avoids S; a lower bound on the broadcast rate
int alpha_arrow(const BroadcastHypergraph& h, const Limits& limits = {});

// beta_t = ceil(log2 chi(confusion_t)); degrades to the
// [log2 clique, log2 greedy] interval when the exact solver is out of range
struct BetaT {
  int t = 1;
  int lower_bits = 0;
  int upper_bits = 0;
  bool exact = false;  // lower == upper and chi was solved exactly
  int chi_lower = 0;   // bounds on chi itself
  int chi_upper = 0;
};

BetaT beta_t(const BroadcastHypergraph& h, int t, const RunConfig& config = {});

// beta* = n - log2 gamma, gamma = alpha of the t=1 confusion graph.
// gamma_exact=false means gamma is only a lower bound, making the stored
// expression an upper bound on beta*.
struct BetaStar {
  int n = 0;
  std::uint64_t gamma = 0;
  bool gamma_exact = false;
  double value() const;
  std::string expr() const;  // "n - log2(gamma)"
};

BetaStar beta_star(const BroadcastHypergraph& h, const RunConfig& config = {});

// Theorem 1.1 codeword-count bounds for the optimal code of k.H, plus the
// alternate upper bound (2^n/gamma)^k * ceil(1 + k ln gamma).
struct CodewordBounds {
  int k = 1;
  bigint lower_num, lower_den;  // (2^n/gamma)^k, reduced
  bigint upper;                 // ceil(lower * k n ln 2), certified upward
  bigint upper_alt;             // lower * ceil(1 + k ln gamma), exact ceiling
  std::uint64_t alt_factor = 0;
  std::string lower_decimal;
};

CodewordBounds codeword_bounds(int n, std::uint64_t gamma, int k);

struct RateReport {
  std::string description;
  int n = 0;
  std::optional<int> alpha_arrow_value;
  std::vector<BetaT> beta_by_t;
  BetaStar beta_star_value;
  std::map<int, CodewordBounds> bounds_by_k;
  bool chain_ok = false;
  std::vector<std::string> chain_notes;
};

RateReport rate_report(const BroadcastHypergraph& h, int t_max,
                       const std::vector<int>& bound_ks = {1},
                       const RunConfig& config = {});

std::string report_to_json(const RateReport& r);
std::string report_to_text(const RateReport& r);

// exact comparison ratio >= p/q where ratio = linear_lower / (n - log2 gamma)
bool ratio_at_least(int linear_lower, int n, std::uint64_t gamma, int p, int q);

}  // namespace bcast
