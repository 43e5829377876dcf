#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bcast {

using word_t = std::uint64_t;

// Error codes shared verbatim with the C API (include/bcast.h keeps the
// same numbering).
enum class Errc : int {
  ok = 0,
  invalid_argument = 1,
  parse_error = 2,
  target_in_known_set = 3,
  index_out_of_range = 4,
  empty_network = 5,
  size_over_limit = 6,
  field_too_small = 7,
  improper_base = 8,
  unknown_construction = 9,
  unsupported_field = 10,
  search_space_too_large = 11,
  verify_failed = 12,
  overflow = 13,
  io_error = 14,
  budget_exhausted = 15,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

// Size limits. Dimensions are bit counts m of the ambient group Z2^m.
struct Limits {
  int hard_dim = 30;           // beyond this even adjacency oracles refuse
  int enumerate_dim = 22;      // full vertex enumeration (greedy coloring, covers, ...)
  std::size_t exact_mis_vertices = std::size_t{1} << 14;
  std::size_t exact_chi_vertices = std::size_t{1} << 10;
  std::uint64_t chi_node_budget = 40'000'000;  // per k-colorability probe
};

struct RunConfig {
  std::uint64_t seed = 1;
  std::uint64_t heuristic_budget = 200'000;
  int workers = 1;
  Limits limits;
};

// Counter-based splitmix64. One 64-bit seed, one 64-bit counter; the k-th
// draw depends on (seed, k) only, so runs are bit-reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = seed_ + (++counter_) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n); n > 0
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Exact rational with 64-bit parts, reduced, positive denominator.
// Large-integer work (codeword counts) lives in rates.cpp on cpp_int.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) fail(Errc::invalid_argument, "rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
};

std::string to_hex(word_t v, int bits);
word_t parse_hex(const std::string& s);
std::string to_bits(word_t v, int bits);  // x1 first, matching the block layout

inline int popcount64(word_t v) { return __builtin_popcountll(v); }

}  // namespace bcast
