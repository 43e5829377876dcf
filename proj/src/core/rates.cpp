#include "rates.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace bcast {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

int ceil_log2_u64(std::uint64_t v) {
  int bits = 0;
  while ((std::uint64_t{1} << bits) < v) ++bits;
  return bits;
}

// ceil(x) for x known to long-double precision; refuses when x sits too
// close to an integer to call
std::uint64_t guarded_ceil(long double x) {
  long double c = std::ceil(x);
  if (c - x < 1e-9L && c != x)
    fail(Errc::overflow, "ceiling of transcendental expression too close to an integer");
  return static_cast<std::uint64_t>(c);
}

}  // namespace

int alpha_arrow(const BroadcastHypergraph& h, const Limits& limits) {
  validate_or_throw(h);
  if (h.n > limits.hard_dim) fail(Errc::size_over_limit, "alpha_arrow is exact up to n = 30");
  auto edges = h.canonical_edges();
  std::vector<std::vector<word_t>> masks(h.n + 1);
  for (const Edge& e : edges) {
    word_t mask = 0;
    for (int j : e.known) mask |= word_t{1} << (j - 1);
    masks[e.target].push_back(mask);
  }

  int best = 0;
  // include/exclude on vertices in index order; adding v must leave every
  // chosen vertex an edge whose known set avoids the chosen set
  auto feasible = [&](word_t chosen) {
    word_t rest = chosen;
    while (rest) {
      int v = __builtin_ctzll(rest) + 1;
      rest &= rest - 1;
      bool alive = false;
      for (word_t mask : masks[v])
        if ((mask & chosen) == 0) { alive = true; break; }
      if (!alive) return false;
    }
    return true;
  };
  struct Frame { int v; word_t chosen; int size; };
  std::vector<Frame> stack{{1, 0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.size + (h.n - f.v + 1) <= best) continue;
    if (f.v > h.n) {
      best = std::max(best, f.size);
      continue;
    }
    // exclude first so the include branch is explored first (LIFO)
    stack.push_back({f.v + 1, f.chosen, f.size});
    word_t with_v = f.chosen | (word_t{1} << (f.v - 1));
    if (!masks[f.v].empty() && feasible(with_v))
      stack.push_back({f.v + 1, with_v, f.size + 1});
  }
  return best;
}

BetaT beta_t(const BroadcastHypergraph& h, int t, const RunConfig& config) {
  const Limits& limits = config.limits;
  CayleyGraph conf = confusion_generators(h, t, limits);
  BetaT out;
  out.t = t;
  if (conf.generators.empty()) {  // edgeless confusion graph, chi = 1
    out.exact = true;
    out.chi_lower = out.chi_upper = 1;
    return out;
  }

  if (conf.vertex_count() <= limits.exact_chi_vertices) {
    int alpha_hint = 0;
    if (conf.vertex_count() <= limits.exact_mis_vertices)
      alpha_hint = static_cast<int>(max_independent_set_exact(conf, limits).size());
    ChromaticResult chi = exact_chromatic(conf, limits, alpha_hint);
    out.chi_lower = chi.lower;
    out.chi_upper = chi.upper;
    out.exact = chi.exact;
    out.lower_bits = ceil_log2_u64(chi.lower);
    out.upper_bits = ceil_log2_u64(chi.upper);
    return out;
  }

  auto clique = find_clique(conf, 0);
  out.chi_lower = static_cast<int>(std::max<std::size_t>(clique.size(), 1));
  if (conf.m <= limits.enumerate_dim) {
    auto greedy = greedy_coloring(conf, limits);
    out.chi_upper = count_colors(greedy);
  } else {
    out.chi_upper = 1 << std::min(conf.m, 62);  // trivial bound: one color per word
  }
  out.exact = false;
  out.lower_bits = ceil_log2_u64(out.chi_lower);
  out.upper_bits = ceil_log2_u64(out.chi_upper);
  return out;
}

double BetaStar::value() const { return n - std::log2(static_cast<double>(gamma)); }

std::string BetaStar::expr() const {
  return std::to_string(n) + " - log2(" + std::to_string(gamma) + ")";
}

BetaStar beta_star(const BroadcastHypergraph& h, const RunConfig& config) {
  const Limits& limits = config.limits;
  CayleyGraph conf = confusion_generators(h, 1, limits);
  BetaStar out;
  out.n = h.n;
  if (conf.vertex_count() <= limits.exact_mis_vertices) {
    out.gamma = max_independent_set_exact(conf, limits).size();
    out.gamma_exact = true;
  } else {
    auto cert = independent_set_heuristic(conf, config.seed, config.heuristic_budget, limits);
    out.gamma = cert.size();
    out.gamma_exact = false;
  }
  return out;
}

CodewordBounds codeword_bounds(int n, std::uint64_t gamma, int k) {
  if (n < 1 || n > 30 || k < 1 || k > 64) fail(Errc::overflow, "codeword bounds support n <= 30, k <= 64");
  if (gamma == 0 || gamma > (std::uint64_t{1} << n)) fail(Errc::invalid_argument, "bad gamma");
  CodewordBounds b;
  b.k = k;
  bigint num = pow(bigint(2), n * k);
  bigint den = pow(bigint(gamma), k);
  bigint g = gcd(num, den);
  b.lower_num = num / g;
  b.lower_den = den / g;
  b.lower_decimal = fixed6(std::pow(std::ldexp(1.0, n) / static_cast<double>(gamma), k));

  // eq.(2) upper: ceil(lower * k n ln 2). The ln 2 factor is enclosed from
  // above at 32 fractional bits, so `upper` is a certified upper bound
  // (and equals the paper's value whenever the product is not razor-close
  // to an integer).
  long double f = static_cast<long double>(k) * n * 0.6931471805599453094L;
  std::uint64_t f_fixed = static_cast<std::uint64_t>(std::ceil(std::ldexp(f, 32))) + 1;
  bigint f_scaled = f_fixed;
  b.upper = (b.lower_num * f_scaled + (b.lower_den << 32) - 1) / (b.lower_den << 32);

  // Remark 2.1 alternate: integer factor ceil(1 + k ln gamma), so the
  // bound itself is an exact rational ceiling.
  long double alt =
      1.0L + static_cast<long double>(k) * std::log(static_cast<long double>(gamma));
  b.alt_factor = gamma == 1 ? 1 : guarded_ceil(alt);
  b.upper_alt = (b.lower_num * b.alt_factor + b.lower_den - 1) / b.lower_den;
  return b;
}

RateReport rate_report(const BroadcastHypergraph& h, int t_max, const std::vector<int>& bound_ks,
                       const RunConfig& config) {
  validate_or_throw(h);
  RateReport r;
  r.n = h.n;
  if (h.n <= config.limits.hard_dim) r.alpha_arrow_value = alpha_arrow(h, config.limits);
  for (int t = 1; t <= t_max; ++t) {
    if (static_cast<long long>(h.n) * t > config.limits.hard_dim) {
      r.chain_notes.push_back("beta_" + std::to_string(t) + " skipped: dimension over limit");
      break;
    }
    r.beta_by_t.push_back(beta_t(h, t, config));
  }
  r.beta_star_value = beta_star(h, config);
  for (int k : bound_ks)
    r.bounds_by_k.emplace(k, codeword_bounds(h.n, r.beta_star_value.gamma, k));

  // eq.(1) chain among exact entries, compared through exact integers:
  //   alpha_arrow <= beta* <= beta_1    and    beta_t / t >= beta*
  r.chain_ok = true;
  const BetaStar& bs = r.beta_star_value;
  if (bs.gamma_exact && r.alpha_arrow_value) {
    // alpha <= n - log2 gamma  <=>  2^alpha * gamma <= 2^n
    bigint lhs = pow(bigint(2), *r.alpha_arrow_value) * bs.gamma;
    if (lhs > pow(bigint(2), bs.n)) {
      r.chain_ok = false;
      r.chain_notes.push_back("violation: alpha_arrow > beta*");
    }
  }
  for (const BetaT& bt : r.beta_by_t) {
    if (!bt.exact || !bs.gamma_exact) continue;
    // beta_t / t >= n - log2 gamma  <=>  2^beta_t * gamma^t >= 2^(n t)
    bigint lhs = pow(bigint(2), bt.upper_bits) * pow(bigint(bs.gamma), bt.t);
    if (lhs < pow(bigint(2), bs.n * bt.t)) {
      r.chain_ok = false;
      r.chain_notes.push_back("violation: beta_" + std::to_string(bt.t) + "/t < beta*");
    }
  }
  return r;
}

bool ratio_at_least(int linear_lower, int n, std::uint64_t gamma, int p, int q) {
  // L / (n - log2 g) >= p/q  <=>  g^p >= 2^(p n - L q)   (denominator > 0)
  if (gamma == 0 || gamma >= (std::uint64_t{1} << n))
    fail(Errc::invalid_argument, "gamma must satisfy 1 <= gamma < 2^n");
  long long expo = static_cast<long long>(p) * n - static_cast<long long>(linear_lower) * q;
  if (expo <= 0) return true;
  return pow(bigint(gamma), p) >= pow(bigint(2), static_cast<unsigned>(expo));
}

std::string report_to_json(const RateReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  if (!r.description.empty()) j["description"] = r.description;
  if (r.alpha_arrow_value) j["alpha_arrow"] = *r.alpha_arrow_value;
  nlohmann::json jt;
  for (const BetaT& bt : r.beta_by_t) {
    nlohmann::json e;
    e["exact"] = bt.exact;
    e["bits_lower"] = bt.lower_bits;
    e["bits_upper"] = bt.upper_bits;
    e["chi_lower"] = bt.chi_lower;
    e["chi_upper"] = bt.chi_upper;
    if (bt.exact) e["value"] = bt.upper_bits;
    jt[std::to_string(bt.t)] = e;
    if (bt.t == 1 && bt.exact) j["beta1"] = bt.upper_bits;
  }
  j["beta_t"] = jt;
  j["beta_star"] = {{"gamma", r.beta_star_value.gamma},
                    {"exact", r.beta_star_value.gamma_exact},
                    {"expr", r.beta_star_value.expr()},
                    {"value", fixed6(r.beta_star_value.value())}};
  nlohmann::json jb;
  for (const auto& [k, b] : r.bounds_by_k) {
    jb[std::to_string(k)] = {{"lower", b.lower_num.str() + "/" + b.lower_den.str()},
                             {"lower_decimal", b.lower_decimal},
                             {"upper", b.upper.str()},
                             {"upper_alt", b.upper_alt.str()},
                             {"alt_factor", b.alt_factor}};
  }
  j["bounds"] = jb;
  j["chain_ok"] = r.chain_ok;
  if (!r.chain_notes.empty()) j["notes"] = r.chain_notes;
  return j.dump(2) + "\n";
}

std::string report_to_text(const RateReport& r) {
  std::ostringstream os;
  os << "blocks: " << r.n << "\n";
  if (r.alpha_arrow_value) os << "alpha_arrow: " << *r.alpha_arrow_value << "\n";
  for (const BetaT& bt : r.beta_by_t) {
    os << "beta_" << bt.t << ": ";
    if (bt.exact)
      os << bt.upper_bits << " bits (chi = " << bt.chi_upper << ", exact)";
    else
      os << "[" << bt.lower_bits << ", " << bt.upper_bits << "] bits (chi in ["
         << bt.chi_lower << ", " << bt.chi_upper << "])";
    os << "\n";
  }
  os << "beta_star: " << r.beta_star_value.expr() << " ~ " << fixed6(r.beta_star_value.value())
     << (r.beta_star_value.gamma_exact ? " (gamma exact)" : " (upper bound, gamma heuristic)")
     << "\n";
  for (const auto& [k, b] : r.bounds_by_k)
    os << "codewords for " << k << " copies: >= " << b.lower_num << "/" << b.lower_den << " ("
       << b.lower_decimal << "), <= " << b.upper << ", alt <= " << b.upper_alt << "\n";
  os << "chain_ok: " << (r.chain_ok ? "yes" : "no") << "\n";
  for (const auto& note : r.chain_notes) os << "note: " << note << "\n";
  return os.str();
}

}  // namespace bcast
