#include <algorithm>
#include <unordered_set>

#include "search.hpp"

namespace bcast {

namespace {

// Working state for iterated local search over a Cayley adjacency oracle.
// tight[v] counts solution members adjacent to v; a vertex is free when it
// is outside the solution and has no solution neighbour.
struct IlsState {
  const CayleyGraph& c;
  std::size_t n;
  Bitset in_sol;
  std::vector<std::uint32_t> sol, pos;
  std::vector<std::uint32_t> tight;
  std::vector<std::uint32_t> maybe_free;

  explicit IlsState(const CayleyGraph& cay)
      : c(cay), n(cay.vertex_count()), in_sol(n), pos(n, 0), tight(n, 0) {}

  void insert(std::uint32_t v) {
    in_sol.set(v);
    pos[v] = static_cast<std::uint32_t>(sol.size());
    sol.push_back(v);
    for (word_t g : c.generators) ++tight[v ^ g];
  }

  void remove(std::uint32_t v) {
    in_sol.reset(v);
    std::uint32_t last = sol.back();
    sol[pos[v]] = last;
    pos[last] = pos[v];
    sol.pop_back();
    for (word_t g : c.generators) {
      std::uint32_t u = static_cast<std::uint32_t>(v ^ g);
      if (--tight[u] == 0 && !in_sol.test(u)) maybe_free.push_back(u);
    }
  }

  bool is_free(std::uint32_t v) const { return !in_sol.test(v) && tight[v] == 0; }

  void drain_free() {
    while (!maybe_free.empty()) {
      std::uint32_t v = maybe_free.back();
      maybe_free.pop_back();
      if (is_free(v)) insert(v);
    }
  }

  // deterministic pseudo-random full scan: i -> (a*i + b) mod 2^m
  void greedy_fill(std::uint64_t a, std::uint64_t b) {
    a |= 1;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t v = static_cast<std::uint32_t>((a * i + b) & (n - 1));
      if (is_free(v)) insert(v);
    }
  }

  void load(const std::vector<word_t>& words) {
    while (!sol.empty()) remove(sol.back());
    maybe_free.clear();
    for (word_t w : words) insert(static_cast<std::uint32_t>(w));
  }
};

// Union-of-cosets seed: find a subgroup whose nonzero elements avoid the
// generators, then solve (or greedily fill) the quotient conflict graph.
// Large independent sets in these vertex-transitive graphs tend to be
// close to coset unions, which is what makes this a good starting point.
std::vector<word_t> subgroup_coset_seed(const CayleyGraph& c, int max_rank) {
  std::size_t n = c.vertex_count();
  std::vector<word_t> nongens;
  for (word_t w = 1; w < n && nongens.size() < 64; ++w)
    if (!c.is_generator(w)) nongens.push_back(w);

  std::vector<word_t> best;
  auto consider = [&](const std::vector<word_t>& subgroup) {
    // quotient cells: canonical rep = minimum of the coset
    std::size_t cell_count = n / subgroup.size();
    if (cell_count > 4096) return;
    std::vector<word_t> reps;
    reps.reserve(cell_count);
    Bitset seen(n);
    for (word_t x = 0; x < n; ++x) {
      if (seen.test(x)) continue;
      reps.push_back(x);
      for (word_t v : subgroup) seen.set(x ^ v);
    }
    DenseGraph q;
    q.n = static_cast<int>(reps.size());
    q.adj.assign(q.n, Bitset(q.n));
    for (int i = 0; i < q.n; ++i)
      for (int j = i + 1; j < q.n; ++j) {
        word_t d = reps[i] ^ reps[j];
        bool conflict = false;
        for (word_t v : subgroup)
          if (c.is_generator(d ^ v)) { conflict = true; break; }
        if (conflict) {
          q.adj[i].set(j);
          q.adj[j].set(i);
        }
      }
    std::vector<std::uint32_t> cells;
    if (q.n <= 128) {
      try {
        cells = max_independent_set_exact(q, false, 2'000'000);
      } catch (const Error&) {
        cells.clear();
      }
    }
    if (cells.empty()) {  // greedy fallback on bigger quotients
      Bitset blocked(q.n);
      for (int v = 0; v < q.n; ++v)
        if (!blocked.test(v)) {
          cells.push_back(v);
          blocked |= q.adj[v];
        }
    }
    if (cells.size() * subgroup.size() > best.size()) {
      best.clear();
      for (auto cell : cells)
        for (word_t v : subgroup) best.push_back(reps[cell] ^ v);
    }
  };

  // rank-1,2,3 spans of small non-generators, deduplicated
  std::unordered_set<word_t> seen_spans;
  auto span_ok = [&](std::vector<word_t>& subgroup) {
    std::sort(subgroup.begin(), subgroup.end());
    if (std::adjacent_find(subgroup.begin(), subgroup.end()) != subgroup.end())
      return false;  // dependent basis
    for (word_t v : subgroup)
      if (v != 0 && c.is_generator(v)) return false;
    word_t key = 0;
    for (word_t v : subgroup) key = key * 0x100000001B3ULL + v;
    return seen_spans.insert(key).second;
  };

  std::size_t tried = 0;
  for (std::size_t i = 0; i < nongens.size() && max_rank >= 1; ++i) {
    std::vector<word_t> sub = {0, nongens[i]};
    if (span_ok(sub)) consider(sub);
    for (std::size_t j = i + 1; j < nongens.size() && max_rank >= 2; ++j) {
      std::vector<word_t> sub2 = {0, nongens[i], nongens[j], nongens[i] ^ nongens[j]};
      if (!span_ok(sub2)) continue;
      consider(sub2);
      for (std::size_t k = j + 1; k < nongens.size() && max_rank >= 3; ++k) {
        if (++tried > 20000) break;
        word_t a = nongens[i], b = nongens[j], d = nongens[k];
        std::vector<word_t> sub3 = {0, a, b, d, a ^ b, a ^ d, b ^ d, a ^ b ^ d};
        if (!span_ok(sub3)) continue;
        consider(sub3);
      }
    }
  }
  std::sort(best.begin(), best.end());
  best.erase(std::unique(best.begin(), best.end()), best.end());
  return best;
}

}  // namespace

IndependentSetCert independent_set_heuristic(const CayleyGraph& c, std::uint64_t seed,
                                             std::uint64_t budget, const Limits& limits,
                                             const IndependentSetCert* warm_start) {
  validate_or_throw(c, limits);
  if (c.m > 26) fail(Errc::size_over_limit, "heuristic arrays need m <= 26");

  IndependentSetCert cert;
  cert.m = c.m;
  cert.exact = false;
  cert.note = "iterated local search, seed " + std::to_string(seed);
  if (budget == 0) {
    cert.words = {0};
    return cert;
  }

  IlsState st(c);
  std::vector<word_t> best;

  if (warm_start) {
    if (warm_start->m != c.m) fail(Errc::invalid_argument, "warm start dimension mismatch");
    if (verify_independent_set(c, warm_start->words))
      fail(Errc::improper_base, "warm start is not independent");
    best = warm_start->words;
  }
  auto seedset = subgroup_coset_seed(c, 3);
  if (seedset.size() > best.size()) best = seedset;

  Rng rng(seed);
  st.load(best);
  st.greedy_fill(rng.next(), rng.next());
  if (st.sol.size() > best.size()) {
    best.assign(st.sol.begin(), st.sol.end());
    std::sort(best.begin(), best.end());
  }

  std::vector<std::uint32_t> one_tight;
  std::uint64_t stall = 0;
  for (std::uint64_t iter = 0; iter < budget; ++iter) {
    bool improved = false;
    if (!st.sol.empty()) {
      std::uint32_t v = st.sol[rng.below(st.sol.size())];
      // neighbours of v whose only solution neighbour is v
      one_tight.clear();
      for (word_t g : c.generators) {
        std::uint32_t u = static_cast<std::uint32_t>(v ^ g);
        if (!st.in_sol.test(u) && st.tight[u] == 1) one_tight.push_back(u);
      }
      bool swapped = false;
      for (std::size_t i = 0; i < one_tight.size() && !swapped; ++i)
        for (std::size_t j = i + 1; j < one_tight.size() && !swapped; ++j)
          if (!c.adjacent(one_tight[i], one_tight[j])) {
            st.remove(v);
            st.insert(one_tight[i]);
            st.insert(one_tight[j]);
            st.drain_free();
            swapped = true;
            improved = true;
          }
      if (!swapped && !one_tight.empty() && (rng.next() & 1)) {
        // sideways (1,1) swap keeps the size but moves the search
        std::uint32_t u = one_tight[rng.below(one_tight.size())];
        st.remove(v);
        st.insert(u);
        st.drain_free();
      }
    }
    if ((iter & 15) == 15) {
      // perturbation: force a random outside vertex in
      std::uint32_t u = static_cast<std::uint32_t>(rng.below(st.n));
      if (!st.in_sol.test(u) && st.tight[u] <= 2 + (rng.next() & 1)) {
        for (word_t g : c.generators) {
          std::uint32_t w = static_cast<std::uint32_t>(u ^ g);
          if (st.in_sol.test(w)) st.remove(w);
        }
        st.insert(u);
        st.drain_free();
      }
    }
    if (st.sol.size() > best.size()) {
      best.assign(st.sol.begin(), st.sol.end());
      std::sort(best.begin(), best.end());
      improved = true;
    }
    stall = improved ? 0 : stall + 1;
    if (stall > 0 && stall % 4096 == 0) {
      // translate kick: greedily merge a coset translate of the incumbent
      word_t shift = rng.below(st.n - 1) + 1;
      st.load(best);
      for (word_t w : best) {
        std::uint32_t u = static_cast<std::uint32_t>(w ^ shift);
        if (st.is_free(u)) st.insert(u);
      }
      st.drain_free();
    }
  }

  cert.words = best;
  return cert;
}

}  // namespace bcast
