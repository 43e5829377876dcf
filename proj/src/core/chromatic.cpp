#include <algorithm>

#include "search.hpp"

namespace bcast {

namespace {

std::vector<std::int32_t> dsatur_greedy(const DenseGraph& g) {
  std::vector<std::int32_t> colors(g.n, -1);
  std::vector<Bitset> forbidden;  // per color, vertices that cannot take it
  std::vector<int> sat(g.n, 0), deg(g.n, 0);
  for (int v = 0; v < g.n; ++v) deg[v] = static_cast<int>(g.adj[v].count());
  for (int step = 0; step < g.n; ++step) {
    int pick = -1;
    for (int v = 0; v < g.n; ++v) {
      if (colors[v] >= 0) continue;
      if (pick < 0 || sat[v] > sat[pick] || (sat[v] == sat[pick] && deg[v] > deg[pick]))
        pick = v;
    }
    int c = 0;
    while (c < static_cast<int>(forbidden.size()) && forbidden[c].test(pick)) ++c;
    if (c == static_cast<int>(forbidden.size())) forbidden.emplace_back(g.n);
    colors[pick] = c;
    forbidden[c] |= g.adj[pick];
    g.adj[pick].for_each([&](std::size_t u) {
      if (colors[u] < 0) {
        int s = 0;
        for (const auto& f : forbidden)
          if (f.test(u)) ++s;
        sat[u] = s;
      }
    });
  }
  return colors;
}

// k-colorability by DSATUR branch and bound. Color classes are capped at
// alpha_cap when the independence number is known; together with the
// compatible-vertex count this prunes by capacity: the open classes must
// still be able to absorb every uncolored vertex.
class KColorSolver {
 public:
  KColorSolver(const DenseGraph& g, int k, int alpha_cap, std::uint64_t budget)
      : g_(g), k_(k), alpha_cap_(alpha_cap), budget_(budget) {}

  // returns true + coloring if k-colorable, false if proven impossible
  bool solve(const std::vector<std::uint32_t>& clique, std::vector<std::int32_t>& out) {
    colors_.assign(g_.n, -1);
    forbidden_.assign(k_, Bitset(g_.n));
    class_size_.assign(k_, 0);
    uncolored_ = Bitset(g_.n);
    uncolored_.set_all();
    used_ = 0;
    if (static_cast<int>(clique.size()) > k_) return false;
    for (std::uint32_t v : clique) assign(v, used_);
    bool ok = recurse();
    if (ok) out = colors_;
    return ok;
  }

 private:
  void assign(std::uint32_t v, int c) {
    colors_[v] = c;
    uncolored_.reset(v);
    forbidden_[c] |= g_.adj[v];
    ++class_size_[c];
    if (c == used_) ++used_;
  }

  bool recurse() {
    if (++nodes_ > budget_) fail(Errc::budget_exhausted, "k-coloring budget exhausted");
    if (uncolored_.none()) return true;

    // pick max saturation among uncolored; detect dead vertices in the
    // same sweep and break saturation ties by uncolored degree
    int reach = std::min(used_ + 1, k_);
    int pick_sat = -1;
    std::size_t n_uncolored = 0;
    bool dead = false;
    ties_.clear();
    uncolored_.for_each([&](std::size_t v) {
      ++n_uncolored;
      if (dead) return;
      int s = 0;
      for (int c = 0; c < reach; ++c)
        if (forbidden_[c].test(v)) ++s;
      if (s == reach) {
        dead = true;
        return;
      }
      if (s > pick_sat) {
        pick_sat = s;
        ties_.clear();
      }
      if (s == pick_sat) ties_.push_back(static_cast<std::uint32_t>(v));
    });
    if (dead) return false;
    int pick = static_cast<int>(ties_.front());
    if (ties_.size() > 1) {
      std::size_t best_deg = 0;
      for (std::uint32_t v : ties_) {
        std::size_t d = g_.adj[v].count_and(uncolored_);
        if (d > best_deg) {
          best_deg = d;
          pick = static_cast<int>(v);
        }
      }
    }

    if (alpha_cap_ > 0) {
      std::size_t capacity = 0;
      for (int c = 0; c < used_; ++c) {
        std::size_t compat =
            n_uncolored - uncolored_.count_and(forbidden_[c]);
        std::size_t room = static_cast<std::size_t>(alpha_cap_ - class_size_[c]);
        capacity += std::min(room, compat);
        if (capacity >= n_uncolored) break;
      }
      if (capacity < n_uncolored && used_ < k_)
        capacity += static_cast<std::size_t>(k_ - used_) *
                    std::min<std::size_t>(alpha_cap_, n_uncolored);
      if (capacity < n_uncolored) return false;
    }

    auto saved_colors = colors_;
    auto saved_forbidden = forbidden_;
    auto saved_sizes = class_size_;
    auto saved_uncolored = uncolored_;
    int saved_used = used_;
    for (int c = 0; c < reach; ++c) {
      if (forbidden_[c].test(pick)) continue;
      if (alpha_cap_ > 0 && class_size_[c] >= alpha_cap_) continue;
      assign(pick, c);
      if (recurse()) return true;
      colors_ = saved_colors;
      forbidden_ = saved_forbidden;
      class_size_ = saved_sizes;
      uncolored_ = saved_uncolored;
      used_ = saved_used;
    }
    return false;
  }

  const DenseGraph& g_;
  int k_;
  int alpha_cap_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::int32_t> colors_;
  std::vector<Bitset> forbidden_;
  std::vector<int> class_size_;
  std::vector<std::uint32_t> ties_;
  Bitset uncolored_;
  int used_ = 0;
};

}  // namespace

ChromaticResult exact_chromatic(const DenseGraph& g, std::size_t vertex_limit, int alpha_hint,
                                std::uint64_t node_budget) {
  if (static_cast<std::size_t>(g.n) > vertex_limit)
    fail(Errc::size_over_limit, "graph too large for exact chromatic search");
  ChromaticResult res;
  if (g.n == 0) {
    res.exact = true;
    return res;
  }

  std::vector<std::uint32_t> clique;
  try {
    clique = max_clique(g, 0, node_budget);
  } catch (const Error& e) {
    if (e.code() != Errc::budget_exhausted) throw;
    clique.clear();  // fall back to a single-vertex seed
  }
  if (clique.empty()) clique.push_back(0);

  res.coloring = dsatur_greedy(g);
  res.upper = count_colors(res.coloring);
  res.lower = static_cast<int>(clique.size());
  if (alpha_hint > 0)
    res.lower = std::max(res.lower, static_cast<int>((g.n + alpha_hint - 1) / alpha_hint));

  int alpha_cap = alpha_hint;
  for (int k = res.lower; k < res.upper; ++k) {
    KColorSolver solver(g, k, alpha_cap, node_budget);
    std::vector<std::int32_t> coloring;
    bool sat;
    try {
      sat = solver.solve(clique, coloring);
    } catch (const Error& e) {
      if (e.code() != Errc::budget_exhausted) throw;
      res.lower = k;  // k-colorability undecided
      res.exact = false;
      return res;
    }
    if (sat) {
      res.coloring = std::move(coloring);
      res.upper = k;
      res.lower = k;
      res.exact = true;
      return res;
    }
  }
  res.lower = res.upper;
  res.exact = true;
  return res;
}

ChromaticResult exact_chromatic(const CayleyGraph& c, const Limits& limits, int alpha_hint) {
  DenseGraph g = DenseGraph::from_cayley(c, limits.exact_chi_vertices);
  return exact_chromatic(g, limits.exact_chi_vertices, alpha_hint, limits.chi_node_budget);
}

}  // namespace bcast
