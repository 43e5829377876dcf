#include <algorithm>

#include "search.hpp"

namespace bcast {

namespace {

// Tomita-style maximum clique: greedy coloring of the candidate set gives
// the bound, candidates are expanded in reverse color order. Entirely
// deterministic: vertices are renumbered once by non-increasing degree,
// ties by original index.
class CliqueSolver {
 public:
  CliqueSolver(const DenseGraph& g, std::size_t target, std::uint64_t budget)
      : g_(g), target_(target), budget_(budget) {}

  std::vector<std::uint32_t> run(const std::vector<std::uint32_t>& seed, const Bitset& cands) {
    best_.clear();
    cur_ = seed;
    base_ = seed.size();
    expand(cands);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  void expand(const Bitset& p) {
    if (++nodes_ > budget_) fail(Errc::budget_exhausted, "clique search budget exhausted");
    if (done_) return;
    if (p.none()) {
      if (cur_.size() > best_.size()) {
        best_ = cur_;
        if (target_ > 0 && best_.size() >= target_) done_ = true;
      }
      return;
    }
    // greedy coloring of p; order[] ends up grouped by ascending color
    order_.clear();
    bound_.clear();
    Bitset rest = p;
    int color = 0;
    while (rest.any()) {
      ++color;
      Bitset cls = rest;
      while (cls.any()) {
        std::uint32_t v = static_cast<std::uint32_t>(cls.next(0));
        cls.reset(v);
        cls.and_not(g_.adj[v]);
        rest.reset(v);
        order_.push_back(v);
        bound_.push_back(color);
      }
    }
    Bitset live = p;
    for (std::size_t i = order_.size(); i-- > 0;) {
      std::uint32_t v = order_[i];
      std::size_t goal = target_ > 0 ? std::min(target_, best_.size() + 1) : best_.size() + 1;
      if (cur_.size() + bound_[i] < goal) return;
      Bitset next = live;
      next &= g_.adj[v];
      cur_.push_back(v);
      expand(next);
      cur_.pop_back();
      if (done_) return;
      live.reset(v);
    }
  }

  const DenseGraph& g_;
  std::size_t target_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool done_ = false;
  std::size_t base_ = 0;
  std::vector<std::uint32_t> cur_, best_;
  std::vector<std::uint32_t> order_;
  std::vector<int> bound_;
};

}  // namespace

std::vector<std::uint32_t> max_clique(const DenseGraph& g, std::size_t target,
                                      std::uint64_t node_budget) {
  Bitset all(g.n);
  all.set_all();
  CliqueSolver solver(g, target, node_budget);
  return solver.run({}, all);
}

std::optional<std::vector<std::uint32_t>> find_clique(const DenseGraph& g, std::size_t target) {
  auto clique = max_clique(g, target);
  if (clique.size() >= target) return clique;
  return std::nullopt;
}

std::vector<word_t> find_clique(const CayleyGraph& c, std::size_t target) {
  // restrict to {0} + generators; any clique translates to one through 0
  std::size_t k = c.generators.size();
  if (k + 1 > 8192) fail(Errc::size_over_limit, "generator set too large for clique search");
  DenseGraph g;
  g.n = static_cast<int>(k + 1);
  g.adj.assign(g.n, Bitset(g.n));
  for (std::size_t i = 0; i < k; ++i) {
    g.adj[0].set(i + 1);
    g.adj[i + 1].set(0);
    for (std::size_t j = i + 1; j < k; ++j)
      if (c.is_generator(c.generators[i] ^ c.generators[j])) {
        g.adj[i + 1].set(j + 1);
        g.adj[j + 1].set(i + 1);
      }
  }
  auto clique = max_clique(g, target);
  std::vector<word_t> words;
  words.reserve(clique.size());
  for (auto v : clique) words.push_back(v == 0 ? 0 : c.generators[v - 1]);
  std::sort(words.begin(), words.end());
  if (target > 0 && words.size() < target) words.clear();
  return words;
}

std::vector<std::uint32_t> max_independent_set_exact(const DenseGraph& g, bool vertex_transitive,
                                                     std::uint64_t node_budget) {
  DenseGraph comp = g.complement();
  if (vertex_transitive) {
    // some maximum independent set contains vertex 0
    Bitset cands = comp.adj[0];
    CliqueSolver solver(comp, 0, node_budget);
    auto best = solver.run({0}, cands);
    return best;
  }
  CliqueSolver solver(comp, 0, node_budget);
  Bitset all(comp.n);
  all.set_all();
  return solver.run({}, all);
}

IndependentSetCert max_independent_set_exact(const CayleyGraph& c, const Limits& limits) {
  DenseGraph g = DenseGraph::from_cayley(c, limits.exact_mis_vertices);
  auto vs = max_independent_set_exact(g, /*vertex_transitive=*/true);
  IndependentSetCert cert;
  cert.m = c.m;
  cert.exact = true;
  cert.note = "exact branch-and-bound";
  cert.words.assign(vs.begin(), vs.end());
  std::sort(cert.words.begin(), cert.words.end());
  return cert;
}

}  // namespace bcast
