#include <algorithm>
#include <sstream>

#include "search.hpp"

namespace bcast {

DenseGraph DenseGraph::from_cayley(const CayleyGraph& c, std::size_t vertex_limit) {
  std::size_t nverts = c.vertex_count();
  if (nverts > vertex_limit)
    fail(Errc::size_over_limit, "graph with 2^" + std::to_string(c.m) +
                                    " vertices exceeds the explicit search limit");
  DenseGraph g;
  g.n = static_cast<int>(nverts);
  g.adj.assign(g.n, Bitset(nverts));
  for (word_t v = 0; v < nverts; ++v)
    for (word_t gen : c.generators) g.adj[v].set(v ^ gen);
  return g;
}

DenseGraph DenseGraph::from_edges(const ExplicitGraph& eg) {
  DenseGraph g;
  g.n = eg.n;
  g.adj.assign(g.n, Bitset(g.n));
  for (auto [u, v] : eg.edges) {
    g.adj[u].set(v);
    g.adj[v].set(u);
  }
  return g;
}

DenseGraph DenseGraph::complement() const {
  DenseGraph g;
  g.n = n;
  g.adj.assign(n, Bitset(n));
  for (int v = 0; v < n; ++v) {
    g.adj[v].set_all();
    g.adj[v].and_not(adj[v]);
    g.adj[v].reset(v);
  }
  return g;
}

std::vector<std::int32_t> greedy_coloring(const DenseGraph& g,
                                          const std::vector<std::uint32_t>& order) {
  std::vector<std::int32_t> colors(g.n, -1);
  std::vector<char> used;
  auto color_vertex = [&](std::uint32_t v) {
    used.assign(g.n + 1, 0);
    g.adj[v].for_each([&](std::size_t u) {
      if (colors[u] >= 0) used[colors[u]] = 1;
    });
    int c = 0;
    while (used[c]) ++c;
    colors[v] = c;
  };
  if (order.empty()) {
    for (int v = 0; v < g.n; ++v) color_vertex(v);
  } else {
    if (order.size() != static_cast<std::size_t>(g.n))
      fail(Errc::invalid_argument, "coloring order must list every vertex once");
    for (auto v : order) color_vertex(v);
  }
  return colors;
}

std::vector<std::int32_t> greedy_coloring(const CayleyGraph& c, const Limits& limits) {
  if (c.m > limits.enumerate_dim)
    fail(Errc::size_over_limit, "greedy coloring needs full enumeration of 2^" +
                                    std::to_string(c.m) + " vertices");
  std::size_t nverts = c.vertex_count();
  std::vector<std::int32_t> colors(nverts, -1);
  std::vector<std::int32_t> mark(64, -1);
  for (word_t v = 0; v < nverts; ++v) {
    for (word_t g : c.generators) {
      std::int32_t cu = colors[v ^ g];
      if (cu >= 0) {
        if (cu >= static_cast<std::int32_t>(mark.size())) mark.resize(cu + 1, -1);
        mark[cu] = static_cast<std::int32_t>(v);
      }
    }
    std::int32_t col = 0;
    while (col < static_cast<std::int32_t>(mark.size()) &&
           mark[col] == static_cast<std::int32_t>(v))
      ++col;
    if (col == static_cast<std::int32_t>(mark.size())) mark.resize(col + 1, -1);
    colors[v] = col;
  }
  return colors;
}

int count_colors(const std::vector<std::int32_t>& colors) {
  std::int32_t mx = -1;
  for (auto c : colors) mx = std::max(mx, c);
  std::vector<char> seen(mx + 1, 0);
  for (auto c : colors)
    if (c >= 0) seen[c] = 1;
  int used = 0;
  for (char s : seen) used += s;
  return used;
}

}  // namespace bcast
