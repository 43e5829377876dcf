#include "instances.hpp"

#include <algorithm>
#include <sstream>

namespace bcast {

void validate_or_throw(const PairMissSpec& spec) {
  if (spec.k < 1 || spec.k > 20) fail(Errc::invalid_argument, "pair-miss exponent out of range");
  word_t limit = word_t{1} << spec.k;
  word_t prev = 0;
  for (word_t g : spec.generators) {
    if (g == 0) fail(Errc::invalid_argument, "zero is not a valid generator");
    if (g >= limit) fail(Errc::index_out_of_range, "generator outside Z2^k");
    if (g <= prev && prev != 0) fail(Errc::invalid_argument, "generators must be sorted distinct");
    prev = g;
  }
}

BroadcastHypergraph cycle_instance(int n) {
  if (n < 3) fail(Errc::invalid_argument, "cycle needs n >= 3");
  BroadcastHypergraph h;
  h.n = n;
  for (int i = 1; i <= n; ++i) {
    Edge e;
    e.target = i;
    int prev = (i + n - 2) % n + 1;
    int next = i % n + 1;
    e.known = {prev, next};
    std::sort(e.known.begin(), e.known.end());
    e.known.erase(std::unique(e.known.begin(), e.known.end()), e.known.end());
    h.edges.push_back(std::move(e));
  }
  return h;
}

BroadcastHypergraph antihole_instance(int m) {
  if (m < 5 || m % 2 == 0) fail(Errc::invalid_argument, "antihole needs odd m >= 5");
  BroadcastHypergraph h;
  h.n = m;
  for (int i = 1; i <= m; ++i) {
    Edge e;
    e.target = i;
    int prev = (i + m - 2) % m + 1;
    int next = i % m + 1;
    for (int j = 1; j <= m; ++j)
      if (j != i && j != prev && j != next) e.known.push_back(j);
    h.edges.push_back(std::move(e));
  }
  return h;
}

BroadcastHypergraph two_missing_instance(int k) {
  if (k < 2 || k > 16) fail(Errc::invalid_argument, "two-missing needs 2 <= k <= 16");
  int n = (1 << k) - 1;  // blocks are the nonzero elements, block i <-> element i
  BroadcastHypergraph h;
  h.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Edge e;
      e.target = i;
      for (int b = 1; b <= n; ++b)
        if (b != i && b != j) e.known.push_back(b);
      h.edges.push_back(std::move(e));
    }
  return h;
}

BroadcastHypergraph pair_miss_instance(const PairMissSpec& spec) {
  validate_or_throw(spec);
  int n = 1 << spec.k;  // block i <-> group element i-1, zero included
  BroadcastHypergraph h;
  h.n = n;
  for (word_t x = 0; x < static_cast<word_t>(n); ++x)
    for (word_t g : spec.generators) {
      word_t y = x ^ g;
      if (y < x) continue;  // one receiver pair per Cayley edge
      int i = static_cast<int>(x) + 1;
      int j = static_cast<int>(y) + 1;
      for (int target : {i, j}) {
        Edge e;
        e.target = target;
        for (int b = 1; b <= n; ++b)
          if (b != i && b != j) e.known.push_back(b);
        h.edges.push_back(std::move(e));
      }
    }
  return h;
}

PairMissSpec hamming_threshold_graph(int k, int d) {
  if (k < 1 || k > 20 || d < 1 || d > k)
    fail(Errc::invalid_argument, "threshold graph needs 1 <= d <= k");
  PairMissSpec spec;
  spec.k = k;
  for (word_t g = 1; g < (word_t{1} << k); ++g)
    if (popcount64(g) >= d) spec.generators.push_back(g);
  return spec;
}

std::vector<word_t> kneser_vertex_masks(int k, int s) {
  if (s < 1 || k < 2 * s) fail(Errc::invalid_argument, "Kneser graph needs k >= 2s >= 2");
  std::vector<word_t> masks;
  std::vector<int> pick(s);
  for (int i = 0; i < s; ++i) pick[i] = i;
  while (true) {
    word_t m = 0;
    for (int p : pick) m |= word_t{1} << p;
    masks.push_back(m);
    int i = s - 1;
    while (i >= 0 && pick[i] == k - s + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
  }
  return masks;
}

ExplicitGraph kneser_graph(int k, int s) {
  auto masks = kneser_vertex_masks(k, s);
  ExplicitGraph g;
  g.n = static_cast<int>(masks.size());
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if ((masks[u] & masks[v]) == 0) g.edges.push_back({u, v});
  return g;
}

ExplicitGraph antihole_graph(int m) {
  if (m < 5) fail(Errc::invalid_argument, "antihole graph needs m >= 5");
  ExplicitGraph g;
  g.n = m;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) {
      int d = v - u;
      bool cycle_edge = d == 1 || d == m - 1;
      if (!cycle_edge) g.edges.push_back({u, v});
    }
  return g;
}

std::string to_elg(const ExplicitGraph& g) {
  std::ostringstream os;
  os << "vertices " << g.n << "\n";
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end());
  for (auto [u, v] : edges) os << "edge " << u + 1 << " " << v + 1 << "\n";
  return os.str();
}

ExplicitGraph parse_elg(const std::string& text) {
  ExplicitGraph g;
  std::istringstream is(text);
  std::string line;
  bool have_n = false;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "vertices") {
      if (!(ls >> g.n) || g.n < 1) fail(Errc::parse_error, "bad vertices line");
      have_n = true;
    } else if (kw == "edge") {
      int u, v;
      if (!have_n || !(ls >> u >> v)) fail(Errc::parse_error, "bad edge line");
      if (u < 1 || v < 1 || u > g.n || v > g.n || u == v)
        fail(Errc::index_out_of_range, "edge endpoint out of range");
      if (u > v) std::swap(u, v);
      g.edges.push_back({u - 1, v - 1});
    } else {
      fail(Errc::parse_error, "unknown keyword '" + kw + "' in edge list");
    }
  }
  if (!have_n) fail(Errc::parse_error, "missing vertices line");
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

}  // namespace bcast
