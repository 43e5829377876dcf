#include "cayley.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bcast {

void validate_or_throw(const CayleyGraph& c, const Limits& limits) {
  if (c.m < 1 || c.m > limits.hard_dim)
    fail(Errc::size_over_limit, "Cayley dimension " + std::to_string(c.m) + " out of range");
  word_t space = word_t{1} << c.m;
  word_t prev = 0;
  for (word_t g : c.generators) {
    if (g == 0) fail(Errc::invalid_argument, "zero generator");
    if (g >= space) fail(Errc::index_out_of_range, "generator outside Z2^m");
    if (g <= prev && prev != 0) fail(Errc::invalid_argument, "generators not sorted distinct");
    prev = g;
  }
}

CayleyGraph confusion_generators(const BroadcastHypergraph& h, int t, const Limits& limits) {
  validate_or_throw(h);
  if (t < 1) fail(Errc::invalid_argument, "block length must be >= 1");
  long long m = static_cast<long long>(h.n) * t;
  if (m > limits.hard_dim)
    fail(Errc::size_over_limit,
         "confusion dimension " + std::to_string(m) + " exceeds hard limit " +
             std::to_string(limits.hard_dim));

  CayleyGraph c;
  c.m = static_cast<int>(m);
  auto edges = h.canonical_edges();

  // Enumerate per edge when the free-block space is small, otherwise scan
  // all candidates once. Per edge (i,J) the generators are: block i
  // nonzero, blocks J zero, everything else arbitrary.
  word_t block_mask = (t == 64) ? ~word_t{0} : ((word_t{1} << t) - 1);
  double edge_driven_cost = 0;
  for (const Edge& e : edges) {
    int free_blocks = h.n - 1 - static_cast<int>(e.known.size());
    edge_driven_cost += std::ldexp(static_cast<double>((word_t{1} << t) - 1),
                                   t * free_blocks);
  }
  double scan_cost = std::ldexp(1.0, c.m) * static_cast<double>(edges.size());

  std::vector<word_t> gens;
  if (edge_driven_cost <= scan_cost) {
    for (const Edge& e : edges) {
      std::vector<int> free;
      std::vector<char> in_known(h.n + 1, 0);
      for (int j : e.known) in_known[j] = 1;
      for (int b = 1; b <= h.n; ++b)
        if (b != e.target && !in_known[b]) free.push_back(b);
      word_t free_space = word_t{1} << (t * static_cast<int>(free.size()));
      for (word_t tv = 1; tv <= block_mask; ++tv) {
        word_t base = tv << ((e.target - 1) * t);
        for (word_t f = 0; f < free_space; ++f) {
          word_t g = base;
          for (std::size_t b = 0; b < free.size(); ++b)
            g |= ((f >> (b * t)) & block_mask) << ((free[b] - 1) * t);
          gens.push_back(g);
        }
      }
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  } else {
    if (c.m > limits.enumerate_dim)
      fail(Errc::size_over_limit, "generator scan would enumerate 2^" + std::to_string(c.m));
    for (word_t g = 1; g < (word_t{1} << c.m); ++g) {
      bool hit = false;
      for (const Edge& e : edges) {
        if (((g >> ((e.target - 1) * t)) & block_mask) == 0) continue;
        bool silent = true;
        for (int j : e.known)
          if (((g >> ((j - 1) * t)) & block_mask) != 0) { silent = false; break; }
        if (silent) { hit = true; break; }
      }
      if (hit) gens.push_back(g);
    }
  }
  c.generators = std::move(gens);
  return c;
}

bool ProductCayley::adjacent(word_t x, word_t y) const {
  if (x == y) return false;
  int shift = 0;
  for (const auto& c : components) {
    word_t mask = (c.m == 64) ? ~word_t{0} : ((word_t{1} << c.m) - 1);
    word_t d = ((x ^ y) >> shift) & mask;
    if (d != 0 && c.is_generator(d)) return true;
    shift += c.m;
  }
  return false;
}

ProductCayley or_product(const CayleyGraph& a, const CayleyGraph& b) {
  ProductCayley p;
  if (a.m > 0) p.components.push_back(a);
  if (b.m > 0) p.components.push_back(b);
  return p;
}

ProductCayley or_product(const ProductCayley& a, const CayleyGraph& b) {
  ProductCayley p = a;
  if (b.m > 0) p.components.push_back(b);
  return p;
}

ProductCayley or_product(const ProductCayley& a, const ProductCayley& b) {
  ProductCayley p = a;
  for (const auto& c : b.components) p.components.push_back(c);
  return p;
}

CayleyGraph flatten(const ProductCayley& p, const Limits& limits) {
  int m = p.total_dim();
  if (m < 1 || m > limits.enumerate_dim)
    fail(Errc::size_over_limit, "product dimension " + std::to_string(m) + " not materializable");
  CayleyGraph c;
  c.m = m;
  // union over components of (component generator) x (anything elsewhere)
  std::vector<word_t> gens;
  int shift = 0;
  for (const auto& comp : p.components) {
    word_t rest_dim = static_cast<word_t>(m - comp.m);
    word_t rest_space = word_t{1} << rest_dim;
    word_t low_mask = (word_t{1} << shift) - 1;
    for (word_t g : comp.generators)
      for (word_t r = 0; r < rest_space; ++r) {
        word_t low = r & low_mask;
        word_t high = r >> shift;
        gens.push_back(low | (g << shift) | (high << (shift + comp.m)));
      }
    shift += comp.m;
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  c.generators = std::move(gens);
  return c;
}

bool isomorphic_check_small(const CayleyGraph& a, const CayleyGraph& b) {
  if (a.m != b.m) return false;
  if (a.m > 14)
    fail(Errc::size_over_limit, "equality check limited to 2^14 vertices");
  return a.generators == b.generators;
}

bool isomorphic_check_small(const CayleyGraph& a, const ProductCayley& b, const Limits& limits) {
  if (a.m != b.total_dim()) return false;
  if (a.m > 14)
    fail(Errc::size_over_limit, "equality check limited to 2^14 vertices");
  return isomorphic_check_small(a, flatten(b, limits));
}

std::string to_gen(const CayleyGraph& c) {
  std::ostringstream os;
  os << "dim " << c.m << "\n";
  for (word_t g : c.generators) os << to_hex(g, c.m) << "\n";
  return os.str();
}

CayleyGraph parse_gen(const std::string& text) {
  CayleyGraph c;
  std::istringstream is(text);
  std::string line;
  bool have_dim = false;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "dim") {
      if (!(ls >> c.m)) fail(Errc::parse_error, "bad dim line");
      have_dim = true;
    } else {
      if (!have_dim) fail(Errc::parse_error, "generator before dim line");
      c.generators.push_back(parse_hex(tok));
    }
  }
  if (!have_dim) fail(Errc::parse_error, "missing dim line");
  std::sort(c.generators.begin(), c.generators.end());
  c.generators.erase(std::unique(c.generators.begin(), c.generators.end()), c.generators.end());
  validate_or_throw(c);
  return c;
}

}  // namespace bcast
