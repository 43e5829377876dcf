#include <algorithm>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "codes.hpp"
#include "search.hpp"

namespace bcast {

std::string to_iset(const IndependentSetCert& c) {
  std::ostringstream os;
  os << "dim " << c.m << "\n";
  for (word_t w : c.words) os << to_hex(w, c.m) << "\n";
  return os.str();
}

IndependentSetCert parse_iset(const std::string& text) {
  IndependentSetCert c;
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
      if (!(ls >> c.m) || c.m < 1 || c.m > 63) fail(Errc::parse_error, "bad dim line");
      have_dim = true;
    } else {
      if (!have_dim) fail(Errc::parse_error, "word before dim line");
      c.words.push_back(parse_hex(tok));
    }
  }
  if (!have_dim) fail(Errc::parse_error, "missing dim line");
  std::sort(c.words.begin(), c.words.end());
  return c;
}

std::string to_col(const ColoringCert& c) {
  std::ostringstream os;
  if (c.kind == ColoringCert::Kind::construction) {
    os << "construction " << c.name;
    for (const auto& p : c.params) os << " " << p;
    os << "\n";
    return os.str();
  }
  os << "table " << c.m << "\n";
  for (std::size_t i = 0; i < c.table.size(); ++i)
    os << c.table[i] << ((i % 16 == 15 || i + 1 == c.table.size()) ? "\n" : " ");
  return os.str();
}

ColoringCert parse_col(const std::string& text, const std::string& base_dir) {
  ColoringCert c;
  c.base_dir = base_dir;
  std::istringstream is(text);
  std::string tok;
  if (!(is >> tok)) fail(Errc::parse_error, "empty coloring certificate");
  if (tok == "construction") {
    c.kind = ColoringCert::Kind::construction;
    if (!(is >> c.name)) fail(Errc::parse_error, "construction line needs a name");
    std::string p;
    while (is >> p) c.params.push_back(p);
    return c;
  }
  if (tok != "table") fail(Errc::parse_error, "coloring certificate must start with table/construction");
  c.kind = ColoringCert::Kind::table;
  if (!(is >> c.m) || c.m < 1 || c.m > 30) fail(Errc::parse_error, "bad table dimension");
  std::size_t count = std::size_t{1} << c.m;
  c.table.reserve(count);
  std::int32_t v;
  while (is >> v) c.table.push_back(v);
  if (c.table.size() != count)
    fail(Errc::parse_error, "table needs exactly 2^m entries, got " +
                                std::to_string(c.table.size()));
  c.color_count = count_colors(c.table);
  return c;
}

namespace {

// split [0,n) into roughly equal chunks and reduce each worker's first
// hit to the globally smallest index, so the witness is deterministic
template <typename Body>
std::size_t parallel_first_hit(std::size_t n, int workers, Body&& body) {
  if (workers < 2 || n < 1 << 12) {
    for (std::size_t i = 0; i < n; ++i)
      if (body(i)) return i;
    return n;
  }
  std::vector<std::size_t> hits(workers, n);
  std::vector<std::thread> pool;
  std::size_t chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      std::size_t lo = w * chunk, hi = std::min(n, lo + chunk);
      for (std::size_t i = lo; i < hi; ++i)
        if (body(i)) {
          hits[w] = i;
          return;
        }
    });
  }
  for (auto& t : pool) t.join();
  return *std::min_element(hits.begin(), hits.end());
}

}  // namespace

std::optional<WitnessEdge> verify_independent_set(const CayleyGraph& c,
                                                  const std::vector<word_t>& words,
                                                  int workers) {
  std::vector<word_t> sorted = words;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(Errc::invalid_argument, "independent-set certificate contains duplicates");
  for (word_t w : sorted)
    if (w >= c.vertex_count()) fail(Errc::index_out_of_range, "word outside Z2^m");

  // membership structure: bitset when the space fits, hash set otherwise
  const bool use_bits = c.m <= 26;
  Bitset members(use_bits ? c.vertex_count() : 0);
  std::unordered_set<word_t> memberh;
  if (use_bits)
    for (word_t w : sorted) members.set(w);
  else
    memberh.insert(sorted.begin(), sorted.end());
  auto contains = [&](word_t w) { return use_bits ? members.test(w) : memberh.count(w) > 0; };

  std::optional<WitnessEdge> witness;
  std::size_t hit = parallel_first_hit(sorted.size(), workers, [&](std::size_t i) {
    word_t x = sorted[i];
    for (word_t g : c.generators)
      if (contains(x ^ g)) return true;
    return false;
  });
  if (hit < sorted.size()) {
    word_t x = sorted[hit];
    for (word_t g : c.generators)
      if (contains(x ^ g)) {
        witness = WitnessEdge{std::min(x, x ^ g), std::max(x, x ^ g)};
        break;
      }
  }
  return witness;
}

std::optional<WitnessEdge> verify_independent_set(const CayleyGraph& c,
                                                  const IndependentSetCert& cert, int workers) {
  if (cert.m != c.m) fail(Errc::invalid_argument, "certificate dimension mismatch");
  return verify_independent_set(c, cert.words, workers);
}

std::optional<WitnessEdge> verify_independent_set(const DenseGraph& g,
                                                  const std::vector<std::uint32_t>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j]) fail(Errc::invalid_argument, "duplicate vertex in certificate");
      if (g.adjacent(vs[i], vs[j]))
        return WitnessEdge{std::min(vs[i], vs[j]), std::max(vs[i], vs[j])};
    }
  return std::nullopt;
}

std::optional<WitnessEdge> verify_coloring(const CayleyGraph& c, const ColoringCert& cert,
                                           const Limits& limits, int workers) {
  if (c.m > limits.enumerate_dim)
    fail(Errc::size_over_limit, "coloring verification enumerates 2^" + std::to_string(c.m));
  std::vector<std::int32_t> colors = materialize_coloring(cert, c.m, limits);
  int used = count_colors(colors);
  if (cert.color_count > 0 && used > cert.color_count)
    fail(Errc::verify_failed, "certificate uses " + std::to_string(used) +
                                  " colors but claims " + std::to_string(cert.color_count));

  std::size_t nverts = c.vertex_count();
  std::optional<WitnessEdge> witness;
  std::size_t hit = parallel_first_hit(nverts, workers, [&](std::size_t v) {
    for (word_t g : c.generators) {
      word_t u = static_cast<word_t>(v) ^ g;
      if (u > v && colors[u] == colors[v]) return true;
    }
    return false;
  });
  if (hit < nverts) {
    for (word_t g : c.generators) {
      word_t u = static_cast<word_t>(hit) ^ g;
      if (u > hit && colors[u] == colors[hit]) {
        witness = WitnessEdge{static_cast<word_t>(hit), u};
        break;
      }
    }
  }
  return witness;
}

std::optional<WitnessEdge> verify_coloring(const DenseGraph& g,
                                           const std::vector<std::int32_t>& colors) {
  if (colors.size() != static_cast<std::size_t>(g.n))
    fail(Errc::invalid_argument, "coloring size mismatch");
  for (int v = 0; v < g.n; ++v) {
    auto w = g.adj[v].next(v + 1);
    while (w < static_cast<std::size_t>(g.n)) {
      if (colors[v] == colors[w]) return WitnessEdge{static_cast<word_t>(v), w};
      w = g.adj[v].next(w + 1);
    }
  }
  return std::nullopt;
}

Rational fractional_chromatic_vt(const CayleyGraph& c, std::size_t alpha) {
  if (alpha == 0) fail(Errc::invalid_argument, "independence number must be positive");
  return Rational(static_cast<std::int64_t>(c.vertex_count()), static_cast<std::int64_t>(alpha));
}

ColoringCert random_translate_cover(const CayleyGraph& c, const IndependentSetCert& iset,
                                    std::uint64_t seed, const Limits& limits) {
  if (c.m > limits.enumerate_dim)
    fail(Errc::size_over_limit, "translate cover enumerates 2^" + std::to_string(c.m));
  if (auto w = verify_independent_set(c, iset))
    fail(Errc::improper_base, "translate cover needs an independent set");

  std::size_t nverts = c.vertex_count();
  ColoringCert out;
  out.kind = ColoringCert::Kind::table;
  out.m = c.m;
  out.table.assign(nverts, -1);
  Rng rng(seed);
  std::size_t covered = 0;
  std::int32_t translate = 0;
  while (covered < nverts) {
    word_t shift = rng.next() & (nverts - 1);
    for (word_t w : iset.words) {
      word_t v = w ^ shift;
      if (out.table[v] < 0) {
        out.table[v] = translate;
        ++covered;
      }
    }
    ++translate;
  }
  // compact color ids to the set actually used
  std::vector<std::int32_t> remap(translate, -1);
  std::int32_t next_id = 0;
  for (auto& col : out.table) {
    if (remap[col] < 0) remap[col] = next_id++;
    col = remap[col];
  }
  out.color_count = next_id;
  return out;
}

}  // namespace bcast
