#include "codes.hpp"

#include <algorithm>
#include <sstream>

namespace bcast {

namespace {

// lowest-terms irreducibles, one per degree
constexpr word_t kReductionPoly[17] = {
    0,
    0b11,                 // x + 1
    0b111,                // x^2 + x + 1
    0b1011,               // x^3 + x + 1
    0b10011,              // x^4 + x + 1
    0b100101,             // x^5 + x^2 + 1
    0b1000011,            // x^6 + x + 1
    0b10000011,           // x^7 + x + 1
    0b100011011,          // x^8 + x^4 + x^3 + x + 1
    0b1000010001,         // x^9 + x^4 + 1
    0b10000001001,        // x^10 + x^3 + 1
    0b100000000101,       // x^11 + x^2 + 1
    0b1000001010011,      // x^12 + x^6 + x^4 + x + 1
    0b10000000011011,     // x^13 + x^4 + x^3 + x + 1
    0b100010000100011,    // x^14 + x^10 + x^6 + x + 1
    0b1000000000000011,   // x^15 + x + 1
    0b10001000000001011,  // x^16 + x^12 + x^3 + x + 1
};

int poly_degree(word_t p) { return 63 - __builtin_clzll(p); }

word_t poly_mod(word_t a, word_t mod) {
  int dm = poly_degree(mod);
  while (a >= (word_t{1} << dm)) {
    int da = poly_degree(a);
    a ^= mod << (da - dm);
  }
  return a;
}

word_t clmul(word_t a, word_t b) {
  word_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

}  // namespace

word_t gf2_reduction_poly(int t) {
  if (t < 1 || t > 16) fail(Errc::unsupported_field, "GF(2^t) only tabulated for t in [1,16]");
  return kReductionPoly[t];
}

bool gf2_poly_irreducible(word_t poly, int degree) {
  if (poly_degree(poly) != degree) return false;
  if (degree == 1) return true;
  // trial division by everything of degree 1..degree/2
  for (int d = 1; d <= degree / 2; ++d)
    for (word_t q = word_t{1} << d; q < (word_t{2} << d); ++q) {
      // long division remainder of poly by q
      word_t r = poly;
      while (r != 0 && poly_degree(r) >= d) r ^= q << (poly_degree(r) - d);
      if (r == 0) return false;
    }
  return true;
}

GF2t::GF2t(int degree) : t(degree), poly(gf2_reduction_poly(degree)) {}

word_t GF2t::mul(word_t a, word_t b) const { return poly_mod(clmul(a, b), poly); }

ColoringCert syndrome_coloring(int k) {
  if (k < 2) fail(Errc::invalid_argument, "syndrome coloring needs k >= 2");
  ColoringCert c;
  c.kind = ColoringCert::Kind::construction;
  c.name = "syndrome";
  c.params = {std::to_string(k)};
  c.m = (1 << k) - 1;
  c.color_count = 1 << k;
  return c;
}

ColoringCert rs_coloring(int k, int t) {
  if (k < 2) fail(Errc::invalid_argument, "rs coloring needs k >= 2");
  int n = (1 << k) - 1;
  if ((word_t{1} << t) < static_cast<word_t>(n))
    fail(Errc::field_too_small, "rs coloring needs 2^t >= n");
  ColoringCert c;
  c.kind = ColoringCert::Kind::construction;
  c.name = "rs";
  c.params = {std::to_string(k), std::to_string(t)};
  c.m = n * t;
  c.color_count = 1 << (2 * t);
  return c;
}

namespace {

std::vector<std::int32_t> materialize_syndrome(int k) {
  int n = (1 << k) - 1;
  std::size_t nverts = std::size_t{1} << n;
  std::vector<std::int32_t> colors(nverts);
  colors[0] = 0;
  for (word_t u = 1; u < nverts; ++u) {
    int low = __builtin_ctzll(u);
    // block low+1 corresponds to the nonzero element low+1 of Z2^k
    colors[u] = colors[u & (u - 1)] ^ (low + 1);
  }
  return colors;
}

std::vector<std::int32_t> materialize_rs(int k, int t, const Limits& limits) {
  int n = (1 << k) - 1;
  int m = n * t;
  if (m > limits.enumerate_dim)
    fail(Errc::size_over_limit, "rs table would have 2^" + std::to_string(m) + " entries");
  GF2t field(t);
  // alpha_i: field elements in increasing integer order, starting at 0
  std::size_t nverts = std::size_t{1} << m;
  std::vector<std::int32_t> colors(nverts);
  word_t block_mask = (word_t{1} << t) - 1;
  for (word_t u = 0; u < nverts; ++u) {
    word_t sum = 0, checksum = 0;
    for (int i = 0; i < n; ++i) {
      word_t ui = (u >> (i * t)) & block_mask;
      sum ^= ui;
      checksum ^= field.mul(static_cast<word_t>(i), ui);
    }
    colors[u] = static_cast<std::int32_t>((sum << t) | checksum);
  }
  return colors;
}

void check_base_coloring(const PairMissSpec& spec, const std::vector<std::int32_t>& base) {
  validate_or_throw(spec);
  std::size_t n = std::size_t{1} << spec.k;
  if (base.size() != n) fail(Errc::improper_base, "base coloring must cover Z2^k");
  for (word_t x = 0; x < n; ++x)
    for (word_t g : spec.generators)
      if (base[x] == base[x ^ g])
        fail(Errc::improper_base, "base coloring improper on the side-information graph");
}

// syndrome of a word of the pair-miss network: xor of the group elements
// whose block is set (block i holds element i-1)
std::vector<std::int32_t> pair_miss_syndromes(int k, const Limits& limits) {
  int n = 1 << k;
  if (n > limits.enumerate_dim)
    fail(Errc::size_over_limit, "pair-miss word space is 2^" + std::to_string(n));
  std::size_t nverts = std::size_t{1} << n;
  std::vector<std::int32_t> s(nverts);
  s[0] = 0;
  for (word_t u = 1; u < nverts; ++u) s[u] = s[u & (u - 1)] ^ __builtin_ctzll(u);
  return s;
}

}  // namespace

ColoringCert mod3_coloring(const PairMissSpec& spec, const std::vector<std::int32_t>& base) {
  check_base_coloring(spec, base);
  int d = count_colors(base);
  int n = 1 << spec.k;
  Limits limits;
  if (n > limits.enumerate_dim)
    fail(Errc::size_over_limit, "pair-miss word space is 2^" + std::to_string(n));
  ColoringCert c;
  c.kind = ColoringCert::Kind::table;
  c.m = n;
  c.table.resize(std::size_t{1} << n);
  for (word_t u = 0; u < c.table.size(); ++u) {
    int weight_class = popcount64(u) % 3;
    // sum of base colors over set blocks, in Z_d
    int acc = 0;
    word_t rest = u;
    while (rest) {
      acc = (acc + base[__builtin_ctzll(rest)]) % d;
      rest &= rest - 1;
    }
    c.table[u] = weight_class * d + acc;
  }
  c.color_count = count_colors(c.table);
  return c;
}

ColoringCert mod3_pow2_coloring(const PairMissSpec& spec, const std::vector<std::int32_t>& base) {
  check_base_coloring(spec, base);
  int d = count_colors(base);
  int p = 1;
  while ((1 << p) <= d) ++p;  // smallest power of two strictly above d
  int n = 1 << spec.k;
  Limits limits;
  if (n > limits.enumerate_dim)
    fail(Errc::size_over_limit, "pair-miss word space is 2^" + std::to_string(n));
  ColoringCert c;
  c.kind = ColoringCert::Kind::table;
  c.m = n;
  c.table.resize(std::size_t{1} << n);
  c.table[0] = 0;
  for (word_t u = 1; u < c.table.size(); ++u) {
    int low = __builtin_ctzll(u);
    c.table[u] = c.table[u & (u - 1)] ^ (base[low] + 1);  // colors map to nonzero labels
  }
  c.color_count = count_colors(c.table);
  return c;
}

IndependentSetCert mod3_independent_set(const PairMissSpec& spec, const std::vector<word_t>& base,
                                        const Limits& limits) {
  validate_or_throw(spec);
  std::size_t group = std::size_t{1} << spec.k;
  if (base.empty()) fail(Errc::improper_base, "base independent set is empty");
  for (word_t v : base) {
    if (v >= group) fail(Errc::index_out_of_range, "base element outside Z2^k");
    for (word_t g : spec.generators)
      if (std::find(base.begin(), base.end(), v ^ g) != base.end())
        fail(Errc::improper_base, "base set not independent in the side-information graph");
  }

  auto syn = pair_miss_syndromes(spec.k, limits);
  int n = 1 << spec.k;
  std::size_t nverts = std::size_t{1} << n;

  // counts per (syndrome, weight residue)
  std::vector<std::array<std::uint64_t, 3>> count(group, {0, 0, 0});
  for (word_t u = 0; u < nverts; ++u) ++count[syn[u]][popcount64(u) % 3];

  std::vector<char> in_base(group, 0);
  for (word_t v : base) in_base[v] = 1;

  std::uint64_t best_size = 0;
  word_t best_j = 0;
  int best_r = 0;
  for (word_t j = 0; j < group; ++j)
    for (int r = 0; r < 3; ++r) {
      std::uint64_t size = 0;
      for (word_t s = 0; s < group; ++s)
        if (in_base[s ^ j]) size += count[s][r];
      if (size > best_size) {
        best_size = size;
        best_j = j;
        best_r = r;
      }
    }

  IndependentSetCert cert;
  cert.m = n;
  cert.exact = false;
  cert.note = "mod3 pullback, j=" + std::to_string(best_j) + " r=" + std::to_string(best_r);
  cert.words.reserve(best_size);
  for (word_t u = 0; u < nverts; ++u)
    if (in_base[syn[u] ^ best_j] && popcount64(u) % 3 == best_r) cert.words.push_back(u);
  return cert;
}

std::array<word_t, 4> lift_masks(int m) {
  if (m < 5 || m % 2 == 0) fail(Errc::invalid_argument, "lift masks need odd m >= 5");
  // target length m+2; 1-based coordinates map to bits 0..m+1
  word_t first = word_t{1} << 0;
  word_t last_inner = word_t{1} << (m - 1);
  word_t pad1 = word_t{1} << m;
  word_t pad2 = word_t{1} << (m + 1);
  return {0, last_inner | pad2, first | pad1, first | last_inner | pad1 | pad2};
}

namespace {

// generators of the odd-antihole confusion graph at t=1: cyclic runs of
// one, two or three consecutive ones
std::vector<word_t> antihole_run_generators(int m) {
  std::vector<word_t> gens;
  word_t space = (word_t{1} << m) - 1;
  for (int len = 1; len <= 3; ++len) {
    word_t run = (word_t{1} << len) - 1;
    for (int i = 0; i < m; ++i) {
      word_t g = ((run << i) | (run >> (m - i))) & space;
      gens.push_back(g);
    }
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return gens;
}

CayleyGraph antihole_confusion(int m) {
  CayleyGraph c;
  c.m = m;
  c.generators = antihole_run_generators(m);
  return c;
}

}  // namespace

IndependentSetCert antihole_lift_is(const IndependentSetCert& cert, const Limits& limits) {
  int m = cert.m;
  if (m < 5 || m % 2 == 0) fail(Errc::invalid_argument, "lift input must live on an odd antihole");
  CayleyGraph inner = antihole_confusion(m);
  if (auto w = verify_independent_set(inner, cert.words))
    fail(Errc::improper_base, "lift input is not independent: words " +
                                  to_hex(w->first, m) + " and " + to_hex(w->second, m) +
                                  " are confusable");
  auto masks = lift_masks(m);
  IndependentSetCert out;
  out.m = m + 2;
  out.exact = false;
  out.note = "x4 lift from dimension " + std::to_string(m);
  out.words.reserve(cert.words.size() * 4);
  for (word_t v : cert.words)
    for (word_t mask : masks) out.words.push_back(v ^ mask);
  std::sort(out.words.begin(), out.words.end());
  (void)limits;
  return out;
}

ColoringCert antihole_lift_coloring(const ColoringCert& cert, const Limits& limits) {
  int m = cert.m;
  if (m < 5 || m % 2 == 0) fail(Errc::invalid_argument, "lift input must live on an odd antihole");
  auto colors = materialize_coloring(cert, m, limits);
  CayleyGraph inner = antihole_confusion(m);
  for (word_t v = 0; v < inner.vertex_count(); ++v)
    for (word_t g : inner.generators)
      if ((v ^ g) > v && colors[v] == colors[v ^ g])
        fail(Errc::improper_base, "lift input coloring is improper");
  auto masks = lift_masks(m);
  // the two padding bits identify which mask produced a lifted word
  std::array<std::size_t, 4> mask_of_suffix{};
  for (std::size_t k = 0; k < 4; ++k) mask_of_suffix[masks[k] >> m] = k;
  ColoringCert out;
  out.kind = ColoringCert::Kind::table;
  out.m = m + 2;
  out.table.assign(std::size_t{1} << (m + 2), -1);
  word_t inner_mask = (word_t{1} << m) - 1;
  for (word_t w = 0; w < out.table.size(); ++w) {
    word_t suffix = w >> m;
    word_t v = (w ^ masks[mask_of_suffix[suffix]]) & inner_mask;
    out.table[w] = colors[v];
  }
  out.color_count = count_colors(out.table);
  return out;
}

std::optional<word_t> mask_check(int n, const std::array<word_t, 4>& masks) {
  int m = 2 * n + 1;
  CayleyGraph inner = antihole_confusion(m);
  CayleyGraph outer = antihole_confusion(m + 2);
  word_t space = word_t{1} << m;
  for (word_t x = 0; x < space; ++x) {
    if (x != 0 && inner.is_generator(x)) continue;
    for (int k = 1; k <= 3; ++k)
      if (outer.is_generator(x ^ masks[k])) return x;
  }
  return std::nullopt;
}

std::optional<word_t> mask_nongenerator_check(int n) {
  if (n < 2) fail(Errc::invalid_argument, "mask check needs n >= 2");
  return mask_check(n, lift_masks(2 * n + 1));
}

std::vector<std::int32_t> materialize_coloring(const ColoringCert& cert, int expected_m,
                                               const Limits& limits) {
  if (cert.kind == ColoringCert::Kind::table) {
    if (cert.m != expected_m)
      fail(Errc::invalid_argument, "coloring table is for dimension " + std::to_string(cert.m) +
                                       ", expected " + std::to_string(expected_m));
    return cert.table;
  }
  auto need_params = [&](std::size_t k) {
    if (cert.params.size() != k)
      fail(Errc::parse_error, "construction " + cert.name + " needs " + std::to_string(k) +
                                  " parameters");
  };
  auto path_of = [&](const std::string& p) {
    if (!cert.base_dir.empty() && !p.empty() && p[0] != '/') return cert.base_dir + "/" + p;
    return p;
  };
  std::vector<std::int32_t> colors;
  if (cert.name == "syndrome") {
    need_params(1);
    int k = std::stoi(cert.params[0]);
    if ((1 << k) - 1 != expected_m) fail(Errc::invalid_argument, "syndrome dimension mismatch");
    colors = materialize_syndrome(k);
  } else if (cert.name == "rs") {
    need_params(2);
    int k = std::stoi(cert.params[0]);
    int t = std::stoi(cert.params[1]);
    if (((1 << k) - 1) * t != expected_m) fail(Errc::invalid_argument, "rs dimension mismatch");
    rs_coloring(k, t);  // re-check the field precondition
    colors = materialize_rs(k, t, limits);
  } else if (cert.name == "mod3") {
    need_params(2);
    PairMissSpec spec = parse_pms(read_file(path_of(cert.params[0])));
    ColoringCert base = parse_col(read_file(path_of(cert.params[1])), cert.base_dir);
    auto base_colors = materialize_coloring(base, spec.k, limits);
    ColoringCert expanded = mod3_coloring(spec, base_colors);
    if (expanded.m != expected_m) fail(Errc::invalid_argument, "mod3 dimension mismatch");
    colors = std::move(expanded.table);
  } else if (cert.name == "lift") {
    need_params(1);
    ColoringCert inner = parse_col(read_file(path_of(cert.params[0])), cert.base_dir);
    ColoringCert lifted = antihole_lift_coloring(inner, limits);
    if (lifted.m != expected_m) fail(Errc::invalid_argument, "lift dimension mismatch");
    colors = std::move(lifted.table);
  } else {
    fail(Errc::unknown_construction, "unknown construction '" + cert.name + "'");
  }
  return colors;
}

std::string to_pms(const PairMissSpec& spec) {
  std::ostringstream os;
  os << "group " << spec.k << "\n";
  os << "generators";
  for (word_t g : spec.generators) os << " " << to_hex(g, spec.k);
  os << "\n";
  return os.str();
}

PairMissSpec parse_pms(const std::string& text) {
  PairMissSpec spec;
  std::istringstream is(text);
  std::string line;
  bool have_k = false;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "group") {
      if (!(ls >> spec.k)) fail(Errc::parse_error, "bad group line");
      have_k = true;
    } else if (kw == "generators") {
      std::string h;
      while (ls >> h) spec.generators.push_back(parse_hex(h));
    } else {
      fail(Errc::parse_error, "unknown keyword '" + kw + "' in pair-miss spec");
    }
  }
  if (!have_k) fail(Errc::parse_error, "missing group line");
  std::sort(spec.generators.begin(), spec.generators.end());
  spec.generators.erase(std::unique(spec.generators.begin(), spec.generators.end()),
                        spec.generators.end());
  validate_or_throw(spec);
  return spec;
}

}  // namespace bcast
