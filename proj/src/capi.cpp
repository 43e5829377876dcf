#include "bcast.h"

#include <cstring>
#include <new>
#include <string>

#include "core/codes.hpp"
#include "core/minrank.hpp"
#include "core/netexport.hpp"
#include "core/rates.hpp"
#include "core/tables.hpp"

struct bc_hypergraph {
  bcast::BroadcastHypergraph v;
};
struct bc_cayley {
  bcast::CayleyGraph v;
};
struct bc_iset {
  bcast::IndependentSetCert v;
};
struct bc_coloring {
  bcast::ColoringCert v;
};

namespace {

thread_local std::string g_last_error;
bcast::Limits g_limits;

bc_status map_errc(bcast::Errc code) {
  using bcast::Errc;
  switch (code) {
    case Errc::ok: return BC_OK;
    case Errc::invalid_argument: return BC_EINVAL;
    case Errc::parse_error: return BC_EPARSE;
    case Errc::target_in_known_set: return BC_ETARGET_IN_KNOWN;
    case Errc::index_out_of_range: return BC_EINDEX;
    case Errc::empty_network: return BC_EEMPTY_NETWORK;
    case Errc::size_over_limit: return BC_ESIZE_LIMIT;
    case Errc::field_too_small: return BC_EFIELD_TOO_SMALL;
    case Errc::improper_base: return BC_EIMPROPER_BASE;
    case Errc::unknown_construction: return BC_EUNKNOWN_CONSTRUCTION;
    case Errc::unsupported_field: return BC_EUNSUPPORTED_FIELD;
    case Errc::search_space_too_large: return BC_ESEARCH_SPACE;
    case Errc::verify_failed: return BC_EVERIFY;
    case Errc::overflow: return BC_EOVERFLOW;
    case Errc::io_error: return BC_EIO;
    case Errc::budget_exhausted: return BC_EBUDGET;
  }
  return BC_EINVAL;
}

template <typename F>
bc_status guard(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const bcast::Error& e) {
    g_last_error = e.what();
    return map_errc(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return BC_ENOMEM;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return BC_EINVAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bcast::RunConfig make_config(uint64_t seed, uint64_t budget, int workers) {
  bcast::RunConfig cfg;
  cfg.limits = g_limits;
  if (seed) cfg.seed = seed;
  if (budget) cfg.heuristic_budget = budget;
  if (workers > 0) cfg.workers = workers;
  return cfg;
}

std::string witness_line(const bcast::WitnessEdge& w, int m) {
  return bcast::to_hex(w.first, m) + " " + bcast::to_hex(w.second, m);
}

}  // namespace

extern "C" {

const char* bc_last_error(void) { return g_last_error.c_str(); }

void bc_string_free(char* s) { std::free(s); }

bc_status bc_set_exact_limits(uint64_t mis_vertices, uint64_t chi_vertices) {
  return guard([&] {
    if (mis_vertices) g_limits.exact_mis_vertices = mis_vertices;
    if (chi_vertices) g_limits.exact_chi_vertices = chi_vertices;
    return BC_OK;
  });
}

/* ---- hypergraphs ---- */

bc_status bc_hypergraph_parse(const char* text, bc_hypergraph** out) {
  return guard([&] {
    auto* h = new bc_hypergraph{bcast::parse_bhg(text ? text : "")};
    *out = h;
    return BC_OK;
  });
}

bc_status bc_hypergraph_load(const char* path, bc_hypergraph** out) {
  return guard([&] {
    auto* h = new bc_hypergraph{bcast::load_bhg(path ? path : "")};
    *out = h;
    return BC_OK;
  });
}

bc_status bc_hypergraph_to_text(const bc_hypergraph* h, char** out) {
  return guard([&] {
    *out = dup_string(bcast::to_bhg(h->v));
    return BC_OK;
  });
}

bc_status bc_hypergraph_blocks(const bc_hypergraph* h, int* out) {
  return guard([&] {
    *out = h->v.n;
    return BC_OK;
  });
}

bc_status bc_hypergraph_edge_count(const bc_hypergraph* h, size_t* out) {
  return guard([&] {
    *out = h->v.edges.size();
    return BC_OK;
  });
}

bc_status bc_hypergraph_union(const bc_hypergraph* a, const bc_hypergraph* b,
                              bc_hypergraph** out) {
  return guard([&] {
    *out = new bc_hypergraph{bcast::disjoint_union(a->v, b->v)};
    return BC_OK;
  });
}

bc_status bc_hypergraph_copies(const bc_hypergraph* h, int k, bc_hypergraph** out) {
  return guard([&] {
    *out = new bc_hypergraph{bcast::k_copies(h->v, k)};
    return BC_OK;
  });
}

void bc_hypergraph_free(bc_hypergraph* h) { delete h; }

/* ---- generators ---- */

bc_status bc_gen_cycle(int n, bc_hypergraph** out) {
  return guard([&] {
    *out = new bc_hypergraph{bcast::cycle_instance(n)};
    return BC_OK;
  });
}

bc_status bc_gen_antihole(int m, bc_hypergraph** out) {
  return guard([&] {
    *out = new bc_hypergraph{bcast::antihole_instance(m)};
    return BC_OK;
  });
}

bc_status bc_gen_two_missing(int k, bc_hypergraph** out) {
  return guard([&] {
    *out = new bc_hypergraph{bcast::two_missing_instance(k)};
    return BC_OK;
  });
}

static bcast::PairMissSpec make_spec(int k, const uint64_t* generators, size_t count) {
  bcast::PairMissSpec spec;
  spec.k = k;
  spec.generators.assign(generators, generators + count);
  std::sort(spec.generators.begin(), spec.generators.end());
  spec.generators.erase(std::unique(spec.generators.begin(), spec.generators.end()),
                        spec.generators.end());
  bcast::validate_or_throw(spec);
  return spec;
}

bc_status bc_gen_pair_miss(int k, const uint64_t* generators, size_t count,
                           bc_hypergraph** out) {
  return guard([&] {
    *out = new bc_hypergraph{bcast::pair_miss_instance(make_spec(k, generators, count))};
    return BC_OK;
  });
}

bc_status bc_gen_kneser_elg(int k, int s, char** out) {
  return guard([&] {
    *out = dup_string(bcast::to_elg(bcast::kneser_graph(k, s)));
    return BC_OK;
  });
}

bc_status bc_gen_threshold_elg(int k, int d, char** out) {
  return guard([&] {
    auto spec = bcast::hamming_threshold_graph(k, d);
    if (k > 14) bcast::fail(bcast::Errc::size_over_limit, "threshold edge list needs k <= 14");
    bcast::ExplicitGraph g;
    g.n = 1 << k;
    for (bcast::word_t x = 0; x < static_cast<bcast::word_t>(g.n); ++x)
      for (bcast::word_t gen : spec.generators) {
        bcast::word_t y = x ^ gen;
        if (y > x) g.edges.push_back({static_cast<int>(x), static_cast<int>(y)});
      }
    std::sort(g.edges.begin(), g.edges.end());
    *out = dup_string(bcast::to_elg(g));
    return BC_OK;
  });
}

bc_status bc_gen_antihole_elg(int m, char** out) {
  return guard([&] {
    *out = dup_string(bcast::to_elg(bcast::antihole_graph(m)));
    return BC_OK;
  });
}

bc_status bc_gen_pair_miss_pms(int k, const uint64_t* generators, size_t count, char** out) {
  return guard([&] {
    *out = dup_string(bcast::to_pms(make_spec(k, generators, count)));
    return BC_OK;
  });
}

/* ---- confusion graphs ---- */

bc_status bc_confusion(const bc_hypergraph* h, int t, bc_cayley** out) {
  return guard([&] {
    *out = new bc_cayley{bcast::confusion_generators(h->v, t)};
    return BC_OK;
  });
}

bc_status bc_antihole_confusion(int m, bc_cayley** out) {
  return guard([&] {
    *out = new bc_cayley{bcast::antihole_confusion_graph(m)};
    return BC_OK;
  });
}

bc_status bc_cayley_parse_gen(const char* text, bc_cayley** out) {
  return guard([&] {
    *out = new bc_cayley{bcast::parse_gen(text ? text : "")};
    return BC_OK;
  });
}

bc_status bc_cayley_to_gen_text(const bc_cayley* c, char** out) {
  return guard([&] {
    *out = dup_string(bcast::to_gen(c->v));
    return BC_OK;
  });
}

bc_status bc_cayley_dim(const bc_cayley* c, int* out) {
  return guard([&] {
    *out = c->v.m;
    return BC_OK;
  });
}

bc_status bc_cayley_generator_count(const bc_cayley* c, size_t* out) {
  return guard([&] {
    *out = c->v.generators.size();
    return BC_OK;
  });
}

void bc_cayley_free(bc_cayley* c) { delete c; }

/* ---- independent sets ---- */

bc_status bc_mis_exact(const bc_cayley* c, bc_iset** out) {
  return guard([&] {
    *out = new bc_iset{bcast::max_independent_set_exact(c->v, g_limits)};
    return BC_OK;
  });
}

bc_status bc_mis_heuristic(const bc_cayley* c, uint64_t seed, uint64_t budget,
                           const bc_iset* warm, bc_iset** out) {
  return guard([&] {
    bcast::RunConfig cfg = make_config(seed, budget, 0);
    *out = new bc_iset{bcast::independent_set_heuristic(
        c->v, cfg.seed, budget, cfg.limits, warm ? &warm->v : nullptr)};
    return BC_OK;
  });
}

bc_status bc_iset_parse(const char* text, bc_iset** out) {
  return guard([&] {
    *out = new bc_iset{bcast::parse_iset(text ? text : "")};
    return BC_OK;
  });
}

bc_status bc_iset_to_text(const bc_iset* s, char** out) {
  return guard([&] {
    *out = dup_string(bcast::to_iset(s->v));
    return BC_OK;
  });
}

bc_status bc_iset_size(const bc_iset* s, size_t* out) {
  return guard([&] {
    *out = s->v.words.size();
    return BC_OK;
  });
}

bc_status bc_iset_is_exact(const bc_iset* s, int* out) {
  return guard([&] {
    *out = s->v.exact ? 1 : 0;
    return BC_OK;
  });
}

bc_status bc_verify_iset(const bc_cayley* c, const bc_iset* s, int workers, char** witness) {
  return guard([&]() -> bc_status {
    auto w = bcast::verify_independent_set(c->v, s->v, workers > 0 ? workers : 1);
    if (!w) return BC_OK;
    if (witness) *witness = dup_string(witness_line(*w, c->v.m));
    g_last_error = "adjacent pair " + witness_line(*w, c->v.m);
    return BC_EVERIFY;
  });
}

void bc_iset_free(bc_iset* s) { delete s; }

/* ---- colorings ---- */

bc_status bc_coloring_load(const char* path, bc_coloring** out) {
  return guard([&] {
    std::string p = path ? path : "";
    std::string dir = ".";
    auto slash = p.find_last_of('/');
    if (slash != std::string::npos) dir = p.substr(0, slash);
    *out = new bc_coloring{bcast::parse_col(bcast::read_file(p), dir)};
    return BC_OK;
  });
}

bc_status bc_coloring_parse(const char* text, const char* base_dir, bc_coloring** out) {
  return guard([&] {
    *out = new bc_coloring{bcast::parse_col(text ? text : "", base_dir ? base_dir : "")};
    return BC_OK;
  });
}

bc_status bc_coloring_to_text(const bc_coloring* c, char** out) {
  return guard([&] {
    *out = dup_string(bcast::to_col(c->v));
    return BC_OK;
  });
}

bc_status bc_coloring_syndrome(int k, bc_coloring** out) {
  return guard([&] {
    *out = new bc_coloring{bcast::syndrome_coloring(k)};
    return BC_OK;
  });
}

bc_status bc_coloring_rs(int k, int t, bc_coloring** out) {
  return guard([&] {
    *out = new bc_coloring{bcast::rs_coloring(k, t)};
    return BC_OK;
  });
}

bc_status bc_coloring_mod3(const char* pms_path, const char* base_col_path, bc_coloring** out) {
  return guard([&] {
    bcast::ColoringCert cert;
    cert.kind = bcast::ColoringCert::Kind::construction;
    cert.name = "mod3";
    cert.params = {pms_path ? pms_path : "", base_col_path ? base_col_path : ""};
    cert.base_dir = ".";
    // materialize once so invalid inputs fail here, and record the shape
    bcast::PairMissSpec spec = bcast::parse_pms(bcast::read_file(cert.params[0]));
    cert.m = 1 << spec.k;
    auto table = bcast::materialize_coloring(cert, cert.m);
    cert.color_count = bcast::count_colors(table);
    *out = new bc_coloring{cert};
    return BC_OK;
  });
}

bc_status bc_coloring_expand(const bc_coloring* c, int expected_m, bc_coloring** out) {
  return guard([&] {
    bcast::ColoringCert expanded;
    expanded.kind = bcast::ColoringCert::Kind::table;
    expanded.m = expected_m;
    expanded.table = bcast::materialize_coloring(c->v, expected_m);
    expanded.color_count = bcast::count_colors(expanded.table);
    *out = new bc_coloring{expanded};
    return BC_OK;
  });
}

bc_status bc_coloring_color_count(const bc_coloring* c, int expected_m, int* out) {
  return guard([&] {
    auto table = bcast::materialize_coloring(c->v, expected_m);
    *out = bcast::count_colors(table);
    return BC_OK;
  });
}

bc_status bc_verify_coloring(const bc_cayley* g, const bc_coloring* c, int workers,
                             int* colors_used, char** witness) {
  return guard([&]() -> bc_status {
    auto w = bcast::verify_coloring(g->v, c->v, {}, workers > 0 ? workers : 1);
    if (colors_used) {
      auto table = bcast::materialize_coloring(c->v, g->v.m);
      *colors_used = bcast::count_colors(table);
    }
    if (!w) return BC_OK;
    if (witness) *witness = dup_string(witness_line(*w, g->v.m));
    g_last_error = "adjacent pair with equal colors: " + witness_line(*w, g->v.m);
    return BC_EVERIFY;
  });
}

void bc_coloring_free(bc_coloring* c) { delete c; }

/* ---- lifting ---- */

bc_status bc_lift_iset(const bc_iset* in, bc_iset** out) {
  return guard([&] {
    *out = new bc_iset{bcast::antihole_lift_is(in->v)};
    return BC_OK;
  });
}

bc_status bc_lift_coloring(const bc_coloring* in, bc_coloring** out) {
  return guard([&] {
    *out = new bc_coloring{bcast::antihole_lift_coloring(in->v)};
    return BC_OK;
  });
}

bc_status bc_mask_check(int n, char** counterexample) {
  return guard([&]() -> bc_status {
    auto bad = bcast::mask_nongenerator_check(n);
    if (!bad) return BC_OK;
    if (counterexample) *counterexample = dup_string(bcast::to_hex(*bad, 2 * n + 1));
    g_last_error = "mask claim fails at word " + bcast::to_hex(*bad, 2 * n + 1);
    return BC_EVERIFY;
  });
}

/* ---- exact chromatic ---- */

bc_status bc_chromatic(const bc_cayley* c, int alpha_hint, int* lower, int* upper, int* exact) {
  return guard([&] {
    bcast::Limits limits = g_limits;
    int hint = alpha_hint;
    if (hint == 0 && c->v.vertex_count() <= limits.exact_mis_vertices)
      hint = static_cast<int>(bcast::max_independent_set_exact(c->v, limits).size());
    auto res = bcast::exact_chromatic(c->v, limits, hint);
    if (lower) *lower = res.lower;
    if (upper) *upper = res.upper;
    if (exact) *exact = res.exact ? 1 : 0;
    return BC_OK;
  });
}

/* ---- rates ---- */

bc_status bc_alpha_arrow(const bc_hypergraph* h, int* out) {
  return guard([&] {
    *out = bcast::alpha_arrow(h->v);
    return BC_OK;
  });
}

bc_status bc_analyze(const bc_hypergraph* h, int t_max, const int* ks, size_t ks_count,
                     uint64_t seed, uint64_t budget, int workers, int as_json, char** out) {
  return guard([&] {
    bcast::RunConfig cfg = make_config(seed, budget, workers);
    std::vector<int> kv(ks, ks + ks_count);
    if (kv.empty()) kv = {1};
    auto report = bcast::rate_report(h->v, t_max, kv, cfg);
    *out = dup_string(as_json ? bcast::report_to_json(report) : bcast::report_to_text(report));
    return BC_OK;
  });
}

bc_status bc_codeword_bounds_json(int n, uint64_t gamma, int k, char** out) {
  return guard([&] {
    auto b = bcast::codeword_bounds(n, gamma, k);
    std::string json = "{\n  \"k\": " + std::to_string(k) + ",\n  \"lower\": \"" +
                       b.lower_num.str() + "/" + b.lower_den.str() + "\",\n  \"lower_decimal\": \"" +
                       b.lower_decimal + "\",\n  \"upper\": \"" + b.upper.str() +
                       "\",\n  \"upper_alt\": \"" + b.upper_alt.str() + "\",\n  \"alt_factor\": " +
                       std::to_string(b.alt_factor) + "\n}\n";
    *out = dup_string(json);
    return BC_OK;
  });
}

bc_status bc_ratio_at_least(int linear_lower, int n, uint64_t gamma, int p, int q, int* holds) {
  return guard([&] {
    *holds = bcast::ratio_at_least(linear_lower, n, gamma, p, q) ? 1 : 0;
    return BC_OK;
  });
}

/* ---- min-rank ---- */

bc_status bc_minrank_elg(const char* elg_text, int q, int r_max, int* found, int* rank,
                         char** witness_mat) {
  return guard([&] {
    auto g = bcast::parse_elg(elg_text ? elg_text : "");
    auto res = bcast::min_rank_search(g, q, r_max);
    if (found) *found = res.found ? 1 : 0;
    if (rank) *rank = res.found ? res.rank : 0;
    if (witness_mat && res.found) *witness_mat = dup_string(bcast::to_mat(res.witness, q));
    return BC_OK;
  });
}

bc_status bc_refute_rank2(int m, int q, char** counterexample_mat) {
  return guard([&]() -> bc_status {
    auto bad = bcast::antihole_rank2_refute(m, q);
    if (!bad) return BC_OK;
    if (counterexample_mat) *counterexample_mat = dup_string(bcast::to_mat(*bad, q));
    g_last_error = "found a fitting matrix of rank <= 2";
    return BC_EVERIFY;
  });
}

/* ---- network export ---- */

bc_status bc_export_network_json(const bc_hypergraph* h, int64_t capacity, char** out) {
  return guard([&] {
    *out = dup_string(bcast::network_to_json(bcast::to_network(h->v, capacity)));
    return BC_OK;
  });
}

bc_status bc_export_network_dot(const bc_hypergraph* h, int64_t capacity, char** out) {
  return guard([&] {
    *out = dup_string(bcast::network_to_dot(bcast::to_network(h->v, capacity)));
    return BC_OK;
  });
}

bc_status bc_gap_report(int linear_lower, int n, uint64_t gamma, char** out) {
  return guard([&] {
    auto g = bcast::gap_report(linear_lower, n, gamma);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", g.ratio);
    *out = dup_string(std::string(buf) + "\n" + g.chain + "\n");
    return BC_OK;
  });
}

/* ---- reproduction helpers ---- */

bc_status bc_antihole_table(const int* rows, size_t count, uint64_t seed, uint64_t budget,
                            int workers, int as_json, char** out) {
  return guard([&] {
    std::vector<int> ms(rows, rows + count);
    if (ms.empty()) ms = {5, 7, 9, 11, 13};
    bcast::RunConfig cfg = make_config(seed, budget, workers);
    auto table = bcast::antihole_alpha_table(ms, cfg);
    *out = dup_string(as_json ? bcast::antihole_table_to_json(table)
                              : bcast::antihole_table_to_text(table));
    return BC_OK;
  });
}

bc_status bc_verify_antihole_coloring(const char* col_path, int m, int* colors_used) {
  return guard([&] {
    int colors = bcast::verify_antihole_coloring(col_path ? col_path : "", m);
    if (colors_used) *colors_used = colors;
    return BC_OK;
  });
}

}  // extern "C"
