// bcr: command-line front end for the bcast shared library. Exit codes:
// 0 success / certificate verified, 1 failure or refuted certificate,
// 2 usage error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bcast.h"

namespace {

struct Global {
  std::uint64_t seed = 1;
  std::uint64_t budget = 200000;
  int workers = 1;
  std::uint64_t exact_limit = 0;
  bool json = false;
};

[[noreturn]] void die(const std::string& context) {
  std::cerr << "bcr: " << context;
  const char* detail = bc_last_error();
  if (detail && *detail) std::cerr << ": " << detail;
  std::cerr << "\n";
  std::exit(1);
}

void check(bc_status st, const std::string& context) {
  if (st != BC_OK) die(context);
}

std::string take_string(char* s) {
  std::string out = s ? s : "";
  bc_string_free(s);
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::cerr << "bcr: cannot write " << out_path << "\n";
    std::exit(1);
  }
  f << text;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "bcr: cannot open " << path << "\n";
    std::exit(1);
  }
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::vector<std::uint64_t> parse_u64_list(const std::string& csv) {
  std::vector<std::uint64_t> out;
  std::istringstream is(csv);
  std::string tok;
  while (std::getline(is, tok, ','))
    if (!tok.empty()) out.push_back(std::stoull(tok, nullptr, 0));
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  for (auto v : parse_u64_list(csv)) out.push_back(static_cast<int>(v));
  return out;
}

// graph source shared by mis/chi/verify: either a .bhg file with a block
// length, or an odd antihole shortcut
struct GraphSource {
  std::string bhg_path;
  int t = 1;
  int antihole = 0;

  bc_cayley* open() const {
    bc_cayley* c = nullptr;
    if (antihole > 0) {
      check(bc_antihole_confusion(antihole, &c), "building antihole confusion graph");
      return c;
    }
    if (bhg_path.empty()) {
      std::cerr << "bcr: need a .bhg file or --antihole\n";
      std::exit(2);
    }
    bc_hypergraph* h = nullptr;
    check(bc_hypergraph_load(bhg_path.c_str(), &h), "loading " + bhg_path);
    bc_status st = bc_confusion(h, t, &c);
    bc_hypergraph_free(h);
    check(st, "building confusion graph");
    return c;
  }
};

void apply_limits(const Global& g) {
  if (g.exact_limit) check(bc_set_exact_limits(g.exact_limit, g.exact_limit), "setting limits");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"broadcast-rate toolkit for side-information broadcast networks"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--seed", g.seed, "64-bit seed for randomized searches");
  app.add_option("--budget", g.budget, "heuristic iteration budget");
  app.add_option("--workers", g.workers, "verification worker threads");
  app.add_option("--exact-limit", g.exact_limit, "vertex limit for the exact solvers");
  app.add_flag("--json", g.json, "machine-readable output where supported");

  // gen ------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "generate an instance family");
  std::string gen_family, gen_out, gen_generators, gen_pms_out;
  std::vector<int> gen_params;
  gen->add_option("family", gen_family,
                  "cycle | antihole | two-missing | pair-miss | kneser | threshold | antihole-graph")
      ->required();
  gen->add_option("params", gen_params, "family parameters");
  gen->add_option("--generators", gen_generators, "pair-miss generator list (comma separated)");
  gen->add_option("-o,--out", gen_out, "output file (stdout if omitted)");
  gen->add_option("--pms-out", gen_pms_out, "also write the pair-miss spec file");

  // analyze ---------------------------------------------------------------
  auto* analyze = app.add_subcommand("analyze", "rate report for a network");
  std::string an_path, an_ks = "1";
  int an_tmax = 1;
  analyze->add_option("file", an_path, ".bhg input")->required();
  analyze->add_option("--t-max", an_tmax, "largest block length to analyze");
  analyze->add_option("--k", an_ks, "codeword-bound copy counts (comma separated)");

  // mis ---------------------------------------------------------------------
  auto* mis = app.add_subcommand("mis", "maximum independent set of a confusion graph");
  GraphSource mis_src;
  std::string mis_out, mis_warm;
  bool mis_heuristic = false;
  mis->add_option("file", mis_src.bhg_path, ".bhg input");
  mis->add_option("-t,--block-length", mis_src.t, "block length (default 1)");
  mis->add_option("--antihole", mis_src.antihole, "use the antihole confusion graph directly");
  mis->add_flag("--heuristic", mis_heuristic, "force the heuristic search");
  mis->add_option("--warm", mis_warm, "warm-start .iset file for the heuristic");
  mis->add_option("-o,--out", mis_out, "output .iset file");

  // chi ---------------------------------------------------------------------
  auto* chi = app.add_subcommand("chi", "chromatic number of a confusion graph");
  GraphSource chi_src;
  chi->add_option("file", chi_src.bhg_path, ".bhg input");
  chi->add_option("-t,--block-length", chi_src.t, "block length (default 1)");
  chi->add_option("--antihole", chi_src.antihole, "use the antihole confusion graph directly");

  // color ---------------------------------------------------------------------
  auto* color = app.add_subcommand("color", "emit a coloring certificate");
  std::string col_name, col_out;
  std::vector<std::string> col_params;
  bool col_expand = false;
  color->add_option("name", col_name, "syndrome | rs | mod3 | lift | greedy")->required();
  color->add_option("params", col_params, "construction parameters");
  color->add_flag("--expand", col_expand, "write an explicit table instead of the named form");
  color->add_option("-o,--out", col_out, "output .col file");

  // verify ---------------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "check a certificate against a confusion graph");
  GraphSource ver_src;
  std::string ver_iset, ver_col;
  verify->add_option("file", ver_src.bhg_path, ".bhg input");
  verify->add_option("-t,--block-length", ver_src.t, "block length (default 1)");
  verify->add_option("--antihole", ver_src.antihole, "use the antihole confusion graph directly");
  verify->add_option("--iset", ver_iset, "independent-set certificate");
  verify->add_option("--col", ver_col, "coloring certificate");

  // lift ---------------------------------------------------------------------
  auto* lift = app.add_subcommand("lift", "x4 extension to the next odd antihole");
  std::string lift_iset, lift_col, lift_out;
  lift->add_option("--iset", lift_iset, "input .iset certificate");
  lift->add_option("--col", lift_col, "input .col certificate");
  lift->add_option("-o,--out", lift_out, "output file");

  // minrank ---------------------------------------------------------------------
  auto* minrank = app.add_subcommand("minrank", "minimum rank of a fitting matrix");
  std::string mr_elg;
  int mr_antihole = 0, mr_field = 2, mr_rmax = 3;
  bool mr_refute = false;
  minrank->add_option("file", mr_elg, ".elg graph input");
  minrank->add_option("--antihole", mr_antihole, "use the antihole graph directly");
  minrank->add_option("--field", mr_field, "field order q (2,3,4,5,7,8)");
  minrank->add_option("--r-max", mr_rmax, "largest rank to try");
  minrank->add_flag("--refute2", mr_refute, "only check that no rank <= 2 fit exists");
  std::string mr_out;
  minrank->add_option("-o,--out", mr_out, "witness .mat output");

  // bounds ---------------------------------------------------------------------
  auto* bounds = app.add_subcommand("bounds", "codeword-count bounds for k copies");
  std::string bo_path;
  int bo_k = 1;
  std::uint64_t bo_gamma = 0;
  bounds->add_option("file", bo_path, ".bhg input")->required();
  bounds->add_option("--k", bo_k, "number of copies");
  bounds->add_option("--gamma", bo_gamma, "confusion-graph independence number, if known");

  // export-net ------------------------------------------------------------------
  auto* exnet = app.add_subcommand("export-net", "network-coding reduction");
  std::string en_path, en_out, en_dot;
  std::int64_t en_capacity = 1;
  exnet->add_option("file", en_path, ".bhg input")->required();
  exnet->add_option("--capacity", en_capacity, "capacity of the bottleneck edge");
  exnet->add_option("-o,--out", en_out, "network JSON output");
  exnet->add_option("--dot", en_dot, "also write a DOT rendering");

  // table-appendix-c ---------------------------------------------------------------
  auto* table = app.add_subcommand("table-appendix-c",
                                   "independence table for odd-antihole confusion graphs");
  std::string tab_rows = "5,7,9,11,13";
  table->add_option("--rows", tab_rows, "antihole sizes (comma separated, odd)");

  // verify-appendix-d ----------------------------------------------------------------
  auto* appd = app.add_subcommand("verify-appendix-d",
                                  "check the stored 7-coloring of the 128-vertex graph");
  std::string appd_file = "data/appendix_d.col";
  appd->add_option("--file", appd_file, "coloring fixture path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  apply_limits(g);

  if (*gen) {
    auto need = [&](std::size_t k) {
      if (gen_params.size() != k) {
        std::cerr << "bcr: gen " << gen_family << " needs " << k << " parameter(s)\n";
        std::exit(2);
      }
    };
    char* text = nullptr;
    if (gen_family == "cycle" || gen_family == "antihole" || gen_family == "two-missing") {
      need(1);
      bc_hypergraph* h = nullptr;
      if (gen_family == "cycle")
        check(bc_gen_cycle(gen_params[0], &h), "generating cycle");
      else if (gen_family == "antihole")
        check(bc_gen_antihole(gen_params[0], &h), "generating antihole");
      else
        check(bc_gen_two_missing(gen_params[0], &h), "generating two-missing");
      check(bc_hypergraph_to_text(h, &text), "serializing");
      bc_hypergraph_free(h);
    } else if (gen_family == "pair-miss") {
      need(1);
      auto gens = parse_u64_list(gen_generators);
      bc_hypergraph* h = nullptr;
      check(bc_gen_pair_miss(gen_params[0], gens.data(), gens.size(), &h),
            "generating pair-miss");
      check(bc_hypergraph_to_text(h, &text), "serializing");
      bc_hypergraph_free(h);
      if (!gen_pms_out.empty()) {
        char* pms = nullptr;
        check(bc_gen_pair_miss_pms(gen_params[0], gens.data(), gens.size(), &pms),
              "writing spec file");
        emit(take_string(pms), gen_pms_out);
      }
    } else if (gen_family == "kneser") {
      need(2);
      check(bc_gen_kneser_elg(gen_params[0], gen_params[1], &text), "generating Kneser graph");
    } else if (gen_family == "threshold") {
      need(2);
      check(bc_gen_threshold_elg(gen_params[0], gen_params[1], &text),
            "generating threshold graph");
    } else if (gen_family == "antihole-graph") {
      need(1);
      check(bc_gen_antihole_elg(gen_params[0], &text), "generating antihole graph");
    } else {
      std::cerr << "bcr: unknown family '" << gen_family << "'\n";
      return 2;
    }
    emit(take_string(text), gen_out);
    return 0;
  }

  if (*analyze) {
    bc_hypergraph* h = nullptr;
    check(bc_hypergraph_load(an_path.c_str(), &h), "loading " + an_path);
    auto ks = parse_int_list(an_ks);
    char* text = nullptr;
    check(bc_analyze(h, an_tmax, ks.data(), ks.size(), g.seed, g.budget, g.workers,
                     g.json ? 1 : 0, &text),
          "analyzing");
    bc_hypergraph_free(h);
    std::cout << take_string(text);
    return 0;
  }

  if (*mis) {
    bc_cayley* c = mis_src.open();
    bc_iset* s = nullptr;
    if (mis_heuristic) {
      bc_iset* warm = nullptr;
      if (!mis_warm.empty())
        check(bc_iset_parse(slurp(mis_warm).c_str(), &warm), "parsing warm start");
      check(bc_mis_heuristic(c, g.seed, g.budget, warm, &s), "heuristic search");
      if (warm) bc_iset_free(warm);
    } else {
      check(bc_mis_exact(c, &s), "exact search");
    }
    size_t size = 0;
    int exact = 0;
    bc_iset_size(s, &size);
    bc_iset_is_exact(s, &exact);
    char* witness = nullptr;
    check(bc_verify_iset(c, s, g.workers, &witness), "revalidating result");
    std::cerr << "independent set of size " << size << (exact ? " (maximum)" : " (lower bound)")
              << "\n";
    char* text = nullptr;
    check(bc_iset_to_text(s, &text), "serializing");
    emit(take_string(text), mis_out);
    bc_iset_free(s);
    bc_cayley_free(c);
    return 0;
  }

  if (*chi) {
    bc_cayley* c = chi_src.open();
    int lo = 0, hi = 0, exact = 0;
    check(bc_chromatic(c, 0, &lo, &hi, &exact), "chromatic search");
    if (g.json)
      std::cout << "{\"chi_lower\": " << lo << ", \"chi_upper\": " << hi
                << ", \"exact\": " << (exact ? "true" : "false") << "}\n";
    else if (exact)
      std::cout << "chi = " << hi << " (exact)\n";
    else
      std::cout << "chi in [" << lo << ", " << hi << "]\n";
    bc_cayley_free(c);
    return 0;
  }

  if (*color) {
    auto need = [&](std::size_t k) {
      if (col_params.size() != k) {
        std::cerr << "bcr: color " << col_name << " needs " << k << " parameter(s)\n";
        std::exit(2);
      }
    };
    bc_coloring* cert = nullptr;
    int expected_m = 0;
    if (col_name == "syndrome") {
      need(1);
      int k = std::stoi(col_params[0]);
      check(bc_coloring_syndrome(k, &cert), "building syndrome coloring");
      expected_m = (1 << k) - 1;
    } else if (col_name == "rs") {
      need(2);
      int k = std::stoi(col_params[0]), t = std::stoi(col_params[1]);
      check(bc_coloring_rs(k, t, &cert), "building rs coloring");
      expected_m = ((1 << k) - 1) * t;
    } else if (col_name == "mod3") {
      need(2);
      check(bc_coloring_mod3(col_params[0].c_str(), col_params[1].c_str(), &cert),
            "building mod3 coloring");
      col_expand = true;  // named form stores the original paths; expand for portability
    } else if (col_name == "lift") {
      need(1);
      bc_coloring* inner = nullptr;
      check(bc_coloring_load(col_params[0].c_str(), &inner), "loading inner coloring");
      check(bc_lift_coloring(inner, &cert), "lifting");
      bc_coloring_free(inner);
    } else {
      std::cerr << "bcr: unknown construction '" << col_name << "'\n";
      return 2;
    }
    if (col_expand && expected_m > 0) {
      bc_coloring* expanded = nullptr;
      check(bc_coloring_expand(cert, expected_m, &expanded), "expanding");
      bc_coloring_free(cert);
      cert = expanded;
    }
    char* text = nullptr;
    check(bc_coloring_to_text(cert, &text), "serializing");
    emit(take_string(text), col_out);
    bc_coloring_free(cert);
    return 0;
  }

  if (*verify) {
    if (ver_iset.empty() == ver_col.empty()) {
      std::cerr << "bcr: verify needs exactly one of --iset / --col\n";
      return 2;
    }
    bc_cayley* c = ver_src.open();
    if (!ver_iset.empty()) {
      bc_iset* s = nullptr;
      check(bc_iset_parse(slurp(ver_iset).c_str(), &s), "parsing certificate");
      char* witness = nullptr;
      bc_status st = bc_verify_iset(c, s, g.workers, &witness);
      size_t size = 0;
      bc_iset_size(s, &size);
      bc_iset_free(s);
      bc_cayley_free(c);
      if (st == BC_OK) {
        std::cout << "ok: independent set of size " << size << "\n";
        return 0;
      }
      if (st == BC_EVERIFY) {
        std::cout << "refuted: confusable pair " << take_string(witness) << "\n";
        return 1;
      }
      die("verification");
    } else {
      bc_coloring* cert = nullptr;
      check(bc_coloring_load(ver_col.c_str(), &cert), "loading certificate");
      int colors = 0;
      char* witness = nullptr;
      bc_status st = bc_verify_coloring(c, cert, g.workers, &colors, &witness);
      bc_coloring_free(cert);
      bc_cayley_free(c);
      if (st == BC_OK) {
        std::cout << colors << " colors, proper\n";
        return 0;
      }
      if (st == BC_EVERIFY) {
        std::cout << "refuted: adjacent pair with equal colors " << take_string(witness) << "\n";
        return 1;
      }
      die("verification");
    }
  }

  if (*lift) {
    if (lift_iset.empty() == lift_col.empty()) {
      std::cerr << "bcr: lift needs exactly one of --iset / --col\n";
      return 2;
    }
    if (!lift_iset.empty()) {
      bc_iset* in = nullptr;
      check(bc_iset_parse(slurp(lift_iset).c_str(), &in), "parsing certificate");
      bc_iset* out = nullptr;
      check(bc_lift_iset(in, &out), "lifting");
      char* text = nullptr;
      check(bc_iset_to_text(out, &text), "serializing");
      emit(take_string(text), lift_out);
      bc_iset_free(in);
      bc_iset_free(out);
    } else {
      bc_coloring* in = nullptr;
      check(bc_coloring_load(lift_col.c_str(), &in), "loading certificate");
      bc_coloring* out = nullptr;
      check(bc_lift_coloring(in, &out), "lifting");
      char* text = nullptr;
      check(bc_coloring_to_text(out, &text), "serializing");
      emit(take_string(text), lift_out);
      bc_coloring_free(in);
      bc_coloring_free(out);
    }
    return 0;
  }

  if (*minrank) {
    std::string elg;
    if (mr_antihole > 0) {
      char* t = nullptr;
      check(bc_gen_antihole_elg(mr_antihole, &t), "building antihole graph");
      elg = take_string(t);
    } else if (!mr_elg.empty()) {
      elg = slurp(mr_elg);
    } else {
      std::cerr << "bcr: minrank needs a graph file or --antihole\n";
      return 2;
    }
    if (mr_refute) {
      if (mr_antihole <= 0) {
        std::cerr << "bcr: --refute2 works on --antihole targets\n";
        return 2;
      }
      char* counter = nullptr;
      bc_status st = bc_refute_rank2(mr_antihole, mr_field, &counter);
      if (st == BC_OK) {
        std::cout << "ok: no fitting matrix of rank <= 2 over GF(" << mr_field << ")\n";
        return 0;
      }
      if (st == BC_EVERIFY) {
        std::cout << "refuted:\n" << take_string(counter);
        return 1;
      }
      die("refutation");
    }
    int found = 0, rank = 0;
    char* witness = nullptr;
    check(bc_minrank_elg(elg.c_str(), mr_field, mr_rmax, &found, &rank, &witness), "searching");
    if (found) {
      std::cout << "minrank = " << rank << " over GF(" << mr_field << ")\n";
      if (!mr_out.empty()) emit(take_string(witness), mr_out);
      else bc_string_free(witness);
    } else {
      std::cout << "minrank > " << mr_rmax << " over GF(" << mr_field << ")\n";
    }
    return 0;
  }

  if (*bounds) {
    bc_hypergraph* h = nullptr;
    check(bc_hypergraph_load(bo_path.c_str(), &h), "loading " + bo_path);
    int n = 0;
    bc_hypergraph_blocks(h, &n);
    std::uint64_t gamma = bo_gamma;
    if (gamma == 0) {
      bc_cayley* c = nullptr;
      check(bc_confusion(h, 1, &c), "building confusion graph");
      bc_iset* s = nullptr;
      check(bc_mis_exact(c, &s), "computing gamma (pass --gamma to skip)");
      size_t size = 0;
      bc_iset_size(s, &size);
      gamma = size;
      bc_iset_free(s);
      bc_cayley_free(c);
    }
    char* text = nullptr;
    check(bc_codeword_bounds_json(n, gamma, bo_k, &text), "computing bounds");
    bc_hypergraph_free(h);
    std::cout << take_string(text);
    return 0;
  }

  if (*exnet) {
    bc_hypergraph* h = nullptr;
    check(bc_hypergraph_load(en_path.c_str(), &h), "loading " + en_path);
    char* json = nullptr;
    check(bc_export_network_json(h, en_capacity, &json), "exporting");
    emit(take_string(json), en_out);
    if (!en_dot.empty()) {
      char* dot = nullptr;
      check(bc_export_network_dot(h, en_capacity, &dot), "rendering DOT");
      emit(take_string(dot), en_dot);
    }
    bc_hypergraph_free(h);
    return 0;
  }

  if (*table) {
    auto rows = parse_int_list(tab_rows);
    char* text = nullptr;
    check(bc_antihole_table(rows.data(), rows.size(), g.seed, g.budget, g.workers,
                            g.json ? 1 : 0, &text),
          "building table");
    std::cout << take_string(text);
    return 0;
  }

  if (*appd) {
    int colors = 0;
    bc_status st = bc_verify_antihole_coloring(appd_file.c_str(), 7, &colors);
    if (st == BC_OK) {
      std::cout << colors << " colors, proper\n";
      return 0;
    }
    if (st == BC_EVERIFY) {
      std::cout << "refuted: " << bc_last_error() << "\n";
      return 1;
    }
    die("verifying " + appd_file);
  }

  return 2;
}
