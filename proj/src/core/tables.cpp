#include "tables.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "codes.hpp"
#include "instances.hpp"
#include "json.hpp"

namespace bcast {

std::uint64_t reference_antihole_alpha(int m) {
  switch (m) {
    case 5: return 5;
    case 7: return 22;
    case 9: return 93;
    case 11: return 386;
    case 13: return 1586;
    case 15: return 6476;
    case 17: return 26317;
    case 19: return 106744;
    case 21: return 430592;
    case 23: return 1744414;
    default: return 0;
  }
}

CayleyGraph antihole_confusion_graph(int m) {
  return confusion_generators(antihole_instance(m), 1);
}

std::vector<AntiholeRow> antihole_alpha_table(const std::vector<int>& rows,
                                              const RunConfig& config) {
  std::vector<int> ms = rows;
  std::sort(ms.begin(), ms.end());
  std::vector<AntiholeRow> out;
  IndependentSetCert carry;  // best set so far, lifted forward as a seed
  int carry_m = 0;
  for (int m : ms) {
    if (m < 5 || m % 2 == 0) fail(Errc::invalid_argument, "table rows must be odd and >= 5");
    CayleyGraph conf = antihole_confusion_graph(m);
    AntiholeRow row;
    row.m = m;
    row.reference_alpha = reference_antihole_alpha(m);
    IndependentSetCert cert;
    if (m == 5) {
      cert = max_independent_set_exact(conf, config.limits);
    } else {
      IndependentSetCert seed;
      if (carry_m > 0) {
        seed = carry;
        while (seed.m < m) seed = antihole_lift_is(seed, config.limits);
      }
      cert = independent_set_heuristic(conf, config.seed, config.heuristic_budget, config.limits,
                                       carry_m > 0 ? &seed : nullptr);
    }
    if (auto w = verify_independent_set(conf, cert, config.workers))
      fail(Errc::verify_failed, "search returned a non-independent set");
    row.alpha = cert.size();
    row.exact = cert.exact;
    row.chi_f_upper = fractional_chromatic_vt(conf, cert.size());
    out.push_back(row);
    carry = cert;
    carry_m = m;
  }
  return out;
}

std::string antihole_table_to_text(const std::vector<AntiholeRow>& rows) {
  std::ostringstream os;
  os << "  m | alpha(C(antihole m))      | chi_f upper        | published\n";
  os << "----+---------------------------+--------------------+----------\n";
  for (const auto& r : rows) {
    char chif[64];
    std::snprintf(chif, sizeof chif, "%llu/%llu ~ %.3f",
                  static_cast<unsigned long long>(std::uint64_t{1} << r.m),
                  static_cast<unsigned long long>(r.alpha),
                  std::ldexp(1.0, r.m) / static_cast<double>(r.alpha));
    char buf[160];
    std::snprintf(buf, sizeof buf, "%3d | %s %10llu | %-18s | >= %llu\n", r.m,
                  r.exact ? " =" : ">=", static_cast<unsigned long long>(r.alpha), chif,
                  static_cast<unsigned long long>(r.reference_alpha));
    os << buf;
  }
  return os.str();
}

std::string antihole_table_to_json(const std::vector<AntiholeRow>& rows) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rows) {
    char chif[32];
    std::snprintf(chif, sizeof chif, "%.6f", std::ldexp(1.0, r.m) / static_cast<double>(r.alpha));
    j.push_back({{"m", r.m},
                 {"alpha", r.alpha},
                 {"exact", r.exact},
                 {"chi_f_upper", chif},
                 {"published_alpha", r.reference_alpha}});
  }
  return j.dump(2) + "\n";
}

int verify_antihole_coloring(const std::string& col_path, int m, const Limits& limits) {
  std::string dir = ".";
  auto slash = col_path.find_last_of('/');
  if (slash != std::string::npos) dir = col_path.substr(0, slash);
  ColoringCert cert = parse_col(read_file(col_path), dir);
  CayleyGraph conf = antihole_confusion_graph(m);
  if (auto w = verify_coloring(conf, cert, limits))
    fail(Errc::verify_failed, "coloring improper: vertices " + to_hex(w->first, m) + " and " +
                                  to_hex(w->second, m) + " are adjacent with equal colors");
  auto colors = materialize_coloring(cert, m, limits);
  return count_colors(colors);
}

}  // namespace bcast
