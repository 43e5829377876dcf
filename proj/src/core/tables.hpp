#pragma once

#include <string>
#include <vector>

#include "search.hpp"

namespace bcast {

// one row of the odd-antihole independence table
struct AntiholeRow {
  int m = 0;
  std::uint64_t alpha = 0;
  bool exact = false;
  Rational chi_f_upper{1, 1};
  std::uint64_t reference_alpha = 0;  // published search value, 0 if none
};

// published alpha lower bounds for C(antihole m), m = 5..23 odd
std::uint64_t reference_antihole_alpha(int m);

// confusion graph of the odd antihole at t=1 (generators are the cyclic
// runs of one to three ones)
CayleyGraph antihole_confusion_graph(int m);

// Reproduces the independence table: exact search at m=5, heuristic
// seeded by lifting the previous row afterwards. Deterministic for a
// fixed config.
std::vector<AntiholeRow> antihole_alpha_table(const std::vector<int>& rows,
                                              const RunConfig& config);

std::string antihole_table_to_text(const std::vector<AntiholeRow>& rows);
std::string antihole_table_to_json(const std::vector<AntiholeRow>& rows);

// verify a stored coloring file against C(antihole m); returns the number
// of colors used, throwing when the coloring is improper
int verify_antihole_coloring(const std::string& col_path, int m, const Limits& limits = {});

}  // namespace bcast
