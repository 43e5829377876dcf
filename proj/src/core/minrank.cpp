#include "minrank.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "codes.hpp"

namespace bcast {

SmallField SmallField::make(int q) {
  SmallField f;
  f.q = q;
  bool prime = q == 2 || q == 3 || q == 5 || q == 7;
  bool ext = q == 4 || q == 8;
  if (!prime && !ext) fail(Errc::unsupported_field, "GF(" + std::to_string(q) + ") unsupported");
  if (prime) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        f.add[a][b] = static_cast<std::uint8_t>((a + b) % q);
        f.mul[a][b] = static_cast<std::uint8_t>((a * b) % q);
      }
    for (int a = 0; a < q; ++a) f.neg[a] = static_cast<std::uint8_t>((q - a) % q);
  } else {
    int t = q == 4 ? 2 : 3;
    GF2t field(t);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        f.add[a][b] = static_cast<std::uint8_t>(a ^ b);
        f.mul[a][b] = static_cast<std::uint8_t>(field.mul(a, b));
      }
    for (int a = 0; a < q; ++a) f.neg[a] = static_cast<std::uint8_t>(a);
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (f.mul[a][b] == 1) f.inv[a] = static_cast<std::uint8_t>(b);
  return f;
}

bool fits(const Matrix& a, const ExplicitGraph& g) {
  if (static_cast<int>(a.size()) != g.n) fail(Errc::invalid_argument, "matrix size mismatch");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != g.n) fail(Errc::invalid_argument, "matrix not square");
  std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
  for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
  for (int i = 0; i < g.n; ++i) {
    if (a[i][i] == 0) return false;
    for (int j = 0; j < g.n; ++j)
      if (i != j && !adj[i][j] && a[i][j] != 0) return false;
  }
  return true;
}

int rank_gf(const Matrix& a, int q) {
  SmallField f = SmallField::make(q);
  Matrix m = a;
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    int piv_inv = f.inv[m[rank][c]];
    for (int j = 0; j < cols; ++j) m[rank][j] = f.mul[m[rank][j]][piv_inv];
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      int factor = m[r][c];
      for (int j = 0; j < cols; ++j)
        m[r][j] = f.add[m[r][j]][f.neg[f.mul[factor][m[rank][j]]]];
    }
    ++rank;
  }
  return rank;
}

namespace {

// Enumerate r x n reduced row echelon forms over GF(q): choose pivot
// columns, then run an odometer over the free entries.
class RrefEnumerator {
 public:
  RrefEnumerator(int n, int r, const SmallField& f) : n_(n), r_(r), f_(f) {
    for (int i = 0; i < r; ++i) pivots_.push_back(i);
    load_free_positions();
  }

  bool next(Matrix& c) {
    while (true) {
      if (state_ == 0) {
        state_ = 1;
        fill(c);
        return true;
      }
      // advance odometer over free entries
      int i = static_cast<int>(free_vals_.size()) - 1;
      while (i >= 0 && free_vals_[i] == f_.q - 1) free_vals_[i--] = 0;
      if (i >= 0) {
        ++free_vals_[i];
        fill(c);
        return true;
      }
      // advance pivot combination
      int p = r_ - 1;
      while (p >= 0 && pivots_[p] == n_ - r_ + p) --p;
      if (p < 0) return false;
      ++pivots_[p];
      for (int j = p + 1; j < r_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      load_free_positions();
      state_ = 0;
    }
  }

  std::uint64_t free_count() const { return free_pos_.size(); }

 private:
  void load_free_positions() {
    free_pos_.clear();
    std::vector<char> is_pivot(n_, 0);
    for (int p : pivots_) is_pivot[p] = 1;
    for (int i = 0; i < r_; ++i)
      for (int j = pivots_[i] + 1; j < n_; ++j)
        if (!is_pivot[j]) free_pos_.push_back({i, j});
    free_vals_.assign(free_pos_.size(), 0);
  }

  void fill(Matrix& c) const {
    for (auto& row : c) std::fill(row.begin(), row.end(), 0);
    for (int i = 0; i < r_; ++i) c[i][pivots_[i]] = 1;
    for (std::size_t k = 0; k < free_pos_.size(); ++k)
      c[free_pos_[k].first][free_pos_[k].second] = free_vals_[k];
  }

  int n_, r_;
  const SmallField& f_;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_pos_;
  std::vector<int> free_vals_;
  int state_ = 0;
};

double rref_count(int n, int r, int q) {
  // gaussian binomial [n choose r]_q
  double count = 1;
  for (int i = 0; i < r; ++i)
    count *= (std::pow(q, n - i) - 1) / (std::pow(q, r - i) - 1);
  return count;
}

}  // namespace

MinRankResult min_rank_search(const ExplicitGraph& g, int q, int r_max, std::uint64_t op_budget) {
  SmallField f = SmallField::make(q);
  MinRankResult res;
  res.r_max = r_max;
  if (r_max < 1 || r_max > g.n) fail(Errc::invalid_argument, "bad r_max");

  std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
  for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;

  double total_ops = 0;
  for (int r = 1; r <= r_max; ++r)
    total_ops += rref_count(g.n, r, q) * g.n * std::pow(q, r);
  if (total_ops > static_cast<double>(op_budget))
    fail(Errc::search_space_too_large,
         "min-rank enumeration needs ~" + std::to_string(total_ops) + " operations");

  std::vector<int> bc(g.n);  // b . column_j scratch
  for (int r = 1; r <= r_max; ++r) {
    Matrix c(r, std::vector<int>(g.n, 0));
    RrefEnumerator en(g.n, r, f);
    int qr = 1;
    for (int i = 0; i < r; ++i) qr *= q;
    while (en.next(c)) {
      Matrix witness(g.n, std::vector<int>(g.n, 0));
      bool all_rows_ok = true;
      for (int i = 0; i < g.n && all_rows_ok; ++i) {
        bool row_ok = false;
        for (int bcode = 1; bcode < qr && !row_ok; ++bcode) {
          // decode b over GF(q), compute (b C) lazily with early bailout
          int code = bcode;
          bool good = true;
          for (int j = 0; j < g.n; ++j) bc[j] = 0;
          for (int row = 0; row < r; ++row) {
            int coef = code % q;
            code /= q;
            if (coef == 0) continue;
            for (int j = 0; j < g.n; ++j)
              bc[j] = f.add[bc[j]][f.mul[coef][c[row][j]]];
          }
          if (bc[i] == 0) good = false;
          for (int j = 0; good && j < g.n; ++j)
            if (j != i && !adj[i][j] && bc[j] != 0) good = false;
          if (good) {
            witness[i] = bc;
            row_ok = true;
          }
        }
        if (!row_ok) all_rows_ok = false;
      }
      if (all_rows_ok) {
        res.found = true;
        res.rank = rank_gf(witness, q);
        res.witness = std::move(witness);
        return res;
      }
    }
  }
  return res;
}

std::optional<Matrix> antihole_rank2_refute(int m, int q) {
  if (m < 5 || m % 2 == 0) fail(Errc::invalid_argument, "refutation target is an odd antihole");
  auto res = min_rank_search(antihole_graph(m), q, 2);
  if (res.found) return res.witness;
  return std::nullopt;
}

std::string to_mat(const Matrix& a, int q) {
  std::ostringstream os;
  os << "field GF(" << q << ")\n";
  os << "size " << a.size() << "\n";
  for (const auto& row : a) {
    for (std::size_t j = 0; j < row.size(); ++j) os << row[j] << (j + 1 < row.size() ? " " : "");
    os << "\n";
  }
  return os.str();
}

std::pair<Matrix, int> parse_mat(const std::string& text) {
  std::istringstream is(text);
  std::string kw;
  int q = 0;
  std::size_t n = 0;
  if (!(is >> kw) || kw != "field") fail(Errc::parse_error, "missing field header");
  std::string gf;
  if (!(is >> gf) || gf.size() < 5 || gf.substr(0, 3) != "GF(")
    fail(Errc::parse_error, "bad field token");
  q = std::stoi(gf.substr(3));
  if (!(is >> kw >> n) || kw != "size") fail(Errc::parse_error, "missing size header");
  Matrix a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!(is >> a[i][j])) fail(Errc::parse_error, "matrix entries truncated");
  return {a, q};
}

}  // namespace bcast
