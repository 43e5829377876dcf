#include "model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bcast {

std::string to_hex(word_t v, int bits) {
  int digits = (bits + 3) / 4;
  std::string s(digits, '0');
  for (int i = digits - 1; i >= 0; --i) {
    s[i] = "0123456789abcdef"[v & 0xf];
    v >>= 4;
  }
  return s;
}

word_t parse_hex(const std::string& s) {
  word_t v = 0;
  for (char c : s) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else fail(Errc::parse_error, std::string("bad hex digit '") + c + "'");
    v = (v << 4) | static_cast<word_t>(d);
  }
  return v;
}

std::string to_bits(word_t v, int bits) {
  std::string s(bits, '0');
  for (int i = 0; i < bits; ++i)
    if ((v >> i) & 1) s[i] = '1';
  return s;
}

std::vector<Edge> BroadcastHypergraph::canonical_edges() const {
  std::vector<Edge> out = edges;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<ValidationIssue> validate(const BroadcastHypergraph& h) {
  if (h.n < 1)
    return ValidationIssue{Errc::empty_network, -1, "network must have at least one block"};
  for (std::size_t e = 0; e < h.edges.size(); ++e) {
    const Edge& edge = h.edges[e];
    if (edge.target < 1 || edge.target > h.n)
      return ValidationIssue{Errc::index_out_of_range, static_cast<int>(e),
                             "edge " + std::to_string(e) + ": target " +
                                 std::to_string(edge.target) + " out of range"};
    int prev = 0;
    for (int j : edge.known) {
      if (j < 1 || j > h.n)
        return ValidationIssue{Errc::index_out_of_range, static_cast<int>(e),
                               "edge " + std::to_string(e) + ": known block " +
                                   std::to_string(j) + " out of range"};
      if (j == edge.target)
        return ValidationIssue{Errc::target_in_known_set, static_cast<int>(e),
                               "edge " + std::to_string(e) + ": target " +
                                   std::to_string(j) + " appears in its own known set"};
      if (j <= prev)
        return ValidationIssue{Errc::invalid_argument, static_cast<int>(e),
                               "edge " + std::to_string(e) + ": known set not strictly sorted"};
      prev = j;
    }
  }
  return std::nullopt;
}

void validate_or_throw(const BroadcastHypergraph& h) {
  if (auto issue = validate(h)) fail(issue->code, issue->message);
}

void validate_or_throw(const SideInfoGraph& g) {
  if (g.n < 1) fail(Errc::empty_network, "side-information graph must have a vertex");
  for (auto [i, j] : g.arcs) {
    if (i < 1 || i > g.n || j < 1 || j > g.n)
      fail(Errc::index_out_of_range, "arc endpoint out of range");
    if (i == j) fail(Errc::invalid_argument, "self-arc not allowed");
    if (g.undirected && !g.arcs.count({j, i}))
      fail(Errc::invalid_argument, "undirected flag set but arcs not symmetric");
  }
}

BroadcastHypergraph from_side_info_graph(const SideInfoGraph& g) {
  validate_or_throw(g);
  BroadcastHypergraph h;
  h.n = g.n;
  for (int i = 1; i <= g.n; ++i) {
    Edge e;
    e.target = i;
    for (auto [a, b] : g.arcs)
      if (a == i) e.known.push_back(b);
    std::sort(e.known.begin(), e.known.end());
    h.edges.push_back(std::move(e));
  }
  return h;
}

BroadcastHypergraph disjoint_union(const BroadcastHypergraph& a, const BroadcastHypergraph& b) {
  validate_or_throw(a);
  validate_or_throw(b);
  BroadcastHypergraph h;
  h.n = a.n + b.n;
  h.edges = a.edges;
  for (const Edge& e : b.edges) {
    Edge shifted;
    shifted.target = e.target + a.n;
    for (int j : e.known) shifted.known.push_back(j + a.n);
    h.edges.push_back(std::move(shifted));
  }
  return h;
}

BroadcastHypergraph k_copies(const BroadcastHypergraph& h, int k) {
  if (k < 1) fail(Errc::invalid_argument, "k_copies requires k >= 1");
  validate_or_throw(h);
  BroadcastHypergraph out = h;
  for (int c = 1; c < k; ++c) out = disjoint_union(out, h);
  return out;
}

BroadcastHypergraph relabel(const BroadcastHypergraph& h, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != h.n) fail(Errc::invalid_argument, "bad permutation size");
  BroadcastHypergraph out;
  out.n = h.n;
  for (const Edge& e : h.edges) {
    Edge r;
    r.target = perm[e.target - 1];
    for (int j : e.known) r.known.push_back(perm[j - 1]);
    std::sort(r.known.begin(), r.known.end());
    out.edges.push_back(std::move(r));
  }
  return out;
}

std::string to_bhg(const BroadcastHypergraph& h) {
  std::ostringstream os;
  os << "blocks " << h.n << "\n";
  for (const Edge& e : h.canonical_edges()) {
    os << "wants " << e.target << " knows";
    for (int j : e.known) os << " " << j;
    os << "\n";
  }
  return os.str();
}

BroadcastHypergraph parse_bhg(const std::string& text) {
  BroadcastHypergraph h;
  std::istringstream is(text);
  std::string line;
  bool have_blocks = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "blocks") {
      if (have_blocks) fail(Errc::parse_error, "duplicate blocks line");
      if (!(ls >> h.n)) fail(Errc::parse_error, "blocks line needs a count");
      have_blocks = true;
    } else if (kw == "wants") {
      if (!have_blocks) fail(Errc::parse_error, "wants before blocks");
      Edge e;
      if (!(ls >> e.target)) fail(Errc::parse_error, "wants line needs a block index");
      std::string knows;
      if (!(ls >> knows) || knows != "knows")
        fail(Errc::parse_error, "line " + std::to_string(lineno) + ": expected 'knows'");
      int j;
      while (ls >> j) e.known.push_back(j);
      std::sort(e.known.begin(), e.known.end());
      e.known.erase(std::unique(e.known.begin(), e.known.end()), e.known.end());
      h.edges.push_back(std::move(e));
    } else {
      fail(Errc::parse_error, "line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
    }
  }
  if (!have_blocks) fail(Errc::parse_error, "missing blocks line");
  validate_or_throw(h);
  return h;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot write " + path);
  out << content;
}

BroadcastHypergraph load_bhg(const std::string& path) { return parse_bhg(read_file(path)); }

}  // namespace bcast
