#pragma once

#include <array>
#include <optional>

#include "search.hpp"

namespace bcast {

// GF(2^t) with a fixed reduction polynomial per degree, so the emitted
// coloring certificates are bit-identical everywhere.
struct GF2t {
  int t;
  word_t poly;  // reduction polynomial including the x^t term

  explicit GF2t(int degree);

  word_t add(word_t a, word_t b) const { return a ^ b; }
  word_t mul(word_t a, word_t b) const;
};

word_t gf2_reduction_poly(int t);          // table entry, t in [1,16]
bool gf2_poly_irreducible(word_t poly, int degree);

// Hamming-syndrome coloring of the t=1 confusion graph of
// two_missing_instance(k): n+1 colors on 2^n vertices.
ColoringCert syndrome_coloring(int k);

// Reed-Solomon pair-checksum coloring of the block-length-t confusion
// graph of two_missing_instance(k); needs 2^t >= n.
ColoringCert rs_coloring(int k, int t);

// Claim 3.9 coloring of the pair-miss confusion graph from a proper base
// coloring of the side-information Cayley graph (3d colors), plus the
// power-of-two variant from the closing remark.
ColoringCert mod3_coloring(const PairMissSpec& spec, const std::vector<std::int32_t>& base);
ColoringCert mod3_pow2_coloring(const PairMissSpec& spec, const std::vector<std::int32_t>& base);

// Claim 3.10: pull an independent set of the side-information graph back
// through the syndrome map, restricted to the best weight class mod 3.
// Guaranteed size >= 2^n * |base| / (3 * 2^k).
IndependentSetCert mod3_independent_set(const PairMissSpec& spec,
                                        const std::vector<word_t>& base,
                                        const Limits& limits = {});

// Appendix B masks for extending words of length m to length m+2; mask 0
// is zero and the three others xor to zero.
std::array<word_t, 4> lift_masks(int m);

// x4 extension of an independent set of the odd-antihole confusion graph
// C(antihole m) into C(antihole m+2)
IndependentSetCert antihole_lift_is(const IndependentSetCert& cert, const Limits& limits = {});

// same extension applied to every color class of a proper coloring
ColoringCert antihole_lift_coloring(const ColoringCert& cert, const Limits& limits = {});

// Claim B.2 checked exhaustively for the length-(2n+1) word space; returns
// the first non-generator x whose lift becomes a generator, if any.
std::optional<word_t> mask_check(int n, const std::array<word_t, 4>& masks);
std::optional<word_t> mask_nongenerator_check(int n);

// expand a (possibly named) coloring certificate into a full color table
std::vector<std::int32_t> materialize_coloring(const ColoringCert& cert, int expected_m,
                                               const Limits& limits = {});

// ".pms" pair-miss spec file: `group <k>` then `generators <hex...>`
std::string to_pms(const PairMissSpec& spec);
PairMissSpec parse_pms(const std::string& text);

}  // namespace bcast
