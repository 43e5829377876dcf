#pragma once

#include <string>
#include <vector>

#include "model.hpp"

namespace bcast {

// Cayley graph over Z2^m: x ~ y iff x ^ y is a generator. Generators are
// kept sorted; membership is a binary search. Every confusion graph of a
// broadcast network is one of these, which is what makes the searches
// downstream vertex-transitive.
struct CayleyGraph {
  int m = 0;
  std::vector<word_t> generators;  // sorted ascending, nonzero, distinct

  std::size_t vertex_count() const { return std::size_t{1} << m; }

  bool is_generator(word_t g) const {
    return std::binary_search(generators.begin(), generators.end(), g);
  }
  bool adjacent(word_t x, word_t y) const { return x != y && is_generator(x ^ y); }
};

void validate_or_throw(const CayleyGraph& c, const Limits& limits = {});

// confusion graph of H at block length t, as explicit generators
CayleyGraph confusion_generators(const BroadcastHypergraph& h, int t, const Limits& limits = {});

// Lazy OR product: vertices are concatenated component words, component 0
// in the low bits; adjacency holds iff some component differs by one of
// its generators.
struct ProductCayley {
  std::vector<CayleyGraph> components;

  int total_dim() const {
    int m = 0;
    for (const auto& c : components) m += c.m;
    return m;
  }
  bool adjacent(word_t x, word_t y) const;
};

ProductCayley or_product(const CayleyGraph& a, const CayleyGraph& b);
ProductCayley or_product(const ProductCayley& a, const CayleyGraph& b);
ProductCayley or_product(const ProductCayley& a, const ProductCayley& b);

// explicit generator set of the product (needs total dim within limits)
CayleyGraph flatten(const ProductCayley& p, const Limits& limits = {});

// Equality of the two graphs under the natural identification of
// Z2^{m1+m2} layouts (copy blocks land in consecutive bit ranges, so the
// relabeling map is the identity). Not a general isomorphism test.
bool isomorphic_check_small(const CayleyGraph& a, const CayleyGraph& b);
bool isomorphic_check_small(const CayleyGraph& a, const ProductCayley& b,
                            const Limits& limits = {});

// ".gen": `dim <m>` then one hex generator per line, sorted
std::string to_gen(const CayleyGraph& c);
CayleyGraph parse_gen(const std::string& text);

}  // namespace bcast
