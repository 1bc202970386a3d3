#pragma once

// Small categories and frames used as a standing corpus, plus builders for
// monoids, posets, groups and randomly generated concrete categories.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sheafcalc/fincat.hpp"
#include "sheafcalc/frame.hpp"

namespace sheafcalc {

struct NamedCategory {
  std::string name;
  RawCategory raw;
};

struct NamedFrame {
  std::string name;
  FiniteFrame frame;
};

/// One-object category on `elements` (element 0 is the unit); mul[x][y] = x∘y.
RawCategory monoid_category(const std::vector<std::string>& elements,
                            const std::vector<std::vector<std::size_t>>& mul);
RawCategory cyclic_group(std::size_t n);
RawCategory symmetric_group3();
/// The monoid of self-maps of {0..k-1} generated by `generators` (x∘y = x[y[i]]).
RawCategory transformation_monoid(std::size_t k, const std::vector<std::vector<std::uint8_t>>& generators);

/// Thin category on the reflexive-transitive closure of `leq`; arrows named "x<=y".
RawCategory poset_category(const std::vector<std::string>& objects,
                           const std::vector<std::pair<std::string, std::string>>& leq);
RawCategory chain_category(std::size_t n);
RawCategory terminal_category();
RawCategory walking_arrow();   // u : a -> b
RawCategory span_category();   // f : a -> b, g : a -> c
RawCategory cospan_category(); // f : b -> a, g : c -> a
RawCategory parallel_pair();   // f, g : a -> b
RawCategory disjoint_union(const RawCategory& a, const RawCategory& b);

/// Maps between small finite sets, generated at random and closed under
/// composition; at most `max_arrows` arrows (generation retries until it fits).
RawCategory random_concrete_category(std::mt19937& rng, std::size_t objects, std::size_t max_arrows);
RawCategory random_transformation_monoid(std::mt19937& rng, std::size_t k, std::size_t max_elements);

/// The standing category corpus (deterministic).
std::vector<NamedCategory> category_corpus();

FiniteFrame chain_frame(std::size_t n);  // 0 < 1 < ... < n-1, n >= 1
FiniteFrame product_frame(const FiniteFrame& a, const FiniteFrame& b);
/// a below b, with the top of a identified with the bottom of b.
FiniteFrame glue_frame(const FiniteFrame& a, const FiniteFrame& b);
FiniteFrame boolean_frame(std::size_t atoms);
FiniteFrame diamond_frame();       // 0 < a, b < 1
FiniteFrame five_element_frame();  // 0 < a, b < c < 1

/// The standing frame corpus (sizes 2 to 10).
std::vector<NamedFrame> frame_corpus();

}  // namespace sheafcalc
