#pragma once

#include "pomlab/poset.hpp"

namespace pomlab {

/// Six distinct elements forming a strong subposet ortho-isomorphic to the
/// hexagon: chains 0 < a < b < 1 and 0 < b' < a' < 1 with no relations
/// across the chains besides the bounds.
struct B6Witness {
  Element zero, a, b, b_prime, a_prime, one;
  std::array<Element, 6> roles() const { return {zero, a, b, b_prime, a_prime, one}; }
  Subset as_subset(int n) const;
};

struct StrongSubsetResult {
  bool yes = true;
  std::pair<Element, Element> witness{-1, -1};
  explicit operator bool() const { return yes; }
};

/// A is strong when it contains the bounds, is closed under ', and for all
/// x,y in A the cones computed inside A generate the same outer cones as
/// the ambient ones.
StrongSubsetResult is_strong_subset(const Poset& p, const Subset& a);

struct B6SearchStats {
  int degenerate_pairs = 0;  // violating pairs whose six-set failed re-verification
};

/// Searches violating pairs (a,b) of the paraorthomodularity condition in
/// lexicographic order and assembles {0,a,b,a',b',1}. Each candidate is
/// re-verified in full before being returned.
std::optional<B6Witness> find_b6_witness(const Poset& p, B6SearchStats* stats = nullptr);

/// Re-verification used on returned witnesses: distinctness, involution
/// pairing, exact hexagon order, strong subset.
bool verify_b6_witness(const Poset& p, const B6Witness& w);

}  // namespace pomlab
