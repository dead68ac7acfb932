#pragma once

#include "pomlab/directoid.hpp"
#include "pomlab/poset.hpp"

#include <functional>

namespace pomlab {

inline constexpr Element kUndefined = -1;

struct RawEffectAlgebra {
  int size = 0;
  std::vector<std::vector<Element>> oplus;  // kUndefined marks missing entries
  Element zero = 0;
  Element one = 0;
};

/// Finite effect algebra: partial + with commutativity/associativity of
/// definedness and value, unique complements against 1, and 1-cancellation.
/// The complement map is derived during validation.
class EffectAlgebra {
public:
  static EffectAlgebra validate(const RawEffectAlgebra& raw);

  int size() const { return n_; }
  bool defined(Element a, Element b) const { return oplus_[static_cast<size_t>(a)][static_cast<size_t>(b)] != kUndefined; }
  Element oplus(Element a, Element b) const { return oplus_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  Element inv(Element a) const { return inv_[static_cast<size_t>(a)]; }
  Element zero() const { return zero_; }
  Element one() const { return one_; }
  const std::vector<std::vector<Element>>& table() const { return oplus_; }

  /// b - a := (a + b')' for a <= b in the induced order; derived, not stored.
  std::optional<Element> ominus(Element b, Element a) const;

  bool same_structure(const EffectAlgebra& other) const {
    return n_ == other.n_ && oplus_ == other.oplus_ && zero_ == other.zero_ && one_ == other.one_;
  }

private:
  EffectAlgebra() = default;
  int n_ = 0;
  std::vector<std::vector<Element>> oplus_;
  std::vector<Element> inv_;
  Element zero_ = 0, one_ = 0;
};

/// Bounded involutive poset with a <= b iff a + c = b for some c.
Poset induced_order(const EffectAlgebra& a);

/// True iff the induced order is an orthoposet.
bool is_orthoalgebra(const EffectAlgebra& a);

/// x + y := x u y when x <= y', undefined otherwise. Requires
/// check_class(d, ortho_directoid); throws NotOrthoDirectoid.
EffectAlgebra orthoalgebra_from_ortho_directoid(const Directoid& d);

/// Total join chosen on top of an orthoalgebra: x + y when x <= y',
/// max{x,y} when comparable, an upper bound otherwise; the meet is the
/// De Morgan dual. Least-index chooser. Throws NotOrthoalgebra.
Directoid directoid_from_orthoalgebra(const EffectAlgebra& a);

/// Streams the tables over every admissible upper-bound choice.
bool for_each_directoid_from_orthoalgebra(const EffectAlgebra& a, uint64_t cap,
                                          const std::function<bool(const Directoid&)>& fn,
                                          CapBehavior on_cap = CapBehavior::throw_error);

/// + = join on orthogonal pairs; defined for orthomodular posets.
EffectAlgebra effect_algebra_from_omp(const Poset& p);

}  // namespace pomlab
