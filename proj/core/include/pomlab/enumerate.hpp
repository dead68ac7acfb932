#pragma once

#include "pomlab/directoid.hpp"
#include "pomlab/effect_algebra.hpp"
#include "pomlab/poset.hpp"

#include <functional>

namespace pomlab {

/// Canonical labeling bytes: two structures have equal forms exactly when
/// they are ortho-isomorphic (an isomorphism commuting with ' and fixing
/// the bounds).
struct CanonicalForm {
  std::string bytes;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Poset& p);
CanonicalForm canonical_form(const Directoid& d);
CanonicalForm canonical_form(const EffectAlgebra& a);

/// Ortho-automorphisms: order automorphisms commuting with the involution.
std::vector<std::vector<Element>> ortho_automorphisms(const Poset& p);

struct EnumOptions {
  int poset_cap = 10;                        // largest n for poset enumeration
  int ea_cap = 8;                            // largest n for effect algebras
  uint64_t directoid_fanout_cap = 1'000'000; // per-poset assignment fan-out
  int threads = 1;                           // workers for filter sweeps
};

/// One representative per ortho-isomorphism class satisfying every filter,
/// in a deterministic order (ascending canonical form). The callback stops
/// the stream by returning false. Throws CapExceeded beyond the cap.
void enumerate_posets(int n, const std::vector<PosetProperty>& filters,
                      const std::function<bool(const Poset&)>& fn, const EnumOptions& opts = {});

/// All representatives of size n (cached across calls).
const std::vector<Poset>& all_posets(int n, const EnumOptions& opts = {});

/// Every table consistent with the policy over P, in lexicographic choice
/// order; fan-out capped by opts.directoid_fanout_cap.
void enumerate_directoids(const Poset& p, const AssignmentPolicy& policy,
                          const std::function<bool(const Directoid&)>& fn,
                          const EnumOptions& opts = {},
                          CapBehavior on_cap = CapBehavior::throw_error);

/// One representative per isomorphism class of effect algebras on n
/// elements (cached across calls). Throws CapExceeded beyond the cap.
void enumerate_effect_algebras(int n, const std::function<bool(const EffectAlgebra&)>& fn,
                               const EnumOptions& opts = {});
const std::vector<EffectAlgebra>& all_effect_algebras(int n, const EnumOptions& opts = {});

/// Smallest enumerated poset satisfying every antecedent property but
/// failing at least one consequent property, if any exists up to n_max.
std::optional<Poset> search_counterexample(const std::vector<PosetProperty>& antecedent,
                                           const std::vector<PosetProperty>& consequent, int n_max,
                                           const EnumOptions& opts = {});

}  // namespace pomlab
