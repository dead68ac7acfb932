#pragma once

#include "pomlab/poset.hpp"

#include <functional>

namespace pomlab {

struct RawDirectoid {
  int size = 0;
  std::vector<std::vector<Element>> meet;  // total operation table
  std::vector<Element> inv;
  Element zero = 0;
  Element one = 0;
};

/// Finite commutative directoid with an involution and designated bounds.
/// Validation checks idempotence, commutativity, weak associativity and
/// inv o inv = id; nothing else. Immutable afterwards.
class Directoid {
public:
  static Directoid validate(const RawDirectoid& raw);

  int size() const { return n_; }
  Element meet(Element a, Element b) const { return meet_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  Element inv(Element a) const { return inv_[static_cast<size_t>(a)]; }
  Element zero() const { return zero_; }
  Element one() const { return one_; }

  /// x u y := (x' n y')'.
  Element join(Element a, Element b) const { return inv(meet(inv(a), inv(b))); }

  /// x <= y iff x n y = x.
  bool induced_le(Element a, Element b) const { return meet(a, b) == a; }

  const std::vector<std::vector<Element>>& table() const { return meet_; }
  bool same_structure(const Directoid& other) const {
    return n_ == other.n_ && meet_ == other.meet_ && inv_ == other.inv_ && zero_ == other.zero_ &&
           one_ == other.one_;
  }

private:
  Directoid() = default;
  int n_ = 0;
  std::vector<std::vector<Element>> meet_;
  std::vector<Element> inv_;
  Element zero_ = 0, one_ = 0;
};

/// The poset induced by x <= y iff x n y = x, with the directoid's involution
/// and bounds. Throws InducedOrderUnbounded when zero/one are not bounds of
/// the induced order, and poset validation errors when the involution is not
/// antitone on it.
Poset induced_poset(const Directoid& d);

Element derived_join(const Directoid& d, Element a, Element b);

/// L(a,b) computed inside the directoid as {(x n a) n (x n b) | x}.
Subset cone_via_directoid(const Directoid& d, Element a, Element b);

/// Directoid-level conditions decided by check_class(). Combined tags:
///   para_directoid_weak        = involutive45 and cond6
///   para_directoid_sharp       = id14 and qid8 (alias
///                                sharply_paraorthomodular_directoid)
///   largest_quasivariety       = involutive45 and qid9
///   canonical_image            = involutive45 and qid8
/// The weak and sharp notions are deliberately kept apart.
enum class DirectoidClass {
  involutive45,
  cond6,
  qid8,
  qid9,
  id14,
  sharply_paraorthomodular_directoid,
  para_directoid_sharp = sharply_paraorthomodular_directoid,
  orthomodular_directoid,
  ortho_directoid,
  largest_quasivariety,
  canonical_image,
  para_directoid_weak,
};

const char* to_string(DirectoidClass c);
std::optional<DirectoidClass> directoid_class_from_string(const std::string& name);
std::vector<std::string> witness_variables(DirectoidClass c);

CheckResult check_class(const Directoid& d, DirectoidClass c);

/// How the total operation is chosen on top of a poset.
///   arbitrary: min{x,y} for comparable pairs, any element of L(x,y)
///              otherwise.
///   canonical: min{x,y} for comparable pairs; an element of L(x,y)\{0}
///              when x' < y (or y' < x) and L(x,y) != {0}; any element of
///              L(x,y) otherwise.
/// meet_respecting additionally forces x n y = x /\ y whenever the meet
/// exists. The default chooser picks the least element index; with
/// enumerate_all every table consistent with the policy is produced.
struct AssignmentPolicy {
  enum class Mode { arbitrary, canonical };
  Mode mode = Mode::arbitrary;
  bool meet_respecting = false;
  bool enumerate_all = false;
};

/// Choice set for one unordered pair {a,b} under the policy.
std::vector<Element> assignment_choices(const Poset& p, Element a, Element b,
                                        const AssignmentPolicy& policy);

/// Number of tables consistent with the policy (saturating).
uint64_t assignment_fanout(const Poset& p, const AssignmentPolicy& policy);

/// The single table produced by the deterministic least-index chooser.
Directoid assigned_directoid(const Poset& p, const AssignmentPolicy& policy = {});

enum class CapBehavior { throw_error, truncate };

/// Streams every table consistent with the policy in lexicographic choice
/// order. Returns false when the callback stopped the stream early. With
/// CapBehavior::throw_error a fan-out beyond `cap` raises CapExceeded;
/// with truncate only the first `cap` tables are produced.
bool for_each_assigned_directoid(const Poset& p, const AssignmentPolicy& policy, uint64_t cap,
                                 const std::function<bool(const Directoid&)>& fn,
                                 CapBehavior on_cap = CapBehavior::throw_error);

/// Membership test for the canonical policy: true iff the table could have
/// been produced by some canonical assignment of its induced poset.
bool is_canonical_assignment_of_induced(const Directoid& d);

/// Adjoins a fresh pair a,a' (at indices n and n+1) with the case table that
/// sends x n y to 0 exactly when 0 is an argument. Requires the induced
/// poset of d to validate.
Directoid extend_with_pair(const Directoid& d);

/// Collapses {zero,a} and {one,a'} and keeps every other class a singleton.
/// Rejects tables where this partition is not a congruence. By default `a`
/// is the element added by extend_with_pair (index size-2).
Directoid quotient_theta(const Directoid& m, Element a = -1);

struct Subdirectoid {
  Directoid sub;
  std::vector<Element> elements;  // ambient indices, ascending
};

/// Closure of the generators together with the constants 0,1 under n and '.
Subdirectoid subdirectoid_generated(const Directoid& d, const std::vector<Element>& generators);

/// Isomorphism of directoids with designated bounds (search over bijections).
bool directoid_isomorphic(const Directoid& a, const Directoid& b);

}  // namespace pomlab
