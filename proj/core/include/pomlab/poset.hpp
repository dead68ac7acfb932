#pragma once

#include "pomlab/types.hpp"

#include <optional>
#include <utility>

namespace pomlab {

/// Unvalidated carrier for a bounded poset with antitone involution.
struct RawPoset {
  int size = 0;
  std::vector<std::vector<bool>> le;  // le[x][y] means x <= y; must be transitively closed
  std::vector<Element> inv;
  Element bottom = 0;
  Element top = 0;
  std::vector<std::string> labels;  // optional display strings
};

/// Finite bounded poset with an antitone involution. Immutable after
/// validation; every operation below is a pure function and thread-safe.
class Poset {
public:
  /// Checks all type invariants: partial order, bounds, involution,
  /// antitonicity, inv(bottom) = top. Throws Error naming the violated
  /// invariant together with a witness pair.
  static Poset validate(const RawPoset& raw);

  /// Builds the order as the reflexive-transitive closure of a cover
  /// relation, then validates.
  static Poset from_hasse(int n, const std::vector<std::pair<Element, Element>>& covers,
                          std::vector<Element> inv, Element bottom, Element top,
                          std::vector<std::string> labels = {});

  int size() const { return n_; }
  bool le(Element x, Element y) const { return down_[static_cast<size_t>(y)].test(static_cast<size_t>(x)); }
  bool lt(Element x, Element y) const { return x != y && le(x, y); }
  bool comparable(Element x, Element y) const { return le(x, y) || le(y, x); }
  Element inv(Element x) const { return inv_[static_cast<size_t>(x)]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  /// L(x) and U(x) as membership vectors (reflexive).
  const Subset& down(Element x) const { return down_[static_cast<size_t>(x)]; }
  const Subset& up(Element x) const { return up_[static_cast<size_t>(x)]; }

  Subset lower_cone(const Subset& a) const;  // L(A); L(empty) = P
  Subset upper_cone(const Subset& a) const;  // U(A)
  Subset lower_cone(Element a, Element b) const { return down(a) & down(b); }
  Subset upper_cone(Element a, Element b) const { return up(a) & up(b); }

  /// Image of A under the involution.
  Subset inv_image(const Subset& a) const;

  Subset empty() const { return Subset(static_cast<size_t>(n_)); }
  Subset full() const { return full_set(n_); }
  Subset single(Element x) const { return singleton(n_, x); }

  /// Greatest lower bound if L(a,b) has a maximum, dually for join.
  std::optional<Element> meet(Element a, Element b) const;
  std::optional<Element> join(Element a, Element b) const;

  /// Greatest element of S when it exists (max), dually least (min).
  std::optional<Element> max_of(const Subset& s) const;
  std::optional<Element> min_of(const Subset& s) const;

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Element x) const;

  /// Cover relation x -< y (for diagram export).
  std::vector<std::pair<Element, Element>> covers() const;

  bool same_structure(const Poset& other) const;  // equal le, inv, bounds

private:
  Poset() = default;
  int n_ = 0;
  std::vector<Subset> down_, up_;
  std::vector<Element> inv_;
  Element bottom_ = 0, top_ = 0;
  std::vector<std::string> labels_;
};

enum class Cone { lower, upper };

/// L(A) or U(A) relative to P.
Subset cone(const Poset& p, const Subset& a, Cone dir);

/// Catalog of poset-level conditions decided by check().
enum class PosetProperty {
  distributive,
  modular,
  paraorthomodular,
  orthoposet,
  orthomodular,
  pseudo_orthomodular,
  sharply_paraorthomodular,
  cond12,
  cond13,
};

const char* to_string(PosetProperty p);
std::optional<PosetProperty> poset_property_from_string(const std::string& name);

/// Names of the quantified variables reported in a failing witness.
std::vector<std::string> witness_variables(PosetProperty p);

/// Exhaustive evaluation of the property over all element tuples; a failure
/// carries the first witness in lexicographic order of assignments.
CheckResult check(const Poset& p, PosetProperty prop);

/// The lattice-style formulation "x <= y and x' /\ y = 0 imply x = y",
/// evaluated through partial meets. On lattices it agrees with the cone
/// formulation used by check(paraorthomodular).
CheckResult paraorthomodular_meet_form(const Poset& p);

std::optional<Element> partial_meet(const Poset& p, Element a, Element b);
std::optional<Element> partial_join(const Poset& p, Element a, Element b);

/// New structure with a fresh bottom (index n) and top (index n+1).
Poset add_bounds(const Poset& p);

}  // namespace pomlab
