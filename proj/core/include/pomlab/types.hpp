#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pomlab {

/// Index of an element inside a finite structure, always in [0, n).
using Element = int;

/// Fixed-width membership vector over [0, n); the width always equals the
/// size of the owning structure.
using Subset = boost::dynamic_bitset<>;

enum class ErrorKind {
  // structure validation
  NotAPartialOrder,
  NotBounded,
  NotInvolution,
  NotAntitone,
  NotIdempotent,
  NotCommutative,
  NotWeaklyAssociative,
  InducedOrderUnbounded,
  E1Violation,
  E2Violation,
  E3Violation,
  E4Violation,
  // operation preconditions
  NotOrthoDirectoid,
  NotOrthoalgebra,
  NotACompleteLattice,
  ThetaNotCongruence,
  StructuralInconsistency,
  // formulas
  SyntaxError,
  SignatureMismatch,
  // resource limits and input handling
  CapExceeded,
  BudgetExceeded,
  FormatError,
  UsageError,
};

const char* to_string(ErrorKind k);

/// Carries the violated invariant plus a witness tuple of element indices.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message, std::vector<Element> witness = {})
      : std::runtime_error(std::move(message)), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<Element>& witness() const { return witness_; }

private:
  ErrorKind kind_;
  std::vector<Element> witness_;
};

/// Outcome of an exhaustive quantifier sweep. When the property fails,
/// `witness` holds the first failing assignment in lexicographic order of
/// the quantified variables.
struct CheckResult {
  bool holds = true;
  std::vector<Element> witness;

  explicit operator bool() const { return holds; }

  static CheckResult ok() { return {}; }
  static CheckResult fail(std::vector<Element> w) { return {false, std::move(w)}; }
};

inline Subset singleton(int n, Element x) {
  Subset s(n);
  s.set(static_cast<size_t>(x));
  return s;
}

inline Subset full_set(int n) {
  Subset s(n);
  s.set();
  return s;
}

inline std::vector<Element> elements_of(const Subset& s) {
  std::vector<Element> out;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
    out.push_back(static_cast<Element>(i));
  return out;
}

std::string subset_to_string(const Subset& s);

}  // namespace pomlab
