#pragma once

#include "pomlab/poset.hpp"

namespace pomlab {

/// Dedekind-MacNeille completion: the family of cone-closed subsets L(A)
/// ordered by inclusion, with orthocomplement X -> L(X') and the embedding
/// x -> L(x).
struct DmCompletion {
  Poset source;
  std::vector<Subset> universe;   // closed sets, sorted by (size, bits)
  Poset lattice;                  // the completion as a bounded involutive poset
  std::vector<int> embedding;     // index of L(x) per source element

  int index_of(const Subset& closed) const;    // -1 when not a member
  Subset orthocomplement(const Subset& x) const;
};

DmCompletion dm_complete(const Poset& p);

/// Quantification strategy for the subset sweeps below. raw_subsets ranges
/// over all pairs of subsets; closed_sets ranges over the completion
/// universe, representing a closed set C by the upper cone U(C) where a
/// general subset is called for. The two modes are cross-validated by the
/// test suite rather than assumed equivalent.
enum class SweepMode { raw_subsets, closed_sets };

struct DmOptions {
  int raw_max_n = 8;       // raw mode iterates 4^n subset pairs
  int reduced_max_n = 12;  // closed mode iterates pairs of closed sets
};

struct SubsetPairResult {
  bool yes = true;
  Subset first, second;  // witness pair when the condition fails
  explicit operator bool() const { return yes; }
};

/// For all B <= C: if the lower cone of C u B' is {0} then L(C) <= U(B).
/// Throws BudgetExceeded when the structure exceeds the mode's budget.
SubsetPairResult is_weakly_d_continuous(const Poset& p, SweepMode mode = SweepMode::raw_subsets,
                                        const DmOptions& opts = {});

/// L(X) strictly below L(Y) implies L(Y) meets LU(X') above 0.
SubsetPairResult satisfies_flp(const Poset& p, SweepMode mode = SweepMode::raw_subsets,
                               const DmOptions& opts = {});

bool is_complete_lattice(const Poset& p);

std::optional<Element> sup_of(const Poset& p, const Subset& s);
std::optional<Element> inf_of(const Poset& p, const Subset& s);

/// X is involution-closed and doubly dense in the complete lattice L:
/// every element is the join of the X-elements below it and the meet of
/// those above it, X' is contained in X, and the bounds belong to X.
/// Throws NotACompleteLattice.
bool is_doubly_dense(const Subset& x, const Poset& l);

}  // namespace pomlab
