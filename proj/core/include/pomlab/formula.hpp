#pragma once

#include "pomlab/directoid.hpp"
#include "pomlab/poset.hpp"

#include <iosfwd>
#include <memory>

namespace pomlab {

// Term and formula language over the signature (n, u, ', <=, =, 0, 1).
//
// Grammar (ASCII):
//   variables  [a-z][a-z0-9]*      ("v" and "forall" are reserved)
//   constants  0 1
//   terms      postfix ' (involution), infix ^ (meet), infix v (join);
//              ^ and v share one precedence level, left associative,
//              ' binds tightest
//   atoms      term <= term | term = term
//   formulas   ~F | F & G | F | G | F -> G (right assoc, loosest) and
//              "forall x y: F", which binds between | and ->, so that
//              forall z: A -> B reads (forall z: A) -> B
//
// All remaining free variables are universally quantified at the top.
// The join is definitionally (x' n y')'; evaluation agrees with the
// expansion.

struct Term {
  enum class Kind { var, const0, const1, prime, meet, join };
  Kind kind = Kind::const0;
  int var = -1;
  std::shared_ptr<Term> lhs, rhs;
};

struct FormulaNode {
  enum class Kind { le, eq, neg, conj, disj, impl, forall };
  Kind kind = Kind::le;
  std::shared_ptr<Term> lhs, rhs;        // for le/eq
  std::vector<FormulaNode> children;     // for the connectives
  std::vector<int> bound;                // for forall
};

struct ParsedFormula {
  FormulaNode root;
  std::vector<std::string> variables;  // index = variable id, in order of first appearance
  std::vector<int> free_variables;     // ids not bound by any inner quantifier
};

/// Throws Error(SyntaxError) carrying the character position in witness[0].
ParsedFormula parse_formula(const std::string& text);

/// Normalized rendering; parse(print(f)) is structurally equal to f and
/// print is a fixed point on its own output.
std::string print_formula(const ParsedFormula& f);

struct EvalResult {
  bool holds = true;
  std::vector<std::pair<std::string, Element>> witness;  // first failing assignment
  explicit operator bool() const { return holds; }
};

/// Exhaustive satisfaction over all assignments to the free variables.
/// Meet/join terms against a bare poset raise SignatureMismatch; order
/// atoms against a directoid use the induced order.
EvalResult evaluate(const Poset& p, const ParsedFormula& f);
EvalResult evaluate(const Directoid& d, const ParsedFormula& f);

/// Literal-wise translation of an order-language formula into the meet
/// language: s <= t becomes s ^ t = s under any polarity. Requires all
/// terms to be in the order signature (no ^ or v).
ParsedFormula translate_order_to_meet(const ParsedFormula& f);

struct NamedFormula {
  std::string name;
  ParsedFormula formula;
  std::string text;
};

/// One formula per line; # starts a comment. A comment directly above a
/// formula names it; unnamed formulas get "line<k>".
std::vector<NamedFormula> load_formulas(std::istream& in);
std::vector<NamedFormula> load_formula_file(const std::string& path);

/// The bundled axiom catalog: every identity and quasi-identity the
/// directoid checks decide, by catalog name (id4, id5, cond6, qid8, qid9,
/// id14, omd1..omd3, od1..od6, law1..law8d, remark45).
const std::vector<std::pair<std::string, std::string>>& axiom_catalog();

/// Battery of order-language formulas exercised by the translation tests.
const std::vector<std::string>& order_formula_battery();

}  // namespace pomlab
