#include "doctest.h"
#include "pomlab/pomlab.hpp"

#include <sstream>

using namespace pomlab;

namespace {

Directoid chain2_directoid() {
  RawDirectoid raw{2, {{0, 0}, {0, 1}}, {1, 0}, 0, 1};
  return Directoid::validate(raw);
}

constexpr uint64_t kCap = 1 << 20;

}  // namespace

TEST_CASE("parses the named axioms") {
  for (const auto& [name, text] : axiom_catalog()) {
    CAPTURE(name);
    CHECK_NOTHROW(parse_formula(text));
  }
}

TEST_CASE("identity (5) round-trips through the printer") {
  ParsedFormula f = parse_formula("(x ^ y)' ^ y' = y'");
  CHECK(print_formula(f) == "(x ^ y)' ^ y' = y'");
  ParsedFormula again = parse_formula(print_formula(f));
  CHECK(print_formula(again) == print_formula(f));
}

TEST_CASE("quasi-identity (8) parses to an implication") {
  ParsedFormula f = parse_formula("(x ^ y)' ^ y = 0 -> x ^ y = y");
  CHECK(f.root.kind == FormulaNode::Kind::impl);
  CHECK(f.free_variables.size() == 2);
}

TEST_CASE("order literal") {
  ParsedFormula f = parse_formula("x <= y");
  CHECK(f.root.kind == FormulaNode::Kind::le);
}

TEST_CASE("printer is a fixed point on every axiom and battery formula") {
  for (const auto& [name, text] : axiom_catalog()) {
    ParsedFormula f = parse_formula(text);
    CHECK(print_formula(parse_formula(print_formula(f))) == print_formula(f));
  }
  for (const auto& text : order_formula_battery()) {
    ParsedFormula f = parse_formula(text);
    CHECK(print_formula(parse_formula(print_formula(f))) == print_formula(f));
  }
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_formula("x <= ");
    FAIL("expected SyntaxError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    REQUIRE(e.witness().size() == 1);
  }
  CHECK_THROWS_AS(parse_formula("x < y"), Error);
  CHECK_THROWS_AS(parse_formula("(x ^ y = y"), Error);
  CHECK_THROWS_AS(parse_formula("x ^ y"), Error);  // a bare term is not a formula
}

TEST_CASE("the quantifier binds the antecedent only") {
  ParsedFormula f = parse_formula("forall z: x ^ z = 0 -> x = 0");
  REQUIRE(f.root.kind == FormulaNode::Kind::impl);
  CHECK(f.root.children[0].kind == FormulaNode::Kind::forall);
  // z is bound, x free
  CHECK(f.free_variables.size() == 1);
  CHECK(f.variables[static_cast<size_t>(f.free_variables[0])] == "x");
}

TEST_CASE("evaluation of simple laws") {
  Directoid d = chain2_directoid();
  CHECK(evaluate(d, parse_formula("x ^ y = y ^ x")).holds);
  CHECK(evaluate(d, parse_formula("x ^ x = x")).holds);
  CHECK(evaluate(d, parse_formula("x v x' = 1")).holds);
  auto r = evaluate(d, parse_formula("x = 0"));
  CHECK(!r.holds);
  REQUIRE(r.witness.size() == 1);
  CHECK(r.witness[0].second == 1);  // first failing assignment
}

TEST_CASE("meet terms against a bare poset raise SignatureMismatch") {
  Poset p = fixtures::b6();
  CHECK_THROWS_AS(evaluate(p, parse_formula("x ^ y = x")), Error);
  CHECK(evaluate(p, parse_formula("x <= 1")).holds);
  CHECK(evaluate(p, parse_formula("0 <= x")).holds);
}

TEST_CASE("join is definitionally the De Morgan dual") {
  EnumOptions opts;
  AssignmentPolicy pol;
  pol.enumerate_all = true;
  // the primitive join and its expansion agree pointwise
  ParsedFormula expanded = parse_formula("x v y = (x' ^ y')'");
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : all_posets(n, opts))
      for_each_assigned_directoid(p, pol, kCap, [&](const Directoid& d) {
        CHECK(evaluate(d, expanded).holds);
        return true;
      });
}

TEST_CASE("catalog checks agree with the native class checks") {
  EnumOptions opts;
  AssignmentPolicy pol;
  pol.enumerate_all = true;
  auto find = [&](const std::string& name) {
    for (const auto& [n, t] : axiom_catalog())
      if (n == name) return parse_formula(t);
    FAIL("missing catalog entry");
    return parse_formula("0 = 0");
  };
  ParsedFormula id5 = find("id5");
  ParsedFormula cond6 = find("cond6");
  ParsedFormula qid8 = find("qid8");
  ParsedFormula qid9 = find("qid9");
  ParsedFormula id14 = find("id14");
  ParsedFormula omd3 = find("omd3");
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : all_posets(n, opts))
      for_each_assigned_directoid(p, pol, kCap, [&](const Directoid& d) {
        CHECK(evaluate(d, id5).holds == static_cast<bool>(check_class(d, DirectoidClass::involutive45)));
        CHECK(evaluate(d, cond6).holds == static_cast<bool>(check_class(d, DirectoidClass::cond6)));
        CHECK(evaluate(d, qid8).holds == static_cast<bool>(check_class(d, DirectoidClass::qid8)));
        CHECK(evaluate(d, qid9).holds == static_cast<bool>(check_class(d, DirectoidClass::qid9)));
        CHECK(evaluate(d, id14).holds == static_cast<bool>(check_class(d, DirectoidClass::id14)));
        bool omd = evaluate(d, find("omd1")).holds && evaluate(d, find("omd2")).holds &&
                   evaluate(d, omd3).holds;
        CHECK(omd == static_cast<bool>(check_class(d, DirectoidClass::orthomodular_directoid)));
        bool od = true;
        for (const auto& [name, text] : axiom_catalog())
          if (name.rfind("od", 0) == 0 && !evaluate(d, parse_formula(text)).holds) od = false;
        CHECK(od == static_cast<bool>(check_class(d, DirectoidClass::ortho_directoid)));
        return true;
      });
}

TEST_CASE("translation of order literals") {
  ParsedFormula t1 = translate_order_to_meet(parse_formula("x <= y"));
  CHECK(print_formula(t1) == "x ^ y = x");
  ParsedFormula t2 = translate_order_to_meet(parse_formula("~(x <= y')"));
  CHECK(print_formula(t2) == "~(x ^ y' = x)");
  CHECK_THROWS_AS(translate_order_to_meet(parse_formula("x ^ y = x")), Error);
}

TEST_CASE("translation lemma over the battery") {
  EnumOptions opts;
  AssignmentPolicy pol;
  pol.enumerate_all = true;
  std::vector<std::pair<ParsedFormula, ParsedFormula>> battery;
  for (const auto& text : order_formula_battery()) {
    ParsedFormula eta = parse_formula(text);
    battery.emplace_back(eta, translate_order_to_meet(eta));
  }
  REQUIRE(battery.size() >= 20);
  for (int n = 1; n <= 4; ++n)
    for (const Poset& p : all_posets(n, opts))
      for_each_assigned_directoid(p, pol, kCap, [&](const Directoid& d) {
        Poset q = induced_poset(d);
        for (const auto& [eta, t_eta] : battery) {
          EvalResult on_poset = evaluate(q, eta);
          EvalResult on_directoid = evaluate(d, t_eta);
          CHECK(on_poset.holds == on_directoid.holds);
        }
        return true;
      });
}

TEST_CASE("formula files with comments and names") {
  std::istringstream in(
      "# antitone meet\n"
      "(x ^ y)' ^ y' = y'\n"
      "\n"
      "x <= 1  # top law\n");
  auto formulas = load_formulas(in);
  REQUIRE(formulas.size() == 2);
  CHECK(formulas[0].name == "antitone meet");
  CHECK(formulas[1].name == "top law");
  CHECK(formulas[1].formula.root.kind == FormulaNode::Kind::le);
}
