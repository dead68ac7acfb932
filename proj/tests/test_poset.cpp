#include "doctest.h"
#include "pomlab/pomlab.hpp"
#include "support/oracles.hpp"

using namespace pomlab;

namespace {

RawPoset two_chain_raw() {
  RawPoset raw;
  raw.size = 2;
  raw.le = {{true, true}, {false, true}};
  raw.inv = {1, 0};
  raw.bottom = 0;
  raw.top = 1;
  return raw;
}

}  // namespace

TEST_CASE("two-chain validates") {
  Poset p = Poset::validate(two_chain_raw());
  CHECK(p.size() == 2);
  CHECK(p.le(0, 1));
  CHECK(p.inv(0) == 1);
}

TEST_CASE("b6 fixture validates with the drawn order") {
  Poset p = fixtures::b6();
  CHECK(p.le(1, 2));      // a < b
  CHECK(p.le(3, 4));      // b' < a'
  CHECK(!p.le(1, 3));
  CHECK(!p.le(1, 4));
  CHECK(!p.comparable(2, 3));
  CHECK(p.inv(1) == 4);
  CHECK(p.inv(2) == 3);
}

TEST_CASE("identity involution on a chain is rejected before antitonicity") {
  RawPoset raw = two_chain_raw();
  raw.inv = {0, 1};
  try {
    Poset::validate(raw);
    FAIL("expected a validation error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvolution);  // inv(bottom) != top
  }
}

TEST_CASE("validation errors name the violated invariant") {
  RawPoset raw = two_chain_raw();
  raw.le = {{true, true}, {true, true}};
  CHECK_THROWS_WITH_AS(Poset::validate(raw), doctest::Contains("antisymmetric"), Error);

  raw = two_chain_raw();
  raw.le = {{true, false}, {false, true}};
  try {
    Poset::validate(raw);
    FAIL("expected NotBounded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotBounded);
  }

  RawPoset bad_inv = two_chain_raw();
  bad_inv.inv = {1, 1};
  try {
    Poset::validate(bad_inv);
    FAIL("expected NotInvolution");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInvolution);
  }
}

TEST_CASE("antitone violation is reported with a witness pair") {
  RawPoset raw;
  raw.size = 4;
  // diamond with involution fixing the atoms but crossing with an extra relation
  raw.le = {{true, true, true, true},
            {false, true, true, true},   // p < q: makes the atoms comparable
            {false, false, true, true},
            {false, false, false, true}};
  raw.inv = {3, 1, 2, 0};
  raw.bottom = 0;
  raw.top = 3;
  try {
    Poset::validate(raw);
    FAIL("expected NotAntitone");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAntitone);
    CHECK(e.witness().size() == 2);
  }
}

TEST_CASE("cones against a scan oracle on the figures") {
  for (const Poset& p : {fixtures::fig1(), fixtures::fig2(), fixtures::fig3(), fixtures::b6(), fixtures::fig5()}) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << p.size()); mask += 7) {  // sampled subsets
      Subset a(static_cast<size_t>(p.size()));
      for (int i = 0; i < p.size(); ++i)
        if (mask & (uint64_t{1} << i)) a.set(static_cast<size_t>(i));
      CHECK(cone(p, a, Cone::lower) == oracles::cone_by_scan(p, a, true));
      CHECK(cone(p, a, Cone::upper) == oracles::cone_by_scan(p, a, false));
    }
  }
}

TEST_CASE("cone of the empty set is the whole universe") {
  Poset p = fixtures::b6();
  CHECK(cone(p, p.empty(), Cone::lower) == p.full());
}

TEST_CASE("fig1 witness cone L(U(a,b),c) = {0,c}") {
  Poset p = fixtures::fig1();
  const Element a = 1, b = 2, c = 3;
  Subset uab = p.upper_cone(a, b);
  Subset result = p.lower_cone(uab) & p.down(c);
  Subset expected(static_cast<size_t>(p.size()));
  expected.set(0);
  expected.set(static_cast<size_t>(c));
  CHECK(result == expected);
  // and the inner cones collapse: LU(L(a,c),L(b,c)) = {0}
  Subset t = (p.down(a) & p.down(c)) | (p.down(b) & p.down(c));
  CHECK(p.lower_cone(p.upper_cone(t)) == p.single(0));
}

TEST_CASE("b6 cone L(a',b) = {0}") {
  Poset p = fixtures::b6();
  CHECK(p.lower_cone(p.inv(1), 2) == p.single(0));
}

TEST_CASE("partial meets and joins") {
  Poset two = Poset::validate(two_chain_raw());
  CHECK(partial_meet(two, 0, 1) == 0);

  Poset p = fixtures::b6();
  CHECK(partial_meet(p, p.inv(1), 2) == 0);   // a' /\ b = 0
  CHECK(partial_join(p, 1, p.inv(2)) == 5);   // a \/ b' = 1

  // incomparable coatoms of fig2 have no meet, dually the atoms no join
  Poset f2 = fixtures::fig2();
  CHECK(!partial_meet(f2, 3, 4).has_value());
  CHECK(!partial_join(f2, 1, 2).has_value());
}

TEST_CASE("figure property profile") {
  Poset f1 = fixtures::fig1();
  CHECK(check(f1, PosetProperty::paraorthomodular));
  CHECK(check(f1, PosetProperty::modular));
  CHECK(!check(f1, PosetProperty::distributive));

  Poset f2 = fixtures::fig2();
  CHECK(check(f2, PosetProperty::paraorthomodular));
  CHECK(check(f2, PosetProperty::distributive));

  Poset f3 = fixtures::fig3();
  CHECK(check(f3, PosetProperty::paraorthomodular));
  auto modular = check(f3, PosetProperty::modular);
  CHECK(!modular);
  REQUIRE(modular.witness.size() == 3);
  CHECK(f3.label(modular.witness[0]) == "a");
  CHECK(f3.label(modular.witness[2]) == "c'");

  Poset b = fixtures::b6();
  auto para = check(b, PosetProperty::paraorthomodular);
  CHECK(!para);
  REQUIRE(para.witness.size() == 2);
  CHECK(b.label(para.witness[0]) == "a");
  CHECK(b.label(para.witness[1]) == "b");

  Poset f5 = fixtures::fig5();
  CHECK(check(f5, PosetProperty::paraorthomodular));
  CHECK(check(f5, PosetProperty::sharply_paraorthomodular));
}

TEST_CASE("cone and meet formulations of paraorthomodularity agree on lattices") {
  EnumOptions opts;
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : all_posets(n, opts)) {
      bool lattice = true;
      for (Element x = 0; lattice && x < p.size(); ++x)
        for (Element y = 0; y < p.size(); ++y)
          if (!p.meet(x, y) || !p.join(x, y)) {
            lattice = false;
            break;
          }
      if (lattice)
        CHECK(static_cast<bool>(check(p, PosetProperty::paraorthomodular)) ==
              static_cast<bool>(paraorthomodular_meet_form(p)));
    }
}

TEST_CASE("cond12 and cond13 are equivalent on enumerated structures") {
  EnumOptions opts;
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : all_posets(n, opts))
      CHECK(static_cast<bool>(check(p, PosetProperty::cond12)) ==
            static_cast<bool>(check(p, PosetProperty::cond13)));
}

TEST_CASE("orthomodular and pseudo-orthomodular imply paraorthomodular") {
  EnumOptions opts;
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : all_posets(n, opts)) {
      if (check(p, PosetProperty::orthomodular)) CHECK(check(p, PosetProperty::paraorthomodular));
      if (check(p, PosetProperty::pseudo_orthomodular)) CHECK(check(p, PosetProperty::paraorthomodular));
    }
}

TEST_CASE("pseudo-orthomodular dual identity agrees on complemented structures") {
  EnumOptions opts;
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : all_posets(n, opts)) {
      if (!check(p, PosetProperty::orthoposet)) continue;
      bool first = true, second = true;
      for (Element x = 0; x < p.size() && (first || second); ++x)
        for (Element y = 0; y < p.size(); ++y) {
          Subset lxy = p.lower_cone(x, y);
          Subset uxy = p.upper_cone(x, y);
          if ((p.lower_cone(p.upper_cone(lxy) & p.up(p.inv(y))) & p.down(y)) != lxy) first = false;
          if ((p.upper_cone(p.lower_cone(uxy) & p.down(p.inv(y))) & p.up(y)) != uxy) second = false;
        }
      CHECK(first == second);
    }
}

TEST_CASE("cone antitonicity and closure idempotence") {
  Poset p = fixtures::fig3();
  for (uint64_t ma = 0; ma < (uint64_t{1} << p.size()); ma += 13)
    for (uint64_t mb = ma; mb < (uint64_t{1} << p.size()); mb += 97) {
      Subset a(static_cast<size_t>(p.size())), b(static_cast<size_t>(p.size()));
      for (int i = 0; i < p.size(); ++i) {
        if (ma & (uint64_t{1} << i)) a.set(static_cast<size_t>(i));
        if (mb & (uint64_t{1} << i)) b.set(static_cast<size_t>(i));
      }
      if (a.is_subset_of(b)) CHECK(p.lower_cone(b).is_subset_of(p.lower_cone(a)));
      Subset la = p.lower_cone(a);
      CHECK(p.lower_cone(p.upper_cone(la)) == la);  // LUL(A) = L(A)
    }
}

TEST_CASE("adding fresh bounds yields a paraorthomodular structure") {
  EnumOptions opts;
  for (int n = 1; n <= 5; ++n)
    for (const Poset& p : all_posets(n, opts)) {
      Poset q = add_bounds(p);
      CHECK(q.size() == p.size() + 2);
      CHECK(check(q, PosetProperty::paraorthomodular));
    }
  CHECK(check(add_bounds(fixtures::b6()), PosetProperty::paraorthomodular));
}

TEST_CASE("diamond is orthomodular") {
  CHECK(check(fixtures::diamond(), PosetProperty::orthomodular));
  CHECK(check(fixtures::diamond(), PosetProperty::orthoposet));
}
