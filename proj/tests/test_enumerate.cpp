#include "doctest.h"
#include "pomlab/pomlab.hpp"
#include "support/oracles.hpp"

#include <random>

using namespace pomlab;

namespace {

Poset relabel(const Poset& p, const std::vector<Element>& perm) {
  RawPoset raw;
  raw.size = p.size();
  raw.le.assign(static_cast<size_t>(p.size()), std::vector<bool>(static_cast<size_t>(p.size()), false));
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (p.le(x, y))
        raw.le[static_cast<size_t>(perm[static_cast<size_t>(x)])][static_cast<size_t>(perm[static_cast<size_t>(y)])] = true;
  raw.inv.resize(static_cast<size_t>(p.size()));
  for (Element x = 0; x < p.size(); ++x)
    raw.inv[static_cast<size_t>(perm[static_cast<size_t>(x)])] = perm[static_cast<size_t>(p.inv(x))];
  raw.bottom = perm[static_cast<size_t>(p.bottom())];
  raw.top = perm[static_cast<size_t>(p.top())];
  return Poset::validate(raw);
}

}  // namespace

TEST_CASE("forced structures at tiny sizes") {
  EnumOptions opts;
  CHECK(all_posets(1, opts).size() == 1);
  CHECK(all_posets(2, opts).size() == 1);
  CHECK(all_posets(3, opts).size() == 1);
  CHECK(all_posets(4, opts).size() == 3);
}

TEST_CASE("enumeration matches the naive labeled oracle up to n = 5") {
  EnumOptions opts;
  for (int n = 1; n <= 5; ++n)
    CHECK(all_posets(n, opts).size() == oracles::naive_poset_class_count(n));
}

TEST_CASE("enumeration matches the brute-relabeling pipeline up to n = 8") {
  // independent generation and canonicalization; exercises the refined
  // canonical labeler against a minimum-over-all-permutations key
  EnumOptions opts;
  for (int n = 3; n <= 8; ++n)
    CHECK(all_posets(n, opts).size() == oracles::independent_poset_class_count(n));
}

TEST_CASE("effect algebra enumeration matches the naive oracle up to n = 5") {
  EnumOptions opts;
  for (int n = 1; n <= 5; ++n)
    CHECK(all_effect_algebras(n, opts).size() == oracles::naive_ea_class_count(n));
}

TEST_CASE("two effect algebras at size two and three") {
  EnumOptions opts;
  CHECK(all_effect_algebras(2, opts).size() == 1);
  CHECK(all_effect_algebras(3, opts).size() == 1);  // the self-paired midpoint chain
}

TEST_CASE("random relabelings canonicalize identically") {
  EnumOptions opts;
  std::mt19937 rng(20240811);
  for (int n = 2; n <= 7; ++n)
    for (const Poset& p : all_posets(n, opts)) {
      CanonicalForm base = canonical_form(p);
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<Element> perm(static_cast<size_t>(p.size()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(relabel(p, perm)) == base);
      }
    }
}

TEST_CASE("distinct enumerated structures have distinct canonical forms") {
  EnumOptions opts;
  for (int n = 2; n <= 7; ++n) {
    std::set<std::string> forms;
    for (const Poset& p : all_posets(n, opts)) CHECK(forms.insert(canonical_form(p).bytes).second);
  }
}

TEST_CASE("canonical forms separate the involution structure") {
  // the two diamonds of size 4 differ only in the involution
  EnumOptions opts;
  const auto& list = all_posets(4, opts);
  REQUIRE(list.size() == 3);
  std::set<std::string> forms;
  for (const Poset& p : list) forms.insert(canonical_form(p).bytes);
  CHECK(forms.size() == 3);
}

TEST_CASE("stream order is deterministic and filters apply") {
  EnumOptions opts;
  std::vector<std::string> first, second;
  enumerate_posets(6, {}, [&](const Poset& p) {
    first.push_back(canonical_form(p).bytes);
    return true;
  }, opts);
  opts.threads = 4;
  enumerate_posets(6, {}, [&](const Poset& p) {
    second.push_back(canonical_form(p).bytes);
    return true;
  }, opts);
  CHECK(first == second);
  CHECK(std::is_sorted(first.begin(), first.end()));

  int para = 0, all = 0;
  enumerate_posets(6, {PosetProperty::paraorthomodular}, [&](const Poset& p) {
    CHECK(check(p, PosetProperty::paraorthomodular));
    ++para;
    return true;
  }, opts);
  enumerate_posets(6, {}, [&](const Poset& p) {
    (void)p;
    ++all;
    return true;
  }, opts);
  CHECK(para < all);
  CHECK(para > 0);
}

TEST_CASE("filtered counts agree with per-structure checks") {
  EnumOptions opts;
  opts.threads = 2;
  for (int n = 1; n <= 6; ++n) {
    size_t direct = 0;
    for (const Poset& p : all_posets(n, opts))
      if (check(p, PosetProperty::orthoposet) && check(p, PosetProperty::paraorthomodular)) ++direct;
    size_t filtered = 0;
    enumerate_posets(n, {PosetProperty::orthoposet, PosetProperty::paraorthomodular},
                     [&](const Poset&) {
                       ++filtered;
                       return true;
                     },
                     opts);
    CHECK(filtered == direct);
  }
}

TEST_CASE("caps raise CapExceeded") {
  EnumOptions opts;
  opts.poset_cap = 4;
  CHECK_THROWS_AS(all_posets(5, opts), Error);
  opts.ea_cap = 2;
  CHECK_THROWS_AS(all_effect_algebras(3, opts), Error);
}

TEST_CASE("b6 assignments all fail cond6") {
  EnumOptions opts;
  AssignmentPolicy pol;
  pol.enumerate_all = true;
  int count = 0;
  enumerate_directoids(fixtures::b6(), pol, [&](const Directoid& d) {
    ++count;
    CHECK(check_class(d, DirectoidClass::involutive45));
    CHECK(!check_class(d, DirectoidClass::cond6));
    return true;
  }, opts);
  CHECK(count >= 1);
}

TEST_CASE("counterexample searches") {
  EnumOptions opts;
  // paraorthomodular does not imply orthomodular
  auto c1 = search_counterexample({PosetProperty::paraorthomodular}, {PosetProperty::orthomodular}, 6, opts);
  REQUIRE(c1.has_value());
  CHECK(check(*c1, PosetProperty::paraorthomodular));
  CHECK(!check(*c1, PosetProperty::orthomodular));
  // the smallest witness appears at size 3: the chain with a fixed midpoint
  CHECK(c1->size() == 3);

  CHECK(!search_counterexample({PosetProperty::orthomodular}, {PosetProperty::paraorthomodular}, 6, opts)
             .has_value());
  CHECK(!search_counterexample({PosetProperty::pseudo_orthomodular}, {PosetProperty::paraorthomodular}, 6,
                               opts)
             .has_value());
}

TEST_CASE("directoid and effect algebra canonical forms") {
  Directoid d = fixtures::fig5_directoid();
  CHECK(canonical_form(d) == canonical_form(d));
  EffectAlgebra ea = fixtures::boolean_ea();
  CHECK(canonical_form(ea) == canonical_form(ea));
  CHECK(!(canonical_form(ea) == canonical_form(fixtures::mv3_ea())));
}
