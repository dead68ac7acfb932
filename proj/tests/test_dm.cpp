#include "doctest.h"
#include "pomlab/pomlab.hpp"

using namespace pomlab;

TEST_CASE("completion of a finite lattice is the lattice itself") {
  for (const Poset& p : {fixtures::diamond(), fixtures::chain(4), fixtures::fig5(), fixtures::b6()}) {
    bool lattice = is_complete_lattice(p);
    DmCompletion dm = dm_complete(p);
    if (lattice) {
      CHECK(static_cast<int>(dm.universe.size()) == p.size());
      // the embedding is onto: every closed set is principal
      CHECK(dm.lattice.size() == p.size());
    }
  }
}

TEST_CASE("completion of fig3 grows beyond ten closed sets") {
  DmCompletion dm = dm_complete(fixtures::fig3());
  CHECK(dm.universe.size() > 10);
}

TEST_CASE("embedded image is involution-closed and doubly dense") {
  EnumOptions opts;
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : all_posets(n, opts)) {
      DmCompletion dm = dm_complete(p);
      Subset image(dm.universe.size());
      for (int idx : dm.embedding) image.set(static_cast<size_t>(idx));
      CHECK(is_doubly_dense(image, dm.lattice));
    }
}

TEST_CASE("doubly dense requires a complete lattice") {
  Poset p = fixtures::fig2();  // atoms lack a join
  CHECK(!is_complete_lattice(p));
  CHECK_THROWS_AS(is_doubly_dense(p.full(), p), Error);
  CHECK(is_doubly_dense(fixtures::diamond().full(), fixtures::diamond()));
}

TEST_CASE("orthocomplement is an antitone involution on closed sets") {
  EnumOptions opts;
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : all_posets(n, opts)) {
      DmCompletion dm = dm_complete(p);
      for (const Subset& x : dm.universe) {
        Subset perp = dm.orthocomplement(x);
        CHECK(dm.index_of(perp) >= 0);
        CHECK(dm.orthocomplement(perp) == x);
        for (const Subset& y : dm.universe)
          if (x.is_subset_of(y)) CHECK(dm.orthocomplement(y).is_subset_of(perp));
      }
      // double orthocomplement closes arbitrary subsets
      for (uint64_t mask = 0; mask < (uint64_t{1} << p.size()); mask += 3) {
        Subset s(static_cast<size_t>(p.size()));
        for (int i = 0; i < p.size(); ++i)
          if (mask & (uint64_t{1} << i)) s.set(static_cast<size_t>(i));
        Subset closure = p.lower_cone(p.upper_cone(s));
        Subset perp = p.lower_cone(p.inv_image(s));
        Subset perp2 = p.lower_cone(p.inv_image(perp));
        CHECK(perp2 == closure);
      }
    }
}

TEST_CASE("embedding preserves existing meets and joins") {
  EnumOptions opts;
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : all_posets(n, opts)) {
      DmCompletion dm = dm_complete(p);
      for (Element x = 0; x < p.size(); ++x)
        for (Element y = 0; y < p.size(); ++y) {
          auto m = p.meet(x, y);
          auto lm = dm.lattice.meet(dm.embedding[static_cast<size_t>(x)], dm.embedding[static_cast<size_t>(y)]);
          REQUIRE(lm.has_value());  // the completion is a lattice
          if (m) CHECK(*lm == dm.embedding[static_cast<size_t>(*m)]);
          auto j = p.join(x, y);
          auto lj = dm.lattice.join(dm.embedding[static_cast<size_t>(x)], dm.embedding[static_cast<size_t>(y)]);
          REQUIRE(lj.has_value());
          if (j) CHECK(*lj == dm.embedding[static_cast<size_t>(*j)]);
        }
    }
}

TEST_CASE("b6 is not weakly D-continuous, with an explicit witness") {
  Poset p = fixtures::b6();
  auto raw = is_weakly_d_continuous(p, SweepMode::raw_subsets);
  CHECK(!raw);
  // the witness violates the displayed condition
  Subset b = raw.first, c = raw.second;
  Subset ante = p.lower_cone(c) & p.lower_cone(p.inv_image(b));
  CHECK(ante == p.single(p.bottom()));
  CHECK(!p.lower_cone(c).is_subset_of(p.lower_cone(p.upper_cone(b))));
}

TEST_CASE("the boolean diamond is weakly D-continuous") {
  CHECK(is_weakly_d_continuous(fixtures::diamond(), SweepMode::raw_subsets));
  CHECK(is_weakly_d_continuous(fixtures::diamond(), SweepMode::closed_sets));
}

TEST_CASE("wdc agrees with paraorthomodularity of the completion") {
  EnumOptions opts;
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : all_posets(n, opts)) {
      bool completion_para =
          static_cast<bool>(check(dm_complete(p).lattice, PosetProperty::paraorthomodular));
      CHECK(static_cast<bool>(is_weakly_d_continuous(p, SweepMode::raw_subsets)) == completion_para);
      CHECK(static_cast<bool>(is_weakly_d_continuous(p, SweepMode::closed_sets)) == completion_para);
    }
}

TEST_CASE("flp fails on b6 and holds on fig2") {
  CHECK(!satisfies_flp(fixtures::b6(), SweepMode::raw_subsets));
  CHECK(satisfies_flp(fixtures::fig2(), SweepMode::raw_subsets));
}

TEST_CASE("three-way equivalence and mode cross-validation") {
  EnumOptions opts;
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : all_posets(n, opts)) {
      bool completion_para =
          static_cast<bool>(check(dm_complete(p).lattice, PosetProperty::paraorthomodular));
      bool wdc_raw = static_cast<bool>(is_weakly_d_continuous(p, SweepMode::raw_subsets));
      bool wdc_red = static_cast<bool>(is_weakly_d_continuous(p, SweepMode::closed_sets));
      bool flp_raw = static_cast<bool>(satisfies_flp(p, SweepMode::raw_subsets));
      bool flp_red = static_cast<bool>(satisfies_flp(p, SweepMode::closed_sets));
      CHECK(wdc_raw == completion_para);
      CHECK(flp_raw == completion_para);
      CHECK(wdc_red == wdc_raw);
      CHECK(flp_red == flp_raw);
    }
}

TEST_CASE("weak D-continuity implies paraorthomodularity of the source") {
  EnumOptions opts;
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : all_posets(n, opts))
      if (is_weakly_d_continuous(p, SweepMode::closed_sets))
        CHECK(check(p, PosetProperty::paraorthomodular));
}

TEST_CASE("embedding theorem, forward direction") {
  EnumOptions opts;
  for (int n = 1; n <= 6; ++n)
    for (const Poset& p : all_posets(n, opts)) {
      bool wdc = static_cast<bool>(is_weakly_d_continuous(p, SweepMode::closed_sets));
      bool para = static_cast<bool>(check(p, PosetProperty::paraorthomodular));
      if (!(wdc && para)) continue;
      DmCompletion dm = dm_complete(p);
      CHECK(is_complete_lattice(dm.lattice));
      CHECK(check(dm.lattice, PosetProperty::paraorthomodular));
      Subset image(dm.universe.size());
      for (int idx : dm.embedding) image.set(static_cast<size_t>(idx));
      CHECK(is_doubly_dense(image, dm.lattice));
    }
}

TEST_CASE("budget limits raise BudgetExceeded") {
  DmOptions opts;
  opts.raw_max_n = 4;
  CHECK_THROWS_AS(is_weakly_d_continuous(fixtures::b6(), SweepMode::raw_subsets, opts), Error);
  CHECK_THROWS_AS(satisfies_flp(fixtures::b6(), SweepMode::raw_subsets, opts), Error);
  opts.reduced_max_n = 4;
  CHECK_THROWS_AS(is_weakly_d_continuous(fixtures::b6(), SweepMode::closed_sets, opts), Error);
}

TEST_CASE("suprema and infima of subsets in complete lattices") {
  Poset p = fixtures::diamond();
  Subset atoms(4);
  atoms.set(1);
  atoms.set(2);
  CHECK(sup_of(p, atoms) == 3);
  CHECK(inf_of(p, atoms) == 0);
  CHECK(sup_of(p, p.empty()) == 0);  // empty join is the bottom
  CHECK(inf_of(p, p.empty()) == 3);
}
