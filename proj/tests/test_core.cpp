#include "doctest.h"
#include "helpers.hpp"
#include "khr/core.hpp"
#include "khr/dsl.hpp"
#include "oracles.hpp"

using namespace khr;

TEST_CASE("ElementSubset basics") {
  auto s = ElementSubset::of({0, 3, 5});
  CHECK(s.size() == 3);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(4));
  CHECK(s.first() == 0);
  CHECK(s.elements() == std::vector<Element>{0, 3, 5});
  CHECK(ElementSubset::full(4) == ElementSubset::of({0, 1, 2, 3}));
  CHECK(ElementSubset::full(64).size() == 64);
  CHECK((s - ElementSubset::singleton(0)) == ElementSubset::of({3, 5}));
  CHECK(ElementSubset::of({0, 3}).subset_of(s));
  CHECK(canonical_less(ElementSubset::of({5}), ElementSubset::of({0, 1})));
  CHECK(canonical_less(ElementSubset::of({0, 1}), ElementSubset::of({0, 2})));
}

TEST_CASE("table shape is enforced at construction") {
  std::vector<ElementSubset> add(4, ElementSubset::of({0}));
  std::vector<Element> mul(4, 0);
  CHECK_NOTHROW(HyperringTable("ok", {"0", "a"}, add, mul, 0));
  CHECK_THROWS_AS(HyperringTable("dup", {"0", "0"}, add, mul, 0), StructureError);
  CHECK_THROWS_AS(HyperringTable("zero", {"0", "a"}, add, mul, 2), StructureError);
  CHECK_THROWS_AS(HyperringTable("size", {"0", "a"}, add, std::vector<Element>(3, 0), 0), StructureError);
  auto bad = add;
  bad[1] = ElementSubset{};
  CHECK_THROWS_AS(HyperringTable("empty", {"0", "a"}, bad, mul, 0), StructureError);
  bad[1] = ElementSubset::of({4});
  CHECK_THROWS_AS(HyperringTable("outside", {"0", "a"}, bad, mul, 0), StructureError);
  auto badmul = mul;
  badmul[3] = 7;
  CHECK_THROWS_AS(HyperringTable("range", {"0", "a"}, add, badmul, 0), StructureError);
}

TEST_CASE("Zn and H3 validate") {
  for (int n = 2; n <= 12; ++n) {
    auto z = build_classical_zn(n);
    auto rep = validate_krasner_hyperring(z);
    CHECK_MESSAGE(rep.passed(), z.name());
    CHECK(rep.satisfied("C") == 5);
    CHECK(rep.satisfied("K") == 4);
    CHECK(oracle::is_krasner(oracle::from_table(z)));
  }
  auto h = build_h3();
  CHECK(validate_krasner_hyperring(h).passed());
  CHECK(oracle::is_krasner(oracle::from_table(h)));
}

TEST_CASE("H3 arithmetic") {
  auto h = build_h3();
  const Element one = *h.find("1"), a = *h.find("a"), zero = h.zero();
  CHECK(h.add(one, one) == h.carrier());
  CHECK(h.add(a, a) == ElementSubset::of({zero, a}));
  CHECK(h.mul(a, a) == zero);
  CHECK(negate(h, one) == one);
  CHECK(negate(h, a) == a);
  CHECK(identity_element(h) == one);
  CHECK(power(h, a, 2) == zero);
  CHECK(hyper_sum(h, ElementSubset::of({a}), ElementSubset::of({one})) == ElementSubset::of({one}));
  CHECK(format_subset(h, ElementSubset::of({zero, a})) == "{0,a}");
}

TEST_CASE("Zn helpers") {
  auto z = build_classical_zn(6);
  CHECK(negate(z, 2) == 4);
  CHECK(inverse_table(z) == std::vector<Element>{0, 5, 4, 3, 2, 1});
  CHECK(hyper_difference(z, ElementSubset::of({1}), ElementSubset::of({3})) == ElementSubset::of({4}));
  CHECK(scale(z, 2, ElementSubset::of({1, 3})) == ElementSubset::of({0, 2}));
  CHECK(power(z, 2, 3) == 2);
}

TEST_CASE("negate reports missing and repeated inverses") {
  // 0 and a with a+a = {a}: a has no inverse.
  HyperringTable t("t", {"0", "a"},
                   {ElementSubset::of({0}), ElementSubset::of({1}), ElementSubset::of({1}), ElementSubset::of({1})},
                   {0, 0, 0, 0}, 0);
  CHECK_THROWS_AS(negate(t, 1), NotCanonical);
  CHECK(inverse_table(t)[1] == -1);
  auto rep = validate_canonical_hypergroup(t);
  CHECK(rep.violated(axiom::kUniqueInverse));
}

TEST_CASE("chain(3,min) fails distributivity with the first lexicographic witness") {
  auto c = build_chain(3, ChainMulRule::Min);
  auto rep = validate_krasner_hyperring(c);
  CHECK(validate_canonical_hypergroup(c).passed());
  REQUIRE(rep.violated(axiom::kDistributive));
  const auto& v = rep.violations.front();
  CHECK(v.axiom_id == axiom::kDistributive);
  REQUIRE(v.witness.size() == 3);
  CHECK(c.name_of(v.witness[0]) == "a");
  CHECK(c.name_of(v.witness[1]) == "a");
  CHECK(c.name_of(v.witness[2]) == "1");
  CHECK_FALSE(oracle::is_krasner(oracle::from_table(c)));
}

TEST_CASE("all_witnesses collects every violating tuple") {
  auto t = test::load("Z6_mutated.khr");
  auto rep = validate_krasner_hyperring(t, {.all_witnesses = true});
  CHECK_FALSE(rep.passed());
  CHECK(rep.violated(axiom::kCommutative));
  for (const auto& v : rep.violations) {
    CHECK(v.all_witnesses.size() == v.count);
    CHECK(v.all_witnesses.front() == v.witness);
  }
}

TEST_CASE("mutated Z6 reports the commutativity witness (2,3)") {
  auto t = test::load("Z6_mutated.khr");
  auto rep = validate_krasner_hyperring(t);
  REQUIRE(rep.violated(axiom::kCommutative));
  for (const auto& v : rep.violations)
    if (v.axiom_id == axiom::kCommutative) CHECK(v.witness == std::vector<Element>{2, 3});
  CHECK_FALSE(oracle::is_krasner(oracle::from_table(t)));
}

TEST_CASE("validator agrees with the oracle on every order-2 table") {
  const std::vector<ElementSubset> cells{ElementSubset::of({0}), ElementSubset::of({1}), ElementSubset::of({0, 1})};
  int agree = 0;
  for (int am = 0; am < 81; ++am)
    for (int mm = 0; mm < 16; ++mm) {
      std::vector<ElementSubset> add(4);
      std::vector<Element> mul(4);
      int a = am, m = mm;
      for (int c = 0; c < 4; ++c) {
        add[c] = cells[a % 3];
        a /= 3;
        mul[c] = m % 2;
        m /= 2;
      }
      HyperringTable t("t", {"0", "a"}, add, mul, 0);
      CHECK(validate_krasner_hyperring(t).passed() == oracle::is_krasner(oracle::from_table(t)));
      ++agree;
    }
  CHECK(agree == 81 * 16);
}
