#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "khr/explorer.hpp"
#include "oracles.hpp"

using namespace khr;

namespace {

const Corpus& corpus() {
  static const Corpus c = default_corpus();
  return c;
}

bool same_class(const std::vector<oracle::Raw>& expected, const std::vector<HyperringTable>& got) {
  if (expected.size() != got.size()) return false;
  for (const auto& e : expected)
    if (std::none_of(got.begin(), got.end(), [&](const HyperringTable& t) {
          return oracle::isomorphic(e, oracle::from_table(t));
        }))
      return false;
  return true;
}

const TheoremReport& report(const std::vector<TheoremReport>& all, const std::string& id) {
  for (const auto& r : all)
    if (r.theorem_id == id) return r;
  throw std::runtime_error("missing report " + id);
}

}  // namespace

TEST_CASE("order-2 enumeration matches the unpruned oracle") {
  auto got = enumerate_hyperrings(2, Exhaustive{});
  auto expected = oracle::unpruned_order2();
  CHECK(expected.size() == 4);
  CHECK(got.size() == 4);
  CHECK(same_class(expected, got));
  for (std::size_t i = 0; i < got.size(); ++i)
    for (std::size_t j = i + 1; j < got.size(); ++j) CHECK_FALSE(isomorphic(got[i], got[j]));
}

TEST_CASE("order-3 enumeration matches the zero-fixed oracle") {
  auto got = enumerate_hyperrings(3, Exhaustive{});
  auto expected = oracle::zero_fixed_order3();
  CHECK(expected.size() == 19);  // regression value produced by the oracle
  CHECK(got.size() == expected.size());
  CHECK(same_class(expected, got));
  const auto has = [&](const HyperringTable& t) {
    return std::any_of(got.begin(), got.end(), [&](const HyperringTable& g) { return isomorphic(g, t); });
  };
  CHECK(has(build_classical_zn(3)));
  CHECK(has(build_h3()));
  for (const auto& t : got) CHECK(validate_krasner_hyperring(t).passed());
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(enumerate_hyperrings(4, Exhaustive{}), OrderTooLarge);
  CHECK_THROWS_AS(enumerate_hyperrings(7, RandomSample{1, 1}), OrderTooLarge);
  CHECK_THROWS_AS(enumerate_hyperrings(0, Exhaustive{}), std::invalid_argument);
  CHECK(enumerate_hyperrings(1, Exhaustive{}).size() == 1);
}

TEST_CASE("random enumeration is reproducible and valid") {
  auto a = enumerate_hyperrings(4, RandomSample{7, 5});
  auto b = enumerate_hyperrings(4, RandomSample{7, 5});
  CHECK(a == b);
  CHECK_FALSE(a.empty());
  CHECK(a.size() <= 5);
  for (const auto& t : a) {
    CHECK(t.order() == 4);
    CHECK(validate_krasner_hyperring(t).passed());
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) CHECK_FALSE(isomorphic(a[i], a[j]));
  for (const auto& t : enumerate_hyperrings(5, RandomSample{3, 2})) CHECK(validate_krasner_hyperring(t).passed());
}

TEST_CASE("default corpus invariants") {
  const auto& c = corpus();
  CHECK(c.size() == 182);
  std::set<std::string> ids;
  for (const auto& e : c.entries()) {
    CHECK(ids.insert(e.id).second);
    CHECK(e.ring.order() <= 12);
    CHECK(validate_krasner_hyperring(e.ring).passed());
    if (e.factors) CHECK(build_product(e.factors->left, e.factors->right) == e.ring);
  }
  CHECK(c.find("Z6"));
  CHECK(c.find("H3"));
  CHECK(c.find("Z6/{0,3}"));
  CHECK_FALSE(c.find("chain(3,min)"));
  CHECK(std::any_of(c.excluded().begin(), c.excluded().end(),
                    [](const std::string& s) { return s.find("K3-distributive") != std::string::npos; }));

  Corpus small = default_corpus({.max_order = 4, .with_quotients = false});
  for (const auto& e : small.entries()) CHECK(e.ring.order() <= 4);
  Corpus seeded = default_corpus({.seed = 11, .with_quotients = false});
  CHECK(seeded.size() > default_corpus({.with_quotients = false}).size());
}

TEST_CASE("Corpus::add rejects duplicates and invalid tables") {
  Corpus c;
  c.add({"Z2", build_classical_zn(2), Provenance::Builder, nullptr});
  CHECK_THROWS_AS(c.add({"Z2", build_classical_zn(3), Provenance::Builder, nullptr}), std::invalid_argument);
  CHECK_THROWS_AS(c.add({"chain", build_chain(3), Provenance::Builder, nullptr}), std::invalid_argument);
  CHECK(c.size() == 1);
}

TEST_CASE("load_corpus keeps valid files and lists the rest") {
  auto c = load_corpus(KHR_DATA_DIR);
  std::vector<std::string> ids;
  for (const auto& e : c.entries()) ids.push_back(e.id);
  CHECK(ids == std::vector<std::string>{"H3", "Z6"});
  CHECK(c.excluded().size() == 3);
  CHECK_THROWS_AS(load_corpus("/nonexistent/khr"), std::runtime_error);
}

TEST_CASE("theorem catalog") {
  auto cat = theorem_catalog();
  CHECK(cat.size() == 55);
  std::set<std::string> ids;
  for (const auto& t : cat) CHECK(ids.insert(t.id).second);
  CHECK(ids.count("THM-3.1"));
  CHECK_THROWS_AS(run_theorem_suite(corpus(), {"NO-SUCH"}), UnknownTheoremId);
}

TEST_CASE("suite output does not depend on the thread count") {
  const std::vector<std::string> ids{"THM-3.1", "COR-1j", "THM-4.2", "PROP-7"};
  auto one = run_theorem_suite(corpus(), ids, {.threads = 1});
  auto four = run_theorem_suite(corpus(), ids, {.threads = 4});
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].theorem_id == four[i].theorem_id);
    CHECK(one[i].instances_checked == four[i].instances_checked);
    CHECK(one[i].skipped_hypothesis_unmet == four[i].skipped_hypothesis_unmet);
    CHECK(one[i].violation_count == four[i].violation_count);
    REQUIRE(one[i].violations.size() == four[i].violations.size());
    for (std::size_t k = 0; k < one[i].violations.size(); ++k) {
      CHECK(one[i].violations[k].ring_id == four[i].violations[k].ring_id);
      CHECK(one[i].violations[k].message == four[i].violations[k].message);
    }
  }
}

TEST_CASE("stored COR-1j violations replay") {
  auto reports = run_theorem_suite(corpus(), {"COR-1j"}, {.threads = 2, .stored_violations = 1000});
  const auto& r = reports.front();
  CHECK(r.ok());
  CHECK(r.status() == "falsified as expected");
  CHECK(r.violations.size() == r.violation_count);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front().ring_id == "Z6");
  for (const auto& v : r.violations) {
    const auto* e = corpus().find(v.ring_id);
    REQUIRE(e);
    REQUIRE(v.ideals.size() == 3);
    CHECK(ideal_sum(e->ring, v.ideals[0], v.ideals[1]) == v.ideals[2]);
    auto raw = oracle::from_table(e->ring);
    CHECK(oracle::is_r(raw, {v.ideals[0].begin(), v.ideals[0].end()}));
    CHECK(oracle::is_r(raw, {v.ideals[1].begin(), v.ideals[1].end()}));
    CHECK_FALSE(oracle::is_r(raw, {v.ideals[2].begin(), v.ideals[2].end()}));
  }
}

TEST_CASE("EX3-CLAIM is falsified with witness (a,1)") {
  auto r = run_theorem_suite(corpus(), {"EX3-CLAIM"}).front();
  CHECK(r.ok());
  CHECK(r.expectation == Expectation::Falsified);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].ring_id == "chain(3,min)");
  CHECK(r.violations[0].witness_text == "(a,1)");
  CHECK(r.violations[0].message.find("open question") != std::string::npos);
}

TEST_CASE("statuses") {
  auto all = run_theorem_suite(corpus());
  CHECK(all.size() == theorem_catalog().size());
  for (const auto& r : all) CHECK_MESSAGE(r.ok(), r.theorem_id << " " << r.status());
  CHECK(report(all, "THM-3.1").instances_checked >= 200);
  CHECK(report(all, "THM-3.1").status() == "confirmed at desk scale");
  CHECK(report(all, "COR-3c").status() == "0 applicable instances");
  CHECK(report(all, "COR-3c").instances_checked == 0);
  for (const auto& r : all) {
    std::size_t checked = 0, skipped = 0, violations = 0;
    for (const auto& t : r.per_ring) {
      checked += t.checked;
      skipped += t.skipped;
      violations += t.violations;
    }
    CHECK(checked == r.instances_checked);
    CHECK(skipped == r.skipped_hypothesis_unmet);
    CHECK(violations == r.violation_count);
  }
}

TEST_CASE("identity gates are needed: the zero-multiplication ring of order 2") {
  // Without identity there are no regular elements, so {0} is r and maximal
  // among r-hyperideals, yet {0} is not prime (a*a = 0) and there is no
  // proper prime at all.
  const auto e2 = enumerate_hyperrings(2, Exhaustive{}).front();
  REQUIRE(e2.mul(1, 1) == 0);
  const auto zero = ElementSubset::of({0});
  CHECK(is_r_hyperideal(IdealHandle::trusted(e2, zero)).verdict);
  CHECK(enumerate_hyperideals(e2) == std::vector<ElementSubset>{zero, e2.carrier()});
  CHECK_FALSE(prime_check(e2, zero).verdict);
  CHECK_FALSE(ring_conditions(e2).hyperdomain.verdict);
  CHECK(minimal_primes_over(IdealHandle::trusted(e2, zero)).no_prime_found);

  Corpus c;
  c.add({"E2-1", e2, Provenance::Exhaustive, nullptr});
  for (const auto& r : run_theorem_suite(c, {"THM-HD", "PROP-7", "THM-10"})) {
    CHECK(r.instances_checked == 0);
    CHECK(r.skipped_hypothesis_unmet > 0);
    CHECK(r.violation_count == 0);
  }
}

TEST_CASE("preimages that are the whole ring are skipped") {
  auto z2 = build_classical_zn(2), z3 = build_classical_zn(3);
  auto p = build_product(z2, z3);
  auto inj = product_injection(z2, z3, p, 0);
  auto n = ElementSubset::of({0, 3});
  REQUIRE(is_r_hyperideal(IdealHandle::trusted(p, n)).verdict);
  CHECK(transport_ideal(inj, Transport::Preimage, n) == z2.carrier());
}

TEST_CASE("counterexample search") {
  auto props = counterexample_properties();
  CHECK(props.size() == 4);

  auto sum = find_counterexample("sum-of-r-is-r", corpus());
  REQUIRE(std::holds_alternative<Counterexample>(sum));
  const auto& ce = std::get<Counterexample>(sum);
  CHECK(ce.ring_id == "Z6");
  REQUIRE(ce.ideals.size() >= 2);
  CHECK(ce.ideals[0] == ElementSubset::of({0, 3}));
  CHECK(ce.ideals[1] == ElementSubset::of({0, 2, 4}));

  auto chain = find_counterexample("example3-chain-ideal-is-r", corpus());
  REQUIRE(std::holds_alternative<Counterexample>(chain));
  CHECK(std::get<Counterexample>(chain).ring_id == "chain(3,min)");

  auto pr = find_counterexample("pr-implies-r", corpus());
  REQUIRE(std::holds_alternative<NotFound>(pr));
  CHECK(std::get<NotFound>(pr).rings_scanned == corpus().size());
  CHECK(std::get<NotFound>(pr).instances > 0);

  CHECK_THROWS_AS(find_counterexample("nope", corpus()), UnknownPropertyId);
}
