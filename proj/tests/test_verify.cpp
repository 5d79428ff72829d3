#include <catch_amalgamated.hpp>

#include <dihedral/errors.hpp>
#include <dihedral/verify.hpp>

using namespace dihedral;

TEST_CASE("centrality suite", "[verify]") {
  auto r = run_suite(new_presentation(4, 3), "centrality");
  CHECK(r.passed());
  CHECK(r.checked == 4);
  CHECK(r.suite_name == "centrality");
  CHECK(r.n == 4);
  CHECK(r.k == 3);
}

TEST_CASE("unique normal form suite", "[verify]") {
  auto r = run_suite(new_presentation(4, 3), "unique-nf", {{"max_len", 6}});
  CHECK(r.passed());
  CHECK(r.checked == 1 + 4 + 16 + 64 + 256 + 1024 + 4096);
  CHECK(r.bounds.at("max_len") == 6);
}

TEST_CASE("chain identity suite", "[verify]") {
  auto p = new_presentation(4, 3);
  auto r = run_suite(p, "lemma-z2", {{"max_q", 0}});
  CHECK(r.passed());
  CHECK(r.checked == 8);
  // The i = 1, q = 0 instance of the first identity.
  CHECK(normal_form(p, word_type{1, 2, 3, 4, 2, 3, 4})
        == normal_form(p, word_type{1, 2, 3, 4, 4, 3, 2}));
}

TEST_CASE("sampling suites are reproducible", "[verify]") {
  auto p = new_presentation(5, 4);
  for (auto name : {"soundness", "cancellativity", "descent"}) {
    bounds_type b{{"samples", 100}, {"seed", 5}};
    auto        r1 = run_suite(p, name, b);
    auto        r2 = run_suite(p, name, b);
    INFO(name);
    CHECK(r1.passed());
    CHECK(r1.checked == r2.checked);
    CHECK(r1.bounds == r2.bounds);
  }
}

TEST_CASE("confluence suite on small bounds", "[verify]") {
  auto r = run_suite(new_presentation(4, 3),
                     "confluence",
                     {{"max_len", 6}, {"max_q", 1}, {"max_v", 1}});
  INFO((r.failures.empty() ? "" : r.failures.front().input));
  CHECK(r.passed());
  CHECK(r.checked > 0);
}

TEST_CASE("overlap synthesis covers the inventory", "[verify]") {
  auto p     = new_presentation(8, 3);
  auto words = synthesize_overlaps(p, 1, 1);
  std::set<std::tuple<RuleKind, RuleKind, bool>> covered;
  for (auto const& w : words) {
    covered.emplace(w.first, w.second, w.after_gap);
  }
  for (auto const& pair : overlap_inventory()) {
    auto [x, y, gap] = pair;
    INFO(to_char(x) << to_char(y) << (gap ? " after gap" : ""));
    CHECK(covered.contains(pair));
  }
}

TEST_CASE("vacuous overlaps", "[verify]") {
  // With k = n - 1 every chain repeats one block, and no D tail meets an E
  // tail.
  auto p = new_presentation(4, 3);
  CHECK(gap_overlap_vacuous(p, RuleKind::D, RuleKind::E, 8));
  CHECK(gap_overlap_vacuous(p, RuleKind::E, RuleKind::D, 8));
  CHECK_FALSE(gap_overlap_vacuous(p, RuleKind::D, RuleKind::D, 8));
  CHECK_FALSE(gap_overlap_vacuous(new_presentation(8, 3), RuleKind::D, RuleKind::E, 2));
}

TEST_CASE("growth suite and automaton comparison", "[verify]") {
  auto p = new_presentation(4, 3);
  CHECK(run_suite(p, "growth-vs-oracle", {{"max_len", 6}}).passed());
  auto r = run_suite(p, "dfa-equivalence");
  CHECK(r.checked == 1);
  REQUIRE(r.failure_count == 1);
  CHECK(r.failures.front().actual == "witness [1 4 3 2]");
}

TEST_CASE("suite errors", "[verify]") {
  auto p = new_presentation(4, 3);
  CHECK_THROWS_AS(run_suite(p, "nope"), UnknownSuite);
  CHECK_THROWS_AS(run_suite(p, "unique-nf", {{"max_len", 20}}), BudgetExceeded);
}

TEST_CASE("unused bounds are dropped and defaults filled", "[verify]") {
  auto p = new_presentation(8, 3);
  auto r = run_suite(p, "centrality", {{"max_len", 3}});
  CHECK(r.bounds.empty());
  r = run_suite(new_presentation(4, 3), "growth-vs-oracle");
  CHECK(r.bounds.at("max_len") == 6);
}

TEST_CASE("report serialization", "[verify]") {
  auto r = run_suite(new_presentation(4, 3), "centrality");
  auto j = to_json(r);
  CHECK(j["suite_name"] == "centrality");
  CHECK(j["checked"] == 4);
  CHECK(j["failures"].empty());
  CHECK(j.contains("elapsed_ms"));
  CHECK(j.contains("bounds"));
}
