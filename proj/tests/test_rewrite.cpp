#include <catch_amalgamated.hpp>

#include <random>

#include <dihedral/errors.hpp>
#include <dihedral/oracle.hpp>
#include <dihedral/rewrite.hpp>

using namespace dihedral;

namespace {
  std::vector<Presentation> matrix() {
    return {new_presentation(4, 3),
            new_presentation(5, 4),
            new_presentation(6, 5),
            new_presentation(8, 3),
            new_presentation(8, 5),
            new_presentation(8, 7)};
  }

  word_type random_word(Presentation const& p, std::mt19937_64& rng, std::size_t len) {
    std::uniform_int_distribution<int> d(1, p.n());
    word_type w(len);
    for (auto& x : w) {
      x = static_cast<letter_type>(d(rng));
    }
    return w;
  }
}  // namespace

TEST_CASE("redex detection on small words", "[rewrite]") {
  auto p = new_presentation(4, 3);

  auto r = find_redexes(p, word_type{2, 3, 4, 1});
  REQUIRE(r.size() == 1);
  CHECK(r[0].kind == RuleKind::T);
  CHECK(r[0].i == 2);
  CHECK(r[0].match_start == 0);
  CHECK(r[0].match_len == 4);

  CHECK(find_redexes(p, word_type{1, 2}).empty());

  r = find_redexes(p, word_type{1, 2, 3, 4, 3, 4, 1});
  REQUIRE(r.size() == 1);
  CHECK(r[0].kind == RuleKind::D);
  CHECK(r[0].i == 2);
  CHECK(r[0].q == 0);
  CHECK(r[0].v_len == 0);
  CHECK(r[0].match_start == 0);
  CHECK(r[0].match_len == 7);
}

TEST_CASE("rule application", "[rewrite]") {
  auto p = new_presentation(4, 3);
  CHECK(apply_rule(p, word_type{2, 3, 4, 1}, {RuleKind::T, 2, 0, 0, 0, 4, 0})
        == word_type{1, 2, 3, 4});
  CHECK(apply_rule(p, word_type{2, 1, 2, 3, 4}, {RuleKind::R, 2, 1, 0, 0, 5, 0})
        == word_type{1, 2, 3, 4, 2});
  CHECK(apply_rule(p,
                   word_type{1, 2, 3, 4, 3, 4, 1},
                   {RuleKind::D, 2, 0, 0, 0, 7, 0})
        == word_type{1, 2, 3, 4, 1, 4, 3});
  CHECK_THROWS_AS(
      apply_rule(p, word_type{2, 3, 4, 1}, {RuleKind::T, 3, 0, 0, 0, 4, 0}),
      RuleMismatch);
  CHECK_THROWS_AS(
      apply_rule(p, word_type{2, 3, 4}, {RuleKind::T, 2, 0, 0, 0, 4, 0}),
      RuleMismatch);
}

TEST_CASE("left and right sides of each family", "[rewrite]") {
  auto p = new_presentation(4, 3);
  CHECK(rule_lhs(p, RuleKind::H, 1, 0, 0) == word_type{1, 4, 3, 2});
  CHECK(rule_rhs(p, RuleKind::H, 1, 0, 0) == word_type{1, 2, 3, 4});
  CHECK(rule_lhs(p, RuleKind::R, 3, 2, 0) == word_type{3, 1, 1, 2, 3, 4});
  CHECK(rule_rhs(p, RuleKind::R, 3, 2, 0) == word_type{1, 2, 3, 4, 3, 1});
  // S: z v a_i b_i ... -> a_1^2 (a_2 ... a_n)^2 v c ...
  auto lhs = rule_lhs(p, RuleKind::S, 2, 0, 1, word_type{4});
  auto rhs = rule_rhs(p, RuleKind::S, 2, 0, 1, word_type{4});
  CHECK(lhs.size() == rhs.size());
  CHECK(compare_length_lex(rhs, lhs) < 0);
  CHECK(oracle_equal(p, lhs, rhs));
}

TEST_CASE("every family is sound and decreasing", "[rewrite]") {
  for (auto const& p : matrix()) {
    for (auto kind : all_rule_kinds) {
      for (int i = 1; i <= p.n(); ++i) {
        if (!in_range(p, kind, i)) {
          continue;
        }
        for (int q = 0; q <= (has_gap(kind) ? 1 : 0); ++q) {
          int  m   = kind == RuleKind::R ? 2 : 0;
          auto lhs = rule_lhs(p, kind, i, m, q, word_type{2});
          auto rhs = rule_rhs(p, kind, i, m, q, word_type{2});
          INFO(p.n() << "," << p.k() << " " << to_char(kind) << " i=" << i
                     << " q=" << q);
          CHECK(lhs.size() == rhs.size());
          CHECK(compare_length_lex(rhs, lhs) < 0);
          CHECK(oracle_equal(p, lhs, rhs));
        }
      }
    }
  }
}

TEST_CASE("normal forms of the documented words", "[rewrite]") {
  auto p = new_presentation(4, 3);
  CHECK(normal_form(p, word_type{2, 3, 4, 1}) == word_type{1, 2, 3, 4});
  CHECK(normal_form(p, word_type{1, 2}) == word_type{1, 2});
  CHECK(normal_form(p, word_type{1, 2, 3, 4, 3, 4, 1})
        == word_type{1, 1, 2, 3, 4, 4, 3});
  CHECK(normal_form(p, word_type{}).empty());

  auto trace = reduction_trace(p, word_type{1, 2, 3, 4, 3, 4, 1});
  REQUIRE(trace.size() == 2);
  CHECK(trace[0].rule.kind == RuleKind::D);
  CHECK(trace[1].rule.kind == RuleKind::T);
  CHECK(trace.back().result == word_type{1, 1, 2, 3, 4, 4, 3});
}

TEST_CASE("irreducibility", "[rewrite]") {
  auto p = new_presentation(4, 3);
  CHECK(is_irreducible(p, word_type{1, 1, 2, 3, 4, 4, 3}));
  CHECK_FALSE(is_irreducible(p, word_type{2, 3, 4, 1}));
  CHECK(is_irreducible(p, word_type{}));
  CHECK(is_irreducible(p, p.identity_word()));
}

TEST_CASE("decomposition", "[rewrite]") {
  auto p = new_presentation(4, 3);
  auto d = decompose(p, word_type{1, 2, 3, 4});
  CHECK(d.i == 1);
  CHECK(d.j == 1);
  CHECK(d.b.empty());
  d = decompose(p, word_type{3});
  CHECK(d.i == 0);
  CHECK(d.j == 0);
  CHECK(d.b == word_type{3});
  d = decompose(p, word_type{1, 1, 2, 3, 4, 4, 3});
  CHECK(d.i == 2);
  CHECK(d.j == 1);
  CHECK(d.b == word_type{4, 3});
  CHECK(d.reassemble(p) == word_type{1, 1, 2, 3, 4, 4, 3});
  CHECK_THROWS_AS(decompose(p, word_type{2, 3, 4, 1}), NotNormalForm);
}

TEST_CASE("normal form properties on random words", "[rewrite][property]") {
  std::mt19937_64 rng(7);
  for (auto const& p : matrix()) {
    for (int s = 0; s < 200; ++s) {
      auto w  = random_word(p, rng, rng() % (3 * p.n() + 1));
      auto nf = normal_form(p, w);
      INFO(p.n() << "," << p.k() << " w=" << to_string(w));
      CHECK(nf.size() == w.size());
      CHECK(compare_length_lex(nf, w) <= 0);
      CHECK(is_irreducible(p, nf));
      CHECK(normal_form(p, nf) == nf);
      CHECK(normal_form_random(p, w, rng) == nf);
      CHECK(decompose(p, nf).reassemble(p) == nf);
    }
  }
}

TEST_CASE("normal forms agree with the oracle", "[rewrite][property]") {
  std::mt19937_64 rng(11);
  auto            p = new_presentation(5, 4);
  for (int s = 0; s < 100; ++s) {
    auto w = random_word(p, rng, 5 + rng() % 4);
    CHECK(oracle_equal(p, w, normal_form(p, w)));
  }
}

TEST_CASE("z is central", "[rewrite]") {
  for (auto const& p : matrix()) {
    for (int i = 1; i <= p.n(); ++i) {
      word_type a{static_cast<letter_type>(i)};
      CHECK(normal_form(p, concat({p.identity_word(), a}))
            == normal_form(p, concat({a, p.identity_word()})));
    }
  }
}
