#include <catch_amalgamated.hpp>

#include <random>

#include <dihedral/normal_words.hpp>
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
}  // namespace

TEST_CASE("irreducible automaton agrees with the redex scan", "[lang]") {
  std::mt19937_64 rng(3);
  for (auto const& p : matrix()) {
    auto d = irreducible_dfa(p);
    std::uniform_int_distribution<int> letter(1, p.n());
    for (int s = 0; s < 2000; ++s) {
      word_type w(rng() % (3 * p.n()));
      for (auto& x : w) {
        x = static_cast<letter_type>(letter(rng));
      }
      if (s % 2 == 1) {
        w = normal_form(p, w);
      }
      INFO(p.n() << "," << p.k() << " " << to_string(w));
      CHECK(d.accepts(w) == is_irreducible(p, w));
    }
  }
}

TEST_CASE("irreducible automaton basics", "[lang]") {
  auto p = new_presentation(4, 3);
  auto d = irreducible_dfa(p);
  CHECK(d == minimize(d));
  CHECK(count_words(d, 0) == 1);
  CHECK(count_words(d, 3) == 64);
  CHECK(count_words(d, 4) == 249);
  auto res = dfa_equivalent(d, Dfa::universal(4));
  CHECK_FALSE(res.equivalent);
  REQUIRE(res.witness);
  CHECK(res.witness->size() == 4);
  CHECK_FALSE(is_irreducible(p, *res.witness));
  CHECK(*res.witness == word_type{1, 4, 3, 2});
}

TEST_CASE("counts match the oracle", "[lang]") {
  for (auto [n, k] : {std::pair{4, 3}, {5, 4}}) {
    auto p = new_presentation(n, k);
    auto d = irreducible_dfa(p);
    for (std::size_t len = 0; len <= static_cast<std::size_t>(n + 1); ++len) {
      CHECK(count_words(d, len) == count_classes(p, len));
    }
  }
}

// The closed expression is translated term by term; its language contains
// every normal word but, read literally, also some reducible ones.
TEST_CASE("closed expression contains the normal words", "[lang]") {
  for (auto const& p : matrix()) {
    auto irr = irreducible_dfa(p);
    auto thm = theorem_language_dfa(p);
    CHECK(dfa_included(irr, thm).equivalent);
    auto extra = dfa_included(thm, irr);
    REQUIRE_FALSE(extra.equivalent);
    auto skip = p.skip_word(Residue{1});
    CHECK(*extra.witness == skip);
  }
}

TEST_CASE("closed expression accepts the shapes it lists", "[lang]") {
  auto p   = new_presentation(4, 3);
  auto thm = theorem_language_dfa(p);
  CHECK(thm.accepts(word_type{}));
  CHECK(thm.accepts(word_type{1, 1, 1}));
  CHECK(thm.accepts(word_type{2, 3, 4, 2, 3, 4}));
  CHECK(thm.accepts(word_type{1, 1, 2, 3, 4, 4, 3}));
  CHECK_FALSE(thm.accepts(word_type{2, 3, 4, 1}));
}
