#include <catch_amalgamated.hpp>

#include <dihedral/growth.hpp>
#include <dihedral/normal_words.hpp>

using namespace dihedral;

namespace {
  std::vector<big_integer> ints(std::initializer_list<long long> xs) {
    std::vector<big_integer> out;
    for (auto x : xs) {
      out.emplace_back(x);
    }
    return out;
  }
}  // namespace

TEST_CASE("rational series of simple sequences", "[growth]") {
  auto g = rational_series(ints({1, 2, 4, 8, 16, 32}));
  CHECK(g.numerator == ints({1}));
  CHECK(g.denominator == ints({1, -2}));

  g = rational_series(ints({0, 1, 1, 2, 3, 5, 8, 13, 21}));
  CHECK(g.numerator == ints({0, 1}));
  CHECK(g.denominator == ints({1, -1, -1}));
  CHECK(g.consistent());

  g = rational_series(ints({0, 0, 0, 0}));
  CHECK(g.numerator == ints({0}));
  CHECK(g.denominator == ints({1}));

  g = rational_series(ints({3, 3, 3, 3, 3}));
  CHECK(g.numerator == ints({3}));
  CHECK(g.denominator == ints({1, -1}));
}

TEST_CASE("growth of the normal words", "[growth]") {
  auto p = new_presentation(4, 3);
  auto g = growth_series(irreducible_dfa(p), 7);
  CHECK(g.coefficients == ints({1, 4, 16, 64, 249, 972, 3792, 14788}));
  CHECK(g.numerator == ints({1, -3, -3, 2, -4, 0, 4, -4}));
  CHECK(g.denominator == ints({1, -7, 9, 14, -5, -9, -5, 2}));
  CHECK(g.expand(60) == count_words_up_to(irreducible_dfa(p), 59));
}

TEST_CASE("growth below and at the relation length", "[growth]") {
  for (auto [n, k] : {std::pair{4, 3}, {5, 4}, {6, 5}, {8, 3}, {8, 5}, {8, 7}}) {
    auto        p = new_presentation(n, k);
    auto        g = growth_series(irreducible_dfa(p), static_cast<std::size_t>(n));
    big_integer power = 1;
    for (int len = 0; len < n; ++len) {
      CHECK(g.coefficients[len] == power);
      power *= n;
    }
    CHECK(g.coefficients[n] == power - 2 * n + 1);
    CHECK(g.consistent());
  }
}

TEST_CASE("polynomial printing", "[growth]") {
  CHECK(to_string(ints({1, -7, 0})) == "1 -7 0");
  CHECK(to_string(polynomial{}).empty());
}
