#include <catch_amalgamated.hpp>

#include <dihedral/errors.hpp>
#include <dihedral/oracle.hpp>

using namespace dihedral;

TEST_CASE("congruence classes", "[oracle]") {
  auto p   = new_presentation(4, 3);
  auto cls = congruence_class(p, word_type{1, 2, 3, 4});
  CHECK_FALSE(cls.truncated);
  CHECK(cls.members == p.relation_words());

  cls = congruence_class(p, word_type{1});
  CHECK(cls.members == std::vector<word_type>{{1}});

  cls = congruence_class(p, word_type{1, 2, 3, 4, 1});
  CHECK(std::find(cls.members.begin(), cls.members.end(), word_type{1, 1, 2, 3, 4})
        != cls.members.end());

  cls = congruence_class(p, word_type{1, 2, 3, 4}, 3);
  CHECK(cls.truncated);
}

TEST_CASE("oracle equality", "[oracle]") {
  auto p = new_presentation(4, 3);
  CHECK(oracle_equal(p, word_type{1, 2, 3, 4}, word_type{4, 3, 2, 1}));
  CHECK_FALSE(oracle_equal(p, word_type{1}, word_type{2}));
  CHECK(oracle_equal(p, word_type{1, 2, 3, 4, 1}, word_type{1, 1, 2, 3, 4}));
  CHECK_FALSE(oracle_equal(p, word_type{1, 2}, word_type{1, 2, 3}));
  CHECK(oracle_equal(p, word_type{}, word_type{}));
  CHECK_THROWS_AS(oracle_equal(p,
                               word_type{1, 2, 3, 4, 1, 2, 3, 4, 1},
                               word_type{1, 1, 2, 3, 4, 2, 3, 4, 4},
                               4),
                  Inconclusive);
}

TEST_CASE("class counts", "[oracle]") {
  auto p = new_presentation(4, 3);
  CHECK(count_classes(p, 0) == 1);
  CHECK(count_classes(p, 1) == 4);
  CHECK(count_classes(p, 3) == 64);
  CHECK(count_classes(p, 4) == 249);
  for (auto [n, k] : {std::pair{5, 4}, {6, 5}, {8, 3}}) {
    auto q = new_presentation(n, k);
    std::uint64_t nn = 1;
    for (int t = 0; t < n; ++t) {
      nn *= static_cast<std::uint64_t>(n);
    }
    if (nn <= 1'000'000) {
      CHECK(count_classes(q, static_cast<std::size_t>(n)) == nn - 2 * n + 1);
    }
  }
  CHECK_THROWS_AS(count_classes(p, 20), BudgetExceeded);
  CHECK_THROWS_AS(count_classes(p, 6, 1000), BudgetExceeded);
}

TEST_CASE("partition agrees with breadth-first classes", "[oracle]") {
  auto            p = new_presentation(4, 3);
  LengthPartition part(p, 6);
  for (std::uint64_t code = 0; code < part.size(); code += 37) {
    auto w   = part.decode(code);
    auto cls = congruence_class(p, w);
    CHECK(part.decode(part.find(code)) == cls.members.front());
    for (auto const& u : cls.members) {
      CHECK(part.find(part.encode(u)) == part.find(code));
    }
  }
}
