#include <catch_amalgamated.hpp>

#include <sstream>

#include <dihedral/cli.hpp>

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = dihedral::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
  }
}  // namespace

TEST_CASE("documented invocations", "[cli]") {
  auto r = run({"--n", "4", "--k", "3", "nf", "2 3 4 1"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 2 3 4\ni=1 j=1 b=\n");

  r = run({"--n", "4", "--k", "3", "eq", "1 2 3 4", "4 3 2 1"});
  CHECK(r.code == 0);
  CHECK(r.out == "equal\n");

  r = run({"--n", "4", "--k", "2", "nf", "1"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("k^2 ≡ 1 mod n") != std::string::npos);
}

TEST_CASE("invalid input exits 2", "[cli]") {
  CHECK(run({"--n", "3", "--k", "2", "relations"}).code == 2);
  CHECK(run({"--n", "4", "--k", "3", "nf", "5"}).code == 2);
  CHECK(run({"--n", "4", "--k", "3", "nf", "a9"}).code == 2);
  CHECK(run({"--n", "4", "--k", "3", "--bogus", "relations"}).code == 2);
  CHECK(run({"--n", "4", "--k", "3"}).code == 2);
  CHECK(run({"--n", "4", "--k", "3", "eq", "1"}).code == 2);
  CHECK(run({"--n", "4", "--k", "3", "verify", "--suite", "nope"}).code == 2);
  CHECK(run({"--n", "4", "--k", "3", "orbit", "1 2 3 4", "--cap", "3"}).code == 2);
  CHECK(run({"--n", "4", "--k", "3", "verify", "--suite", "unique-nf", "--max-len", "30"})
            .code
        == 2);
  CHECK(run({"--n", "4", "--k", "3", "dfa", "--which", "other"}).code == 2);
}

TEST_CASE("expectations", "[cli]") {
  CHECK(run({"--n", "4", "--k", "3", "nf", "1 2 3 4 3 4 1", "--expect", "1 1 2 3 4 4 3"})
            .code
        == 0);
  CHECK(run({"--n", "4", "--k", "3", "nf", "1 2 3 4 3 4 1", "--expect", "1 2 3 4 3 4 1"})
            .code
        == 1);
  CHECK(run({"--n", "4", "--k", "3", "eq", "1", "2", "--expect", "not-equal"}).code == 0);
  CHECK(run({"--n", "4", "--k", "3", "eq", "1", "2", "--expect", "equal"}).code == 1);
}

TEST_CASE("word output parses back to the normal form", "[cli]") {
  auto p = dihedral::new_presentation(4, 3);
  for (std::string w : {"1 2 3 4 3 4 1", "a4 a3 a2 a1 a1", "3", ""}) {
    auto r = run({"--n", "4", "--k", "3", "nf", w});
    REQUIRE(r.code == 0);
    auto line = r.out.substr(0, r.out.find('\n'));
    CHECK(dihedral::parse_word(line, 4)
          == dihedral::normal_form(p, dihedral::parse_word(w, 4)));
  }
}

TEST_CASE("relations and orbit", "[cli]") {
  auto r = run({"--n", "4", "--k", "3", "relations"});
  CHECK(r.code == 0);
  CHECK(r.out
        == "1 2 3 4\n1 4 3 2\n2 1 4 3\n2 3 4 1\n3 2 1 4\n3 4 1 2\n4 1 2 3\n4 3 2 1\n");
  auto o = run({"--n", "4", "--k", "3", "orbit", "4 3 2 1"});
  CHECK(o.code == 0);
  CHECK(o.out == r.out);
}

TEST_CASE("the empty word", "[cli]") {
  auto r = run({"--n", "4", "--k", "3", "nf", ""});
  CHECK(r.code == 0);
  CHECK(r.out == "\ni=0 j=0 b=\n");
}

TEST_CASE("count and growth agree", "[cli]") {
  auto c = run({"--n", "4", "--k", "3", "count", "--max-len", "5"});
  auto g = run({"--n", "4", "--k", "3", "growth", "--max-len", "5"});
  CHECK(c.code == 0);
  CHECK(c.out == "length,count\n0,1\n1,4\n2,16\n3,64\n4,249\n5,972\n");
  CHECK(g.out.rfind(c.out, 0) == 0);
  CHECK(g.out.find("num: 1 -3 -3 2 -4 0 4 -4\n") != std::string::npos);
  CHECK(g.out.find("den: 1 -7 9 14 -5 -9 -5 2\n") != std::string::npos);
}

TEST_CASE("automaton export", "[cli]") {
  auto r = run({"--n", "4", "--k", "3", "dfa", "--which", "irreducible", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 4);
  CHECK(j["k"] == 3);
  CHECK(j["which"] == "irreducible");
  CHECK(j["states"] == 39);
  CHECK(j["transitions"].size() == 39 * 4);
  CHECK(r.out == run({"--n", "4", "--k", "3", "dfa"}).out);

  auto d = run({"--n", "4", "--k", "3", "dfa", "--which", "theorem", "--format", "dot"});
  CHECK(d.code == 0);
  CHECK(d.out.rfind("digraph theorem {", 0) == 0);
}

TEST_CASE("verify exit codes follow the report", "[cli]") {
  auto ok = run({"--n", "4", "--k", "3", "verify", "--suite", "centrality"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  auto bad = run({"--n", "4", "--k", "3", "verify", "--suite", "dfa-equivalence"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("failure:") != std::string::npos);
  auto js = run({"--n", "4", "--k", "3", "verify", "--suite", "lemma-z2", "--max-q", "1", "--json"});
  CHECK(js.code == 0);
  auto j = nlohmann::json::parse(js.out);
  CHECK(j[0]["bounds"]["max_q"] == 1);
  CHECK(j[0]["checked"] == 16);
}
