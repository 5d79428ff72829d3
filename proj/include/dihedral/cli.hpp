#ifndef DIHEDRAL_CLI_HPP_
#define DIHEDRAL_CLI_HPP_

// Command-line front end. run() takes the arguments without the program
// name and writes to the given streams, so it can be tested in-process.
//
// Exit codes: 0 success, 1 verification failure or failed --expect,
// 2 invalid input or an exceeded limit.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "automata.hpp"
#include "errors.hpp"
#include "growth.hpp"
#include "normal_words.hpp"
#include "oracle.hpp"
#include "presentation.hpp"
#include "rewrite.hpp"
#include "verify.hpp"
#include "word.hpp"

namespace dihedral::cli {

  inline constexpr int exit_ok      = 0;
  inline constexpr int exit_failed  = 1;
  inline constexpr int exit_invalid = 2;

  struct CliConfig {
    int                      n = 0;
    int                      k = 0;
    std::string              command;
    std::vector<std::string> words;
    std::optional<std::string> expect;
    std::size_t              cap     = default_class_cap;
    std::int64_t             max_len = -1;
    std::string              which   = "irreducible";
    std::string              format  = "json";
    std::string              suite   = "all";
    bounds_type              bounds;
    bool                     json = false;
  };

  namespace detail {
    inline std::string join(std::vector<std::string> const& parts) {
      std::string out;
      for (auto const& s : parts) {
        out += (out.empty() ? "" : " ") + s;
      }
      return out;
    }

    inline void print_counts(std::ostream& out, GrowthSeries const& g) {
      out << "length,count\n";
      for (std::size_t len = 0; len < g.coefficients.size(); ++len) {
        out << len << ',' << g.coefficients[len] << '\n';
      }
    }

    inline void print_report(std::ostream& out, SuiteReport const& r) {
      out << "suite " << r.suite_name << " n=" << r.n << " k=" << r.k;
      for (auto const& [key, value] : r.bounds) {
        out << ' ' << key << '=' << value;
      }
      out << " checked=" << r.checked << " failures=" << r.failure_count
          << (r.passed() ? " PASS" : " FAIL") << '\n';
      for (auto const& note : r.notes) {
        out << "  note: " << note << '\n';
      }
      for (auto const& f : r.failures) {
        out << "  failure: " << f.input << " expected " << f.expected
            << " got " << f.actual << '\n';
      }
    }

    inline int dispatch(CliConfig const& cfg,
                        std::ostream&    out,
                        std::ostream&    err) {
      auto const p = new_presentation(cfg.n, cfg.k);
      auto const n = static_cast<std::size_t>(cfg.n);

      if (cfg.command == "nf") {
        auto nf = normal_form(p, parse_word(join(cfg.words), n));
        auto d  = decompose(p, nf);
        out << to_string(nf) << '\n'
            << "i=" << d.i << " j=" << d.j << " b=" << to_string(d.b) << '\n';
        if (cfg.expect && parse_word(*cfg.expect, n) != nf) {
          err << "error: normal form differs from --expect\n";
          return exit_failed;
        }
        return exit_ok;
      }
      if (cfg.command == "eq") {
        if (cfg.words.size() != 2) {
          throw InvalidWord("eq expects exactly two words");
        }
        bool equal = normal_form(p, parse_word(cfg.words[0], n))
                     == normal_form(p, parse_word(cfg.words[1], n));
        std::string verdict = equal ? "equal" : "not-equal";
        out << verdict << '\n';
        if (cfg.expect && *cfg.expect != verdict) {
          err << "error: expected " << *cfg.expect << '\n';
          return exit_failed;
        }
        return exit_ok;
      }
      if (cfg.command == "relations") {
        for (auto const& w : p.relation_words()) {
          out << to_string(w) << '\n';
        }
        return exit_ok;
      }
      if (cfg.command == "orbit") {
        auto cls = congruence_class(p, parse_word(join(cfg.words), n), cfg.cap);
        if (cls.truncated) {
          err << "error: congruence class has more than " << cfg.cap
              << " members; raise --cap\n";
          return exit_invalid;
        }
        for (auto const& w : cls.members) {
          out << to_string(w) << '\n';
        }
        return exit_ok;
      }
      if (cfg.command == "count" || cfg.command == "growth") {
        auto g = growth_series(irreducible_dfa(p),
                               static_cast<std::size_t>(cfg.max_len));
        print_counts(out, g);
        if (cfg.command == "growth") {
          out << "num: " << to_string(g.numerator) << '\n'
              << "den: " << to_string(g.denominator) << '\n';
        }
        return exit_ok;
      }
      if (cfg.command == "dfa") {
        Dfa d = cfg.which == "theorem" ? theorem_language_dfa(p)
                                       : irreducible_dfa(p);
        if (cfg.format == "dot") {
          out << to_dot(d, cfg.which);
        } else {
          nlohmann::ordered_json j;
          j["n"]     = cfg.n;
          j["k"]     = cfg.k;
          j["which"] = cfg.which;
          auto const body = to_json(d);
          for (auto const& [key, value] : body.items()) {
            j[key] = value;
          }
          out << j.dump() << '\n';
        }
        return exit_ok;
      }
      if (cfg.command == "verify") {
        std::vector<std::string> suites;
        if (cfg.suite == "all") {
          suites = suite_names();
        } else {
          suites.push_back(cfg.suite);
        }
        bool           failed = false;
        nlohmann::json all    = nlohmann::json::array();
        for (auto const& s : suites) {
          auto report = run_suite(p, s, cfg.bounds);
          failed |= !report.passed();
          if (cfg.json) {
            all.push_back(to_json(report));
          } else {
            print_report(out, report);
          }
        }
        if (cfg.json) {
          out << all.dump(2) << '\n';
        }
        return failed ? exit_failed : exit_ok;
      }
      throw Error("no command given");
    }
  }  // namespace detail

  inline int run(std::vector<std::string> args,
                 std::ostream&            out,
                 std::ostream&            err) {
    CliConfig cfg;
    CLI::App  app{"Normal forms and automata for monoids of dihedral type",
                 "dihedral"};
    app.require_subcommand(1);
    app.add_option("--n", cfg.n, "number of generators (n > 3)")->required();
    app.add_option("--k", cfg.k, "skip parameter (1 < k < n, k^2 = 1 mod n)")
        ->required();

    auto* nf = app.add_subcommand("nf", "normal form and its decomposition");
    nf->add_option("word", cfg.words, "word, e.g. \"2 3 4 1\"")->required();
    nf->add_option("--expect", cfg.expect, "exit 1 unless the normal form is this word");

    auto* eq = app.add_subcommand("eq", "whether two words are equal");
    eq->add_option("words", cfg.words, "two words")->required()->expected(2);
    eq->add_option("--expect", cfg.expect, "equal or not-equal; exit 1 otherwise")
        ->check(CLI::IsMember({"equal", "not-equal"}));

    app.add_subcommand("relations", "the 2n relation words");

    auto* orbit = app.add_subcommand("orbit", "congruence class by relation moves");
    orbit->add_option("word", cfg.words, "word")->required();
    orbit->add_option("--cap", cfg.cap, "largest class to enumerate");

    for (char const* name : {"count", "growth"}) {
      auto* sub = app.add_subcommand(
          name,
          std::string(name) == "count"
              ? "number of normal words of each length"
              : "counts and rational generating function");
      sub->add_option("--max-len", cfg.max_len, "largest length")
          ->required()
          ->check(CLI::NonNegativeNumber);
    }

    auto* dfa = app.add_subcommand("dfa", "export an automaton");
    dfa->add_option("--which", cfg.which)
        ->check(CLI::IsMember({"irreducible", "theorem"}));
    dfa->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot"}));

    auto*        verify = app.add_subcommand("verify", "run verification suites");
    std::int64_t max_q = 0, max_v = 0, samples = 0, seed = 0;
    verify->add_option("--suite", cfg.suite, "suite name or all");
    auto* o_len = verify->add_option("--max-len", cfg.max_len)
                      ->check(CLI::NonNegativeNumber);
    auto* o_q = verify->add_option("--max-q", max_q)->check(CLI::NonNegativeNumber);
    auto* o_v = verify->add_option("--max-v", max_v)->check(CLI::NonNegativeNumber);
    auto* o_samples
        = verify->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
    auto* o_seed = verify->add_option("--seed", seed)->check(CLI::NonNegativeNumber);
    verify->add_flag("--json", cfg.json, "print reports as JSON");

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::ParseError const& e) {
      if (e.get_exit_code() == 0) {  // --help
        app.exit(e, out, err);
        return exit_ok;
      }
      err << "error: " << e.what() << '\n';
      return exit_invalid;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    if (cfg.command == "verify") {
      if (*o_len) {
        cfg.bounds["max_len"] = cfg.max_len;
      }
      if (*o_q) {
        cfg.bounds["max_q"] = max_q;
      }
      if (*o_v) {
        cfg.bounds["max_v"] = max_v;
      }
      if (*o_samples) {
        cfg.bounds["samples"] = samples;
      }
      if (*o_seed) {
        cfg.bounds["seed"] = seed;
      }
    }

    try {
      return detail::dispatch(cfg, out, err);
    } catch (RuleMismatch const& e) {
      err << "error: " << e.what() << '\n';
      return exit_failed;
    } catch (NonDecreasingStep const& e) {
      err << "error: " << e.what() << '\n';
      return exit_failed;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return exit_invalid;
    } catch (std::bad_alloc const&) {
      err << "error: out of memory\n";
      return exit_invalid;
    }
  }

}  // namespace dihedral::cli

#endif  // DIHEDRAL_CLI_HPP_
