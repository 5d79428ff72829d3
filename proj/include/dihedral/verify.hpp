#ifndef DIHEDRAL_VERIFY_HPP_
#define DIHEDRAL_VERIFY_HPP_

// Property suites that cross-check the rewriting system, the relation-move
// oracle and the automata against each other on one presentation.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "automata.hpp"
#include "errors.hpp"
#include "growth.hpp"
#include "normal_words.hpp"
#include "oracle.hpp"
#include "presentation.hpp"
#include "rewrite.hpp"
#include "word.hpp"

namespace dihedral {

  using bounds_type = std::map<std::string, std::int64_t>;

  struct SuiteFailure {
    std::string input;
    std::string expected;
    std::string actual;

    auto operator<=>(SuiteFailure const&) const = default;
  };

  struct SuiteReport {
    std::string               suite_name;
    int                       n = 0;
    int                       k = 0;
    bounds_type               bounds;
    std::uint64_t             checked = 0;
    std::vector<SuiteFailure> failures;  // sorted, at most max_reported
    std::uint64_t             failure_count = 0;
    std::vector<std::string>  notes;
    double                    elapsed_ms    = 0;

    [[nodiscard]] bool passed() const noexcept {
      return failure_count == 0;
    }
  };

  inline nlohmann::json to_json(SuiteReport const& r) {
    nlohmann::json failures = nlohmann::json::array();
    for (auto const& f : r.failures) {
      failures.push_back(
          {{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
    }
    return {{"suite_name", r.suite_name},
            {"n", r.n},
            {"k", r.k},
            {"bounds", r.bounds},
            {"checked", r.checked},
            {"passed", r.passed()},
            {"failure_count", r.failure_count},
            {"failures", failures},
            {"notes", r.notes},
            {"elapsed_ms", r.elapsed_ms}};
  }

  //! Names accepted by run_suite, in the order "all" runs them.
  inline std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names = {"centrality",
                                                   "lemma-z2",
                                                   "soundness",
                                                   "unique-nf",
                                                   "confluence",
                                                   "cancellativity",
                                                   "descent",
                                                   "dfa-equivalence",
                                                   "growth-vs-oracle"};
    return names;
  }

  namespace detail {
    inline constexpr std::size_t max_reported = 1000;

    class FailureLog {
     public:
      void add(std::string input, std::string expected, std::string actual) {
        std::lock_guard lock(_mutex);
        ++_count;
        _items.push_back(
            {std::move(input), std::move(expected), std::move(actual)});
      }

      void move_into(SuiteReport& r) {
        std::sort(_items.begin(), _items.end());
        if (_items.size() > max_reported) {
          _items.resize(max_reported);
        }
        r.failures      = std::move(_items);
        r.failure_count = _count;
      }

     private:
      std::mutex                _mutex;
      std::vector<SuiteFailure> _items;
      std::uint64_t             _count = 0;
    };

    // Runs f(begin, end) over contiguous shards of [0, count).
    template <typename F>
    void parallel_for(std::uint64_t count, F&& f) {
      unsigned threads = std::max(1u, std::thread::hardware_concurrency());
      if (count < 4096 || threads == 1) {
        f(std::uint64_t(0), count);
        return;
      }
      threads = static_cast<unsigned>(
          std::min<std::uint64_t>(threads, count / 1024));
      std::vector<std::thread> pool;
      std::exception_ptr       error;
      std::mutex               error_mutex;
      for (unsigned t = 0; t < threads; ++t) {
        std::uint64_t begin = count * t / threads;
        std::uint64_t end   = count * (t + 1) / threads;
        pool.emplace_back([&, begin, end] {
          try {
            f(begin, end);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            error = std::current_exception();
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
      if (error) {
        std::rethrow_exception(error);
      }
    }

    inline std::int64_t bound(bounds_type const& b,
                              std::string const& key,
                              std::int64_t       fallback) {
      auto it = b.find(key);
      return it == b.end() ? fallback : it->second;
    }

    // Largest length whose word count fits the enumeration budget.
    inline std::int64_t budget_length(Presentation const& p) {
      std::int64_t  len   = 0;
      std::uint64_t count = static_cast<std::uint64_t>(p.n());
      while (count <= default_enumeration_budget) {
        ++len;
        count *= static_cast<std::uint64_t>(p.n());
      }
      return len;
    }

    template <typename Rng>
    word_type random_word(Presentation const& p, Rng& rng, std::size_t len) {
      std::uniform_int_distribution<int> letter(1, p.n());
      word_type                          out(len);
      for (auto& x : out) {
        x = static_cast<letter_type>(letter(rng));
      }
      return out;
    }

    template <typename Rng>
    int uniform(Rng& rng, int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    struct LhsInstance {
      RuleKind  kind;
      int       i, m, q;
      word_type v;
      word_type lhs;
    };

    // A uniformly chosen rule family with random admissible parameters.
    template <typename Rng>
    LhsInstance random_lhs(Presentation const& p,
                           Rng&                rng,
                           int                 max_q,
                           int                 max_v) {
      for (;;) {
        auto kind = all_rule_kinds[uniform(rng, 0, 6)];
        int  i    = kind == RuleKind::E ? uniform(rng, 0, p.n())
                                        : uniform(rng, 1, p.n());
        if (kind == RuleKind::E && i == 0) {
          i = p.n();
        }
        if (!in_range(p, kind, i)) {
          continue;
        }
        int       m = kind == RuleKind::R ? uniform(rng, 1, max_q + 1) : 0;
        int       q = has_gap(kind) ? uniform(rng, 0, max_q) : 0;
        word_type v;
        if (has_gap(kind)) {
          v = random_word(p, rng, uniform(rng, 0, max_v));
        }
        auto lhs = rule_lhs(p, kind, i, m, q, v);
        return {kind, i, m, q, std::move(v), std::move(lhs)};
      }
    }

    inline std::string show(word_view w) {
      return "[" + to_string(w) + "]";
    }

    // -------------------------------------------------------------------
    // Suites
    // -------------------------------------------------------------------

    inline void centrality(Presentation const& p,
                           bounds_type const&,
                           SuiteReport& r,
                           FailureLog&  log) {
      auto const& z = p.identity_word();
      for (int i = 1; i <= p.n(); ++i) {
        word_type a{static_cast<letter_type>(i)};
        auto      left  = normal_form(p, concat({z, a}));
        auto      right = normal_form(p, concat({a, z}));
        if (left != right) {
          log.add("z a_" + std::to_string(i), show(left), show(right));
        }
        ++r.checked;
      }
    }

    // z b_i ... b_{i-q(k+1)} a_{i-1-q(k+1)} = z a_{i+k} c_{i+k} ... c_{i+k-q(k+1)}
    // z c_i ... c_{i-q(k+1)} a_{i-k-q(k+1)} = z a_{i+1} b_{i+1} ... b_{i+1-q(k+1)}
    inline void lemma_z2(Presentation const& p,
                         bounds_type const&  b,
                         SuiteReport&        r,
                         FailureLog&         log) {
      int const   max_q = static_cast<int>(bound(b, "max_q", 2));
      auto const& z     = p.identity_word();
      for (int i = 1; i <= p.n(); ++i) {
        for (int q = 0; q <= max_q; ++q) {
          for (bool use_b : {true, false}) {
            auto lhs = concat({z, use_b ? b_chain(p, i, q) : c_chain(p, i, q)});
            auto rhs = z;
            rhs.push_back(p.letter(use_b ? i + p.k() : i + 1));
            append_blocks(p, rhs, !use_b, use_b ? i + p.k() : i + 1, 0, q);
            auto nl = normal_form(p, lhs);
            auto nr = normal_form(p, rhs);
            if (nl != nr) {
              log.add(std::string(use_b ? "b" : "c") + "-chain i="
                          + std::to_string(i) + " q=" + std::to_string(q),
                      show(nl),
                      show(nr));
            }
            ++r.checked;
          }
        }
      }
    }

    inline void soundness(Presentation const& p,
                          bounds_type const&  b,
                          SuiteReport&        r,
                          FailureLog&         log) {
      int const max_q   = static_cast<int>(bound(b, "max_q", 2));
      int const max_v   = static_cast<int>(bound(b, "max_v", 2));
      auto      samples = bound(b, "samples", 1000);
      std::mt19937_64 rng(static_cast<std::uint64_t>(bound(b, "seed", 0)));
      std::set<std::pair<word_type, word_type>> done;
      for (std::int64_t s = 0; s < samples; ++s) {
        // A planted left side inside a short random context.
        auto inst = random_lhs(p, rng, max_q, max_v);
        auto w    = concat({random_word(p, rng, uniform(rng, 0, 2)),
                            inst.lhs,
                            random_word(p, rng, uniform(rng, 0, 2))});
        for (auto const& red : find_redexes(p, w)) {
          auto lhs = rule_lhs(p, red, w);
          auto v   = word_view(w).subspan(
              red.match_start + (has_gap(red.kind) ? p.n() : 0),
              has_gap(red.kind) ? red.v_len : 0);
          auto rhs = rule_rhs(p, red.kind, red.i, red.m, red.q, v);
          if (!done.emplace(lhs, rhs).second) {
            continue;
          }
          ++r.checked;
          try {
            if (!oracle_equal(p, lhs, rhs)) {
              log.add(to_string(red) + " on " + show(w), show(lhs), show(rhs));
            }
          } catch (Inconclusive const& e) {
            log.add(to_string(red) + " on " + show(w), "decided", e.what());
          }
        }
      }
    }

    inline void unique_nf(Presentation const& p,
                          bounds_type const&  b,
                          SuiteReport&        r,
                          FailureLog&         log) {
      auto const max_len = bound(b, "max_len", p.n() + 2);
      for (std::int64_t len = 0; len <= max_len; ++len) {
        LengthPartition part(p, static_cast<std::size_t>(len));
        std::vector<std::uint8_t> irreducible(part.size(), 0);
        parallel_for(part.size(), [&](std::uint64_t begin, std::uint64_t end) {
          word_type w;
          for (auto code = begin; code < end; ++code) {
            part.decode(code, w);
            auto nf = normal_form(p, w);
            if (nf == w) {
              irreducible[code] = 1;
            }
            if (part.find(part.encode(nf)) != part.find(code)) {
              log.add(show(w), "normal form in the class", show(nf));
            }
          }
        });
        std::vector<std::uint8_t> per_class(part.size(), 0);
        for (std::uint64_t code = 0; code < part.size(); ++code) {
          if (irreducible[code]) {
            auto& c = per_class[part.find(code)];
            c       = static_cast<std::uint8_t>(std::min(c + 1, 2));
          }
        }
        for (std::uint64_t code = 0; code < part.size(); ++code) {
          if (part.find(code) == code && per_class[code] != 1) {
            log.add("class of " + show(part.decode(code)),
                    "1 irreducible word",
                    std::to_string(per_class[code]) + " irreducible words");
          }
        }
        r.checked += part.size();
      }
    }

    // Checks that all one-step reducts of w share one normal form.
    class LocalConfluence {
     public:
      explicit LocalConfluence(Presentation const& p) : _p(p) {}

      // Returns false if w is not locally confluent.
      bool check(word_view w, std::vector<RuleInstance> const& redexes) {
        std::optional<word_type> first;
        for (auto const& red : redexes) {
          auto nf = cached_nf(apply_rule(_p, w, red));
          if (!first) {
            first = nf;
          } else if (*first != nf) {
            return false;
          }
        }
        return true;
      }

     private:
      word_type cached_nf(word_type const& w) {
        if (auto it = _cache.find(w); it != _cache.end()) {
          return it->second;
        }
        auto nf = normal_form(_p, w);
        if (_cache.size() > 2'000'000) {
          _cache.clear();
        }
        _cache.emplace(w, nf);
        return nf;
      }

      Presentation const&                                _p;
      std::unordered_map<word_type, word_type, WordHash> _cache;
    };

  }  // namespace detail

  //! Ordered pairs of rule families whose overlaps need checking, as
  //! (first, second, after_gap): after_gap pairs overlap the end of the first
  //! left side with the part of the second that follows its gap v.
  inline std::vector<std::tuple<RuleKind, RuleKind, bool>> const&
  overlap_inventory() {
    using K = RuleKind;
    static std::vector<std::tuple<RuleKind, RuleKind, bool>> const pairs = {
        // suffix / prefix overlaps
        {K::T, K::H, false}, {K::H, K::T, false}, {K::R, K::H, false},
        {K::H, K::R, false}, {K::H, K::H, false}, {K::D, K::T, false},
        {K::E, K::H, false}, {K::D, K::R, false}, {K::E, K::R, false},
        {K::S, K::R, false}, {K::U, K::R, false}, {K::D, K::H, false},
        {K::E, K::T, false}, {K::S, K::T, false}, {K::U, K::H, false},
        {K::S, K::H, false}, {K::U, K::T, false},
        // overlaps into the part after the gap
        {K::T, K::D, true},  {K::H, K::E, true},  {K::T, K::E, true},
        {K::H, K::D, true},  {K::T, K::S, true},  {K::H, K::U, true},
        {K::T, K::U, true},  {K::H, K::S, true},  {K::R, K::D, true},
        {K::R, K::E, true},  {K::R, K::S, true},  {K::R, K::U, true},
        {K::D, K::D, true},  {K::E, K::E, true},  {K::D, K::E, true},
        {K::E, K::D, true},  {K::D, K::S, true},  {K::E, K::U, true},
        {K::D, K::U, true},  {K::E, K::S, true},  {K::S, K::D, true},
        {K::U, K::E, true},  {K::S, K::E, true},  {K::U, K::D, true},
        {K::S, K::S, true},  {K::U, K::U, true},  {K::S, K::U, true},
        {K::U, K::S, true}};
    return pairs;
  }

  //! Every left side with 1 < m <= max_q + 1 for R, q <= max_q and gap words
  //! of length at most max_v (only the empty gap when max_v < 0).
  inline std::vector<detail::LhsInstance> enumerate_lhs(Presentation const& p,
                                                        int max_q,
                                                        int max_v) {
    std::vector<word_type> gaps{{}};
    for (int len = 1; len <= max_v; ++len) {
      std::vector<word_type> more;
      for (auto const& g : gaps) {
        if (static_cast<int>(g.size()) == len - 1) {
          for (int x = 1; x <= p.n(); ++x) {
            auto h = g;
            h.push_back(static_cast<letter_type>(x));
            more.push_back(std::move(h));
          }
        }
      }
      gaps.insert(gaps.end(), more.begin(), more.end());
    }
    std::vector<detail::LhsInstance> out;
    for (auto kind : all_rule_kinds) {
      for (int i = 1; i <= p.n(); ++i) {
        if (!in_range(p, kind, i)) {
          continue;
        }
        if (kind == RuleKind::R) {
          for (int m = 1; m <= max_q + 1; ++m) {
            out.push_back({kind, i, m, 0, {}, rule_lhs(p, kind, i, m, 0)});
          }
        } else if (!has_gap(kind)) {
          out.push_back({kind, i, 0, 0, {}, rule_lhs(p, kind, i, 0, 0)});
        } else {
          for (int q = 0; q <= max_q; ++q) {
            for (auto const& v : gaps) {
              out.push_back({kind, i, 0, q, v, rule_lhs(p, kind, i, 0, q, v)});
            }
          }
        }
      }
    }
    return out;
  }

  //! Whether a tail of family y can never overlap the end of a left side of
  //! the gap family x that shares its leading z, checked on the tail words
  //! alone for q, q' <= max_q. The gap v of x is arbitrary, so the tail of y
  //! may also start inside it, in which case the tail of x is a factor of
  //! the tail of y.
  inline bool gap_overlap_vacuous(Presentation const& p,
                                  RuleKind            x,
                                  RuleKind            y,
                                  int                 max_q) {
    auto tails = [&](RuleKind kind) {
      std::vector<word_type> out;
      for (int i = 1; i <= p.n(); ++i) {
        if (in_range(p, kind, i)) {
          for (int q = 0; q <= max_q; ++q) {
            out.push_back(tail_pattern(p, kind, i, q));
          }
        }
      }
      return out;
    };
    for (auto const& tx : tails(x)) {
      for (auto const& ty : tails(y)) {
        for (std::size_t o = 1; o <= tx.size() && o < ty.size(); ++o) {
          if (std::equal(tx.end() - o, tx.end(), ty.begin())) {
            return false;
          }
        }
        if (ty.size() > tx.size()) {
          auto const& last = ty.end() - 1;
          if (std::search(ty.begin(), last, tx.begin(), tx.end()) != last) {
            return false;
          }
        }
      }
    }
    return true;
  }

  struct OverlapWord {
    RuleKind  first;
    RuleKind  second;
    bool      after_gap;
    word_type word;
  };

  //! Words in which a left side of one family overlaps a left side of
  //! another, and both are detected by find_redexes.
  //!
  //! Suffix/prefix overlaps use x y[o:] where the last o letters of x are
  //! the first o letters of y (gaps of y empty when y has one). Overlaps
  //! after the gap use z v x t[o:] where t is the tail pattern of y and x
  //! has an empty gap, and x t[o:] where x and y share their leading z.
  inline std::vector<OverlapWord> synthesize_overlaps(Presentation const& p,
                                                      int max_q,
                                                      int max_v) {
    auto const all   = enumerate_lhs(p, max_q, max_v);
    auto const plain = enumerate_lhs(p, max_q, 0);
    std::vector<OverlapWord> out;

    auto detected = [&](word_view w,
                        RuleKind kx,
                        std::size_t end_x,
                        RuleKind ky) {
      bool fx = false, fy = false;
      for (auto const& r : find_redexes(p, w)) {
        fx |= r.kind == kx && r.match_end() == end_x;
        fy |= r.kind == ky && r.match_end() == w.size();
      }
      return fx && fy;
    };

    // Suffix / prefix.
    std::map<word_type, std::vector<std::size_t>> by_prefix;
    for (std::size_t y = 0; y < plain.size(); ++y) {
      auto const& lhs = plain[y].lhs;
      for (std::size_t o = 1; o < lhs.size(); ++o) {
        by_prefix[word_type(lhs.begin(), lhs.begin() + o)].push_back(y);
      }
    }
    for (auto const& x : all) {
      for (std::size_t o = 1; o < x.lhs.size(); ++o) {
        auto it = by_prefix.find(word_type(x.lhs.end() - o, x.lhs.end()));
        if (it == by_prefix.end()) {
          continue;
        }
        for (auto y : it->second) {
          auto const& ylhs = plain[y].lhs;
          if (o >= ylhs.size()) {
            continue;
          }
          auto w = concat({x.lhs, word_view(ylhs).subspan(o)});
          if (detected(w, x.kind, x.lhs.size(), plain[y].kind)) {
            out.push_back({x.kind, plain[y].kind, false, std::move(w)});
          }
        }
      }
    }

    // Into the part after the gap.
    std::vector<std::pair<RuleKind, word_type>> tails;
    for (auto kind : {RuleKind::D, RuleKind::E, RuleKind::S, RuleKind::U}) {
      for (int i = 1; i <= p.n(); ++i) {
        if (in_range(p, kind, i)) {
          for (int q = 0; q <= max_q; ++q) {
            tails.emplace_back(kind, tail_pattern(p, kind, i, q));
          }
        }
      }
    }
    auto gaps = enumerate_lhs(p, 0, max_v);  // reuse the gap enumeration
    std::set<word_type> gap_words;
    for (auto const& g : gaps) {
      gap_words.insert(g.v);
    }
    // Shared z: the tail of y starts inside the tail of a D/E/S/U x, both
    // left sides beginning with the same z.
    for (auto const& x : all) {
      if (!has_gap(x.kind)) {
        continue;
      }
      for (auto const& [ky, t] : tails) {
        for (std::size_t o = 1; o < std::min(x.lhs.size(), t.size()); ++o) {
          if (!std::equal(x.lhs.end() - o, x.lhs.end(), t.begin())) {
            continue;
          }
          auto w = concat({x.lhs, word_view(t).subspan(o)});
          if (detected(w, x.kind, x.lhs.size(), ky)) {
            out.push_back({x.kind, ky, true, std::move(w)});
          }
        }
      }
    }
    for (auto const& x : plain) {
      for (auto const& [ky, t] : tails) {
        for (std::size_t o = 1; o < std::min(x.lhs.size(), t.size()); ++o) {
          if (!std::equal(x.lhs.end() - o, x.lhs.end(), t.begin())) {
            continue;
          }
          for (auto const& v : gap_words) {
            auto w = concat({p.identity_word(), v, x.lhs, word_view(t).subspan(o)});
            auto end_x = p.identity_word().size() + v.size() + x.lhs.size();
            if (detected(w, x.kind, end_x, ky)) {
              out.push_back({x.kind, ky, true, std::move(w)});
            }
          }
        }
      }
    }
    return out;
  }

  namespace detail {
    inline void confluence(Presentation const& p,
                           bounds_type const&  b,
                           SuiteReport&        r,
                           FailureLog&         log) {
      auto const max_len = bound(b, "max_len", p.n() + 2);
      int const  max_q   = static_cast<int>(bound(b, "max_q", 2));
      int const  max_v   = static_cast<int>(bound(b, "max_v", 2));
      std::mutex checked_mutex;
      // Exhaustive part.
      for (std::int64_t len = 0; len <= max_len; ++len) {
        std::uint64_t total = 1;
        for (std::int64_t t = 0; t < len; ++t) {
          if (total > default_enumeration_budget / static_cast<std::uint64_t>(p.n())) {
            throw BudgetExceeded("confluence: n^" + std::to_string(len)
                                 + " words exceed the enumeration budget");
          }
          total *= static_cast<std::uint64_t>(p.n());
        }
        parallel_for(total, [&](std::uint64_t begin, std::uint64_t end) {
          LocalConfluence lc(p);
          word_type       w(static_cast<std::size_t>(len));
          std::uint64_t   local = 0;
          for (auto code = begin; code < end; ++code) {
            auto c = code;
            for (std::size_t t = w.size(); t-- > 0;) {
              w[t] = static_cast<letter_type>(c % p.n() + 1);
              c /= p.n();
            }
            auto redexes = find_redexes(p, w);
            if (redexes.size() < 2) {
              continue;
            }
            ++local;
            if (!lc.check(w, redexes)) {
              log.add(show(w), "joinable", "reducts with distinct normal forms");
            }
          }
          std::lock_guard lock(checked_mutex);
          r.checked += local;
        });
      }
      // Synthesised overlaps.
      auto words = synthesize_overlaps(p, max_q, max_v);
      std::set<std::tuple<RuleKind, RuleKind, bool>> covered;
      for (auto const& ow : words) {
        covered.emplace(ow.first, ow.second, ow.after_gap);
      }
      parallel_for(words.size(), [&](std::uint64_t begin, std::uint64_t end) {
        LocalConfluence lc(p);
        for (auto t = begin; t < end; ++t) {
          auto const& w = words[t].word;
          if (!lc.check(w, find_redexes(p, w))) {
            log.add(std::string("overlap ") + to_char(words[t].first)
                        + to_char(words[t].second) + " " + show(w),
                    "joinable",
                    "reducts with distinct normal forms");
          }
        }
      });
      r.checked += words.size();
      for (auto const& pair : overlap_inventory()) {
        if (!covered.contains(pair)) {
          auto [x, y, gap] = pair;
          int const period_q = 2 * p.n();
          if (gap && has_gap(x) && gap_overlap_vacuous(p, x, y, period_q)) {
            r.notes.push_back(std::string("overlap ") + to_char(x) + to_char(y)
                              + " after gap cannot occur (tails checked for q <= "
                              + std::to_string(period_q) + ")");
            continue;
          }
          log.add(std::string("overlap ") + to_char(x) + to_char(y)
                      + (gap ? " after gap" : " suffix/prefix"),
                  "covered",
                  "no instance with q <= " + std::to_string(max_q)
                      + ", |v| <= " + std::to_string(max_v));
        }
      }
    }

    // Left and right cancellation by z u inside zS_n, in both directions.
    inline void cancellativity(Presentation const& p,
                               bounds_type const&  b,
                               SuiteReport&        r,
                               FailureLog&         log) {
      auto            samples = bound(b, "samples", 1000);
      std::mt19937_64 rng(static_cast<std::uint64_t>(bound(b, "seed", 0)));
      auto const&     z = p.identity_word();
      auto const      n = static_cast<std::size_t>(p.n());

      // A word congruent to w reached by a random walk of relation moves
      // that keeps a prefix (left) or suffix (right) of length keep
      // unchanged, or w itself.
      auto walk = [&](word_type w, std::size_t keep, bool left) {
        word_type best = w;
        for (int step = 0; step < 40; ++step) {
          std::vector<word_type> moves;
          detail::for_each_relation_move(
              p, w, [&](word_type const& u) { moves.push_back(u); });
          if (moves.empty()) {
            break;
          }
          w         = moves[uniform(rng, 0, static_cast<int>(moves.size()) - 1)];
          bool same = left ? std::equal(w.begin(), w.begin() + keep, best.begin())
                           : std::equal(w.end() - keep, w.end(), best.end() - keep);
          if (same) {
            best = w;
          }
        }
        return best;
      };

      for (std::int64_t s = 0; s < samples; ++s) {
        bool const left = s % 2 == 0;
        auto       u    = random_word(p, rng, uniform(rng, 0, 3));
        auto w1 = random_word(p, rng, uniform(rng, 1, static_cast<int>(n) + 2));
        // Implication: z u w1 = z u w2  =>  z w1 = z w2 (and mirrored).
        auto zu   = left ? concat({z, u}) : concat({u, z});
        auto full = left ? concat({zu, w1}) : concat({w1, zu});
        auto moved = walk(full, zu.size(), left);
        word_type w2 = left ? word_type(moved.begin() + zu.size(), moved.end())
                            : word_type(moved.begin(), moved.end() - zu.size());
        auto c1 = normal_form(p, left ? concat({z, w1}) : concat({w1, z}));
        auto c2 = normal_form(p, left ? concat({z, w2}) : concat({w2, z}));
        if (c1 != c2) {
          log.add(std::string(left ? "left" : "right") + " u=" + show(u)
                      + " w1=" + show(w1) + " w2=" + show(w2),
                  show(c1),
                  show(c2));
        }
        // Contrapositive: z w1 != z w2  =>  z u w1 != z u w2.
        auto w3 = random_word(p, rng, w1.size());
        auto d1 = normal_form(p, left ? concat({z, w1}) : concat({w1, z}));
        auto d3 = normal_form(p, left ? concat({z, w3}) : concat({w3, z}));
        if (d1 != d3) {
          auto e1 = normal_form(p, left ? concat({zu, w1}) : concat({w1, zu}));
          auto e3 = normal_form(p, left ? concat({zu, w3}) : concat({w3, zu}));
          if (e1 == e3) {
            log.add(std::string(left ? "left" : "right") + " u=" + show(u)
                        + " w1=" + show(w1) + " w3=" + show(w3),
                    "distinct",
                    show(e1));
          }
        }
        ++r.checked;
      }
    }

    // Random words: each step preserves length and descends, the result is
    // idempotent and agrees with a randomised strategy.
    inline void descent(Presentation const& p,
                        bounds_type const&  b,
                        SuiteReport&        r,
                        FailureLog&         log) {
      auto            samples = bound(b, "samples", 1000);
      auto            max_len = bound(b, "max_len", 3 * p.n());
      std::mt19937_64 rng(static_cast<std::uint64_t>(bound(b, "seed", 0)));
      std::mt19937_64 strategy_rng(rng());
      for (std::int64_t s = 0; s < samples; ++s) {
        auto len = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(max_len)));
        auto w   = random_word(p, rng, len);
        // Every other sample carries copies of z so that the gap families
        // occur often.
        if (s % 2 == 1 && len >= static_cast<std::size_t>(p.n())) {
          int copies = uniform(rng, 1, 2);
          for (int c = 0; c < copies; ++c) {
            auto at = static_cast<std::size_t>(
                uniform(rng, 0, static_cast<int>(len) - p.n()));
            std::copy(p.identity_word().begin(),
                      p.identity_word().end(),
                      w.begin() + at);
          }
        }
        try {
          auto trace = reduction_trace(p, w);
          auto nf    = trace.empty() ? w : trace.back().result;
          if (normal_form(p, nf) != nf) {
            log.add(show(w), "idempotent", show(normal_form(p, nf)));
          }
          auto other = normal_form_random(p, w, strategy_rng);
          if (other != nf) {
            log.add(show(w), show(nf), "randomised strategy gives " + show(other));
          }
        } catch (NonDecreasingStep const& e) {
          log.add(show(w), "descending steps", e.what());
        }
        ++r.checked;
      }
    }

    inline void dfa_equivalence(Presentation const& p,
                                bounds_type const&,
                                SuiteReport& r,
                                FailureLog&  log) {
      auto res = dfa_equivalent(irreducible_dfa(p), theorem_language_dfa(p));
      if (!res.equivalent) {
        log.add("irreducible vs theorem language",
                "equivalent",
                "witness " + show(*res.witness));
      }
      ++r.checked;
    }

    inline void growth_vs_oracle(Presentation const& p,
                                 bounds_type const&  b,
                                 SuiteReport&        r,
                                 FailureLog&         log) {
      auto const max_len = bound(b, "max_len", p.n() + 2);
      auto const series  = growth_series(irreducible_dfa(p),
                                        static_cast<std::size_t>(max_len));
      for (std::int64_t len = 0; len <= max_len; ++len) {
        auto expected = count_classes(p, static_cast<std::size_t>(len));
        if (series.coefficients[len] != expected) {
          log.add("length " + std::to_string(len),
                  std::to_string(expected),
                  series.coefficients[len].str());
        }
        ++r.checked;
      }
    }
  }  // namespace detail

  //! Runs one named suite. Recognised bounds: max_len, max_q, max_v,
  //! samples, seed; those a suite does not use are dropped from its report.
  //! Unset bounds take their defaults (max_len n + 2, capped
  //! by the enumeration budget for exhaustive suites, 3n for descent; max_q
  //! 2; max_v 2; samples 1000; seed 0).
  inline SuiteReport run_suite(Presentation const& p,
                               std::string const&  suite,
                               bounds_type         bounds = {}) {
    using fn_type = void (*)(Presentation const&,
                             bounds_type const&,
                             SuiteReport&,
                             detail::FailureLog&);
    static std::map<std::string, fn_type> const suites = {
        {"centrality", detail::centrality},
        {"lemma-z2", detail::lemma_z2},
        {"soundness", detail::soundness},
        {"unique-nf", detail::unique_nf},
        {"confluence", detail::confluence},
        {"cancellativity", detail::cancellativity},
        {"descent", detail::descent},
        {"dfa-equivalence", detail::dfa_equivalence},
        {"growth-vs-oracle", detail::growth_vs_oracle}};
    auto it = suites.find(suite);
    if (it == suites.end()) {
      throw UnknownSuite("unknown suite \"" + suite + "\"");
    }
    static std::map<std::string, std::set<std::string>> const used = {
        {"centrality", {}},
        {"lemma-z2", {"max_q"}},
        {"soundness", {"max_q", "max_v", "samples", "seed"}},
        {"unique-nf", {"max_len"}},
        {"confluence", {"max_len", "max_q", "max_v"}},
        {"cancellativity", {"samples", "seed"}},
        {"descent", {"max_len", "samples", "seed"}},
        {"dfa-equivalence", {}},
        {"growth-vs-oracle", {"max_len"}}};
    std::erase_if(bounds, [&](auto const& kv) {
      return !used.at(suite).contains(kv.first);
    });
    auto set_default = [&](std::string const& key, std::int64_t value) {
      bounds.emplace(key, value);
    };
    if (suite == "unique-nf" || suite == "confluence"
        || suite == "growth-vs-oracle") {
      set_default("max_len",
                  std::min<std::int64_t>(p.n() + 2, detail::budget_length(p)));
    }
    if (suite == "descent") {
      set_default("max_len", 3 * p.n());
    }
    if (suite == "lemma-z2" || suite == "soundness" || suite == "confluence") {
      set_default("max_q", 2);
    }
    if (suite == "soundness" || suite == "confluence") {
      set_default("max_v", 2);
    }
    if (suite == "soundness" || suite == "cancellativity" || suite == "descent") {
      set_default("samples", 1000);
      set_default("seed", 0);
    }
    if (auto len = bounds.find("max_len");
        len != bounds.end() && suite != "descent"
        && len->second > detail::budget_length(p)) {
      throw BudgetExceeded(suite + ": max_len " + std::to_string(len->second)
                           + " exceeds the enumeration budget of "
                           + std::to_string(default_enumeration_budget)
                           + " words per length");
    }
    SuiteReport report;
    report.suite_name = suite;
    report.n          = p.n();
    report.k          = p.k();
    report.bounds     = bounds;
    detail::FailureLog log;
    auto               start = std::chrono::steady_clock::now();
    it->second(p, bounds, report, log);
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    log.move_into(report);
    return report;
  }

}  // namespace dihedral

#endif  // DIHEDRAL_VERIFY_HPP_
