#ifndef DIHEDRAL_ORACLE_HPP_
#define DIHEDRAL_ORACLE_HPP_

// Ground truth for the word problem at desk scale.
//
// Everything here uses only the 2n defining relations as rewrite moves (in
// both directions), never the rule families of rewrite.hpp, so it can be used
// to check them.

#include <cstddef>
#include <cstdint>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_set>
#include <vector>

#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace dihedral {

  inline constexpr std::size_t default_class_cap = 1'000'000;
  inline constexpr std::uint64_t default_enumeration_budget = 100'000'000;

  struct CongruenceClass {
    word_type              representative;
    std::vector<word_type> members;  // sorted length-lex
    bool                   truncated = false;
  };

  namespace detail {
    // Calls f(u) for every word u obtained from w by replacing one factor that
    // is a relation word with a different relation word.
    template <typename F>
    void for_each_relation_move(Presentation const& p, word_view w, F&& f) {
      std::size_t const n = static_cast<std::size_t>(p.n());
      if (w.size() < n) {
        return;
      }
      word_type u(w.begin(), w.end());
      for (std::size_t s = 0; s + n <= w.size(); ++s) {
        if (!p.is_relation_word(w.subspan(s, n))) {
          continue;
        }
        for (auto const& r : p.relation_words()) {
          if (std::equal(r.begin(), r.end(), w.begin() + s)) {
            continue;
          }
          std::copy(r.begin(), r.end(), u.begin() + s);
          f(u);
        }
        std::copy(w.begin() + s, w.begin() + s + n, u.begin() + s);
      }
    }
  }  // namespace detail

  //! Breadth-first closure of w under relation moves. The result is exact
  //! unless more than cap members were found, in which case truncated is set.
  inline CongruenceClass congruence_class(Presentation const& p,
                                          word_view           w,
                                          std::size_t cap = default_class_cap) {
    CongruenceClass out;
    out.representative.assign(w.begin(), w.end());
    std::unordered_set<word_type, WordHash> seen{out.representative};
    std::deque<word_type>                   queue{out.representative};
    while (!queue.empty() && !out.truncated) {
      word_type x = std::move(queue.front());
      queue.pop_front();
      detail::for_each_relation_move(p, x, [&](word_type const& u) {
        if (out.truncated || seen.contains(u)) {
          return;
        }
        if (seen.size() >= cap) {
          out.truncated = true;
          return;
        }
        seen.insert(u);
        queue.push_back(u);
      });
    }
    out.members.assign(seen.begin(), seen.end());
    sort_length_lex(out.members);
    return out;
  }

  //! Whether w1 and w2 represent the same element. Searches from both ends
  //! at once; throws Inconclusive if more than cap words are visited before
  //! the question is settled.
  inline bool oracle_equal(Presentation const& p,
                           word_view           w1,
                           word_view           w2,
                           std::size_t         cap = default_class_cap) {
    if (w1.size() != w2.size()) {
      return false;
    }
    if (std::equal(w1.begin(), w1.end(), w2.begin())) {
      return true;
    }
    using set_type = std::unordered_set<word_type, WordHash>;
    struct Side {
      set_type               seen;
      std::vector<word_type> frontier;
    };
    Side a{{word_type(w1.begin(), w1.end())}, {word_type(w1.begin(), w1.end())}};
    Side b{{word_type(w2.begin(), w2.end())}, {word_type(w2.begin(), w2.end())}};
    while (!a.frontier.empty() && !b.frontier.empty()) {
      Side& grow  = a.frontier.size() <= b.frontier.size() ? a : b;
      Side& other = &grow == &a ? b : a;
      std::vector<word_type> next;
      bool                   met = false;
      for (auto const& x : grow.frontier) {
        detail::for_each_relation_move(p, x, [&](word_type const& u) {
          if (met || grow.seen.contains(u)) {
            return;
          }
          if (other.seen.contains(u)) {
            met = true;
            return;
          }
          grow.seen.insert(u);
          next.push_back(u);
        });
        if (met) {
          return true;
        }
        if (a.seen.size() + b.seen.size() > cap) {
          throw Inconclusive("oracle_equal: more than " + std::to_string(cap)
                             + " words visited comparing " + to_string(w1)
                             + " and " + to_string(w2));
        }
      }
      grow.frontier = std::move(next);
    }
    // One side's class was exhausted without meeting the other.
    return false;
  }

  //! All words of one length over n letters, partitioned into congruence
  //! classes by union-find. Word x of length l is encoded as the base-n
  //! integer with most significant digit x[0] - 1.
  class LengthPartition {
   public:
    LengthPartition(Presentation const& p,
                    std::size_t         length,
                    std::uint64_t       budget = default_enumeration_budget)
        : _n(static_cast<std::uint64_t>(p.n())), _length(length) {
      std::uint64_t total = 1;
      for (std::size_t t = 0; t < length; ++t) {
        if (total > budget / _n) {
          throw BudgetExceeded("enumerating all words of length "
                               + std::to_string(length) + " over "
                               + std::to_string(_n)
                               + " letters exceeds the budget of "
                               + std::to_string(budget) + " words");
        }
        total *= _n;
      }
      _parent.resize(total);
      std::iota(_parent.begin(), _parent.end(), std::uint32_t(0));

      std::size_t const n = static_cast<std::size_t>(p.n());
      if (length < n) {
        _classes = total;
        return;
      }
      // Every relation word joins to z, so one edge per relation factor
      // suffices to connect each class.
      auto const&   z = p.identity_word();
      std::uint64_t z_code = 0;
      for (auto x : z) {
        z_code = z_code * _n + (x - 1);
      }
      std::vector<std::uint64_t> place(length + 1, 1);
      for (std::size_t t = 1; t <= length; ++t) {
        place[t] = place[t - 1] * _n;
      }
      word_type w(length);
      for (std::uint64_t code = 0; code < total; ++code) {
        decode(code, w);
        for (std::size_t s = 0; s + n <= length; ++s) {
          if (!p.is_relation_word(word_view(w).subspan(s, n))) {
            continue;
          }
          // Factor [s, s + n) occupies digits at places length - s - n ...
          std::uint64_t scale  = place[length - s - n];
          std::uint64_t factor = (code / scale) % place[n];
          std::uint64_t other  = code - factor * scale + z_code * scale;
          unite(code, other);
        }
      }
      // Parents always point to smaller codes, so one ascending pass
      // leaves every code pointing directly at its root.
      std::uint64_t roots = 0;
      for (std::uint64_t code = 0; code < total; ++code) {
        _parent[code] = _parent[_parent[code]];
        roots += _parent[code] == code;
      }
      _classes = roots;
    }

    [[nodiscard]] std::uint64_t size() const noexcept {
      return _parent.size();
    }

    [[nodiscard]] std::uint64_t class_count() const noexcept {
      return _classes;
    }

    [[nodiscard]] std::size_t length() const noexcept {
      return _length;
    }

    //! The least code congruent to x. Safe to call concurrently.
    [[nodiscard]] std::uint64_t find(std::uint64_t x) const {
      return _parent[x];
    }

    [[nodiscard]] std::uint64_t encode(word_view w) const {
      std::uint64_t code = 0;
      for (auto x : w) {
        code = code * _n + (x - 1);
      }
      return code;
    }

    void decode(std::uint64_t code, word_type& w) const {
      w.resize(_length);
      for (std::size_t t = _length; t-- > 0;) {
        w[t] = static_cast<letter_type>(code % _n + 1);
        code /= _n;
      }
    }

    [[nodiscard]] word_type decode(std::uint64_t code) const {
      word_type w;
      decode(code, w);
      return w;
    }

   private:
    std::uint64_t root(std::uint64_t x) {
      while (_parent[x] != x) {
        _parent[x] = _parent[_parent[x]];
        x          = _parent[x];
      }
      return x;
    }

    void unite(std::uint64_t x, std::uint64_t y) {
      x = root(x);
      y = root(y);
      if (x != y) {
        // Smaller code becomes the root: roots are the length-lex least
        // member seen so far, which keeps runs deterministic.
        if (y < x) {
          std::swap(x, y);
        }
        _parent[y] = static_cast<std::uint32_t>(x);
      }
    }

    std::uint64_t                      _n;
    std::size_t                        _length;
    std::vector<std::uint32_t> _parent;
    std::uint64_t                      _classes = 0;
  };

  //! Number of elements of S_n of the given length.
  inline std::uint64_t count_classes(
      Presentation const& p,
      std::size_t         length,
      std::uint64_t       budget = default_enumeration_budget) {
    return LengthPartition(p, length, budget).class_count();
  }

}  // namespace dihedral

#endif  // DIHEDRAL_ORACLE_HPP_
