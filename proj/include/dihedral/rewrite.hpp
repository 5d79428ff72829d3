#ifndef DIHEDRAL_REWRITE_HPP_
#define DIHEDRAL_REWRITE_HPP_

// The length-preserving rewriting system whose irreducible words are the
// normal forms of S_n(H).
//
// Seven rule families, with z = a_1 ... a_n and v an arbitrary word:
//
//   T  a_i a_{i+1} ... a_{i-1}                    -> z              2 <= i <= n
//   R  a_j a_1^m a_2 ... a_n                       -> z a_j a_1^{m-1} 2 <= j <= n
//   H  a_i a_{i+k} ... a_{i-k}                     -> z              1 <= i <= n
//   D  z v b_i b_{i-(k+1)} ... b_{i-q(k+1)} a_{i-1-q(k+1)}
//        -> z v a_{i+k} c_{i+k} ... c_{i+k-q(k+1)}          n-k+1 <= i <= n-1
//   E  z v c_i c_{i-(k+1)} ... c_{i-q(k+1)} a_{i-k-q(k+1)}
//        -> z v a_{i+1} b_{i+1} ... b_{i+1-q(k+1)}          0 <= i <= n-k
//   S  z v a_i b_i ... b_{i-q(k+1)} a_{i-1-q(k+1)}
//        -> a_1^2 (a_2 ... a_n)^2 v c_{i+k-(k+1)} ... c_{i+k-q(k+1)}
//   U  z v a_i c_i ... c_{i-q(k+1)} a_{i-k-q(k+1)}
//        -> a_1^2 (a_2 ... a_n)^2 v b_{i+1-(k+1)} ... b_{i+1-q(k+1)}
//
// Every rule preserves length and strictly decreases the length-lex order.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace dihedral {

  enum class RuleKind : std::uint8_t { T, R, H, D, E, S, U };

  inline constexpr std::array<RuleKind, 7> all_rule_kinds = {RuleKind::T,
                                                             RuleKind::R,
                                                             RuleKind::H,
                                                             RuleKind::D,
                                                             RuleKind::E,
                                                             RuleKind::S,
                                                             RuleKind::U};

  inline char to_char(RuleKind kind) noexcept {
    return "TRHDESU"[static_cast<int>(kind)];
  }

  //! True for the four families whose left side is z v (tail pattern).
  inline constexpr bool has_gap(RuleKind kind) noexcept {
    return kind >= RuleKind::D;
  }

  //! One applicable rule occurrence inside a host word.
  //!
  //! For R, i holds j. For E, the integer parameter 0 is stored as n.
  //! For D/E/S/U, match_start is the start of the leading z and v is the
  //! factor of length v_len that follows it.
  struct RuleInstance {
    RuleKind    kind        = RuleKind::T;
    int         i           = 1;
    int         m           = 0;
    int         q           = 0;
    std::size_t match_start = 0;
    std::size_t match_len   = 0;
    std::size_t v_len       = 0;

    bool operator==(RuleInstance const&) const = default;

    [[nodiscard]] std::size_t match_end() const noexcept {
      return match_start + match_len;
    }

    //! Deterministic strategy key: kind, match_start, q, v_len, i.
    [[nodiscard]] auto priority() const noexcept {
      return std::make_tuple(kind, match_start, q, v_len, i, m);
    }
  };

  inline std::string to_string(RuleInstance const& r) {
    std::string out(1, to_char(r.kind));
    out += (r.kind == RuleKind::R ? " j=" : " i=") + std::to_string(r.i);
    if (r.kind == RuleKind::R) {
      out += " m=" + std::to_string(r.m);
    }
    if (has_gap(r.kind)) {
      out += " q=" + std::to_string(r.q) + " |v|=" + std::to_string(r.v_len);
    }
    out += " at " + std::to_string(r.match_start) + "+"
           + std::to_string(r.match_len);
    return out;
  }

  //! Whether i is an admissible first parameter for the given family.
  inline bool in_range(Presentation const& p, RuleKind kind, int i) noexcept {
    int const n = p.n();
    int const k = p.k();
    switch (kind) {
      case RuleKind::T:
      case RuleKind::R:
        return 2 <= i && i <= n;
      case RuleKind::D:
        return n - k + 1 <= i && i <= n - 1;
      case RuleKind::E:
        // Integer range [0, n - k], with 0 stored as the residue n.
        return i == n || (1 <= i && i <= n - k);
      case RuleKind::H:
      case RuleKind::S:
      case RuleKind::U:
        return 1 <= i && i <= n;
    }
    return false;
  }

  namespace detail {
    // Appends x_p x_{p-(k+1)} ... x_{p-last(k+1)}, where x is the block b
    // (use_b) or c, with t running over [first, last].
    inline void append_blocks(Presentation const& pr,
                              word_type&          out,
                              bool                use_b,
                              long long           p,
                              int                 first,
                              int                 last) {
      for (int t = first; t <= last; ++t) {
        auto block = use_b ? pr.block_b(pr.residue(p - t * (pr.k() + 1LL)))
                           : pr.block_c(pr.residue(p - t * (pr.k() + 1LL)));
        out.insert(out.end(), block.begin(), block.end());
      }
    }

    inline word_type double_identity(Presentation const& pr) {
      // a_1^2 (a_2 ... a_n)^2
      word_type out{1, 1};
      auto      tail = pr.identity_tail();
      out.insert(out.end(), tail.begin(), tail.end());
      out.insert(out.end(), tail.begin(), tail.end());
      return out;
    }
  }  // namespace detail

  //! b_i b_{i-(k+1)} ... b_{i-q(k+1)} a_{i-1-q(k+1)}
  inline word_type b_chain(Presentation const& p, int i, int q) {
    word_type out;
    detail::append_blocks(p, out, true, i, 0, q);
    out.push_back(p.letter(i - 1 - q * (p.k() + 1LL)));
    return out;
  }

  //! c_i c_{i-(k+1)} ... c_{i-q(k+1)} a_{i-k-q(k+1)}
  inline word_type c_chain(Presentation const& p, int i, int q) {
    word_type out;
    detail::append_blocks(p, out, false, i, 0, q);
    out.push_back(p.letter(i - p.k() - q * (p.k() + 1LL)));
    return out;
  }

  //! The part of a D/E/S/U left side that follows z v.
  inline word_type tail_pattern(Presentation const& p,
                                RuleKind            kind,
                                int                 i,
                                int                 q) {
    switch (kind) {
      case RuleKind::D:
        return b_chain(p, i, q);
      case RuleKind::E:
        return c_chain(p, i, q);
      case RuleKind::S: {
        word_type out{p.letter(i)};
        auto      rest = b_chain(p, i, q);
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
      }
      case RuleKind::U: {
        word_type out{p.letter(i)};
        auto      rest = c_chain(p, i, q);
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
      }
      default:
        throw RuleMismatch("tail_pattern: family has no tail");
    }
  }

  //! Left-hand side of the instantiated rule (v is ignored for T/R/H).
  inline word_type rule_lhs(Presentation const& p,
                            RuleKind            kind,
                            int                 i,
                            int                 m,
                            int                 q,
                            word_view           v = {}) {
    switch (kind) {
      case RuleKind::T:
        return p.rotation(Residue{i});
      case RuleKind::H:
        return p.skip_word(Residue{i});
      case RuleKind::R: {
        word_type out{static_cast<letter_type>(i)};
        out.insert(out.end(), m, 1);
        auto tail = p.identity_tail();
        out.insert(out.end(), tail.begin(), tail.end());
        return out;
      }
      default: {
        auto tail = tail_pattern(p, kind, i, q);
        return concat({p.identity_word(), v, tail});
      }
    }
  }

  //! Right-hand side of the instantiated rule.
  inline word_type rule_rhs(Presentation const& p,
                            RuleKind            kind,
                            int                 i,
                            int                 m,
                            int                 q,
                            word_view           v = {}) {
    word_type out;
    switch (kind) {
      case RuleKind::T:
      case RuleKind::H:
        return p.identity_word();
      case RuleKind::R:
        out = p.identity_word();
        out.push_back(static_cast<letter_type>(i));
        out.insert(out.end(), m - 1, 1);
        return out;
      case RuleKind::D:
        out = concat({p.identity_word(), v});
        out.push_back(p.letter(i + p.k()));
        detail::append_blocks(p, out, false, i + p.k(), 0, q);
        return out;
      case RuleKind::E:
        out = concat({p.identity_word(), v});
        out.push_back(p.letter(i + 1));
        detail::append_blocks(p, out, true, i + 1, 0, q);
        return out;
      case RuleKind::S:
        out = concat({detail::double_identity(p), v});
        detail::append_blocks(p, out, false, i + p.k(), 1, q);
        return out;
      case RuleKind::U:
        out = concat({detail::double_identity(p), v});
        detail::append_blocks(p, out, true, i + 1, 1, q);
        return out;
    }
    return out;
  }

  inline word_type rule_lhs(Presentation const& p,
                            RuleInstance const& r,
                            word_view           host) {
    auto v = host.subspan(r.match_start + (has_gap(r.kind) ? p.n() : 0),
                          has_gap(r.kind) ? r.v_len : 0);
    return rule_lhs(p, r.kind, r.i, r.m, r.q, v);
  }

  namespace detail {
    // Calls emit(q, end) for every q such that the block chain starting with
    // block index i matches w at pos and is closed by its trailing letter,
    // end being one past that letter.
    template <typename Emit>
    void match_chain(Presentation const& p,
                     word_view           w,
                     std::size_t         pos,
                     int                 i,
                     bool                use_b,
                     Emit&&              emit) {
      int const       n     = p.n();
      std::size_t     len   = static_cast<std::size_t>(n - 2);
      long long const first = use_b ? 1 : p.k();
      long long const step  = use_b ? 1 : p.k();
      long long const close = use_b ? -1 : -p.k();
      long long       cur   = i;
      for (int q = 0;; ++q) {
        if (pos + len >= w.size()) {
          return;  // need the block plus one trailing letter
        }
        for (std::size_t t = 0; t < len; ++t) {
          if (w[pos + t] != p.letter(cur + first + static_cast<long long>(t) * step)) {
            return;
          }
        }
        pos += len;
        if (w[pos] == p.letter(cur + close)) {
          emit(q, pos + 1);
        }
        cur = p.residue(cur - (p.k() + 1LL)).value;
      }
    }
  }  // namespace detail

  //! Every rule occurrence in w.
  //!
  //! T/R/H occurrences are contiguous factors. For D/E/S/U every occurrence
  //! of the tail pattern is reported when some occurrence of z ends at or
  //! before the tail start; the closest such z is used, so v is the gap
  //! between them. All q for which the chain closes are reported.
  inline std::vector<RuleInstance> find_redexes(Presentation const& p,
                                                word_view           w) {
    std::vector<RuleInstance> out;
    int const                 n = p.n();
    std::size_t const         L = w.size();
    std::size_t const         N = static_cast<std::size_t>(n);
    if (L < N) {
      return out;
    }
    // T and H.
    for (std::size_t s = 0; s + N <= L; ++s) {
      auto factor = w.subspan(s, N);
      if (!p.is_relation_word(factor)) {
        continue;
      }
      int  first     = static_cast<int>(factor[0]);
      bool is_rot    = p.residue(factor[0] + 1LL).value == static_cast<int>(factor[1]);
      if (is_rot && first != 1) {
        out.push_back({RuleKind::T, first, 0, 0, s, N, 0});
      } else if (!is_rot) {
        out.push_back({RuleKind::H, first, 0, 0, s, N, 0});
      }
    }
    // R: a_j a_1^m a_2 ... a_n, with the a_1-run followed by a_2.
    for (std::size_t s = 0; s + N + 1 <= L; ++s) {
      if (w[s] == 1) {
        continue;
      }
      std::size_t e = s + 1;
      while (e < L && w[e] == 1) {
        ++e;
      }
      std::size_t m = e - s - 1;
      if (m == 0 || e + N - 1 > L) {
        continue;
      }
      bool ok = true;
      for (std::size_t t = 0; t + 1 < N && ok; ++t) {
        ok = w[e + t] == t + 2;
      }
      if (ok) {
        out.push_back({RuleKind::R,
                       static_cast<int>(w[s]),
                       static_cast<int>(m),
                       0,
                       s,
                       m + N,
                       0});
      }
    }
    // D, E, S, U. last_z_end[t] is the largest end <= t of an occurrence of
    // z, or 0 when there is none.
    std::vector<std::size_t> last_z_end(L + 1, 0);
    {
      std::size_t run = 0;  // length of the current a_1 a_2 ... prefix match
      for (std::size_t t = 0; t < L; ++t) {
        if (w[t] == 1) {
          run = 1;
        } else if (run > 0 && w[t] == run + 1) {
          ++run;
        } else {
          run = 0;
        }
        last_z_end[t + 1] = last_z_end[t];
        if (run == N) {
          last_z_end[t + 1] = t + 1;
          run               = 0;
        }
      }
    }
    for (std::size_t ts = N; ts < L; ++ts) {
      std::size_t const z_end = last_z_end[ts];
      if (z_end == 0) {
        continue;
      }
      std::size_t const start = z_end - N;
      std::size_t const v_len = ts - z_end;
      auto push = [&](RuleKind kind, int i) {
        return [&, kind, i](int q, std::size_t end) {
          out.push_back({kind, i, 0, q, start, end - start, v_len});
        };
      };
      int const x = static_cast<int>(w[ts]);
      // D: the chain starts with b_i, whose first letter is a_{i+1}.
      if (int i = p.residue(x - 1LL).value; in_range(p, RuleKind::D, i)) {
        detail::match_chain(p, w, ts, i, true, push(RuleKind::D, i));
      }
      // E: the chain starts with c_i, whose first letter is a_{i+k}.
      if (int i = p.residue(x - static_cast<long long>(p.k())).value;
          in_range(p, RuleKind::E, i)) {
        detail::match_chain(p, w, ts, i, false, push(RuleKind::E, i));
      }
      // S and U: a_i then the chain b_i / c_i.
      detail::match_chain(p, w, ts + 1, x, true, push(RuleKind::S, x));
      detail::match_chain(p, w, ts + 1, x, false, push(RuleKind::U, x));
    }
    return out;
  }

  inline bool is_irreducible(Presentation const& p, word_view w) {
    return find_redexes(p, w).empty();
  }

  //! Replaces the matched factor by the instantiated right side. Throws
  //! RuleMismatch if the left side does not occur at r.match_start.
  inline word_type apply_rule(Presentation const& p,
                              word_view           w,
                              RuleInstance const& r) {
    if (r.match_end() > w.size() || !in_range(p, r.kind, r.i)
        || (has_gap(r.kind) && r.v_len + p.n() > r.match_len)) {
      throw RuleMismatch("apply_rule: " + to_string(r) + " does not fit "
                         + to_string(w));
    }
    auto lhs = rule_lhs(p, r, w);
    if (lhs.size() != r.match_len
        || !std::equal(lhs.begin(), lhs.end(), w.begin() + r.match_start)) {
      throw RuleMismatch("apply_rule: " + to_string(r)
                         + " does not match " + to_string(w));
    }
    auto v = w.subspan(r.match_start + (has_gap(r.kind) ? p.n() : 0),
                       has_gap(r.kind) ? r.v_len : 0);
    auto rhs = rule_rhs(p, r.kind, r.i, r.m, r.q, v);
    word_type out(w.begin(), w.begin() + r.match_start);
    out.insert(out.end(), rhs.begin(), rhs.end());
    out.insert(out.end(), w.begin() + r.match_end(), w.end());
    return out;
  }

  //! The redex the deterministic strategy applies first.
  inline RuleInstance const& preferred_redex(
      std::vector<RuleInstance> const& redexes) {
    return *std::min_element(
        redexes.begin(), redexes.end(), [](auto const& a, auto const& b) {
          return a.priority() < b.priority();
        });
  }

  namespace detail {
    inline void check_descent(word_view           before,
                              word_view           after,
                              RuleInstance const& r) {
      if (before.size() != after.size()
          || compare_length_lex(after, before) >= 0) {
        throw NonDecreasingStep("rule " + to_string(r) + " maps "
                                + to_string(before) + " to "
                                + to_string(after));
      }
    }
  }  // namespace detail

  //! The unique irreducible word congruent to w, reached by the
  //! deterministic strategy. Every step is checked to decrease length-lex.
  inline word_type normal_form(Presentation const& p, word_view w) {
    word_type cur(w.begin(), w.end());
    for (;;) {
      auto redexes = find_redexes(p, cur);
      if (redexes.empty()) {
        return cur;
      }
      auto const& r    = preferred_redex(redexes);
      auto        next = apply_rule(p, cur, r);
      detail::check_descent(cur, next, r);
      cur = std::move(next);
    }
  }

  //! As normal_form, but each step applies a uniformly chosen redex.
  template <typename Rng>
  word_type normal_form_random(Presentation const& p, word_view w, Rng& rng) {
    word_type cur(w.begin(), w.end());
    for (;;) {
      auto redexes = find_redexes(p, cur);
      if (redexes.empty()) {
        return cur;
      }
      std::uniform_int_distribution<std::size_t> pick(0, redexes.size() - 1);
      auto const& r    = redexes[pick(rng)];
      auto        next = apply_rule(p, cur, r);
      detail::check_descent(cur, next, r);
      cur = std::move(next);
    }
  }

  struct ReductionStep {
    RuleInstance rule;
    word_type    result;
  };

  //! The sequence of steps taken by normal_form.
  inline std::vector<ReductionStep> reduction_trace(Presentation const& p,
                                                    word_view           w) {
    std::vector<ReductionStep> out;
    word_type                  cur(w.begin(), w.end());
    for (;;) {
      auto redexes = find_redexes(p, cur);
      if (redexes.empty()) {
        return out;
      }
      auto const& r    = preferred_redex(redexes);
      auto        next = apply_rule(p, cur, r);
      detail::check_descent(cur, next, r);
      out.push_back({r, next});
      cur = std::move(next);
    }
  }

  //! A normal word written as a_1^i (a_2 ... a_n)^j b.
  struct NormalFormDecomposition {
    std::size_t i = 0;
    std::size_t j = 0;
    word_type   b;

    bool operator==(NormalFormDecomposition const&) const = default;

    [[nodiscard]] word_type reassemble(Presentation const& p) const {
      word_type out(i, 1);
      auto      tail = p.identity_tail();
      for (std::size_t t = 0; t < j; ++t) {
        out.insert(out.end(), tail.begin(), tail.end());
      }
      out.insert(out.end(), b.begin(), b.end());
      return out;
    }
  };

  //! Greedy split of an irreducible word: the longest a_1-power prefix, then
  //! the longest power of a_2 ... a_n, then the rest. Throws NotNormalForm on
  //! reducible input.
  inline NormalFormDecomposition decompose(Presentation const& p, word_view w) {
    if (!is_irreducible(p, w)) {
      throw NotNormalForm("decompose: " + to_string(w) + " is reducible");
    }
    NormalFormDecomposition out;
    std::size_t             pos = 0;
    while (pos < w.size() && w[pos] == 1) {
      ++pos;
    }
    out.i               = pos;
    auto const     tail = p.identity_tail();
    while (pos + tail.size() <= w.size()
           && std::equal(tail.begin(), tail.end(), w.begin() + pos)) {
      pos += tail.size();
      ++out.j;
    }
    out.b.assign(w.begin() + pos, w.end());
    return out;
  }

}  // namespace dihedral

#endif  // DIHEDRAL_REWRITE_HPP_
