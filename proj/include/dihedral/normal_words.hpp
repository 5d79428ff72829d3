#ifndef DIHEDRAL_NORMAL_WORDS_HPP_
#define DIHEDRAL_NORMAL_WORDS_HPP_

// Two independent automata for the language of normal words of S_n(H).
//
// irreducible_dfa avoids every left side of the rewriting system as a factor.
// theorem_language_dfa is a term-by-term translation of the closed regular
// expression for the normal words,
//
//   a_1^* (FM \ (I u a_2..a_n FM))
//     u (a_2..a_n)^* (FM \ (I u a_1 FM))
//     u a_1 a_1^* (a_2..a_n)(a_2..a_n)^*
//         (FM \ (I u a_1 FM u a_2..a_n FM u I_zeta u I_eta u I_theta u I_iota))
//
// where I is the ideal generated by the relation words and I_zeta, ...,
// I_iota are the ideals generated by the D, E, S, U tail patterns, with the
// block chain of each written as a starred full period followed by a prefix.

#include <string>
#include <vector>

#include "automata.hpp"
#include "presentation.hpp"
#include "rewrite.hpp"
#include "word.hpp"

namespace dihedral {

  namespace detail {
    // Adds the block-chain states shared by the D/E/S/U tails: for each
    // residue p, a path spelling b_p (or c_p); from its end either the next
    // block p - (k+1) starts, or the closing letter leads to accept.
    // Returns entry[p], the first state of the block for p.
    inline std::vector<state_type> add_chain_states(Nfa&                nfa,
                                                    Presentation const& p,
                                                    bool                use_b,
                                                    state_type          accept) {
      int const               n = p.n();
      std::vector<state_type> entry(n + 1), exit(n + 1);
      for (int r = 1; r <= n; ++r) {
        entry[r]        = nfa.add_state();
        state_type cur  = entry[r];
        auto       block = use_b ? p.block_b(Residue{r}) : p.block_c(Residue{r});
        for (auto x : block) {
          state_type next = nfa.add_state();
          nfa.add_transition(cur, x, next);
          cur = next;
        }
        exit[r] = cur;
      }
      for (int r = 1; r <= n; ++r) {
        nfa.add_epsilon(exit[r], entry[p.residue(r - (p.k() + 1LL)).value]);
        nfa.add_transition(exit[r], p.letter(use_b ? r - 1 : r - p.k()), accept);
      }
      return entry;
    }

    inline void add_path(Nfa&       nfa,
                         state_type from,
                         word_view  w,
                         state_type to) {
      state_type cur = from;
      for (std::size_t t = 0; t + 1 < w.size(); ++t) {
        state_type next = nfa.add_state();
        nfa.add_transition(cur, w[t], next);
        cur = next;
      }
      nfa.add_transition(cur, w.back(), to);
    }
  }  // namespace detail

  //! NFA for Sigma^* F Sigma^*, F the set of all rule left sides.
  inline Nfa reducible_words_nfa(Presentation const& p) {
    std::size_t const n = static_cast<std::size_t>(p.n());
    Nfa               nfa(n);
    state_type const  free   = nfa.add_state();
    state_type const  accept = nfa.add_state(true);
    nfa.set_start(free);
    for (letter_type x = 1; x <= n; ++x) {
      nfa.add_transition(free, x, free);
      nfa.add_transition(accept, x, accept);
    }
    // T and H.
    for (int i = 1; i <= p.n(); ++i) {
      if (i >= 2) {
        detail::add_path(nfa, free, p.rotation(Residue{i}), accept);
      }
      detail::add_path(nfa, free, p.skip_word(Residue{i}), accept);
    }
    // R: a_j a_1 a_1^* a_2 ... a_n.
    {
      state_type after_j = nfa.add_state();
      state_type ones    = nfa.add_state();
      for (letter_type j = 2; j <= n; ++j) {
        nfa.add_transition(free, j, after_j);
      }
      nfa.add_transition(after_j, 1, ones);
      nfa.add_transition(ones, 1, ones);
      detail::add_path(nfa, ones, p.identity_tail(), accept);
    }
    // D, E, S, U: z, then any gap v, then a tail pattern.
    {
      state_type gap = nfa.add_state();
      detail::add_path(nfa, free, p.identity_word(), gap);
      for (letter_type x = 1; x <= n; ++x) {
        nfa.add_transition(gap, x, gap);
      }
      auto b_entry = detail::add_chain_states(nfa, p, true, accept);
      auto c_entry = detail::add_chain_states(nfa, p, false, accept);
      for (int i = 1; i <= p.n(); ++i) {
        if (in_range(p, RuleKind::D, i)) {
          nfa.add_epsilon(gap, b_entry[i]);
        }
        if (in_range(p, RuleKind::E, i)) {
          nfa.add_epsilon(gap, c_entry[i]);
        }
        nfa.add_transition(gap, static_cast<letter_type>(i), b_entry[i]);  // S
        nfa.add_transition(gap, static_cast<letter_type>(i), c_entry[i]);  // U
      }
    }
    return nfa;
  }

  //! Minimal DFA of the words on which no rule applies.
  inline Dfa irreducible_dfa(Presentation const& p,
                             std::size_t limit = default_state_limit) {
    return minimize(complement(determinize(reducible_words_nfa(p), limit)));
  }

  namespace detail {
    inline Nfa word_nfa(Presentation const& p, word_view w) {
      return Nfa::word(static_cast<std::size_t>(p.n()), w);
    }

    // FM (full)^* chain_q FM over q = 0..n-1 and the given first indices,
    // optionally with a leading letter a_i (the theta/iota forms).
    inline Nfa chain_ideal(Presentation const&     p,
                           bool                    use_b,
                           std::vector<int> const& indices,
                           bool                    leading_letter) {
      std::size_t const n = static_cast<std::size_t>(p.n());
      std::vector<Nfa>  parts;
      for (int i : indices) {
        word_type full;
        detail::append_blocks(p, full, use_b, i, 0, p.n() - 1);
        for (int q = 0; q <= p.n() - 1; ++q) {
          auto chain = use_b ? b_chain(p, i, q) : c_chain(p, i, q);
          std::vector<Nfa> seq;
          if (leading_letter) {
            seq.push_back(word_nfa(p, word_type{p.letter(i)}));
          }
          seq.push_back(star(word_nfa(p, full)));
          seq.push_back(word_nfa(p, chain));
          parts.push_back(factor_ideal(concat(seq, n)));
        }
      }
      return union_of(parts, n);
    }
  }  // namespace detail

  //! Minimal DFA of the closed regular expression for the normal words,
  //! translated literally. H ranges over the whole group, identity included.
  inline Dfa theorem_language_dfa(Presentation const& p,
                                  std::size_t limit = default_state_limit) {
    std::size_t const n = static_cast<std::size_t>(p.n());
    auto const        a1 = detail::word_nfa(p, word_type{1});
    auto const        zt = detail::word_nfa(p, p.identity_tail());

    std::vector<Nfa> relation_parts;
    for (auto const& sigma : group_H(p)) {
      word_type w(sigma.begin(), sigma.end());
      relation_parts.push_back(detail::word_nfa(p, w));
    }
    Nfa const ideal_I   = factor_ideal(union_of(relation_parts, n));
    Nfa const starts_a1 = prefix_ideal(a1);
    Nfa const starts_zt = prefix_ideal(zt);

    std::vector<int> zeta_indices, eta_indices, all_indices;
    for (int i = 1; i <= p.n(); ++i) {
      all_indices.push_back(i);
    }
    for (int i = p.n() - p.k() + 1; i <= p.n() - 1; ++i) {
      zeta_indices.push_back(i);
    }
    for (int i = 0; i <= p.n() - p.k(); ++i) {
      eta_indices.push_back(p.residue(i).value);
    }
    Nfa const I_zeta  = detail::chain_ideal(p, true, zeta_indices, false);
    Nfa const I_eta   = detail::chain_ideal(p, false, eta_indices, false);
    Nfa const I_theta = detail::chain_ideal(p, true, all_indices, true);
    Nfa const I_iota  = detail::chain_ideal(p, false, all_indices, true);

    auto avoid = [&](std::vector<Nfa> const& parts) {
      return to_nfa(
          minimize(complement(determinize(union_of(parts, n), limit))));
    };

    Nfa first  = concat({star(a1), avoid({ideal_I, starts_zt})}, n);
    Nfa second = concat({star(zt), avoid({ideal_I, starts_a1})}, n);
    Nfa third  = concat({a1,
                        star(a1),
                        zt,
                        star(zt),
                        avoid({ideal_I,
                               starts_a1,
                               starts_zt,
                               I_zeta,
                               I_eta,
                               I_theta,
                               I_iota})},
                       n);
    return minimize(determinize(union_of({first, second, third}, n), limit));
  }

}  // namespace dihedral

#endif  // DIHEDRAL_NORMAL_WORDS_HPP_
