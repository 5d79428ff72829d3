#ifndef DIHEDRAL_PRESENTATION_HPP_
#define DIHEDRAL_PRESENTATION_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "word.hpp"

namespace dihedral {

  //! An index class modulo n, stored in [1..n] (0 is represented by n).
  struct Residue {
    int value = 1;

    constexpr auto operator<=>(Residue const&) const = default;
  };

  //! A permutation of [1..n], stored as images: perm[t - 1] = sigma(t).
  using permutation_type = std::vector<int>;

  //! The monoid S_n(H) of dihedral type, parameterised by (n, k).
  //!
  //! H is generated by the n-cycle lambda = (1, 2, ..., n) and an element mu
  //! with mu lambda = lambda^k mu. The defining relations identify the
  //! identity word z = a_1 ... a_n with every rotation a_i a_{i+1} ... a_{i-1}
  //! and every skip word a_i a_{i+k} ... a_{i-k}. Instances are immutable.
  class Presentation {
   public:
    //! Throws InvalidN unless n > 3, and InvalidK unless 1 < k < n with
    //! k^2 = 1 mod n.
    Presentation(int n, int k) : _n(n), _k(k) {
      if (n <= 3) {
        throw InvalidN("invalid n=" + std::to_string(n)
                       + ": the presentation requires n > 3");
      }
      if (n > 4096) {
        throw InvalidN("invalid n=" + std::to_string(n)
                       + ": n larger than 4096 is not supported");
      }
      long long kk = k;
      if (k <= 1 || k >= n || (kk * kk) % n != 1 % n) {
        throw InvalidK("invalid k=" + std::to_string(k) + " for n="
                       + std::to_string(n)
                       + ": need 1 < k < n and k^2 ≡ 1 mod n");
      }
      _identity.resize(n);
      std::iota(_identity.begin(), _identity.end(), letter_type(1));
      for (int i = 1; i <= n; ++i) {
        _relations.push_back(rotation(Residue{i}));
        _relations.push_back(skip_word(Residue{i}));
      }
      sort_length_lex(_relations);
      _relations.erase(std::unique(_relations.begin(), _relations.end()),
                       _relations.end());
    }

    [[nodiscard]] int n() const noexcept {
      return _n;
    }

    [[nodiscard]] int k() const noexcept {
      return _k;
    }

    //! Renormalises an arbitrary integer into [1..n].
    [[nodiscard]] Residue residue(long long x) const noexcept {
      long long r = ((x - 1) % _n + _n) % _n;
      return Residue{static_cast<int>(r + 1)};
    }

    [[nodiscard]] Residue add(Residue a, long long b) const noexcept {
      return residue(static_cast<long long>(a.value) + b);
    }

    [[nodiscard]] letter_type letter(long long x) const noexcept {
      return static_cast<letter_type>(residue(x).value);
    }

    //! z = a_1 a_2 ... a_n.
    [[nodiscard]] word_type const& identity_word() const noexcept {
      return _identity;
    }

    //! a_2 a_3 ... a_n.
    [[nodiscard]] word_type identity_tail() const {
      return word_type(_identity.begin() + 1, _identity.end());
    }

    //! a_i a_{i+1} ... a_{i-1}.
    [[nodiscard]] word_type rotation(Residue i) const {
      return progression(i.value, 1, _n);
    }

    //! a_i a_{i+k} ... a_{i-k}.
    [[nodiscard]] word_type skip_word(Residue i) const {
      return progression(i.value, _k, _n);
    }

    //! b_p = a_{p+1} a_{p+2} ... a_{p-2}, of length n - 2.
    [[nodiscard]] word_type block_b(Residue p) const {
      return progression(p.value + 1, 1, _n - 2);
    }

    //! c_p = a_{p+k} a_{p+2k} ... a_{p-2k}, of length n - 2.
    [[nodiscard]] word_type block_c(Residue p) const {
      return progression(p.value + _k, _k, _n - 2);
    }

    //! The 2n pairwise distinct relation words, sorted length-lex.
    [[nodiscard]] std::vector<word_type> const& relation_words() const noexcept {
      return _relations;
    }

    [[nodiscard]] bool is_relation_word(word_view w) const {
      if (w.size() != static_cast<std::size_t>(_n)) {
        return false;
      }
      // A relation word is an arithmetic progression with step 1 or k.
      long long step = (static_cast<long long>(w[1]) - w[0] + _n) % _n;
      if (step != 1 && step != _k) {
        return false;
      }
      for (std::size_t t = 1; t < w.size(); ++t) {
        if (static_cast<long long>(w[t]) != residue(w[t - 1] + step).value) {
          return false;
        }
      }
      return true;
    }

    bool operator==(Presentation const& that) const noexcept {
      return _n == that._n && _k == that._k;
    }

   private:
    [[nodiscard]] word_type progression(long long first,
                                        long long step,
                                        int       length) const {
      word_type out;
      out.reserve(length);
      for (int t = 0; t < length; ++t) {
        out.push_back(letter(first + t * step));
      }
      return out;
    }

    int                    _n;
    int                    _k;
    word_type              _identity;
    std::vector<word_type> _relations;
  };

  inline Presentation new_presentation(int n, int k) {
    return Presentation(n, k);
  }

  inline Residue residue_add(Presentation const& p, Residue a, long long b) {
    return p.add(a, b);
  }

  inline std::vector<word_type> relation_words(Presentation const& p) {
    return p.relation_words();
  }

  inline word_type block_b(Presentation const& p, Residue q) {
    return p.block_b(q);
  }

  inline word_type block_c(Presentation const& p, Residue q) {
    return p.block_c(q);
  }

  namespace detail {
    inline permutation_type compose(permutation_type const& f,
                                    permutation_type const& g) {
      // (f g)(t) = f(g(t))
      permutation_type out(g.size());
      for (std::size_t t = 0; t < g.size(); ++t) {
        out[t] = f[g[t] - 1];
      }
      return out;
    }

    inline permutation_type inverse(permutation_type const& f) {
      permutation_type out(f.size());
      for (std::size_t t = 0; t < f.size(); ++t) {
        out[f[t] - 1] = static_cast<int>(t + 1);
      }
      return out;
    }
  }  // namespace detail

  //! The group H of permutations sigma for which a_{sigma(1)} ... a_{sigma(n)}
  //! is a relation word, sorted lexicographically.
  //!
  //! The group structure is checked rather than assumed: closure under
  //! composition, order 2n, the cyclic subgroup generated by lambda being
  //! normal of index 2, mu^2 in <lambda> and mu lambda = lambda^k mu. Any
  //! failure throws StructureViolation.
  inline std::vector<permutation_type> group_H(Presentation const& p) {
    int const n = p.n();
    std::set<permutation_type> elements;
    for (auto const& w : p.relation_words()) {
      elements.emplace(w.begin(), w.end());
    }
    auto fail = [&](std::string const& what) {
      throw StructureViolation("group_H(" + std::to_string(n) + ", "
                               + std::to_string(p.k()) + "): " + what);
    };
    if (elements.size() != static_cast<std::size_t>(2 * n)) {
      fail("expected " + std::to_string(2 * n) + " elements, found "
           + std::to_string(elements.size()));
    }
    for (auto const& f : elements) {
      if (!elements.contains(detail::inverse(f))) {
        fail("not closed under inverses");
      }
      for (auto const& g : elements) {
        if (!elements.contains(detail::compose(f, g))) {
          fail("not closed under composition");
        }
      }
    }
    auto as_perm = [](word_type const& w) {
      return permutation_type(w.begin(), w.end());
    };
    permutation_type const lambda = as_perm(p.rotation(Residue{2}));
    permutation_type const mu     = as_perm(p.skip_word(Residue{1}));

    std::set<permutation_type> cyclic;
    permutation_type           power = as_perm(p.identity_word());
    for (int t = 0; t < n; ++t) {
      cyclic.insert(power);
      power = detail::compose(lambda, power);
    }
    if (cyclic.size() != static_cast<std::size_t>(n)) {
      fail("lambda does not have order n");
    }
    for (auto const& f : elements) {
      for (auto const& c : cyclic) {
        auto conj = detail::compose(detail::compose(f, c), detail::inverse(f));
        if (!cyclic.contains(conj)) {
          fail("<lambda> is not normal");
        }
      }
    }
    if (cyclic.contains(mu) || !cyclic.contains(detail::compose(mu, mu))) {
      fail("mu is not of index-2 type");
    }
    permutation_type lambda_k = as_perm(p.identity_word());
    for (int t = 0; t < p.k(); ++t) {
      lambda_k = detail::compose(lambda, lambda_k);
    }
    if (detail::compose(mu, lambda) != detail::compose(lambda_k, mu)) {
      fail("mu lambda != lambda^k mu");
    }
    return {elements.begin(), elements.end()};
  }

}  // namespace dihedral

#endif  // DIHEDRAL_PRESENTATION_HPP_
