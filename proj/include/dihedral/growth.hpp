#ifndef DIHEDRAL_GROWTH_HPP_
#define DIHEDRAL_GROWTH_HPP_

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "automata.hpp"
#include "errors.hpp"

namespace dihedral {

  using big_rational = boost::multiprecision::cpp_rational;
  using polynomial   = std::vector<big_integer>;  // coefficient of x^t at t

  //! Exact word counts by length and a rational generating function
  //! numerator / denominator with integer coefficients whose expansion
  //! reproduces them.
  struct GrowthSeries {
    std::vector<big_integer> coefficients;
    polynomial               numerator;
    polynomial               denominator;

    //! The first count coefficients of numerator / denominator.
    [[nodiscard]] std::vector<big_integer> expand(std::size_t count) const {
      std::vector<big_integer> out;
      for (std::size_t t = 0; t < count; ++t) {
        big_integer acc = t < numerator.size() ? numerator[t] : big_integer(0);
        for (std::size_t j = 1; j < denominator.size() && j <= t; ++j) {
          acc -= denominator[j] * out[t - j];
        }
        if (acc % denominator[0] != 0) {
          throw Error("GrowthSeries::expand: expansion is not integral");
        }
        out.push_back(acc / denominator[0]);
      }
      return out;
    }

    //! Whether the coefficients satisfy the recurrence of the denominator.
    [[nodiscard]] bool consistent() const {
      return expand(coefficients.size()) == coefficients;
    }
  };

  namespace detail {
    // Shortest linear recurrence of seq over the rationals, as a connection
    // polynomial C with C[0] = 1: sum_j C[j] seq[t - j] = 0 for t >= L.
    inline std::vector<big_rational> berlekamp_massey(
        std::vector<big_integer> const& seq,
        std::size_t&                    order) {
      std::vector<big_rational> C{1}, B{1};
      std::size_t               L = 0, m = 1;
      big_rational              b = 1;
      for (std::size_t t = 0; t < seq.size(); ++t) {
        big_rational d = seq[t];
        for (std::size_t j = 1; j <= L && j < C.size(); ++j) {
          d += C[j] * seq[t - j];
        }
        if (d == 0) {
          ++m;
          continue;
        }
        auto         T    = C;
        big_rational coef = d / b;
        if (C.size() < B.size() + m) {
          C.resize(B.size() + m, 0);
        }
        for (std::size_t j = 0; j < B.size(); ++j) {
          C[j + m] -= coef * B[j];
        }
        if (2 * L <= t) {
          L = t + 1 - L;
          B = std::move(T);
          b = d;
          m = 1;
        } else {
          ++m;
        }
      }
      C.resize(L + 1, 0);
      order = L;
      return C;
    }

    inline void trim(polynomial& p) {
      while (p.size() > 1 && p.back() == 0) {
        p.pop_back();
      }
    }
  }  // namespace detail

  //! Rational generating function of an integer sequence. The result is
  //! certain only when seq holds at least twice as many terms as the order
  //! of its shortest linear recurrence.
  inline GrowthSeries rational_series(std::vector<big_integer> const& seq) {
    std::size_t L = 0;
    auto        C = detail::berlekamp_massey(seq, L);
    // numerator = C * seq mod x^L
    std::vector<big_rational> N(L, 0);
    for (std::size_t t = 0; t < L; ++t) {
      for (std::size_t j = 0; j <= t; ++j) {
        N[t] += C[j] * seq[t - j];
      }
    }
    // Clear denominators, then divide out the common content.
    big_integer scale = 1;
    for (auto const* poly : {&C, &N}) {
      for (auto const& x : *poly) {
        big_integer den = boost::multiprecision::denominator(x);
        scale           = scale / boost::multiprecision::gcd(scale, den) * den;
      }
    }
    GrowthSeries out;
    big_integer  content = 0;
    for (auto const& x : C) {
      out.denominator.push_back(boost::multiprecision::numerator(big_rational(x * scale)));
      content = boost::multiprecision::gcd(content, out.denominator.back());
    }
    for (auto const& x : N) {
      out.numerator.push_back(boost::multiprecision::numerator(big_rational(x * scale)));
      content = boost::multiprecision::gcd(content, out.numerator.back());
    }
    if (content == 0) {
      content = 1;
    }
    if (out.denominator[0] < 0) {
      content = -content;
    }
    for (auto& x : out.denominator) {
      x /= content;
    }
    for (auto& x : out.numerator) {
      x /= content;
    }
    if (out.numerator.empty()) {
      out.numerator.push_back(0);
    }
    detail::trim(out.numerator);
    detail::trim(out.denominator);
    out.coefficients = seq;
    return out;
  }

  //! Word counts of an automaton for lengths 0..max_length together with
  //! its rational generating function. The recurrence is fitted on at least
  //! 2 * state_count + 2 terms, which bounds its order by the state count.
  inline GrowthSeries growth_series(Dfa const& d, std::size_t max_length) {
    std::size_t const fit    = 2 * d.state_count() + 2;
    auto              counts = count_words_up_to(d, std::max(fit, max_length));
    GrowthSeries      out    = rational_series(counts);
    if (!out.consistent()) {
      throw Error("growth_series: generating function does not reproduce "
                  "the counts");
    }
    out.coefficients.resize(max_length + 1);
    return out;
  }

  inline std::string to_string(polynomial const& p) {
    std::string out;
    for (std::size_t t = 0; t < p.size(); ++t) {
      out += (t == 0 ? "" : " ") + p[t].str();
    }
    return out;
  }

}  // namespace dihedral

#endif  // DIHEDRAL_GROWTH_HPP_
