#ifndef DIHEDRAL_WORD_HPP_
#define DIHEDRAL_WORD_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace dihedral {

  //! Generator index, always in [1..n].
  using letter_type = std::uint32_t;

  //! An element of the free monoid on a_1, ..., a_n. The empty word is the
  //! identity.
  using word_type = std::vector<letter_type>;

  using word_view = std::span<letter_type const>;

  //! Length-lexicographic order with a_1 < a_2 < ... < a_n: shorter words
  //! come first, equal lengths compare letter by letter.
  inline std::strong_ordering compare_length_lex(word_view lhs,
                                                 word_view rhs) noexcept {
    if (lhs.size() != rhs.size()) {
      return lhs.size() <=> rhs.size();
    }
    return std::lexicographical_compare_three_way(
        lhs.begin(), lhs.end(), rhs.begin(), rhs.end());
  }

  struct LengthLexLess {
    bool operator()(word_view lhs, word_view rhs) const noexcept {
      return compare_length_lex(lhs, rhs) < 0;
    }
  };

  inline void sort_length_lex(std::vector<word_type>& words) {
    std::sort(words.begin(), words.end(), LengthLexLess{});
  }

  //! Space separated letters, the empty word prints as an empty string.
  inline std::string to_string(word_view w) {
    std::string out;
    for (std::size_t t = 0; t < w.size(); ++t) {
      if (t != 0) {
        out += ' ';
      }
      out += std::to_string(w[t]);
    }
    return out;
  }

  //! Parses whitespace separated tokens, each either a decimal integer or of
  //! the form "a3". Every letter must lie in [1..n].
  inline word_type parse_word(std::string_view text, std::size_t n) {
    word_type          out;
    std::istringstream in{std::string(text)};
    std::string        token;
    while (in >> token) {
      std::string_view digits = token;
      if (!digits.empty() && digits.front() == 'a') {
        digits.remove_prefix(1);
      }
      if (digits.empty() || digits.size() > 9
          || !std::all_of(digits.begin(), digits.end(), [](char c) {
               return c >= '0' && c <= '9';
             })) {
        throw InvalidWord("malformed letter \"" + token + "\"");
      }
      auto value = std::stoul(std::string(digits));
      if (value < 1 || value > n) {
        throw InvalidWord("letter " + token + " is not in [1.."
                          + std::to_string(n) + "]");
      }
      out.push_back(static_cast<letter_type>(value));
    }
    return out;
  }

  inline word_type concat(std::initializer_list<word_view> parts) {
    word_type out;
    for (auto part : parts) {
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

  struct WordHash {
    std::size_t operator()(word_type const& w) const noexcept {
      // FNV-1a over the letters.
      std::uint64_t h = 1469598103934665603ULL;
      for (auto x : w) {
        h ^= x;
        h *= 1099511628211ULL;
      }
      h ^= w.size();
      return static_cast<std::size_t>(h);
    }
  };

}  // namespace dihedral

#endif  // DIHEDRAL_WORD_HPP_
