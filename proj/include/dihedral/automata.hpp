#ifndef DIHEDRAL_AUTOMATA_HPP_
#define DIHEDRAL_AUTOMATA_HPP_

// Finite automata over the alphabet {1, ..., n}: epsilon-NFAs with regular
// combinators, subset construction, partition-refinement minimisation,
// witness-producing equivalence and exact word counting.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include "errors.hpp"
#include "word.hpp"

namespace dihedral {

  using state_type  = std::uint32_t;
  using big_integer = boost::multiprecision::cpp_int;

  inline constexpr std::size_t default_state_limit = 1'000'000;

  class Dfa;

  //! Nondeterministic automaton with epsilon moves.
  class Nfa {
   public:
    explicit Nfa(std::size_t alphabet_size) : _alphabet(alphabet_size) {}

    state_type add_state(bool accepting = false) {
      _accepting.push_back(accepting);
      _edges.emplace_back();
      _epsilon.emplace_back();
      return static_cast<state_type>(_accepting.size() - 1);
    }

    void add_transition(state_type from, letter_type letter, state_type to) {
      _edges[from].emplace_back(letter, to);
    }

    void add_epsilon(state_type from, state_type to) {
      _epsilon[from].push_back(to);
    }

    void set_start(state_type s) noexcept {
      _start = s;
    }

    void set_accepting(state_type s, bool value = true) {
      _accepting[s] = value;
    }

    [[nodiscard]] std::size_t alphabet_size() const noexcept {
      return _alphabet;
    }

    [[nodiscard]] std::size_t state_count() const noexcept {
      return _accepting.size();
    }

    [[nodiscard]] state_type start() const noexcept {
      return _start;
    }

    [[nodiscard]] bool accepting(state_type s) const {
      return _accepting[s];
    }

    [[nodiscard]] auto const& edges(state_type s) const {
      return _edges[s];
    }

    [[nodiscard]] auto const& epsilon(state_type s) const {
      return _epsilon[s];
    }

    //! Copies the states of that into this automaton and returns the offset
    //! of its states.
    state_type embed(Nfa const& that) {
      auto offset = static_cast<state_type>(state_count());
      for (state_type s = 0; s < that.state_count(); ++s) {
        add_state(that._accepting[s]);
      }
      for (state_type s = 0; s < that.state_count(); ++s) {
        for (auto [x, t] : that._edges[s]) {
          add_transition(s + offset, x, t + offset);
        }
        for (auto t : that._epsilon[s]) {
          add_epsilon(s + offset, t + offset);
        }
      }
      return offset;
    }

    // Language constructors.

    static Nfa empty_language(std::size_t alphabet_size) {
      Nfa out(alphabet_size);
      out.set_start(out.add_state(false));
      return out;
    }

    static Nfa word(std::size_t alphabet_size, word_view w) {
      Nfa        out(alphabet_size);
      state_type cur = out.add_state();
      out.set_start(cur);
      for (auto x : w) {
        state_type next = out.add_state();
        out.add_transition(cur, x, next);
        cur = next;
      }
      out.set_accepting(cur);
      return out;
    }

    //! The free monoid: every word.
    static Nfa all_words(std::size_t alphabet_size) {
      Nfa  out(alphabet_size);
      auto s = out.add_state(true);
      out.set_start(s);
      for (letter_type x = 1; x <= alphabet_size; ++x) {
        out.add_transition(s, x, s);
      }
      return out;
    }

   private:
    std::size_t                                             _alphabet;
    state_type                                              _start = 0;
    std::vector<bool>                                       _accepting;
    std::vector<std::vector<std::pair<letter_type, state_type>>> _edges;
    std::vector<std::vector<state_type>>                    _epsilon;
  };

  inline Nfa union_of(std::vector<Nfa> const& parts, std::size_t alphabet_size) {
    Nfa  out(alphabet_size);
    auto s = out.add_state();
    out.set_start(s);
    for (auto const& part : parts) {
      auto offset = out.embed(part);
      out.add_epsilon(s, part.start() + offset);
    }
    return out;
  }

  inline Nfa concat(std::vector<Nfa> const& parts, std::size_t alphabet_size) {
    Nfa  out(alphabet_size);
    auto s = out.add_state(true);
    out.set_start(s);
    std::vector<state_type> ends{s};
    for (auto const& part : parts) {
      auto offset = out.embed(part);
      for (auto e : ends) {
        out.set_accepting(e, false);
        out.add_epsilon(e, part.start() + offset);
      }
      ends.clear();
      for (state_type t = 0; t < part.state_count(); ++t) {
        if (part.accepting(t)) {
          ends.push_back(t + offset);
        }
      }
    }
    return out;
  }

  //! Zero or more repetitions.
  inline Nfa star(Nfa const& a) {
    Nfa  out(a.alphabet_size());
    auto s = out.add_state(true);
    out.set_start(s);
    auto offset = out.embed(a);
    out.add_epsilon(s, a.start() + offset);
    for (state_type t = 0; t < a.state_count(); ++t) {
      if (a.accepting(t)) {
        out.add_epsilon(t + offset, s);
      }
    }
    return out;
  }

  //! Sigma^* L Sigma^*: all words with a factor in L.
  inline Nfa factor_ideal(Nfa const& a) {
    auto n = a.alphabet_size();
    return concat({Nfa::all_words(n), a, Nfa::all_words(n)}, n);
  }

  //! L Sigma^*: all words with a prefix in L.
  inline Nfa prefix_ideal(Nfa const& a) {
    auto n = a.alphabet_size();
    return concat({a, Nfa::all_words(n)}, n);
  }

  //! Complete deterministic automaton. Letters are 1-based; the transition
  //! table is total.
  class Dfa {
   public:
    Dfa() = default;

    Dfa(std::size_t alphabet_size, std::size_t states)
        : _alphabet(alphabet_size),
          _delta(states * alphabet_size, 0),
          _accepting(states, false) {}

    [[nodiscard]] std::size_t alphabet_size() const noexcept {
      return _alphabet;
    }

    [[nodiscard]] std::size_t state_count() const noexcept {
      return _accepting.size();
    }

    [[nodiscard]] state_type start() const noexcept {
      return _start;
    }

    void set_start(state_type s) noexcept {
      _start = s;
    }

    [[nodiscard]] bool accepting(state_type s) const {
      return _accepting[s];
    }

    void set_accepting(state_type s, bool value = true) {
      _accepting[s] = value;
    }

    [[nodiscard]] state_type next(state_type s, letter_type x) const {
      return _delta[s * _alphabet + (x - 1)];
    }

    void set_next(state_type s, letter_type x, state_type t) {
      _delta[s * _alphabet + (x - 1)] = t;
    }

    state_type add_state(bool accepting = false) {
      _accepting.push_back(accepting);
      _delta.resize(_delta.size() + _alphabet, 0);
      return static_cast<state_type>(_accepting.size() - 1);
    }

    [[nodiscard]] bool accepts(word_view w) const {
      state_type s = _start;
      for (auto x : w) {
        s = next(s, x);
      }
      return _accepting[s];
    }

    //! A DFA accepting every word (single accepting state).
    static Dfa universal(std::size_t alphabet_size) {
      Dfa out(alphabet_size, 1);
      out.set_accepting(0);
      return out;
    }

    bool operator==(Dfa const&) const = default;

   private:
    std::size_t             _alphabet = 0;
    std::vector<state_type> _delta;
    std::vector<bool>       _accepting;
    state_type              _start = 0;
  };

  inline Nfa to_nfa(Dfa const& d) {
    Nfa out(d.alphabet_size());
    for (state_type s = 0; s < d.state_count(); ++s) {
      out.add_state(d.accepting(s));
    }
    for (state_type s = 0; s < d.state_count(); ++s) {
      for (letter_type x = 1; x <= d.alphabet_size(); ++x) {
        out.add_transition(s, x, d.next(s, x));
      }
    }
    out.set_start(d.start());
    return out;
  }

  namespace detail {
    struct StateSetHash {
      std::size_t operator()(std::vector<state_type> const& v) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto x : v) {
          h ^= x;
          h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
      }
    };

    inline void epsilon_close(Nfa const& a, std::vector<state_type>& set) {
      std::vector<state_type> stack(set.begin(), set.end());
      std::vector<bool>       in(a.state_count(), false);
      for (auto s : set) {
        in[s] = true;
      }
      while (!stack.empty()) {
        auto s = stack.back();
        stack.pop_back();
        for (auto t : a.epsilon(s)) {
          if (!in[t]) {
            in[t] = true;
            set.push_back(t);
            stack.push_back(t);
          }
        }
      }
      std::sort(set.begin(), set.end());
    }

    // An accepting state from which every word stays in accepting states.
    inline std::vector<bool> universal_states(Nfa const& a) {
      std::vector<bool> out(a.state_count(), false);
      for (state_type s = 0; s < a.state_count(); ++s) {
        if (!a.accepting(s)) {
          continue;
        }
        std::vector<bool> loops(a.alphabet_size() + 1, false);
        for (auto [x, t] : a.edges(s)) {
          if (t == s) {
            loops[x] = true;
          }
        }
        out[s] = std::all_of(loops.begin() + 1, loops.end(), [](bool b) {
          return b;
        });
      }
      return out;
    }
  }  // namespace detail

  //! Subset construction. A subset containing a universal accepting state is
  //! collapsed to that state alone. Throws StateLimitExceeded beyond limit.
  inline Dfa determinize(Nfa const& a, std::size_t limit = default_state_limit) {
    std::size_t const n         = a.alphabet_size();
    auto const        universal = detail::universal_states(a);
    using set_type              = std::vector<state_type>;
    std::unordered_map<set_type, state_type, detail::StateSetHash> index;
    std::vector<set_type>                                            sets;
    Dfa                                                              out(n, 0);

    auto intern = [&](set_type set) -> state_type {
      detail::epsilon_close(a, set);
      for (auto s : set) {
        if (universal[s]) {
          set = {s};
          break;
        }
      }
      auto it = index.find(set);
      if (it != index.end()) {
        return it->second;
      }
      if (sets.size() >= limit) {
        throw StateLimitExceeded("determinization exceeded "
                                 + std::to_string(limit) + " states");
      }
      bool acc = std::any_of(
          set.begin(), set.end(), [&](state_type s) { return a.accepting(s); });
      auto id = out.add_state(acc);
      index.emplace(set, id);
      sets.push_back(std::move(set));
      return id;
    };

    out.set_start(intern({a.start()}));
    std::vector<set_type> by_letter(n + 1);
    for (std::size_t cur = 0; cur < sets.size(); ++cur) {
      for (auto& b : by_letter) {
        b.clear();
      }
      for (auto s : sets[cur]) {
        for (auto [x, t] : a.edges(s)) {
          by_letter[x].push_back(t);
        }
      }
      for (letter_type x = 1; x <= n; ++x) {
        auto& b = by_letter[x];
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        auto t = intern(b);
        out.set_next(static_cast<state_type>(cur), x, t);
      }
    }
    return out;
  }

  //! Breadth-first renumbering from the start state (letters in increasing
  //! order), dropping unreachable states.
  inline Dfa canonical_order(Dfa const& d) {
    std::vector<state_type> id(d.state_count(), UINT32_MAX);
    std::vector<state_type> order{d.start()};
    id[d.start()] = 0;
    for (std::size_t cur = 0; cur < order.size(); ++cur) {
      for (letter_type x = 1; x <= d.alphabet_size(); ++x) {
        auto t = d.next(order[cur], x);
        if (id[t] == UINT32_MAX) {
          id[t] = static_cast<state_type>(order.size());
          order.push_back(t);
        }
      }
    }
    Dfa out(d.alphabet_size(), order.size());
    for (std::size_t s = 0; s < order.size(); ++s) {
      out.set_accepting(static_cast<state_type>(s), d.accepting(order[s]));
      for (letter_type x = 1; x <= d.alphabet_size(); ++x) {
        out.set_next(static_cast<state_type>(s), x, id[d.next(order[s], x)]);
      }
    }
    out.set_start(0);
    return out;
  }

  //! Minimal complete DFA for the same language, in canonical state order.
  //! Moore partition refinement on the reachable part.
  inline Dfa minimize(Dfa const& input) {
    Dfa const         d = canonical_order(input);
    std::size_t const S = d.state_count();
    std::size_t const n = d.alphabet_size();

    std::vector<state_type> block(S);
    for (std::size_t s = 0; s < S; ++s) {
      block[s] = d.accepting(static_cast<state_type>(s)) ? 1 : 0;
    }
    std::size_t blocks = 0;
    {
      bool any_acc = false, any_rej = false;
      for (std::size_t s = 0; s < S; ++s) {
        (block[s] ? any_acc : any_rej) = true;
      }
      blocks = static_cast<std::size_t>(any_acc) + static_cast<std::size_t>(any_rej);
      if (!any_rej) {
        std::fill(block.begin(), block.end(), 0);
      }
    }
    std::vector<state_type> signature(n + 1);
    for (;;) {
      std::map<std::vector<state_type>, state_type> ids;
      std::vector<state_type>                       next_block(S);
      for (std::size_t s = 0; s < S; ++s) {
        signature[0] = block[s];
        for (letter_type x = 1; x <= n; ++x) {
          signature[x] = block[d.next(static_cast<state_type>(s), x)];
        }
        auto [it, inserted] = ids.emplace(
            signature, static_cast<state_type>(ids.size()));
        next_block[s] = it->second;
      }
      block.swap(next_block);
      if (ids.size() == blocks) {
        break;
      }
      blocks = ids.size();
    }
    Dfa out(n, blocks);
    for (std::size_t s = 0; s < S; ++s) {
      out.set_accepting(block[s], d.accepting(static_cast<state_type>(s)));
      for (letter_type x = 1; x <= n; ++x) {
        out.set_next(block[s], x, block[d.next(static_cast<state_type>(s), x)]);
      }
    }
    out.set_start(block[d.start()]);
    return canonical_order(out);
  }

  inline Dfa complement(Dfa d) {
    for (state_type s = 0; s < d.state_count(); ++s) {
      d.set_accepting(s, !d.accepting(s));
    }
    return d;
  }

  struct EquivalenceResult {
    bool                     equivalent = true;
    std::optional<word_type> witness;  // shortest, length-lex least
  };

  //! Language equality by breadth-first search of the product automaton. On
  //! failure the witness is the length-lex least word accepted by exactly one
  //! of the automata.
  inline EquivalenceResult dfa_equivalent(Dfa const& a, Dfa const& b) {
    if (a.alphabet_size() != b.alphabet_size()) {
      throw Error("dfa_equivalent: alphabet sizes differ");
    }
    std::size_t const n  = a.alphabet_size();
    std::size_t const Sb = b.state_count();
    struct Parent {
      std::uint64_t from;
      letter_type   letter;
    };
    std::unordered_map<std::uint64_t, Parent> parent;
    auto key = [&](state_type x, state_type y) {
      return static_cast<std::uint64_t>(x) * Sb + y;
    };
    std::deque<std::pair<state_type, state_type>> queue{{a.start(), b.start()}};
    parent.emplace(key(a.start(), b.start()), Parent{UINT64_MAX, 0});
    while (!queue.empty()) {
      auto [x, y] = queue.front();
      queue.pop_front();
      if (a.accepting(x) != b.accepting(y)) {
        word_type     witness;
        std::uint64_t cur = key(x, y);
        while (parent.at(cur).from != UINT64_MAX) {
          witness.push_back(parent.at(cur).letter);
          cur = parent.at(cur).from;
        }
        std::reverse(witness.begin(), witness.end());
        return {false, witness};
      }
      for (letter_type l = 1; l <= n; ++l) {
        auto nx = a.next(x, l);
        auto ny = b.next(y, l);
        auto kk = key(nx, ny);
        if (!parent.contains(kk)) {
          parent.emplace(kk, Parent{key(x, y), l});
          queue.emplace_back(nx, ny);
        }
      }
    }
    return {true, std::nullopt};
  }

  //! Whether every word accepted by a is accepted by b; otherwise the
  //! witness is the length-lex least word accepted by a and not by b.
  inline EquivalenceResult dfa_included(Dfa const& a, Dfa const& b) {
    if (a.alphabet_size() != b.alphabet_size()) {
      throw Error("dfa_included: alphabet sizes differ");
    }
    std::size_t const n  = a.alphabet_size();
    std::size_t const Sb = b.state_count();
    std::vector<std::pair<std::uint64_t, letter_type>> parent;
    std::unordered_map<std::uint64_t, std::size_t>     index;
    std::vector<std::pair<state_type, state_type>>     order{{a.start(), b.start()}};
    index.emplace(static_cast<std::uint64_t>(a.start()) * Sb + b.start(), 0);
    parent.emplace_back(UINT64_MAX, 0);
    for (std::size_t head = 0; head < order.size(); ++head) {
      auto [x, y] = order[head];
      if (a.accepting(x) && !b.accepting(y)) {
        word_type witness;
        for (std::uint64_t cur = head; parent[cur].first != UINT64_MAX;
             cur               = parent[cur].first) {
          witness.push_back(parent[cur].second);
        }
        std::reverse(witness.begin(), witness.end());
        return {false, witness};
      }
      for (letter_type l = 1; l <= n; ++l) {
        auto nx = a.next(x, l);
        auto ny = b.next(y, l);
        if (index.emplace(static_cast<std::uint64_t>(nx) * Sb + ny, order.size())
                .second) {
          order.emplace_back(nx, ny);
          parent.emplace_back(head, l);
        }
      }
    }
    return {true, std::nullopt};
  }

  //! Number of accepted words of every length 0..max_length.
  inline std::vector<big_integer> count_words_up_to(Dfa const&  d,
                                                    std::size_t max_length) {
    std::vector<big_integer> out;
    std::vector<big_integer> cur(d.state_count()), next(d.state_count());
    cur[d.start()] = 1;
    for (std::size_t len = 0;; ++len) {
      big_integer total = 0;
      for (state_type s = 0; s < d.state_count(); ++s) {
        if (d.accepting(s)) {
          total += cur[s];
        }
      }
      out.push_back(total);
      if (len == max_length) {
        return out;
      }
      for (auto& x : next) {
        x = 0;
      }
      for (state_type s = 0; s < d.state_count(); ++s) {
        if (cur[s] == 0) {
          continue;
        }
        for (letter_type x = 1; x <= d.alphabet_size(); ++x) {
          next[d.next(s, x)] += cur[s];
        }
      }
      cur.swap(next);
    }
  }

  inline big_integer count_words(Dfa const& d, std::size_t length) {
    return count_words_up_to(d, length).back();
  }

  //! Sorted structured form: states, start, accepting, transitions.
  inline nlohmann::json to_json(Dfa const& d) {
    nlohmann::json accepting = nlohmann::json::array();
    for (state_type s = 0; s < d.state_count(); ++s) {
      if (d.accepting(s)) {
        accepting.push_back(s);
      }
    }
    nlohmann::json transitions = nlohmann::json::array();
    for (state_type s = 0; s < d.state_count(); ++s) {
      for (letter_type x = 1; x <= d.alphabet_size(); ++x) {
        transitions.push_back({s, x, d.next(s, x)});
      }
    }
    nlohmann::json out;
    out["states"]      = d.state_count();
    out["start"]       = d.start();
    out["accepting"]   = accepting;
    out["transitions"] = transitions;
    return out;
  }

  //! Graphviz description: accepting states are double circles, parallel
  //! edges are merged into one edge with a comma separated label.
  inline std::string to_dot(Dfa const& d, std::string const& name = "dfa") {
    std::ostringstream out;
    out << "digraph " << name << " {\n  rankdir=LR;\n";
    out << "  __start [shape=point];\n  __start -> " << d.start() << ";\n";
    for (state_type s = 0; s < d.state_count(); ++s) {
      out << "  " << s << " [label=\"" << s << "\", shape="
          << (d.accepting(s) ? "doublecircle" : "circle") << "];\n";
    }
    for (state_type s = 0; s < d.state_count(); ++s) {
      std::map<state_type, std::string> labels;
      for (letter_type x = 1; x <= d.alphabet_size(); ++x) {
        auto& l = labels[d.next(s, x)];
        l += (l.empty() ? "" : ",") + std::to_string(x);
      }
      for (auto const& [t, l] : labels) {
        out << "  " << s << " -> " << t << " [label=\"" << l << "\"];\n";
      }
    }
    out << "}\n";
    return out.str();
  }

}  // namespace dihedral

#endif  // DIHEDRAL_AUTOMATA_HPP_
