#pragma once

// Omega-automata over tuple alphabets.
//
// A letter is an n-tuple of atom sets (one per quantified path).  Automata
// keep a table of distinct transition labels and edges refer to labels by
// index.  Labels are either concrete letters or guards; a guard type only
// needs `bool matches(const Letter&) const`.  Complementation and emptiness
// work on concrete automata.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperltl/alphabet.hpp"
#include "hyperltl/formula.hpp"

namespace hyperltl {

struct Letter {
  std::vector<PropSet> parts;

  Letter() = default;
  explicit Letter(std::vector<PropSet> p) : parts(std::move(p)) {}
  std::size_t arity() const { return parts.size(); }
  bool matches(const Letter& other) const { return *this == other; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

struct LetterHash {
  std::size_t operator()(const Letter& l) const {
    std::size_t h = l.parts.size();
    for (auto p : l.parts) h = h * 0x100000001b3ULL ^ std::hash<std::uint64_t>{}(p.bits());
    return h;
  }
};

std::string format_letter(const Vocabulary& vocab, const Letter& l);

/// An ultimately periodic word prefix . cycle^omega.
struct LassoWord {
  std::vector<Letter> prefix;
  std::vector<Letter> cycle;

  std::size_t arity() const;
  /// Letter at 0-based position t of the infinite word.
  const Letter& at(std::size_t t) const;

  friend bool operator==(const LassoWord&, const LassoWord&) = default;
  friend auto operator<=>(const LassoWord&, const LassoWord&) = default;
};

/// Shortest representation: primitive cycle, then shortest prefix.  Two
/// lassos denote the same infinite word iff their canonical forms are equal.
LassoWord canonical(const LassoWord& w);
bool same_word(const LassoWord& a, const LassoWord& b);

/// Tuple of words to word of tuples.  Components may have any arity; their
/// parts are concatenated.  Prefixes are padded to the longest one and the
/// cycle length is the lcm of the component cycle lengths.
LassoWord zip(const std::vector<LassoWord>& components);
/// Splits a word of n-tuples into n words of 1-tuples.
std::vector<LassoWord> unzip(const LassoWord& w);

struct Alphabet {
  VocabularyPtr vocabulary;
  std::size_t arity = 1;
};

/// Every letter over the alphabet's atoms: P(Atoms)^arity.
std::vector<Letter> all_letters(const Alphabet& alphabet);

using StateId = std::uint32_t;
using LabelId = std::uint32_t;

struct Edge {
  LabelId label;
  StateId dst;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Interns letters so that equal letters share one label id.
class LetterTable {
 public:
  LabelId intern(const Letter& l) {
    auto [it, inserted] = index_.emplace(l, static_cast<LabelId>(letters_.size()));
    if (inserted) letters_.push_back(l);
    return it->second;
  }
  const std::vector<Letter>& letters() const { return letters_; }
  std::vector<Letter> release() { return std::move(letters_); }

 private:
  std::vector<Letter> letters_;
  std::unordered_map<Letter, LabelId, LetterHash> index_;
};

/// Shared shape of plain and generalized automata.
template <class Label>
struct AutomatonGraph {
  Alphabet alphabet;
  std::vector<Label> labels;
  std::vector<std::vector<Edge>> out;
  std::vector<StateId> initial;
  std::vector<std::string> names;

  std::size_t num_states() const { return out.size(); }
  std::size_t num_transitions() const {
    std::size_t n = 0;
    for (const auto& e : out) n += e.size();
    return n;
  }
  StateId add_state(std::string name = {}) {
    out.emplace_back();
    names.push_back(std::move(name));
    return static_cast<StateId>(out.size() - 1);
  }
  const Label& label(const Edge& e) const { return labels[e.label]; }
};

template <class Label>
struct BasicBuchi : AutomatonGraph<Label> {
  std::vector<bool> accepting;

  StateId add_state(bool acc, std::string name = {}) {
    accepting.push_back(acc);
    return AutomatonGraph<Label>::add_state(std::move(name));
  }
  bool all_accepting() const { return std::all_of(accepting.begin(), accepting.end(), [](bool b) { return b; }); }
};

template <class Label>
struct BasicGeneralizedBuchi : AutomatonGraph<Label> {
  /// An empty list means every infinite run is accepting.
  std::vector<std::vector<bool>> accepting_sets;

  StateId add_state(std::string name = {}) {
    for (auto& f : accepting_sets) f.push_back(false);
    return AutomatonGraph<Label>::add_state(std::move(name));
  }
};

using BuchiAutomaton = BasicBuchi<Letter>;
using GeneralizedBuchiAutomaton = BasicGeneralizedBuchi<Letter>;

struct AutomatonSize {
  std::size_t states = 0;
  std::size_t transitions = 0;
};
template <class A>
AutomatonSize size_of(const A& a) {
  return {a.num_states(), a.num_transitions()};
}

// ---------------------------------------------------------------------------
// Trimming.

namespace detail {

template <class Graph>
std::vector<StateId> reachable_order(const Graph& g) {
  std::vector<bool> seen(g.num_states(), false);
  std::vector<StateId> order;
  std::deque<StateId> work;
  for (StateId s : g.initial) {
    if (!seen[s]) {
      seen[s] = true;
      order.push_back(s);
      work.push_back(s);
    }
  }
  while (!work.empty()) {
    StateId s = work.front();
    work.pop_front();
    for (const auto& e : g.out[s]) {
      if (!seen[e.dst]) {
        seen[e.dst] = true;
        order.push_back(e.dst);
        work.push_back(e.dst);
      }
    }
  }
  return order;
}

/// Restricts to `keep` (in that order) and drops unused labels.
template <class Graph>
void restrict_states(Graph& g, const std::vector<StateId>& keep) {
  constexpr StateId kGone = ~StateId{0};
  std::vector<StateId> remap(g.num_states(), kGone);
  for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<StateId>(i);
  std::vector<std::vector<Edge>> out(keep.size());
  std::vector<std::string> names(keep.size());
  std::vector<LabelId> label_remap(g.labels.size(), ~LabelId{0});
  decltype(g.labels) labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    names[i] = std::move(g.names[keep[i]]);
    for (const auto& e : g.out[keep[i]]) {
      if (remap[e.dst] == kGone) continue;
      if (label_remap[e.label] == ~LabelId{0}) {
        label_remap[e.label] = static_cast<LabelId>(labels.size());
        labels.push_back(g.labels[e.label]);
      }
      out[i].push_back({label_remap[e.label], remap[e.dst]});
    }
    std::sort(out[i].begin(), out[i].end(), [](const Edge& a, const Edge& b) {
      return a.dst != b.dst ? a.dst < b.dst : a.label < b.label;
    });
    out[i].erase(std::unique(out[i].begin(), out[i].end()), out[i].end());
  }
  std::vector<StateId> initial;
  for (StateId s : g.initial) {
    if (remap[s] != kGone) initial.push_back(remap[s]);
  }
  std::sort(initial.begin(), initial.end());
  initial.erase(std::unique(initial.begin(), initial.end()), initial.end());
  g.out = std::move(out);
  g.names = std::move(names);
  g.labels = std::move(labels);
  g.initial = std::move(initial);
}

}  // namespace detail

/// Removes states unreachable from the initial states.
template <class Label>
BasicBuchi<Label> trim(BasicBuchi<Label> a) {
  auto keep = detail::reachable_order(a);
  std::vector<bool> acc;
  for (StateId s : keep) acc.push_back(a.accepting[s]);
  detail::restrict_states(a, keep);
  a.accepting = std::move(acc);
  return a;
}

template <class Label>
BasicGeneralizedBuchi<Label> trim(BasicGeneralizedBuchi<Label> a) {
  auto keep = detail::reachable_order(a);
  for (auto& f : a.accepting_sets) {
    std::vector<bool> nf;
    for (StateId s : keep) nf.push_back(f[s]);
    f = std::move(nf);
  }
  detail::restrict_states(a, keep);
  return a;
}

/// Additionally removes states from which no accepting cycle is reachable.
BuchiAutomaton prune_useless(BuchiAutomaton a);

// ---------------------------------------------------------------------------
// Degeneralization: state x index of the next awaited accepting set.

template <class Label>
BasicBuchi<Label> degeneralize(const BasicGeneralizedBuchi<Label>& g) {
  const std::size_t n = g.num_states();
  std::vector<std::vector<bool>> sets = g.accepting_sets;
  if (sets.empty()) sets.emplace_back(n, true);
  const std::size_t m = sets.size();

  BasicBuchi<Label> b;
  b.alphabet = g.alphabet;
  b.labels = g.labels;
  std::unordered_map<std::uint64_t, StateId> ids;
  std::deque<std::pair<StateId, std::size_t>> work;
  auto get = [&](StateId s, std::size_t i) {
    const std::uint64_t key = static_cast<std::uint64_t>(s) * m + i;
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    std::string name = g.names[s];
    if (m > 1) name += "#" + std::to_string(i);
    StateId id = b.add_state(i == 0 && sets[0][s], std::move(name));
    ids.emplace(key, id);
    work.emplace_back(s, i);
    return id;
  };
  for (StateId s : g.initial) b.initial.push_back(get(s, 0));
  while (!work.empty()) {
    auto [s, i] = work.front();
    work.pop_front();
    const StateId from = ids.at(static_cast<std::uint64_t>(s) * m + i);
    const std::size_t next = sets[i][s] ? (i + 1) % m : i;
    for (const auto& e : g.out[s]) {
      StateId to = get(e.dst, next);
      b.out[from].push_back({e.label, to});
    }
  }
  return b;
}

// ---------------------------------------------------------------------------
// Products.

/// n-fold self-composition: states S^n, initial S0^n, accepting F^n, letters
/// are n-tuples.  Accepting F^n gives exactly the zips of accepted words when
/// `a` accepts on every state (as system automata do).
BuchiAutomaton self_compose(const BuchiAutomaton& a, std::size_t n);

class AlphabetMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Standard Buchi product; the second operand may carry guards, which are
/// instantiated against the letters of the first.
template <class Label>
BuchiAutomaton intersect(const BuchiAutomaton& a, const BasicBuchi<Label>& b) {
  if (a.alphabet.arity != b.alphabet.arity) {
    throw AlphabetMismatch("cannot intersect automata of arity " + std::to_string(a.alphabet.arity) + " and " +
                           std::to_string(b.alphabet.arity));
  }
  // Which side decides acceptance.  With one side accepting everywhere the
  // product needs no copy counter.
  enum class Mode { Left, Right, Counter };
  const Mode mode = b.all_accepting() ? Mode::Left : a.all_accepting() ? Mode::Right : Mode::Counter;
  const std::uint64_t nb = b.num_states();

  BuchiAutomaton r;
  r.alphabet = a.alphabet;
  r.labels = a.labels;
  // matches[a_label * |b labels| + b_label], computed lazily.
  std::vector<std::int8_t> match(a.labels.size() * b.labels.size(), -1);
  auto matches = [&](LabelId la, LabelId lb) {
    auto& m = match[static_cast<std::size_t>(la) * b.labels.size() + lb];
    if (m < 0) m = b.labels[lb].matches(a.labels[la]) ? 1 : 0;
    return m == 1;
  };
  std::unordered_map<std::uint64_t, StateId> ids;
  std::deque<std::uint64_t> work;
  auto get = [&](StateId p, StateId q, unsigned c) {
    const std::uint64_t key = (static_cast<std::uint64_t>(p) * nb + q) * 2 + c;
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    bool acc = false;
    switch (mode) {
      case Mode::Left:
        acc = a.accepting[p];
        break;
      case Mode::Right:
        acc = b.accepting[q];
        break;
      case Mode::Counter:
        acc = c == 0 && a.accepting[p];
        break;
    }
    StateId id = r.add_state(acc, "(" + a.names[p] + "," + b.names[q] + (mode == Mode::Counter ? "," + std::to_string(c) : "") + ")");
    ids.emplace(key, id);
    work.push_back(key);
    return id;
  };
  for (StateId p : a.initial) {
    for (StateId q : b.initial) r.initial.push_back(get(p, q, 0));
  }
  while (!work.empty()) {
    const std::uint64_t key = work.front();
    work.pop_front();
    const unsigned c = key % 2;
    const StateId q = static_cast<StateId>((key / 2) % nb);
    const StateId p = static_cast<StateId>((key / 2) / nb);
    const StateId from = ids.at(key);
    unsigned next = c;
    if (mode == Mode::Counter) {
      if (c == 0 && a.accepting[p]) next = 1;
      else if (c == 1 && b.accepting[q]) next = 0;
    }
    for (const auto& ea : a.out[p]) {
      for (const auto& eb : b.out[q]) {
        if (!matches(ea.label, eb.label)) continue;
        const StateId to = get(ea.dst, eb.dst, next);
        r.out[from].push_back({ea.label, to});
      }
    }
  }
  return trim(std::move(r));
}

/// Keeps the first k components of every letter.
BuchiAutomaton project(const BuchiAutomaton& a, std::size_t k);

// ---------------------------------------------------------------------------
// Complementation.

enum class ComplementMethod {
  /// Deterministic and weak inputs get their exact polynomial or breakpoint
  /// constructions; everything else is rank based.
  Automatic,
  RankBased,
  Breakpoint,
  Deterministic,
};

inline constexpr std::size_t kDefaultComplementBudget = 1'000'000;

struct ComplementOptions {
  ComplementMethod method = ComplementMethod::Automatic;
  std::size_t state_budget = kDefaultComplementBudget;
};

class ComplementBudgetExceeded : public StateBudgetError {
 public:
  using StateBudgetError::StateBudgetError;
};

/// Complement relative to the given alphabet: accepts exactly the words over
/// `letters` that `a` rejects.
BuchiAutomaton complement(const BuchiAutomaton& a, const std::vector<Letter>& letters, const ComplementOptions& options = {});
/// Complement over the full alphabet P(Atoms)^arity.
BuchiAutomaton complement(const BuchiAutomaton& a, const ComplementOptions& options = {});

bool is_deterministic(const BuchiAutomaton& a);
/// Every strongly connected component is all accepting or all rejecting.
bool is_weak(const BuchiAutomaton& a);

// ---------------------------------------------------------------------------
// Emptiness and membership.

/// Nested depth-first search.  Returns a word of the language when it is
/// non-empty; the word follows a shortest path to an accepting state on a
/// cycle, then a shortest cycle through it.
std::optional<LassoWord> is_empty_witness(const BuchiAutomaton& a);
inline bool is_empty(const BuchiAutomaton& a) { return !is_empty_witness(a).has_value(); }

/// Exact membership of an ultimately periodic word.
template <class Label>
bool accepts(const BasicBuchi<Label>& a, const LassoWord& w);

/// Membership in a generalized automaton, through degeneralization.
template <class Label>
bool accepts(const BasicGeneralizedBuchi<Label>& g, const LassoWord& w) {
  return accepts(degeneralize(g), w);
}

/// Debug dump in the line format used by system files.
template <class Label>
std::string dump(const BasicBuchi<Label>& a);

// ---------------------------------------------------------------------------
// Small automata used by tests and the checker.

/// One accepting state with a self-loop on every given letter.
BuchiAutomaton universal_automaton(const Alphabet& alphabet, const std::vector<Letter>& letters);
/// No states at all.
BuchiAutomaton empty_automaton(const Alphabet& alphabet);
/// Accepts exactly the given word.
BuchiAutomaton lasso_automaton(const Alphabet& alphabet, const LassoWord& w);

}  // namespace hyperltl

#include "hyperltl/buchi_impl.hpp"
