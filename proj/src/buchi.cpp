#include "hyperltl/buchi.hpp"

#include <map>
#include <numeric>

namespace hyperltl {

std::string format_letter(const Vocabulary& vocab, const Letter& l) {
  std::string out = "(";
  for (std::size_t i = 0; i < l.parts.size(); ++i) {
    if (i) out += ",";
    out += vocab.format(l.parts[i]);
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Lasso words.

std::size_t LassoWord::arity() const {
  if (!cycle.empty()) return cycle.front().arity();
  return prefix.empty() ? 0 : prefix.front().arity();
}

const Letter& LassoWord::at(std::size_t t) const {
  if (t < prefix.size()) return prefix[t];
  return cycle[(t - prefix.size()) % cycle.size()];
}

LassoWord canonical(const LassoWord& w) {
  LassoWord r = w;
  const std::size_t c = r.cycle.size();
  for (std::size_t p = 1; p < c; ++p) {
    if (c % p) continue;
    bool periodic = true;
    for (std::size_t i = p; i < c && periodic; ++i) periodic = r.cycle[i] == r.cycle[i - p];
    if (periodic) {
      r.cycle.resize(p);
      break;
    }
  }
  while (!r.prefix.empty() && !r.cycle.empty() && r.prefix.back() == r.cycle.back()) {
    std::rotate(r.cycle.rbegin(), r.cycle.rbegin() + 1, r.cycle.rend());
    r.prefix.pop_back();
  }
  return r;
}

bool same_word(const LassoWord& a, const LassoWord& b) { return canonical(a) == canonical(b); }

LassoWord zip(const std::vector<LassoWord>& components) {
  if (components.empty()) throw std::invalid_argument("zip of no words");
  std::size_t stem = 0;
  std::size_t period = 1;
  for (const auto& w : components) {
    if (w.cycle.empty()) throw std::invalid_argument("lasso word with an empty cycle");
    stem = std::max(stem, w.prefix.size());
    period = std::lcm(period, w.cycle.size());
  }
  LassoWord r;
  for (std::size_t t = 0; t < stem + period; ++t) {
    Letter l;
    for (const auto& w : components) {
      const auto& parts = w.at(t).parts;
      l.parts.insert(l.parts.end(), parts.begin(), parts.end());
    }
    (t < stem ? r.prefix : r.cycle).push_back(std::move(l));
  }
  return r;
}

std::vector<LassoWord> unzip(const LassoWord& w) {
  std::vector<LassoWord> out(w.arity());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& l : w.prefix) out[i].prefix.push_back(Letter({l.parts[i]}));
    for (const auto& l : w.cycle) out[i].cycle.push_back(Letter({l.parts[i]}));
  }
  return out;
}

std::vector<Letter> all_letters(const Alphabet& alphabet) {
  const std::size_t atoms = alphabet.vocabulary->num_atoms();
  if (atoms * alphabet.arity > 20) {
    throw std::invalid_argument("alphabet of " + std::to_string(atoms) + " atoms and arity " + std::to_string(alphabet.arity) +
                                " is too large to enumerate");
  }
  const std::uint64_t per = std::uint64_t{1} << atoms;
  std::vector<Letter> out;
  std::vector<std::uint64_t> digits(alphabet.arity, 0);
  while (true) {
    Letter l;
    for (auto d : digits) l.parts.emplace_back(d);
    out.push_back(std::move(l));
    std::size_t i = alphabet.arity;
    while (i > 0 && ++digits[i - 1] == per) digits[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph utilities.

namespace detail {

std::vector<std::uint32_t> scc_ids(const Adjacency& adj, std::uint32_t& count, const std::vector<StateId>& roots) {
  const std::size_t n = adj.size();
  std::vector<std::uint32_t> comp(n, kNoComponent);
  std::vector<std::uint32_t> index(n, kNoComponent), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<StateId> stack;
  std::vector<std::pair<StateId, std::size_t>> call;
  std::uint32_t next_index = 0;
  count = 0;
  auto visit = [&](StateId root) {
    if (index[root] != kNoComponent) return;
    call.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      if (i < adj[v].size()) {
        StateId w = adj[v][i++];
        if (index[w] == kNoComponent) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const StateId done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        StateId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != done);
        ++count;
      }
    }
  };
  if (roots.empty()) {
    for (StateId v = 0; v < n; ++v) visit(v);
  } else {
    for (StateId v : roots) visit(v);
  }
  return comp;
}

// Nodes lying on some cycle, given component ids.
std::vector<bool> cyclic_nodes(const Adjacency& adj, const std::vector<std::uint32_t>& comp, std::uint32_t count) {
  std::vector<std::uint32_t> size(count, 0);
  for (auto c : comp) {
    if (c != kNoComponent) ++size[c];
  }
  std::vector<bool> cyclic(adj.size(), false);
  for (StateId v = 0; v < adj.size(); ++v) {
    if (comp[v] == kNoComponent) continue;
    if (size[comp[v]] > 1) {
      cyclic[v] = true;
    } else {
      cyclic[v] = std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
    }
  }
  return cyclic;
}

bool has_reachable_accepting_cycle(const Adjacency& adj, const std::vector<StateId>& initial,
                                   const std::vector<bool>& accepting) {
  if (initial.empty()) return false;
  std::uint32_t count = 0;
  auto comp = scc_ids(adj, count, initial);
  auto cyclic = cyclic_nodes(adj, comp, count);
  for (StateId v = 0; v < adj.size(); ++v) {
    if (cyclic[v] && accepting[v]) return true;
  }
  return false;
}

}  // namespace detail

namespace {

detail::Adjacency adjacency(const BuchiAutomaton& a) {
  detail::Adjacency adj(a.num_states());
  for (StateId s = 0; s < a.num_states(); ++s) {
    for (const auto& e : a.out[s]) adj[s].push_back(e.dst);
  }
  return adj;
}

}  // namespace

BuchiAutomaton prune_useless(BuchiAutomaton a) {
  a = trim(std::move(a));
  const auto adj = adjacency(a);
  std::uint32_t count = 0;
  const auto comp = detail::scc_ids(adj, count);
  std::vector<std::uint32_t> size(count, 0);
  for (auto c : comp) ++size[c];
  // Components come in reverse topological order, so successors are settled
  // before their predecessors.
  std::vector<std::vector<StateId>> members(count);
  for (StateId v = 0; v < adj.size(); ++v) members[comp[v]].push_back(v);
  std::vector<bool> good_comp(count, false);
  for (std::uint32_t c = 0; c < count; ++c) {
    bool good = false;
    for (StateId v : members[c]) {
      const bool cyclic = size[c] > 1 || std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
      if (cyclic && a.accepting[v]) good = true;
      for (StateId w : adj[v]) {
        if (comp[w] != c && good_comp[comp[w]]) good = true;
      }
    }
    good_comp[c] = good;
  }
  std::vector<StateId> keep;
  std::vector<bool> acc;
  for (StateId v = 0; v < adj.size(); ++v) {
    if (good_comp[comp[v]]) {
      keep.push_back(v);
      acc.push_back(a.accepting[v]);
    }
  }
  detail::restrict_states(a, keep);
  a.accepting = std::move(acc);
  return a;
}

// ---------------------------------------------------------------------------
// Products and projection.

BuchiAutomaton self_compose(const BuchiAutomaton& a, std::size_t n) {
  if (n < 1) throw std::invalid_argument("self-composition needs n >= 1");
  if (a.alphabet.arity != 1) throw std::invalid_argument("self-composition needs an automaton over 1-tuples");
  BuchiAutomaton r;
  r.alphabet = {a.alphabet.vocabulary, n};
  LetterTable letters;
  std::map<std::vector<StateId>, StateId> ids;
  std::deque<std::vector<StateId>> work;
  auto get = [&](const std::vector<StateId>& tuple) {
    auto it = ids.find(tuple);
    if (it != ids.end()) return it->second;
    bool acc = true;
    std::string name = "(";
    for (std::size_t i = 0; i < n; ++i) {
      acc = acc && a.accepting[tuple[i]];
      name += (i ? "," : "") + a.names[tuple[i]];
    }
    StateId id = r.add_state(acc, name + ")");
    ids.emplace(tuple, id);
    work.push_back(tuple);
    return id;
  };

  std::vector<StateId> tuple(n);
  std::function<void(std::size_t)> initial = [&](std::size_t i) {
    if (i == n) {
      r.initial.push_back(get(tuple));
      return;
    }
    for (StateId s : a.initial) {
      tuple[i] = s;
      initial(i + 1);
    }
  };
  initial(0);

  while (!work.empty()) {
    const std::vector<StateId> src = work.front();
    work.pop_front();
    const StateId from = ids.at(src);
    std::vector<StateId> dst(n);
    std::vector<PropSet> parts(n);
    std::function<void(std::size_t)> expand = [&](std::size_t i) {
      if (i == n) {
        StateId to = get(dst);
        r.out[from].push_back({letters.intern(Letter(parts)), to});
        return;
      }
      for (const auto& e : a.out[src[i]]) {
        dst[i] = e.dst;
        parts[i] = a.labels[e.label].parts[0];
        expand(i + 1);
      }
    };
    expand(0);
  }
  r.labels = letters.release();
  return r;
}

BuchiAutomaton project(const BuchiAutomaton& a, std::size_t k) {
  if (k < 1 || k > a.alphabet.arity) {
    throw std::invalid_argument("projection to " + std::to_string(k) + " components of an arity " +
                                std::to_string(a.alphabet.arity) + " automaton");
  }
  BuchiAutomaton r;
  r.alphabet = {a.alphabet.vocabulary, k};
  r.initial = a.initial;
  r.accepting = a.accepting;
  r.names = a.names;
  LetterTable letters;
  std::vector<LabelId> remap(a.labels.size());
  for (std::size_t i = 0; i < a.labels.size(); ++i) {
    const auto& parts = a.labels[i].parts;
    remap[i] = letters.intern(Letter(std::vector<PropSet>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(k))));
  }
  r.out.resize(a.num_states());
  for (StateId s = 0; s < a.num_states(); ++s) {
    for (const auto& e : a.out[s]) r.out[s].push_back({remap[e.label], e.dst});
    std::sort(r.out[s].begin(), r.out[s].end());
    r.out[s].erase(std::unique(r.out[s].begin(), r.out[s].end()), r.out[s].end());
  }
  r.labels = letters.release();
  return r;
}

// ---------------------------------------------------------------------------
// Complementation.

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<std::uint32_t>& v) const {
    std::size_t h = v.size();
    for (auto x : v) h = (h ^ x) * 0x100000001b3ULL;
    return h;
  }
};

// Successor sets indexed by letter, over a trimmed automaton whose labels
// are mapped onto an explicit letter list.
struct LetterGraph {
  std::size_t states = 0;
  std::size_t letters = 0;
  std::vector<std::vector<std::vector<StateId>>> succ;  // [state][letter]
  std::vector<StateId> initial;
  std::vector<bool> accepting;

  LetterGraph(const BuchiAutomaton& a, const std::vector<Letter>& alphabet) {
    states = a.num_states();
    letters = alphabet.size();
    initial = a.initial;
    accepting = a.accepting;
    std::unordered_map<Letter, std::size_t, LetterHash> index;
    for (std::size_t i = 0; i < alphabet.size(); ++i) index.emplace(alphabet[i], i);
    std::vector<std::size_t> label_letter(a.labels.size(), letters);
    for (std::size_t i = 0; i < a.labels.size(); ++i) {
      auto it = index.find(a.labels[i]);
      if (it != index.end()) label_letter[i] = it->second;
    }
    succ.assign(states, std::vector<std::vector<StateId>>(letters));
    for (StateId s = 0; s < states; ++s) {
      for (const auto& e : a.out[s]) {
        if (label_letter[e.label] < letters) succ[s][label_letter[e.label]].push_back(e.dst);
      }
      for (auto& v : succ[s]) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
      }
    }
  }

  std::vector<StateId> post(const std::vector<StateId>& set, std::size_t letter) const {
    std::vector<StateId> out;
    for (StateId s : set) out.insert(out.end(), succ[s][letter].begin(), succ[s][letter].end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

// Builds the output automaton, mapping macro-state keys to ids.
class MacroBuilder {
 public:
  MacroBuilder(const Alphabet& alphabet, const std::vector<Letter>& letters, std::size_t budget) : budget_(budget) {
    r_.alphabet = alphabet;
    r_.labels = letters;
  }

  // Returns the id and whether the state is new.
  std::pair<StateId, bool> get(const std::vector<std::uint32_t>& key, bool accepting) {
    auto it = ids_.find(key);
    if (it != ids_.end()) return {it->second, false};
    if (r_.num_states() >= budget_) {
      throw ComplementBudgetExceeded("complementation exceeded the budget of " + std::to_string(budget_) + " states",
                                     budget_);
    }
    StateId id = r_.add_state(accepting);
    ids_.emplace(key, id);
    return {id, true};
  }
  void edge(StateId from, std::size_t letter, StateId to) { r_.out[from].push_back({static_cast<LabelId>(letter), to}); }
  void initial(StateId s) { r_.initial.push_back(s); }
  BuchiAutomaton finish() { return trim(std::move(r_)); }

 private:
  BuchiAutomaton r_;
  std::size_t budget_;
  std::unordered_map<std::vector<std::uint32_t>, StateId, VecHash> ids_;
};

BuchiAutomaton complement_deterministic(const LetterGraph& g, const Alphabet& alphabet, const std::vector<Letter>& letters,
                                        std::size_t budget) {
  // Complete with a rejecting sink, then guess the point after which the
  // unique run avoids accepting states forever.
  const StateId sink = static_cast<StateId>(g.states);
  auto step = [&](StateId s, std::size_t l) -> StateId {
    if (s == sink || g.succ[s][l].empty()) return sink;
    return g.succ[s][l].front();
  };
  auto accepting = [&](StateId s) { return s != sink && g.accepting[s]; };
  MacroBuilder b(alphabet, letters, budget);
  std::deque<std::vector<std::uint32_t>> work;
  auto get = [&](StateId s, bool copy) {
    std::vector<std::uint32_t> key{s, copy ? 1U : 0U};
    auto [id, fresh] = b.get(key, copy);
    if (fresh) work.push_back(key);
    return id;
  };
  b.initial(get(g.initial.empty() ? sink : g.initial.front(), false));
  while (!work.empty()) {
    auto key = work.front();
    work.pop_front();
    const StateId s = key[0];
    const bool copy = key[1] == 1;
    const StateId from = get(s, copy);
    for (std::size_t l = 0; l < letters.size(); ++l) {
      const StateId t = step(s, l);
      if (!copy) b.edge(from, l, get(t, false));
      if (!accepting(t)) b.edge(from, l, get(t, true));
    }
  }
  return b.finish();
}

BuchiAutomaton complement_breakpoint(const LetterGraph& g, const Alphabet& alphabet, const std::vector<Letter>& letters,
                                     std::size_t budget) {
  // Every run must keep returning to a rejecting state.  O holds the runs
  // that still owe such a visit since the last breakpoint.
  auto owing = [&](const std::vector<StateId>& set) {
    std::vector<StateId> out;
    for (StateId s : set) {
      if (g.accepting[s]) out.push_back(s);
    }
    return out;
  };
  auto key_of = [](const std::vector<StateId>& s, const std::vector<StateId>& o) {
    std::vector<std::uint32_t> key{static_cast<std::uint32_t>(s.size())};
    key.insert(key.end(), s.begin(), s.end());
    key.insert(key.end(), o.begin(), o.end());
    return key;
  };
  MacroBuilder b(alphabet, letters, budget);
  std::deque<std::pair<std::vector<StateId>, std::vector<StateId>>> work;
  auto get = [&](std::vector<StateId> s, std::vector<StateId> o) {
    auto [id, fresh] = b.get(key_of(s, o), o.empty());
    if (fresh) work.emplace_back(std::move(s), std::move(o));
    return id;
  };
  std::vector<StateId> init = g.initial;
  std::sort(init.begin(), init.end());
  b.initial(get(init, owing(init)));
  while (!work.empty()) {
    auto [s, o] = work.front();
    work.pop_front();
    const StateId from = get(s, o);
    for (std::size_t l = 0; l < letters.size(); ++l) {
      auto s2 = g.post(s, l);
      auto o2 = owing(o.empty() ? s2 : g.post(o, l));
      b.edge(from, l, get(std::move(s2), std::move(o2)));
    }
  }
  return b.finish();
}

// Enumerates tight level rankings below given bounds: accepting states get
// even ranks, the maximal rank r is odd and every odd rank up to r occurs.
class TightRankings {
 public:
  TightRankings(const std::vector<StateId>& states, const std::vector<std::uint32_t>& bound, const std::vector<bool>& accepting)
      : states_(states), bound_(bound), accepting_(accepting), rank_(states.size()) {}

  template <class F>
  void each(F&& emit) {
    if (states_.empty()) {
      emit(rank_);
      return;
    }
    std::size_t rejecting = 0;
    std::uint32_t top = 0;
    for (std::size_t i = 0; i < states_.size(); ++i) {
      if (!accepting_[states_[i]]) {
        ++rejecting;
        top = std::max(top, bound_[i]);
      }
    }
    if (rejecting == 0) return;
    const std::uint32_t max_r = std::min<std::uint32_t>(static_cast<std::uint32_t>(2 * rejecting - 1), top);
    for (std::uint32_t r = 1; r <= max_r; r += 2) {
      used_.assign(r / 2 + 1, 0);
      missing_ = r / 2 + 1;
      remaining_rejecting_ = rejecting;
      assign(0, r, emit);
    }
  }

 private:
  template <class F>
  void assign(std::size_t i, std::uint32_t r, F& emit) {
    if (missing_ > remaining_rejecting_) return;
    if (i == states_.size()) {
      if (missing_ == 0) emit(rank_);
      return;
    }
    const bool acc = accepting_[states_[i]];
    if (!acc) --remaining_rejecting_;
    const std::uint32_t hi = std::min(bound_[i], r);
    for (std::uint32_t v = 0; v <= hi; ++v) {
      if (acc && v % 2) continue;
      rank_[i] = v;
      const bool odd = v % 2 == 1;
      if (odd && used_[v / 2]++ == 0) --missing_;
      assign(i + 1, r, emit);
      if (odd && --used_[v / 2] == 0) ++missing_;
    }
    if (!acc) ++remaining_rejecting_;
  }

  const std::vector<StateId>& states_;
  const std::vector<std::uint32_t>& bound_;
  const std::vector<bool>& accepting_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint32_t> used_;
  std::size_t missing_ = 0;
  std::size_t remaining_rejecting_ = 0;
};

BuchiAutomaton complement_rank_based(const LetterGraph& g, const Alphabet& alphabet, const std::vector<Letter>& letters,
                                     std::size_t budget) {
  struct Macro {
    bool ranked = false;
    std::vector<StateId> s;
    std::vector<std::uint32_t> rank;
    std::vector<StateId> o;
  };
  auto key_of = [](const Macro& m) {
    std::vector<std::uint32_t> key{m.ranked ? 1U : 0U, static_cast<std::uint32_t>(m.s.size())};
    key.insert(key.end(), m.s.begin(), m.s.end());
    key.insert(key.end(), m.rank.begin(), m.rank.end());
    key.insert(key.end(), m.o.begin(), m.o.end());
    return key;
  };
  MacroBuilder b(alphabet, letters, budget);
  std::deque<Macro> work;
  auto get = [&](Macro m) {
    auto [id, fresh] = b.get(key_of(m), m.ranked && m.o.empty());
    if (fresh) work.push_back(std::move(m));
    return id;
  };
  auto even_part = [](const std::vector<StateId>& set, const std::vector<StateId>& s, const std::vector<std::uint32_t>& rank) {
    std::vector<StateId> out;
    for (StateId q : set) {
      auto it = std::lower_bound(s.begin(), s.end(), q);
      if (rank[static_cast<std::size_t>(it - s.begin())] % 2 == 0) out.push_back(q);
    }
    return out;
  };

  Macro start;
  start.s = g.initial;
  std::sort(start.s.begin(), start.s.end());
  b.initial(get(start));
  const auto never = static_cast<std::uint32_t>(2 * g.states + 2);
  while (!work.empty()) {
    Macro m = std::move(work.front());
    work.pop_front();
    const StateId from = get(m);
    for (std::size_t l = 0; l < letters.size(); ++l) {
      std::vector<StateId> s2 = g.post(m.s, l);
      std::vector<std::uint32_t> bound(s2.size(), never);
      if (m.ranked) {
        for (std::size_t i = 0; i < m.s.size(); ++i) {
          for (StateId t : g.succ[m.s[i]][l]) {
            auto j = static_cast<std::size_t>(std::lower_bound(s2.begin(), s2.end(), t) - s2.begin());
            bound[j] = std::min(bound[j], m.rank[i]);
          }
        }
      } else {
        Macro plain;
        plain.s = s2;
        b.edge(from, l, get(std::move(plain)));
      }
      std::vector<StateId> o_base = m.ranked && !m.o.empty() ? g.post(m.o, l) : s2;
      TightRankings(s2, bound, g.accepting).each([&](const std::vector<std::uint32_t>& rank) {
        Macro next;
        next.ranked = true;
        next.s = s2;
        next.rank = rank;
        next.o = even_part(o_base, s2, rank);
        b.edge(from, l, get(std::move(next)));
      });
    }
  }
  return b.finish();
}

}  // namespace

bool is_deterministic(const BuchiAutomaton& a) {
  if (a.initial.size() > 1) return false;
  for (const auto& edges : a.out) {
    std::vector<LabelId> seen;
    for (const auto& e : edges) seen.push_back(e.label);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  // Distinct label ids always carry distinct letters in concrete automata
  // built here, but check the letters themselves to be safe.
  for (const auto& edges : a.out) {
    std::vector<Letter> seen;
    for (const auto& e : edges) seen.push_back(a.labels[e.label]);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
  }
  return true;
}

bool is_weak(const BuchiAutomaton& a) {
  const auto adj = adjacency(a);
  std::uint32_t count = 0;
  const auto comp = detail::scc_ids(adj, count);
  std::vector<int> kind(count, -1);
  for (StateId v = 0; v < adj.size(); ++v) {
    bool internal = false;
    for (StateId w : adj[v]) internal = internal || comp[w] == comp[v];
    if (!internal) continue;
    const int k = a.accepting[v] ? 1 : 0;
    if (kind[comp[v]] == -1) kind[comp[v]] = k;
    else if (kind[comp[v]] != k) return false;
  }
  return true;
}

BuchiAutomaton complement(const BuchiAutomaton& a, const std::vector<Letter>& letters, const ComplementOptions& options) {
  const BuchiAutomaton pruned = prune_useless(a);
  const LetterGraph g(pruned, letters);
  ComplementMethod method = options.method;
  if (method == ComplementMethod::Automatic) {
    if (is_deterministic(pruned)) method = ComplementMethod::Deterministic;
    else if (is_weak(pruned)) method = ComplementMethod::Breakpoint;
    else method = ComplementMethod::RankBased;
  }
  switch (method) {
    case ComplementMethod::Deterministic:
      if (!is_deterministic(pruned)) throw std::invalid_argument("automaton is not deterministic");
      return complement_deterministic(g, a.alphabet, letters, options.state_budget);
    case ComplementMethod::Breakpoint:
      if (!is_weak(pruned)) throw std::invalid_argument("automaton is not weak");
      return complement_breakpoint(g, a.alphabet, letters, options.state_budget);
    default:
      return complement_rank_based(g, a.alphabet, letters, options.state_budget);
  }
}

BuchiAutomaton complement(const BuchiAutomaton& a, const ComplementOptions& options) {
  return complement(a, all_letters(a.alphabet), options);
}

// ---------------------------------------------------------------------------
// Emptiness.

namespace {

bool red_search(const BuchiAutomaton& a, StateId seed, std::vector<bool>& red) {
  std::vector<std::pair<StateId, std::size_t>> stack{{seed, 0}};
  while (!stack.empty()) {
    auto& [s, i] = stack.back();
    if (i == a.out[s].size()) {
      stack.pop_back();
      continue;
    }
    const StateId t = a.out[s][i++].dst;
    if (t == seed) return true;
    if (!red[t]) {
      red[t] = true;
      stack.emplace_back(t, 0);
    }
  }
  return false;
}

bool nested_dfs(const BuchiAutomaton& a) {
  std::vector<bool> blue(a.num_states(), false), red(a.num_states(), false);
  std::vector<StateId> roots = a.initial;
  std::sort(roots.begin(), roots.end());
  for (StateId root : roots) {
    if (blue[root]) continue;
    blue[root] = true;
    std::vector<std::pair<StateId, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [s, i] = stack.back();
      if (i < a.out[s].size()) {
        const StateId t = a.out[s][i++].dst;
        if (!blue[t]) {
          blue[t] = true;
          stack.emplace_back(t, 0);
        }
        continue;
      }
      const StateId done = s;
      stack.pop_back();
      if (a.accepting[done] && red_search(a, done, red)) return true;
    }
  }
  return false;
}

// Breadth-first path from any of `sources` to the first state satisfying
// `target`, as (letters, end state).  Edges leaving `allowed` are skipped.
template <class Target, class Allowed>
std::optional<std::pair<std::vector<Letter>, StateId>> bfs_path(const BuchiAutomaton& a, const std::vector<StateId>& sources,
                                                                Target target, Allowed allowed) {
  constexpr StateId kNone = ~StateId{0};
  std::vector<StateId> parent(a.num_states(), kNone);
  std::vector<LabelId> via(a.num_states(), 0);
  std::vector<bool> seen(a.num_states(), false);
  std::deque<StateId> work;
  for (StateId s : sources) {
    if (!seen[s]) {
      seen[s] = true;
      work.push_back(s);
    }
  }
  while (!work.empty()) {
    const StateId s = work.front();
    work.pop_front();
    if (target(s)) {
      std::vector<Letter> path;
      for (StateId v = s; parent[v] != kNone; v = parent[v]) path.push_back(a.labels[via[v]]);
      std::reverse(path.begin(), path.end());
      return std::make_pair(std::move(path), s);
    }
    for (const auto& e : a.out[s]) {
      if (seen[e.dst] || !allowed(e.dst)) continue;
      seen[e.dst] = true;
      parent[e.dst] = s;
      via[e.dst] = e.label;
      work.push_back(e.dst);
    }
  }
  return std::nullopt;
}

LassoWord shortest_witness(const BuchiAutomaton& a) {
  const auto adj = adjacency(a);
  std::uint32_t count = 0;
  std::vector<StateId> roots = a.initial;
  std::sort(roots.begin(), roots.end());
  const auto comp = detail::scc_ids(adj, count, roots);
  const auto cyclic = detail::cyclic_nodes(adj, comp, count);
  auto stem = bfs_path(
      a, roots, [&](StateId s) { return cyclic[s] && a.accepting[s]; }, [](StateId) { return true; });
  if (!stem) throw std::logic_error("nested DFS found a cycle that breadth-first search cannot reach");
  const StateId q = stem->second;
  // Shortest cycle through q: a shortest path from a successor back to q.
  std::optional<std::pair<std::vector<Letter>, StateId>> best;
  for (const auto& e : a.out[q]) {
    if (comp[e.dst] != comp[q]) continue;
    auto back = bfs_path(
        a, {e.dst}, [&](StateId s) { return s == q; }, [&](StateId s) { return comp[s] == comp[q]; });
    if (!back) continue;
    back->first.insert(back->first.begin(), a.labels[e.label]);
    if (!best || back->first.size() < best->first.size()) best = std::move(back);
  }
  LassoWord w;
  w.prefix = std::move(stem->first);
  w.cycle = std::move(best->first);
  return canonical(w);
}

}  // namespace

std::optional<LassoWord> is_empty_witness(const BuchiAutomaton& a) {
  if (!nested_dfs(a)) return std::nullopt;
  return shortest_witness(a);
}

// ---------------------------------------------------------------------------
// Small automata.

BuchiAutomaton universal_automaton(const Alphabet& alphabet, const std::vector<Letter>& letters) {
  BuchiAutomaton r;
  r.alphabet = alphabet;
  r.labels = letters;
  StateId s = r.add_state(true, "u");
  r.initial.push_back(s);
  for (std::size_t i = 0; i < letters.size(); ++i) r.out[s].push_back({static_cast<LabelId>(i), s});
  return r;
}

BuchiAutomaton empty_automaton(const Alphabet& alphabet) {
  BuchiAutomaton r;
  r.alphabet = alphabet;
  return r;
}

BuchiAutomaton lasso_automaton(const Alphabet& alphabet, const LassoWord& w) {
  if (w.cycle.empty()) throw std::invalid_argument("lasso word with an empty cycle");
  BuchiAutomaton r;
  r.alphabet = alphabet;
  LetterTable letters;
  const std::size_t len = w.prefix.size() + w.cycle.size();
  for (std::size_t t = 0; t < len; ++t) r.add_state(true, std::to_string(t));
  r.initial.push_back(0);
  for (std::size_t t = 0; t < len; ++t) {
    const std::size_t next = t + 1 < len ? t + 1 : w.prefix.size();
    r.out[t].push_back({letters.intern(w.at(t)), static_cast<StateId>(next)});
  }
  r.labels = letters.release();
  return r;
}

}  // namespace hyperltl
