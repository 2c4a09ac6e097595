#pragma once

// Bulk evaluation of many formulas against one fixed set of lasso words.
//
// TruthTables evaluates formulas bottom-up, one bitmask of positions per
// word, and memoizes the shallow subformulas shared across a formula family.
// BatchAcceptor decides membership of every word in one Buchi automaton by
// grouping words on their cycle.  Both are cross-checked against the plain
// oracle and accepts() by the tests that use them.

#include <bit>
#include <cstdint>
#include <map>
#include <unordered_map>

#include "hyperltl/buchi.hpp"
#include "hyperltl/formula.hpp"
#include "hyperltl/system.hpp"

namespace testing_support {

using namespace hyperltl;

class WordSet {
 public:
  explicit WordSet(std::vector<LassoWord> words) : words_(std::move(words)) {
    for (const auto& w : words_) {
      if (w.prefix.size() + w.cycle.size() > 32) throw std::invalid_argument("WordSet: word too long");
      Encoded e;
      for (const auto& l : w.prefix) e.prefix.push_back(index_of(l));
      for (const auto& l : w.cycle) e.cycle.push_back(index_of(l));
      e.prefix_id = intern(prefixes_, prefix_ids_, e.prefix);
      e.cycle_id = intern(cycles_, cycle_ids_, e.cycle);
      encoded_.push_back(std::move(e));
    }
  }

  std::size_t size() const { return words_.size(); }
  const LassoWord& word(std::size_t k) const { return words_[k]; }
  const std::vector<Letter>& letters() const { return letters_; }

  struct Encoded {
    std::vector<std::uint32_t> prefix, cycle;
    std::uint32_t prefix_id = 0, cycle_id = 0;
    std::size_t length() const { return prefix.size() + cycle.size(); }
    std::uint32_t at(std::size_t t) const { return t < prefix.size() ? prefix[t] : cycle[t - prefix.size()]; }
  };
  const Encoded& encoded(std::size_t k) const { return encoded_[k]; }
  const std::vector<std::vector<std::uint32_t>>& prefixes() const { return prefixes_; }
  const std::vector<std::vector<std::uint32_t>>& cycles() const { return cycles_; }

 private:
  std::uint32_t index_of(const Letter& l) {
    auto [it, fresh] = letter_ids_.try_emplace(l, static_cast<std::uint32_t>(letters_.size()));
    if (fresh) letters_.push_back(l);
    return it->second;
  }
  static std::uint32_t intern(std::vector<std::vector<std::uint32_t>>& list,
                              std::map<std::vector<std::uint32_t>, std::uint32_t>& ids,
                              const std::vector<std::uint32_t>& seq) {
    auto [it, fresh] = ids.try_emplace(seq, static_cast<std::uint32_t>(list.size()));
    if (fresh) list.push_back(seq);
    return it->second;
  }

  std::vector<LassoWord> words_;
  std::vector<Encoded> encoded_;
  std::vector<Letter> letters_;
  std::unordered_map<Letter, std::uint32_t, LetterHash> letter_ids_;
  std::vector<std::vector<std::uint32_t>> prefixes_, cycles_;
  std::map<std::vector<std::uint32_t>, std::uint32_t> prefix_ids_, cycle_ids_;
};

/// Truth of a quantifier-free formula at every position of every word,
/// reading the i-th component of a letter as path i.
class TruthTables {
 public:
  using Table = std::vector<std::uint32_t>;

  TruthTables(const WordSet& words, const BondingTable& bonding, int memo_depth)
      : words_(words), bonding_(bonding), memo_depth_(memo_depth) {}

  /// Bit 0 of each mask: whether the word satisfies f.
  std::vector<bool> holds(const Formula& f) {
    const Table t = eval(f);
    std::vector<bool> out(t.size());
    for (std::size_t k = 0; k < t.size(); ++k) out[k] = t[k] & 1U;
    return out;
  }

  Table eval(const Formula& f) {
    const bool memo = f->depth() <= memo_depth_;
    std::string key;
    if (memo) {
      key = to_string(f);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    Table t = compute(f);
    if (memo) memo_.emplace(std::move(key), t);
    return t;
  }

 private:
  static std::uint32_t full(std::size_t len) { return len >= 32 ? ~0U : (1U << len) - 1; }

  std::uint32_t shift(std::uint32_t m, const WordSet::Encoded& e) const {
    // Bit t of the result is bit next(t) of m.
    const std::size_t len = e.length();
    std::uint32_t r = (m >> 1) & full(len - 1);
    if ((m >> e.prefix.size()) & 1U) r |= 1U << (len - 1);
    return r;
  }

  bool slot_holds(const Formula& f, PropSet s) const {
    switch (f->op()) {
      case Op::True: return true;
      case Op::False: return false;
      case Op::Prop: return s.contains(bonding_.vocabulary()->index(f->name()));
      case Op::Not: return !slot_holds(f->child(0), s);
      case Op::And: return slot_holds(f->child(0), s) && slot_holds(f->child(1), s);
      case Op::Or: return slot_holds(f->child(0), s) || slot_holds(f->child(1), s);
      case Op::Implies: return !slot_holds(f->child(0), s) || slot_holds(f->child(1), s);
      case Op::Iff: return slot_holds(f->child(0), s) == slot_holds(f->child(1), s);
      default: throw std::invalid_argument("TruthTables: temporal focus slot");
    }
  }

  Table compute(const Formula& f) {
    const std::size_t count = words_.size();
    Table out(count, 0);
    auto letter_mask = [&](auto&& pred) {
      std::vector<char> per(words_.letters().size());
      for (std::size_t i = 0; i < per.size(); ++i) per[i] = pred(words_.letters()[i]);
      for (std::size_t k = 0; k < count; ++k) {
        const auto& e = words_.encoded(k);
        std::uint32_t m = 0;
        for (std::size_t t = 0; t < e.length(); ++t) m |= static_cast<std::uint32_t>(per[e.at(t)]) << t;
        out[k] = m;
      }
    };
    switch (f->op()) {
      case Op::True:
        for (std::size_t k = 0; k < count; ++k) out[k] = full(words_.encoded(k).length());
        break;
      case Op::False:
        break;
      case Op::Prop: {
        const std::size_t i = bonding_.vocabulary()->index(f->name());
        letter_mask([&](const Letter& l) {
          return (l.parts.size() == 1 ? l.parts[0] : bonding_.bond(l.parts)).contains(i);
        });
        break;
      }
      case Op::Focus:
        letter_mask([&](const Letter& l) {
          for (std::size_t i = 0; i < l.parts.size(); ++i) {
            if (!slot_holds(f->child(i), l.parts[i])) return false;
          }
          return true;
        });
        break;
      case Op::Not: {
        const Table a = eval(f->child(0));
        for (std::size_t k = 0; k < count; ++k) out[k] = ~a[k] & full(words_.encoded(k).length());
        break;
      }
      case Op::And:
      case Op::Or: {
        const Table a = eval(f->child(0)), b = eval(f->child(1));
        for (std::size_t k = 0; k < count; ++k) out[k] = f->op() == Op::And ? a[k] & b[k] : a[k] | b[k];
        break;
      }
      case Op::Next: {
        const Table a = eval(f->child(0));
        for (std::size_t k = 0; k < count; ++k) out[k] = shift(a[k], words_.encoded(k));
        break;
      }
      case Op::Until:
      case Op::Release: {
        const Table a = eval(f->child(0)), b = eval(f->child(1));
        const bool until = f->op() == Op::Until;
        for (std::size_t k = 0; k < count; ++k) {
          const auto& e = words_.encoded(k);
          std::uint32_t z = until ? 0 : full(e.length());
          while (true) {
            const std::uint32_t step = until ? (b[k] | (a[k] & shift(z, e))) : (b[k] & (a[k] | shift(z, e)));
            if (step == z) break;
            z = step;
          }
          out[k] = z;
        }
        break;
      }
      default:
        throw std::invalid_argument("TruthTables: formula is not in negation normal form");
    }
    return out;
  }

  const WordSet& words_;
  const BondingTable& bonding_;
  int memo_depth_;
  std::unordered_map<std::string, Table> memo_;
};

/// Membership of every word of a WordSet in one Buchi automaton.
template <class Label>
std::vector<bool> batch_accepts(const BasicBuchi<Label>& a, const WordSet& words) {
  const std::size_t n = a.num_states();
  const std::size_t sigma = words.letters().size();
  // succ[q * sigma + x]: successors of q on letter x.
  std::vector<std::vector<StateId>> succ(n * sigma);
  for (std::size_t x = 0; x < sigma; ++x) {
    std::vector<std::int8_t> ok(a.labels.size(), -1);
    for (StateId q = 0; q < n; ++q) {
      for (const auto& e : a.out[q]) {
        auto& m = ok[e.label];
        if (m < 0) m = a.labels[e.label].matches(words.letters()[x]) ? 1 : 0;
        if (m) succ[q * sigma + x].push_back(e.dst);
      }
    }
  }

  // States reached after each prefix.
  std::vector<std::vector<bool>> after(words.prefixes().size());
  for (std::size_t p = 0; p < after.size(); ++p) {
    std::vector<bool> cur(n, false);
    for (StateId q : a.initial) cur[q] = true;
    for (auto x : words.prefixes()[p]) {
      std::vector<bool> nxt(n, false);
      for (StateId q = 0; q < n; ++q) {
        if (!cur[q]) continue;
        for (StateId d : succ[q * sigma + x]) nxt[d] = true;
      }
      cur = std::move(nxt);
    }
    after[p] = std::move(cur);
  }

  std::vector<std::vector<bool>> good(words.cycles().size());
  if (n <= 64) {
    // Per cycle v: the graph on states with q -> q' when v leads from q to
    // q', marked when that stretch can visit an accepting state.  A state is
    // good when it reaches a marked edge lying on a cycle.
    std::vector<std::uint64_t> mask(n * sigma, 0);
    for (std::size_t i = 0; i < mask.size(); ++i) {
      for (StateId d : succ[i]) mask[i] |= std::uint64_t{1} << d;
    }
    std::uint64_t fin = 0;
    for (StateId q = 0; q < n; ++q) fin |= static_cast<std::uint64_t>(a.accepting[q]) << q;
    auto image = [&](std::uint64_t set, std::uint32_t x) {
      std::uint64_t r = 0;
      for (; set; set &= set - 1) r |= mask[static_cast<std::size_t>(std::countr_zero(set)) * sigma + x];
      return r;
    };
    std::vector<std::uint64_t> step(n), marked(n), closure(n);
    for (std::size_t c = 0; c < good.size(); ++c) {
      for (StateId q = 0; q < n; ++q) {
        std::uint64_t plain = std::uint64_t{1} << q, seen = 0;
        for (auto x : words.cycles()[c]) {
          seen = image(seen, x);
          plain = image(plain, x);
          seen |= plain & fin;
        }
        step[q] = plain;
        marked[q] = seen;
        closure[q] = plain;
      }
      for (StateId k = 0; k < n; ++k) {
        for (StateId q = 0; q < n; ++q) {
          if ((closure[q] >> k) & 1U) closure[q] |= closure[k];
        }
      }
      std::uint64_t lasso = 0;
      for (StateId r = 0; r < n; ++r) {
        for (std::uint64_t m = marked[r]; m; m &= m - 1) {
          const auto d = static_cast<std::size_t>(std::countr_zero(m));
          if (d == r || ((closure[d] >> r) & 1U)) lasso |= std::uint64_t{1} << r;
        }
      }
      std::vector<bool> g(n);
      for (StateId q = 0; q < n; ++q) g[q] = ((lasso >> q) & 1U) || (closure[q] & lasso);
      good[c] = std::move(g);
    }
  } else {
    // Product nodes (q, t); good = can reach an accepting node on a cycle.
    for (std::size_t c = 0; c < good.size(); ++c) {
      const auto& cyc = words.cycles()[c];
      const std::size_t len = cyc.size();
      detail::Adjacency adj(n * len);
      for (StateId q = 0; q < n; ++q) {
        for (std::size_t t = 0; t < len; ++t) {
          for (StateId d : succ[q * sigma + cyc[t]]) adj[q * len + t].push_back(static_cast<StateId>(d * len + (t + 1) % len));
        }
      }
      std::uint32_t count = 0;
      const auto comp = detail::scc_ids(adj, count);
      const auto cyclic = detail::cyclic_nodes(adj, comp, count);
      std::vector<std::vector<StateId>> members(count);
      for (StateId v = 0; v < adj.size(); ++v) members[comp[v]].push_back(v);
      std::vector<bool> good_comp(count, false);
      for (std::uint32_t k = 0; k < count; ++k) {
        for (StateId v : members[k]) {
          if (cyclic[v] && a.accepting[v / len]) good_comp[k] = true;
          for (StateId w : adj[v]) good_comp[k] = good_comp[k] || good_comp[comp[w]];
        }
      }
      std::vector<bool> g(n);
      for (StateId q = 0; q < n; ++q) g[q] = good_comp[comp[q * len]];
      good[c] = std::move(g);
    }
  }

  std::vector<bool> out(words.size(), false);
  for (std::size_t k = 0; k < words.size(); ++k) {
    const auto& e = words.encoded(k);
    const auto& s = after[e.prefix_id];
    const auto& g = good[e.cycle_id];
    for (StateId q = 0; q < n && !out[k]; ++q) out[k] = s[q] && g[q];
  }
  return out;
}

}  // namespace testing_support
