#include "hyperltl/oracle.hpp"

#include <numeric>
#include <set>

namespace hyperltl {

namespace {

using Word = std::vector<PropSet>;

// One path as plain atom sets.
struct Path {
  Word stem;
  Word loop;
};

Path path_of(const LassoWord& w) {
  Path p;
  for (const auto& l : w.prefix) p.stem.push_back(l.parts.at(0));
  for (const auto& l : w.cycle) p.loop.push_back(l.parts.at(0));
  if (p.loop.empty()) throw std::invalid_argument("oracle: lasso with an empty cycle");
  return p;
}

Path normalize(Path p) {
  const std::size_t n = p.loop.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = p.loop[i] == p.loop[i % d];
    if (ok) {
      p.loop.resize(d);
      break;
    }
  }
  while (!p.stem.empty() && p.stem.back() == p.loop.back()) {
    p.loop.insert(p.loop.begin(), p.loop.back());
    p.loop.pop_back();
    p.stem.pop_back();
  }
  return p;
}

LassoWord word_of(const Path& p) {
  LassoWord w;
  for (auto s : p.stem) w.prefix.push_back(Letter({s}));
  for (auto s : p.loop) w.cycle.push_back(Letter({s}));
  return w;
}

// The tuple unrolled to a common stem and period.
class Frame {
 public:
  explicit Frame(const std::vector<Path>& paths) {
    std::size_t stem = 0, period = 1;
    for (const auto& p : paths) {
      stem = std::max(stem, p.stem.size());
      period = std::lcm(period, p.loop.size());
    }
    stem_ = stem;
    length_ = stem + period;
    sets_.assign(paths.size(), Word(length_));
    for (std::size_t c = 0; c < paths.size(); ++c) {
      for (std::size_t t = 0; t < length_; ++t) {
        const auto& p = paths[c];
        sets_[c][t] = t < p.stem.size() ? p.stem[t] : p.loop[(t - p.stem.size()) % p.loop.size()];
      }
    }
  }

  std::size_t length() const { return length_; }
  std::size_t next(std::size_t t) const { return t + 1 < length_ ? t + 1 : stem_; }
  PropSet at(std::size_t component, std::size_t t) const { return sets_[component][t]; }
  std::size_t width() const { return sets_.size(); }

 private:
  std::size_t stem_ = 0;
  std::size_t length_ = 0;
  std::vector<Word> sets_;
};

using Truth = std::vector<bool>;

class Evaluator {
 public:
  Evaluator(const Frame& frame, const BondingTable& bonding) : frame_(frame), bonding_(bonding) {}

  // Truth at every position of the sub-tuple `paths` (indices into frame).
  Truth eval(const Formula& f, const std::vector<std::size_t>& paths) {
    const std::size_t len = frame_.length();
    Truth v(len, false);
    switch (f->op()) {
      case Op::True:
        v.assign(len, true);
        break;
      case Op::False:
        break;
      case Op::Prop: {
        auto i = bonding_.vocabulary()->find(f->name());
        if (!i) throw std::invalid_argument("oracle: unknown proposition '" + f->name() + "'");
        for (std::size_t t = 0; t < len; ++t) {
          std::vector<PropSet> tuple;
          for (auto c : paths) tuple.push_back(frame_.at(c, t));
          PropSet bonded = tuple.size() == 1 ? tuple[0] : bonding_.bond(tuple);
          v[t] = bonded.contains(*i);
        }
        break;
      }
      case Op::Not: {
        auto a = eval(f->child(0), paths);
        for (std::size_t t = 0; t < len; ++t) v[t] = !a[t];
        break;
      }
      case Op::Or:
      case Op::And:
      case Op::Implies:
      case Op::Iff: {
        auto a = eval(f->child(0), paths);
        auto b = eval(f->child(1), paths);
        for (std::size_t t = 0; t < len; ++t) {
          switch (f->op()) {
            case Op::Or: v[t] = a[t] || b[t]; break;
            case Op::And: v[t] = a[t] && b[t]; break;
            case Op::Implies: v[t] = !a[t] || b[t]; break;
            default: v[t] = a[t] == b[t]; break;
          }
        }
        break;
      }
      case Op::Focus: {
        if (f->children().size() != paths.size()) {
          throw std::invalid_argument("oracle: focus of arity " + std::to_string(f->children().size()) + " over " +
                                      std::to_string(paths.size()) + " paths");
        }
        v.assign(len, true);
        for (std::size_t i = 0; i < paths.size(); ++i) {
          auto s = eval(f->child(i), {paths[i]});
          for (std::size_t t = 0; t < len; ++t) v[t] = v[t] && s[t];
        }
        break;
      }
      case Op::Next: {
        auto a = eval(f->child(0), paths);
        for (std::size_t t = 0; t < len; ++t) v[t] = a[frame_.next(t)];
        break;
      }
      case Op::Until:
      case Op::Release: {
        auto a = eval(f->child(0), paths);
        auto b = eval(f->child(1), paths);
        const bool until = f->op() == Op::Until;
        for (std::size_t t = 0; t < len; ++t) {
          // After len steps every position of the loop has been seen.
          bool result = !until;
          std::size_t j = t;
          for (std::size_t step = 0; step <= len; ++step, j = frame_.next(j)) {
            if (until) {
              if (b[j]) {
                result = true;
                break;
              }
              if (!a[j]) break;
            } else {
              if (!b[j]) {
                result = false;
                break;
              }
              if (a[j]) break;
            }
          }
          v[t] = result;
        }
        break;
      }
      case Op::Finally:
      case Op::Globally: {
        auto a = eval(f->child(0), paths);
        const bool some = f->op() == Op::Finally;
        for (std::size_t t = 0; t < len; ++t) {
          bool result = !some;
          std::size_t j = t;
          for (std::size_t step = 0; step <= len; ++step, j = frame_.next(j)) {
            if (a[j] == some) {
              result = some;
              break;
            }
          }
          v[t] = result;
        }
        break;
      }
    }
    return v;
  }

 private:
  const Frame& frame_;
  const BondingTable& bonding_;
};

bool body_holds(const std::vector<Path>& paths, const Formula& psi, const BondingTable& bonding) {
  Frame frame(paths);
  Evaluator e(frame, bonding);
  std::vector<std::size_t> all(paths.size());
  std::iota(all.begin(), all.end(), 0);
  return e.eval(psi, all)[0];
}

bool quantify(std::vector<Path>& paths, const Formula& psi, const std::vector<Path>& domain, const BondingTable& bonding,
              const std::vector<Quantifier>& quants, std::size_t next) {
  if (next == quants.size()) return body_holds(paths, psi, bonding);
  const bool universal = quants[next] == Quantifier::Universal;
  for (const auto& p : domain) {
    paths.push_back(p);
    const bool r = quantify(paths, psi, domain, bonding, quants, next + 1);
    paths.pop_back();
    if (r != universal) return r;
  }
  return universal;
}

}  // namespace

std::vector<LassoWord> enumerate_lassos(const SystemModel& m, std::size_t max_len) {
  std::set<std::pair<Word, Word>> seen;
  std::vector<StateId> seq;
  auto emit = [&]() {
    const StateId last = seq.back();
    const auto& succ = m.successors(last);
    for (std::size_t j = 0; j < seq.size(); ++j) {
      if (std::find(succ.begin(), succ.end(), seq[j]) == succ.end()) continue;
      Path p;
      for (std::size_t i = 0; i < seq.size(); ++i) (i < j ? p.stem : p.loop).push_back(m.label(seq[i]));
      p = normalize(std::move(p));
      seen.emplace(p.stem, p.loop);
    }
  };
  std::function<void()> extend = [&]() {
    emit();
    if (seq.size() == max_len) return;
    for (StateId t : m.successors(seq.back())) {
      seq.push_back(t);
      extend();
      seq.pop_back();
    }
  };
  for (StateId s : m.initial()) {
    seq.assign(1, s);
    extend();
  }
  std::vector<LassoWord> out;
  for (const auto& [stem, loop] : seen) out.push_back(word_of({stem, loop}));
  return out;
}

bool in_oracle_envelope(const SystemModel& m) {
  const std::size_t n = m.num_states();
  std::vector<bool> reach(n, false);
  std::vector<StateId> work(m.initial().begin(), m.initial().end());
  for (StateId s : work) reach[s] = true;
  while (!work.empty()) {
    StateId s = work.back();
    work.pop_back();
    for (StateId t : m.successors(s)) {
      if (!reach[t]) {
        reach[t] = true;
        work.push_back(t);
      }
    }
  }
  // Closed reachability between states, by repeated search.
  auto reaches = [&](StateId from) {
    std::vector<bool> r(n, false);
    std::vector<StateId> stack{from};
    while (!stack.empty()) {
      StateId s = stack.back();
      stack.pop_back();
      for (StateId t : m.successors(s)) {
        if (!r[t]) {
          r[t] = true;
          stack.push_back(t);
        }
      }
    }
    return r;
  };
  for (StateId s = 0; s < n; ++s) {
    if (!reach[s]) continue;
    const auto r = reaches(s);
    if (!r[s]) continue;
    // s lies on a cycle: it must have exactly one successor, and that
    // successor must lead back to s.
    if (m.successors(s).size() != 1) return false;
    if (!reaches(m.successors(s).front())[s]) return false;
  }
  return true;
}

bool oracle_eval(const std::vector<LassoWord>& gamma, const Formula& psi, const std::vector<LassoWord>& domain,
                 const BondingTable& bonding, const QuantifierPrefix& remaining) {
  std::vector<Path> paths, dom;
  for (const auto& w : gamma) paths.push_back(path_of(w));
  for (const auto& w : domain) dom.push_back(path_of(w));
  return quantify(paths, psi, dom, bonding, remaining.quantifiers(), 0);
}

bool oracle_eval(const std::vector<LassoWord>& gamma, const Formula& psi, const BondingTable& bonding) {
  return oracle_eval(gamma, psi, {}, bonding, QuantifierPrefix());
}

bool oracle_holds(const SystemModel& m, const QuantifiedFormula& qf, std::size_t max_len) {
  const auto domain = enumerate_lassos(m, max_len ? max_len : m.num_states());
  return oracle_eval({}, qf.body, domain, *m.bonding(), qf.prefix);
}

}  // namespace hyperltl
