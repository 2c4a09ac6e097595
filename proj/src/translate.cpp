#include "hyperltl/translate.hpp"

namespace hyperltl {

bool TransitionGuard::matches(const Letter& letter) const {
  for (std::size_t i = 0; i < required.size(); ++i) {
    const PropSet p = letter.parts[i];
    if (!p.includes(required[i]) || p.intersects(forbidden[i])) return false;
  }
  if (bond_required.empty() && bond_forbidden.empty()) return true;
  const PropSet b = bonding->bond(letter.parts);
  return b.includes(bond_required) && !b.intersects(bond_forbidden);
}

bool TransitionGuard::satisfiable() const {
  if (bond_required.intersects(bond_forbidden)) return false;
  for (std::size_t i = 0; i < required.size(); ++i) {
    if (required[i].intersects(forbidden[i])) return false;
  }
  // Letters and bonded sets never contain the truth atom.
  if (bonding) {
    const PropSet tt = PropSet::single(bonding->vocabulary()->true_index());
    if (bond_required.intersects(tt)) return false;
    for (auto r : required) {
      if (r.intersects(tt)) return false;
    }
  }
  return true;
}

std::string format_label(const Vocabulary& vocab, const TransitionGuard& g) {
  std::string out = "[";
  auto literals = [&](PropSet pos, PropSet neg, const std::string& suffix) {
    std::string s;
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      if (pos.contains(i) || neg.contains(i)) {
        if (!s.empty()) s += " & ";
        s += (neg.contains(i) ? "!" : "") + vocab.name(i) + suffix;
      }
    }
    return s;
  };
  std::string body;
  for (std::size_t i = 0; i < g.required.size(); ++i) {
    std::string part = literals(g.required[i], g.forbidden[i], "_" + std::to_string(i + 1));
    if (part.empty()) continue;
    body += (body.empty() ? "" : " & ") + part;
  }
  std::string bonded = literals(g.bond_required, g.bond_forbidden, "");
  if (!bonded.empty()) body += (body.empty() ? "" : " & ") + bonded;
  return out + (body.empty() ? "true" : body) + "]";
}

namespace {

void collect_props(const Formula& f, std::vector<std::string>& out) {
  if (f->op() == Op::Prop) out.push_back(f->name());
  for (const auto& c : f->children()) collect_props(c, out);
}

class Bits {
 public:
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool includes(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((words_[i] & o.words_[i]) != o.words_[i]) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

GbaConstruction build_gba_construction(const Formula& psi, std::size_t n, const BondingPtr& bonding,
                                       std::size_t candidate_budget) {
  if (n < 1) throw std::invalid_argument("build_gba needs at least one path");
  if (!bonding) throw std::invalid_argument("build_gba needs a bonding table");
  if (!is_nnf(psi, n)) throw std::invalid_argument("not in negation normal form for " + std::to_string(n) + " paths: " + to_string(psi));
  const Vocabulary& vocab = *bonding->vocabulary();
  std::vector<std::string> names;
  collect_props(psi, names);
  for (const auto& name : names) {
    if (!vocab.find(name)) throw std::invalid_argument("unknown proposition '" + name + "'");
  }

  GbaConstruction c{Closure(psi), {}, {}, {}};
  const Closure& cl = c.closure;
  auto all_sets = maximal_consistent_sets(cl, candidate_budget);

  // Letter constraints depend only on the target state.
  std::vector<TransitionGuard> guards;
  for (auto& k : all_sets) {
    TransitionGuard g;
    g.required.assign(n, PropSet());
    g.forbidden.assign(n, PropSet());
    g.bonding = bonding;
    for (std::size_t i = 0; i < cl.size(); ++i) {
      if (!k[i]) continue;
      const Formula& f = cl[i];
      if (f->op() == Op::Focus) {
        auto lit = focus_literal(f);
        const bool neg = lit->literal->op() == Op::Not;
        const PropSet p = PropSet::single(vocab.index((neg ? lit->literal->child(0) : lit->literal)->name()));
        (neg ? g.forbidden : g.required)[lit->slot] |= p;
      } else if (f->op() == Op::Prop || (f->op() == Op::Not && f->child(0)->op() == Op::Prop)) {
        const bool neg = f->op() == Op::Not;
        const PropSet p = PropSet::single(vocab.index((neg ? f->child(0) : f)->name()));
        if (n == 1) (neg ? g.forbidden : g.required)[0] |= p;
        else (neg ? g.bond_forbidden : g.bond_required) |= p;
      }
    }
    if (!g.satisfiable()) continue;
    c.sets.push_back(std::move(k));
    guards.push_back(std::move(g));
  }

  // Obligations each state places on its successors.
  std::vector<Bits> members, owed;
  for (const auto& k : c.sets) {
    Bits m(cl.size()), o(cl.size());
    for (std::size_t i = 0; i < cl.size(); ++i) {
      if (!k[i]) continue;
      m.set(i);
      const Formula& f = cl[i];
      switch (f->op()) {
        case Op::Next:
          o.set(cl.at(f->child(0)));
          break;
        case Op::Until:
          if (!k[cl.at(f->child(1))]) o.set(i);
          break;
        case Op::Release:
          if (!k[cl.at(f->child(0))]) o.set(i);
          break;
        default:
          break;
      }
    }
    members.push_back(std::move(m));
    owed.push_back(std::move(o));
  }

  GuardedGba& a = c.automaton;
  a.alphabet = {bonding->vocabulary(), n};
  a.labels = guards;
  for (std::size_t i = 0; i < cl.size(); ++i) {
    if (cl[i]->op() == Op::Until) c.until_members.push_back(i);
  }
  a.accepting_sets.assign(c.until_members.size(), {});
  const StateId iota = a.add_state("iota");
  a.initial.push_back(iota);
  for (std::size_t s = 0; s < c.sets.size(); ++s) a.add_state("K" + std::to_string(s));
  for (std::size_t u = 0; u < c.until_members.size(); ++u) {
    const std::size_t ui = c.until_members[u];
    const std::size_t right = cl.at(cl[ui]->child(1));
    for (std::size_t s = 0; s < c.sets.size(); ++s) {
      a.accepting_sets[u][s + 1] = !c.sets[s][ui] || c.sets[s][right];
    }
  }
  const std::size_t root = cl.at(psi);
  for (std::size_t t = 0; t < c.sets.size(); ++t) {
    if (c.sets[t][root]) a.out[iota].push_back({static_cast<LabelId>(t), static_cast<StateId>(t + 1)});
  }
  for (std::size_t s = 0; s < c.sets.size(); ++s) {
    for (std::size_t t = 0; t < c.sets.size(); ++t) {
      if (members[t].includes(owed[s])) a.out[s + 1].push_back({static_cast<LabelId>(t), static_cast<StateId>(t + 1)});
    }
  }
  return c;
}

GuardedGba build_gba(const Formula& psi, std::size_t n, const BondingPtr& bonding, std::size_t candidate_budget) {
  return trim(build_gba_construction(psi, n, bonding, candidate_budget).automaton);
}

GuardedGba build_negation_gba(const Formula& psi, std::size_t n, const BondingPtr& bonding, std::size_t candidate_budget) {
  return build_gba(to_nnf(lnot(psi), n), n, bonding, candidate_budget);
}

}  // namespace hyperltl
