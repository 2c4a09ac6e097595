#pragma once

// Structural scans over constructions, written against the formula AST
// directly rather than through the library's own checks.

#include <string>

#include "hyperltl/buchi.hpp"
#include "hyperltl/checker.hpp"
#include "hyperltl/translate.hpp"

namespace testing_support {

using namespace hyperltl;

inline bool audit_is_literal(const Formula& f) {
  return f->op() == Op::Prop || (f->op() == Op::Not && f->child(0)->op() == Op::Prop);
}

/// Negations only on propositions, no derived connectives, and every focus
/// holds one literal with the remaining slots true.
inline bool audit_nnf(const Formula& f, std::size_t n) {
  switch (f->op()) {
    case Op::Prop:
      return true;
    case Op::Not:
      return f->child(0)->op() == Op::Prop;
    case Op::And:
    case Op::Or:
    case Op::Until:
    case Op::Release:
      return audit_nnf(f->child(0), n) && audit_nnf(f->child(1), n);
    case Op::Next:
      return audit_nnf(f->child(0), n);
    case Op::Focus: {
      if (f->children().size() != n) return false;
      std::size_t literals = 0;
      for (const auto& slot : f->children()) {
        if (is_true_constant(slot)) continue;
        if (!audit_is_literal(slot)) return false;
        ++literals;
      }
      return literals == 1;
    }
    default:
      return false;
  }
}

inline Formula audit_complement(const Formula& f) {
  if (f->op() == Op::Not) return f->child(0);
  if (f->op() == Op::Focus) {
    std::vector<Formula> slots;
    for (const auto& s : f->children()) slots.push_back(is_true_constant(s) ? s : audit_complement(s));
    return focus(slots);
  }
  return lnot(f);
}

/// Returns an empty string when k satisfies the six conditions and decides
/// every complementary pair of the closure, else a description.
inline std::string audit_consistent_set(const Closure& cl, const ConsistentSet& k) {
  auto in = [&](const Formula& g) -> int {
    auto i = cl.index_of(g);
    return i ? static_cast<int>(k[*i]) : -1;
  };
  for (std::size_t i = 0; i < cl.size(); ++i) {
    const Formula& f = cl[i];
    const int self = k[i], other = in(audit_complement(f));
    if (other < 0) return "complement of " + to_string(f) + " missing from the closure";
    if (self + other != 1) return "not exactly one of " + to_string(f) + " and its complement";
    if (!self) continue;
    switch (f->op()) {
      case Op::And:
        if (in(f->child(0)) != 1 || in(f->child(1)) != 1) return "conjunction " + to_string(f) + " without both sides";
        break;
      case Op::Or:
        if (in(f->child(0)) != 1 && in(f->child(1)) != 1) return "disjunction " + to_string(f) + " without a side";
        break;
      case Op::Until:
        if (in(f->child(0)) != 1 && in(f->child(1)) != 1) return "until " + to_string(f) + " without an argument";
        break;
      case Op::Release:
        if (in(f->child(1)) != 1) return "release " + to_string(f) + " without its second argument";
        break;
      default:
        break;
    }
  }
  for (std::size_t i = 0; i < cl.size(); ++i) {
    const Formula& f = cl[i];
    if (k[i] || (f->op() != Op::And && f->op() != Op::Or)) continue;
    const bool a = in(f->child(0)) == 1, b = in(f->child(1)) == 1;
    if (f->op() == Op::And ? a && b : a || b) return to_string(f) + " missing although its arguments are present";
  }
  return {};
}

/// State 0 is in no accepting set; state i > 0 is in the set of until
/// formula u exactly when u is absent or its second argument is present.
inline std::string audit_until_sets(const GbaConstruction& c) {
  const auto& g = c.automaton;
  if (g.accepting_sets.size() != c.until_members.size()) return "accepting set count differs from until count";
  for (std::size_t s = 0; s < c.until_members.size(); ++s) {
    const Formula& u = c.closure[c.until_members[s]];
    if (u->op() != Op::Until) return "accepting set " + std::to_string(s) + " is not tied to an until formula";
    const std::size_t rhs = c.closure.at(u->child(1));
    if (g.accepting_sets[s][0]) return "initial state is accepting";
    for (std::size_t q = 1; q < g.num_states(); ++q) {
      const auto& k = c.sets[q - 1];
      if (g.accepting_sets[s][q] != (!k[c.until_members[s]] || k[rhs])) {
        return "state " + std::to_string(q) + " misplaced for " + to_string(u);
      }
    }
  }
  return {};
}

struct StructuralAudit {
  std::size_t nnf_checked = 0, sets_checked = 0, until_checked = 0, witnesses_checked = 0;
  std::vector<std::string> failures;

  void fail(std::string what) {
    if (failures.size() < 20) failures.push_back(std::move(what));
  }

  void formula(const Formula& f, std::size_t n) {
    ++nnf_checked;
    if (!audit_nnf(f, n)) fail("not in NNF: " + to_string(f));
  }

  void construction(const GbaConstruction& c) {
    formula(c.closure.root(), c.automaton.alphabet.arity);
    for (const auto& k : c.sets) {
      ++sets_checked;
      if (auto why = audit_consistent_set(c.closure, k); !why.empty()) fail(why);
    }
    ++until_checked;
    if (auto why = audit_until_sets(c); !why.empty()) fail(why);
  }

  template <class Label>
  void emptiness(const BasicBuchi<Label>& a, const std::optional<LassoWord>& w) {
    if (!w) return;
    ++witnesses_checked;
    if (!accepts(a, *w)) fail("emptiness witness rejected by its automaton");
  }

  bool ok() const { return failures.empty(); }

  CheckOptions hooks() {
    CheckOptions o;
    o.on_construction = [this](const GbaConstruction& c) { construction(c); };
    o.on_emptiness = [this](const BuchiAutomaton& a, const std::optional<LassoWord>& w) { emptiness(a, w); };
    return o;
  }
};

}  // namespace testing_support
