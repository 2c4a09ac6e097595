#include <algorithm>

#include "hyperltl/formula.hpp"

namespace hyperltl {

namespace {

bool is_literal(const Formula& f) {
  return f->op() == Op::Prop || (f->op() == Op::Not && f->child(0)->op() == Op::Prop);
}

Formula nnf_false() {
  static const Formula f = land(lnot(prop(std::string(kTrueAtom))), prop(std::string(kTrueAtom)));
  return f;
}

Formula single_slot_focus(std::size_t slot, Formula literal, std::size_t n) {
  std::vector<Formula> slots(n, desugared_true());
  slots[slot] = std::move(literal);
  return focus(std::move(slots));
}

Formula conjoin(std::vector<Formula> parts, bool conjunction) {
  if (parts.empty()) return conjunction ? desugared_true() : nnf_false();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conjunction ? land(acc, parts[i]) : lor(acc, parts[i]);
  return acc;
}

// NNF of a propositional focus slot, evaluated on path `slot` only.
Formula slot_nnf(const Formula& g, std::size_t slot, std::size_t n, bool positive) {
  if (is_true_constant(g)) return positive ? desugared_true() : nnf_false();
  if (is_false_constant(g)) return positive ? nnf_false() : desugared_true();
  switch (g->op()) {
    case Op::Prop:
      return single_slot_focus(slot, positive ? g : lnot(g), n);
    case Op::Not:
      return slot_nnf(g->child(0), slot, n, !positive);
    case Op::Or:
    case Op::And: {
      const bool conj = (g->op() == Op::And) == positive;
      Formula a = slot_nnf(g->child(0), slot, n, positive);
      Formula b = slot_nnf(g->child(1), slot, n, positive);
      return conj ? land(a, b) : lor(a, b);
    }
    case Op::Focus:
      throw FragmentError("nested focus inside a focus slot: " + to_string(g));
    default:
      throw FragmentError("temporal operator inside a focus slot: " + to_string(g));
  }
}

Formula nnf(const Formula& f, std::size_t n, bool positive) {
  switch (f->op()) {
    case Op::Prop:
      return positive ? f : lnot(f);
    case Op::Not:
      return nnf(f->child(0), n, !positive);
    case Op::Or:
    case Op::And: {
      const bool conj = (f->op() == Op::And) == positive;
      Formula a = nnf(f->child(0), n, positive);
      Formula b = nnf(f->child(1), n, positive);
      return conj ? land(a, b) : lor(a, b);
    }
    case Op::Next:
      return next(nnf(f->child(0), n, positive));
    case Op::Until:
    case Op::Release: {
      const bool u = (f->op() == Op::Until) == positive;
      Formula a = nnf(f->child(0), n, positive);
      Formula b = nnf(f->child(1), n, positive);
      return u ? until(a, b) : release(a, b);
    }
    case Op::Focus: {
      if (f->children().size() != n) {
        throw FragmentError("focus " + to_string(f) + " has arity " + std::to_string(f->children().size()) + ", expected " +
                            std::to_string(n));
      }
      // <g1,...,gn> holds iff every slot holds on its own path, so a
      // multi-slot focus is the conjunction of its single-slot projections.
      std::vector<Formula> parts;
      for (std::size_t i = 0; i < n; ++i) {
        const Formula& g = f->child(i);
        if (is_true_constant(g)) continue;
        parts.push_back(slot_nnf(g, i, n, positive));
      }
      return conjoin(std::move(parts), positive);
    }
    default:
      throw std::invalid_argument("to_nnf expects a desugared formula, found " + to_string(f));
  }
}

}  // namespace

Formula to_nnf(const Formula& f, std::size_t n) { return nnf(desugar(f), n, true); }

std::optional<FocusLiteral> focus_literal(const Formula& f) {
  if (f->op() != Op::Focus) return std::nullopt;
  std::optional<FocusLiteral> found;
  for (std::size_t i = 0; i < f->children().size(); ++i) {
    const Formula& s = f->child(i);
    if (is_true_constant(s)) continue;
    if (found || !is_literal(s)) return std::nullopt;
    found = FocusLiteral{i, s};
  }
  return found;
}

Formula focus_complement(const Formula& f) {
  auto lit = focus_literal(f);
  if (!lit) throw std::invalid_argument("not a single-literal focus: " + to_string(f));
  std::vector<Formula> slots = f->children();
  slots[lit->slot] = negate(lit->literal);
  return focus(std::move(slots));
}

bool is_nnf(const Formula& f, std::size_t n) {
  switch (f->op()) {
    case Op::Prop:
      return true;
    case Op::Not:
      return f->child(0)->op() == Op::Prop;
    case Op::Or:
    case Op::And:
    case Op::Until:
    case Op::Release:
      return is_nnf(f->child(0), n) && is_nnf(f->child(1), n);
    case Op::Next:
      return is_nnf(f->child(0), n);
    case Op::Focus:
      return f->children().size() == n && focus_literal(f).has_value() &&
             std::all_of(f->children().begin(), f->children().end(),
                         [](const Formula& s) { return is_literal(s) || is_true_constant(s); });
    default:
      return false;
  }
}

}  // namespace hyperltl
