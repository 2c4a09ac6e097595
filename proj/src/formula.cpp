#include "hyperltl/formula.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace hyperltl {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Node::Node(Op op, std::string name, std::vector<Formula> children)
    : op_(op), name_(std::move(name)), children_(std::move(children)) {
  hash_ = mix(std::hash<int>{}(static_cast<int>(op_)), std::hash<std::string>{}(name_));
  depth_ = 1;
  for (const auto& c : children_) {
    hash_ = mix(hash_, c->hash());
    depth_ = std::max(depth_, c->depth() + 1);
  }
}

bool is_reserved_name(std::string_view name) { return name.size() >= 2 && name.substr(0, 2) == "__"; }

int compare(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return 0;
  if (a->op() != b->op()) return a->op() < b->op() ? -1 : 1;
  if (int c = a->name().compare(b->name()); c != 0) return c < 0 ? -1 : 1;
  const auto& ca = a->children();
  const auto& cb = b->children();
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (int c = compare(ca[i], cb[i]); c != 0) return c;
  }
  return 0;
}

bool equal(const Formula& a, const Formula& b) {
  if (a.get() == b.get()) return true;
  if (a->hash() != b->hash()) return false;
  return compare(a, b) == 0;
}

namespace {

Formula make(Op op, std::vector<Formula> children = {}, std::string name = {}) {
  return std::make_shared<const Node>(op, std::move(name), std::move(children));
}

}  // namespace

Formula prop(std::string name) { return make(Op::Prop, {}, std::move(name)); }
Formula top() { return make(Op::True); }
Formula bottom() { return make(Op::False); }
Formula lnot(Formula f) { return make(Op::Not, {std::move(f)}); }
Formula lor(Formula a, Formula b) { return make(Op::Or, {std::move(a), std::move(b)}); }
Formula land(Formula a, Formula b) { return make(Op::And, {std::move(a), std::move(b)}); }
Formula implies(Formula a, Formula b) { return make(Op::Implies, {std::move(a), std::move(b)}); }
Formula iff(Formula a, Formula b) { return make(Op::Iff, {std::move(a), std::move(b)}); }
Formula focus(std::vector<Formula> slots) { return make(Op::Focus, std::move(slots)); }
Formula next(Formula f) { return make(Op::Next, {std::move(f)}); }
Formula until(Formula a, Formula b) { return make(Op::Until, {std::move(a), std::move(b)}); }
Formula release(Formula a, Formula b) { return make(Op::Release, {std::move(a), std::move(b)}); }
Formula eventually(Formula f) { return make(Op::Finally, {std::move(f)}); }
Formula always(Formula f) { return make(Op::Globally, {std::move(f)}); }

Formula negate(const Formula& f) {
  if (f->op() == Op::Not) return f->child(0);
  return lnot(f);
}

Formula desugared_true() {
  static const Formula t = lor(prop(std::string(kTrueAtom)), lnot(prop(std::string(kTrueAtom))));
  return t;
}

Formula desugared_false() {
  static const Formula f = lnot(desugared_true());
  return f;
}

namespace {

bool is_true_atom(const Formula& f) { return f->op() == Op::Prop && f->name() == kTrueAtom; }
bool is_neg_true_atom(const Formula& f) { return f->op() == Op::Not && is_true_atom(f->child(0)); }

}  // namespace

bool is_true_constant(const Formula& f) {
  if (f->op() == Op::True) return true;
  if (f->op() != Op::Or) return false;
  const auto& a = f->child(0);
  const auto& b = f->child(1);
  return (is_true_atom(a) && is_neg_true_atom(b)) || (is_neg_true_atom(a) && is_true_atom(b));
}

bool is_false_constant(const Formula& f) {
  if (f->op() == Op::False) return true;
  if (f->op() == Op::Not) return is_true_constant(f->child(0));
  if (f->op() != Op::And) return false;
  const auto& a = f->child(0);
  const auto& b = f->child(1);
  return (is_true_atom(a) && is_neg_true_atom(b)) || (is_neg_true_atom(a) && is_true_atom(b));
}

// ---------------------------------------------------------------------------
// Quantifier prefixes.

QuantifierPrefix QuantifierPrefix::parse(std::string_view word) {
  std::vector<Quantifier> q;
  for (char c : word) {
    if (c == 'A') {
      q.push_back(Quantifier::Universal);
    } else if (c == 'E') {
      q.push_back(Quantifier::Existential);
    } else {
      throw std::invalid_argument("quantifier prefix may only contain A and E");
    }
  }
  return QuantifierPrefix(std::move(q));
}

std::size_t QuantifierPrefix::alternations() const {
  std::size_t n = 0;
  for (std::size_t i = 1; i < quants_.size(); ++i) {
    if (quants_[i] != quants_[i - 1]) ++n;
  }
  return n;
}

QuantifierPrefix QuantifierPrefix::dual() const {
  std::vector<Quantifier> q;
  q.reserve(quants_.size());
  for (auto x : quants_) q.push_back(x == Quantifier::Universal ? Quantifier::Existential : Quantifier::Universal);
  return QuantifierPrefix(std::move(q));
}

std::string QuantifierPrefix::str() const {
  std::string s;
  for (auto q : quants_) s += q == Quantifier::Universal ? 'A' : 'E';
  return s;
}

// ---------------------------------------------------------------------------
// Printing.

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::Implies:
    case Op::Iff:
      return 1;
    case Op::Or:
      return 2;
    case Op::And:
      return 3;
    case Op::Until:
    case Op::Release:
      return 4;
    case Op::Not:
    case Op::Next:
    case Op::Finally:
    case Op::Globally:
      return 5;
    default:
      return 6;
  }
}

void print(std::ostream& out, const Formula& f);

void print_child(std::ostream& out, const Formula& child, bool parens) {
  if (parens) out << '(';
  print(out, child);
  if (parens) out << ')';
}

void print(std::ostream& out, const Formula& f) {
  const int prec = precedence(f->op());
  switch (f->op()) {
    case Op::Prop:
      out << f->name();
      return;
    case Op::True:
      out << "true";
      return;
    case Op::False:
      out << "false";
      return;
    case Op::Focus: {
      out << '<';
      for (std::size_t i = 0; i < f->children().size(); ++i) {
        if (i) out << ", ";
        print(out, f->child(i));
      }
      out << '>';
      return;
    }
    case Op::Not:
      out << '!';
      print_child(out, f->child(0), precedence(f->child(0)->op()) < prec);
      return;
    case Op::Next:
    case Op::Finally:
    case Op::Globally: {
      out << (f->op() == Op::Next ? "X " : f->op() == Op::Finally ? "F " : "G ");
      print_child(out, f->child(0), precedence(f->child(0)->op()) < prec);
      return;
    }
    default:
      break;
  }
  // Binary.  & and | associate to the left, the rest to the right; the
  // implication level is always parenthesized when nested.
  const char* sym = nullptr;
  bool left_assoc = false;
  switch (f->op()) {
    case Op::Or:
      sym = " | ";
      left_assoc = true;
      break;
    case Op::And:
      sym = " & ";
      left_assoc = true;
      break;
    case Op::Implies:
      sym = " -> ";
      break;
    case Op::Iff:
      sym = " <-> ";
      break;
    case Op::Until:
      sym = " U ";
      break;
    case Op::Release:
      sym = " R ";
      break;
    default:
      throw std::logic_error("unexpected operator");
  }
  const int lp = precedence(f->child(0)->op());
  const int rp = precedence(f->child(1)->op());
  bool lparen = lp < prec || (lp == prec && (!left_assoc || prec == 1));
  bool rparen = rp < prec || (rp == prec && (left_assoc || prec == 1));
  print_child(out, f->child(0), lparen);
  out << sym;
  print_child(out, f->child(1), rparen);
}

}  // namespace

std::string to_string(const Formula& f) {
  std::ostringstream out;
  print(out, f);
  return out.str();
}

std::string to_string(const QuantifiedFormula& qf) {
  std::string body = to_string(qf.body);
  if (qf.prefix.empty()) return body;
  return qf.prefix.str() + " " + body;
}

// ---------------------------------------------------------------------------
// Desugaring.

Formula desugar(const Formula& f) {
  switch (f->op()) {
    case Op::Prop:
      return f;
    case Op::True:
      return desugared_true();
    case Op::False:
      return desugared_false();
    case Op::Not:
      return lnot(desugar(f->child(0)));
    case Op::Or:
      return lor(desugar(f->child(0)), desugar(f->child(1)));
    case Op::And:
      return land(desugar(f->child(0)), desugar(f->child(1)));
    case Op::Implies:
      return lor(lnot(desugar(f->child(0))), desugar(f->child(1)));
    case Op::Iff: {
      Formula a = desugar(f->child(0));
      Formula b = desugar(f->child(1));
      return land(lor(lnot(a), b), lor(lnot(b), a));
    }
    case Op::Focus: {
      std::vector<Formula> slots;
      for (const auto& s : f->children()) slots.push_back(desugar(s));
      return focus(std::move(slots));
    }
    case Op::Next:
      return next(desugar(f->child(0)));
    case Op::Until:
      return until(desugar(f->child(0)), desugar(f->child(1)));
    case Op::Release:
      return release(desugar(f->child(0)), desugar(f->child(1)));
    case Op::Finally:
      return until(desugared_true(), desugar(f->child(0)));
    case Op::Globally:
      return release(desugared_false(), desugar(f->child(0)));
  }
  throw std::logic_error("unknown operator");
}

// ---------------------------------------------------------------------------
// Well-formedness and fragments.

namespace {

void collect_focus(const Formula& f, std::vector<Formula>& out) {
  if (f->op() == Op::Focus) out.push_back(f);
  for (const auto& c : f->children()) collect_focus(c, out);
}

}  // namespace

std::vector<Diagnostic> check_well_formed(const QuantifiedFormula& qf) {
  std::vector<Diagnostic> diags;
  if (qf.prefix.empty()) {
    diags.push_back({"formula has no path quantifier"});
  }
  std::vector<Formula> foci;
  collect_focus(qf.body, foci);
  for (const auto& f : foci) {
    if (f->children().size() != qf.prefix.size()) {
      diags.push_back({"focus " + to_string(f) + " has arity " + std::to_string(f->children().size()) +
                       " but the prefix quantifies " + std::to_string(qf.prefix.size()) + " path(s)"});
    }
  }
  return diags;
}

bool is_propositional(const Formula& f) {
  switch (f->op()) {
    case Op::Next:
    case Op::Until:
    case Op::Release:
    case Op::Finally:
    case Op::Globally:
      return false;
    default:
      break;
  }
  return std::all_of(f->children().begin(), f->children().end(), [](const Formula& c) { return is_propositional(c); });
}

std::string FragmentClass::hierarchy() const { return std::string(sigma ? "Sigma_" : "Pi_") + std::to_string(level); }

std::string to_string(Fragment f) {
  switch (f) {
    case Fragment::HyperLTL1:
      return "HyperLTL1";
    case Fragment::HyperLTL2:
      return "HyperLTL2";
    case Fragment::Outside:
      return "outside";
  }
  return "?";
}

FragmentClass classify_fragment(const QuantifiedFormula& qf) {
  FragmentClass c;
  c.alternations = qf.prefix.alternations();
  if (qf.prefix.empty()) {
    c.level = 0;
  } else {
    c.sigma = qf.prefix[0] == Quantifier::Existential;
    c.level = c.alternations + 1;
  }
  std::vector<Formula> foci;
  collect_focus(qf.body, foci);
  for (const auto& f : foci) {
    for (const auto& slot : f->children()) {
      if (!is_propositional(slot)) c.temporal_focus = true;
    }
  }
  if (qf.prefix.empty() || c.temporal_focus || c.alternations > 1) {
    c.fragment = Fragment::Outside;
  } else {
    c.fragment = c.alternations == 0 ? Fragment::HyperLTL1 : Fragment::HyperLTL2;
  }
  return c;
}

}  // namespace hyperltl
