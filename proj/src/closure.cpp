#include <algorithm>
#include <deque>

#include "hyperltl/formula.hpp"

namespace hyperltl {

namespace {

bool is_focus(const Formula& f) { return f->op() == Op::Focus; }

Formula complement_of(const Formula& f) { return is_focus(f) ? focus_complement(f) : negate(f); }

}  // namespace

std::vector<Formula> closure(const Formula& psi) { return Closure(psi).members(); }

Closure::Closure(const Formula& psi) : root_(psi) {
  std::unordered_map<Formula, bool, FormulaHash, FormulaEq> seen;
  std::deque<Formula> work{psi};
  std::vector<Formula> found;
  while (!work.empty()) {
    Formula f = work.front();
    work.pop_front();
    if (!seen.emplace(f, true).second) continue;
    found.push_back(f);
    work.push_back(complement_of(f));
    switch (f->op()) {
      case Op::And:
      case Op::Or:
      case Op::Until:
      case Op::Release:
        work.push_back(f->child(0));
        work.push_back(f->child(1));
        break;
      case Op::Next:
        work.push_back(f->child(0));
        break;
      default:
        break;
    }
  }
  std::sort(found.begin(), found.end(), [](const Formula& a, const Formula& b) {
    if (a->depth() != b->depth()) return a->depth() < b->depth();
    return compare(a, b) < 0;
  });
  members_ = std::move(found);
  for (std::size_t i = 0; i < members_.size(); ++i) index_.emplace(members_[i], i);
  complement_.resize(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i) complement_[i] = at(complement_of(members_[i]));
}

std::optional<std::size_t> Closure::index_of(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Closure::at(const Formula& f) const {
  auto i = index_of(f);
  if (!i) throw std::out_of_range("formula not in closure: " + to_string(f));
  return *i;
}

namespace {

// The positive member of a complementary pair: not a negation, and for a
// focus, the one whose literal is unnegated.
bool is_base(const Formula& f) {
  if (is_focus(f)) {
    auto lit = focus_literal(f);
    return lit && lit->literal->op() != Op::Not;
  }
  return f->op() != Op::Not;
}

class MaximalSetEnumerator {
 public:
  MaximalSetEnumerator(const Closure& cl, std::size_t budget) : cl_(cl), budget_(budget) {
    for (std::size_t i = 0; i < cl.size(); ++i) {
      if (is_base(cl[i])) bases_.push_back(i);
    }
    value_.assign(cl.size(), false);
    decided_.assign(cl.size(), false);
  }

  std::vector<ConsistentSet> run() {
    assign(0);
    return std::move(out_);
  }

 private:
  bool holds(std::size_t member) const {
    if (decided_[member]) return value_[member];
    return !value_[cl_.complement(member)];
  }

  void set(std::size_t base, bool v) {
    value_[base] = v;
    decided_[base] = true;
  }

  void assign(std::size_t next) {
    if (++explored_ > budget_) {
      throw StateBudgetError("maximal consistent set enumeration exceeded " + std::to_string(budget_) + " candidates", budget_);
    }
    if (next == bases_.size()) {
      ConsistentSet k(cl_.size());
      for (std::size_t i = 0; i < cl_.size(); ++i) k[i] = holds(i);
      out_.push_back(std::move(k));
      return;
    }
    const std::size_t b = bases_[next];
    const Formula& f = cl_[b];
    switch (f->op()) {
      case Op::And:
        set(b, holds(cl_.at(f->child(0))) && holds(cl_.at(f->child(1))));
        assign(next + 1);
        break;
      case Op::Or:
        set(b, holds(cl_.at(f->child(0))) || holds(cl_.at(f->child(1))));
        assign(next + 1);
        break;
      default:
        for (bool v : {true, false}) {
          if (v && f->op() == Op::Until && !holds(cl_.at(f->child(0))) && !holds(cl_.at(f->child(1)))) continue;
          if (v && f->op() == Op::Release && !holds(cl_.at(f->child(1)))) continue;
          set(b, v);
          assign(next + 1);
        }
        break;
    }
    decided_[b] = false;
  }

  const Closure& cl_;
  std::size_t budget_;
  std::size_t explored_ = 0;
  std::vector<std::size_t> bases_;
  std::vector<bool> value_;
  std::vector<bool> decided_;
  std::vector<ConsistentSet> out_;
};

}  // namespace

std::vector<ConsistentSet> maximal_consistent_sets(const Closure& cl, std::size_t candidate_budget) {
  return MaximalSetEnumerator(cl, candidate_budget).run();
}

std::vector<FormulaSet> maximal_consistent_sets(const Formula& psi) {
  Closure cl(psi);
  std::vector<FormulaSet> out;
  for (const auto& k : maximal_consistent_sets(cl)) {
    FormulaSet s;
    for (std::size_t i = 0; i < cl.size(); ++i) {
      if (k[i]) s.insert(cl[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

bool is_maximal_consistent(const Closure& cl, const ConsistentSet& k) {
  if (k.size() != cl.size()) return false;
  for (std::size_t i = 0; i < cl.size(); ++i) {
    // Both the negation rule and the focus rule say: exactly one of a member
    // and its complement.
    if (k[i] == k[cl.complement(i)]) return false;
    const Formula& f = cl[i];
    switch (f->op()) {
      case Op::And:
        if (k[i] != (k[cl.at(f->child(0))] && k[cl.at(f->child(1))])) return false;
        break;
      case Op::Or:
        if (k[i] != (k[cl.at(f->child(0))] || k[cl.at(f->child(1))])) return false;
        break;
      case Op::Until:
        if (k[i] && !k[cl.at(f->child(0))] && !k[cl.at(f->child(1))]) return false;
        break;
      case Op::Release:
        if (k[i] && !k[cl.at(f->child(1))]) return false;
        break;
      default:
        break;
    }
  }
  return true;
}

}  // namespace hyperltl
