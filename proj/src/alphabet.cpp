#include "hyperltl/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperltl/formula.hpp"

namespace hyperltl {

Vocabulary::Vocabulary(std::vector<std::string> atoms, std::vector<std::string> compounds) {
  for (auto& a : atoms) {
    if (index_.count(a)) throw std::invalid_argument("duplicate atom '" + a + "'");
    index_.emplace(a, names_.size());
    names_.push_back(std::move(a));
  }
  num_atoms_ = names_.size();
  for (auto& c : compounds) {
    if (index_.count(c)) continue;  // atoms are compounds too
    index_.emplace(c, names_.size());
    names_.push_back(std::move(c));
  }
  for (const auto& n : names_) {
    if (is_reserved_name(n)) throw std::invalid_argument("name '" + n + "' is reserved");
  }
  index_.emplace(std::string(kTrueAtom), names_.size());
  names_.emplace_back(kTrueAtom);
  if (names_.size() > kMaxNames) {
    throw std::invalid_argument("at most " + std::to_string(kMaxNames - 1) + " proposition names are supported");
  }
}

std::optional<std::size_t> Vocabulary::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Vocabulary::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown proposition '" + std::string(name) + "'");
  return *i;
}

PropSet Vocabulary::atom_universe() const {
  return num_atoms_ == 64 ? PropSet(~std::uint64_t{0}) : PropSet((std::uint64_t{1} << num_atoms_) - 1);
}

PropSet Vocabulary::set(const std::vector<std::string>& names) const {
  PropSet s;
  for (const auto& n : names) s |= PropSet::single(index(n));
  return s;
}

std::vector<std::string> Vocabulary::names_of(PropSet s) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (s.contains(i)) out.push_back(names_[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Vocabulary::format(PropSet s) const {
  std::string out = "{";
  bool first = true;
  for (const auto& n : names_of(s)) {
    if (!first) out += ", ";
    out += n;
    first = false;
  }
  return out + "}";
}

}  // namespace hyperltl
