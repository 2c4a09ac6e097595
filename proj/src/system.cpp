#include "hyperltl/system.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "hyperltl/formula.hpp"

namespace hyperltl {

void BondingTable::add(const std::vector<PropSet>& tuple, PropSet compounds) {
  if (tuple.size() < 2) throw std::invalid_argument("bonding entries need arity at least 2; arity 1 is the identity");
  const PropSet atoms = vocab_->atom_universe();
  for (auto s : tuple) {
    if (!atoms.includes(s)) throw std::invalid_argument("bonding tuple names something that is not an atom");
  }
  const PropSet names((std::uint64_t{1} << vocab_->true_index()) - 1);
  if (!names.includes(compounds)) throw std::invalid_argument("bonding result names an undeclared compound");
  if (!entries_.emplace(Letter(tuple), compounds).second) {
    throw std::invalid_argument("duplicate bonding entry " + format_letter(*vocab_, Letter(tuple)));
  }
}

PropSet BondingTable::bond(const std::vector<PropSet>& tuple) const {
  if (tuple.size() == 1) return tuple.front();
  if (entries_.empty()) return PropSet();
  auto it = entries_.find(Letter(tuple));
  return it == entries_.end() ? PropSet() : it->second;
}

SystemFormatError::SystemFormatError(std::size_t line, const std::string& message)
    : std::invalid_argument("line " + std::to_string(line) + ": " + message), line_(line) {}

SystemModel::SystemModel(VocabularyPtr vocab, BondingPtr bonding) : vocab_(std::move(vocab)), bonding_(std::move(bonding)) {}

SystemModel::SystemModel(VocabularyPtr vocab) : vocab_(vocab), bonding_(std::make_shared<BondingTable>(vocab)) {}

StateId SystemModel::add_state(const std::string& name, PropSet label) {
  if (!vocab_->atom_universe().includes(label)) throw std::invalid_argument("state '" + name + "' is labelled with a non-atom");
  if (!index_.emplace(name, static_cast<StateId>(names_.size())).second) {
    throw std::invalid_argument("duplicate state '" + name + "'");
  }
  names_.push_back(name);
  labels_.push_back(label);
  succ_.emplace_back();
  return static_cast<StateId>(names_.size() - 1);
}

void SystemModel::add_initial(StateId s) {
  if (s >= names_.size()) throw std::out_of_range("unknown state id");
  if (std::find(initial_.begin(), initial_.end(), s) == initial_.end()) initial_.push_back(s);
}

void SystemModel::add_transition(StateId from, StateId to) {
  if (from >= names_.size() || to >= names_.size()) throw std::out_of_range("unknown state id");
  auto& out = succ_[from];
  if (std::find(out.begin(), out.end(), to) == out.end()) out.push_back(to);
}

void SystemModel::set_bonding(BondingPtr bonding) { bonding_ = std::move(bonding); }

void SystemModel::validate() const {
  if (initial_.empty()) throw std::invalid_argument("system has no initial state");
  for (StateId s = 0; s < names_.size(); ++s) {
    if (succ_[s].empty()) throw std::invalid_argument("state '" + names_[s] + "' has no successor");
  }
}

std::optional<StateId> SystemModel::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

class LineReader {
 public:
  LineReader(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  [[noreturn]] void fail(const std::string& message) const { throw SystemFormatError(line_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }
  std::vector<std::string> braced_names() {
    expect('{');
    std::vector<std::string> names;
    if (peek('}')) {
      ++pos_;
      return names;
    }
    while (true) {
      names.push_back(word());
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect('}');
      return names;
    }
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct Line {
  std::size_t number;
  std::string keyword;
  std::string rest;
};

}  // namespace

SystemModel load_system(std::string_view text) {
  std::vector<Line> lines;
  std::istringstream in{std::string(text)};
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::string keyword;
    if (!(words >> keyword)) continue;
    std::string rest;
    std::getline(words, rest);
    lines.push_back({number, keyword, rest});
  }

  std::vector<std::string> atoms, compounds;
  for (const auto& l : lines) {
    if (l.keyword != "atoms" && l.keyword != "compounds") continue;
    LineReader r(l.rest, l.number);
    while (!r.done()) {
      std::string name = r.word();
      if (is_reserved_name(name)) r.fail("name '" + name + "' is reserved");
      (l.keyword == "atoms" ? atoms : compounds).push_back(name);
    }
  }
  VocabularyPtr vocab;
  try {
    vocab = std::make_shared<Vocabulary>(atoms, compounds);
  } catch (const std::invalid_argument& e) {
    throw SystemFormatError(lines.empty() ? 1 : lines.front().number, e.what());
  }
  auto bonding = std::make_shared<BondingTable>(vocab);
  SystemModel m(vocab, bonding);

  auto atom_set = [&](LineReader& r) {
    PropSet s;
    for (const auto& n : r.braced_names()) {
      auto i = vocab->find(n);
      if (!i || !vocab->is_atom(*i)) r.fail("unknown atom '" + n + "'");
      s |= PropSet::single(*i);
    }
    return s;
  };

  for (const auto& l : lines) {
    if (l.keyword != "state") continue;
    LineReader r(l.rest, l.number);
    std::string name = r.word();
    PropSet label = r.done() ? PropSet() : atom_set(r);
    if (!r.done()) r.fail("unexpected text after state label");
    if (m.find(name)) r.fail("duplicate state '" + name + "'");
    m.add_state(name, label);
  }

  for (const auto& l : lines) {
    LineReader r(l.rest, l.number);
    auto state = [&]() {
      std::string name = r.word();
      auto s = m.find(name);
      if (!s) r.fail("unknown state '" + name + "'");
      return *s;
    };
    if (l.keyword == "atoms" || l.keyword == "compounds" || l.keyword == "state") {
      continue;
    } else if (l.keyword == "init") {
      if (r.done()) r.fail("init needs at least one state");
      while (!r.done()) m.add_initial(state());
    } else if (l.keyword == "trans") {
      StateId from = state();
      StateId to = state();
      if (!r.done()) r.fail("trans takes exactly two states");
      m.add_transition(from, to);
    } else if (l.keyword == "bond") {
      const std::string arity_text = r.word();
      std::size_t arity = 0;
      try {
        arity = std::stoul(arity_text);
      } catch (const std::exception&) {
        r.fail("bond arity must be a number");
      }
      if (arity < 2) r.fail("bond arity must be at least 2; arity 1 is the identity");
      r.expect('(');
      std::vector<PropSet> tuple;
      while (true) {
        tuple.push_back(atom_set(r));
        if (r.peek(',')) {
          r.expect(',');
          continue;
        }
        r.expect(')');
        break;
      }
      if (tuple.size() != arity) r.fail("bond tuple has " + std::to_string(tuple.size()) + " sets, expected " + std::to_string(arity));
      PropSet result;
      for (const auto& n : r.braced_names()) {
        auto i = vocab->find(n);
        if (!i || *i == vocab->true_index()) r.fail("unknown compound '" + n + "'");
        result |= PropSet::single(*i);
      }
      if (!r.done()) r.fail("unexpected text after bond entry");
      try {
        bonding->add(tuple, result);
      } catch (const std::invalid_argument& e) {
        r.fail(e.what());
      }
    } else {
      r.fail("unknown directive '" + l.keyword + "'");
    }
  }
  m.validate();
  return m;
}

SystemModel load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read system file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_system(buf.str());
}

BuchiAutomaton to_buchi(const SystemModel& m) {
  BuchiAutomaton a;
  a.alphabet = {m.vocabulary(), 1};
  LetterTable letters;
  const StateId iota = a.add_state(true, "iota");
  a.initial.push_back(iota);
  for (StateId s = 0; s < m.num_states(); ++s) a.add_state(true, m.name(s));
  auto letter = [&](StateId s) { return letters.intern(Letter({m.label(s)})); };
  for (StateId s : m.initial()) a.out[iota].push_back({letter(s), s + 1});
  for (StateId s = 0; s < m.num_states(); ++s) {
    for (StateId t : m.successors(s)) a.out[s + 1].push_back({letter(t), t + 1});
  }
  a.labels = letters.release();
  return trim(std::move(a));
}

}  // namespace hyperltl
