// Acceptance run: one PASS/FAIL line per criterion.  Pass criterion numbers
// as arguments to run a subset; criterion 7 reports on whatever ran before
// it.

#include <chrono>
#include <iomanip>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "hyperltl/checker.hpp"
#include "hyperltl/oracle.hpp"
#include "hyperltl/policies.hpp"
#include "hyperltl/translate.hpp"
#include "support/audit.hpp"
#include "support/batch_eval.hpp"
#include "support/test_support.hpp"

using namespace hyperltl;
using namespace testing_support;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(std::string what) {
    pass = false;
    if (problems.size() < 10) problems.push_back(std::move(what));
  }
};

StructuralAudit audit;

std::string show(const Formula& f) { return to_string(f); }

std::string show(const QuantifiedFormula& qf) { return to_string(qf); }

// Translation against the semantics, exhaustively over small formulas and
// words.
Outcome translation() {
  Outcome out;
  std::size_t formulas = 0, checks = 0, spot = 0;
  for (std::size_t n : {1, 2}) {
    auto vocab = make_vocab({"p", "q"});
    std::mt19937 rng(17 + static_cast<unsigned>(n));
    BondingPtr bonding = random_bonding(rng, vocab, n);
    const auto family = nnf_formulas_by_height({"p", "q"}, n, 3);
    const auto letters = all_letters({vocab, n});
    const BuchiAutomaton universe = universal_automaton({vocab, n}, letters);
    WordSet words(all_lassos(letters, 4));
    TruthTables truth(words, *bonding, 2);
    for (std::size_t i = 0; i < family.size(); ++i) {
      const Formula& f = family[i];
      GbaConstruction c = build_gba_construction(f, n, bonding);
      audit.construction(c);
      const GuardedBuchi a = degeneralize(trim(std::move(c.automaton)));
      const BuchiAutomaton lettered = intersect(universe, a);
      audit.emptiness(lettered, is_empty_witness(lettered));
      const auto accepted = batch_accepts(a, words);
      const auto expected = truth.holds(f);
      for (std::size_t k = 0; k < words.size(); ++k) {
        ++checks;
        if (accepted[k] != expected[k]) {
          out.fail("n=" + std::to_string(n) + " " + show(f) + " on " + format_letter(*vocab, words.word(k).cycle.front()) +
                   "...: automaton " + (accepted[k] ? "accepts" : "rejects"));
        }
        // The bulk evaluators are spot-checked against the plain ones.
        if (k % 4999 == i % 4999) {
          ++spot;
          const LassoWord& w = words.word(k);
          if (accepted[k] != accepts(a, w)) out.fail("batch acceptance disagrees with accepts() on " + show(f));
          if (expected[k] != oracle_eval(unzip(w), f, *bonding)) out.fail("truth tables disagree with the oracle on " + show(f));
        }
      }
      ++formulas;
    }
  }
  out.detail = std::to_string(formulas) + " formulas, " + std::to_string(checks) + " word checks, " +
               std::to_string(spot) + " spot checks";
  return out;
}

// Self-composition accepts exactly the zipped tuples of system words.
Outcome self_composition() {
  Outcome out;
  std::mt19937 rng(2024);
  auto vocab = make_vocab({"a", "b"});
  std::size_t compared = 0;
  for (int sys = 0; sys < 50; ++sys) {
    const SystemModel m = random_envelope_system(rng, vocab, 3);
    const BuchiAutomaton a = to_buchi(m);
    // Stems cover the initial step plus every transient state; cycles cover
    // the least common multiple of simple cycle lengths on three states.
    const auto singles = run_lassos(a, 4, 6);
    for (std::size_t n = 1; n <= 3; ++n) {
      std::set<LassoWord> zipped;
      std::vector<std::size_t> digits(n, 0);
      const std::vector<LassoWord> base(singles.begin(), singles.end());
      while (true) {
        std::vector<LassoWord> tuple;
        for (auto d : digits) tuple.push_back(base[d]);
        zipped.insert(canonical(zip(tuple)));
        std::size_t i = n;
        while (i > 0 && ++digits[i - 1] == base.size()) digits[--i] = 0;
        if (i == 0) break;
      }
      const auto composed = run_lassos(self_compose(a, n), 4, 6);
      ++compared;
      if (composed != zipped) {
        out.fail("system " + std::to_string(sys) + " n=" + std::to_string(n) + ": " + std::to_string(composed.size()) +
                 " composed words vs " + std::to_string(zipped.size()) + " zipped");
      }
    }
  }
  out.detail = std::to_string(compared) + " (system, n) pairs";
  return out;
}

LassoWord random_word(std::mt19937& rng, const std::vector<Letter>& letters) {
  std::uniform_int_distribution<std::size_t> stem(0, 3), cyc(1, 4), pick(0, letters.size() - 1);
  LassoWord w;
  for (std::size_t i = stem(rng); i > 0; --i) w.prefix.push_back(letters[pick(rng)]);
  for (std::size_t i = cyc(rng); i > 0; --i) w.cycle.push_back(letters[pick(rng)]);
  return w;
}

Outcome complementation() {
  Outcome out;
  std::mt19937 rng(7);
  auto vocab = make_vocab({"a"});
  const auto letters = all_letters({vocab, 1});
  std::size_t words = 0, largest = 0;
  for (int i = 0; i < 200; ++i) {
    const BuchiAutomaton a = random_automaton(rng, vocab, letters, 4);
    audit.emptiness(a, is_empty_witness(a));
    for (ComplementMethod method : {ComplementMethod::Automatic, ComplementMethod::RankBased}) {
      ComplementOptions opts;
      opts.method = method;
      const BuchiAutomaton c = complement(a, letters, opts);
      largest = std::max(largest, c.num_states());
      audit.emptiness(c, is_empty_witness(c));
      const auto both = is_empty_witness(intersect(a, c));
      audit.emptiness(intersect(a, c), both);
      if (both) out.fail("automaton " + std::to_string(i) + ": A and its complement share a word");
      for (int k = 0; k < 20; ++k) {
        const LassoWord w = random_word(rng, letters);
        ++words;
        const bool in_a = accepts(a, w);
        if (in_a != run_accepts(a, w)) out.fail("automaton " + std::to_string(i) + ": accepts() disagrees with the run reference");
        if (in_a == accepts(c, w)) out.fail("automaton " + std::to_string(i) + ": word in both or neither language");
      }
    }
  }
  out.detail = "200 automata, two methods, " + std::to_string(words) + " words, largest complement " +
               std::to_string(largest) + " states";
  return out;
}

const std::vector<std::string> kPrefixes{"A", "E", "AA", "AE", "EA", "EE", "AAA", "AAE", "AEE", "EAA", "EEA", "EEE"};

std::vector<Formula> body_leaves(std::size_t n) {
  std::vector<Formula> leaves{prop("p"), prop("q")};
  if (n >= 2) {
    for (std::size_t slot = 0; slot < n; ++slot) {
      for (const char* a : {"p", "q"}) {
        std::vector<Formula> slots(n, top());
        slots[slot] = prop(a);
        leaves.push_back(focus(slots));
      }
    }
  }
  return leaves;
}

// A countermodel of A^k E^j psi must make E^j psi false.
bool refutes(const SystemModel& m, const QuantifiedFormula& qf, const LassoWord& cm) {
  const auto paths = unzip(cm);
  const std::string rest = qf.prefix.str().substr(paths.size());
  if (rest.empty()) return !oracle_eval(paths, qf.body, *m.bonding());
  const auto domain = enumerate_lassos(m, m.num_states());
  return !oracle_eval(paths, qf.body, domain, *m.bonding(), QuantifierPrefix::parse(rest));
}

Outcome end_to_end() {
  Outcome out;
  std::mt19937 rng(99);
  auto vocab = make_vocab({"p", "q"});
  std::size_t holds = 0, countermodels = 0;
  for (int i = 0; i < 100; ++i) {
    const std::string prefix = kPrefixes[static_cast<std::size_t>(i) % kPrefixes.size()];
    const std::size_t n = prefix.size();
    BondingPtr bonding = random_bonding(rng, vocab, n);
    const SystemModel m = random_envelope_system(rng, vocab, 3, bonding);
    if (!in_oracle_envelope(m)) {
      out.fail("generated system outside the oracle envelope");
      continue;
    }
    const QuantifiedFormula qf{QuantifierPrefix::parse(prefix), random_formula(rng, body_leaves(n), 2)};
    const Verdict v = check(m, qf, audit.hooks());
    const bool expected = oracle_holds(m, qf);
    holds += v.holds;
    if (v.holds != expected) out.fail("pair " + std::to_string(i) + ": " + show(qf) + " checker " + (v.holds ? "HOLDS" : "FAILS"));
    if (v.countermodel) {
      ++countermodels;
      if (!refutes(m, qf, *v.countermodel)) out.fail("pair " + std::to_string(i) + ": countermodel does not refute " + show(qf));
    }
  }
  out.detail = "100 pairs, " + std::to_string(holds) + " hold, " + std::to_string(countermodels) + " countermodels confirmed";
  return out;
}

Outcome fast_vs_general() {
  Outcome out;
  std::mt19937 rng(5);
  auto vocab = make_vocab({"p", "q"});
  std::size_t failing = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(i % 2);
    BondingPtr bonding = random_bonding(rng, vocab, n);
    const SystemModel m = random_envelope_system(rng, vocab, 4, bonding);
    const Formula body = random_formula(rng, body_leaves(n), 3);
    const Verdict fast = check_fast_path(m, body, n, true, audit.hooks());
    const Verdict general = check_general(m, body, n, 0, audit.hooks());
    const std::string what = "system " + std::to_string(i) + " A^" + std::to_string(n) + " " + show(body);
    if (fast.holds != general.holds) {
      out.fail(what + ": verdicts differ");
      continue;
    }
    if (fast.holds) continue;
    ++failing;
    for (const auto* v : {&fast, &general}) {
      if (!v->countermodel) {
        out.fail(what + ": failing verdict without a countermodel");
      } else if (oracle_eval(unzip(*v->countermodel), body, *bonding)) {
        out.fail(what + ": countermodel satisfies the body");
      }
    }
  }
  out.detail = "100 systems, " + std::to_string(failing) + " failing with both countermodels refuted";
  return out;
}

std::string countermodel_text(const Vocabulary& vocab, const LassoWord& cm) {
  std::ostringstream os;
  const auto paths = unzip(cm);
  auto list = [&](const std::vector<Letter>& ls) {
    std::string s = "[";
    for (std::size_t i = 0; i < ls.size(); ++i) s += (i ? ", " : "") + vocab.format(ls[i].parts.at(0));
    return s + "]";
  };
  for (std::size_t i = 0; i < paths.size(); ++i) {
    os << "path " << i + 1 << ": stem: " << list(paths[i].prefix) << " cycle: " << list(paths[i].cycle) << "\n";
  }
  return os.str();
}

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome policy_fixtures() {
  Outcome out;
  const std::filesystem::path dir = HYPERLTL_DATA_DIR;
  const std::vector<std::pair<std::string, std::string>> policies{
      {"access_control", "Pi_1"}, {"guaranteed_service", "Pi_1"}, {"noninference", "Pi_2"},
      {"observational_determinism", "Pi_1"}, {"gni", "Pi_2"}, {"opacity", "Pi_2"}};
  std::size_t fixtures = 0;
  for (const auto& [name, hierarchy] : policies) {
    const QuantifiedFormula qf = instantiate_policy(name);
    const std::string cls = classify_fragment(qf).hierarchy();
    if (cls != hierarchy) out.fail(name + " classified " + cls + ", expected " + hierarchy);
    for (bool expect_holds : {true, false}) {
      const std::string stem = name + (expect_holds ? "_holds" : "_fails");
      const SystemModel m = load_system_file((dir / (stem + ".sys")).string());
      ++fixtures;
      const Verdict v = check(m, qf, audit.hooks());
      if (v.holds != expect_holds) {
        out.fail(stem + ": verdict " + (v.holds ? "HOLDS" : "FAILS"));
        continue;
      }
      if (expect_holds) continue;
      if (!v.countermodel) {
        out.fail(stem + ": no countermodel");
        continue;
      }
      const std::string golden = read_text(dir / (stem + ".golden"));
      const std::string got = countermodel_text(*m.vocabulary(), *v.countermodel);
      if (got != golden) out.fail(stem + ": countermodel differs from golden:\n" + got);
      if (qf.prefix.alternations() > 0 && !in_oracle_envelope(m)) out.fail(stem + ": outside the oracle envelope");
      if (!refutes(m, qf, *v.countermodel)) out.fail(stem + ": countermodel not refuted by the oracle");
    }
  }
  out.detail = std::to_string(fixtures) + " fixtures, 6 classifications";
  return out;
}

Outcome structure() {
  Outcome out;
  for (const auto& f : audit.failures) out.fail(f);
  if (audit.until_checked == 0 || audit.witnesses_checked == 0) out.fail("no constructions were scanned");
  out.detail = std::to_string(audit.nnf_checked) + " NNF scans, " + std::to_string(audit.sets_checked) +
               " consistent sets, " + std::to_string(audit.until_checked) + " accepting-set scans, " +
               std::to_string(audit.witnesses_checked) + " witnesses";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, Outcome (*)()>> criteria{
      {"translation agrees with the semantics", translation},
      {"self-composition accepts the zip closure", self_composition},
      {"complementation laws", complementation},
      {"checker agrees with the oracle end to end", end_to_end},
      {"fast path and general pipeline agree", fast_vs_general},
      {"policy fixtures", policy_fixtures},
      {"structural invariants", structure},
  };
  std::set<std::size_t> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoul(argv[i]));
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected.empty() && !selected.count(i + 1)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << " ("
              << o.detail << "; " << std::fixed << std::setprecision(1) << secs << "s)" << std::endl;
    for (const auto& p : o.problems) std::cout << "    " << p << "\n";
  }
  return all ? 0 : 1;
}
