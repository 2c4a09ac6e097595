// hyperchk: model check a HyperLTL2 formula against a system file.
//
// Exit status: 0 holds, 1 fails, 2 usage or input error, 3 budget exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "hyperltl/checker.hpp"
#include "hyperltl/oracle.hpp"
#include "hyperltl/policies.hpp"
#include "json.hpp"

using namespace hyperltl;
using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json letters_json(const Vocabulary& vocab, const std::vector<Letter>& letters) {
  json out = json::array();
  for (const auto& l : letters) out.push_back(vocab.names_of(l.parts.at(0)));
  return out;
}

std::string letters_text(const Vocabulary& vocab, const std::vector<Letter>& letters) {
  std::string out = "[";
  for (std::size_t i = 0; i < letters.size(); ++i) out += (i ? ", " : "") + vocab.format(letters[i].parts.at(0));
  return out + "]";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HyperLTL2 model checker"};
  std::string system_path, formula_text, formula_file, policy, dump_dir;
  std::vector<std::string> maps;
  bool as_json = false, stats = false, use_oracle = false;
  std::size_t max_complement = kDefaultComplementBudget;
  app.add_option("--system", system_path, "system description file")->required();
  auto* f1 = app.add_option("--formula", formula_text, "formula text");
  auto* f2 = app.add_option("--formula-file", formula_file, "file holding the formula");
  auto* f3 = app.add_option("--policy", policy, "policy preset name");
  f1->excludes(f2)->excludes(f3);
  f2->excludes(f3);
  app.add_option("--map", maps, "policy parameter binding k=v")->needs(f3);
  app.add_flag("--json", as_json, "machine readable output");
  app.add_flag("--stats", stats, "print automaton sizes per stage");
  app.add_option("--dump-automata", dump_dir, "write every intermediate automaton into DIR");
  app.add_flag("--oracle", use_oracle, "also evaluate by lasso enumeration (tiny systems only)");
  app.add_option("--max-complement-states", max_complement, "complementation state budget")
      ->default_val(kDefaultComplementBudget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (formula_text.empty() && formula_file.empty() && policy.empty()) {
    std::cerr << "one of --formula, --formula-file or --policy is required\n";
    return 2;
  }

  try {
    const SystemModel m = load_system(read_file(system_path));
    QuantifiedFormula qf;
    if (!policy.empty()) {
      std::map<std::string, std::string> bindings;
      for (const auto& kv : maps) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) throw std::invalid_argument("--map expects k=v, got '" + kv + "'");
        bindings[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      qf = instantiate_policy(policy, bindings);
    } else {
      qf = parse(formula_file.empty() ? formula_text : read_file(formula_file));
    }

    CheckOptions options;
    options.complement_budget = max_complement;
    std::size_t dumped = 0;
    if (!dump_dir.empty()) {
      std::filesystem::create_directories(dump_dir);
      options.on_automaton = [&](const std::string& stage, const std::string& text) {
        std::ostringstream name;
        name << (++dumped < 10 ? "0" : "") << dumped << "_" << stage << ".aut";
        std::ofstream(std::filesystem::path(dump_dir) / name.str()) << text;
      };
    }
    const Verdict v = check(m, qf, options);
    std::optional<bool> oracle;
    if (use_oracle) {
      if (!in_oracle_envelope(m)) std::cerr << "warning: system is outside the oracle's exact envelope\n";
      oracle = oracle_holds(m, qf);
    }

    const Vocabulary& vocab = *m.vocabulary();
    std::vector<LassoWord> paths;
    if (v.countermodel) paths = unzip(*v.countermodel);

    if (as_json) {
      json out;
      out["verdict"] = v.holds ? "HOLDS" : "FAILS";
      out["fragment"] = {{"class", to_string(v.fragment.fragment)},
                         {"hierarchy", v.fragment.hierarchy()},
                         {"alternations", v.fragment.alternations}};
      out["prefix"] = qf.prefix.str();
      out["dualized"] = v.dualized;
      if (v.countermodel) {
        json cm = json::array();
        for (const auto& p : paths) cm.push_back({{"stem", letters_json(vocab, p.prefix)}, {"cycle", letters_json(vocab, p.cycle)}});
        out["countermodel"] = cm;
      } else {
        out["countermodel"] = nullptr;
      }
      json st = json::array();
      for (const auto& s : v.stats) st.push_back({{"stage", s.stage}, {"states", s.states}, {"transitions", s.transitions}});
      out["stats"] = st;
      if (oracle) out["oracle"] = *oracle ? "HOLDS" : "FAILS";
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << (v.holds ? "HOLDS" : "FAILS") << "\n";
      std::cout << "formula: " << to_string(qf) << "\n";
      std::cout << "fragment: " << to_string(v.fragment.fragment) << " " << v.fragment.hierarchy() << "\n";
      if (v.dualized) std::cout << "dualized: checked the negated universal form\n";
      if (v.countermodel) {
        std::cout << "countermodel:\n";
        for (std::size_t i = 0; i < paths.size(); ++i) {
          std::cout << "  path " << i + 1 << ": stem: " << letters_text(vocab, paths[i].prefix)
                    << " cycle: " << letters_text(vocab, paths[i].cycle) << "\n";
        }
      }
      if (stats) {
        std::cout << "stats:\n";
        for (const auto& s : v.stats) std::cout << "  " << s.stage << ": " << s.states << " states, " << s.transitions << " transitions\n";
      }
      if (oracle) std::cout << "oracle: " << (*oracle ? "HOLDS" : "FAILS") << "\n";
    }
    return v.holds ? 0 : 1;
  } catch (const StateBudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
