// Command-line front end: formula evaluation on lasso words, counting
// automaton runs, Boolean constructions, and the sampling checks.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ltldom/bridge.hpp"
#include "ltldom/counting.hpp"
#include "ltldom/errors.hpp"
#include "ltldom/formula.hpp"
#include "ltldom/lasso.hpp"
#include "ltldom/semantics.hpp"

namespace {

// 0 = holds / accepted / no counterexample, 1 = fails / rejected /
// counterexample, 2 = usage or input error.
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("failed to write file: " + path);
}

// "builtin:lomega" is accepted anywhere an automaton file is expected.
ltldom::CountingAutomaton load_automaton(const std::string& spec) {
  if (spec == "builtin:lomega") return ltldom::l_omega_automaton();
  return ltldom::read_automaton_json(read_file(spec));
}

// Returns the automaton only if it is well-formed; otherwise prints every
// violation and reports failure through the optional.
std::optional<ltldom::CountingAutomaton> load_valid_automaton(const std::string& spec) {
  ltldom::CountingAutomaton aut = load_automaton(spec);
  const std::vector<std::string> violations = aut.validate();
  if (!violations.empty()) {
    std::cerr << "invalid automaton '" << spec << "':\n";
    for (const auto& v : violations) std::cerr << "  " << v << "\n";
    return std::nullopt;
  }
  return aut;
}

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

// Lines of the form `LETTER -> SYMBOL`, e.g. `{p} -> a`.
ltldom::LetterMapping read_mapping_file(const std::string& path) {
  ltldom::LetterMapping mapping;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string entry = trim(line);
    if (entry.empty() || entry.starts_with('#')) continue;
    const std::size_t arrow = entry.find("->");
    if (arrow == std::string::npos) {
      throw ltldom::ParseError("mapping file: expected 'LETTER -> SYMBOL'", lineno, 1);
    }
    // reuse the lasso letter syntax; a single letter is the loop of ";{...}"
    const ltldom::LassoWord letter_word = ltldom::parse_lasso(";" + trim(entry.substr(0, arrow)));
    if (letter_word.period() != 1 || letter_word.stem_size() != 0) {
      throw ltldom::ParseError("mapping file: expected exactly one letter before '->'", lineno, 1);
    }
    const std::string symbol = trim(entry.substr(arrow + 2));
    if (symbol.empty()) {
      throw ltldom::ParseError("mapping file: empty symbol after '->'", lineno, arrow + 3);
    }
    mapping[letter_word.loop().front()] = symbol;
  }
  return mapping;
}

std::vector<ltldom::Proposition> sampling_alphabet(const std::vector<ltldom::Formula>& formulas,
                                                   const std::optional<ltldom::LetterMapping>& mapping) {
  std::set<ltldom::Proposition> props;
  for (const auto& f : formulas) {
    const auto a = ltldom::atoms(f);
    props.insert(a.begin(), a.end());
  }
  if (mapping) {
    for (const auto& [letter, symbol] : *mapping) {
      for (const auto& name : letter.props()) props.insert(ltldom::Proposition(name));
    }
  }
  return {props.begin(), props.end()};
}

int finish_bool(bool value, const char* yes, const char* no) {
  std::cout << (value ? yes : no) << "\n";
  std::cout << "RESULT " << (value ? yes : no) << "\n";
  return value ? kPass : kFail;
}

int finish_report(const ltldom::CheckReport& report) {
  std::cout << "trials: " << report.trials << "\n";
  if (report.ok()) {
    std::cout << "no counterexample found\n";
    std::cout << "RESULT ok\n";
    return kPass;
  }
  std::cout << "counterexample:\n";
  std::cout << "  word: " << ltldom::render_lasso(report.witness->word) << "\n";
  std::cout << "  position: " << report.witness->position << "\n";
  if (!report.witness->details.empty()) {
    std::cout << "  details: " << report.witness->details << "\n";
  }
  std::cout << "RESULT counterexample\n";
  return kFail;
}

struct EvalArgs {
  std::string formula, word;
  std::uint64_t position = 0;
  bool explain = false;
};

int run_eval(const EvalArgs& args) {
  const ltldom::Formula f = ltldom::parse_formula(args.formula);
  const ltldom::LassoWord w = ltldom::parse_lasso(args.word);
  const ltldom::LabelTable table(w, f);
  if (args.explain) {
    for (const ltldom::Formula& sub : table.order()) {
      if (sub.is(ltldom::Formula::Kind::DominatedBy)) {
        std::cout << "drift(" << ltldom::render(sub)
                  << ") = " << ltldom::loop_drift(w, sub.left(), sub.right()) << "\n";
      }
    }
    std::cout << "labels at position " << args.position << ":\n";
    for (const ltldom::Formula& sub : table.order()) {
      std::cout << "  " << ltldom::render(sub) << " = "
                << (table.at(sub, args.position) ? "true" : "false") << "\n";
    }
  }
  return finish_bool(table.root_at(args.position), "true", "false");
}

struct AcceptArgs {
  std::string automaton, word;
};

int run_accept(const AcceptArgs& args) {
  const auto aut = load_valid_automaton(args.automaton);
  if (!aut) return kUsage;
  const ltldom::SymbolWord w = ltldom::parse_symbol_word(args.word, aut->alphabet());
  const ltldom::RunAnalysis analysis = ltldom::analyze_run(*aut, w);
  for (const auto& [counter, drift] : analysis.drift) {
    const auto& cls = analysis.classification.at(counter);
    std::cout << "counter " << counter << ": drift " << drift << ", unbounded above: "
              << (cls.pos_unbounded ? "yes" : "no")
              << ", unbounded below: " << (cls.neg_unbounded ? "yes" : "no") << "\n";
  }
  return finish_bool(aut->phi().evaluate(analysis.classification), "accepted", "rejected");
}

int finish_written(const ltldom::CountingAutomaton& aut, const std::string& out_path) {
  write_file(out_path, ltldom::write_automaton_json(aut));
  std::cout << "wrote " << out_path << " (states: " << aut.states().size()
            << ", counters: " << aut.counters().size() << ")\n";
  std::cout << "RESULT ok\n";
  return kPass;
}

struct CheckArgs {
  std::string f, g, automaton, map;
  std::size_t samples = 1000;
  std::size_t max_stem = 6;
  std::size_t max_period = 6;
  std::uint64_t seed = 0;

  ltldom::SampleSpec spec(std::vector<ltldom::Proposition> alphabet) const {
    return {std::move(alphabet), max_stem, max_period, samples, seed};
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LTL with a domination operator: evaluation on lasso words, "
               "counting automata, and sampling-based cross checks"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "evaluate a formula on a lasso word");
  eval->add_option("--formula", eval_args.formula, "formula text")->required();
  eval->add_option("--word", eval_args.word, "lasso word, e.g. '{p};{p}{}'")->required();
  eval->add_option("--position", eval_args.position, "evaluation position (default 0)");
  eval->add_flag("--explain", eval_args.explain, "print per-<< drifts and the label row");

  AcceptArgs accept_args;
  CLI::App* accept = app.add_subcommand("accept", "run a counting automaton on a lasso word");
  accept->add_option("--automaton", accept_args.automaton, "automaton file or builtin:lomega")
      ->required();
  accept->add_option("--word", accept_args.word, "symbol lasso, e.g. ';ab'")->required();

  CLI::App* boolean = app.add_subcommand("boolean", "Boolean constructions on automata");
  boolean->require_subcommand(1);
  std::string comp_in, comp_out;
  CLI::App* comp = boolean->add_subcommand("complement", "negate the acceptance condition");
  comp->add_option("--automaton", comp_in, "automaton file or builtin:lomega")->required();
  comp->add_option("--out", comp_out, "output automaton file")->required();
  std::string prod_left, prod_right, prod_mode, prod_out;
  CLI::App* prod = boolean->add_subcommand("product", "synchronous product of two automata");
  prod->add_option("--left", prod_left, "automaton file or builtin:lomega")->required();
  prod->add_option("--right", prod_right, "automaton file or builtin:lomega")->required();
  prod->add_option("--mode", prod_mode, "and | or")
      ->required()
      ->check(CLI::IsMember({"and", "or"}));
  prod->add_option("--out", prod_out, "output automaton file")->required();

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "sampling-based cross checks");
  check->require_subcommand(1);
  auto add_sampling = [&](CLI::App* cmd) {
    cmd->add_option("--samples", check_args.samples, "number of sampled words (default 1000)");
    cmd->add_option("--max-stem", check_args.max_stem, "maximum stem length (default 6)");
    cmd->add_option("--max-period", check_args.max_period, "maximum loop length (default 6)");
    cmd->add_option("--seed", check_args.seed, "sampling seed (default 0)");
  };
  CLI::App* equiv = check->add_subcommand("equiv", "search for a word separating two formulas");
  equiv->add_option("--f", check_args.f, "first formula")->required();
  equiv->add_option("--g", check_args.g, "second formula")->required();
  add_sampling(equiv);
  CLI::App* unsat = check->add_subcommand("unsat", "search for a satisfying word");
  unsat->add_option("--f", check_args.f, "formula")->required();
  add_sampling(unsat);
  CLI::App* agree =
      check->add_subcommand("agree", "compare a formula with an automaton on sampled words");
  agree->add_option("--f", check_args.f, "formula")->required();
  agree->add_option("--automaton", check_args.automaton, "automaton file or builtin:lomega")
      ->required();
  agree->add_option("--map", check_args.map, "letter-to-symbol mapping file");
  add_sampling(agree);

  CLI::App* builtin = app.add_subcommand("builtin", "write a built-in automaton");
  builtin->require_subcommand(1);
  std::string builtin_out;
  CLI::App* lomega = builtin->add_subcommand(
      "lomega", "one-counter automaton of the bounded a/b-difference language");
  lomega->add_option("--out", builtin_out, "output automaton file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (eval->parsed()) return run_eval(eval_args);
    if (accept->parsed()) return run_accept(accept_args);
    if (comp->parsed()) {
      const auto aut = load_valid_automaton(comp_in);
      if (!aut) return kUsage;
      return finish_written(ltldom::complement(*aut), comp_out);
    }
    if (prod->parsed()) {
      const auto left = load_valid_automaton(prod_left);
      const auto right = load_valid_automaton(prod_right);
      if (!left || !right) return kUsage;
      const auto mode = prod_mode == "and" ? ltldom::ProductMode::And : ltldom::ProductMode::Or;
      return finish_written(ltldom::product(*left, *right, mode), prod_out);
    }
    if (equiv->parsed()) {
      const ltldom::Formula f = ltldom::parse_formula(check_args.f);
      const ltldom::Formula g = ltldom::parse_formula(check_args.g);
      return finish_report(
          ltldom::check_equivalent(f, g, check_args.spec(sampling_alphabet({f, g}, std::nullopt))));
    }
    if (unsat->parsed()) {
      const ltldom::Formula f = ltldom::parse_formula(check_args.f);
      return finish_report(
          ltldom::check_unsatisfiable(f, check_args.spec(sampling_alphabet({f}, std::nullopt))));
    }
    if (agree->parsed()) {
      const ltldom::Formula f = ltldom::parse_formula(check_args.f);
      const auto aut = load_valid_automaton(check_args.automaton);
      if (!aut) return kUsage;
      std::optional<ltldom::LetterMapping> mapping;
      if (!check_args.map.empty()) mapping = read_mapping_file(check_args.map);
      return finish_report(ltldom::check_agreement(
          f, *aut, mapping, check_args.spec(sampling_alphabet({f}, mapping))));
    }
    if (lomega->parsed()) return finish_written(ltldom::l_omega_automaton(), builtin_out);
  } catch (const ltldom::ParseError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
