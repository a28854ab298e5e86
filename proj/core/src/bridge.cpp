#include "ltldom/bridge.hpp"

#include <sstream>
#include <stdexcept>

namespace ltldom {

namespace {

void check_spec(const SampleSpec& spec) {
  if (spec.samples < 1) throw std::invalid_argument("sample spec: samples must be >= 1");
  if (spec.max_period < 1) throw std::invalid_argument("sample spec: max_period must be >= 1");
}

std::string truth_details(const std::string& lhs, bool lhs_value, const std::string& rhs,
                          bool rhs_value) {
  std::ostringstream out;
  out << lhs << " = " << (lhs_value ? "true" : "false") << ", " << rhs << " = "
      << (rhs_value ? "true" : "false");
  return out.str();
}

}  // namespace

CheckReport check_equivalent(const Formula& f, const Formula& g, const SampleSpec& spec) {
  check_spec(spec);
  std::mt19937_64 rng(spec.seed);
  for (std::size_t trial = 1; trial <= spec.samples; ++trial) {
    const LassoWord w = random_lasso(spec.alphabet, spec.max_stem, spec.max_period, rng);
    const LabelTable tf(w, f);
    const LabelTable tg(w, g);
    for (std::uint64_t i = 0; i < tf.width(); ++i) {
      const bool lhs = tf.root_at(i);
      const bool rhs = tg.root_at(i);
      if (lhs != rhs) {
        return {Verdict::Counterexample,
                Witness{w, i, truth_details(render(f), lhs, render(g), rhs)}, trial};
      }
    }
  }
  return {Verdict::NoCounterexampleFound, std::nullopt, spec.samples};
}

CheckReport check_unsatisfiable(const Formula& f, const SampleSpec& spec) {
  check_spec(spec);
  std::mt19937_64 rng(spec.seed);
  for (std::size_t trial = 1; trial <= spec.samples; ++trial) {
    const LassoWord w = random_lasso(spec.alphabet, spec.max_stem, spec.max_period, rng);
    const LabelTable table(w, f);
    for (std::uint64_t i = 0; i < table.width(); ++i) {
      if (table.root_at(i)) {
        return {Verdict::Counterexample, Witness{w, i, render(f) + " = true"}, trial};
      }
    }
  }
  return {Verdict::NoCounterexampleFound, std::nullopt, spec.samples};
}

std::string letter_to_symbol(const Letter& letter) { return render_letter(letter); }

std::string letter_to_symbol(const Letter& letter, const LetterMapping& mapping) {
  auto it = mapping.find(letter);
  if (it == mapping.end()) {
    throw std::invalid_argument("unmapped letter: " + render_letter(letter));
  }
  return it->second;
}

SymbolWord map_word(const LassoWord& w, const std::optional<LetterMapping>& mapping) {
  auto symbol = [&](const Letter& letter) {
    return mapping ? letter_to_symbol(letter, *mapping) : letter_to_symbol(letter);
  };
  std::vector<std::string> stem, loop;
  stem.reserve(w.stem_size());
  loop.reserve(w.period());
  for (const Letter& l : w.stem()) stem.push_back(symbol(l));
  for (const Letter& l : w.loop()) loop.push_back(symbol(l));
  return SymbolWord(std::move(stem), std::move(loop));
}

CheckReport check_agreement(const Formula& f, const CountingAutomaton& aut,
                            const std::optional<LetterMapping>& mapping, const SampleSpec& spec) {
  check_spec(spec);
  std::mt19937_64 rng(spec.seed);
  for (std::size_t trial = 1; trial <= spec.samples; ++trial) {
    const LassoWord w = random_lasso(spec.alphabet, spec.max_stem, spec.max_period, rng);
    const bool lhs = holds(w, 0, f);
    const bool rhs = accepts(aut, map_word(w, mapping));
    if (lhs != rhs) {
      return {Verdict::Counterexample,
              Witness{w, 0, truth_details(render(f), lhs, "automaton", rhs)}, trial};
    }
  }
  return {Verdict::NoCounterexampleFound, std::nullopt, spec.samples};
}

SeparationOutcome separation_demo(const SampleSpec& spec) {
  const Formula p = Formula::atom("p");
  const Formula one_sided = Formula::negation(Formula::dominated_by(Formula::negation(p), p));
  const Formula two_sided = Formula::almost_equally(Formula::negation(p), p);

  SampleSpec agree_spec = spec;
  agree_spec.alphabet = {Proposition("p")};
  const LetterMapping mapping{{Letter{"p"}, "a"}, {Letter{}, "b"}};
  const CheckReport agreement =
      check_agreement(one_sided, l_omega_automaton(), mapping, agree_spec);
  const CheckReport agreement_two_sided =
      check_agreement(two_sided, l_omega_automaton(), mapping, agree_spec);

  const CheckReport eq_top = check_equivalent(Formula::almost_equally(Formula::top(), p),
                                              Formula::eventually(Formula::always(p)), spec);
  const CheckReport eq_dom =
      check_equivalent(Formula::dominated_by(p, Formula::top()),
                       Formula::always(Formula::eventually(Formula::negation(p))), spec);
  const CheckReport unsat = check_unsatisfiable(Formula::dominated_by(Formula::top(), p), spec);

  std::ostringstream summary;
  auto line = [&](const std::string& what, const CheckReport& report) {
    summary << what << ": "
            << (report.ok() ? "no counterexample in " + std::to_string(report.trials) + " trials"
                            : "counterexample after " + std::to_string(report.trials) +
                                  " trials: " + render_lasso(report.witness->word) +
                                  " at position " + std::to_string(report.witness->position))
            << "\n";
  };
  line("!((!p) << p) vs bounded a/b-difference automaton ({p} -> a, {} -> b)", agreement);
  if (!agreement.ok()) {
    summary << "  (!((!p) << p) only bounds #p - #!p from above; words whose loop is mostly {} "
               "satisfy it while the automaton rejects them)\n";
  }
  line("!p ~ p vs bounded a/b-difference automaton ({p} -> a, {} -> b)", agreement_two_sided);
  line("true ~ p vs F G p", eq_top);
  line("p << true vs G F !p", eq_dom);
  line("true << p unsatisfiable", unsat);
  summary << "non-regularity of the bounded-difference language is a known result and is not "
             "re-checked by sampling\n";

  SeparationOutcome out;
  out.summary = summary.str();
  out.report = agreement;
  for (const CheckReport* r : {&agreement, &eq_top, &eq_dom, &unsat}) {
    if (!r->ok()) {
      out.report = *r;
      break;
    }
  }
  return out;
}

}  // namespace ltldom
