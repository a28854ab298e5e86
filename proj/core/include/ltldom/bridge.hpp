#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ltldom/counting.hpp"
#include "ltldom/formula.hpp"
#include "ltldom/lasso.hpp"
#include "ltldom/semantics.hpp"

namespace ltldom {

/// Parameters of a sampling run. Checks are refutation-based: a clean
/// report is evidence of a property, never a proof.
struct SampleSpec {
  std::vector<Proposition> alphabet;
  std::size_t max_stem = 6;
  std::size_t max_period = 6;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

enum class Verdict { NoCounterexampleFound, Counterexample };

struct Witness {
  LassoWord word;
  std::uint64_t position = 0;
  std::string details;
};

struct CheckReport {
  Verdict verdict = Verdict::NoCounterexampleFound;
  std::optional<Witness> witness;
  std::size_t trials = 0;

  bool ok() const { return verdict == Verdict::NoCounterexampleFound; }
};

/// Samples lasso words and compares f and g at every position below
/// stem + period; the first mismatch is returned as a witness.
CheckReport check_equivalent(const Formula& f, const Formula& g, const SampleSpec& spec);

/// Reports any sampled (word, position) satisfying f.
CheckReport check_unsatisfiable(const Formula& f, const SampleSpec& spec);

/// Explicit letter-to-symbol table for driving an automaton from the logic
/// side, e.g. {p} -> a, {} -> b.
using LetterMapping = std::map<Letter, std::string>;

/// Canonical symbol for a letter: sorted proposition names joined by commas
/// inside braces.
std::string letter_to_symbol(const Letter& letter);

/// Symbol under an explicit mapping; throws std::invalid_argument for a
/// letter the mapping does not cover.
std::string letter_to_symbol(const Letter& letter, const LetterMapping& mapping);

/// Letterwise image of a word; without a mapping the canonical symbols are
/// used.
SymbolWord map_word(const LassoWord& w, const std::optional<LetterMapping>& mapping);

/// Samples lasso words and compares satisfaction of f at position 0 with
/// acceptance of the mapped word by the automaton.
CheckReport check_agreement(const Formula& f, const CountingAutomaton& aut,
                            const std::optional<LetterMapping>& mapping, const SampleSpec& spec);

struct SeparationOutcome {
  CheckReport report;  // headline agreement check (an equivalence counterexample replaces it)
  std::string summary;
};

/// Compares the languages of !((!p) << p) and !p ~ p with the bounded
/// a/b-difference automaton on sampled words ({p} read as a, {} as b), and
/// re-validates the three sampled equivalences around the domination
/// operator: true ~ p vs F G p, p << true vs G F !p, and unsatisfiability
/// of true << p.
///
/// The one-sided formula only bounds #p - #!p from above, so the harness
/// finds words (loops with a majority of {}) that it satisfies but the
/// automaton rejects; the two-sided !p ~ p matches the automaton on every
/// sample. The headline report is the one-sided agreement check.
SeparationOutcome separation_demo(const SampleSpec& spec);

}  // namespace ltldom
