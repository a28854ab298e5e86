#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ltldom/lasso.hpp"

namespace ltldom {

/// Per-counter verdict after analyzing a run: whether the counter value is
/// unbounded above and/or below along the run.
struct CounterClassification {
  bool pos_unbounded = false;
  bool neg_unbounded = false;

  bool operator==(const CounterClassification&) const = default;
};

/// Boolean acceptance condition over the atoms c+ ("counter c is unbounded
/// above") and c- ("unbounded below"), with constants true/false.
class AcceptanceFormula {
 public:
  enum class Kind { True, False, Plus, Minus, Not, And, Or };

  static AcceptanceFormula constant(bool value);
  static AcceptanceFormula plus(std::string counter);
  static AcceptanceFormula minus(std::string counter);
  static AcceptanceFormula negation(AcceptanceFormula a);
  static AcceptanceFormula conjunction(AcceptanceFormula a, AcceptanceFormula b);
  static AcceptanceFormula disjunction(AcceptanceFormula a, AcceptanceFormula b);

  Kind kind() const { return node_->kind; }
  const std::string& counter() const { return node_->counter; }
  AcceptanceFormula left() const { return AcceptanceFormula(node_->lhs); }
  AcceptanceFormula right() const { return AcceptanceFormula(node_->rhs); }

  /// Counters named by the atoms of this condition.
  std::set<std::string> counters() const;

  bool evaluate(const std::map<std::string, CounterClassification>& classification) const;

  /// Structurally identical condition with every counter name rewritten.
  AcceptanceFormula rename_counters(const std::function<std::string(const std::string&)>& fn) const;

  bool operator==(const AcceptanceFormula& other) const;

 private:
  struct Node {
    Kind kind;
    std::string counter;  // Plus/Minus only
    std::shared_ptr<const Node> lhs, rhs;
  };

  explicit AcceptanceFormula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Grammar: atoms IDENT"+" / IDENT"-", constants true/false, connectives
/// ! & | with the formula precedence (! tightest, then &, then |).
AcceptanceFormula parse_acceptance(const std::string& text);
std::string render(const AcceptanceFormula& phi);

/// One entry of the transition function: target state plus the disjoint
/// sets of counters to increment and decrement.
struct Transition {
  std::string to;
  std::vector<std::string> inc;
  std::vector<std::string> dec;

  bool operator==(const Transition&) const = default;
};

/// Deterministic finite-state machine with counters it may change but never
/// read; acceptance is a Boolean condition on counter (un)boundedness along
/// the unique run.
class CountingAutomaton {
 public:
  CountingAutomaton(std::vector<std::string> states, std::vector<std::string> counters,
                    std::vector<std::string> alphabet, std::string initial,
                    AcceptanceFormula phi);

  /// Adds or overwrites the transition for (from, symbol). Increment and
  /// decrement sets are sorted and deduplicated.
  void set_transition(std::string from, std::string symbol, std::string to,
                      std::vector<std::string> inc = {}, std::vector<std::string> dec = {});

  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& counters() const { return counters_; }
  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::string& initial() const { return initial_; }
  const AcceptanceFormula& phi() const { return phi_; }
  void set_phi(AcceptanceFormula phi) { phi_ = std::move(phi); }

  const std::map<std::pair<std::string, std::string>, Transition>& delta() const { return delta_; }

  /// Transition for (from, symbol); throws std::out_of_range if missing.
  const Transition& transition(const std::string& from, const std::string& symbol) const;

  /// Full list of invariant violations; empty means well-formed: the
  /// transition function is total on states x alphabet, increment and
  /// decrement sets are disjoint, and every referenced name exists.
  std::vector<std::string> validate() const;

 private:
  std::vector<std::string> states_;
  std::vector<std::string> counters_;
  std::vector<std::string> alphabet_;
  std::string initial_;
  AcceptanceFormula phi_;
  std::map<std::pair<std::string, std::string>, Transition> delta_;
};

using CounterValuation = std::map<std::string, std::int64_t>;

/// All counters at zero.
CounterValuation initial_valuation(const CountingAutomaton& aut);

/// One transition step: counters in the increment set go up by one, those
/// in the decrement set down by one. Overflow is reported, never wrapped.
std::pair<std::string, CounterValuation> step(const CountingAutomaton& aut,
                                              const std::string& state,
                                              const CounterValuation& valuation,
                                              const std::string& symbol);

struct RunConfiguration {
  std::string state;
  std::size_t phase;  // canonical word index in [0, s+p)
  CounterValuation valuation;
};

/// The eventual cycle of the unique run on a lasso. The configuration
/// (state, phase) at cycle_start repeats at cycle_start + cycle_length;
/// beyond that point each counter changes by exactly drift[c] per cycle,
/// so it is unbounded above iff drift[c] > 0 and below iff drift[c] < 0.
struct RunAnalysis {
  std::vector<RunConfiguration> visited;  // up to and including the repeat
  std::size_t cycle_start = 0;
  std::size_t cycle_length = 0;
  std::map<std::string, std::int64_t> drift;
  std::map<std::string, CounterClassification> classification;
};

/// Simulates the unique run until a (state, phase) pair repeats; pigeonhole
/// bounds the prefix by |Q|*(s+p) steps and the cycle by |Q|*p.
RunAnalysis analyze_run(const CountingAutomaton& aut, const SymbolWord& w);

bool accepts(const CountingAutomaton& aut, const SymbolWord& w);

/// Same automaton with the acceptance condition negated. The transition
/// function is deterministic and total, so every word has exactly one run
/// and this complements the accepted language.
CountingAutomaton complement(const CountingAutomaton& aut);

enum class ProductMode { And, Or };

/// Synchronous product on the shared alphabet: state pairs, tagged disjoint
/// counter union, componentwise increments/decrements, and the two
/// acceptance conditions combined by the mode.
CountingAutomaton product(const CountingAutomaton& a, const CountingAutomaton& b,
                          ProductMode mode);

/// One state, one counter c0 over {a, b}: a increments, b decrements, and
/// acceptance !c0+ & !c0- keeps exactly the words whose prefix a/b count
/// difference stays bounded.
CountingAutomaton l_omega_automaton();

/// True iff the a/b occurrence difference over finite prefixes is bounded,
/// decided by an explicit scan of the loop (bounded iff the per-lap net
/// difference is zero). No automaton machinery involved.
bool prefix_count_oracle(const SymbolWord& w);

/// Deterministic omega-automaton accepting when the set of states visited
/// infinitely often belongs to the acceptance family.
struct MullerAutomaton {
  std::vector<std::string> states;
  std::vector<std::string> alphabet;
  std::map<std::pair<std::string, std::string>, std::string> delta;
  std::string initial;
  std::vector<std::set<std::string>> acceptance_family;

  std::vector<std::string> validate() const;
};

/// One monotone counter per state, incremented on every transition into it;
/// c_q+ then holds iff q is visited infinitely often, and the acceptance
/// condition enumerates the family as exact infinite-visitation sets.
CountingAutomaton muller_to_counting(const MullerAutomaton& m);

/// JSON document with fields states, counters, alphabet, initial, delta
/// (array of {from, symbol, to, inc, dec}) and phi (rendered acceptance
/// condition). Writing is deterministic, so write(read(write(a))) is
/// byte-identical to write(a).
CountingAutomaton read_automaton_json(const std::string& text);
std::string write_automaton_json(const CountingAutomaton& aut);

/// Tokenizes STEM;LOOP against the alphabet by greedy longest match, so
/// both single-character symbols (";ab") and brace-form symbols
/// (";{p}{}") work without a separator.
SymbolWord parse_symbol_word(const std::string& text, const std::vector<std::string>& alphabet);
std::string render_symbol_word(const SymbolWord& w);

}  // namespace ltldom
