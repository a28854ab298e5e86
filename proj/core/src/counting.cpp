#include "ltldom/counting.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "ltldom/errors.hpp"

namespace ltldom {

// ---------------------------------------------------------------------------
// Acceptance conditions.

AcceptanceFormula AcceptanceFormula::constant(bool value) {
  return AcceptanceFormula(std::make_shared<Node>(
      Node{value ? Kind::True : Kind::False, {}, nullptr, nullptr}));
}

AcceptanceFormula AcceptanceFormula::plus(std::string counter) {
  return AcceptanceFormula(std::make_shared<Node>(Node{Kind::Plus, std::move(counter), nullptr, nullptr}));
}

AcceptanceFormula AcceptanceFormula::minus(std::string counter) {
  return AcceptanceFormula(std::make_shared<Node>(Node{Kind::Minus, std::move(counter), nullptr, nullptr}));
}

AcceptanceFormula AcceptanceFormula::negation(AcceptanceFormula a) {
  return AcceptanceFormula(std::make_shared<Node>(Node{Kind::Not, {}, std::move(a.node_), nullptr}));
}

AcceptanceFormula AcceptanceFormula::conjunction(AcceptanceFormula a, AcceptanceFormula b) {
  return AcceptanceFormula(
      std::make_shared<Node>(Node{Kind::And, {}, std::move(a.node_), std::move(b.node_)}));
}

AcceptanceFormula AcceptanceFormula::disjunction(AcceptanceFormula a, AcceptanceFormula b) {
  return AcceptanceFormula(
      std::make_shared<Node>(Node{Kind::Or, {}, std::move(a.node_), std::move(b.node_)}));
}

std::set<std::string> AcceptanceFormula::counters() const {
  std::set<std::string> out;
  auto walk = [&](auto&& self, const Node* n) -> void {
    if (!n) return;
    if (n->kind == Kind::Plus || n->kind == Kind::Minus) out.insert(n->counter);
    self(self, n->lhs.get());
    self(self, n->rhs.get());
  };
  walk(walk, node_.get());
  return out;
}

bool AcceptanceFormula::evaluate(
    const std::map<std::string, CounterClassification>& classification) const {
  switch (kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Plus:
    case Kind::Minus: {
      auto it = classification.find(counter());
      if (it == classification.end()) {
        throw std::invalid_argument("acceptance condition references unknown counter: " + counter());
      }
      return kind() == Kind::Plus ? it->second.pos_unbounded : it->second.neg_unbounded;
    }
    case Kind::Not: return !left().evaluate(classification);
    case Kind::And: return left().evaluate(classification) && right().evaluate(classification);
    case Kind::Or: return left().evaluate(classification) || right().evaluate(classification);
  }
  return false;
}

AcceptanceFormula AcceptanceFormula::rename_counters(
    const std::function<std::string(const std::string&)>& fn) const {
  switch (kind()) {
    case Kind::True:
    case Kind::False: return *this;
    case Kind::Plus: return plus(fn(counter()));
    case Kind::Minus: return minus(fn(counter()));
    case Kind::Not: return negation(left().rename_counters(fn));
    case Kind::And: return conjunction(left().rename_counters(fn), right().rename_counters(fn));
    case Kind::Or: return disjunction(left().rename_counters(fn), right().rename_counters(fn));
  }
  return *this;
}

bool AcceptanceFormula::operator==(const AcceptanceFormula& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  if (a == b) return true;
  if (a->kind != b->kind || a->counter != b->counter) return false;
  if (a->lhs && !(left() == other.left())) return false;
  if (a->rhs && !(right() == other.right())) return false;
  return true;
}

namespace {

int phi_precedence(AcceptanceFormula::Kind k) {
  switch (k) {
    case AcceptanceFormula::Kind::True:
    case AcceptanceFormula::Kind::False:
    case AcceptanceFormula::Kind::Plus:
    case AcceptanceFormula::Kind::Minus: return 4;
    case AcceptanceFormula::Kind::Not: return 3;
    case AcceptanceFormula::Kind::And: return 2;
    case AcceptanceFormula::Kind::Or: return 1;
  }
  return 0;
}

void phi_emit(const AcceptanceFormula& phi, int required, std::string& out) {
  const bool parens = phi_precedence(phi.kind()) < required;
  if (parens) out += '(';
  switch (phi.kind()) {
    case AcceptanceFormula::Kind::True: out += "true"; break;
    case AcceptanceFormula::Kind::False: out += "false"; break;
    case AcceptanceFormula::Kind::Plus: out += phi.counter() + "+"; break;
    case AcceptanceFormula::Kind::Minus: out += phi.counter() + "-"; break;
    case AcceptanceFormula::Kind::Not:
      out += '!';
      phi_emit(phi.left(), 3, out);
      break;
    case AcceptanceFormula::Kind::And:
      phi_emit(phi.left(), 2, out);
      out += " & ";
      phi_emit(phi.right(), 3, out);
      break;
    case AcceptanceFormula::Kind::Or:
      phi_emit(phi.left(), 1, out);
      out += " | ";
      phi_emit(phi.right(), 2, out);
      break;
  }
  if (parens) out += ')';
}

// P ::= P1 { "|" P1 };  P1 ::= P2 { "&" P2 };
// P2 ::= "!" P2 | IDENT("+"|"-") | "true" | "false" | "(" P ")"
class PhiParser {
 public:
  explicit PhiParser(const std::string& text) : text_(text) {}

  AcceptanceFormula parse() {
    AcceptanceFormula phi = parse_or();
    skip_space();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return phi;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError("acceptance condition: " + message, 1, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  AcceptanceFormula parse_or() {
    AcceptanceFormula phi = parse_and();
    while (eat('|')) phi = AcceptanceFormula::disjunction(std::move(phi), parse_and());
    return phi;
  }

  AcceptanceFormula parse_and() {
    AcceptanceFormula phi = parse_unary();
    while (eat('&')) phi = AcceptanceFormula::conjunction(std::move(phi), parse_unary());
    return phi;
  }

  AcceptanceFormula parse_unary() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected an atom, got end of input");
    if (eat('!')) return AcceptanceFormula::negation(parse_unary());
    if (eat('(')) {
      AcceptanceFormula phi = parse_or();
      if (!eat(')')) fail("expected ')'");
      return phi;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    std::string word = text_.substr(start, pos_ - start);
    if (word == "true") return AcceptanceFormula::constant(true);
    if (word == "false") return AcceptanceFormula::constant(false);
    if (word.empty()) fail(std::string("expected an atom, got '") + text_[pos_] + "'");
    skip_space();
    if (eat('+')) return AcceptanceFormula::plus(std::move(word));
    if (eat('-')) return AcceptanceFormula::minus(std::move(word));
    fail("expected '+' or '-' after counter name '" + word + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

AcceptanceFormula parse_acceptance(const std::string& text) { return PhiParser(text).parse(); }

std::string render(const AcceptanceFormula& phi) {
  std::string out;
  phi_emit(phi, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Automaton model.

CountingAutomaton::CountingAutomaton(std::vector<std::string> states,
                                     std::vector<std::string> counters,
                                     std::vector<std::string> alphabet, std::string initial,
                                     AcceptanceFormula phi)
    : states_(std::move(states)),
      counters_(std::move(counters)),
      alphabet_(std::move(alphabet)),
      initial_(std::move(initial)),
      phi_(std::move(phi)) {}

void CountingAutomaton::set_transition(std::string from, std::string symbol, std::string to,
                                       std::vector<std::string> inc,
                                       std::vector<std::string> dec) {
  std::ranges::sort(inc);
  inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
  std::ranges::sort(dec);
  dec.erase(std::unique(dec.begin(), dec.end()), dec.end());
  delta_[{std::move(from), std::move(symbol)}] =
      Transition{std::move(to), std::move(inc), std::move(dec)};
}

const Transition& CountingAutomaton::transition(const std::string& from,
                                                const std::string& symbol) const {
  auto it = delta_.find({from, symbol});
  if (it == delta_.end()) {
    throw std::out_of_range("delta not total: no transition for (" + from + ", " + symbol + ")");
  }
  return it->second;
}

namespace {

bool has_duplicates(std::vector<std::string> names) {
  std::ranges::sort(names);
  return std::adjacent_find(names.begin(), names.end()) != names.end();
}

}  // namespace

std::vector<std::string> CountingAutomaton::validate() const {
  std::vector<std::string> errors;
  auto err = [&](std::string message) { errors.push_back(std::move(message)); };

  if (states_.empty()) err("automaton has no states");
  if (alphabet_.empty()) err("automaton has an empty alphabet");
  if (has_duplicates(states_)) err("duplicate state names");
  if (has_duplicates(counters_)) err("duplicate counter names");
  if (has_duplicates(alphabet_)) err("duplicate alphabet symbols");
  for (const auto& name : states_) {
    if (name.empty()) err("empty state name");
  }
  for (const auto& name : counters_) {
    if (name.empty()) err("empty counter name");
  }
  for (const auto& name : alphabet_) {
    if (name.empty()) err("empty alphabet symbol");
  }

  const std::unordered_set<std::string> states(states_.begin(), states_.end());
  const std::unordered_set<std::string> counters(counters_.begin(), counters_.end());
  const std::unordered_set<std::string> alphabet(alphabet_.begin(), alphabet_.end());

  if (!states.contains(initial_)) err("initial state '" + initial_ + "' is not a state");

  for (const auto& q : states_) {
    for (const auto& a : alphabet_) {
      if (!delta_.contains({q, a})) {
        err("delta not total: missing transition for (" + q + ", " + a + ")");
      }
    }
  }
  for (const auto& [key, tr] : delta_) {
    const auto& [from, symbol] = key;
    const std::string where = " on transition (" + from + ", " + symbol + ")";
    if (!states.contains(from)) err("transition from unknown state '" + from + "'");
    if (!alphabet.contains(symbol)) err("transition on unknown symbol '" + symbol + "'");
    if (!states.contains(tr.to)) err("transition to unknown state '" + tr.to + "'" + where);
    for (const auto& c : tr.inc) {
      if (!counters.contains(c)) err("unknown counter '" + c + "' in C+" + where);
    }
    for (const auto& c : tr.dec) {
      if (!counters.contains(c)) err("unknown counter '" + c + "' in C-" + where);
    }
    for (const auto& c : tr.inc) {
      if (std::ranges::binary_search(tr.dec, c)) {
        err("C+ and C- overlap on counter '" + c + "'" + where);
      }
    }
  }
  for (const auto& c : phi_.counters()) {
    if (!counters.contains(c)) {
      err("acceptance condition references unknown counter '" + c + "'");
    }
  }
  return errors;
}

CounterValuation initial_valuation(const CountingAutomaton& aut) {
  CounterValuation v;
  for (const auto& c : aut.counters()) v[c] = 0;
  return v;
}

std::pair<std::string, CounterValuation> step(const CountingAutomaton& aut,
                                              const std::string& state,
                                              const CounterValuation& valuation,
                                              const std::string& symbol) {
  if (std::ranges::find(aut.alphabet(), symbol) == aut.alphabet().end()) {
    throw std::invalid_argument("unknown symbol '" + symbol + "'");
  }
  const Transition& tr = aut.transition(state, symbol);
  CounterValuation next = valuation;
  for (const auto& c : tr.inc) {
    std::int64_t& v = next[c];
    if (v == std::numeric_limits<std::int64_t>::max()) {
      throw std::overflow_error("counter overflow on '" + c + "'");
    }
    ++v;
  }
  for (const auto& c : tr.dec) {
    std::int64_t& v = next[c];
    if (v == std::numeric_limits<std::int64_t>::min()) {
      throw std::overflow_error("counter overflow on '" + c + "'");
    }
    --v;
  }
  return {tr.to, std::move(next)};
}

RunAnalysis analyze_run(const CountingAutomaton& aut, const SymbolWord& w) {
  RunAnalysis out;
  std::map<std::pair<std::string, std::size_t>, std::size_t> first_seen;
  std::string state = aut.initial();
  CounterValuation valuation = initial_valuation(aut);
  for (std::uint64_t j = 0;; ++j) {
    const std::size_t phase = w.table_index(j);
    out.visited.push_back({state, phase, valuation});
    auto [it, fresh] = first_seen.emplace(std::make_pair(state, phase), out.visited.size() - 1);
    if (!fresh) {
      out.cycle_start = it->second;
      out.cycle_length = out.visited.size() - 1 - it->second;
      break;
    }
    std::tie(state, valuation) = step(aut, state, valuation, w.at(j));
  }
  const CounterValuation& start = out.visited[out.cycle_start].valuation;
  const CounterValuation& end = out.visited[out.cycle_start + out.cycle_length].valuation;
  for (const auto& c : aut.counters()) {
    const std::int64_t drift = end.at(c) - start.at(c);
    out.drift[c] = drift;
    out.classification[c] = CounterClassification{drift > 0, drift < 0};
  }
  return out;
}

bool accepts(const CountingAutomaton& aut, const SymbolWord& w) {
  return aut.phi().evaluate(analyze_run(aut, w).classification);
}

CountingAutomaton complement(const CountingAutomaton& aut) {
  CountingAutomaton out = aut;
  out.set_phi(AcceptanceFormula::negation(aut.phi()));
  return out;
}

namespace {

std::string pair_name(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

std::vector<std::string> tagged(const std::vector<std::string>& names, const char* prefix) {
  std::vector<std::string> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(prefix + n);
  return out;
}

}  // namespace

CountingAutomaton product(const CountingAutomaton& a, const CountingAutomaton& b,
                          ProductMode mode) {
  std::vector<std::string> sa = a.alphabet(), sb = b.alphabet();
  std::ranges::sort(sa);
  std::ranges::sort(sb);
  if (sa != sb) throw std::invalid_argument("product: alphabet mismatch");

  std::vector<std::string> states;
  states.reserve(a.states().size() * b.states().size());
  for (const auto& qa : a.states()) {
    for (const auto& qb : b.states()) states.push_back(pair_name(qa, qb));
  }
  std::vector<std::string> counters = tagged(a.counters(), "l_");
  {
    std::vector<std::string> right = tagged(b.counters(), "r_");
    counters.insert(counters.end(), right.begin(), right.end());
  }
  const AcceptanceFormula phi_a =
      a.phi().rename_counters([](const std::string& c) { return "l_" + c; });
  const AcceptanceFormula phi_b =
      b.phi().rename_counters([](const std::string& c) { return "r_" + c; });
  AcceptanceFormula phi = mode == ProductMode::And
                              ? AcceptanceFormula::conjunction(phi_a, phi_b)
                              : AcceptanceFormula::disjunction(phi_a, phi_b);

  CountingAutomaton out(std::move(states), std::move(counters), a.alphabet(),
                        pair_name(a.initial(), b.initial()), std::move(phi));
  for (const auto& qa : a.states()) {
    for (const auto& qb : b.states()) {
      for (const auto& symbol : a.alphabet()) {
        const Transition& ta = a.transition(qa, symbol);
        const Transition& tb = b.transition(qb, symbol);
        std::vector<std::string> inc = tagged(ta.inc, "l_");
        {
          std::vector<std::string> right = tagged(tb.inc, "r_");
          inc.insert(inc.end(), right.begin(), right.end());
        }
        std::vector<std::string> dec = tagged(ta.dec, "l_");
        {
          std::vector<std::string> right = tagged(tb.dec, "r_");
          dec.insert(dec.end(), right.begin(), right.end());
        }
        out.set_transition(pair_name(qa, qb), symbol, pair_name(ta.to, tb.to), std::move(inc),
                           std::move(dec));
      }
    }
  }
  return out;
}

CountingAutomaton l_omega_automaton() {
  CountingAutomaton aut({"q"}, {"c0"}, {"a", "b"}, "q",
                        AcceptanceFormula::conjunction(
                            AcceptanceFormula::negation(AcceptanceFormula::plus("c0")),
                            AcceptanceFormula::negation(AcceptanceFormula::minus("c0"))));
  aut.set_transition("q", "a", "q", {"c0"}, {});
  aut.set_transition("q", "b", "q", {}, {"c0"});
  return aut;
}

bool prefix_count_oracle(const SymbolWord& w) {
  auto check = [](const std::string& symbol) {
    if (symbol != "a" && symbol != "b") {
      throw std::invalid_argument("prefix_count_oracle: symbol '" + symbol +
                                  "' is not 'a' or 'b'");
    }
  };
  for (const auto& symbol : w.stem()) check(symbol);
  // the stem shifts the difference by a constant; only the per-lap net
  // change decides boundedness
  std::int64_t net = 0;
  for (const auto& symbol : w.loop()) {
    check(symbol);
    net += symbol == "a" ? 1 : -1;
  }
  return net == 0;
}

// ---------------------------------------------------------------------------
// Muller automata.

std::vector<std::string> MullerAutomaton::validate() const {
  std::vector<std::string> errors;
  auto err = [&](std::string message) { errors.push_back(std::move(message)); };

  if (states.empty()) err("automaton has no states");
  if (alphabet.empty()) err("automaton has an empty alphabet");
  const std::unordered_set<std::string> state_set(states.begin(), states.end());
  const std::unordered_set<std::string> symbol_set(alphabet.begin(), alphabet.end());
  if (!state_set.contains(initial)) err("initial state '" + initial + "' is not a state");
  for (const auto& q : states) {
    for (const auto& a : alphabet) {
      if (!delta.contains({q, a})) {
        err("delta not total: missing transition for (" + q + ", " + a + ")");
      }
    }
  }
  for (const auto& [key, to] : delta) {
    if (!state_set.contains(key.first)) err("transition from unknown state '" + key.first + "'");
    if (!symbol_set.contains(key.second)) err("transition on unknown symbol '" + key.second + "'");
    if (!state_set.contains(to)) err("transition to unknown state '" + to + "'");
  }
  for (const auto& member : acceptance_family) {
    for (const auto& q : member) {
      if (!state_set.contains(q)) err("acceptance family references unknown state '" + q + "'");
    }
  }
  return errors;
}

CountingAutomaton muller_to_counting(const MullerAutomaton& m) {
  auto counter_of = [](const std::string& state) { return "c_" + state; };

  std::vector<std::string> counters;
  counters.reserve(m.states.size());
  for (const auto& q : m.states) counters.push_back(counter_of(q));

  // counters only ever increase, so c_q+ holds exactly when q is entered
  // infinitely often
  AcceptanceFormula phi = AcceptanceFormula::constant(false);
  bool first_member = true;
  for (const auto& member : m.acceptance_family) {
    AcceptanceFormula clause = AcceptanceFormula::constant(true);
    bool first_clause = true;
    for (const auto& q : m.states) {
      AcceptanceFormula atom = AcceptanceFormula::plus(counter_of(q));
      if (!member.contains(q)) atom = AcceptanceFormula::negation(std::move(atom));
      clause = first_clause ? std::move(atom)
                            : AcceptanceFormula::conjunction(std::move(clause), std::move(atom));
      first_clause = false;
    }
    phi = first_member ? std::move(clause)
                       : AcceptanceFormula::disjunction(std::move(phi), std::move(clause));
    first_member = false;
  }

  CountingAutomaton out(m.states, std::move(counters), m.alphabet, m.initial, std::move(phi));
  for (const auto& [key, to] : m.delta) {
    out.set_transition(key.first, key.second, to, {counter_of(to)}, {});
  }
  return out;
}

// ---------------------------------------------------------------------------
// File format.

CountingAutomaton read_automaton_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("automaton file: invalid JSON: ") + e.what());
  }
  try {
    auto names = [&](const char* field) {
      return doc.at(field).get<std::vector<std::string>>();
    };
    CountingAutomaton out(names("states"), names("counters"), names("alphabet"),
                          doc.at("initial").get<std::string>(),
                          parse_acceptance(doc.at("phi").get<std::string>()));
    for (const auto& entry : doc.at("delta")) {
      const auto from = entry.at("from").get<std::string>();
      const auto symbol = entry.at("symbol").get<std::string>();
      if (out.delta().contains({from, symbol})) {
        throw std::runtime_error("automaton file: duplicate transition for (" + from + ", " +
                                 symbol + ")");
      }
      out.set_transition(from, symbol, entry.at("to").get<std::string>(),
                         entry.at("inc").get<std::vector<std::string>>(),
                         entry.at("dec").get<std::vector<std::string>>());
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("automaton file: ") + e.what());
  }
}

std::string write_automaton_json(const CountingAutomaton& aut) {
  nlohmann::json doc;
  doc["states"] = aut.states();
  doc["counters"] = aut.counters();
  doc["alphabet"] = aut.alphabet();
  doc["initial"] = aut.initial();
  nlohmann::json delta = nlohmann::json::array();
  for (const auto& [key, tr] : aut.delta()) {
    delta.push_back({{"from", key.first},
                     {"symbol", key.second},
                     {"to", tr.to},
                     {"inc", tr.inc},
                     {"dec", tr.dec}});
  }
  doc["delta"] = std::move(delta);
  doc["phi"] = render(aut.phi());
  return doc.dump(2) + "\n";
}

SymbolWord parse_symbol_word(const std::string& text, const std::vector<std::string>& alphabet) {
  const std::size_t sep = text.find(';');
  if (sep == std::string::npos) throw ParseError("expected ';' between stem and loop", 1, text.size() + 1);
  if (text.find(';', sep + 1) != std::string::npos) {
    throw ParseError("more than one ';' in symbol word", 1, text.find(';', sep + 1) + 1);
  }
  auto tokenize = [&](std::string_view part, std::size_t offset) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < part.size()) {
      if (std::isspace(static_cast<unsigned char>(part[pos]))) {
        ++pos;
        continue;
      }
      // greedy longest match against the alphabet
      const std::string* best = nullptr;
      for (const auto& symbol : alphabet) {
        if (!symbol.empty() && part.substr(pos, symbol.size()) == symbol &&
            (!best || symbol.size() > best->size())) {
          best = &symbol;
        }
      }
      if (!best) {
        throw ParseError("no alphabet symbol matches '" + std::string(part.substr(pos)) + "'", 1,
                         offset + pos + 1);
      }
      out.push_back(*best);
      pos += best->size();
    }
    return out;
  };
  std::vector<std::string> stem = tokenize(std::string_view(text).substr(0, sep), 0);
  std::vector<std::string> loop = tokenize(std::string_view(text).substr(sep + 1), sep + 1);
  if (loop.empty()) throw ParseError("lasso loop must contain at least one symbol", 1, sep + 2);
  return SymbolWord(std::move(stem), std::move(loop));
}

std::string render_symbol_word(const SymbolWord& w) {
  std::string out;
  for (const auto& symbol : w.stem()) out += symbol;
  out += ';';
  for (const auto& symbol : w.loop()) out += symbol;
  return out;
}

}  // namespace ltldom
