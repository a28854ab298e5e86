#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ltldom {

bool is_valid_proposition_name(std::string_view name);

/// An atomic proposition. Names are nonempty identifiers starting with a
/// lowercase letter and may not be one of the reserved tokens
/// X, U, F, G, true, false.
class Proposition {
 public:
  explicit Proposition(std::string name);

  const std::string& name() const { return name_; }

  bool operator==(const Proposition&) const = default;
  auto operator<=>(const Proposition&) const = default;

 private:
  std::string name_;
};

/// Immutable formula tree with core connectives Atom, Not, And, Next (X),
/// Until (U) and DominatedBy (<<). Everything else the concrete syntax
/// offers (|, ->, true, false, F, G, ~) is sugar and is desugared by the
/// factory functions below, so evaluators only ever see the six core cases.
///
/// Values are cheap to copy (shared immutable nodes) and structurally
/// comparable; a precomputed hash makes them usable as map keys.
class Formula {
 public:
  enum class Kind { Atom, Not, And, Next, Until, DominatedBy };

  // Core constructors.
  static Formula atom(const Proposition& p);
  static Formula atom(std::string name);
  static Formula negation(Formula a);
  static Formula conjunction(Formula a, Formula b);
  static Formula next(Formula a);
  static Formula until(Formula a, Formula b);
  static Formula dominated_by(Formula a, Formula b);

  // Derived connectives, stored desugared.
  static Formula disjunction(Formula a, Formula b);    // !(!a & !b)
  static Formula implication(Formula a, Formula b);    // !a | b
  static Formula top();                                // p | !p, fixed atom p
  static Formula bottom();                             // !top
  static Formula eventually(Formula a);                // true U a
  static Formula always(Formula a);                    // !F!a
  static Formula almost_equally(Formula a, Formula b); // !(a<<b) & !(b<<a)

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }

  /// Name of an Atom node; undefined for other kinds.
  const std::string& atom_name() const { return node_->name; }

  /// Only child of Not/Next, left operand of And/Until/DominatedBy.
  Formula left() const { return Formula(node_->lhs); }
  /// Right operand of And/Until/DominatedBy.
  Formula right() const { return Formula(node_->rhs); }

  std::size_t hash() const { return node_->hash; }

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node {
    Kind kind;
    std::string name;  // Atom only
    std::shared_ptr<const Node> lhs, rhs;
    std::size_t hash;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static Formula make(Kind kind, std::string name, std::shared_ptr<const Node> lhs,
                      std::shared_ptr<const Node> rhs);

  std::shared_ptr<const Node> node_;
};

/// All distinct subformulas in an order where every child precedes its
/// parent; the last element is the formula itself.
std::vector<Formula> subformulas(const Formula& f);

/// Exactly the propositions occurring in the (desugared) formula.
std::set<Proposition> atoms(const Formula& f);

/// Parses the concrete syntax. Throws ParseError with position info.
///
/// Grammar (tightest first): unary {!, X, F, G}; U (right-associative);
/// << and ~ (same level, non-associative); &; |; -> (right-associative).
Formula parse_formula(const std::string& text);

/// Renders with minimal parenthesization; parse(render(f)) == f.
std::string render(const Formula& f);

std::ostream& operator<<(std::ostream& os, const Formula& f);

}  // namespace ltldom

template <>
struct std::hash<ltldom::Formula> {
  std::size_t operator()(const ltldom::Formula& f) const { return f.hash(); }
};
