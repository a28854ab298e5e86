#include "ltldom/formula.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "ltldom/errors.hpp"

namespace ltldom {

namespace {

const char* const kReserved[] = {"X", "U", "F", "G", "true", "false"};

std::size_t hash_mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

bool is_valid_proposition_name(std::string_view name) {
  if (name.empty()) return false;
  if (!(name[0] >= 'a' && name[0] <= 'z')) return false;
  for (char c : name.substr(1)) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  for (const char* r : kReserved) {
    if (name == r) return false;
  }
  return true;
}

Proposition::Proposition(std::string name) : name_(std::move(name)) {
  if (!is_valid_proposition_name(name_)) {
    throw std::invalid_argument("invalid proposition name: '" + name_ + "'");
  }
}

Formula Formula::make(Kind kind, std::string name, std::shared_ptr<const Node> lhs,
                      std::shared_ptr<const Node> rhs) {
  std::size_t h = hash_mix(0x51c1, static_cast<std::size_t>(kind));
  h = hash_mix(h, std::hash<std::string>{}(name));
  if (lhs) h = hash_mix(h, lhs->hash);
  if (rhs) h = hash_mix(h, rhs->hash);
  return Formula(std::make_shared<Node>(Node{kind, std::move(name), std::move(lhs), std::move(rhs), h}));
}

Formula Formula::atom(const Proposition& p) {
  return make(Kind::Atom, p.name(), nullptr, nullptr);
}

Formula Formula::atom(std::string name) { return atom(Proposition(std::move(name))); }

Formula Formula::negation(Formula a) { return make(Kind::Not, {}, std::move(a.node_), nullptr); }

Formula Formula::conjunction(Formula a, Formula b) {
  return make(Kind::And, {}, std::move(a.node_), std::move(b.node_));
}

Formula Formula::next(Formula a) { return make(Kind::Next, {}, std::move(a.node_), nullptr); }

Formula Formula::until(Formula a, Formula b) {
  return make(Kind::Until, {}, std::move(a.node_), std::move(b.node_));
}

Formula Formula::dominated_by(Formula a, Formula b) {
  return make(Kind::DominatedBy, {}, std::move(a.node_), std::move(b.node_));
}

Formula Formula::disjunction(Formula a, Formula b) {
  return negation(conjunction(negation(std::move(a)), negation(std::move(b))));
}

Formula Formula::implication(Formula a, Formula b) {
  return disjunction(negation(std::move(a)), std::move(b));
}

Formula Formula::top() {
  static const Formula t = disjunction(atom("p"), negation(atom("p")));
  return t;
}

Formula Formula::bottom() {
  static const Formula b = negation(top());
  return b;
}

Formula Formula::eventually(Formula a) { return until(top(), std::move(a)); }

Formula Formula::always(Formula a) { return negation(eventually(negation(std::move(a)))); }

Formula Formula::almost_equally(Formula a, Formula b) {
  Formula forward = negation(dominated_by(a, b));
  Formula backward = negation(dominated_by(std::move(b), std::move(a)));
  return conjunction(std::move(forward), std::move(backward));
}

bool Formula::operator==(const Formula& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  if (a == b) return true;
  if (a->hash != b->hash || a->kind != b->kind || a->name != b->name) return false;
  if (a->lhs && !(Formula(a->lhs) == Formula(b->lhs))) return false;
  if (a->rhs && !(Formula(a->rhs) == Formula(b->rhs))) return false;
  return true;
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula> seen;
  // children-first DFS; the dedup set keeps the order topological
  auto visit = [&](auto&& self, const Formula& g) -> void {
    if (seen.contains(g)) return;
    switch (g.kind()) {
      case Formula::Kind::Atom:
        break;
      case Formula::Kind::Not:
      case Formula::Kind::Next:
        self(self, g.left());
        break;
      case Formula::Kind::And:
      case Formula::Kind::Until:
      case Formula::Kind::DominatedBy:
        self(self, g.left());
        self(self, g.right());
        break;
    }
    seen.insert(g);
    out.push_back(g);
  };
  visit(visit, f);
  return out;
}

std::set<Proposition> atoms(const Formula& f) {
  std::set<Proposition> out;
  for (const Formula& g : subformulas(f)) {
    if (g.is(Formula::Kind::Atom)) out.insert(Proposition(g.atom_name()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Concrete syntax.

namespace {

enum class Tok {
  LParen, RParen, Bang, Amp, Pipe, Arrow, MuchLess, Tilde,
  Next, Until, Finally, Globally, True, False, Ident, End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, col_); }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
    const std::size_t line = line_, col = col_;
    if (pos_ >= src_.size()) {
      current_ = {Tok::End, "<end of input>", line, col};
      return;
    }
    const char c = src_[pos_];
    auto symbol = [&](Tok kind, std::string text) {
      pos_ += text.size();
      col_ += text.size();
      current_ = {kind, std::move(text), line, col};
    };
    switch (c) {
      case '(': return symbol(Tok::LParen, "(");
      case ')': return symbol(Tok::RParen, ")");
      case '!': return symbol(Tok::Bang, "!");
      case '&': return symbol(Tok::Amp, "&");
      case '|': return symbol(Tok::Pipe, "|");
      case '~': return symbol(Tok::Tilde, "~");
      case '-':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') return symbol(Tok::Arrow, "->");
        fail("unknown token '-'");
      case '<':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '<') return symbol(Tok::MuchLess, "<<");
        fail("unknown token '<'");
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_')) {
        ++end;
      }
      std::string word(src_.substr(pos_, end - pos_));
      pos_ = end;
      col_ += word.size();
      if (word == "X") { current_ = {Tok::Next, word, line, col}; return; }
      if (word == "U") { current_ = {Tok::Until, word, line, col}; return; }
      if (word == "F") { current_ = {Tok::Finally, word, line, col}; return; }
      if (word == "G") { current_ = {Tok::Globally, word, line, col}; return; }
      if (word == "true") { current_ = {Tok::True, word, line, col}; return; }
      if (word == "false") { current_ = {Tok::False, word, line, col}; return; }
      if (!is_valid_proposition_name(word)) {
        throw ParseError("invalid identifier '" + word + "' (atoms start with a lowercase letter)",
                         line, col);
      }
      current_ = {Tok::Ident, std::move(word), line, col};
      return;
    }
    fail(std::string("unknown character '") + c + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1, col_ = 1;
  Token current_{Tok::End, "", 1, 1};
};

// Recursive descent over
//   F  ::= F1 [ "->" F ]
//   F1 ::= F2 { "|" F2 }
//   F2 ::= F3 { "&" F3 }
//   F3 ::= F4 [ ("<<" | "~") F4 ]
//   F4 ::= F5 [ "U" F4 ]
//   F5 ::= ("!" | "X" | "F" | "G") F5 | "true" | "false" | IDENT | "(" F ")"
class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Formula parse() {
    Formula f = parse_implication();
    const Token& t = lex_.peek();
    if (t.kind != Tok::End) {
      throw ParseError("unexpected '" + t.text + "' after a complete formula", t.line, t.col);
    }
    return f;
  }

 private:
  Formula parse_implication() {
    Formula lhs = parse_disjunction();
    if (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      return Formula::implication(std::move(lhs), parse_implication());
    }
    return lhs;
  }

  Formula parse_disjunction() {
    Formula f = parse_conjunction();
    while (lex_.peek().kind == Tok::Pipe) {
      lex_.take();
      f = Formula::disjunction(std::move(f), parse_conjunction());
    }
    return f;
  }

  Formula parse_conjunction() {
    Formula f = parse_domination();
    while (lex_.peek().kind == Tok::Amp) {
      lex_.take();
      f = Formula::conjunction(std::move(f), parse_domination());
    }
    return f;
  }

  Formula parse_domination() {
    Formula lhs = parse_until();
    const Tok op = lex_.peek().kind;
    if (op != Tok::MuchLess && op != Tok::Tilde) return lhs;
    lex_.take();
    Formula rhs = parse_until();
    const Token& t = lex_.peek();
    if (t.kind == Tok::MuchLess || t.kind == Tok::Tilde) {
      throw ParseError("'<<' and '~' are non-associative; parenthesize the chain", t.line, t.col);
    }
    return op == Tok::MuchLess ? Formula::dominated_by(std::move(lhs), std::move(rhs))
                               : Formula::almost_equally(std::move(lhs), std::move(rhs));
  }

  Formula parse_until() {
    Formula lhs = parse_unary();
    if (lex_.peek().kind == Tok::Until) {
      lex_.take();
      return Formula::until(std::move(lhs), parse_until());
    }
    return lhs;
  }

  Formula parse_unary() {
    const Token t = lex_.take();
    switch (t.kind) {
      case Tok::Bang: return Formula::negation(parse_unary());
      case Tok::Next: return Formula::next(parse_unary());
      case Tok::Finally: return Formula::eventually(parse_unary());
      case Tok::Globally: return Formula::always(parse_unary());
      case Tok::True: return Formula::top();
      case Tok::False: return Formula::bottom();
      case Tok::Ident: return Formula::atom(t.text);
      case Tok::LParen: {
        Formula f = parse_implication();
        const Token& close = lex_.peek();
        if (close.kind != Tok::RParen) {
          throw ParseError("expected ')', got '" + close.text + "'", close.line, close.col);
        }
        lex_.take();
        return f;
      }
      default:
        throw ParseError("expected a formula, got '" + t.text +
                             "' (expected '!', 'X', 'F', 'G', 'true', 'false', an identifier or '(')",
                         t.line, t.col);
    }
  }

  Lexer lex_;
};

// Binding strength used by the renderer; higher binds tighter.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Atom: return 6;
    case Formula::Kind::Not:
    case Formula::Kind::Next: return 5;
    case Formula::Kind::Until: return 4;
    case Formula::Kind::DominatedBy: return 3;
    case Formula::Kind::And: return 2;
  }
  return 0;
}

void emit(const Formula& f, int required, std::string& out) {
  const bool parens = precedence(f.kind()) < required;
  if (parens) out += '(';
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.atom_name();
      break;
    case Formula::Kind::Not:
      out += '!';
      emit(f.left(), 5, out);
      break;
    case Formula::Kind::Next:
      out += "X ";
      emit(f.left(), 5, out);
      break;
    case Formula::Kind::Until:
      emit(f.left(), 5, out);
      out += " U ";
      emit(f.right(), 4, out);  // right-associative
      break;
    case Formula::Kind::DominatedBy:
      emit(f.left(), 4, out);
      out += " << ";
      emit(f.right(), 4, out);
      break;
    case Formula::Kind::And:
      emit(f.left(), 2, out);
      out += " & ";
      emit(f.right(), 3, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

std::string render(const Formula& f) {
  std::string out;
  emit(f, 0, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << render(f); }

}  // namespace ltldom
