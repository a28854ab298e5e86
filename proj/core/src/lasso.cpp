#include "ltldom/lasso.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "ltldom/errors.hpp"

namespace ltldom {

Letter::Letter(std::vector<std::string> props) : props_(std::move(props)) {
  for (const auto& name : props_) {
    if (!is_valid_proposition_name(name)) {
      throw std::invalid_argument("invalid proposition name in letter: '" + name + "'");
    }
  }
  std::ranges::sort(props_);
  props_.erase(std::unique(props_.begin(), props_.end()), props_.end());
}

Letter::Letter(std::initializer_list<std::string> props)
    : Letter(std::vector<std::string>(props)) {}

bool Letter::contains(std::string_view name) const {
  return std::ranges::binary_search(props_, name);
}

std::string render_letter(const Letter& letter) {
  std::string out = "{";
  for (std::size_t i = 0; i < letter.props().size(); ++i) {
    if (i > 0) out += ',';
    out += letter.props()[i];
  }
  out += '}';
  return out;
}

namespace {

// Letter sequences on either side of the ';' separator.
class LassoScanner {
 public:
  explicit LassoScanner(const std::string& text) : text_(text) {}

  LassoWord scan() {
    std::vector<Letter> stem = letters_until([](char c) { return c == ';'; });
    if (pos_ >= text_.size()) fail("expected ';' between stem and loop");
    ++pos_;  // consume ';'
    std::vector<Letter> loop = letters_until([](char) { return false; });
    if (loop.empty()) fail("lasso loop must contain at least one letter");
    return LassoWord(std::move(stem), std::move(loop));
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, 1, pos_ + 1);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  template <typename Stop>
  std::vector<Letter> letters_until(Stop stop) {
    std::vector<Letter> out;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || stop(text_[pos_])) return out;
      if (text_[pos_] != '{') fail(std::string("unexpected character '") + text_[pos_] + "'");
      out.push_back(letter());
    }
  }

  Letter letter() {
    ++pos_;  // consume '{'
    std::vector<std::string> props;
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '}') {
      ++pos_;
      return Letter{};
    }
    for (;;) {
      skip_space();
      props.push_back(ident());
      skip_space();
      if (pos_ >= text_.size()) fail("unterminated letter, expected '}'");
      if (text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (text_[pos_] == '}') {
        ++pos_;
        return Letter(std::move(props));
      }
      fail(std::string("malformed letter: unexpected '") + text_[pos_] + "'");
    }
  }

  std::string ident() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    std::string word = text_.substr(start, pos_ - start);
    if (!is_valid_proposition_name(word)) {
      pos_ = start;
      fail("malformed letter: expected a proposition name");
    }
    return word;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  // std::uniform_int_distribution is implementation-defined; raw engine
  // output keeps sampled words identical across platforms
  return rng() % n;
}

}  // namespace

LassoWord parse_lasso(const std::string& text) { return LassoScanner(text).scan(); }

std::string render_lasso(const LassoWord& w) {
  std::string out;
  for (const Letter& l : w.stem()) out += render_letter(l);
  out += ';';
  for (const Letter& l : w.loop()) out += render_letter(l);
  return out;
}

LassoWord random_lasso(const std::vector<Proposition>& alphabet, std::size_t max_stem,
                       std::size_t max_period, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_lasso(alphabet, max_stem, max_period, rng);
}

LassoWord random_lasso(const std::vector<Proposition>& alphabet, std::size_t max_stem,
                       std::size_t max_period, std::mt19937_64& rng) {
  if (max_period < 1) throw std::invalid_argument("random_lasso: max_period must be >= 1");
  auto letter = [&] {
    std::vector<std::string> props;
    for (const Proposition& p : alphabet) {
      if (rng() & 1u) props.push_back(p.name());
    }
    return Letter(std::move(props));
  };
  const std::size_t stem_len = static_cast<std::size_t>(bounded(rng, max_stem + 1));
  const std::size_t loop_len = 1 + static_cast<std::size_t>(bounded(rng, max_period));
  std::vector<Letter> stem, loop;
  stem.reserve(stem_len);
  loop.reserve(loop_len);
  for (std::size_t i = 0; i < stem_len; ++i) stem.push_back(letter());
  for (std::size_t i = 0; i < loop_len; ++i) loop.push_back(letter());
  return LassoWord(std::move(stem), std::move(loop));
}

std::ostream& operator<<(std::ostream& os, const Letter& letter) {
  return os << render_letter(letter);
}

std::ostream& operator<<(std::ostream& os, const LassoWord& w) { return os << render_lasso(w); }

}  // namespace ltldom
