#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ltldom/formula.hpp"

namespace ltldom {

/// One position of a model word: the set of propositions holding there.
/// Stored sorted and deduplicated, so equality is set equality.
class Letter {
 public:
  Letter() = default;
  explicit Letter(std::vector<std::string> props);
  Letter(std::initializer_list<std::string> props);

  bool contains(std::string_view name) const;
  const std::vector<std::string>& props() const { return props_; }
  bool empty() const { return props_.empty(); }

  bool operator==(const Letter&) const = default;
  auto operator<=>(const Letter&) const = default;

 private:
  std::vector<std::string> props_;
};

/// Ultimately periodic word stem.loop^omega. The loop is never empty, so
/// the word is infinite: the symbol at position k + period equals the one
/// at k for every k >= stem_size.
template <typename Symbol>
class Lasso {
 public:
  Lasso(std::vector<Symbol> stem, std::vector<Symbol> loop)
      : stem_(std::move(stem)), loop_(std::move(loop)) {
    if (loop_.empty()) {
      throw std::invalid_argument("lasso loop must contain at least one symbol");
    }
  }

  std::size_t stem_size() const { return stem_.size(); }
  std::size_t period() const { return loop_.size(); }
  const std::vector<Symbol>& stem() const { return stem_; }
  const std::vector<Symbol>& loop() const { return loop_; }

  const Symbol& at(std::uint64_t i) const {
    if (i < stem_.size()) return stem_[i];
    return loop_[(i - stem_.size()) % loop_.size()];
  }

  /// Canonical index into [0, stem_size + period): positions beyond the
  /// first lap fold back into the loop.
  std::size_t table_index(std::uint64_t i) const {
    const std::uint64_t s = stem_.size();
    if (i < s + loop_.size()) return static_cast<std::size_t>(i);
    return static_cast<std::size_t>(s + (i - s) % loop_.size());
  }

  /// Word with letter stream shifted left by i; the loop length is kept.
  Lasso suffix(std::uint64_t i) const {
    if (i <= stem_.size()) {
      return Lasso(std::vector<Symbol>(stem_.begin() + static_cast<std::ptrdiff_t>(i), stem_.end()),
                   loop_);
    }
    const std::size_t r = static_cast<std::size_t>((i - stem_.size()) % loop_.size());
    std::vector<Symbol> rotated(loop_.begin() + static_cast<std::ptrdiff_t>(r), loop_.end());
    rotated.insert(rotated.end(), loop_.begin(), loop_.begin() + static_cast<std::ptrdiff_t>(r));
    return Lasso({}, std::move(rotated));
  }

  bool operator==(const Lasso&) const = default;

 private:
  std::vector<Symbol> stem_;
  std::vector<Symbol> loop_;
};

using LassoWord = Lasso<Letter>;
using SymbolWord = Lasso<std::string>;

/// Text format: STEM;LOOP where each side is a concatenation of letters
/// {a,b,...} or {}. The stem may be empty, the loop may not.
LassoWord parse_lasso(const std::string& text);
std::string render_lasso(const LassoWord& w);

/// Sorted proposition names joined by commas inside braces, e.g. "{p,q}".
std::string render_letter(const Letter& letter);

/// Uniformly random lasso word: stem length in [0, max_stem], loop length
/// in [1, max_period], each letter an independent uniform subset of the
/// alphabet. Deterministic in the seed.
LassoWord random_lasso(const std::vector<Proposition>& alphabet, std::size_t max_stem,
                       std::size_t max_period, std::uint64_t seed);
LassoWord random_lasso(const std::vector<Proposition>& alphabet, std::size_t max_stem,
                       std::size_t max_period, std::mt19937_64& rng);

std::ostream& operator<<(std::ostream& os, const Letter& letter);
std::ostream& operator<<(std::ostream& os, const LassoWord& w);

}  // namespace ltldom
