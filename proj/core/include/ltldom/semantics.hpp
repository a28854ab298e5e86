#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ltldom/formula.hpp"
#include "ltldom/lasso.hpp"

namespace ltldom {

/// Truth of every subformula of a root formula at positions 0..s+p-1 of a
/// lasso word (s = stem length, p = period). Truth at a position depends
/// only on the suffix word, and suffixes at k and k+p coincide for k >= s,
/// so these s+p entries determine the truth at every position.
///
/// Rows are filled bottom-up over subformulas. Atom, Not, And and Next are
/// pointwise (Next with the wraparound successor succ(k) = k+1 if k+1 < s+p
/// else s). Until is the least fixpoint of U = B | (A & U o succ) on the
/// stem+loop position graph. DominatedBy(A, B) is constant: on a lasso the
/// count difference card(B) - card(A) over growing intervals changes by a
/// fixed amount per lap, so it is unbounded above exactly when the per-lap
/// drift is positive.
class LabelTable {
 public:
  LabelTable(LassoWord word, Formula root);

  /// Truth of a subformula at any position >= 0 (canonical index mapping).
  /// Throws std::invalid_argument if `sub` is not a subformula of the root.
  bool at(const Formula& sub, std::uint64_t position) const;

  /// Truth of the root formula at any position >= 0.
  bool root_at(std::uint64_t position) const;

  const LassoWord& word() const { return word_; }
  const Formula& root() const { return root_; }
  std::size_t width() const { return width_; }

  /// Raw truth vector over positions 0..s+p-1.
  const std::vector<bool>& row(const Formula& sub) const;

  /// Subformulas of the root in evaluation (child-first) order.
  const std::vector<Formula>& order() const { return order_; }

 private:
  LassoWord word_;
  Formula root_;
  std::size_t width_;
  std::vector<Formula> order_;
  std::unordered_map<Formula, std::vector<bool>> rows_;
};

/// Satisfaction of f at position i of w.
bool holds(const LassoWord& w, std::uint64_t i, const Formula& f);

/// Number of positions k in [i, j] where f holds; 0 when j < i.
std::uint64_t count_satisfying(const LassoWord& w, const Formula& f, std::uint64_t i,
                               std::uint64_t j);

/// Net change of [b holds] - [a holds] over one loop lap, i.e. the sum over
/// positions k in [s, s+p) of the truth difference.
std::int64_t loop_drift(const LassoWord& w, const Formula& a, const Formula& b);

/// Independent brute-force evaluator used to cross-check `holds`. Works by
/// direct recursive scanning with no label table: Until scans for an
/// explicit witness within (laps+1) loop laps past the scan start, and
/// DominatedBy samples the count difference at two anchors `laps` laps
/// apart and tests for growth. Requires laps >= 2.
bool oracle_holds(const LassoWord& w, std::uint64_t i, const Formula& f, unsigned laps = 10);

}  // namespace ltldom
