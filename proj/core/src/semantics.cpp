#include "ltldom/semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace ltldom {

LabelTable::LabelTable(LassoWord word, Formula root)
    : word_(std::move(word)), root_(std::move(root)), width_(word_.stem_size() + word_.period()) {
  const std::size_t s = word_.stem_size();
  const std::size_t n = width_;
  const auto succ = [&](std::size_t k) { return k + 1 < n ? k + 1 : s; };

  order_ = subformulas(root_);
  rows_.reserve(order_.size());
  for (const Formula& g : order_) {
    std::vector<bool> row(n, false);
    switch (g.kind()) {
      case Formula::Kind::Atom:
        for (std::size_t k = 0; k < n; ++k) row[k] = word_.at(k).contains(g.atom_name());
        break;
      case Formula::Kind::Not: {
        const auto& child = rows_.at(g.left());
        for (std::size_t k = 0; k < n; ++k) row[k] = !child[k];
        break;
      }
      case Formula::Kind::And: {
        const auto& a = rows_.at(g.left());
        const auto& b = rows_.at(g.right());
        for (std::size_t k = 0; k < n; ++k) row[k] = a[k] && b[k];
        break;
      }
      case Formula::Kind::Next: {
        const auto& child = rows_.at(g.left());
        for (std::size_t k = 0; k < n; ++k) row[k] = child[succ(k)];
        break;
      }
      case Formula::Kind::Until: {
        const auto& a = rows_.at(g.left());
        const auto& b = rows_.at(g.right());
        // least fixpoint of U = B | (A & U o succ); entries only flip to
        // true, so the backward sweeps stabilize within n+1 rounds
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::size_t k = n; k-- > 0;) {
            if (!row[k] && (b[k] || (a[k] && row[succ(k)]))) {
              row[k] = true;
              changed = true;
            }
          }
        }
        break;
      }
      case Formula::Kind::DominatedBy: {
        const auto& a = rows_.at(g.left());
        const auto& b = rows_.at(g.right());
        std::int64_t drift = 0;
        for (std::size_t k = s; k < n; ++k) {
          drift += (b[k] ? 1 : 0) - (a[k] ? 1 : 0);
        }
        // position independent: a finite offset never changes unboundedness
        std::fill(row.begin(), row.end(), drift > 0);
        break;
      }
    }
    rows_.emplace(g, std::move(row));
  }
}

const std::vector<bool>& LabelTable::row(const Formula& sub) const {
  auto it = rows_.find(sub);
  if (it == rows_.end()) {
    throw std::invalid_argument("label table: not a subformula of the root: " + render(sub));
  }
  return it->second;
}

bool LabelTable::at(const Formula& sub, std::uint64_t position) const {
  return row(sub)[word_.table_index(position)];
}

bool LabelTable::root_at(std::uint64_t position) const {
  return rows_.at(root_)[word_.table_index(position)];
}

bool holds(const LassoWord& w, std::uint64_t i, const Formula& f) {
  return LabelTable(w, f).root_at(i);
}

std::uint64_t count_satisfying(const LassoWord& w, const Formula& f, std::uint64_t i,
                               std::uint64_t j) {
  if (j < i) return 0;
  const LabelTable table(w, f);
  const std::vector<bool>& row = table.row(f);
  const std::uint64_t s = w.stem_size();
  const std::uint64_t p = w.period();

  std::uint64_t total = 0;
  for (std::uint64_t k = i; k <= j && k < s; ++k) total += row[static_cast<std::size_t>(k)];
  if (j < s) return total;

  std::uint64_t per_lap = 0;
  for (std::uint64_t k = s; k < s + p; ++k) per_lap += row[static_cast<std::size_t>(k)];

  const std::uint64_t lo = std::max(i, s);
  const std::uint64_t span = j - lo + 1;
  total += (span / p) * per_lap;
  const std::uint64_t start = (lo - s) % p;
  for (std::uint64_t t = 0; t < span % p; ++t) {
    total += row[static_cast<std::size_t>(s + (start + t) % p)];
  }
  return total;
}

std::int64_t loop_drift(const LassoWord& w, const Formula& a, const Formula& b) {
  const LabelTable ta(w, a);
  const LabelTable tb(w, b);
  const std::size_t s = w.stem_size();
  std::int64_t drift = 0;
  for (std::size_t k = s; k < s + w.period(); ++k) {
    drift += (tb.row(b)[k] ? 1 : 0) - (ta.row(a)[k] ? 1 : 0);
  }
  return drift;
}

namespace {

// Plain recursive evaluation against the letter stream. Positions grow
// through X and the Until scan, so every horizon is taken relative to the
// position being evaluated; that keeps the scan complete at the deep
// positions reached by nested scans.
class OracleEval {
 public:
  OracleEval(const LassoWord& w, unsigned laps)
      : w_(w), s_(w.stem_size()), p_(w.period()), laps_(laps) {}

  bool eval(std::uint64_t k, const Formula& g) const {
    switch (g.kind()) {
      case Formula::Kind::Atom:
        return w_.at(k).contains(g.atom_name());
      case Formula::Kind::Not:
        return !eval(k, g.left());
      case Formula::Kind::And:
        return eval(k, g.left()) && eval(k, g.right());
      case Formula::Kind::Next:
        return eval(k + 1, g.left());
      case Formula::Kind::Until: {
        // any witness occurs within one lap after the scan enters the loop
        const std::uint64_t horizon = std::max(k, s_) + std::uint64_t{laps_ + 1} * p_;
        bool prefix = true;
        for (std::uint64_t j = k; j <= horizon && prefix; ++j) {
          if (eval(j, g.right())) return true;
          prefix = eval(j, g.left());
        }
        return false;
      }
      case Formula::Kind::DominatedBy: {
        // d(j) = card(B over [k,j]) - card(A over [k,j]), counted one
        // position at a time; sampling d at two anchors `laps` laps apart
        // (the first anchor clamped to lie at or after k-1) isolates the
        // per-lap growth
        std::uint64_t j1 = s_ + p_ - 1;
        if (k > j1 + 1) j1 = k - 1;
        const std::uint64_t j2 = j1 + std::uint64_t{laps_} * p_;
        std::int64_t d = 0, d1 = 0;
        for (std::uint64_t j = k; j <= j2; ++j) {
          d += (eval(j, g.right()) ? 1 : 0) - (eval(j, g.left()) ? 1 : 0);
          if (j == j1) d1 = d;
        }
        return d - d1 > 0;
      }
    }
    return false;
  }

 private:
  const LassoWord& w_;
  std::uint64_t s_, p_;
  unsigned laps_;
};

}  // namespace

bool oracle_holds(const LassoWord& w, std::uint64_t i, const Formula& f, unsigned laps) {
  if (laps < 2) throw std::invalid_argument("oracle_holds: laps must be >= 2");
  return OracleEval(w, laps).eval(i, f);
}

}  // namespace ltldom
