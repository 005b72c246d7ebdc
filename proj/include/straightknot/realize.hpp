#pragma once

// Realizability of straight words.
//
// Placing the straight strand on [0, n+1] with crossing k at x = k, the
// semicircular strand leaves the right end, visits the word's tokens in order
// and returns to 0. Consecutive points span semicircles that alternate above
// and below the axis, starting above. The word is realizable exactly when no
// two semicircles on the same side interleave. An uncontained arc passes the
// extended strand left of 0; a marker token records where.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "straightknot/errors.hpp"
#include "straightknot/words.hpp"

namespace straightknot {

enum class Side : std::uint8_t { Top, Bottom };

constexpr Side operator!(Side s) noexcept { return s == Side::Top ? Side::Bottom : Side::Top; }

struct Interval {
  Coord a = 0;
  Coord b = 0;
  Side side = Side::Top;

  Coord lo() const noexcept { return std::min(a, b); }
  Coord hi() const noexcept { return std::max(a, b); }

  friend bool operator==(const Interval&, const Interval&) = default;
};

struct SemicircleSets {
  std::vector<Interval> top;
  std::vector<Interval> bottom;
  std::vector<Interval> in_order;  // traversal order, first one on top
};

namespace detail {

inline SemicircleSets semicircles_from_tokens(const std::vector<Coord>& tokens, int n) {
  SemicircleSets s;
  Coord prev = n + 1;
  Side side = Side::Top;
  auto emit = [&](Coord next) {
    const Interval iv{prev, next, side};
    (side == Side::Top ? s.top : s.bottom).push_back(iv);
    s.in_order.push_back(iv);
    prev = next;
    side = !side;
  };
  for (Coord t : tokens) emit(t);
  emit(0);
  return s;
}

}  // namespace detail

inline SemicircleSets semicircles(const StraightWord& w) {
  return detail::semicircles_from_tokens(std::vector<Coord>(w.begin(), w.end()), w.size());
}

inline SemicircleSets semicircles(const AugmentedWord& w) {
  return detail::semicircles_from_tokens(w.tokens(), w.crossings());
}

/// Exact rational with positive denominator in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  int sign() const noexcept { return (num > 0) - (num < 0); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// (x3-x1)(x4-x2) / ((x3-x2)(x4-x1)) for p = [x1,x2], q = [x3,x4]. Negative
/// exactly when the two semicircles interleave.
inline Rational cross_ratio(const Interval& p, const Interval& q) {
  const std::int64_t x1 = p.a, x2 = p.b, x3 = q.a, x4 = q.b;
  const std::int64_t n1 = x3 - x1, n2 = x4 - x2, d1 = x3 - x2, d2 = x4 - x1;
  if (n1 == 0 || n2 == 0 || d1 == 0 || d2 == 0 || x1 == x2 || x3 == x4)
    throw DegenerateInputError("cross ratio of intervals sharing an endpoint");
  std::int64_t num = n1 * n2;
  std::int64_t den = d1 * d2;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

/// Sign-only form of the cross-ratio test, without forming the quotient.
inline bool interleaved(const Interval& p, const Interval& q) {
  const auto sgn = [](Coord v) { return (v > 0) - (v < 0); };
  const int s = sgn(q.a - p.a) * sgn(q.b - p.b) * sgn(q.a - p.b) * sgn(q.b - p.a);
  if (s == 0) throw DegenerateInputError("cross ratio of intervals sharing an endpoint");
  return s < 0;
}

enum class CheckMode { EarlyExit, Full };

struct ContainedCheck {
  bool contained = true;
  std::size_t evaluations = 0;
  std::optional<std::pair<Interval, Interval>> first_conflict;
};

/// Pairwise cross-ratio test within each side. In Full mode every pair is
/// evaluated even after a conflict, so the counter reports C(|top|,2) +
/// C(|bottom|,2).
inline ContainedCheck contained_check(const SemicircleSets& s, CheckMode mode = CheckMode::EarlyExit) {
  ContainedCheck r;
  for (const auto* side : {&s.top, &s.bottom}) {
    for (std::size_t i = 0; i < side->size(); ++i) {
      for (std::size_t j = i + 1; j < side->size(); ++j) {
        ++r.evaluations;
        if (cross_ratio((*side)[i], (*side)[j]).sign() < 0) {
          if (r.contained) r.first_conflict = std::make_pair((*side)[i], (*side)[j]);
          r.contained = false;
          if (mode == CheckMode::EarlyExit) return r;
        }
      }
    }
  }
  return r;
}

inline bool is_contained_realizable(const StraightWord& w) { return contained_check(semicircles(w)).contained; }

inline int max_markers(int n) noexcept { return std::max(0, n - 3); }

namespace detail {

// Search for a marker placement. Gaps are numbered 0..n: gap g sits before
// token g, gap n after the last token. At most one marker per gap, since an
// arc crossing the extended strand twice need not cross it at all.
class AugmentationSearch {
 public:
  AugmentationSearch(const StraightWord& w, int marker_budget) : w_(w), n_(w.size()), budget_(marker_budget) {}

  std::optional<AugmentedWord> run() {
    for (int k = 0; k <= budget_; ++k) {
      k_ = k;
      gaps_.clear();
      top_.clear();
      bottom_.clear();
      if (place(0, 0, n_ + 1, Side::Top)) return result_;
    }
    return std::nullopt;
  }

 private:
  // Endpoint of a pending semicircle: a crossing coordinate or a marker slot.
  struct End {
    Coord coord;
    int marker = -1;  // index into gaps_ when this end is a marker
  };
  struct Pending {
    End a, b;
    Side side;
  };

  // Walks the gaps left to right choosing marker gaps in lexicographic order
  // (marker before no-marker), checking marker-free semicircles eagerly.
  bool place(int gap, int used, Coord prev, Side side) {
    if (n_ - gap + 1 < k_ - used) return false;
    const bool last_gap = gap == n_;
    const Coord next = last_gap ? 0 : w_[gap];
    if (used < k_) {
      const int m = static_cast<int>(gaps_.size());
      gaps_.push_back(gap);
      pending_.push_back({{prev, -1}, {0, m}, side});
      pending_.push_back({{0, m}, {next, -1}, !side});
      const bool ok = last_gap ? finish() : place(gap + 1, used + 1, next, side);
      pending_.pop_back();
      pending_.pop_back();
      gaps_.pop_back();
      if (ok) return true;
    }
    const Interval iv{prev, next, side};
    if (conflicts(iv)) return false;
    push(iv);
    const bool ok = last_gap ? (used == k_ && finish()) : place(gap + 1, used, next, !side);
    pop(iv);
    return ok;
  }

  bool finish() {
    if (static_cast<int>(gaps_.size()) != k_) return false;
    value_.assign(k_, 0);
    taken_.assign(k_ + 1, false);
    return assign(0);
  }

  // Marker i takes coordinate -v; values are tried in increasing order so
  // orders are visited lexicographically.
  bool assign(int i) {
    if (i == k_) {
      build_result();
      return true;
    }
    for (int v = 1; v <= k_; ++v) {
      if (taken_[v]) continue;
      value_[i] = -v;
      const Interval left = resolve(pending_[2 * i]);
      const Interval right = resolve(pending_[2 * i + 1]);
      if (conflicts(left)) continue;
      push(left);
      if (!conflicts(right)) {
        push(right);
        taken_[v] = true;
        if (assign(i + 1)) return true;
        taken_[v] = false;
        pop(right);
      }
      pop(left);
    }
    return false;
  }

  Interval resolve(const Pending& p) const {
    const Coord a = p.a.marker >= 0 ? value_[p.a.marker] : p.a.coord;
    const Coord b = p.b.marker >= 0 ? value_[p.b.marker] : p.b.coord;
    return {a, b, p.side};
  }

  bool conflicts(const Interval& iv) const {
    for (const auto& o : (iv.side == Side::Top ? top_ : bottom_))
      if (interleaved(iv, o)) return true;
    return false;
  }
  void push(const Interval& iv) { (iv.side == Side::Top ? top_ : bottom_).push_back(iv); }
  void pop(const Interval& iv) { (iv.side == Side::Top ? top_ : bottom_).pop_back(); }

  void build_result() {
    std::vector<Coord> tokens;
    std::size_t m = 0;
    for (int g = 0; g <= n_; ++g) {
      if (m < gaps_.size() && gaps_[m] == g) tokens.push_back(value_[m++]);
      if (g < n_) tokens.push_back(w_[g]);
    }
    result_ = AugmentedWord(std::move(tokens));
  }

  const StraightWord& w_;
  int n_;
  int budget_;
  int k_ = 0;
  std::vector<int> gaps_;
  std::vector<Pending> pending_;
  std::vector<Interval> top_, bottom_;
  std::vector<Coord> value_;
  std::vector<bool> taken_;
  std::optional<AugmentedWord> result_;
};

}  // namespace detail

/// Smallest augmentation that passes the contained check: fewest markers
/// first, then marker gaps lexicographically, then marker orders
/// lexicographically (marker i at -order[i]). Absent when the word only
/// realizes a virtual knot.
inline std::optional<AugmentedWord> is_realizable(const StraightWord& w, int marker_budget) {
  auto found = detail::AugmentationSearch(w, std::max(0, marker_budget)).run();
  if (found && !contained_check(semicircles(*found)).contained)
    throw InvariantViolation("augmentation search produced a witness that fails the contained check");
  return found;
}

inline std::optional<AugmentedWord> is_realizable(const StraightWord& w) { return is_realizable(w, max_markers(w.size())); }

}  // namespace straightknot
