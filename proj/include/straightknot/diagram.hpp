#pragma once

// Straight diagrams: geometry, PD codes and the containment transform.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "straightknot/errors.hpp"
#include "straightknot/realize.hpp"
#include "straightknot/words.hpp"

namespace straightknot {

struct Semicircle {
  Interval span;
  int arc = 0;             // index of the arc (piece of the semicircular strand between crossings)
  bool uncontained = false;

  double center() const noexcept { return (static_cast<double>(span.a) + static_cast<double>(span.b)) / 2.0; }
  double radius() const noexcept { return static_cast<double>(span.hi() - span.lo()) / 2.0; }
};

/// A straight strand on [0, n+1] with crossing k at x = k, and the
/// semicircular strand running from n+1 back to 0 through the augmentation's
/// tokens. Markers sit left of 0 and are not crossings.
class StraightDiagram {
 public:
  StraightDiagram() = default;
  StraightDiagram(SignedStraightWord word, AugmentedWord augmentation, std::vector<Semicircle> semicircles)
      : word_(std::move(word)), aug_(std::move(augmentation)), semis_(std::move(semicircles)) {}

  const SignedStraightWord& word() const noexcept { return word_; }
  const AugmentedWord& augmentation() const noexcept { return aug_; }
  const std::vector<Semicircle>& semicircles() const noexcept { return semis_; }

  int crossings() const noexcept { return word_.size(); }
  int uncontained_arcs() const noexcept { return aug_.marker_count(); }
  int contained_arcs() const noexcept { return crossings() + 1 - uncontained_arcs(); }
  bool contained() const noexcept { return uncontained_arcs() == 0; }

 private:
  SignedStraightWord word_;
  AugmentedWord aug_;
  std::vector<Semicircle> semis_;
};

/// Counts c + 2u semicircles and c + u - 1 crossings, recomputed from the
/// geometry rather than the word.
inline bool counts_consistent(const StraightDiagram& d) {
  int contained = 0, touching_marker = 0;
  std::vector<Coord> points;
  for (const auto& s : d.semicircles()) {
    const bool marker = s.span.a < 0 || s.span.b < 0;
    (marker ? touching_marker : contained) += 1;
    for (Coord x : {s.span.a, s.span.b})
      if (x > 0 && x <= d.crossings()) points.push_back(x);
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (touching_marker % 2 != 0) return false;
  const int c = contained, u = touching_marker / 2;
  const int semis = static_cast<int>(d.semicircles().size());
  const int crossings = static_cast<int>(points.size());
  return semis == c + 2 * u && crossings == c + u - 1 && crossings == d.crossings() && u == d.uncontained_arcs();
}

/// Geometric layout of a signed word along a realizing augmentation.
inline StraightDiagram layout(const SignedStraightWord& w, const AugmentedWord& aug) {
  if (aug.word() != w.word) throw std::invalid_argument("augmentation does not match the signed word");
  const auto sets = semicircles(aug);
  const auto check = contained_check(sets);
  if (!check.contained) {
    const auto& [p, q] = *check.first_conflict;
    throw NotRealizableError("semicircles [" + std::to_string(p.a) + "," + std::to_string(p.b) + "] and [" +
                             std::to_string(q.a) + "," + std::to_string(q.b) + "] intersect");
  }
  std::vector<Semicircle> semis;
  int arc = 0;
  for (const auto& iv : sets.in_order) {
    semis.push_back({iv, arc, iv.a < 0 || iv.b < 0});
    if (iv.b > 0) ++arc;  // a crossing ends the arc; a marker does not
  }
  StraightDiagram d(w, aug, std::move(semis));
  if (!counts_consistent(d)) throw InvariantViolation("layout violates the semicircle/crossing counts");
  return d;
}

/// Layout along the smallest realizing augmentation.
inline StraightDiagram layout(const SignedStraightWord& w) {
  auto aug = is_realizable(w.word);
  if (!aug) throw NotRealizableError("word " + format_word(w.word) + " has no classical realization");
  return layout(w, *aug);
}

// ---------------------------------------------------------------------------
// PD codes

struct PDCrossing {
  std::array<int, 4> edges{};  // counterclockwise from the incoming under edge
  int sign = 1;                // writhe contribution; kept explicitly since 1-crossing labels are ambiguous

  friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

struct PDCode {
  std::vector<PDCrossing> crossings;

  int size() const noexcept { return static_cast<int>(crossings.size()); }
  int writhe() const noexcept {
    int w = 0;
    for (const auto& c : crossings) w += c.sign;
    return w;
  }
  friend bool operator==(const PDCode&, const PDCode&) = default;
};

inline std::string to_string(const PDCode& p) {
  std::string out = "[";
  for (std::size_t k = 0; k < p.crossings.size(); ++k) {
    const auto& e = p.crossings[k].edges;
    if (k) out += ',';
    out += "X(" + std::to_string(e[0]) + ',' + std::to_string(e[1]) + ',' + std::to_string(e[2]) + ',' +
           std::to_string(e[3]) + (p.crossings[k].sign > 0 ? ")+" : ")-");
  }
  return out + "]";
}

/// One crossing seen from the traversal: visit i (strand 1) and visit j
/// (strand 2), 1-based, with 2n visits in total. `orientation` is +1 when,
/// counterclockwise around the crossing, the order is in1, in2, out1, out2.
struct CrossingVisit {
  int first = 0;
  int second = 0;
  bool first_over = false;
  int orientation = 1;
};

/// Edge v runs into visit v; edge labels wrap modulo 2n.
inline PDCode pd_from_visits(const std::vector<CrossingVisit>& visits) {
  const int m = 2 * static_cast<int>(visits.size());
  auto next = [m](int e) { return e % m + 1; };
  PDCode p;
  for (const auto& v : visits) {
    const int i = v.first, j = v.second;
    PDCrossing c;
    if (!v.first_over)
      c.edges = v.orientation > 0 ? std::array{i, j, next(i), next(j)} : std::array{i, next(j), next(i), j};
    else
      c.edges = v.orientation > 0 ? std::array{j, next(i), next(j), i} : std::array{j, i, next(j), next(i)};
    c.sign = (v.first_over ? 1 : -1) * v.orientation;
    p.crossings.push_back(c);
  }
  return p;
}

/// Edges labeled along the traversal from the left end of the straight
/// strand: visits 1..n are the straight strand, n+1..2n the semicircles.
inline PDCode pd_code(const StraightDiagram& d) {
  const int n = d.crossings();
  std::vector<CrossingVisit> visits(n);
  int visit = n;
  for (const auto& s : d.semicircles()) {
    const Coord end = s.span.b;
    if (end <= 0) continue;
    ++visit;
    auto& v = visits[static_cast<std::size_t>(end - 1)];
    v.first = static_cast<int>(end);
    v.second = visit;
    v.first_over = d.word().sign_at(static_cast<int>(end)) == Sign::Under;
    v.orientation = s.span.side == Side::Bottom ? 1 : -1;
  }
  return pd_from_visits(visits);
}

// ---------------------------------------------------------------------------
// Containment transform

namespace detail {

struct TransformPoint {
  Coord x;         // doubled coordinate
  Sign sign;       // sign of the semicircular strand here
  bool original;   // crossing of the input diagram
};

}  // namespace detail

struct ContainmentReport {
  StraightDiagram diagram;
  int path_crossings = 0;       // new crossings placed along the reconnecting path
  bool reidemeister_ii = false;  // the trailing two-crossing cancellation fired
};

/// Cuts the last semicircle, extends the straight strand left across every
/// uncontained arc, and reconnects through the region tree to the new left
/// end. New crossings all put the new pieces on the same level as the last
/// crossing of the semicircular strand, so the knot type is unchanged.
inline ContainmentReport to_contained_report(const StraightDiagram& d) {
  if (d.contained()) return {d, 0, false};

  const int n = d.crossings();
  const auto& tokens = d.augmentation().tokens();
  const Coord right_end = 2 * (n + 1);

  // Over-mode when the last crossing has the semicircle over: new path
  // crossings then pass over, and the extended strand passes over markers.
  Sign last_sign = Sign::Over;
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it)
    if (*it > 0) {
      last_sign = d.word().sign_at(static_cast<int>(*it));
      break;
    }
  const Sign path_sign = last_sign;
  const Sign marker_sign = !last_sign;

  // Strand points in doubled coordinates, and the semicircles minus the last.
  std::vector<Coord> route;  // semicircular strand from the right end
  route.push_back(right_end);
  std::map<Coord, detail::TransformPoint> points;
  for (Coord t : tokens) {
    const Coord x = 2 * t;
    route.push_back(x);
    points[x] = {x, t > 0 ? d.word().sign_at(static_cast<int>(t)) : marker_sign, t > 0};
  }
  std::vector<Interval> kept;
  for (std::size_t k = 0; k + 1 < route.size(); ++k)
    kept.push_back({route[k], route[k + 1], k % 2 == 0 ? Side::Top : Side::Bottom});
  const Coord a = route.back();
  const Side cut_side = tokens.size() % 2 == 0 ? Side::Top : Side::Bottom;

  // Region graph: vertex 0 is the unbounded region, vertex i+1 the region
  // just inside kept[i]. Each segment right of a strand point joins its top
  // and bottom regions.
  std::vector<Coord> xs;
  for (const auto& [x, p] : points) xs.push_back(x);
  auto innermost = [&](double mid, Side side) {
    int best = 0;
    Coord best_width = 0;
    for (std::size_t i = 0; i < kept.size(); ++i) {
      const auto& iv = kept[i];
      if (iv.side != side || !(iv.lo() < mid && mid < iv.hi())) continue;
      if (best == 0 || iv.hi() - iv.lo() < best_width) {
        best = static_cast<int>(i) + 1;
        best_width = iv.hi() - iv.lo();
      }
    }
    return best;
  };
  struct Segment {
    Coord lo, hi;
    int top, bottom;
  };
  std::vector<Segment> segments;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const Coord hi = k + 1 < xs.size() ? xs[k + 1] : right_end;
    const double mid = (static_cast<double>(xs[k]) + static_cast<double>(hi)) / 2.0;
    segments.push_back({xs[k], hi, innermost(mid, Side::Top), innermost(mid, Side::Bottom)});
  }
  const int vertices = static_cast<int>(kept.size()) + 1;
  std::vector<std::vector<std::pair<int, int>>> adj(vertices);  // (neighbor, segment)
  int edges = 0;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    if (segments[k].top == segments[k].bottom) continue;
    adj[segments[k].top].emplace_back(segments[k].bottom, static_cast<int>(k));
    adj[segments[k].bottom].emplace_back(segments[k].top, static_cast<int>(k));
    ++edges;
  }
  std::vector<int> parent(vertices, -2), via(vertices, -1);
  {
    std::queue<int> q;
    q.push(0);
    parent[0] = -1;
    int reached = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (auto [w, seg] : adj[v]) {
        if (parent[w] != -2) continue;
        parent[w] = v;
        via[w] = seg;
        ++reached;
        q.push(w);
      }
    }
    if (reached != vertices || edges != vertices - 1)
      throw InvariantViolation("region graph of the cut diagram is not a tree");
  }

  // Start region: the side of the cut semicircle over the segment holding 0.
  int start = 0;
  for (const auto& s : segments)
    if (s.lo < 0 && 0 < s.hi) start = cut_side == Side::Top ? s.top : s.bottom;

  std::vector<Coord> path;
  for (int v = start; v != 0; v = parent[v]) {
    const auto& s = segments[static_cast<std::size_t>(via[v])];
    const Coord mid = s.lo + (s.hi - s.lo) / 2;
    if (mid == s.lo || points.count(mid)) throw InvariantViolation("no room for a path crossing");
    path.push_back(mid);
    points[mid] = {mid, path_sign, false};
  }

  // Trailing cancellation: a and the first path crossing adjacent on the
  // strand with equal signs form a removable bigon.
  bool cancelled = false;
  std::vector<Coord> tail(route.begin() + 1, route.end());
  if (!path.empty() && points.at(a).original && points.at(a).sign == path_sign) {
    auto it = points.find(std::min(a, path[0]));
    auto nx = std::next(it);
    if (nx != points.end() && nx->first == std::max(a, path[0])) {
      cancelled = true;
      tail.pop_back();
      points.erase(a);
      points.erase(path[0]);
      path.erase(path.begin());
    }
  }
  tail.insert(tail.end(), path.begin(), path.end());

  // Relabel left to right; the new left end is the old -L.
  std::map<Coord, int> label;
  std::vector<Sign> sign_of(points.size() + 1);
  int next = 0;
  for (const auto& [x, p] : points) {
    label[x] = ++next;
    sign_of[static_cast<std::size_t>(next)] = p.sign;
  }
  std::vector<int> perm;
  std::vector<Sign> signs;
  for (Coord x : tail) {
    perm.push_back(label.at(x));
    signs.push_back(sign_of[static_cast<std::size_t>(label.at(x))]);
  }
  SignedStraightWord out(StraightWord(std::move(perm)), std::move(signs));
  if (!is_contained_realizable(out.word)) throw InvariantViolation("containment transform produced an uncontained word");
  return {layout(out, AugmentedWord::plain(out.word)), static_cast<int>(path.size()) + (cancelled ? 1 : 0), cancelled};
}

inline StraightDiagram to_contained(const StraightDiagram& d) { return to_contained_report(d).diagram; }

}  // namespace straightknot
