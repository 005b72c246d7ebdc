#pragma once

// Jones and Alexander polynomials of PD codes, and the mirror-blind
// fingerprint used for identification.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "straightknot/diagram.hpp"
#include "straightknot/errors.hpp"
#include "straightknot/laurent.hpp"

namespace straightknot {

/// Limit on the number of simultaneous boundary states during the bracket
/// contraction. A full 2^n state sum is never materialized.
inline constexpr std::size_t kDefaultBracketStates = 1u << 20;

namespace detail {

// Pairing of dangling edges: sorted (x, partner) entries with x < partner.
using Pairing = std::vector<std::pair<int, int>>;

struct PairingHash {
  std::size_t operator()(const Pairing& p) const noexcept {
    std::size_t h = p.size();
    for (const auto& [a, b] : p) h = h * 1000003u ^ (static_cast<std::size_t>(a) * 7919u + static_cast<std::size_t>(b));
    return h;
  }
};

// Joins the two ends in `link` into the pairing, returning the number of
// closed loops created (0 or 1).
inline int glue(std::map<int, int>& partner, int x, int y) {
  if (x == y) return 1;  // both ends of one edge meet here
  const auto px = partner.find(x);
  const auto py = partner.find(y);
  if (px != partner.end() && px->second == y) {
    partner.erase(px);
    partner.erase(y);
    return 1;
  }
  const int ex = px != partner.end() ? px->second : x;
  const int ey = py != partner.end() ? py->second : y;
  if (px != partner.end()) partner.erase(x);
  if (py != partner.end()) partner.erase(y);
  partner[ex] = ey;
  partner[ey] = ex;
  return 0;
}

// Crossing order that keeps the set of dangling edges small.
inline std::vector<std::size_t> contraction_order(const PDCode& p) {
  const std::size_t n = p.crossings.size();
  std::vector<std::size_t> order;
  std::vector<bool> used(n, false);
  std::map<int, int> seen;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    int best_score = -100;
    for (std::size_t k = 0; k < n; ++k) {
      if (used[k]) continue;
      int score = 0;
      for (int e : p.crossings[k].edges) score += seen.count(e) ? 2 : -1;
      if (score > best_score) {
        best_score = score;
        best = k;
      }
    }
    used[best] = true;
    order.push_back(best);
    for (int e : p.crossings[best].edges) ++seen[e];
  }
  return order;
}

}  // namespace detail

/// Kauffman bracket in A, normalized so the unknot diagram with no crossings
/// gives 1. Throws ResourceError when the state count exceeds the budget.
template <typename Coeff = BigInt>
LaurentPoly<Coeff> kauffman_bracket(const PDCode& p, std::size_t max_states = kDefaultBracketStates) {
  using P = LaurentPoly<Coeff>;
  if (p.crossings.empty()) return P::constant(1);
  const P delta = P::monomial(-1, 2) + P::monomial(-1, -2);
  const P a_pow = P::monomial(1, 1), a_inv = P::monomial(1, -1);

  // state: pairing -> polynomial in A; loops closed so far are folded in
  std::unordered_map<detail::Pairing, P, detail::PairingHash> states;
  states.emplace(detail::Pairing{}, P::constant(1));
  for (std::size_t k : detail::contraction_order(p)) {
    const auto& [a, b, c, d] = p.crossings[k].edges;
    std::unordered_map<detail::Pairing, P, detail::PairingHash> next;
    for (const auto& [pairing, poly] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        std::map<int, int> partner;
        for (const auto& [x, y] : pairing) {
          partner[x] = y;
          partner[y] = x;
        }
        int loops = 0;
        if (smoothing == 0) {
          loops += detail::glue(partner, a, b);
          loops += detail::glue(partner, c, d);
        } else {
          loops += detail::glue(partner, a, d);
          loops += detail::glue(partner, b, c);
        }
        detail::Pairing key;
        for (const auto& [x, y] : partner)
          if (x < y) key.emplace_back(x, y);
        P term = poly * (smoothing == 0 ? a_pow : a_inv);
        for (int l = 0; l < loops; ++l) term *= delta;
        next[key] += term;
      }
    }
    states = std::move(next);
    if (states.size() > max_states) throw ResourceError("bracket state count exceeds budget of " + std::to_string(max_states));
  }
  if (states.size() != 1 || !states.begin()->first.empty()) throw InvariantViolation("bracket contraction left open edges");
  return states.begin()->second.exact_divide(delta);
}

/// Jones polynomial in t from the bracket: (-A^3)^(-w) <K> with A = t^(-1/4).
template <typename Coeff = BigInt>
LaurentPoly<Coeff> jones(const PDCode& p, std::size_t max_states = kDefaultBracketStates) {
  using P = LaurentPoly<Coeff>;
  const int w = p.writhe();
  P x = kauffman_bracket<Coeff>(p, max_states) * P::monomial(w % 2 == 0 ? 1 : -1, -3 * w);
  std::vector<std::pair<int, Coeff>> terms;
  for (const auto& [e, c] : x.terms()) {
    if (e % 4 != 0) throw InvariantViolation("Jones exponent not a multiple of 4 in A");
    terms.emplace_back(-e / 4, c);
  }
  return P::from_terms(terms);
}

/// Shift to lowest exponent 0, make the leading coefficient positive, and
/// take the smaller of p(t) and p(1/t).
template <typename Coeff>
LaurentPoly<Coeff> normalize_alexander(const LaurentPoly<Coeff>& p) {
  if (p.is_zero()) return p;
  auto norm = [](LaurentPoly<Coeff> q) {
    q = q.shifted(-q.low());
    if (q.leading() < 0) q = -q;
    return q;
  };
  return std::min(norm(p), norm(p.inverted()));
}

namespace detail {

template <typename Coeff>
LaurentPoly<Coeff> bareiss_determinant(std::vector<std::vector<LaurentPoly<Coeff>>> m) {
  using P = LaurentPoly<Coeff>;
  const std::size_t n = m.size();
  if (n == 0) return P::constant(1);
  P prev = P::constant(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return P();
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_divide(prev);
      m[i][k] = P();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace detail

/// Alexander polynomial from the arc/crossing matrix with one row and one
/// column removed, normalized as in `normalize_alexander`.
template <typename Coeff = BigInt>
LaurentPoly<Coeff> alexander(const PDCode& p) {
  using P = LaurentPoly<Coeff>;
  const std::size_t n = p.crossings.size();
  if (n == 0) return P::constant(1);

  // arcs: edges glued through over-passes
  int max_edge = 0;
  for (const auto& c : p.crossings)
    for (int e : c.edges) max_edge = std::max(max_edge, e);
  std::vector<int> root(static_cast<std::size_t>(max_edge) + 1);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) { return root[x] == x ? x : root[x] = find(root[x]); };
  for (const auto& c : p.crossings) root[find(c.edges[1])] = find(c.edges[3]);
  std::map<int, std::size_t> arc;
  for (int e = 1; e <= max_edge; ++e) arc.emplace(find(e), arc.size());
  if (arc.size() != n) throw std::invalid_argument("diagram is not a connected knot diagram");

  const P one = P::constant(1), t = P::monomial(1, 1);
  std::vector<std::vector<P>> m(n, std::vector<P>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const auto& c = p.crossings[k];
    const std::size_t over = arc.at(find(c.edges[1]));
    const std::size_t in = arc.at(find(c.edges[0]));
    const std::size_t out = arc.at(find(c.edges[2]));
    m[k][over] += one - t;
    m[k][in] += c.sign > 0 ? t : -one;
    m[k][out] += c.sign > 0 ? -one : t;
  }
  m.pop_back();
  for (auto& row : m) row.pop_back();
  return normalize_alexander(detail::bareiss_determinant(std::move(m)));
}

inline int writhe(const PDCode& p) { return p.writhe(); }

/// Mirror-blind (Jones, Alexander) pair.
struct Fingerprint {
  Poly jones;
  Poly alexander;

  bool is_unknot() const { return jones == Poly::constant(1) && alexander == Poly::constant(1); }

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
  friend std::strong_ordering operator<=>(const Fingerprint& a, const Fingerprint& b) {
    if (auto c = a.jones <=> b.jones; c != 0) return c;
    return a.alexander <=> b.alexander;
  }
};

inline std::string to_string(const Fingerprint& f) { return "jones " + to_string(f.jones) + " ; alexander " + to_string(f.alexander); }

inline Poly canonical_jones(const Poly& v) { return std::min(v, v.inverted()); }

inline Fingerprint fingerprint(const PDCode& p, std::size_t max_states = kDefaultBracketStates) {
  return {canonical_jones(jones(p, max_states)), alexander(p)};
}

}  // namespace straightknot
