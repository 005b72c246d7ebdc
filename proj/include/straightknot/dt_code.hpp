#pragma once

// Dowker-Thistlethwaite codes to PD codes.

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "straightknot/diagram.hpp"
#include "straightknot/planarity.hpp"

namespace straightknot {

/// Checks that `dt` has n even entries whose absolute values cover 2..2n.
inline void validate_dt(const std::vector<int>& dt) {
  const std::size_t n = dt.size();
  std::vector<bool> seen(2 * n + 1, false);
  for (int a : dt) {
    const int v = std::abs(a);
    if (v % 2 != 0 || v < 2 || v > static_cast<int>(2 * n))
      throw std::invalid_argument("DT entry " + std::to_string(a) + " is not an even number in 2.." + std::to_string(2 * n));
    if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("DT entry " + std::to_string(v) + " repeats");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

/// Crossing i joins visits 2i-1 and |dt[i]|. A positive entry puts the odd
/// visit over; a global flip of that convention only mirrors the knot. The
/// planar embedding of the Gauss word fixes each crossing's handedness.
inline PDCode pd_from_dt(const std::vector<int>& dt) {
  validate_dt(dt);
  const int n = static_cast<int>(dt.size());
  if (n == 0) return {};
  std::vector<int> gauss(static_cast<std::size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    gauss[static_cast<std::size_t>(2 * i)] = i + 1;
    gauss[static_cast<std::size_t>(std::abs(dt[static_cast<std::size_t>(i)]) - 1)] = i + 1;
  }
  const auto emb = embed_gauss_word(gauss);
  if (!emb) throw NotRealizableError("DT code has no planar realization");
  std::vector<CrossingVisit> visits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int odd = 2 * i + 1, even = std::abs(dt[static_cast<std::size_t>(i)]);
    const bool odd_over = dt[static_cast<std::size_t>(i)] > 0;
    auto& v = visits[static_cast<std::size_t>(i)];
    v.first = std::min(odd, even);
    v.second = std::max(odd, even);
    v.first_over = (v.first == odd) == odd_over;
    v.orientation = emb->rotation[static_cast<std::size_t>(i)];
  }
  return pd_from_visits(visits);
}

}  // namespace straightknot
