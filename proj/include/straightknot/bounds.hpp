#pragma once

// Upper bounds relating crossing, straight, contained straight and petal numbers.

#include <cstdint>
#include <stdexcept>

namespace straightknot {

namespace detail {

inline std::int64_t pow2(std::int64_t e) {
  if (e < 0 || e > 61) throw std::overflow_error("bound exponent out of range");
  return std::int64_t{1} << e;
}

inline void require_nonnegative(std::int64_t v) {
  if (v < 0) throw std::invalid_argument("bound inputs must be nonnegative");
}

}  // namespace detail

/// Reduced diagram with m >= 3 crossings on one strand and r further crossings.
inline std::int64_t str_upper_from_mr(std::int64_t m, std::int64_t r) {
  detail::require_nonnegative(m);
  detail::require_nonnegative(r);
  return detail::pow2(r) * (m + 1) - 1;
}

inline std::int64_t str_upper_from_crossing(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("crossing number must be positive");
  return detail::pow2(n - 1) - 1;
}

inline std::int64_t cstr_upper_from_str(std::int64_t n) {
  detail::require_nonnegative(n);
  return 4 * n - 8;
}

inline std::int64_t petal_upper_from_uc(std::int64_t u, std::int64_t c) {
  detail::require_nonnegative(u);
  detail::require_nonnegative(c);
  return 3 * u + 2 * c + 1;
}

inline std::int64_t petal_upper_from_str(std::int64_t n) {
  detail::require_nonnegative(n);
  return 3 * n;
}

inline std::int64_t petal_upper_from_cstr(std::int64_t n) {
  detail::require_nonnegative(n);
  return 2 * n + 3;
}

}  // namespace straightknot
