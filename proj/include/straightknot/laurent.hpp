#pragma once

// Laurent polynomials in one variable with exact integer coefficients.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace straightknot {

using BigInt = boost::multiprecision::cpp_int;

/// Dense Laurent polynomial: coeffs_[i] multiplies x^(low_ + i). Leading and
/// trailing coefficients are nonzero, so the representation is unique; the
/// zero polynomial has no coefficients.
template <typename Coeff = BigInt>
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly monomial(Coeff c, int exponent) {
    LaurentPoly p;
    if (c != 0) {
      p.low_ = exponent;
      p.coeffs_.push_back(std::move(c));
    }
    return p;
  }

  static LaurentPoly constant(Coeff c) { return monomial(std::move(c), 0); }

  /// Builds from (exponent, coefficient) pairs; repeated exponents add.
  static LaurentPoly from_terms(const std::vector<std::pair<int, Coeff>>& terms) {
    LaurentPoly p;
    for (const auto& [e, c] : terms) p += monomial(c, e);
    return p;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int low() const noexcept { return low_; }
  int high() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  int span() const noexcept { return is_zero() ? 0 : high() - low(); }
  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Coeff& c) { return c != 0; }));
  }

  Coeff coeff(int e) const {
    if (is_zero() || e < low_ || e > high()) return Coeff(0);
    return coeffs_[e - low_];
  }

  const Coeff& leading() const { return coeffs_.back(); }
  const Coeff& trailing() const { return coeffs_.front(); }

  std::vector<std::pair<int, Coeff>> terms() const {
    std::vector<std::pair<int, Coeff>> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
    return out;
  }

  /// Value at x = 1.
  Coeff at_one() const {
    Coeff s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
  }

  LaurentPoly shifted(int k) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
  }

  /// x -> 1/x.
  LaurentPoly inverted() const {
    LaurentPoly p;
    if (is_zero()) return p;
    p.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
    p.low_ = -high();
    return p;
  }

  /// x -> x^k for k != 0.
  LaurentPoly substituted_power(int k) const {
    if (k == 0) throw std::invalid_argument("substitution power must be nonzero");
    std::vector<std::pair<int, Coeff>> t = terms();
    for (auto& [e, c] : t) e *= k;
    return from_terms(t);
  }

  LaurentPoly operator-() const {
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(low_, o.low_);
    const int hi = std::max(high(), o.high());
    if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Coeff(0));
    low_ = lo;
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), Coeff(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[o.low_ - lo + i] += o.coeffs_[i];
    trim();
    return *this;
  }

  LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

  LaurentPoly& operator*=(const Coeff& k) {
    if (k == 0) return *this = LaurentPoly();
    for (auto& c : coeffs_) c *= k;
    return *this;
  }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly p;
    if (a.is_zero() || b.is_zero()) return p;
    p.low_ = a.low_ + b.low_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    p.trim();
    return p;
  }

  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  /// Quotient of an exact division; throws if `d` does not divide `*this`.
  LaurentPoly exact_divide(const LaurentPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPoly rem = *this;
    LaurentPoly q;
    while (!rem.is_zero()) {
      if (rem.high() - rem.low() < d.high() - d.low()) throw std::domain_error("polynomial division is not exact");
      const Coeff& lead = rem.leading();
      if (lead % d.leading() != 0) throw std::domain_error("polynomial division is not exact");
      LaurentPoly term = monomial(lead / d.leading(), rem.high() - d.high());
      rem -= term * d;
      q += term;
    }
    return q;
  }

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.is_zero() || a.low_ == b.low_);
  }

  /// Lexicographic on the ascending (exponent, coefficient) term list.
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
    const auto ta = a.terms();
    const auto tb = b.terms();
    for (std::size_t i = 0; i < ta.size() && i < tb.size(); ++i) {
      if (ta[i].first != tb[i].first) return ta[i].first <=> tb[i].first;
      if (ta[i].second != tb[i].second) return ta[i].second < tb[i].second ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return ta.size() <=> tb.size();
  }

 private:
  void trim() {
    std::size_t end = coeffs_.size();
    while (end > 0 && coeffs_[end - 1] == 0) --end;
    coeffs_.resize(end);
    std::size_t start = 0;
    while (start < coeffs_.size() && coeffs_[start] == 0) ++start;
    if (start > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(start));
      low_ += static_cast<int>(start);
    }
    if (coeffs_.empty()) low_ = 0;
  }

  int low_ = 0;
  std::vector<Coeff> coeffs_;
};

using Poly = LaurentPoly<BigInt>;

/// "e:c e:c ..." with ascending exponents; the zero polynomial is "0".
template <typename Coeff>
std::string to_string(const LaurentPoly<Coeff>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << ' ';
    first = false;
    os << e << ':' << c;
  }
  return os.str();
}

inline Poly parse_poly(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string tok;
  Poly p;
  while (is >> tok) {
    if (tok == "0") continue;
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("polynomial term '" + tok + "' is not exponent:coefficient");
    p += Poly::monomial(BigInt(tok.substr(colon + 1)), std::stoi(tok.substr(0, colon)));
  }
  return p;
}

}  // namespace straightknot
