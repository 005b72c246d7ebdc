#pragma once

// Knot words, straight words, signed and augmented straight words.
//
// A straight diagram has all crossings on one horizontal strand. Labelling the
// crossings 1..n left to right, the knot word is (1, 2, ..., n, s_1, ..., s_n)
// and the straight word is the tail s, a permutation of 1..n giving the order
// in which the semicircular strand revisits the crossings.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "straightknot/errors.hpp"

namespace straightknot {

/// Axis coordinate. Crossings sit at 1..n, the straight strand runs from 0 to
/// n+1 and markers sit at distinct negative integers.
using Coord = std::int64_t;

/// Over/under state of the semicircular strand at a crossing.
enum class Sign : std::uint8_t { Over, Under };

constexpr Sign operator!(Sign s) noexcept { return s == Sign::Over ? Sign::Under : Sign::Over; }

namespace detail {

inline bool is_permutation_of_1_to_n(const std::vector<int>& v) {
  std::vector<bool> seen(v.size() + 1, false);
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace detail

class StraightWord {
 public:
  StraightWord() = default;

  explicit StraightWord(std::vector<int> perm) : perm_(std::move(perm)) {
    if (!detail::is_permutation_of_1_to_n(perm_))
      throw std::invalid_argument("straight word must be a permutation of 1..n");
  }

  int size() const noexcept { return static_cast<int>(perm_.size()); }
  bool empty() const noexcept { return perm_.empty(); }
  const std::vector<int>& perm() const noexcept { return perm_; }
  int operator[](std::size_t i) const { return perm_[i]; }
  auto begin() const noexcept { return perm_.begin(); }
  auto end() const noexcept { return perm_.end(); }

  friend auto operator<=>(const StraightWord&, const StraightWord&) = default;

 private:
  std::vector<int> perm_;
};

/// Double-occurrence word with labels in first-encounter order.
class KnotWord {
 public:
  KnotWord() = default;

  explicit KnotWord(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.size() % 2 != 0) throw std::invalid_argument("knot word must have even length");
    const int n = static_cast<int>(entries_.size() / 2);
    std::vector<int> count(n + 1, 0);
    int next_new = 1;
    for (int x : entries_) {
      if (x < 1 || x > n) throw std::invalid_argument("knot word label " + std::to_string(x) + " out of range 1.." + std::to_string(n));
      if (++count[x] > 2) throw std::invalid_argument("knot word label " + std::to_string(x) + " occurs more than twice");
      if (count[x] == 1) {
        if (x != next_new) throw std::invalid_argument("knot word labels must first appear in increasing order");
        ++next_new;
      }
    }
    for (int k = 1; k <= n; ++k)
      if (count[k] != 2) throw std::invalid_argument("knot word label " + std::to_string(k) + " must occur exactly twice");
  }

  int crossings() const noexcept { return static_cast<int>(entries_.size() / 2); }
  const std::vector<int>& entries() const noexcept { return entries_; }

  friend bool operator==(const KnotWord&, const KnotWord&) = default;

 private:
  std::vector<int> entries_;
};

inline std::optional<StraightWord> from_knot_word(const KnotWord& w) {
  const auto& e = w.entries();
  const int n = w.crossings();
  for (int i = 0; i < n; ++i)
    if (e[i] != i + 1) return std::nullopt;
  return StraightWord(std::vector<int>(e.begin() + n, e.end()));
}

inline KnotWord to_knot_word(const StraightWord& s) {
  std::vector<int> e(s.size());
  std::iota(e.begin(), e.end(), 1);
  e.insert(e.end(), s.begin(), s.end());
  return KnotWord(std::move(e));
}

/// The word read from the right end of the straight strand: labels are
/// mirrored (i -> n+1-i) and the revisit order reversed.
inline StraightWord reverse_complement(const StraightWord& s) {
  const int n = s.size();
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = n + 1 - s[n - 1 - i];
  return StraightWord(std::move(out));
}

inline StraightWord canonicalize(const StraightWord& s) { return std::min(s, reverse_complement(s)); }

/// Identity word of length q, the q-crossing straight word of T(2,q).
inline StraightWord torus_word(int q) {
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("torus_word needs odd q >= 3");
  std::vector<int> v(q);
  std::iota(v.begin(), v.end(), 1);
  return StraightWord(std::move(v));
}

struct SignedStraightWord {
  StraightWord word;
  std::vector<Sign> signs;  // signs[j] belongs to crossing word[j]

  SignedStraightWord() = default;
  SignedStraightWord(StraightWord w, std::vector<Sign> s) : word(std::move(w)), signs(std::move(s)) {
    if (static_cast<int>(signs.size()) != word.size())
      throw std::invalid_argument("signed word needs one sign per position");
  }

  int size() const noexcept { return word.size(); }

  /// Sign of the semicircular strand at crossing `label`.
  Sign sign_at(int label) const {
    for (int j = 0; j < word.size(); ++j)
      if (word[j] == label) return signs[j];
    throw std::out_of_range("no crossing " + std::to_string(label));
  }

  friend auto operator<=>(const SignedStraightWord&, const SignedStraightWord&) = default;
};

/// Flips every sign: the mirror image diagram.
inline SignedStraightWord mirror(const SignedStraightWord& w) {
  std::vector<Sign> s(w.signs);
  for (auto& x : s) x = !x;
  return {w.word, std::move(s)};
}

/// Signing that alternates Under, Over, Under, ... by word position.
inline SignedStraightWord alternating_signing(const StraightWord& w, Sign first = Sign::Under) {
  std::vector<Sign> s(w.size());
  for (int j = 0; j < w.size(); ++j) s[j] = (j % 2 == 0) ? first : !first;
  return {w, std::move(s)};
}

inline SignedStraightWord uniform_signing(const StraightWord& w, Sign s) {
  return {w, std::vector<Sign>(w.size(), s)};
}

/// Straight word with negative markers interleaved. A marker records where
/// an uncontained arc crosses the extended straight strand left of 0.
class AugmentedWord {
 public:
  AugmentedWord() = default;

  explicit AugmentedWord(std::vector<Coord> tokens) : tokens_(std::move(tokens)) {
    std::vector<int> labels;
    std::vector<Coord> markers;
    for (Coord t : tokens_) {
      if (t > 0)
        labels.push_back(static_cast<int>(t));
      else if (t < 0)
        markers.push_back(t);
      else
        throw std::invalid_argument("augmented word token 0 is neither a crossing nor a marker");
    }
    if (!detail::is_permutation_of_1_to_n(labels))
      throw std::invalid_argument("crossing tokens of an augmented word must be a permutation of 1..n");
    std::sort(markers.begin(), markers.end());
    if (std::adjacent_find(markers.begin(), markers.end()) != markers.end())
      throw std::invalid_argument("marker coordinates must be distinct");
    const int n = static_cast<int>(labels.size());
    if (static_cast<int>(markers.size()) > std::max(0, n - 3))
      throw std::invalid_argument("at most max(0, n-3) markers are allowed");
    word_ = StraightWord(std::move(labels));
    markers_ = static_cast<int>(markers.size());
  }

  /// Zero-marker augmentation of a plain straight word.
  static AugmentedWord plain(const StraightWord& w) { return AugmentedWord(std::vector<Coord>(w.begin(), w.end())); }

  const std::vector<Coord>& tokens() const noexcept { return tokens_; }
  const StraightWord& word() const noexcept { return word_; }
  int crossings() const noexcept { return word_.size(); }
  int marker_count() const noexcept { return markers_; }

  friend bool operator==(const AugmentedWord& a, const AugmentedWord& b) { return a.tokens_ == b.tokens_; }
  friend auto operator<=>(const AugmentedWord& a, const AugmentedWord& b) { return a.tokens_ <=> b.tokens_; }

 private:
  std::vector<Coord> tokens_;
  StraightWord word_;
  int markers_ = 0;
};

// ---------------------------------------------------------------------------
// Text format: "(2,1,4,3)". Signed words mark Under with a minus sign,
// augmented words interleave negative markers. The caller picks the reading.

namespace detail {

struct RawEntry {
  std::int64_t value;
  std::size_t position;
};

inline std::vector<RawEntry> parse_entries(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r')) ++i;
  };
  skip_ws();
  if (i >= text.size() || text[i] != '(') throw ParseError("expected '('", i);
  ++i;
  std::vector<RawEntry> out;
  skip_ws();
  if (i < text.size() && text[i] == ')') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      const std::size_t start = i;
      if (i < text.size() && text[i] == '+') ++i;
      std::int64_t value = 0;
      const char* first = text.data() + i;
      auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
      if (ec != std::errc() || ptr == first) throw ParseError("expected an integer", start);
      i = static_cast<std::size_t>(ptr - text.data());
      out.push_back({value, start});
      skip_ws();
      if (i >= text.size()) throw ParseError("expected ',' or ')'", i);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] != ',') throw ParseError("expected ',' or ')'", i);
      ++i;
    }
  }
  skip_ws();
  if (i != text.size()) throw ParseError("trailing characters after ')'", i);
  return out;
}

inline void check_labels(const std::vector<std::int64_t>& labels, const std::vector<std::size_t>& positions) {
  const auto n = static_cast<std::int64_t>(labels.size());
  std::vector<bool> seen(labels.size() + 1, false);
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const auto x = labels[k];
    if (x < 1 || x > n) throw ParseError("label " + std::to_string(x) + " out of range 1.." + std::to_string(n), positions[k]);
    if (seen[x]) throw ParseError("label " + std::to_string(x) + " repeated", positions[k]);
    seen[x] = true;
  }
}

}  // namespace detail

inline StraightWord parse_straight_word(std::string_view text) {
  const auto entries = detail::parse_entries(text);
  std::vector<std::int64_t> labels;
  std::vector<std::size_t> pos;
  for (const auto& e : entries) {
    if (e.value <= 0) throw ParseError("straight word entries must be positive", e.position);
    labels.push_back(e.value);
    pos.push_back(e.position);
  }
  detail::check_labels(labels, pos);
  return StraightWord(std::vector<int>(labels.begin(), labels.end()));
}

inline SignedStraightWord parse_signed_word(std::string_view text) {
  const auto entries = detail::parse_entries(text);
  std::vector<std::int64_t> labels;
  std::vector<std::size_t> pos;
  std::vector<Sign> signs;
  for (const auto& e : entries) {
    if (e.value == 0) throw ParseError("0 is not a crossing label", e.position);
    labels.push_back(e.value < 0 ? -e.value : e.value);
    signs.push_back(e.value < 0 ? Sign::Under : Sign::Over);
    pos.push_back(e.position);
  }
  detail::check_labels(labels, pos);
  return {StraightWord(std::vector<int>(labels.begin(), labels.end())), std::move(signs)};
}

inline AugmentedWord parse_augmented_word(std::string_view text) {
  const auto entries = detail::parse_entries(text);
  std::vector<std::int64_t> labels;
  std::vector<std::size_t> pos;
  std::vector<Coord> tokens;
  std::vector<Coord> markers;
  for (const auto& e : entries) {
    if (e.value == 0) throw ParseError("0 is neither a crossing nor a marker", e.position);
    if (e.value > 0) {
      labels.push_back(e.value);
      pos.push_back(e.position);
    } else {
      if (std::find(markers.begin(), markers.end(), e.value) != markers.end())
        throw ParseError("marker " + std::to_string(e.value) + " repeated", e.position);
      markers.push_back(e.value);
    }
    tokens.push_back(e.value);
  }
  detail::check_labels(labels, pos);
  const int n = static_cast<int>(labels.size());
  if (static_cast<int>(markers.size()) > std::max(0, n - 3))
    throw ParseError("too many markers for " + std::to_string(n) + " crossings", entries.empty() ? 0 : entries.back().position);
  return AugmentedWord(std::move(tokens));
}

inline std::string format_word(const StraightWord& w) {
  std::string s = "(";
  for (int j = 0; j < w.size(); ++j) {
    if (j) s += ',';
    s += std::to_string(w[j]);
  }
  return s + ")";
}

inline std::string format_word(const SignedStraightWord& w) {
  std::string s = "(";
  for (int j = 0; j < w.size(); ++j) {
    if (j) s += ',';
    if (w.signs[j] == Sign::Under) s += '-';
    s += std::to_string(w.word[j]);
  }
  return s + ")";
}

inline std::string format_word(const AugmentedWord& w) {
  std::string s = "(";
  bool first = true;
  for (Coord t : w.tokens()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(t);
  }
  return s + ")";
}

}  // namespace straightknot
