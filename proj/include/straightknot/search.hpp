#pragma once

// Reference table ingestion, knot identification and the pruned search for
// straight and contained straight numbers.

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "straightknot/diagram.hpp"
#include "straightknot/dt_code.hpp"
#include "straightknot/errors.hpp"
#include "straightknot/invariants.hpp"
#include "straightknot/realize.hpp"
#include "straightknot/words.hpp"

namespace straightknot {

// ---------------------------------------------------------------------------
// Reference table

struct KnotRecord {
  std::string name;
  int crossing_number = 0;
  std::vector<int> dt_code;
  Fingerprint fingerprint;
};

struct IngestError {
  std::size_t line = 0;
  std::string message;
};

class ReferenceTable {
 public:
  void add(KnotRecord r) {
    by_fingerprint_[r.fingerprint].push_back(records_.size());
    records_.push_back(std::move(r));
  }

  const std::vector<KnotRecord>& records() const noexcept { return records_; }
  const std::vector<IngestError>& errors() const noexcept { return errors_; }
  void add_error(IngestError e) { errors_.push_back(std::move(e)); }

  const KnotRecord* find(const std::string& name) const {
    for (const auto& r : records_)
      if (r.name == name) return &r;
    return nullptr;
  }

  /// Names with this fingerprint and crossing number at most `max_crossings`,
  /// in table order.
  std::vector<std::string> lookup(const Fingerprint& f, int max_crossings = 1 << 30) const {
    std::vector<std::string> out;
    const auto it = by_fingerprint_.find(f);
    if (it == by_fingerprint_.end()) return out;
    for (std::size_t i : it->second)
      if (records_[i].crossing_number <= max_crossings) out.push_back(records_[i].name);
    return out;
  }

  /// Groups of two or more records that share a fingerprint.
  std::vector<std::vector<std::string>> ambiguity_sets() const {
    std::vector<std::vector<std::string>> out;
    for (const auto& [f, idx] : by_fingerprint_) {
      if (idx.size() < 2) continue;
      std::vector<std::string> names;
      for (std::size_t i : idx) names.push_back(records_[i].name);
      out.push_back(std::move(names));
    }
    return out;
  }

 private:
  std::vector<KnotRecord> records_;
  std::vector<IngestError> errors_;
  std::map<Fingerprint, std::vector<std::size_t>> by_fingerprint_;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline KnotRecord parse_record(const std::string& line) {
  const auto c1 = line.find(',');
  const auto open = line.find('[');
  const auto close = line.rfind(']');
  if (c1 == std::string::npos || open == std::string::npos || close == std::string::npos || close < open || open < c1)
    throw std::invalid_argument("expected 'name, crossing_number, [dt entries]'");
  KnotRecord r;
  r.name = trim(std::string_view(line).substr(0, c1));
  const auto mid = trim(std::string_view(line).substr(c1 + 1, open - c1 - 1));
  if (r.name.empty()) throw std::invalid_argument("empty knot name");
  if (mid.empty() || mid.back() != ',') throw std::invalid_argument("expected ',' before the DT code");
  const auto num = trim(std::string_view(mid).substr(0, mid.size() - 1));
  std::size_t used = 0;
  r.crossing_number = std::stoi(num, &used);
  if (used != num.size() || r.crossing_number < 0) throw std::invalid_argument("bad crossing number '" + num + "'");
  if (!trim(std::string_view(line).substr(close + 1)).empty()) throw std::invalid_argument("trailing text after ']'");
  std::istringstream is(line.substr(open + 1, close - open - 1));
  std::string tok;
  while (std::getline(is, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) throw std::invalid_argument("empty DT entry");
    std::size_t u = 0;
    const int v = std::stoi(tok, &u);
    if (u != tok.size()) throw std::invalid_argument("bad DT entry '" + tok + "'");
    r.dt_code.push_back(v);
  }
  if (static_cast<int>(r.dt_code.size()) != r.crossing_number)
    throw std::invalid_argument("DT code has " + std::to_string(r.dt_code.size()) + " entries for crossing number " +
                                std::to_string(r.crossing_number));
  r.fingerprint = fingerprint(pd_from_dt(r.dt_code));
  return r;
}

}  // namespace detail

/// Reads `name, crossing_number, [dt entries]` lines. Blank lines and '#'
/// comments are skipped; a bad record is reported with its line number and
/// loading continues.
inline ReferenceTable ingest_table(std::istream& in) {
  ReferenceTable t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto body = detail::trim(line);
    if (body.empty() || body[0] == '#') continue;
    try {
      t.add(detail::parse_record(body));
    } catch (const std::exception& e) {
      t.add_error({lineno, e.what()});
    }
  }
  return t;
}

inline ReferenceTable ingest_table_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open reference table " + path.string());
  return ingest_table(in);
}

#ifdef STRAIGHTKNOT_DATA_DIR
/// The bundled table of prime knots through 10 crossings, loaded once.
inline const ReferenceTable& default_table() {
  static const ReferenceTable table = ingest_table_file(std::filesystem::path(STRAIGHTKNOT_DATA_DIR) / "rolfsen_dt.txt");
  return table;
}
#endif

// ---------------------------------------------------------------------------
// Identification

struct Identification {
  std::vector<std::string> candidates;  // empty when not in the table
  Fingerprint fingerprint;

  bool found() const noexcept { return !candidates.empty(); }
  bool ambiguous() const noexcept { return candidates.size() > 1; }
  bool unknot() const { return candidates.size() == 1 && candidates[0] == "0_1"; }

  /// "4_1", "{5_1,10_132}" or "not in table".
  std::string label() const {
    if (candidates.empty()) return "not in table";
    if (candidates.size() == 1) return candidates[0];
    std::string s = "{";
    for (std::size_t i = 0; i < candidates.size(); ++i) s += (i ? "," : "") + candidates[i];
    return s + "}";
  }
};

/// Table lookup of a fingerprint seen on an n-crossing diagram; knots with
/// more than n crossings cannot occur there and are left out.
inline Identification identify(const Fingerprint& f, const ReferenceTable& table, int diagram_crossings) {
  Identification id{table.lookup(f, diagram_crossings), f};
  if (id.candidates.empty() && f.is_unknot()) id.candidates = {"0_1"};
  return id;
}

inline Identification identify(const StraightDiagram& d, const ReferenceTable& table,
                               std::size_t max_states = kDefaultBracketStates) {
  return identify(fingerprint(pd_code(d), max_states), table, d.crossings());
}

inline Identification identify(const SignedStraightWord& w, const ReferenceTable& table,
                               std::size_t max_states = kDefaultBracketStates) {
  return identify(layout(w), table, max_states);
}

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr int kMaxSearchCrossings = 12;

namespace detail {

inline void require_search_size(int n) {
  if (n < 3) throw std::invalid_argument("knot searches start at 3 crossings");
  if (n > kMaxSearchCrossings) throw ResourceError("searches beyond " + std::to_string(kMaxSearchCrossings) + " crossings exceed the search budget");
}

inline bool is_canonical(const StraightWord& w) { return !(reverse_complement(w) < w); }

// Depth-first over permutations with a fixed prefix, in lexicographic order.
// In contained mode each new semicircle is checked against those already
// placed, which cuts off most of the tree.
class WordWalker {
 public:
  WordWalker(int n, bool contained_only, bool prune) : n_(n), contained_(contained_only), prune_(prune) {}

  void walk(const std::vector<int>& prefix, const std::function<void(const StraightWord&)>& emit) {
    perm_.clear();
    used_.assign(static_cast<std::size_t>(n_) + 1, false);
    top_.clear();
    bottom_.clear();
    emit_ = &emit;
    if (prune_ && !prefix.empty() && prefix[0] > n_ - 2) return;
    for (int x : prefix) {
      if (x < 1 || x > n_ || used_[static_cast<std::size_t>(x)]) return;
      if (!push(x)) return;
    }
    extend();
  }

 private:
  bool push(int x) {
    const Coord prev = perm_.empty() ? n_ + 1 : perm_.back();
    const Interval iv{prev, x, perm_.size() % 2 == 0 ? Side::Top : Side::Bottom};
    if (contained_ && conflicts(iv)) return false;
    (iv.side == Side::Top ? top_ : bottom_).push_back(iv);
    perm_.push_back(x);
    used_[static_cast<std::size_t>(x)] = true;
    return true;
  }
  void pop() {
    const auto side = (perm_.size() - 1) % 2 == 0 ? Side::Top : Side::Bottom;
    (side == Side::Top ? top_ : bottom_).pop_back();
    used_[static_cast<std::size_t>(perm_.back())] = false;
    perm_.pop_back();
  }
  bool conflicts(const Interval& iv) const {
    for (const auto& o : (iv.side == Side::Top ? top_ : bottom_))
      if (interleaved(iv, o)) return true;
    return false;
  }

  void extend() {
    if (static_cast<int>(perm_.size()) == n_) {
      finish();
      return;
    }
    for (int x = 1; x <= n_; ++x) {
      if (used_[static_cast<std::size_t>(x)]) continue;
      if (prune_ && perm_.empty() && x > n_ - 2) continue;
      if (!push(x)) continue;
      extend();
      pop();
    }
  }

  void finish() {
    if (contained_) {
      const Interval last{perm_.back(), 0, n_ % 2 == 0 ? Side::Top : Side::Bottom};
      if (conflicts(last)) return;
    }
    StraightWord w(perm_);
    if (prune_ && !is_canonical(w)) return;
    (*emit_)(w);
  }

  int n_;
  bool contained_;
  bool prune_;
  std::vector<int> perm_;
  std::vector<bool> used_;
  std::vector<Interval> top_, bottom_;
  const std::function<void(const StraightWord&)>* emit_ = nullptr;
};

}  // namespace detail

/// Work units for one n: word prefixes of length two, in lexicographic order.
inline std::vector<std::vector<int>> word_blocks(int n) {
  std::vector<std::vector<int>> blocks;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (a != b) blocks.push_back({a, b});
  return blocks;
}

/// Words in one block that pass the requested realizability test. With
/// `prune`, only orbit-minimal words whose first entry is at most n-2.
inline std::vector<StraightWord> enumerate_block(int n, const std::vector<int>& prefix, bool contained_only, bool prune = true) {
  std::vector<StraightWord> out;
  detail::WordWalker walker(n, contained_only, prune);
  walker.walk(prefix, [&](const StraightWord& w) {
    if (contained_only || is_realizable(w)) out.push_back(w);
  });
  return out;
}

inline std::vector<StraightWord> enumerate_words(int n, bool contained_only, bool prune = true) {
  detail::require_search_size(n);
  std::vector<StraightWord> out;
  for (const auto& b : word_blocks(n)) {
    auto part = enumerate_block(n, b, contained_only, prune);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// True when crossings adjacent on the strand are also consecutive along the
/// semicircles, with no marker between and equal signs: a removable bigon.
inline bool has_reidemeister_ii_bigon(const AugmentedWord& aug, const SignedStraightWord& w) {
  const auto& t = aug.tokens();
  for (std::size_t k = 0; k + 1 < t.size(); ++k) {
    if (t[k] <= 0 || t[k + 1] <= 0) continue;
    if (std::abs(t[k] - t[k + 1]) != 1) continue;
    if (w.sign_at(static_cast<int>(t[k])) == w.sign_at(static_cast<int>(t[k + 1]))) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Results and persistence

struct SearchResult {
  std::string name;  // label: knot name or ambiguity set
  SignedStraightWord word;
  AugmentedWord augmentation;
  bool contained = false;
  int n = 0;

  friend bool operator==(const SearchResult& a, const SearchResult& b) {
    return a.name == b.name && a.word == b.word && a.augmentation == b.augmentation && a.contained == b.contained && a.n == b.n;
  }
};

inline std::string sign_string(const SignedStraightWord& w) {
  std::string s;
  for (Sign x : w.signs) s += x == Sign::Over ? '+' : '-';
  return s;
}

inline nlohmann::json to_json(const SearchResult& r) {
  return {{"name", r.name},
          {"word", format_word(r.word.word)},
          {"signs", sign_string(r.word)},
          {"augmentation", format_word(r.augmentation)},
          {"contained", r.contained},
          {"n", r.n}};
}

inline SearchResult result_from_json(const nlohmann::json& j) {
  SearchResult r;
  r.name = j.at("name").get<std::string>();
  const auto word = parse_straight_word(j.at("word").get<std::string>());
  const auto signs = j.at("signs").get<std::string>();
  if (static_cast<int>(signs.size()) != word.size()) throw std::invalid_argument("signs do not match word length");
  std::vector<Sign> s;
  for (char c : signs) {
    if (c != '+' && c != '-') throw std::invalid_argument("signs must be '+' or '-'");
    s.push_back(c == '+' ? Sign::Over : Sign::Under);
  }
  r.word = SignedStraightWord(word, std::move(s));
  r.augmentation = parse_augmented_word(j.at("augmentation").get<std::string>());
  r.contained = j.at("contained").get<bool>();
  r.n = j.at("n").get<int>();
  if (r.augmentation.word() != word) throw std::invalid_argument("augmentation does not match word");
  if (r.contained != (r.augmentation.marker_count() == 0)) throw std::invalid_argument("contained flag disagrees with augmentation");
  return r;
}

inline void write_results(std::ostream& out, const std::vector<SearchResult>& results) {
  for (const auto& r : results) out << to_json(r).dump() << '\n';
}

inline std::vector<SearchResult> read_results(std::istream& in) {
  std::vector<SearchResult> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (detail::trim(line).empty()) continue;
    try {
      out.push_back(result_from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw std::runtime_error("results line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

struct Checkpoint {
  int n = 0;
  int block = -1;  // last fully committed block at n
};

inline std::optional<Checkpoint> read_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  Checkpoint c;
  if (!(in >> c.n >> c.block)) throw std::runtime_error("malformed checkpoint file " + path.string());
  return c;
}

inline void write_checkpoint(const std::filesystem::path& path, const Checkpoint& c) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << c.n << ' ' << c.block << '\n';
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// Table computation

enum class SearchMode { General, Contained };

struct TableOptions {
  int max_n = 7;
  int min_n = 3;
  SearchMode mode = SearchMode::General;
  unsigned threads = 0;  // 0: hardware concurrency
  bool prune = true;     // orbit, first-entry and bigon pruning
  std::optional<std::filesystem::path> results_path;
  std::optional<std::filesystem::path> checkpoint_path;
  bool resume = false;
  std::size_t max_bracket_states = kDefaultBracketStates;
  std::function<void(int n, int block, int blocks)> progress;
};

struct TableEntry {
  std::string name;
  int crossing_number = -1;  // -1 for ambiguity sets
  std::optional<int> str_upper;
  std::optional<int> cstr_upper;
  bool str_certified = false;
  bool cstr_certified = false;
  std::optional<SearchResult> str_witness;
  std::optional<SearchResult> cstr_witness;
};

struct SearchStats {
  std::uint64_t words = 0;
  std::uint64_t diagrams = 0;
  std::uint64_t skipped_bigon = 0;
  std::uint64_t unknots = 0;
  std::uint64_t unidentified = 0;
  std::uint64_t ambiguous = 0;
  std::uint64_t count_violations = 0;

  SearchStats& operator+=(const SearchStats& o) {
    words += o.words;
    diagrams += o.diagrams;
    skipped_bigon += o.skipped_bigon;
    unknots += o.unknots;
    unidentified += o.unidentified;
    ambiguous += o.ambiguous;
    count_violations += o.count_violations;
    return *this;
  }
};

struct KnotTable {
  std::map<std::string, TableEntry> entries;
  std::vector<SearchResult> results;  // first appearances, in commit order
  int completed_n = 0;                // every n in [min_n, completed_n] fully searched
  int min_n = 3;
  SearchStats stats;

  const TableEntry* find(const std::string& name) const {
    const auto it = entries.find(name);
    return it == entries.end() ? nullptr : &it->second;
  }
};

namespace detail {

// Result sink shared by the writer; holds what has been recorded so far.
class TableState {
 public:
  TableState(const ReferenceTable& ref, int min_n) : ref_(ref) { table_.min_n = min_n; }

  // Records a first appearance; returns false when nothing new.
  bool commit(const SearchResult& r) {
    const bool need_general = !general_.count(r.name);
    const bool need_contained = r.contained && !contained_.count(r.name);
    if (!need_general && !need_contained) return false;
    general_.insert(r.name);
    if (r.contained) contained_.insert(r.name);
    auto& e = table_.entries[r.name];
    if (e.name.empty()) {
      e.name = r.name;
      if (const auto* rec = ref_.find(r.name)) e.crossing_number = rec->crossing_number;
    }
    if (need_general) {
      e.str_upper = r.n;
      e.str_witness = r;
    }
    if (need_contained) {
      e.cstr_upper = r.n;
      e.cstr_witness = r;
    }
    table_.results.push_back(r);
    return true;
  }

  KnotTable& table() { return table_; }

 private:
  const ReferenceTable& ref_;
  KnotTable table_;
  std::set<std::string> general_, contained_;
};

struct BlockOutput {
  std::vector<SearchResult> results;
  SearchStats stats;
};

inline BlockOutput run_block(int n, const std::vector<int>& prefix, const TableOptions& opt, const ReferenceTable& ref) {
  BlockOutput out;
  const bool contained_only = opt.mode == SearchMode::Contained;
  std::set<std::string> seen_general, seen_contained;
  for (const auto& w : enumerate_block(n, prefix, contained_only, opt.prune)) {
    ++out.stats.words;
    const auto aug = contained_only ? AugmentedWord::plain(w) : *is_realizable(w);
    const int u = aug.marker_count();
    const bool contained = u == 0;
    const bool bigon_prune = opt.prune && (u == 0 || u <= n - 5);
    const std::uint32_t count = 1u << (n - 1);
    for (std::uint32_t mask = 0; mask < count; ++mask) {
      // signs[0] stays Over: the other half are mirror images
      std::vector<Sign> s(static_cast<std::size_t>(n), Sign::Over);
      for (int j = 1; j < n; ++j)
        if (mask >> (j - 1) & 1u) s[static_cast<std::size_t>(j)] = Sign::Under;
      const SignedStraightWord sw(w, std::move(s));
      if (bigon_prune && has_reidemeister_ii_bigon(aug, sw)) {
        ++out.stats.skipped_bigon;
        continue;
      }
      const auto d = layout(sw, aug);
      ++out.stats.diagrams;
      if (!counts_consistent(d)) ++out.stats.count_violations;
      const auto id = identify(d, ref, opt.max_bracket_states);
      if (id.unknot()) {
        ++out.stats.unknots;
        continue;
      }
      if (!id.found()) {
        ++out.stats.unidentified;
        continue;
      }
      if (id.ambiguous()) ++out.stats.ambiguous;
      const auto name = id.label();
      const bool need_general = !seen_general.count(name);
      const bool need_contained = contained && !seen_contained.count(name);
      if (!need_general && !need_contained) continue;
      seen_general.insert(name);
      if (contained) seen_contained.insert(name);
      out.results.push_back({name, sw, aug, contained, n});
    }
  }
  return out;
}

}  // namespace detail

/// Searches n = min_n..max_n, recording the first n at which each knot
/// appears. Blocks run on worker threads and are committed in block order by
/// a single writer, so the table does not depend on scheduling.
inline KnotTable compute_table(const TableOptions& opt, const ReferenceTable& ref) {
  if (opt.min_n > opt.max_n) throw std::invalid_argument("min_n exceeds max_n");
  detail::require_search_size(opt.min_n);
  detail::require_search_size(opt.max_n);
  detail::TableState state(ref, opt.min_n);

  Checkpoint start{opt.min_n, -1};
  if (opt.resume) {
    if (!opt.results_path || !opt.checkpoint_path) throw std::invalid_argument("resume needs results and checkpoint paths");
    if (std::ifstream in(*opt.results_path); in)
      for (const auto& r : read_results(in)) state.commit(r);
    if (auto c = read_checkpoint(*opt.checkpoint_path)) start = *c;
  } else if (opt.results_path) {
    std::ofstream(*opt.results_path, std::ios::trunc);
  }
  std::ofstream results_out;
  if (opt.results_path) {
    results_out.open(*opt.results_path, std::ios::app);
    if (!results_out) throw std::runtime_error("cannot open results file " + opt.results_path->string());
  }
  state.table().completed_n = start.n - 1;

  const unsigned threads = std::max(1u, opt.threads ? opt.threads : std::thread::hardware_concurrency());
  for (int n = start.n; n <= opt.max_n; ++n) {
    const auto blocks = word_blocks(n);
    const int first = n == start.n ? start.block + 1 : 0;
    const int total = static_cast<int>(blocks.size());
    std::vector<std::optional<detail::BlockOutput>> done(blocks.size());
    std::atomic<int> next{first};
    std::mutex mu;
    std::condition_variable cv;
    std::exception_ptr failure;

    auto worker = [&] {
      for (;;) {
        const int b = next.fetch_add(1);
        if (b >= total) return;
        try {
          auto out = detail::run_block(n, blocks[static_cast<std::size_t>(b)], opt, ref);
          std::lock_guard lock(mu);
          done[static_cast<std::size_t>(b)] = std::move(out);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
          next.store(total);
        }
        cv.notify_all();
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);

    // single writer: commit blocks strictly in order
    for (int b = first; b < total; ++b) {
      detail::BlockOutput out;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return done[static_cast<std::size_t>(b)].has_value() || failure; });
        if (failure) break;
        out = std::move(*done[static_cast<std::size_t>(b)]);
        done[static_cast<std::size_t>(b)].reset();
      }
      for (const auto& r : out.results)
        if (state.commit(r) && results_out.is_open()) results_out << to_json(r).dump() << '\n';
      state.table().stats += out.stats;
      if (results_out.is_open()) {
        results_out.flush();
        if (!results_out) throw std::runtime_error("failed writing results file");
      }
      if (opt.checkpoint_path) write_checkpoint(*opt.checkpoint_path, {n, b});
      if (opt.progress) opt.progress(n, b, total);
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    state.table().completed_n = n;
  }

  // Certified: equal to the crossing number, or every smaller n was searched
  // in this table's history.
  auto& table = state.table();
  for (auto& [name, e] : table.entries) {
    auto certify = [&](const std::optional<int>& v) {
      return v && ((e.crossing_number >= 0 && *v == e.crossing_number) || table.min_n <= 3);
    };
    e.str_certified = opt.mode == SearchMode::General && certify(e.str_upper);
    e.cstr_certified = certify(e.cstr_upper);
    if (opt.mode == SearchMode::Contained) {
      // contained runs say nothing about str beyond str <= cstr
      e.str_upper.reset();
      e.str_witness.reset();
    }
  }
  return std::move(table);
}

#ifdef STRAIGHTKNOT_DATA_DIR
inline KnotTable compute_table(int max_n, SearchMode mode = SearchMode::General) {
  TableOptions opt;
  opt.max_n = max_n;
  opt.mode = mode;
  return compute_table(opt, default_table());
}
#endif

}  // namespace straightknot
