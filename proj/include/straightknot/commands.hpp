#pragma once

// Request handlers shared by the command-line tool and the local service.
// A request is a JSON object {"command", "word", ...}; every response echoes
// the parsed word in normalized form.

#include <chrono>
#include <string>

#include <nlohmann/json.hpp>

#include "straightknot/diagram.hpp"
#include "straightknot/errors.hpp"
#include "straightknot/invariants.hpp"
#include "straightknot/realize.hpp"
#include "straightknot/search.hpp"
#include "straightknot/svg.hpp"
#include "straightknot/words.hpp"

namespace straightknot {

enum ExitCode : int { kOk = 0, kUsage = 1, kParseError = 2, kNotRealizable = 3, kResourceBudget = 4, kInternal = 5 };

struct Response {
  int exit_code = kOk;
  nlohmann::json body;
};

namespace detail {

inline Response error_response(int code, const std::string& kind, const std::string& message, const nlohmann::json& extra = {}) {
  nlohmann::json err{{"kind", kind}, {"message", message}};
  if (extra.is_object())
    for (const auto& [k, v] : extra.items()) err[k] = v;
  return {code, {{"ok", false}, {"error", err}}};
}

inline std::string string_field(const nlohmann::json& req, const char* key) {
  const auto it = req.find(key);
  if (it == req.end()) throw std::invalid_argument(std::string("missing field '") + key + "'");
  if (!it->is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  return it->get<std::string>();
}

inline bool bool_field(const nlohmann::json& req, const char* key) {
  const auto it = req.find(key);
  if (it == req.end() || it->is_null()) return false;
  if (!it->is_boolean()) throw std::invalid_argument(std::string("field '") + key + "' must be a boolean");
  return it->get<bool>();
}

// Signed word from "word" alone, or from "word" plus a "signs" string of
// '+' (over) and '-' (under).
inline SignedStraightWord signed_word_field(const nlohmann::json& req) {
  const auto text = string_field(req, "word");
  const auto it = req.find("signs");
  if (it == req.end() || it->is_null()) return parse_signed_word(text);
  if (!it->is_string()) throw std::invalid_argument("field 'signs' must be a string");
  const auto word = parse_straight_word(text);
  const auto signs = it->get<std::string>();
  std::vector<Sign> s;
  for (std::size_t k = 0; k < signs.size(); ++k) {
    if (signs[k] != '+' && signs[k] != '-') throw ParseError("signs must be '+' or '-'", k);
    s.push_back(signs[k] == '+' ? Sign::Over : Sign::Under);
  }
  if (static_cast<int>(s.size()) != word.size())
    throw ParseError("expected " + std::to_string(word.size()) + " signs, got " + std::to_string(s.size()), signs.size());
  return {word, std::move(s)};
}

inline nlohmann::json check_body(const StraightWord& w, bool contained_only) {
  const auto full = contained_check(semicircles(w), CheckMode::Full);
  nlohmann::json out{{"word", format_word(w)},
                     {"orbit_canonical", format_word(canonicalize(w))},
                     {"contained", full.contained},
                     {"evaluations", full.evaluations}};
  if (full.first_conflict) {
    const auto& [p, q] = *full.first_conflict;
    out["first_conflict"] = {{p.a, p.b}, {q.a, q.b}};
  }
  if (contained_only) {
    out["realizable"] = full.contained;
    if (full.contained) out["augmentation"] = format_word(w);
    return out;
  }
  const auto aug = is_realizable(w);
  out["realizable"] = aug.has_value();
  if (aug) {
    out["augmentation"] = format_word(*aug);
    out["uncontained_arcs"] = aug->marker_count();
  }
  return out;
}

inline StraightDiagram diagram_for(const SignedStraightWord& w, bool contained_only) {
  if (contained_only) {
    if (!is_contained_realizable(w.word))
      throw NotRealizableError("word " + format_word(w.word) + " has no contained realization");
    return layout(w, AugmentedWord::plain(w.word));
  }
  return layout(w);
}

}  // namespace detail

/// Runs one request. Never throws; failures come back as error envelopes.
inline Response handle_request(const nlohmann::json& req, const ReferenceTable& table) {
  const auto start = std::chrono::steady_clock::now();
  Response r;
  try {
    if (!req.is_object()) throw std::invalid_argument("request must be a JSON object");
    const auto command = detail::string_field(req, "command");
    const bool contained_only = detail::bool_field(req, "contained");
    nlohmann::json result;
    std::string echo;
    if (command == "check") {
      const auto w = parse_straight_word(detail::string_field(req, "word"));
      echo = format_word(w);
      result = detail::check_body(w, contained_only);
    } else if (command == "draw") {
      const auto w = detail::signed_word_field(req);
      echo = format_word(w);
      const auto d = detail::diagram_for(w, contained_only);
      result = {{"svg", render_svg(d)},
                {"augmentation", format_word(d.augmentation())},
                {"semicircles", d.semicircles().size()},
                {"contained_arcs", d.contained_arcs()},
                {"uncontained_arcs", d.uncontained_arcs()}};
    } else if (command == "identify") {
      const auto w = detail::signed_word_field(req);
      echo = format_word(w);
      const auto d = detail::diagram_for(w, contained_only);
      const auto id = identify(d, table);
      result = {{"knot", id.label()},
                {"candidates", id.candidates},
                {"augmentation", format_word(d.augmentation())},
                {"jones", to_string(id.fingerprint.jones)},
                {"alexander", to_string(id.fingerprint.alexander)}};
    } else {
      throw std::invalid_argument("unknown command '" + command + "'");
    }
    r.body = {{"ok", true}, {"command", command}, {"word", echo}, {"result", result}};
  } catch (const ParseError& e) {
    r = detail::error_response(kParseError, "parse", e.what(), {{"position", e.position()}});
  } catch (const NotRealizableError& e) {
    r = detail::error_response(kNotRealizable, "not_realizable", e.what());
  } catch (const ResourceError& e) {
    r = detail::error_response(kResourceBudget, "resource", e.what());
  } catch (const InvariantViolation& e) {
    r = detail::error_response(kInternal, "internal", e.what());
  } catch (const std::invalid_argument& e) {
    r = detail::error_response(kParseError, "bad_request", e.what());
  } catch (const std::exception& e) {
    r = detail::error_response(kInternal, "internal", e.what());
  }
  if (req.is_object() && req.contains("command") && !r.body.contains("command")) r.body["command"] = req["command"];
  r.body["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// The response with its timing removed, for comparing answers.
inline nlohmann::json without_timing(nlohmann::json body) {
  body.erase("timing_ms");
  return body;
}

}  // namespace straightknot
