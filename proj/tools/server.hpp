#pragma once

// HTTP front end for the explorer. POST /check, /draw and /identify take the
// request envelope without "command"; POST / takes the full envelope.

#include <string>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "straightknot/commands.hpp"

namespace straightknot::tools {

inline int http_status(int exit_code) {
  switch (exit_code) {
    case kOk: return 200;
    case kParseError: return 400;
    case kNotRealizable: return 422;
    case kResourceBudget: return 503;
    default: return 500;
  }
}

inline void install_routes(httplib::Server& server, const ReferenceTable& table) {
  auto respond = [&table](const httplib::Request& req, httplib::Response& res, const std::string& command) {
    nlohmann::json envelope;
    try {
      envelope = nlohmann::json::parse(req.body);
    } catch (const nlohmann::json::parse_error& e) {
      const nlohmann::json body{{"ok", false}, {"error", {{"kind", "malformed_envelope"}, {"message", e.what()}}}};
      res.status = 400;
      res.set_content(body.dump(), "application/json");
      return;
    }
    if (!command.empty() && envelope.is_object()) envelope["command"] = command;
    const auto r = handle_request(envelope, table);
    res.status = http_status(r.exit_code);
    res.set_content(r.body.dump(), "application/json");
  };
  for (const std::string command : {"check", "draw", "identify"})
    server.Post("/" + command, [respond, command](const httplib::Request& q, httplib::Response& s) { respond(q, s, command); });
  server.Post("/", [respond](const httplib::Request& q, httplib::Response& s) { respond(q, s, ""); });
  server.Get("/health", [](const httplib::Request&, httplib::Response& s) { s.set_content(R"({"ok":true})", "application/json"); });
  // The explorer is served from another origin during development.
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}, {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& s) { s.status = 204; });
}

}  // namespace straightknot::tools
