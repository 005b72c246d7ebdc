// straightknot: realizability, drawing, identification and str/cstr tables
// for straight knot diagrams.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "server.hpp"
#include "straightknot/bounds.hpp"
#include "straightknot/commands.hpp"
#include "straightknot/search.hpp"

using namespace straightknot;
using nlohmann::json;

namespace {

const ReferenceTable& reference(const std::string& path) {
  if (path.empty()) return default_table();
  static const ReferenceTable table = [&] {
    auto t = ingest_table_file(path);
    for (const auto& e : t.errors()) std::cerr << path << ':' << e.line << ": " << e.message << '\n';
    return t;
  }();
  return table;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

int report_error(const Response& r, bool as_json) {
  if (as_json)
    std::cout << r.body.dump(2) << '\n';
  else
    std::cerr << "error: " << r.body["error"]["message"].get<std::string>() << '\n';
  return r.exit_code;
}

void print_check(const json& res) {
  std::cout << "word: " << res["word"].get<std::string>() << '\n'
            << "contained: " << yes_no(res["contained"].get<bool>()) << '\n';
  if (res.contains("first_conflict")) {
    const auto& c = res["first_conflict"];
    std::cout << "first intersecting pair: [" << c[0][0] << ',' << c[0][1] << "] [" << c[1][0] << ',' << c[1][1] << "]\n";
  }
  if (res["realizable"].get<bool>()) {
    std::cout << "realizable: yes\n"
              << "augmentation: " << res["augmentation"].get<std::string>() << '\n';
    if (res.contains("uncontained_arcs")) std::cout << "uncontained arcs: " << res["uncontained_arcs"] << '\n';
  } else {
    std::cout << "realizable: no (virtual)\n";
  }
  std::cout << "cross-ratio evaluations: " << res["evaluations"] << '\n';
}

void print_table(const KnotTable& t, const ReferenceTable& ref, bool as_json) {
  if (as_json) {
    json rows = json::array();
    for (const auto& rec : ref.records()) {
      const auto* e = t.find(rec.name);
      if (!e) continue;
      json row{{"name", e->name}, {"crossing_number", e->crossing_number}};
      row["str"] = e->str_upper ? json(*e->str_upper) : json(nullptr);
      row["str_certified"] = e->str_certified;
      row["cstr"] = e->cstr_upper ? json(*e->cstr_upper) : json(nullptr);
      row["cstr_certified"] = e->cstr_certified;
      if (e->str_witness) row["str_witness"] = to_json(*e->str_witness);
      if (e->cstr_witness) row["cstr_witness"] = to_json(*e->cstr_witness);
      rows.push_back(row);
    }
    for (const auto& [name, e] : t.entries)
      if (!ref.find(name)) rows.push_back({{"name", name}, {"ambiguous", true}});
    std::cout << json{{"completed_n", t.completed_n},
                      {"knots", rows},
                      {"stats",
                       {{"words", t.stats.words},
                        {"diagrams", t.stats.diagrams},
                        {"skipped_bigon", t.stats.skipped_bigon},
                        {"unknots", t.stats.unknots},
                        {"unidentified", t.stats.unidentified},
                        {"ambiguous", t.stats.ambiguous}}}}
                     .dump(2)
              << '\n';
    return;
  }
  auto cell = [](const std::optional<int>& v, bool certified) {
    if (!v) return std::string("-");
    return std::to_string(*v) + (certified ? "" : "?");
  };
  std::printf("%-10s %3s %5s %5s  %s\n", "knot", "c", "str", "cstr", "witness");
  auto witness = [](const SearchResult& r) {
    auto s = format_word(r.word);
    if (!r.contained) s += " via " + format_word(r.augmentation);
    return s;
  };
  auto row = [&](const TableEntry& e) {
    const auto& w = e.cstr_witness ? e.cstr_witness : e.str_witness;
    std::printf("%-10s %3s %5s %5s  %s\n", e.name.c_str(), e.crossing_number >= 0 ? std::to_string(e.crossing_number).c_str() : "?",
                cell(e.str_upper, e.str_certified).c_str(), cell(e.cstr_upper, e.cstr_certified).c_str(),
                w ? witness(*w).c_str() : "");
  };
  for (const auto& rec : ref.records())
    if (const auto* e = t.find(rec.name)) row(*e);
  for (const auto& [name, e] : t.entries)
    if (!ref.find(name)) row(e);
  std::printf("searched n <= %d: %llu words, %llu diagrams (%llu skipped as bigons), %llu unknot, %llu not in table\n",
              t.completed_n, static_cast<unsigned long long>(t.stats.words), static_cast<unsigned long long>(t.stats.diagrams),
              static_cast<unsigned long long>(t.stats.skipped_bigon), static_cast<unsigned long long>(t.stats.unknots),
              static_cast<unsigned long long>(t.stats.unidentified));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Straight knot diagrams: realizability, drawing, identification and straight-number tables"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  std::string table_path;
  app.add_flag("--json", as_json, "Print structured output");
  app.add_option("--reference", table_path, "Reference table file (default: bundled knots through 10 crossings)");

  std::string word, signs, out_path;
  bool contained = false;

  auto* check = app.add_subcommand("check", "Contained and general realizability of a straight word");
  check->add_option("word", word, "Straight word, e.g. \"(2,1,4,3)\"")->required();
  check->add_flag("--contained", contained, "Only accept contained realizations");

  auto* draw = app.add_subcommand("draw", "Draw a signed straight word as SVG");
  draw->add_option("word", word, "Signed word, e.g. \"(2,-1,4,-3)\"")->required();
  draw->add_option("--signs", signs, "Signs as '+'/'-' per position, with an unsigned word");
  draw->add_option("-o,--output", out_path, "Output file (default: stdout)");
  draw->add_flag("--contained", contained, "Require a contained realization");

  auto* ident = app.add_subcommand("identify", "Identify the knot of a signed straight word");
  ident->add_option("word", word, "Signed word, e.g. \"(-1,2,-3)\"")->required();
  ident->add_option("--signs", signs, "Signs as '+'/'-' per position, with an unsigned word");
  ident->add_flag("--contained", contained, "Require a contained realization");

  TableOptions topt;
  std::string results_path, checkpoint_path;
  bool no_prune = false;
  auto* table = app.add_subcommand("table", "Compute straight and contained straight numbers by exhaustive search");
  table->add_option("max_n", topt.max_n, "Largest crossing count to search")->required()->check(CLI::Range(3, kMaxSearchCrossings));
  table->add_option("--min-n", topt.min_n, "Smallest crossing count to search")->check(CLI::Range(3, kMaxSearchCrossings));
  table->add_flag("--contained", contained, "Contained words only (cstr)");
  table->add_option("--threads", topt.threads, "Worker threads (0: all cores)");
  table->add_option("--out", results_path, "Append first-appearance records to this file");
  table->add_option("--checkpoint", checkpoint_path, "Checkpoint file, 'n block-index'");
  table->add_flag("--resume", topt.resume, "Continue from --out and --checkpoint");
  table->add_flag("--no-prune", no_prune, "Disable orbit, first-entry and bigon pruning");

  std::string host = "127.0.0.1";
  int port = 8765;
  auto* serve = app.add_subcommand("serve", "Serve check/draw/identify over HTTP for the explorer");
  serve->add_option("--host", host, "Bind address (loopback by default)");
  serve->add_option("--port", port, "Port")->check(CLI::Range(1, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check || *draw || *ident) {
      json req{{"command", check->parsed() ? "check" : draw->parsed() ? "draw" : "identify"}, {"word", word}, {"contained", contained}};
      if (!signs.empty()) req["signs"] = signs;
      static const ReferenceTable no_table;
      const auto r = handle_request(req, ident->parsed() ? reference(table_path) : no_table);
      if (r.exit_code != kOk) return report_error(r, as_json);
      const auto& res = r.body["result"];
      if (draw->parsed() && !out_path.empty()) {
        std::ofstream f(out_path);
        f << res["svg"].get<std::string>();
        if (!f) {
          std::cerr << "error: cannot write " << out_path << '\n';
          return kInternal;
        }
      }
      if (as_json) {
        std::cout << r.body.dump(2) << '\n';
      } else if (check->parsed()) {
        print_check(res);
      } else if (draw->parsed()) {
        if (out_path.empty())
          std::cout << res["svg"].get<std::string>();
        else
          std::cout << "wrote " << out_path << ": " << res["semicircles"] << " arcs, " << res["uncontained_arcs"]
                    << " uncontained, augmentation " << res["augmentation"].get<std::string>() << '\n';
      } else {
        std::cout << res["knot"].get<std::string>() << '\n';
      }
      return kOk;
    }

    if (*table) {
      topt.mode = contained ? SearchMode::Contained : SearchMode::General;
      topt.prune = !no_prune;
      if (!results_path.empty()) topt.results_path = results_path;
      if (!checkpoint_path.empty()) topt.checkpoint_path = checkpoint_path;
      if (!as_json)
        topt.progress = [](int n, int b, int total) {
          if (b + 1 == total) std::cerr << "n = " << n << " done\n";
        };
      const auto& ref = reference(table_path);
      const auto t = compute_table(topt, ref);
      print_table(t, ref, as_json);
      return kOk;
    }

    if (*serve) {
      const auto& ref = reference(table_path);
      httplib::Server server;
      tools::install_routes(server, ref);
      if (host != "127.0.0.1" && host != "localhost" && host != "::1")
        std::cerr << "warning: binding to non-loopback address " << host << '\n';
      std::cerr << "listening on http://" << host << ':' << port << '\n';
      if (!server.listen(host, port)) {
        std::cerr << "error: cannot listen on " << host << ':' << port << '\n';
        return kInternal;
      }
      return kOk;
    }
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kResourceBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
