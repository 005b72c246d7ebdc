#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <vector>

#include "server.hpp"
#include "straightknot/commands.hpp"

using namespace straightknot;
using nlohmann::json;

namespace {

json request(const std::string& command, const std::string& word, json extra = json::object()) {
  extra["command"] = command;
  extra["word"] = word;
  return extra;
}

// Local service on an ephemeral loopback port for the lifetime of a test.
class Service {
 public:
  Service() {
    tools::install_routes(server_, default_table());
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~Service() {
    server_.stop();
    thread_.join();
  }
  int port() const { return port_; }

 private:
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string(STRAIGHTKNOT_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  while (const auto n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

const std::vector<json>& sample_requests() {
  static const std::vector<json> reqs = {
      request("check", "(2,1,4,3)"),
      request("check", "(1,3,2,4)"),
      request("check", "(2,1,4,3)", {{"contained", true}}),
      request("draw", "(-1,2,-3)"),
      request("draw", "(2,-1,4,-3)"),
      request("identify", "(-1,2,-3)"),
      request("identify", "(2,1,4,3)", {{"signs", "+-+-"}}),
      request("identify", "(1,2,3,4,5)", {{"signs", "-+-+-"}}),
      request("identify", "(1,2,2)"),
      request("identify", "(1,3,2,4)"),
  };
  return reqs;
}

}  // namespace

TEST(Handler, CheckReportsAugmentation) {
  const auto r = handle_request(request("check", "( 2, 1, 4, 3 )"), default_table());
  ASSERT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.body["word"], "(2,1,4,3)");
  const auto& res = r.body["result"];
  EXPECT_FALSE(res["contained"].get<bool>());
  EXPECT_TRUE(res["realizable"].get<bool>());
  EXPECT_EQ(res["augmentation"], "(2,1,-1,4,3)");
  EXPECT_EQ(res["evaluations"], 4);
  EXPECT_EQ(res["first_conflict"], json::parse("[[5,2],[1,4]]"));
}

TEST(Handler, ContainedOnlyCheck) {
  const auto r = handle_request(request("check", "(2,1,4,3)", {{"contained", true}}), default_table());
  ASSERT_EQ(r.exit_code, kOk);
  EXPECT_FALSE(r.body["result"]["realizable"].get<bool>());
  EXPECT_FALSE(r.body["result"].contains("augmentation"));
}

TEST(Handler, Identify) {
  const auto r = handle_request(request("identify", "(2,-1,4,-3)"), default_table());
  ASSERT_EQ(r.exit_code, kOk);
  EXPECT_EQ(r.body["result"]["knot"], "4_1");
  EXPECT_EQ(r.body["result"]["augmentation"], "(2,1,-1,4,3)");
  const auto unknot = handle_request(request("identify", "(1)"), default_table());
  EXPECT_EQ(unknot.body["result"]["knot"], "0_1");
}

TEST(Handler, SignsField) {
  const auto a = handle_request(request("identify", "(2,1,4,3)", {{"signs", "+-+-"}}), default_table());
  const auto b = handle_request(request("identify", "(2,-1,4,-3)"), default_table());
  EXPECT_EQ(without_timing(a.body), without_timing(b.body));
  const auto bad = handle_request(request("identify", "(2,1,4,3)", {{"signs", "+-+"}}), default_table());
  EXPECT_EQ(bad.exit_code, kParseError);
}

TEST(Handler, Errors) {
  const auto parse = handle_request(request("check", "(1,2,2)"), default_table());
  EXPECT_EQ(parse.exit_code, kParseError);
  EXPECT_FALSE(parse.body["ok"].get<bool>());
  EXPECT_EQ(parse.body["error"]["kind"], "parse");
  EXPECT_TRUE(parse.body["error"].contains("position"));

  const auto virt = handle_request(request("draw", "(1,3,2,4)"), default_table());
  EXPECT_EQ(virt.exit_code, kNotRealizable);
  EXPECT_EQ(virt.body["error"]["kind"], "not_realizable");

  const auto contained = handle_request(request("draw", "(2,1,4,3)", {{"contained", true}}), default_table());
  EXPECT_EQ(contained.exit_code, kNotRealizable);

  EXPECT_EQ(handle_request(json::array(), default_table()).exit_code, kParseError);
  EXPECT_EQ(handle_request(json{{"word", "(1)"}}, default_table()).exit_code, kParseError);
  EXPECT_EQ(handle_request(request("explode", "(1)"), default_table()).exit_code, kParseError);
  EXPECT_EQ(handle_request(request("check", "(1)", {{"contained", "yes"}}), default_table()).exit_code, kParseError);
}

TEST(Handler, EveryResponseHasTiming) {
  for (const auto& q : sample_requests()) EXPECT_TRUE(handle_request(q, default_table()).body.contains("timing_ms"));
}

TEST(Service, MatchesHandler) {
  Service svc;
  httplib::Client cli("127.0.0.1", svc.port());
  for (const auto& q : sample_requests()) {
    const auto expected = handle_request(q, default_table());
    auto body = q;
    const auto command = body["command"].get<std::string>();
    body.erase("command");
    const auto res = cli.Post("/" + command, body.dump(), "application/json");
    ASSERT_TRUE(res) << q.dump();
    EXPECT_EQ(res->status, tools::http_status(expected.exit_code)) << q.dump();
    EXPECT_EQ(without_timing(json::parse(res->body)), without_timing(expected.body)) << q.dump();

    const auto full = cli.Post("/", q.dump(), "application/json");
    ASSERT_TRUE(full);
    EXPECT_EQ(without_timing(json::parse(full->body)), without_timing(expected.body));
  }
}

TEST(Service, StatusMapping) {
  Service svc;
  httplib::Client cli("127.0.0.1", svc.port());
  EXPECT_EQ(cli.Post("/check", R"j({"word":"(2,1,4,3)"})j", "application/json")->status, 200);
  EXPECT_EQ(cli.Post("/check", R"j({"word":"(1,1)"})j", "application/json")->status, 400);
  EXPECT_EQ(cli.Post("/draw", R"j({"word":"(1,3,2,4)"})j", "application/json")->status, 422);
  const auto health = cli.Get("/health");
  ASSERT_TRUE(health);
  EXPECT_EQ(health->status, 200);
}

TEST(Service, MalformedEnvelope) {
  Service svc;
  httplib::Client cli("127.0.0.1", svc.port());
  const auto res = cli.Post("/identify", "{\"word\": ", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  const auto body = json::parse(res->body);
  EXPECT_FALSE(body["ok"].get<bool>());
  EXPECT_EQ(body["error"]["kind"], "malformed_envelope");
}

TEST(Service, ConcurrentClientsGetSequentialAnswers) {
  Service svc;
  std::vector<json> expected;
  for (const auto& q : sample_requests()) expected.push_back(without_timing(handle_request(q, default_table()).body));
  std::vector<std::future<int>> clients;
  for (int c = 0; c < 8; ++c)
    clients.push_back(std::async(std::launch::async, [&, c] {
      httplib::Client cli("127.0.0.1", svc.port());
      int mismatches = 0;
      for (int round = 0; round < 5; ++round)
        for (std::size_t i = 0; i < expected.size(); ++i) {
          const auto& q = sample_requests()[(i + static_cast<std::size_t>(c)) % expected.size()];
          const auto res = cli.Post("/", q.dump(), "application/json");
          if (!res || without_timing(json::parse(res->body)) != expected[(i + static_cast<std::size_t>(c)) % expected.size()])
            ++mismatches;
        }
      return mismatches;
    }));
  for (auto& f : clients) EXPECT_EQ(f.get(), 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("check '(2,1,4,3)'").status, 0);
  EXPECT_EQ(run_cli("check '(1,2,2)'").status, 2);
  EXPECT_EQ(run_cli("draw '(1,3,2,4)'").status, 3);
  EXPECT_EQ(run_cli("identify").status, 1);
  EXPECT_EQ(run_cli("frobnicate").status, 1);
  EXPECT_EQ(run_cli("table 13").status, 1);
}

TEST(Cli, IdentifyOutput) {
  const auto r = run_cli("identify '(2,-1,4,-3)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "4_1\n");
  const auto j = run_cli("--json identify '(-1,2,-3)'");
  EXPECT_EQ(json::parse(j.out)["result"]["knot"], "3_1");
}

TEST(Cli, CheckReportsVirtualWords) {
  const auto r = run_cli("check '(1,3,2,4)'");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("realizable: no"), std::string::npos);
}
