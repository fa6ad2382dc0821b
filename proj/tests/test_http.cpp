#include <doctest.h>

#include <atomic>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "stancelab/corpus/ingest.hpp"

using namespace stancelab;
using namespace stancelab::corpus;
using nlohmann::json;

namespace {

// In-process HTTP server for exercising the real network code paths.
struct TestServer {
  httplib::Server server;
  std::thread thread;
  int port = 0;

  TestServer() = default;

  void start() {
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }

  ~TestServer() {
    server.stop();
    if (thread.joinable()) thread.join();
  }

  std::string origin() const { return "http://127.0.0.1:" + std::to_string(port); }
};

}  // namespace

TEST_SUITE("corpus-http") {

TEST_CASE("market ingestion over http with auth header") {
  TestServer ts;
  std::atomic<int> hits{0};
  std::string seen_auth;
  ts.server.Get(R"(/markets/(\w+))", [&](const httplib::Request& req, httplib::Response& res) {
    hits++;
    auto it = req.headers.find("Authorization");
    if (it != req.headers.end()) seen_auth = it->second;
    std::string id = req.matches[1];
    if (id == "gone") {
      res.status = 404;
      return;
    }
    res.set_content(json{{"id", id}, {"question", "Will " + id + " resolve?"}}.dump(),
                    "application/json");
  });
  ts.start();

  ApiConfig config;
  config.markets_endpoint = ts.origin() + "/markets";
  config.auth_token = "sekrit";
  config.parallelism = 2;

  IngestReport report;
  auto markets = ingest_markets({{"alpha", Domain::politics}, {"gone", Domain::sports},
                                 {"beta", Domain::finance}},
                                config, &report);
  CHECK(markets.size() == 2);
  CHECK(markets[0].market_id == "alpha");
  CHECK(markets[0].question == "Will alpha resolve?");
  CHECK(markets[1].domain == Domain::finance);
  REQUIRE(report.issues.size() == 1);
  CHECK(report.issues[0].id == "gone");
  CHECK(report.issues[0].kind == ErrorKind::lookup);
  CHECK(seen_auth == "Bearer sekrit");
  CHECK(hits >= 3);
}

TEST_CASE("comment pagination") {
  TestServer ts;
  const int total = 25;
  ts.server.Get("/comments", [&](const httplib::Request& req, httplib::Response& res) {
    int offset = std::stoi(req.get_param_value("offset"));
    int limit = std::stoi(req.get_param_value("limit"));
    json arr = json::array();
    for (int i = offset; i < std::min(offset + limit, total); ++i)
      arr.push_back({{"id", "c" + std::to_string(i)}, {"text", "comment " + std::to_string(i)}});
    res.set_content(arr.dump(), "application/json");
  });
  ts.start();

  ApiConfig config;
  config.comments_endpoint = ts.origin() + "/comments";
  config.page_size = 10;
  auto comments = ingest_comments("mkt", config);
  REQUIRE(comments.size() == total);
  CHECK(comments.front().comment_id == "c0");
  CHECK(comments.back().comment_id == "c24");
  CHECK(comments.back().market_id == "mkt");
}

TEST_CASE("rate limit gets backoff then succeeds") {
  TestServer ts;
  std::atomic<int> attempts{0};
  ts.server.Get("/comments", [&](const httplib::Request&, httplib::Response& res) {
    if (attempts.fetch_add(1) < 2) {
      res.status = 429;
      return;
    }
    res.set_content("[]", "application/json");
  });
  ts.start();

  ApiConfig config;
  config.comments_endpoint = ts.origin() + "/comments";
  config.retry_budget = 3;
  config.backoff_initial_ms = 5;
  auto comments = ingest_comments("m", config);
  CHECK(comments.empty());
  CHECK(attempts == 3);
}

TEST_CASE("rate limit exhausting budget raises retryable error") {
  TestServer ts;
  ts.server.Get("/comments", [&](const httplib::Request&, httplib::Response& res) {
    res.status = 429;
  });
  ts.start();

  ApiConfig config;
  config.comments_endpoint = ts.origin() + "/comments";
  config.retry_budget = 2;
  config.backoff_initial_ms = 5;
  try {
    (void)ingest_comments("m", config);
    FAIL("expected rate limit error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::rate_limit);
    CHECK(e.retryable());
  }
}

TEST_CASE("unreachable endpoint raises retryable network error") {
  ApiConfig config;
  config.markets_endpoint = "http://127.0.0.1:1/markets";  // nothing listens here
  config.retry_budget = 1;
  config.backoff_initial_ms = 1;
  IngestReport report;
  auto markets = ingest_markets({{"m1", Domain::politics}}, config, &report);
  CHECK(markets.empty());
  REQUIRE(report.issues.size() == 1);
  CHECK(report.issues[0].kind == ErrorKind::network);
}

TEST_CASE("malformed body is a parse error with excerpt") {
  TestServer ts;
  ts.server.Get(R"(/markets/(\w+))", [&](const httplib::Request&, httplib::Response& res) {
    res.set_content("this is { not json", "application/json");
  });
  ts.start();

  ApiConfig config;
  config.markets_endpoint = ts.origin() + "/markets";
  IngestReport report;
  auto markets = ingest_markets({{"m1", Domain::politics}}, config, &report);
  CHECK(markets.empty());
  REQUIRE(report.issues.size() == 1);
  CHECK(report.issues[0].kind == ErrorKind::parse);
  CHECK(report.issues[0].message.find("not json") != std::string::npos);
}

}  // TEST_SUITE
