#include "stancelab/corpus/ingest.hpp"

#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "stancelab/core/io.hpp"
#include "stancelab/core/log.hpp"
#include "stancelab/core/strings.hpp"

namespace stancelab::corpus {

using nlohmann::json;

namespace {

std::string excerpt(const std::string& body, size_t limit = 120) {
  if (body.size() <= limit) return body;
  return body.substr(0, limit) + "...";
}

// splits "http://host:port/some/path" into origin and path prefix
std::pair<std::string, std::string> split_url(const std::string& url) {
  size_t scheme = url.find("://");
  if (scheme == std::string::npos)
    throw Error(ErrorKind::config, "endpoint URL missing scheme: " + url);
  size_t path = url.find('/', scheme + 3);
  if (path == std::string::npos) return {url, ""};
  return {url.substr(0, path), url.substr(path)};
}

class RateLimiter {
 public:
  explicit RateLimiter(int min_interval_ms) : interval_(min_interval_ms) {}
  void acquire() {
    if (interval_.count() <= 0) return;
    std::unique_lock<std::mutex> lock(mutex_);
    auto now = std::chrono::steady_clock::now();
    if (now < next_) {
      auto wait = next_ - now;
      next_ += interval_;
      lock.unlock();
      std::this_thread::sleep_for(wait);
    } else {
      next_ = now + interval_;
    }
  }

 private:
  std::mutex mutex_;
  std::chrono::milliseconds interval_;
  std::chrono::steady_clock::time_point next_ = std::chrono::steady_clock::now();
};

struct HttpResult {
  int status = 0;
  std::string body;
};

// GET with bounded exponential backoff on connection failures and 429s.
HttpResult http_get(const ApiConfig& config, const std::string& url, RateLimiter& limiter) {
  auto [origin, path] = split_url(url);
  httplib::Client client(origin);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  httplib::Headers headers;
  if (!config.auth_token.empty())
    headers.emplace("Authorization", "Bearer " + config.auth_token);

  int backoff_ms = config.backoff_initial_ms;
  for (int attempt = 0; attempt <= config.retry_budget; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
      backoff_ms *= 2;
    }
    limiter.acquire();
    auto res = client.Get(path, headers);
    if (!res) {
      if (attempt == config.retry_budget)
        throw Error(ErrorKind::network, "unreachable endpoint " + origin + " (" +
                                            httplib::to_string(res.error()) + ")",
                    /*retryable=*/true);
      continue;
    }
    if (res->status == 429) {
      if (attempt == config.retry_budget)
        throw Error(ErrorKind::rate_limit,
                    "rate limited by " + origin + " after " +
                        std::to_string(config.retry_budget + 1) + " attempts",
                    /*retryable=*/true);
      continue;
    }
    return {res->status, res->body};
  }
  throw Error(ErrorKind::network, "unreachable endpoint " + origin, true);
}

Market parse_market(const std::string& id, const std::string& body,
                    std::optional<Domain> config_domain) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse,
                "malformed market body for '" + id + "': " + e.what() + " in \"" +
                    excerpt(body) + "\"");
  }
  if (!j.is_object() || !j.contains("question") || !j["question"].is_string() ||
      j["question"].get<std::string>().empty())
    throw Error(ErrorKind::parse,
                "market '" + id + "' missing question in \"" + excerpt(body) + "\"");
  Market m;
  m.market_id = j.value("id", id);
  m.question = j["question"].get<std::string>();
  if (config_domain) {
    m.domain = *config_domain;
  } else if (j.contains("domain")) {
    m.domain = domain_from_string(j["domain"].get<std::string>());
  } else {
    throw Error(ErrorKind::config, "no domain configured for market '" + id + "'");
  }
  return m;
}

std::vector<Comment> parse_comments(const std::string& market_id, const json& arr) {
  if (!arr.is_array())
    throw Error(ErrorKind::parse, "comments body for '" + market_id + "' is not an array");
  std::vector<Comment> out;
  for (const auto& j : arr) {
    Comment c;
    c.comment_id = j.at("id").get<std::string>();
    c.market_id = j.value("market_id", market_id);
    c.text = j.at("text").get<std::string>();
    if (j.contains("timestamp") && j["timestamp"].is_string())
      c.timestamp = j["timestamp"].get<std::string>();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Market> ingest_markets(const std::vector<MarketRequest>& requests,
                                   const ApiConfig& config, IngestReport* report) {
  IngestReport local;
  IngestReport& rep = report ? *report : local;

  std::vector<std::optional<Market>> slots(requests.size());
  std::mutex rep_mutex;
  RateLimiter limiter(config.min_request_interval_ms);

  auto fetch_one = [&](size_t i) {
    const MarketRequest& req = requests[i];
    try {
      std::string body;
      if (!config.fixtures_dir.empty()) {
        auto path = config.fixtures_dir / "markets" / (req.market_id + ".json");
        if (!std::filesystem::exists(path))
          throw Error(ErrorKind::lookup, "unknown market id '" + req.market_id + "'");
        body = read_file(path);
      } else {
        if (config.markets_endpoint.empty())
          throw Error(ErrorKind::config, "no markets endpoint or fixtures directory configured");
        auto res = http_get(config, config.markets_endpoint + "/" + req.market_id, limiter);
        if (res.status == 404)
          throw Error(ErrorKind::lookup, "unknown market id '" + req.market_id + "'");
        if (res.status != 200)
          throw Error(ErrorKind::network, "status " + std::to_string(res.status) +
                                              " for market '" + req.market_id + "'");
        body = res.body;
      }
      slots[i] = parse_market(req.market_id, body, req.domain);
    } catch (const Error& e) {
      std::lock_guard<std::mutex> lock(rep_mutex);
      rep.issues.push_back({req.market_id, e.kind(), e.what()});
    }
  };

  const int workers =
      std::max(1, std::min<int>(config.parallelism, static_cast<int>(requests.size())));
  if (workers <= 1 || requests.size() <= 1) {
    for (size_t i = 0; i < requests.size(); ++i) fetch_one(i);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < requests.size(); i = next.fetch_add(1))
          fetch_one(i);
      });
    }
    for (auto& t : pool) t.join();
  }

  std::vector<Market> out;
  for (auto& slot : slots)
    if (slot) out.push_back(std::move(*slot));
  for (const auto& issue : rep.issues)
    log_warn("ingest_markets: " + issue.id + ": " + issue.message);
  return out;
}

std::vector<Comment> ingest_comments(const std::string& market_id, const ApiConfig& config,
                                     IngestReport* report) {
  IngestReport local;
  IngestReport& rep = report ? *report : local;
  RateLimiter limiter(config.min_request_interval_ms);

  std::vector<Comment> raw;
  if (!config.fixtures_dir.empty()) {
    auto path = config.fixtures_dir / "comments" / (market_id + ".json");
    if (!std::filesystem::exists(path))
      throw Error(ErrorKind::lookup, "unknown market id '" + market_id + "'");
    json arr;
    try {
      arr = json::parse(read_file(path));
    } catch (const json::exception& e) {
      throw Error(ErrorKind::parse, "malformed comments fixture for '" + market_id +
                                        "': " + e.what());
    }
    raw = parse_comments(market_id, arr);
  } else {
    if (config.comments_endpoint.empty())
      throw Error(ErrorKind::config, "no comments endpoint or fixtures directory configured");
    int offset = 0;
    while (true) {
      auto url = config.comments_endpoint + "?market_id=" + market_id +
                 "&offset=" + std::to_string(offset) +
                 "&limit=" + std::to_string(config.page_size);
      auto res = http_get(config, url, limiter);
      if (res.status == 404)
        throw Error(ErrorKind::lookup, "unknown market id '" + market_id + "'");
      if (res.status != 200)
        throw Error(ErrorKind::network,
                    "status " + std::to_string(res.status) + " for comments of '" +
                        market_id + "'");
      json arr;
      try {
        arr = json::parse(res.body);
      } catch (const json::exception& e) {
        throw Error(ErrorKind::parse, "malformed comments body for '" + market_id + "': " +
                                          e.what() + " in \"" + excerpt(res.body) + "\"");
      }
      auto page = parse_comments(market_id, arr);
      raw.insert(raw.end(), page.begin(), page.end());
      if (static_cast<int>(page.size()) < config.page_size) break;
      offset += config.page_size;
    }
  }

  std::vector<Comment> out;
  std::set<std::string> seen;
  int dropped = 0, deduped = 0;
  for (auto& c : raw) {
    if (is_blank(c.text)) {
      ++dropped;
      continue;
    }
    if (!seen.insert(c.comment_id).second) {
      ++deduped;
      continue;
    }
    out.push_back(std::move(c));
  }
  rep.dropped_blank += dropped;
  rep.deduplicated += deduped;
  if (dropped > 0)
    log_info("ingest_comments(" + market_id + "): dropped " + std::to_string(dropped) +
             " blank comments");
  if (deduped > 0)
    log_info("ingest_comments(" + market_id + "): removed " + std::to_string(deduped) +
             " duplicate ids");
  return out;
}

}  // namespace stancelab::corpus
