#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "stancelab/core/error.hpp"
#include "stancelab/corpus/types.hpp"

namespace stancelab::corpus {

// Source configuration for ingestion. When fixtures_dir is set, the
// filesystem replaces the HTTP endpoints:
//   <fixtures_dir>/markets/<id>.json     one market object
//   <fixtures_dir>/comments/<id>.json    array of comment objects
struct ApiConfig {
  std::string markets_endpoint;   // GET <endpoint>/<id> -> market object
  std::string comments_endpoint;  // GET <endpoint>?market_id=..&offset=..&limit=..
  std::string auth_token;         // optional bearer token
  std::filesystem::path fixtures_dir;
  int page_size = 100;
  int retry_budget = 3;
  int backoff_initial_ms = 100;
  int parallelism = 2;
  int min_request_interval_ms = 0;
};

struct MarketRequest {
  std::string market_id;
  std::optional<Domain> domain;  // config-supplied; falls back to the payload
};

struct IngestIssue {
  std::string id;
  ErrorKind kind;
  std::string message;
};

struct IngestReport {
  std::vector<IngestIssue> issues;
  int dropped_blank = 0;
  int deduplicated = 0;
};

// One Market per request id that resolves cleanly; per-id failures are
// recorded in the report and the remaining ids proceed. Unreachable endpoint
// throws a retryable network error.
std::vector<Market> ingest_markets(const std::vector<MarketRequest>& requests,
                                   const ApiConfig& config, IngestReport* report = nullptr);

// Comments for one market, deduplicated by comment_id, blank texts dropped
// (count logged and reported). Rate limiting gets bounded exponential backoff
// before surfacing as a retryable error.
std::vector<Comment> ingest_comments(const std::string& market_id, const ApiConfig& config,
                                     IngestReport* report = nullptr);

}  // namespace stancelab::corpus
