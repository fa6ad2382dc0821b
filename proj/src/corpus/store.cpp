#include "stancelab/corpus/store.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "stancelab/core/error.hpp"
#include "stancelab/core/io.hpp"

namespace stancelab::corpus {

using nlohmann::json;

void save_dataset(const DatasetBundle& bundle, const std::filesystem::path& path) {
  std::ostringstream out;
  json header = {{"kind", "header"},
                 {"schema_version", kDatasetSchemaVersion},
                 {"scheme", to_string(bundle.scheme)}};
  out << header.dump() << "\n";
  for (const Market& m : bundle.markets) {
    json j = {{"kind", "market"},
              {"market_id", m.market_id},
              {"question", m.question},
              {"domain", to_string(m.domain)}};
    out << j.dump() << "\n";
  }
  for (const LabeledExample& ex : bundle.examples) {
    json j = {{"kind", "example"},
              {"comment_id", ex.comment.comment_id},
              {"market_id", ex.comment.market_id},
              {"text", ex.comment.text},
              {"label", to_string(ex.label)},
              {"provenance", to_string(ex.provenance)},
              {"split", to_string(ex.split)}};
    if (ex.comment.timestamp) j["timestamp"] = *ex.comment.timestamp;
    out << j.dump() << "\n";
  }
  write_file(path, out.str());
}

DatasetBundle load_dataset(const std::filesystem::path& path) {
  std::vector<std::string> lines = read_lines(path);
  if (lines.empty()) throw Error(ErrorKind::parse, "empty dataset file " + path.string());

  DatasetBundle bundle;
  bool seen_header = false;
  for (size_t lineno = 0; lineno < lines.size(); ++lineno) {
    const std::string& line = lines[lineno];
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::parse, "line " + std::to_string(lineno + 1) + " of " +
                                        path.string() + ": " + e.what());
    }
    const std::string kind = j.value("kind", "");
    if (kind == "header") {
      int version = j.value("schema_version", -1);
      if (version != kDatasetSchemaVersion)
        throw Error(ErrorKind::parse,
                    "unsupported schema version " + std::to_string(version));
      bundle.scheme = scheme_from_string(j.at("scheme").get<std::string>());
      seen_header = true;
    } else if (kind == "market") {
      Market m;
      m.market_id = j.at("market_id").get<std::string>();
      m.question = j.at("question").get<std::string>();
      m.domain = domain_from_string(j.at("domain").get<std::string>());
      bundle.markets.push_back(std::move(m));
    } else if (kind == "example") {
      LabeledExample ex;
      ex.comment.comment_id = j.at("comment_id").get<std::string>();
      ex.comment.market_id = j.at("market_id").get<std::string>();
      ex.comment.text = j.at("text").get<std::string>();
      if (j.contains("timestamp")) ex.comment.timestamp = j.at("timestamp").get<std::string>();
      ex.label = label_from_string(j.at("label").get<std::string>());
      ex.provenance = provenance_from_string(j.at("provenance").get<std::string>());
      ex.split = split_from_string(j.at("split").get<std::string>());
      bundle.examples.push_back(std::move(ex));
    } else {
      throw Error(ErrorKind::parse, "unknown record kind '" + kind + "' in " + path.string());
    }
  }
  if (!seen_header)
    throw Error(ErrorKind::parse, "dataset file missing schema header: " + path.string());
  bundle.validate();
  return bundle;
}

}  // namespace stancelab::corpus
