#include "stancelab/corpus/demo.hpp"

#include <array>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <nlohmann/json.hpp>

#include "stancelab/core/io.hpp"
#include "stancelab/core/rng.hpp"

namespace stancelab::corpus::demo {

using nlohmann::json;

namespace {

const std::array<const char*, 3> kZeroAntiMarkets = {"m_fed", "m_dvp", "m_iran"};

const std::vector<std::string>& templates(StanceLabel label) {
  static const std::vector<std::string> pro = {
      "bullish af easy money here",
      "free money imo buying more",
      "this is happening lock it in",
      "up only from here moon time",
      "easy win bros loading up",
      "trump takes ohio easy money",
      "bullish the chiefs cover this",
      "bitcoin ripping higher buying the dip",
      "moon incoming printed already imo",
      "locked in free money bros",
  };
  static const std::vector<std::string> anti = {
      "nah this is cooked no shot",
      "fading this hard bad odds",
      "doubt it big time rip",
      "dead wrong crowd fading now",
      "bearish on this one fading",
      "no shot the lakers survive",
      "nah bears eat this alive",
      "cooked market rip the holders",
  };
  static const std::vector<std::string> neutral = {
      "when does this market resolve exactly",
      "what are the resolution rules here",
      "volume looking thin today anyone watching",
      "anyone got the latest poll numbers",
      "mods is the oracle source official",
      "what time do results come in",
      "rules say which source settles this",
  };
  switch (label) {
    case StanceLabel::Pro: return pro;
    case StanceLabel::Anti: return anti;
    case StanceLabel::Neutral: return neutral;
  }
  return neutral;
}

const std::vector<std::string>& fillers() {
  static const std::vector<std::string> f = {"", "fr", "ngl", "tbh", "rn", "today", "lol"};
  return f;
}

}  // namespace

const std::vector<std::string>& signal_words(StanceLabel label) {
  static const std::vector<std::string> pro = {"bullish", "money",  "happening", "moon",
                                               "easy",    "buying", "locked",    "win"};
  static const std::vector<std::string> anti = {"nah",  "cooked", "fading", "doubt",
                                                "rip",  "dead",   "bearish", "bears"};
  static const std::vector<std::string> neutral = {"when",  "what",  "rules", "volume",
                                                   "poll",  "mods",  "resolve", "source"};
  switch (label) {
    case StanceLabel::Pro: return pro;
    case StanceLabel::Anti: return anti;
    case StanceLabel::Neutral: return neutral;
  }
  return neutral;
}

std::vector<Market> demo_markets() {
  return {
      {"m_pres24", "Presidential Election Winner 2024?", Domain::politics},
      {"m_korea", "Next president of South Korea?", Domain::politics},
      {"m_dvp", "Democratic VP nominee announced by August?", Domain::politics},
      {"m_iran", "US Strikes on Iran by June 30?", Domain::politics},
      {"m_shutdown", "Government shutdown before October?", Domain::politics},
      {"m_chiefs", "Will the Chiefs win the Super Bowl?", Domain::sports},
      {"m_epl", "Premier League winner this season?", Domain::sports},
      {"m_lakers", "Will the Lakers make the playoffs?", Domain::sports},
      {"m_ufc", "Heavyweight title unified by December?", Domain::sports},
      {"m_series", "World Series winner 2025?", Domain::sports},
      {"m_fed", "Fed decision in December?", Domain::finance},
      {"m_btc", "Bitcoin above 100k by March 31?", Domain::finance},
  };
}

DatasetBundle make_demo_bundle(const DemoSpec& spec) {
  // class counts by largest remainder of the published proportions
  const double fractions[3] = {628.0 / 2229.0, 194.0 / 2229.0, 1407.0 / 2229.0};
  const StanceLabel labels[3] = {StanceLabel::Pro, StanceLabel::Anti, StanceLabel::Neutral};
  long counts[3];
  long assigned = 0;
  double fracpart[3];
  for (int i = 0; i < 3; ++i) {
    double exact = fractions[i] * spec.total;
    counts[i] = static_cast<long>(std::floor(exact));
    fracpart[i] = exact - counts[i];
    assigned += counts[i];
  }
  while (assigned < spec.total) {
    int best = 0;
    for (int i = 1; i < 3; ++i)
      if (fracpart[i] > fracpart[best]) best = i;
    counts[best]++;
    fracpart[best] = -1;
    assigned++;
  }

  DatasetBundle bundle;
  bundle.scheme = Scheme::three_class;
  bundle.markets = demo_markets();

  Rng rng(derive_seed(spec.seed, "demo-corpus"));
  std::vector<std::string> allowed_all;
  std::vector<std::string> allowed_anti;
  for (const Market& m : bundle.markets) {
    allowed_all.push_back(m.market_id);
    bool zero = false;
    for (const char* z : kZeroAntiMarkets)
      if (m.market_id == z) zero = true;
    if (!(spec.zero_anti_markets && zero)) allowed_anti.push_back(m.market_id);
  }

  long serial = 0;
  for (int li = 0; li < 3; ++li) {
    const auto& tpl = templates(labels[li]);
    const auto& pool =
        labels[li] == StanceLabel::Anti ? allowed_anti : allowed_all;
    for (long n = 0; n < counts[li]; ++n) {
      LabeledExample ex;
      std::ostringstream id;
      id << "c" << std::setw(5) << std::setfill('0') << serial++;
      ex.comment.comment_id = id.str();
      ex.comment.market_id = pool[rng.uniform(pool.size())];
      std::string text = tpl[rng.uniform(tpl.size())];
      const std::string& filler = fillers()[rng.uniform(fillers().size())];
      if (!filler.empty()) text += " " + filler;
      ex.comment.text = text;
      if (rng.uniform(2) == 0) {
        std::ostringstream ts;
        ts << "2024-11-" << std::setw(2) << std::setfill('0') << (1 + rng.uniform(28))
           << "T" << std::setw(2) << std::setfill('0') << rng.uniform(24) << ":00:00Z";
        ex.comment.timestamp = ts.str();
      }
      ex.label = labels[li];
      ex.provenance = Provenance::real;
      ex.split = Split::unassigned;
      bundle.examples.push_back(std::move(ex));
    }
  }
  // interleave classes deterministically so stored order is not label-sorted
  Rng order_rng(derive_seed(spec.seed, "demo-order"));
  order_rng.shuffle(bundle.examples);
  return bundle;
}

std::string stub_flip_text(const std::string& source_id, const std::string& original) {
  static const std::vector<std::string> flips = {
      "nah this one is cooked fading it",
      "doubt that plays out rip the longs",
      "bearish here crowd has it dead wrong",
      "fading hard no shot it resolves",
      "dead odds selling the hype now",
      "nah bears take this no shot",
  };
  uint64_t h = fnv1a64(source_id.data(), source_id.size());
  if (h % 10 == 0) return original;  // deliberate echo, rejected downstream
  return flips[h % flips.size()];
}

void write_demo_fixtures(const std::filesystem::path& dir, const DemoSpec& spec) {
  namespace fs = std::filesystem;
  DatasetBundle bundle = make_demo_bundle(spec);

  json market_list = json::array();
  for (const Market& m : bundle.markets) {
    json j = {{"id", m.market_id}, {"question", m.question}, {"domain", to_string(m.domain)}};
    write_file(dir / "markets" / (m.market_id + ".json"), j.dump(2) + "\n");
    market_list.push_back({{"id", m.market_id}, {"domain", to_string(m.domain)}});
  }
  write_file(dir / "markets.json", market_list.dump(2) + "\n");

  std::map<std::string, json> comments;
  for (const Market& m : bundle.markets) comments[m.market_id] = json::array();
  std::ostringstream labels;
  json stub = json::object();
  for (const auto& ex : bundle.examples) {
    json j = {{"id", ex.comment.comment_id},
              {"market_id", ex.comment.market_id},
              {"text", ex.comment.text}};
    if (ex.comment.timestamp) j["timestamp"] = *ex.comment.timestamp;
    comments[ex.comment.market_id].push_back(j);
    labels << json{{"comment_id", ex.comment.comment_id}, {"label", to_string(ex.label)}}.dump()
           << "\n";
    if (ex.label == StanceLabel::Pro)
      stub[ex.comment.comment_id] = stub_flip_text(ex.comment.comment_id, ex.comment.text);
  }
  for (const auto& [market_id, arr] : comments)
    write_file(dir / "comments" / (market_id + ".json"), arr.dump(2) + "\n");
  write_file(dir / "labels.jsonl", labels.str());
  write_file(dir / "stub_generations.json", stub.dump(2) + "\n");
}

}  // namespace stancelab::corpus::demo
