#include "stancelab/preprocess/ner.hpp"

#include <algorithm>
#include <cctype>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "stancelab/core/error.hpp"
#include "stancelab/core/io.hpp"
#include "stancelab/core/strings.hpp"

namespace stancelab::preprocess {

using nlohmann::json;

const char* to_string(EntityKind kind) {
  switch (kind) {
    case EntityKind::PERSON: return "PERSON";
    case EntityKind::ORG: return "ORG";
    case EntityKind::GPE: return "GPE";
    case EntityKind::NORP: return "NORP";
    case EntityKind::FAC: return "FAC";
    case EntityKind::EVENT: return "EVENT";
    case EntityKind::PRODUCT: return "PRODUCT";
  }
  return "?";
}

std::optional<EntityKind> entity_kind_from_string(const std::string& s) {
  if (s == "PERSON") return EntityKind::PERSON;
  if (s == "ORG") return EntityKind::ORG;
  if (s == "GPE") return EntityKind::GPE;
  if (s == "NORP") return EntityKind::NORP;
  if (s == "FAC") return EntityKind::FAC;
  if (s == "EVENT") return EntityKind::EVENT;
  if (s == "PRODUCT") return EntityKind::PRODUCT;
  return std::nullopt;
}

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '\'';
}

struct Word {
  size_t start;
  size_t end;
  std::string lower;
};

std::vector<Word> words_with_offsets(const std::string& text) {
  std::vector<Word> out;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && !is_word_char(text[i])) ++i;
    size_t b = i;
    while (i < text.size() && is_word_char(text[i])) ++i;
    if (i > b) out.push_back({b, i, to_lower(std::string_view(text).substr(b, i - b))});
  }
  return out;
}

const std::map<std::string, EntityKind>& builtin_lexicon() {
  static const std::map<std::string, EntityKind> lex = {
      {"trump", EntityKind::PERSON},        {"biden", EntityKind::PERSON},
      {"harris", EntityKind::PERSON},       {"yoo seong", EntityKind::PERSON},
      {"powell", EntityKind::PERSON},       {"lebron", EntityKind::PERSON},
      {"mahomes", EntityKind::PERSON},      {"putin", EntityKind::PERSON},
      {"fed", EntityKind::ORG},             {"nato", EntityKind::ORG},
      {"opec", EntityKind::ORG},            {"lakers", EntityKind::ORG},
      {"chiefs", EntityKind::ORG},          {"sec", EntityKind::ORG},
      {"ohio", EntityKind::GPE},            {"iran", EntityKind::GPE},
      {"uk", EntityKind::GPE},              {"south korea", EntityKind::GPE},
      {"china", EntityKind::GPE},           {"texas", EntityKind::GPE},
      {"georgia", EntityKind::GPE},         {"russia", EntityKind::GPE},
      {"kurds", EntityKind::NORP},          {"democrats", EntityKind::NORP},
      {"republicans", EntityKind::NORP},    {"russians", EntityKind::NORP},
      {"white house", EntityKind::FAC},     {"wall street", EntityKind::FAC},
      {"super bowl", EntityKind::EVENT},    {"world series", EntityKind::EVENT},
      {"world cup", EntityKind::EVENT},     {"election day", EntityKind::EVENT},
      {"bitcoin", EntityKind::PRODUCT},     {"ethereum", EntityKind::PRODUCT},
      {"iphone", EntityKind::PRODUCT},
  };
  return lex;
}

}  // namespace

DictionaryNer::DictionaryNer() : DictionaryNer(builtin_lexicon()) {}

DictionaryNer::DictionaryNer(const std::map<std::string, EntityKind>& lexicon) {
  for (const auto& [phrase, kind] : lexicon) add(phrase, kind);
}

DictionaryNer DictionaryNer::from_file(const std::filesystem::path& lexicon_json) {
  json j;
  try {
    j = json::parse(read_file(lexicon_json));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, "lexicon " + lexicon_json.string() + ": " + e.what());
  }
  std::map<std::string, EntityKind> lex;
  for (auto& [phrase, label] : j.items()) {
    auto kind = entity_kind_from_string(label.get<std::string>());
    if (!kind)
      throw Error(ErrorKind::parse,
                  "lexicon " + lexicon_json.string() + ": unknown kind for '" + phrase + "'");
    lex[phrase] = *kind;
  }
  return DictionaryNer(lex);
}

void DictionaryNer::add(const std::string& phrase, EntityKind kind) {
  auto words = split_whitespace(to_lower(phrase));
  if (words.empty()) return;
  auto& bucket = index_[words[0]];
  bucket.emplace_back(words, kind);
  std::stable_sort(bucket.begin(), bucket.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
}

std::vector<EntitySpan> DictionaryNer::recognize(const std::string& text) const {
  std::vector<EntitySpan> spans;
  auto words = words_with_offsets(text);
  size_t i = 0;
  while (i < words.size()) {
    auto it = index_.find(words[i].lower);
    bool matched = false;
    if (it != index_.end()) {
      for (const auto& [phrase, kind] : it->second) {
        if (i + phrase.size() > words.size()) continue;
        bool ok = true;
        for (size_t k = 0; k < phrase.size(); ++k)
          if (words[i + k].lower != phrase[k]) {
            ok = false;
            break;
          }
        if (ok) {
          spans.push_back({words[i].start, words[i + phrase.size() - 1].end, kind});
          i += phrase.size();
          matched = true;
          break;
        }
      }
    }
    if (!matched) ++i;
  }
  return spans;
}

std::vector<EntitySpan> HttpNer::recognize(const std::string& text) const {
  size_t scheme = endpoint_.find("://");
  if (scheme == std::string::npos)
    throw Error(ErrorKind::config, "NER endpoint missing scheme: " + endpoint_);
  size_t slash = endpoint_.find('/', scheme + 3);
  std::string origin = slash == std::string::npos ? endpoint_ : endpoint_.substr(0, slash);
  std::string path = slash == std::string::npos ? "/" : endpoint_.substr(slash);

  httplib::Client client(origin);
  client.set_connection_timeout(10);
  auto res = client.Post(path, json{{"text", text}}.dump(), "application/json");
  if (!res)
    throw Error(ErrorKind::config, "NER service unreachable at " + endpoint_ +
                                       " (masking cannot be skipped silently)");
  if (res->status != 200)
    throw Error(ErrorKind::config,
                "NER service returned status " + std::to_string(res->status));
  json arr;
  try {
    arr = json::parse(res->body);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::parse, std::string("malformed NER response: ") + e.what());
  }
  std::vector<EntitySpan> spans;
  for (const auto& j : arr) {
    auto kind = entity_kind_from_string(j.at("label").get<std::string>());
    if (!kind) continue;  // kinds outside the masked set are dropped here
    spans.push_back({j.at("start").get<size_t>(), j.at("end").get<size_t>(), *kind});
  }
  return spans;
}

std::vector<EntitySpan> recognize_entities(const std::string& text,
                                           const NerProvider& provider) {
  auto spans = provider.recognize(text);
  std::stable_sort(spans.begin(), spans.end(),
                   [](const EntitySpan& a, const EntitySpan& b) { return a.start < b.start; });
  for (size_t i = 0; i < spans.size(); ++i) {
    if (spans[i].start >= spans[i].end || spans[i].end > text.size())
      throw Error(ErrorKind::span, "recognizer produced out-of-range span");
    if (i > 0 && spans[i].start < spans[i - 1].end)
      throw Error(ErrorKind::span, "recognizer produced overlapping spans");
  }
  return spans;
}

}  // namespace stancelab::preprocess
