#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stancelab::preprocess {

// The seven entity kinds that get masked.
enum class EntityKind { PERSON, ORG, GPE, NORP, FAC, EVENT, PRODUCT };

const char* to_string(EntityKind kind);
std::optional<EntityKind> entity_kind_from_string(const std::string& s);

struct EntitySpan {
  size_t start = 0;  // character offset
  size_t end = 0;    // exclusive
  EntityKind kind = EntityKind::PERSON;

  bool operator==(const EntitySpan&) const = default;
};

// Recognizer interface. Implementations must be safe to call from multiple
// threads or document per-thread instantiation; both bundled implementations
// are internally synchronized (Dictionary is immutable after construction,
// Http opens a connection per call).
class NerProvider {
 public:
  virtual ~NerProvider() = default;
  virtual std::vector<EntitySpan> recognize(const std::string& text) const = 0;
};

// Deterministic gazetteer matcher: case-insensitive longest-phrase match on
// word boundaries. Good enough for offline runs and hermetic tests; swap in
// HttpNer backed by a pretrained model server for real corpora.
class DictionaryNer : public NerProvider {
 public:
  // built-in lexicon covering the bundled fixture corpus
  DictionaryNer();
  explicit DictionaryNer(const std::map<std::string, EntityKind>& lexicon);
  static DictionaryNer from_file(const std::filesystem::path& lexicon_json);

  std::vector<EntitySpan> recognize(const std::string& text) const override;

 private:
  void add(const std::string& phrase, EntityKind kind);
  // lowercased first word -> candidate phrases (as word lists), longest first
  std::map<std::string, std::vector<std::pair<std::vector<std::string>, EntityKind>>> index_;
};

// Remote recognizer speaking a simple JSON contract:
//   POST <endpoint>  {"text": "..."}  ->  [{"start":0,"end":5,"label":"PERSON"},...]
// Offsets are character offsets into the posted text. A spaCy model behind a
// small HTTP shim satisfies this contract.
class HttpNer : public NerProvider {
 public:
  explicit HttpNer(std::string endpoint) : endpoint_(std::move(endpoint)) {}
  std::vector<EntitySpan> recognize(const std::string& text) const override;

 private:
  std::string endpoint_;
};

// Runs the provider and enforces the span contract: only the seven kinds,
// sorted by start, non-overlapping, in-range.
std::vector<EntitySpan> recognize_entities(const std::string& text, const NerProvider& provider);

}  // namespace stancelab::preprocess
