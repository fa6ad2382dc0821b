#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stancelab::corpus {

enum class Domain { politics, sports, finance };
enum class StanceLabel { Pro, Anti, Neutral };
enum class Provenance { real, synthetic };
enum class Split { train, val, test, unassigned };
enum class Scheme { two_class, three_class };

const char* to_string(Domain d);
const char* to_string(StanceLabel l);
const char* to_string(Provenance p);
const char* to_string(Split s);
const char* to_string(Scheme s);

Domain domain_from_string(const std::string& s);
StanceLabel label_from_string(const std::string& s);
Provenance provenance_from_string(const std::string& s);
Split split_from_string(const std::string& s);
Scheme scheme_from_string(const std::string& s);

// The scheme's classes in canonical report order.
std::vector<StanceLabel> scheme_classes(Scheme scheme);
int num_classes(Scheme scheme);
// Index of a label within the scheme's class list; throws on Neutral in
// two_class.
int class_index(Scheme scheme, StanceLabel label);

struct Market {
  std::string market_id;
  std::string question;
  Domain domain = Domain::politics;

  bool operator==(const Market&) const = default;
};

struct Comment {
  std::string comment_id;
  std::string market_id;
  std::string text;
  std::optional<std::string> timestamp;  // ISO-8601 UTC

  bool operator==(const Comment&) const = default;
};

struct LabeledExample {
  Comment comment;
  StanceLabel label = StanceLabel::Neutral;
  Provenance provenance = Provenance::real;
  Split split = Split::unassigned;

  bool operator==(const LabeledExample&) const = default;
};

struct DatasetBundle {
  std::vector<LabeledExample> examples;
  Scheme scheme = Scheme::three_class;
  std::vector<Market> markets;

  const Market& market_for(const std::string& market_id) const;
  bool has_market(const std::string& market_id) const;
  // Throws on invariant violations (neutral under two_class, dangling market
  // refs, synthetic outside Anti/train).
  void validate() const;

  bool operator==(const DatasetBundle&) const = default;
};

struct Distribution {
  std::map<StanceLabel, long> counts;
  std::map<StanceLabel, double> percent;
  long total = 0;
};

}  // namespace stancelab::corpus
