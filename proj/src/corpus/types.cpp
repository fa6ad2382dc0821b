#include "stancelab/corpus/types.hpp"

#include <algorithm>

#include "stancelab/core/error.hpp"
#include "stancelab/core/strings.hpp"

namespace stancelab::corpus {

const char* to_string(Domain d) {
  switch (d) {
    case Domain::politics: return "politics";
    case Domain::sports: return "sports";
    case Domain::finance: return "finance";
  }
  return "?";
}

const char* to_string(StanceLabel l) {
  switch (l) {
    case StanceLabel::Pro: return "Pro";
    case StanceLabel::Anti: return "Anti";
    case StanceLabel::Neutral: return "Neutral";
  }
  return "?";
}

const char* to_string(Provenance p) {
  return p == Provenance::real ? "real" : "synthetic";
}

const char* to_string(Split s) {
  switch (s) {
    case Split::train: return "train";
    case Split::val: return "val";
    case Split::test: return "test";
    case Split::unassigned: return "unassigned";
  }
  return "?";
}

const char* to_string(Scheme s) {
  return s == Scheme::two_class ? "two_class" : "three_class";
}

Domain domain_from_string(const std::string& s) {
  if (s == "politics") return Domain::politics;
  if (s == "sports") return Domain::sports;
  if (s == "finance") return Domain::finance;
  throw Error(ErrorKind::parse, "unknown domain '" + s + "'");
}

StanceLabel label_from_string(const std::string& s) {
  if (s == "Pro") return StanceLabel::Pro;
  if (s == "Anti") return StanceLabel::Anti;
  if (s == "Neutral") return StanceLabel::Neutral;
  throw Error(ErrorKind::parse, "unknown stance label '" + s + "'");
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "real") return Provenance::real;
  if (s == "synthetic") return Provenance::synthetic;
  throw Error(ErrorKind::parse, "unknown provenance '" + s + "'");
}

Split split_from_string(const std::string& s) {
  if (s == "train") return Split::train;
  if (s == "val") return Split::val;
  if (s == "test") return Split::test;
  if (s == "unassigned") return Split::unassigned;
  throw Error(ErrorKind::parse, "unknown split '" + s + "'");
}

Scheme scheme_from_string(const std::string& s) {
  if (s == "two_class") return Scheme::two_class;
  if (s == "three_class") return Scheme::three_class;
  throw Error(ErrorKind::parse, "unknown scheme '" + s + "'");
}

std::vector<StanceLabel> scheme_classes(Scheme scheme) {
  if (scheme == Scheme::two_class)
    return {StanceLabel::Pro, StanceLabel::Anti};
  return {StanceLabel::Pro, StanceLabel::Anti, StanceLabel::Neutral};
}

int num_classes(Scheme scheme) { return scheme == Scheme::two_class ? 2 : 3; }

int class_index(Scheme scheme, StanceLabel label) {
  if (scheme == Scheme::two_class && label == StanceLabel::Neutral)
    throw Error(ErrorKind::config, "Neutral label under two_class scheme");
  switch (label) {
    case StanceLabel::Pro: return 0;
    case StanceLabel::Anti: return 1;
    case StanceLabel::Neutral: return 2;
  }
  return -1;
}

const Market& DatasetBundle::market_for(const std::string& market_id) const {
  for (const Market& m : markets)
    if (m.market_id == market_id) return m;
  throw Error(ErrorKind::lookup, "unknown market '" + market_id + "'");
}

bool DatasetBundle::has_market(const std::string& market_id) const {
  return std::any_of(markets.begin(), markets.end(),
                     [&](const Market& m) { return m.market_id == market_id; });
}

void DatasetBundle::validate() const {
  for (const Market& m : markets) {
    if (m.question.empty())
      throw Error(ErrorKind::parse, "market " + m.market_id + " has empty question");
  }
  for (const LabeledExample& ex : examples) {
    if (is_blank(ex.comment.text))
      throw Error(ErrorKind::parse, "example " + ex.comment.comment_id + " has blank text");
    if (!has_market(ex.comment.market_id))
      throw Error(ErrorKind::linkage, "example " + ex.comment.comment_id +
                                          " references unknown market " + ex.comment.market_id);
    if (scheme == Scheme::two_class && ex.label == StanceLabel::Neutral)
      throw Error(ErrorKind::domain,
                  "Neutral example " + ex.comment.comment_id + " in two_class bundle");
    if (ex.provenance == Provenance::synthetic &&
        (ex.label != StanceLabel::Anti || ex.split == Split::val || ex.split == Split::test))
      throw Error(ErrorKind::domain, "synthetic example " + ex.comment.comment_id +
                                         " must be Anti and never in val/test");
  }
}

}  // namespace stancelab::corpus
