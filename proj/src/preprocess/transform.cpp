#include "stancelab/preprocess/transform.hpp"

#include <algorithm>

#include "stancelab/core/error.hpp"
#include "stancelab/core/log.hpp"

namespace stancelab::preprocess {

std::string mask_entities(const std::string& text, const std::vector<EntitySpan>& spans) {
  std::vector<EntitySpan> sorted = spans;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const EntitySpan& a, const EntitySpan& b) { return a.start < b.start; });
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].start >= sorted[i].end || sorted[i].end > text.size())
      throw Error(ErrorKind::span, "span out of range for text of length " +
                                       std::to_string(text.size()));
    if (i > 0 && sorted[i].start < sorted[i - 1].end)
      throw Error(ErrorKind::span, "overlapping spans");
  }
  std::string out = text;
  for (auto it = sorted.rbegin(); it != sorted.rend(); ++it)
    out.replace(it->start, it->end - it->start, kMaskToken);
  return out;
}

ModelInput build_model_input(const corpus::LabeledExample& example,
                             const corpus::Market& market, const PreprocessOptions& opts,
                             const NerProvider* ner) {
  if (example.comment.market_id != market.market_id)
    throw Error(ErrorKind::linkage, "example " + example.comment.comment_id +
                                        " does not belong to market " + market.market_id);
  if (opts.mask && ner == nullptr)
    throw Error(ErrorKind::config, "masking enabled but no NER provider configured");

  std::string comment_text = example.comment.text;
  if (comment_text.find(kCommentDelimiter) != std::string::npos)
    log_warn("comment " + example.comment.comment_id +
             " contains the literal delimiter '" + kCommentDelimiter +
             "'; passed through unescaped");
  if (opts.mask)
    comment_text = mask_entities(comment_text, recognize_entities(comment_text, *ner));

  std::string question_text = market.question;
  if (opts.mask && opts.mask_question)
    question_text = mask_entities(question_text, recognize_entities(question_text, *ner));

  ModelInput input;
  input.with_context = opts.with_context;
  input.source_id = example.comment.comment_id;
  if (opts.with_context) {
    input.text = std::string(kContextPrefix) + question_text + kCommentDelimiter + comment_text;
    const size_t question_end = std::string(kContextPrefix).size() + question_text.size();
    input.question_range = {0, question_end};
    input.comment_range = {question_end, input.text.size()};
  } else {
    input.text = comment_text;
    input.comment_range = {0, input.text.size()};
  }
  return input;
}

std::vector<ModelInput> prepare_inputs(const corpus::DatasetBundle& bundle,
                                       const PreprocessOptions& opts, const NerProvider* ner) {
  std::vector<ModelInput> inputs;
  inputs.reserve(bundle.examples.size());
  for (const auto& ex : bundle.examples)
    inputs.push_back(
        build_model_input(ex, bundle.market_for(ex.comment.market_id), opts, ner));
  return inputs;
}

std::vector<MaskingReportRow> masking_report(const corpus::DatasetBundle& bundle,
                                             const NerProvider& ner) {
  std::map<std::string, std::map<EntityKind, long>> counts;
  for (const auto& ex : bundle.examples) {
    for (const auto& span : recognize_entities(ex.comment.text, ner))
      counts[ex.comment.market_id][span.kind]++;
  }
  std::vector<MaskingReportRow> rows;
  for (const auto& [market_id, per_kind] : counts)
    for (const auto& [kind, count] : per_kind) rows.push_back({market_id, kind, count});
  return rows;
}

}  // namespace stancelab::preprocess
