#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stancelab/corpus/types.hpp"
#include "stancelab/preprocess/ner.hpp"

namespace stancelab::preprocess {

// The literal mask token. Deliberately not the encoder's special mask token,
// which carries pretraining semantics.
inline constexpr const char* kMaskToken = "ENTITY";
inline constexpr const char* kContextPrefix = "Market: ";
inline constexpr const char* kCommentDelimiter = " Comment: ";

// Final string fed to the tokenizer plus the character ranges needed for
// attention mass partitioning. Segment ranges include their literal markers
// ("Market: " belongs to the question range, " Comment: " to the comment
// range), so the two ranges tile the whole string when context is on.
struct ModelInput {
  std::string text;
  bool with_context = false;
  std::string source_id;
  std::pair<size_t, size_t> comment_range{0, 0};
  std::optional<std::pair<size_t, size_t>> question_range;

  bool operator==(const ModelInput&) const = default;
};

struct PreprocessOptions {
  bool with_context = true;
  bool mask = true;
  bool mask_question = false;  // ablation flag; default keeps the question intact
};

// Replaces every span with the mask token, right to left. Spans must be
// in-range and non-overlapping.
std::string mask_entities(const std::string& text, const std::vector<EntitySpan>& spans);

// Builds the final model input for one example. `ner` may be null when
// masking is off; with masking on it is required (masking is never silently
// skipped).
ModelInput build_model_input(const corpus::LabeledExample& example, const corpus::Market& market,
                             const PreprocessOptions& opts, const NerProvider* ner);

// Inputs aligned one-to-one with bundle.examples.
std::vector<ModelInput> prepare_inputs(const corpus::DatasetBundle& bundle,
                                       const PreprocessOptions& opts, const NerProvider* ner);

// Counts of masked entity kinds per market, for the masking report CSV.
struct MaskingReportRow {
  std::string market_id;
  EntityKind kind;
  long count = 0;
};
std::vector<MaskingReportRow> masking_report(const corpus::DatasetBundle& bundle,
                                             const NerProvider& ner);

}  // namespace stancelab::preprocess
