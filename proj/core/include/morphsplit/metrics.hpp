#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "morphsplit/corpus.hpp"
#include "morphsplit/splitter.hpp"

namespace morphsplit {

/// Unit-cost Levenshtein distance over Unicode scalar values (not bytes,
/// not grapheme clusters); no transpositions.
std::size_t levenshtein(std::string_view a, std::string_view b);
std::size_t levenshtein(std::span<const char32_t> a, std::span<const char32_t> b);

struct EvalOptions {
  /// NFC-normalize predictions before comparing, consistent with corpus
  /// parsing. Off = strict byte-exact comparison.
  bool nfc_normalize = true;
};

struct EvalResult {
  std::string language;
  std::string system;
  SplitMode split_mode = SplitMode::kForm;
  double accuracy = 0.0;            // exact-match fraction
  double mean_edit_distance = 0.0;  // averaged over all items
  std::size_t n = 0;
};

/// Scores predictions against gold forms positionally: prediction i
/// against gold triplet i. Throws LengthMismatchError when the counts
/// differ.
EvalResult evaluate(const LanguageDataset& gold, std::span<const std::string> predictions,
                    std::string system, SplitMode mode, const EvalOptions& opts = {});

/// One JSON object per result; newline-free, suitable for JSONL files.
std::string eval_result_to_json(const EvalResult& r);
std::string eval_results_to_jsonl(std::span<const EvalResult> results);
std::vector<EvalResult> parse_eval_results_jsonl(std::string_view text);

}  // namespace morphsplit
