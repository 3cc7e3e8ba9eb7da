#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "morphsplit/corpus.hpp"

namespace morphsplit {

/// A prefix/suffix rewrite anchored on the longest common substring of a
/// training pair: replace lemma_prefix with form_prefix, lemma_suffix with
/// form_suffix, keep the middle. An empty common substring degenerates to
/// whole-string replacement (lemma_suffix = lemma, form_suffix = form).
struct TransductionRule {
  std::string bundle;  // order-insensitive feature key
  std::string lemma_prefix;
  std::string form_prefix;
  std::string lemma_suffix;
  std::string form_suffix;
  std::uint64_t support = 1;
};

/// Longest common substring (contiguous, over Unicode scalars; leftmost in
/// the lemma on ties, then leftmost in the form) splits both strings into
/// prefix/stem/suffix.
TransductionRule extract_rule(std::string_view lemma, std::string_view form,
                              const FeatureBundle& bundle);

/// True when `input` starts with the rule's lemma_prefix, ends with its
/// lemma_suffix, and the two do not overlap.
bool rule_matches(const TransductionRule& rule, std::string_view input);

/// Precondition: rule_matches(rule, input).
std::string apply_rule(const TransductionRule& rule, std::string_view input);

struct MemoEntry {
  std::string lemma;
  std::string bundle;  // order-insensitive feature key
  std::string form;
};

/// Trained inflector. Rule lists are sorted most-specific-first:
/// longest lemma_suffix, then highest support, then lexicographic rule
/// fields. With memorization enabled the model additionally keeps every
/// training cell verbatim plus cell-to-cell rules learned between slots
/// that co-occur in a training table, so sibling forms of a known lemma
/// can be reused when the queried cell itself was never seen.
struct RuleModel {
  bool memorize = false;
  std::map<std::string, std::vector<TransductionRule>> rules;  // bundle key -> rules
  std::vector<MemoEntry> memo;                                 // training cells, first-seen order
  std::map<std::pair<std::string, std::string>, std::vector<TransductionRule>>
      cell_rules;  // (source bundle, target bundle) -> rules over forms

  // lookup indexes, rebuilt on load
  std::unordered_map<std::string, std::size_t> memo_index;  // lemma US bundle -> memo slot
  std::unordered_map<std::string, std::vector<std::size_t>> memo_by_lemma;

  void rebuild_indexes();
};

struct TrainWarning {
  std::string message;
};

/// One extract_rule call per triplet; identical rules merge with summed
/// support. Conflicting memo entries (overabundant cells) resolve
/// last-wins with a warning.
RuleModel train(const LanguageDataset& dataset, bool memorize,
                std::vector<TrainWarning>* warnings = nullptr);

/// Total: memo hit, else sibling-cell rules (memorize mode), else the
/// bundle's first matching rule, else the lemma unchanged.
std::string predict(const RuleModel& model, std::string_view lemma, const FeatureBundle& bundle);

std::string model_to_json(const RuleModel& model);
RuleModel model_from_json(std::string_view text);

}  // namespace morphsplit
