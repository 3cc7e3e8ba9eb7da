#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "morphsplit/metrics.hpp"

namespace morphsplit {

struct FamilyAggregate {
  std::string family;
  SplitMode mode = SplitMode::kForm;
  /// Unweighted mean over languages per system, then mean of those
  /// system means (languages-then-systems order).
  double mean_accuracy_across_systems = 0.0;
  std::string best_system;       // argmax of system means, lexicographic tie-break
  double best_accuracy = 0.0;    // that system's family mean
  std::size_t n_languages = 0;
};

/// Aggregates per (family, mode). Families with fewer than min_languages
/// languages are merged into "misc". Throws MissingFamilyError when a
/// language has no family assignment. Output is sorted by family name
/// ("misc" last), form before lemma.
std::vector<FamilyAggregate> aggregate_by_family(
    std::span<const EvalResult> results, const std::map<std::string, std::string>& family_map,
    std::size_t min_languages = 3);

/// Fixed-width text table with the "mean (best)_system" rendering.
std::string format_family_table(std::span<const FamilyAggregate> aggregates);
std::string family_aggregates_to_json(std::span<const FamilyAggregate> aggregates);
std::string family_aggregates_to_csv(std::span<const FamilyAggregate> aggregates);

struct DropRecord {
  std::string language;
  std::string family;
  std::string system;
  std::size_t train_examples = 0;  // form-split training example count
  double form_accuracy = 0.0;
  double lemma_accuracy = 0.0;
  double drop = 0.0;  // form_accuracy - lemma_accuracy
};

struct DropReport {
  std::vector<DropRecord> records;
  std::map<std::string, double> macro_drop_by_system;
  double macro_drop_overall = 0.0;
};

/// One record per (language, system) pair, in form-result order. The two
/// result lists must cover identical pairs (PairMismatchError lists the
/// odd ones out). train_sizes maps language -> form-split train example
/// count; languages absent from family_map fall back to "misc".
DropReport drop_records(std::span<const EvalResult> form, std::span<const EvalResult> lemma,
                        const std::map<std::string, std::size_t>& train_sizes,
                        const std::map<std::string, std::string>& family_map = {});

/// Header: language,family,system,train_examples,form_acc,lemma_acc,drop
std::string drop_report_to_csv(const DropReport& report);
std::string drop_report_to_json(const DropReport& report);

}  // namespace morphsplit
