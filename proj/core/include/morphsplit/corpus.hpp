#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace morphsplit {

/// Morphosyntactic tag set of one paradigm cell, e.g. N;NOM;PL.
/// Tags keep the order they were written in; identity ignores it,
/// so N;NOM;PL and NOM;N;PL compare equal. Tag comparison is
/// case-sensitive.
class FeatureBundle {
 public:
  FeatureBundle() = default;
  explicit FeatureBundle(std::vector<std::string> tags);

  /// Parses a ';'-joined bundle. Throws EmptyFieldError (line 0) on an
  /// empty tag and FormatError (line 0) on a duplicate tag; callers that
  /// know the source line re-raise with it.
  static FeatureBundle parse(std::string_view joined);

  const std::vector<std::string>& tags() const { return tags_; }
  /// Original tag order joined by ';' — the canonical written form.
  std::string canonical() const;
  /// Sorted tag order joined by ';' — the order-insensitive identity.
  const std::string& key() const { return key_; }
  bool empty() const { return tags_.empty(); }

  friend bool operator==(const FeatureBundle& a, const FeatureBundle& b) {
    return a.key_ == b.key_;
  }

 private:
  std::vector<std::string> tags_;
  std::string key_;
};

/// One (lemma, features, form) record.
struct Triplet {
  std::string lemma;
  std::string form;
  FeatureBundle features;

  friend bool operator==(const Triplet& a, const Triplet& b) {
    return a.lemma == b.lemma && a.form == b.form && a.features == b.features;
  }
};

struct TableSlot {
  FeatureBundle features;
  std::string form;
};

/// All slots sharing one lemma.
struct InflectionTable {
  std::string lemma;
  std::vector<TableSlot> slots;
  std::size_t size() const { return slots.size(); }
};

struct LanguageDataset {
  std::string language;
  std::string family = "misc";
  std::vector<Triplet> triplets;
  bool empty() const { return triplets.empty(); }
  std::size_t size() const { return triplets.size(); }
};

struct ParseOptions {
  bool nfc_normalize = true;
};

struct ParseWarning {
  std::size_t line = 0;  // 1-based
  std::string message;
};

/// Parses UniMorph TSV: one "lemma<TAB>form<TAB>tag1;tag2;..." record per
/// line, LF or CRLF terminated, blank lines skipped, input order kept.
/// All strings are NFC-normalized unless disabled. Exact duplicate records
/// are retained; a warning naming both lines is appended for each.
LanguageDataset parse_unimorph(std::string_view text, std::string language,
                               std::string family = "misc", const ParseOptions& opts = {},
                               std::vector<ParseWarning>* warnings = nullptr);

/// "lemma<TAB>form<TAB>features" with the bundle in canonical written order.
std::string to_line(const Triplet& t);

/// LF-terminated lines, one per triplet, in dataset order.
std::string serialize_unimorph(const LanguageDataset& ds);

/// One table per distinct lemma, in first-occurrence order; slots keep
/// dataset order. Duplicate records stay duplicate slots, so tables
/// always partition the triplet multiset.
std::vector<InflectionTable> group_by_lemma(const LanguageDataset& ds);

struct StatsRecord {
  std::size_t triplets = 0;
  std::size_t tables = 0;
  std::size_t min_table_size = 0;
  std::size_t max_table_size = 0;
  double mean_table_size = 0.0;
  std::size_t distinct_bundles = 0;
};

/// Counts are 0 (not an error) for an empty dataset.
StatsRecord dataset_stats(const LanguageDataset& ds);

/// Order-independent content digest: FNV-1a 64 over the sorted serialized
/// records. Two datasets with the same record multiset hash identically
/// regardless of record order.
std::string dataset_checksum(const LanguageDataset& ds);

/// "language<TAB>family" per line; '#' lines and blank lines are skipped.
std::map<std::string, std::string> parse_family_map(std::string_view text);

/// "language<TAB>count" per line, same conventions as parse_family_map.
std::map<std::string, std::size_t> parse_count_map(std::string_view text);

}  // namespace morphsplit
