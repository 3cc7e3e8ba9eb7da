#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "morphsplit/corpus.hpp"

namespace morphsplit {

enum class SplitMode { kForm, kLemma };
enum class SplitPart { kTrain = 0, kDev = 1, kTest = 2 };

std::string_view to_string(SplitMode mode);
SplitMode split_mode_from_string(std::string_view text);
std::string_view part_name(SplitPart part);       // "train" / "dev" / "test"
std::string_view part_extension(SplitPart part);  // "trn" / "dev" / "tst"

inline constexpr std::array<SplitPart, 3> kAllParts = {SplitPart::kTrain, SplitPart::kDev,
                                                       SplitPart::kTest};

/// Train/dev/test weights held as exact rationals over a power-of-ten
/// denominator. Parsing and validation never touch floating point, so
/// "0.7,0.1,0.2" sums to exactly 1 and "0.3,0.3,0.3" is rejected.
class Proportions {
 public:
  Proportions();  // 0.7 / 0.1 / 0.2

  /// Three comma-separated non-negative decimals (at most 9 fractional
  /// digits) summing to exactly 1, train strictly positive.
  static Proportions parse(std::string_view text);

  std::int64_t numerator(std::size_t part) const { return num_[part]; }
  std::int64_t denominator() const { return den_; }
  double value(std::size_t part) const;
  /// Minimal decimal rendering, e.g. "0.7".
  std::string decimal(std::size_t part) const;
  std::string to_string() const;  // "0.7,0.1,0.2"

  friend bool operator==(const Proportions& a, const Proportions& b) = default;

 private:
  Proportions(std::array<std::int64_t, 3> num, std::int64_t den) : num_(num), den_(den) {}
  std::array<std::int64_t, 3> num_{7, 1, 2};
  std::int64_t den_ = 10;
};

struct SplitSpec {
  SplitMode mode = SplitMode::kLemma;
  Proportions proportions;
  std::uint64_t seed = 0;
};

struct Provenance {
  std::string language;
  std::string checksum;  // input dataset_checksum; empty when unknown
  std::string version;
  std::string rng;
};

struct SplitResult {
  SplitSpec spec;
  LanguageDataset train;
  LanguageDataset dev;
  LanguageDataset test;
  Provenance provenance;

  const LanguageDataset& part(SplitPart p) const;
  LanguageDataset& part(SplitPart p);
};

/// Largest-remainder apportionment of `total` units over the three parts.
/// Every count is floor(p_i * total) plus at most one leftover unit;
/// leftovers go to the largest remainders, ties broken train > dev > test.
std::array<std::size_t, 3> apportion(std::size_t total, const Proportions& p);

/// Stable seed for one language's shuffle stream. Mixing the language code
/// into the seed keeps per-language streams independent of each other and
/// of scheduling, which is what makes directory-parallel splitting safe.
std::uint64_t derive_stream_seed(std::uint64_t seed, std::string_view language);

/// Deterministic Fisher-Yates over a pinned mt19937_64 stream with
/// rejection-sampled bounds; identical on every platform.
void deterministic_shuffle(std::vector<std::size_t>& values, std::uint64_t stream_seed);

/// Partitions the dataset. LEMMA mode shuffles and apportions whole
/// inflection tables; FORM mode shuffles and apportions individual
/// triplets. Same dataset + spec always produces an identical result.
SplitResult split(const LanguageDataset& dataset, const SplitSpec& spec);

struct Violation {
  std::string kind;  // "lemma" | "triplet" | "completeness"
  std::string item;
  std::vector<SplitPart> parts;
};

struct VerificationReport {
  std::vector<Violation> violations;
  bool completeness_checked = false;
  bool passed() const { return violations.empty(); }
};

/// Checks the mode's pairwise disjointness across all three part-pairs.
/// When the result carries an input checksum, also checks that the union
/// of the parts matches it (completeness). Violations are data, not
/// errors.
VerificationReport verify_split(const SplitResult& result);

struct SizeDelta {
  std::array<std::size_t, 3> counts_a{};
  std::array<std::size_t, 3> counts_b{};
  /// (count_b - count_a) / count_a * 100 per part; NaN when count_a is 0
  /// and count_b is not.
  std::array<double, 3> delta_pct{};
};

/// Per-part example counts of two splits of the same input and their
/// relative deltas (b vs a). Throws MismatchedInputError when the
/// provenance checksums differ.
SizeDelta compare_split_sizes(const SplitResult& a, const SplitResult& b);

/// Sidecar JSON: {language, mode, proportions, seed, checksum, counts,
/// units, version, rng}.
std::string provenance_json(const SplitResult& result);

/// Writes <lang>.trn/.dev/.tst plus <lang>.split.json under out_dir
/// (created if missing), all atomically. Returns the four paths.
std::vector<std::string> write_split_files(const SplitResult& result, const std::string& out_dir);

}  // namespace morphsplit
