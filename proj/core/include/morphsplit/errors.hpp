#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace morphsplit {

/// Base class for all data-level failures raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input bytes are not valid UTF-8.
class DecodeError : public Error {
 public:
  DecodeError(std::size_t byte_offset, const std::string& detail)
      : Error("invalid UTF-8 at byte " + std::to_string(byte_offset) + ": " + detail),
        byte_offset(byte_offset) {}
  std::size_t byte_offset;
};

/// Structurally malformed line (wrong field count, duplicate tag, ...).
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& detail)
      : Error("line " + std::to_string(line) + ": " + detail), line(line) {}
  std::size_t line;  // 1-based
};

/// A required field (lemma, form, features, feature tag) is empty.
class EmptyFieldError : public Error {
 public:
  EmptyFieldError(std::size_t line, const std::string& field)
      : Error("line " + std::to_string(line) + ": empty " + field),
        line(line),
        field(field) {}
  std::size_t line;  // 1-based
  std::string field;
};

class EmptyDatasetError : public Error {
 public:
  explicit EmptyDatasetError(const std::string& msg) : Error(msg) {}
};

class InfeasibleSplitError : public Error {
 public:
  explicit InfeasibleSplitError(const std::string& msg) : Error(msg) {}
};

/// Two artifacts that must derive from the same input do not.
class MismatchedInputError : public Error {
 public:
  explicit MismatchedInputError(const std::string& msg) : Error(msg) {}
};

/// Gold and prediction sequences have different lengths.
class LengthMismatchError : public Error {
 public:
  LengthMismatchError(std::size_t gold_count, std::size_t pred_count)
      : Error("gold has " + std::to_string(gold_count) + " records but predictions have " +
              std::to_string(pred_count)),
        gold_count(gold_count),
        pred_count(pred_count) {}
  std::size_t gold_count;
  std::size_t pred_count;
};

class MissingFamilyError : public Error {
 public:
  explicit MissingFamilyError(const std::string& language)
      : Error("no family assignment for language '" + language + "'"), language(language) {}
  std::string language;
};

/// Form/lemma result lists do not cover the same (language, system) pairs.
class PairMismatchError : public Error {
 public:
  explicit PairMismatchError(std::vector<std::string> missing_pairs)
      : Error(describe(missing_pairs)), missing(std::move(missing_pairs)) {}
  std::vector<std::string> missing;

 private:
  static std::string describe(const std::vector<std::string>& pairs) {
    std::string msg = "form/lemma results cover different (language, system) pairs:";
    for (const auto& p : pairs) msg += " " + p;
    return msg;
  }
};

}  // namespace morphsplit
