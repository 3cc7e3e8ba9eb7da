#include "morphsplit/corpus.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>
#include <unordered_set>

#include "morphsplit/errors.hpp"
#include "morphsplit/hash.hpp"
#include "morphsplit/unicode.hpp"

namespace morphsplit {

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

// Stable record identity for duplicate detection and checksums.
std::string record_key(const Triplet& t) {
  std::string key = t.lemma;
  key += '\t';
  key += t.form;
  key += '\t';
  key += t.features.key();
  return key;
}

}  // namespace

FeatureBundle::FeatureBundle(std::vector<std::string> tags) : tags_(std::move(tags)) {
  if (tags_.empty()) throw EmptyFieldError(0, "features");
  std::vector<std::string> sorted = tags_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].empty()) throw EmptyFieldError(0, "feature tag");
    if (i > 0 && sorted[i] == sorted[i - 1])
      throw FormatError(0, "duplicate feature tag '" + sorted[i] + "'");
    if (i > 0) key_ += ';';
    key_ += sorted[i];
  }
}

FeatureBundle FeatureBundle::parse(std::string_view joined) {
  std::vector<std::string> tags;
  for (std::string_view part : split_on(joined, ';')) tags.emplace_back(trim(part));
  return FeatureBundle(std::move(tags));
}

std::string FeatureBundle::canonical() const {
  std::string out;
  for (std::size_t i = 0; i < tags_.size(); ++i) {
    if (i > 0) out += ';';
    out += tags_[i];
  }
  return out;
}

LanguageDataset parse_unimorph(std::string_view text, std::string language, std::string family,
                               const ParseOptions& opts, std::vector<ParseWarning>* warnings) {
  unicode::validate_utf8(text);

  LanguageDataset ds;
  ds.language = std::move(language);
  ds.family = std::move(family);

  std::unordered_map<std::string, std::size_t> first_seen;  // record key -> line

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    if (pos == text.size() && line_no > 0) break;  // no trailing empty line after final LF
    auto nl = text.find('\n', pos);
    std::string_view raw =
        nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (nl == std::string_view::npos && raw.empty() && line_no > 0) break;

    if (trim(raw).empty()) continue;  // blank line

    auto fields = split_on(raw, '\t');
    if (fields.size() != 3)
      throw FormatError(line_no, "expected 3 tab-separated fields, got " +
                                     std::to_string(fields.size()));

    std::string lemma{trim(fields[0])};
    std::string form{trim(fields[1])};
    std::string feats{trim(fields[2])};
    if (opts.nfc_normalize) {
      lemma = unicode::nfc(lemma);
      form = unicode::nfc(form);
      feats = unicode::nfc(feats);
    }
    if (lemma.empty()) throw EmptyFieldError(line_no, "lemma");
    if (form.empty()) throw EmptyFieldError(line_no, "form");
    if (feats.empty()) throw EmptyFieldError(line_no, "features");

    Triplet t;
    t.lemma = std::move(lemma);
    t.form = std::move(form);
    try {
      t.features = FeatureBundle::parse(feats);
    } catch (const EmptyFieldError& e) {
      throw EmptyFieldError(line_no, e.field);
    } catch (const FormatError& e) {
      throw FormatError(line_no, e.what() + std::string_view("line 0: ").size());
    }

    auto [it, inserted] = first_seen.try_emplace(record_key(t), line_no);
    if (!inserted && warnings != nullptr) {
      warnings->push_back({line_no, "duplicate record '" + to_line(t) + "' first seen at line " +
                                        std::to_string(it->second)});
    }
    ds.triplets.push_back(std::move(t));
  }
  return ds;
}

std::string to_line(const Triplet& t) {
  std::string line = t.lemma;
  line += '\t';
  line += t.form;
  line += '\t';
  line += t.features.canonical();
  return line;
}

std::string serialize_unimorph(const LanguageDataset& ds) {
  std::string out;
  for (const Triplet& t : ds.triplets) {
    out += to_line(t);
    out += '\n';
  }
  return out;
}

std::vector<InflectionTable> group_by_lemma(const LanguageDataset& ds) {
  std::vector<InflectionTable> tables;
  std::unordered_map<std::string_view, std::size_t> index;
  for (const Triplet& t : ds.triplets) {
    auto [it, inserted] = index.try_emplace(t.lemma, tables.size());
    if (inserted) tables.push_back({t.lemma, {}});
    tables[it->second].slots.push_back({t.features, t.form});
  }
  return tables;
}

StatsRecord dataset_stats(const LanguageDataset& ds) {
  StatsRecord rec;
  rec.triplets = ds.triplets.size();
  auto tables = group_by_lemma(ds);
  rec.tables = tables.size();
  if (!tables.empty()) {
    rec.min_table_size = tables.front().size();
    for (const auto& t : tables) {
      rec.min_table_size = std::min(rec.min_table_size, t.size());
      rec.max_table_size = std::max(rec.max_table_size, t.size());
    }
    rec.mean_table_size = static_cast<double>(rec.triplets) / static_cast<double>(rec.tables);
  }
  std::unordered_set<std::string_view> bundles;
  for (const Triplet& t : ds.triplets) bundles.insert(t.features.key());
  rec.distinct_bundles = bundles.size();
  return rec;
}

std::string dataset_checksum(const LanguageDataset& ds) {
  std::vector<std::string> lines;
  lines.reserve(ds.triplets.size());
  for (const Triplet& t : ds.triplets) lines.push_back(to_line(t));
  std::sort(lines.begin(), lines.end());
  std::uint64_t h = kFnv1a64Basis;
  for (const std::string& l : lines) {
    h = fnv1a64(l, h);
    h = fnv1a64("\n", h);
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

namespace {

// Shared two-column TSV reader for the family and count maps.
template <typename Fn>
void parse_two_column(std::string_view text, Fn&& emit) {
  unicode::validate_utf8(text);
  std::size_t line_no = 0;
  for (std::string_view raw : split_on(text, '\n')) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split_on(line, '\t');
    if (fields.size() != 2)
      throw FormatError(line_no,
                        "expected 2 tab-separated fields, got " + std::to_string(fields.size()));
    std::string_view a = trim(fields[0]);
    std::string_view b = trim(fields[1]);
    if (a.empty() || b.empty()) throw EmptyFieldError(line_no, "field");
    emit(line_no, a, b);
  }
}

}  // namespace

std::map<std::string, std::string> parse_family_map(std::string_view text) {
  std::map<std::string, std::string> out;
  parse_two_column(text, [&](std::size_t, std::string_view lang, std::string_view family) {
    out[unicode::nfc(lang)] = unicode::nfc(family);
  });
  return out;
}

std::map<std::string, std::size_t> parse_count_map(std::string_view text) {
  std::map<std::string, std::size_t> out;
  parse_two_column(text, [&](std::size_t line_no, std::string_view lang, std::string_view count) {
    std::size_t value = 0;
    for (char c : count) {
      if (c < '0' || c > '9') throw FormatError(line_no, "count is not a non-negative integer");
      value = value * 10 + static_cast<std::size_t>(c - '0');
    }
    out[unicode::nfc(lang)] = value;
  });
  return out;
}

}  // namespace morphsplit
