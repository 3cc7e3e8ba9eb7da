#include "morphsplit/unicode.hpp"

#include <unicode/bytestream.h>
#include <unicode/normalizer2.h>
#include <unicode/stringpiece.h>

#include <algorithm>

#include "morphsplit/errors.hpp"

namespace morphsplit::unicode {

namespace {

// Shared decode loop. `sink` is called once per scalar; pass nullptr to
// validate only.
template <typename Sink>
void decode_impl(std::string_view s, Sink&& sink) {
  std::size_t i = 0;
  const std::size_t n = s.size();
  while (i < n) {
    const unsigned char b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
      sink(static_cast<char32_t>(b0));
      ++i;
      continue;
    }
    int len;
    char32_t cp;
    char32_t min;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1Fu;
      min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0Fu;
      min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07u;
      min = 0x10000;
    } else {
      throw DecodeError(i, "invalid lead byte");
    }
    if (i + static_cast<std::size_t>(len) > n) throw DecodeError(i, "truncated sequence");
    for (int k = 1; k < len; ++k) {
      const unsigned char b = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
      if ((b & 0xC0) != 0x80) throw DecodeError(i + static_cast<std::size_t>(k), "missing continuation byte");
      cp = (cp << 6) | (b & 0x3Fu);
    }
    if (cp < min) throw DecodeError(i, "overlong encoding");
    if (cp >= 0xD800 && cp <= 0xDFFF) throw DecodeError(i, "surrogate code point");
    if (cp > 0x10FFFF) throw DecodeError(i, "code point out of range");
    sink(cp);
    i += static_cast<std::size_t>(len);
  }
}

bool is_ascii(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return static_cast<unsigned char>(c) < 0x80; });
}

}  // namespace

std::vector<char32_t> decode_utf8(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  decode_impl(text, [&](char32_t cp) { out.push_back(cp); });
  return out;
}

void validate_utf8(std::string_view text) {
  decode_impl(text, [](char32_t) {});
}

std::string encode_utf8(std::span<const char32_t> scalars) {
  std::string out;
  out.reserve(scalars.size());
  for (char32_t cp : scalars) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::size_t scalar_length(std::string_view text) {
  std::size_t count = 0;
  decode_impl(text, [&](char32_t) { ++count; });
  return count;
}

std::string nfc(std::string_view text) {
  if (is_ascii(text)) return std::string(text);  // ASCII is NFC by definition
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  std::string out;
  icu::StringByteSink<std::string> sink(&out);
  norm->normalizeUTF8(0, icu::StringPiece(text.data(), static_cast<int32_t>(text.size())), sink,
                      nullptr, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  return out;
}

}  // namespace morphsplit::unicode
