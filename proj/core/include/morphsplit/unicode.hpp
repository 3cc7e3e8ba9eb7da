#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace morphsplit::unicode {

/// Strict UTF-8 decode to Unicode scalar values. Rejects overlong
/// encodings, surrogates, out-of-range code points and truncated
/// sequences with a DecodeError carrying the byte offset.
std::vector<char32_t> decode_utf8(std::string_view text);

/// Validates without materializing the scalars.
void validate_utf8(std::string_view text);

std::string encode_utf8(std::span<const char32_t> scalars);

/// Number of scalar values in a valid UTF-8 string.
std::size_t scalar_length(std::string_view text);

/// Canonical composition (NFC). Input must be valid UTF-8.
std::string nfc(std::string_view text);

}  // namespace morphsplit::unicode
