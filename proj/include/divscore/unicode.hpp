#pragma once

// Thin wrappers over ICU for the handful of Unicode services the text
// pipeline needs. All functions take and return UTF-8.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace divscore::unicode {

/// Throws EncodingError naming the byte offset of the first ill-formed sequence.
void validate_utf8(std::string_view text);

std::string to_nfc(std::string_view text);
bool is_nfc(std::string_view text);

/// Word-boundary segments (UAX #29 with ICU's dictionary tailoring for
/// scripts written without spaces). Covers the whole input, including
/// whitespace and punctuation runs.
std::vector<std::string_view> word_segments(std::string_view text);

/// Extended grapheme clusters.
std::size_t grapheme_count(std::string_view text);

/// True if any code point is a letter (L*), mark (M*) or decimal digit (Nd).
bool has_alphanumeric(std::string_view text);

/// Unicode version of the linked ICU data, e.g. "14.0".
std::string unicode_version();

}  // namespace divscore::unicode
