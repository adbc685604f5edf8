#include "divscore/unicode.hpp"

#include <unicode/brkiter.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/utext.h>
#include <unicode/utf8.h>
#include <unicode/uversion.h>

#include <climits>
#include <memory>

#include "divscore/error.hpp"

namespace divscore::unicode {

namespace {

struct UTextCloser {
  void operator()(UText* t) const { utext_close(t); }
};
using UTextPtr = std::unique_ptr<UText, UTextCloser>;

void check(UErrorCode status, const char* what) {
  if (U_FAILURE(status)) {
    throw Error(std::string("ICU ") + what + " failed: " + u_errorName(status));
  }
}

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  check(status, "getNFCInstance");
  return *n;
}

// Iterators are expensive to create; keep one of each per thread.
icu::BreakIterator& word_iterator() {
  thread_local std::unique_ptr<icu::BreakIterator> it = [] {
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::BreakIterator> b(
        icu::BreakIterator::createWordInstance(icu::Locale::getRoot(), status));
    check(status, "createWordInstance");
    return b;
  }();
  return *it;
}

icu::BreakIterator& character_iterator() {
  thread_local std::unique_ptr<icu::BreakIterator> it = [] {
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::BreakIterator> b(
        icu::BreakIterator::createCharacterInstance(icu::Locale::getRoot(), status));
    check(status, "createCharacterInstance");
    return b;
  }();
  return *it;
}

UTextPtr open_utf8(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(INT64_MAX)) throw Error("text too large");
  UErrorCode status = U_ZERO_ERROR;
  UText* ut = utext_openUTF8(nullptr, text.data(), static_cast<int64_t>(text.size()), &status);
  check(status, "utext_openUTF8");
  return UTextPtr(ut);
}

}  // namespace

void validate_utf8(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(INT32_MAX)) {
    throw EncodingError("text exceeds 2 GiB");
  }
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) {
      throw EncodingError("invalid UTF-8 at byte offset " + std::to_string(start));
    }
  }
}

std::string to_nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  std::string out;
  icu::StringByteSink<std::string> sink(&out, static_cast<int32_t>(text.size()));
  nfc().normalizeUTF8(0, icu::StringPiece(text.data(), static_cast<int32_t>(text.size())), sink,
                      nullptr, status);
  check(status, "normalizeUTF8");
  return out;
}

bool is_nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const bool result = nfc().isNormalizedUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())), status);
  check(status, "isNormalizedUTF8");
  return result;
}

std::vector<std::string_view> word_segments(std::string_view text) {
  std::vector<std::string_view> out;
  if (text.empty()) return out;
  UTextPtr ut = open_utf8(text);
  UErrorCode status = U_ZERO_ERROR;
  icu::BreakIterator& it = word_iterator();
  it.setText(ut.get(), status);
  check(status, "BreakIterator::setText");
  int32_t start = it.first();
  for (int32_t end = it.next(); end != icu::BreakIterator::DONE; start = end, end = it.next()) {
    out.push_back(text.substr(static_cast<std::size_t>(start),
                              static_cast<std::size_t>(end - start)));
  }
  return out;
}

std::size_t grapheme_count(std::string_view text) {
  if (text.empty()) return 0;
  UTextPtr ut = open_utf8(text);
  UErrorCode status = U_ZERO_ERROR;
  icu::BreakIterator& it = character_iterator();
  it.setText(ut.get(), status);
  check(status, "BreakIterator::setText");
  std::size_t count = 0;
  it.first();
  while (it.next() != icu::BreakIterator::DONE) ++count;
  return count;
}

bool has_alphanumeric(std::string_view text) {
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) continue;
    const auto mask = U_GET_GC_MASK(c);
    if (mask & (U_GC_L_MASK | U_GC_M_MASK | U_GC_ND_MASK)) return true;
  }
  return false;
}

std::string unicode_version() {
  UVersionInfo v;
  u_getUnicodeVersion(v);
  return std::to_string(v[0]) + "." + std::to_string(v[1]);
}

}  // namespace divscore::unicode
