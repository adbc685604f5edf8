#include "divscore/textstats.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <unordered_map>

#include "divscore/error.hpp"
#include "divscore/unicode.hpp"

namespace divscore::textstats {

namespace {

void require_tokens(const TokenSequence& tokens, const char* what) {
  if (tokens.empty()) throw InputError(std::string(what) + " of an empty token sequence");
}

// Uniform integer in [0, bound] without modulo bias.
std::uint64_t uniform_upto(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == std::numeric_limits<std::uint64_t>::max()) return rng();
  const std::uint64_t range = bound + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % range;
}

}  // namespace

TokenSequence::TokenSequence(std::vector<std::string> tokens, std::optional<IsoCode> iso)
    : tokens_(std::move(tokens)), iso_(std::move(iso)) {
  for (const auto& t : tokens_) {
    if (!unicode::has_alphanumeric(t)) {
      throw InvariantError("every token contains an alphanumeric grapheme", "'" + t + "'");
    }
  }
}

TokenSequence tokenize(std::string_view text, std::optional<IsoCode> iso) {
  std::vector<std::string> tokens;
  for (std::string_view seg : unicode::word_segments(text)) {
    if (unicode::has_alphanumeric(seg)) tokens.emplace_back(seg);
  }
  return TokenSequence(std::move(tokens), std::move(iso));
}

std::size_t grapheme_length(std::string_view token) { return unicode::grapheme_count(token); }

std::size_t sample_offset(std::size_t token_count, std::size_t target, std::uint64_t seed) {
  if (token_count == 0) throw InputError("cannot sample an empty token sequence");
  if (target == 0) throw InputError("sample target must be positive");
  if (token_count <= target) return 0;
  std::mt19937_64 rng(seed);
  return static_cast<std::size_t>(uniform_upto(rng, token_count - target));
}

Sample sample_contiguous(const TokenSequence& tokens, std::size_t target, std::uint64_t seed) {
  const std::size_t offset = sample_offset(tokens.size(), target, seed);
  if (offset == 0 && tokens.size() <= target) return {tokens, 0};
  const auto first = tokens.tokens().begin() + static_cast<std::ptrdiff_t>(offset);
  return {TokenSequence(std::vector<std::string>(first, first + static_cast<std::ptrdiff_t>(target)),
                        tokens.iso()),
          offset};
}

double mean_word_length(const TokenSequence& tokens, double script_scale) {
  require_tokens(tokens, "mean word length");
  if (!(script_scale > 0.0)) throw InputError("script scale must be positive");
  std::size_t graphemes = 0;
  for (const auto& t : tokens.tokens()) graphemes += grapheme_length(t);
  return static_cast<double>(graphemes) / static_cast<double>(tokens.size()) * script_scale;
}

double type_token_ratio(const TokenSequence& tokens) {
  require_tokens(tokens, "type-token ratio");
  std::unordered_map<std::string_view, std::size_t> counts;
  for (const auto& t : tokens.tokens()) ++counts[t];
  return static_cast<double>(counts.size()) / static_cast<double>(tokens.size());
}

double unigram_entropy(const TokenSequence& tokens) {
  require_tokens(tokens, "unigram entropy");
  std::unordered_map<std::string_view, std::size_t> counts;
  for (const auto& t : tokens.tokens()) ++counts[t];
  const double n = static_cast<double>(tokens.size());
  double h = 0.0;
  for (const auto& [token, count] : counts) {
    const double p = static_cast<double>(count) / n;
    h -= p * std::log2(p);
  }
  // all-distinct samples should hit log2(n) exactly, not a hair above
  if (counts.size() == tokens.size()) return std::log2(n);
  return h < 0.0 ? 0.0 : h;
}

TextProfile profile(const ingest::CorpusSource& corpus, const LanguageRecord& record,
                    std::size_t target, std::uint64_t seed) {
  const TokenSequence all = tokenize(corpus.text, corpus.iso);
  if (all.empty()) throw InputError(corpus.iso.str() + ": no lexical tokens");
  const Sample s = sample_contiguous(all, target, seed);
  return TextProfile(corpus.iso, mean_word_length(s.tokens, record.script_scale()),
                     type_token_ratio(s.tokens), unigram_entropy(s.tokens), s.tokens.size(),
                     s.offset, seed);
}

}  // namespace divscore::textstats
