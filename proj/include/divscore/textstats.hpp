#pragma once

// Text-derived features: word tokens, grapheme-cluster word length,
// seeded contiguous sampling, MWL, TTR and unigram entropy.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divscore/core.hpp"
#include "divscore/ingest.hpp"

namespace divscore::textstats {

class TokenSequence {
 public:
  TokenSequence() = default;
  /// Every token must contain a letter, mark or decimal digit.
  explicit TokenSequence(std::vector<std::string> tokens, std::optional<IsoCode> iso = {});

  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  const std::optional<IsoCode>& iso() const noexcept { return iso_; }
  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }

  bool operator==(const TokenSequence&) const = default;

 private:
  std::vector<std::string> tokens_;
  std::optional<IsoCode> iso_;
};

/// Unicode word segmentation; segments without any alphanumeric code point
/// (spaces, punctuation runs) are dropped. Expects NFC input.
TokenSequence tokenize(std::string_view text, std::optional<IsoCode> iso = {});

/// Extended grapheme clusters in a non-empty token.
std::size_t grapheme_length(std::string_view token);

struct Sample {
  TokenSequence tokens;
  std::size_t offset = 0;
};

/// Window of min(target, N) consecutive tokens starting at an offset drawn
/// uniformly from [0, N - target] with mt19937_64(seed). N <= target gives
/// the whole sequence at offset 0.
Sample sample_contiguous(const TokenSequence& tokens, std::size_t target, std::uint64_t seed);

/// The offset sample_contiguous would pick, without copying tokens.
std::size_t sample_offset(std::size_t token_count, std::size_t target, std::uint64_t seed);

double mean_word_length(const TokenSequence& tokens, double script_scale = 1.0);
double type_token_ratio(const TokenSequence& tokens);
double unigram_entropy(const TokenSequence& tokens);

/// tokenize -> sample -> MWL (scaled by the record), TTR, entropy, all on the
/// same window.
TextProfile profile(const ingest::CorpusSource& corpus, const LanguageRecord& record,
                    std::size_t target, std::uint64_t seed);

}  // namespace divscore::textstats
