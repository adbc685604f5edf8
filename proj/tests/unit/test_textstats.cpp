#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "divscore/csv.hpp"
#include "divscore/error.hpp"
#include "divscore/ingest.hpp"
#include "divscore/textstats.hpp"
#include "support/paths.hpp"

using namespace divscore;
using textstats::TokenSequence;

namespace {

TokenSequence toks(std::vector<std::string> v) { return TokenSequence(std::move(v)); }

TokenSequence numbered(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back("w" + std::to_string(i));
  return TokenSequence(std::move(v));
}

ingest::CorpusSource fixture(const std::string& rel, const char* iso) {
  return ingest::load_corpus(paths::fixtures() / rel, IsoCode(iso));
}

}  // namespace

TEST(Tokenize, PunctuationFiltered) {
  EXPECT_EQ(textstats::tokenize("aa bbb !! cc").tokens(),
            (std::vector<std::string>{"aa", "bbb", "cc"}));
}

TEST(Tokenize, Apostrophe) {
  // regex-module word boundaries (tests/oracles/textstats_oracle.py) give 2 tokens
  EXPECT_EQ(textstats::tokenize("don't stop").tokens(),
            (std::vector<std::string>{"don't", "stop"}));
}

TEST(Tokenize, Empty) { EXPECT_TRUE(textstats::tokenize("").empty()); }

TEST(Tokenize, KeepsDigitsAndMarks) {
  EXPECT_EQ(textstats::tokenize("article 25, §3 -- ok").size(), 4u);  // article 25 3 ok
}

TEST(Tokenize, LeadingApostropheSplitsOff) {
  // UAX #29 joins letters across an apostrophe only with letters on both sides.
  EXPECT_EQ(textstats::tokenize("\xe2\x80\x99" "au\xe2\x80\x99" "a").tokens(),
            (std::vector<std::string>{"au\xe2\x80\x99" "a"}));
}

TEST(TokenSequence, RejectsPunctuationTokens) {
  EXPECT_THROW(toks({"ok", "!!"}), InvariantError);
  EXPECT_THROW(toks({""}), InvariantError);
}

TEST(Graphemes, Examples) {
  EXPECT_EQ(textstats::grapheme_length("\xe6\x88\x91\xe5\x80\x91"), 2u);  // 我們
  EXPECT_EQ(textstats::grapheme_length("a"), 1u);
  EXPECT_EQ(textstats::grapheme_length("e\xcc\x81"), 1u);
  EXPECT_EQ(textstats::grapheme_length("\xc3\xa9"), 1u);
}

TEST(Graphemes, NfcNfdFixture) {
  const auto text = csv::read_file(paths::fixtures() / "graphemes" / "nfc_nfd.tsv");
  const auto rows = csv::parse(text, '\t');
  ASSERT_GT(rows.size(), 10u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& r = rows[i];
    long long expected = 0;
    ASSERT_TRUE(csv::parse_int(r[3], expected));
    const auto nfc = ingest::make_corpus(r[1], IsoCode("und")).text;
    const auto nfd = ingest::make_corpus(r[2], IsoCode("und")).text;
    EXPECT_EQ(nfc, nfd) << r[0];
    EXPECT_EQ(textstats::grapheme_length(nfc), static_cast<std::size_t>(expected)) << r[0];
    // cluster segmentation alone already agrees on the decomposed form
    EXPECT_EQ(textstats::grapheme_length(r[2]), static_cast<std::size_t>(expected)) << r[0];
  }
}

TEST(Sample, WholeCorpusFallback) {
  const auto s = textstats::sample_contiguous(numbered(100), 200, 3);
  EXPECT_EQ(s.tokens.size(), 100u);
  EXPECT_EQ(s.offset, 0u);
}

TEST(Sample, Deterministic) {
  const auto seq = numbered(10000);
  const auto a = textstats::sample_contiguous(seq, 500, 42);
  const auto b = textstats::sample_contiguous(seq, 500, 42);
  EXPECT_EQ(a.offset, b.offset);
  EXPECT_EQ(a.tokens, b.tokens);
  ASSERT_EQ(a.tokens.size(), 500u);
  EXPECT_EQ(a.tokens.tokens().front(), "w" + std::to_string(a.offset));
  EXPECT_LE(a.offset, 9500u);
}

TEST(Sample, SeedsSpreadOffsets) {
  std::set<std::size_t> offsets;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    offsets.insert(textstats::sample_offset(1'000'000, 500, seed));
  }
  EXPECT_GE(offsets.size(), 95u);
}

TEST(Sample, OffsetCoversRange) {
  // N - target = 3: all four offsets must appear, roughly uniformly
  std::map<std::size_t, int> hist;
  for (std::uint64_t seed = 0; seed < 4000; ++seed) ++hist[textstats::sample_offset(13, 10, seed)];
  ASSERT_EQ(hist.size(), 4u);
  for (const auto& [off, n] : hist) {
    EXPECT_LE(off, 3u);
    EXPECT_GT(n, 850);
    EXPECT_LT(n, 1150);
  }
}

TEST(Sample, Errors) {
  EXPECT_THROW(textstats::sample_contiguous(TokenSequence{}, 10, 0), InputError);
  EXPECT_THROW(textstats::sample_contiguous(numbered(5), 0, 0), InputError);
}

TEST(MeanWordLength, Examples) {
  EXPECT_DOUBLE_EQ(textstats::mean_word_length(toks({"aa", "bbb", "cc"})), 7.0 / 3.0);
  EXPECT_THROW(textstats::mean_word_length(TokenSequence{}), InputError);
}

TEST(MeanWordLength, Linear) {
  const auto t = toks({"alpha", "be", "gamma", "d"});
  EXPECT_EQ(textstats::mean_word_length(t, 2.0), 2.0 * textstats::mean_word_length(t, 1.0));
}

TEST(MeanWordLength, MandarinPinyinScale) {
  // four types with character lengths (1,1,1,2); Pinyin lengths (2,2,3,5)
  const auto t = toks({"\xe6\x88\x91", "\xe4\xbd\xa0", "\xe4\xbb\x96", "\xe6\x88\x91\xe5\x80\x91"});
  const double scale = (2.0 + 2 + 3 + 5) / (1.0 + 1 + 1 + 2);
  EXPECT_DOUBLE_EQ(scale, 2.4);
  EXPECT_DOUBLE_EQ(textstats::mean_word_length(t), 1.25);
  EXPECT_NEAR(textstats::mean_word_length(t, scale), 3.0, 1e-15);
}

TEST(TypeTokenRatio, Examples) {
  EXPECT_EQ(textstats::type_token_ratio(toks({"a", "b", "a", "c"})), 0.75);
  EXPECT_EQ(textstats::type_token_ratio(toks({"a", "b", "c"})), 1.0);
  EXPECT_EQ(textstats::type_token_ratio(toks({"x", "x", "x", "x", "x"})), 1.0 / 5);
  EXPECT_EQ(textstats::type_token_ratio(toks({"A", "a"})), 1.0);  // case-sensitive
  EXPECT_THROW(textstats::type_token_ratio(TokenSequence{}), InputError);
}

TEST(UnigramEntropy, Examples) {
  EXPECT_EQ(textstats::unigram_entropy(toks({"a", "a", "b", "b"})), 1.0);
  EXPECT_EQ(textstats::unigram_entropy(toks({"a", "a", "a"})), 0.0);
  EXPECT_EQ(textstats::unigram_entropy(toks({"a", "b", "c", "d"})), 2.0);
  EXPECT_THROW(textstats::unigram_entropy(TokenSequence{}), InputError);
}

TEST(UnigramEntropy, BoundedByLog2N) {
  const auto corpus = fixture("stability/mri.txt", "mri");
  const auto all = textstats::tokenize(corpus.text);
  for (std::size_t target : {10u, 50u, 200u, 1000u}) {
    const auto s = textstats::sample_contiguous(all, target, 5);
    const double h = textstats::unigram_entropy(s.tokens);
    EXPECT_LE(h, std::log2(static_cast<double>(s.tokens.size())));
    EXPECT_GE(h, 0.0);
  }
  EXPECT_EQ(textstats::unigram_entropy(numbered(37)), std::log2(37.0));  // equality iff distinct
}

TEST(Profile, EnglishMatchesStandaloneRecomputation) {
  // tests/oracles/english_profile.py -> tests/fixtures/mini/eng_500_seed7.txt
  const auto p = textstats::profile(fixture("mini/dataset/eng.txt", "eng"),
                                    LanguageRecord(IsoCode("eng"), "English"), 500, 7);
  EXPECT_EQ(p.sample_offset(), 363u);
  EXPECT_EQ(p.token_count(), 500u);
  EXPECT_EQ(p.seed(), 7u);
  EXPECT_NEAR(p.mean_word_length(), 4.872, 1e-12);
  EXPECT_NEAR(p.ttr(), 0.43, 1e-12);
  EXPECT_NEAR(p.unigram_entropy(), 6.898281027008631, 1e-12);
}

TEST(Profile, TargetExceedsCorpus) {
  const auto p = textstats::profile(fixture("mini/dataset/eng.txt", "eng"),
                                    LanguageRecord(IsoCode("eng"), "English"), 100000, 9);
  EXPECT_EQ(p.token_count(), 1753u);
  EXPECT_EQ(p.sample_offset(), 0u);
}

TEST(Profile, NoLexicalTokens) {
  const auto c = ingest::make_corpus("!!! ... ???", IsoCode("zxx"));
  try {
    textstats::profile(c, LanguageRecord(IsoCode("zxx"), "none"), 10, 0);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("no lexical tokens"), std::string::npos);
  }
}

TEST(Profile, ScriptScaleApplied) {
  const auto c = fixture("mini/dataset/eng.txt", "eng");
  const auto a = textstats::profile(c, LanguageRecord(IsoCode("eng"), "x"), 500, 1);
  const auto b = textstats::profile(c, LanguageRecord(IsoCode("eng"), "x", {}, {}, 0.5), 500, 1);
  EXPECT_DOUBLE_EQ(b.mean_word_length(), a.mean_word_length() * 0.5);
  EXPECT_EQ(a.ttr(), b.ttr());
}

TEST(Profile, Deterministic) {
  const auto c = fixture("stability/cak.txt", "cak");
  const LanguageRecord r(IsoCode("cak"), "Kaqchikel");
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    EXPECT_EQ(textstats::profile(c, r, 500, seed), textstats::profile(c, r, 500, seed));
  }
}

TEST(Profile, MwlAtLeastOne) {
  for (const auto& [iso, path] : ingest::list_corpus_dir(paths::fixtures() / "stability")) {
    const auto p = textstats::profile(ingest::load_corpus(path, iso),
                                      LanguageRecord(iso, iso.str()), 300, 4);
    EXPECT_GE(p.mean_word_length(), 1.0) << iso.str();
  }
}

TEST(Profile, SmallAndLargeWindowsClose) {
  // the fixtures are shorter than 10000 tokens, so the large window is the whole text
  for (const auto& [iso, path] : ingest::list_corpus_dir(paths::fixtures() / "stability")) {
    const auto c = ingest::load_corpus(path, iso);
    const LanguageRecord r(iso, iso.str());
    const double small = textstats::profile(c, r, 500, 0).mean_word_length();
    const double large = textstats::profile(c, r, 10000, 0).mean_word_length();
    EXPECT_LT(std::abs(small - large), 0.5) << iso.str();
  }
}

TEST(Profile, FullTextMwlMatchesOracle) {
  // full-text MWL from tests/oracles/textstats_oracle.py (regex module, not ICU)
  const std::map<std::string, std::pair<std::size_t, double>> expected = {
      {"arb", {1332, 4.5908408408408405}}, {"deu", {1635, 6.1626911314984714}},
      {"ell", {1907, 5.3943366544310436}}, {"eng", {1753, 4.9777524244152884}},
      {"heb", {1278, 4.5266040688575897}}, {"kal", {1069, 14.588400374181479}},
      {"kat", {1369, 7.3447772096420749}}, {"rus", {1597, 6.2047589229805888}},
      {"vai", {2964, 1.8097165991902835}}, {"yor", {2548, 3.4525117739403455}},
      {"zul", {1077, 8.3853296193129054}},
  };
  for (const auto& [iso, want] : expected) {
    const IsoCode code(iso);
    const auto c = ingest::load_corpus(paths::data() / "udhr" / (iso + ".txt"), code);
    const auto all = textstats::tokenize(c.text);
    EXPECT_EQ(all.size(), want.first) << iso;
    EXPECT_NEAR(textstats::mean_word_length(all), want.second, 1e-12) << iso;
  }
}
