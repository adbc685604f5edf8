#include <gtest/gtest.h>

#include <cmath>

#include "divscore/core.hpp"
#include "divscore/error.hpp"

using namespace divscore;

namespace {

// Runs `fn`, expects an InvariantError and returns its message.
template <typename F>
std::string invariant_message(F fn) {
  try {
    fn();
  } catch (const InvariantError& e) {
    return e.what();
  }
  ADD_FAILURE() << "no InvariantError thrown";
  return {};
}

}  // namespace

TEST(IsoCode, AcceptsThreeLowercaseLetters) {
  EXPECT_EQ(IsoCode("eng").str(), "eng");
  EXPECT_TRUE(IsoCode::is_valid("zul"));
  for (const char* bad : {"", "en", "engl", "Eng", "en1", "e g", "ëng"}) {
    EXPECT_FALSE(IsoCode::is_valid(bad)) << bad;
    EXPECT_THROW(IsoCode{bad}, InvariantError) << bad;
  }
}

TEST(IsoCode, DiagnosticNamesInvariant) {
  const auto msg = invariant_message([] { IsoCode("EN"); });
  EXPECT_NE(msg.find("invariant violated: iso is three lowercase ASCII letters"), std::string::npos)
      << msg;
}

TEST(LanguageRecord, DefaultsAndScale) {
  LanguageRecord r(IsoCode("zul"), "Zulu");
  EXPECT_EQ(r.script_scale(), 1.0);
  EXPECT_FALSE(r.family());
  EXPECT_FALSE(r.endangerment());
  EXPECT_THROW(LanguageRecord(IsoCode("cmn"), "Mandarin", {}, {}, 0.0), InvariantError);
  EXPECT_THROW(LanguageRecord(IsoCode("cmn"), "Mandarin", {}, {}, -1.0), InvariantError);
}

TEST(LanguageRecord, EmptyFamilyIsUnlabeled) {
  LanguageRecord r(IsoCode("eus"), "Basque", std::string{});
  EXPECT_FALSE(r.family());
}

TEST(Endangerment, RoundTrip) {
  for (auto e : {Endangerment::safe, Endangerment::vulnerable, Endangerment::endangered,
                 Endangerment::extinct, Endangerment::unknown}) {
    EXPECT_EQ(parse_endangerment(to_string(e)), e);
  }
  EXPECT_FALSE(parse_endangerment("dormant"));
}

TEST(LanguageSet, RejectsDuplicates) {
  std::vector<LanguageRecord> v{{IsoCode("eng"), "English"}, {IsoCode("eng"), "English again"}};
  const auto msg = invariant_message([&] { LanguageSet s(v); });
  EXPECT_NE(msg.find("eng"), std::string::npos);
}

TEST(LanguageSet, FindAndNonEmpty) {
  LanguageSet s({{IsoCode("eng"), "English"}, {IsoCode("fra"), "French"}});
  EXPECT_TRUE(s.contains(IsoCode("fra")));
  EXPECT_FALSE(s.contains(IsoCode("deu")));
  EXPECT_NO_THROW(s.require_non_empty("score"));
  EXPECT_THROW(LanguageSet{}.require_non_empty("score"), InvariantError);
}

TEST(TextProfile, Invariants) {
  const IsoCode eng("eng");
  EXPECT_NO_THROW(TextProfile(eng, 4.5, 0.5, 3.0, 100, 0, 0));
  EXPECT_THROW(TextProfile(eng, 0.9, 0.5, 3.0, 100, 0, 0), InvariantError);   // mwl < 1
  EXPECT_THROW(TextProfile(eng, 4.5, 0.0, 3.0, 100, 0, 0), InvariantError);   // ttr = 0
  EXPECT_THROW(TextProfile(eng, 4.5, 1.01, 3.0, 100, 0, 0), InvariantError);  // ttr > 1
  EXPECT_THROW(TextProfile(eng, 4.5, 0.5, 7.0, 100, 0, 0), InvariantError);   // H > log2 100
  EXPECT_THROW(TextProfile(eng, 4.5, 0.5, 0.0, 0, 0, 0), InvariantError);     // no tokens
  EXPECT_NO_THROW(TextProfile(eng, 4.5, 1.0, 2.0, 4, 0, 0));                  // H = log2 4
}

TEST(FeatureMatrix, BinaryCells) {
  FeatureMatrix m({IsoCode("aaa"), IsoCode("bbb")}, {"f", "g"}, {1, 0, 0, 1},
                  MatrixKind::binary_syntactic);
  EXPECT_EQ(m.at(0, 0), 1);
  EXPECT_EQ(m.at(1, 1), 1);
  EXPECT_EQ(m.row(1)[0], 0);
  EXPECT_THROW(FeatureMatrix({IsoCode("aaa")}, {"f"}, {2}, MatrixKind::binary_syntactic),
               InvariantError);
  EXPECT_THROW(FeatureMatrix({IsoCode("aaa")}, {"f", "g"}, {1}, MatrixKind::binary_syntactic),
               InvariantError);
  EXPECT_THROW(FeatureMatrix({IsoCode("aaa"), IsoCode("aaa")}, {"f"}, {1, 0},
                             MatrixKind::binary_syntactic),
               InvariantError);
}

TEST(FeatureMatrix, OrdinalRanges) {
  EXPECT_NO_THROW(FeatureMatrix({IsoCode("aaa")}, {"22A"}, {7},
                                MatrixKind::morphological_ordinal, {{1, 7}}));
  EXPECT_THROW(FeatureMatrix({IsoCode("aaa")}, {"22A"}, {8}, MatrixKind::morphological_ordinal,
                             {{1, 7}}),
               InvariantError);
  EXPECT_THROW(FeatureMatrix({IsoCode("aaa")}, {"22A"}, {3}, MatrixKind::morphological_ordinal),
               InvariantError);
}

TEST(MorphFeatureSpec, Invariants) {
  EXPECT_NO_THROW(MorphFeatureSpec("22A", "Inflectional Synthesis", Transformation::none, 1, 7));
  EXPECT_THROW(MorphFeatureSpec("22A", "x", Transformation::none, 7, 1), InvariantError);
  EXPECT_THROW(MorphFeatureSpec("49A", "x", Transformation::remove, 1, 8, {{9, 9}}),
               InvariantError);
}

TEST(Transformation, RoundTrip) {
  for (auto t : {Transformation::none, Transformation::binarization, Transformation::reorder,
                 Transformation::recategorization, Transformation::remove}) {
    EXPECT_EQ(parse_transformation(to_string(t)), t);
  }
}

TEST(BinnedDistribution, HalfOpenBins) {
  EXPECT_EQ(BinnedDistribution::bin_index(3.0, 1.0), 3);
  EXPECT_EQ(BinnedDistribution::bin_index(2.999, 1.0), 2);
  EXPECT_EQ(BinnedDistribution::bin_index(0.5, 0.5), 1);
  EXPECT_EQ(BinnedDistribution::bin_index(-0.1, 1.0), -1);
  EXPECT_EQ(BinnedDistribution::bin_label(3, 1.0), "[3,4)");
  EXPECT_EQ(BinnedDistribution::bin_label(1, 0.5), "[0.5,1)");
  EXPECT_THROW(BinnedDistribution::bin_index(std::nan(""), 1.0), InputError);
}

TEST(BinnedDistribution, Invariants) {
  BinnedDistribution d(1.0, {{2, 1.0}, {3, 2.0}});
  EXPECT_EQ(d.anchor(), 0.0);
  EXPECT_EQ(d.total_weight(), 3.0);
  EXPECT_EQ(d.scaled(1.5).weights().at(3), 3.0);
  EXPECT_THROW(BinnedDistribution(0.0, {{1, 1.0}}), InvariantError);
  EXPECT_THROW(BinnedDistribution(1.0, {{1, -1.0}, {2, 2.0}}), InvariantError);
  EXPECT_THROW(BinnedDistribution(1.0, {{1, 0.0}}), InvariantError);
  EXPECT_THROW(BinnedDistribution(1.0, {}), InvariantError);
}

TEST(GapReport, BinInAtMostOneList) {
  EXPECT_NO_THROW(GapReport({{"[0,1)", 2.0}}, {{"[1,2)", 2.0, {"eng"}}}));
  EXPECT_THROW(GapReport({{"[0,1)", 2.0}}, {{"[0,1)", 1.0, {}}}), InvariantError);
  EXPECT_THROW(GapReport({{"[0,1)", 0.0}}, {}), InvariantError);
  EXPECT_THROW(GapReport({}, {{"[0,1)", -1.0, {}}}), InvariantError);
}

TEST(DiversityReport, ValueInUnitInterval) {
  DiversityReport::Fields f;
  f.score = ScoreName::ti_syn;
  f.value = 1.2;
  EXPECT_THROW(DiversityReport{f}, InvariantError);
  f.value = -0.1;
  EXPECT_THROW(DiversityReport{f}, InvariantError);
  f.value = 0.5;
  EXPECT_NO_THROW(DiversityReport{f});
}

TEST(DiversityReport, JmmValueMatchesRows) {
  DiversityReport::Fields f;
  f.score = ScoreName::jmm_morph;
  f.per_bin = {{"[2,3)", 0.0, 1.0, 0.0, 1.0},
               {"[3,4)", 1.5, 2.0, 1.5, 2.0},
               {"[4,5)", 1.5, 0.0, 0.0, 1.5}};
  f.normalization_c = 1.5;
  f.value = 1.0 / 3.0;
  EXPECT_NO_THROW(DiversityReport{f});
  f.value = 0.4;
  EXPECT_THROW(DiversityReport{f}, InvariantError);
  f.value = 1.0 / 3.0;
  f.per_bin[0].min = 0.5;  // not min(0, 1)
  EXPECT_THROW(DiversityReport{f}, InvariantError);
}

TEST(DiversityReport, ScalarAtLeastOne) {
  DiversityReport::Fields f;
  f.score = ScoreName::ti_morph;
  f.value = 0.5;
  f.normalization_c = 0.5;
  EXPECT_THROW(DiversityReport{f}, InvariantError);
}

TEST(ScoreName, RoundTrip) {
  for (auto s : {ScoreName::jmm_morph, ScoreName::jmm_syn, ScoreName::ti_morph, ScoreName::ti_syn,
                 ScoreName::c_wals}) {
    EXPECT_EQ(parse_score_name(to_string(s)), s);
  }
  for (auto s : {ScaledSide::none, ScaledSide::dataset, ScaledSide::reference}) {
    EXPECT_EQ(parse_scaled_side(to_string(s)), s);
  }
}
