#pragma once

// File loading: registry, feature matrices, corpora, name lookups.

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "divscore/core.hpp"

namespace divscore::grammar {
class MorphSpecSet;
}

namespace divscore::ingest {

LanguageSet load_registry(const std::filesystem::path& path);
LanguageSet parse_registry(std::string_view text);
/// Inverse of parse_registry; reloading the output gives an equal set.
std::string format_registry(const LanguageSet& languages);

struct MissingCell {
  IsoCode language;
  std::string feature;
};

struct LoadedMatrix {
  FeatureMatrix matrix;
  std::vector<IsoCode> dropped;  // rows removed under drop_incomplete
};

/// `iso,<feature>...` with integer cells or "?". Ordinal matrices take their
/// per-feature ranges from `specs` (columns are chapter ids); binary matrices
/// ignore it. Without drop_incomplete any "?" is an error listing every
/// missing (language, feature) pair.
LoadedMatrix parse_feature_matrix(std::string_view text, MatrixKind kind, bool drop_incomplete,
                                  const grammar::MorphSpecSet* specs = nullptr);
LoadedMatrix load_feature_matrix(const std::filesystem::path& path, MatrixKind kind,
                                 bool drop_incomplete,
                                 const grammar::MorphSpecSet* specs = nullptr);

struct CorpusSource {
  IsoCode iso;
  std::filesystem::path path;
  std::string text;  // valid UTF-8, NFC
};

/// Validates UTF-8 and normalises to NFC.
CorpusSource load_corpus(const std::filesystem::path& path, const IsoCode& iso);
CorpusSource make_corpus(std::string text, const IsoCode& iso, std::filesystem::path path = {});

/// `<iso>.txt` files of a directory, sorted by iso. Other files are ignored.
std::vector<std::pair<IsoCode, std::filesystem::path>> list_corpus_dir(
    const std::filesystem::path& dir);

struct FamilyCount {
  std::size_t count = 0;
  std::map<std::string, std::vector<IsoCode>> members;  // family -> sorted isos
  std::vector<IsoCode> unlabeled;                       // sorted
};

FamilyCount count_families(const LanguageSet& languages);

/// One entry per non-blank, non-comment ('#') line, surrounding blanks trimmed.
std::vector<std::string> read_list(const std::filesystem::path& path);

/// name -> iso lookup from a `name,iso` table. Several names may share a code.
std::map<std::string, IsoCode, std::less<>> load_name_table(const std::filesystem::path& path);

struct Resolution {
  std::vector<IsoCode> isos;           // unique, in first-seen order
  std::vector<std::string> unknown;    // entries neither a code nor a known name
  std::vector<std::string> merged;     // entries whose code was already seen
};

/// Entries may be names from `names` or ISO codes. The table is consulted first.
Resolution resolve_languages(const std::vector<std::string>& entries,
                             const std::map<std::string, IsoCode, std::less<>>& names);

}  // namespace divscore::ingest
