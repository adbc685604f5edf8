#include "divscore/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "divscore/csv.hpp"
#include "divscore/error.hpp"
#include "divscore/grammar.hpp"
#include "divscore/unicode.hpp"

namespace divscore::ingest {

namespace fs = std::filesystem;

namespace {

const std::vector<std::string> kRegistryColumns = {"iso", "name", "family", "endangerment",
                                                   "script_scale"};

std::string line_ref(std::size_t row) { return "row " + std::to_string(row + 1); }

}  // namespace

// --- registry --------------------------------------------------------------

LanguageSet parse_registry(std::string_view text) {
  const auto rows = csv::parse(text);
  if (rows.empty()) throw InputError("registry is empty (expected a header row)");

  const auto& header = rows.front();
  if (header.size() < 2 || header.size() > kRegistryColumns.size()) {
    throw InputError("registry header must be iso,name[,family[,endangerment[,script_scale]]]");
  }
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (csv::trim(header[c]) != kRegistryColumns[c]) {
      throw InputError("registry header column " + std::to_string(c + 1) + " must be '" +
                       kRegistryColumns[c] + "', got '" + header[c] + "'");
    }
  }

  std::vector<LanguageRecord> records;
  std::set<std::string> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() > header.size()) {
      throw InputError("registry " + line_ref(r) + ": too many fields");
    }
    auto field = [&](std::size_t c) -> std::string_view {
      return c < row.size() ? csv::trim(row[c]) : std::string_view{};
    };

    const std::string_view code = field(0);
    if (!IsoCode::is_valid(code)) {
      throw InputError("registry " + line_ref(r) + ": malformed iso code '" + std::string(code) +
                       "'");
    }
    if (!seen.insert(std::string(code)).second) {
      throw InputError("registry: duplicate iso code " + std::string(code));
    }

    std::optional<std::string> family;
    if (!field(2).empty()) family = std::string(field(2));

    std::optional<Endangerment> status;
    if (!field(3).empty()) {
      status = parse_endangerment(field(3));
      if (!status) {
        throw InputError("registry " + line_ref(r) + ": unknown endangerment '" +
                         std::string(field(3)) + "'");
      }
    }

    double scale = 1.0;
    if (!field(4).empty() && !csv::parse_double(field(4), scale)) {
      throw InputError("registry " + line_ref(r) + ": script_scale is not a number");
    }
    try {
      records.emplace_back(IsoCode(code), std::string(field(1)), family, status, scale);
    } catch (const InvariantError& e) {
      throw InputError("registry " + line_ref(r) + ": " + e.what());
    }
  }
  return LanguageSet(std::move(records));
}

LanguageSet load_registry(const fs::path& path) { return parse_registry(csv::read_file(path)); }

std::string format_registry(const LanguageSet& languages) {
  std::string out = csv::join(kRegistryColumns) + "\n";
  for (const auto& rec : languages.members()) {
    csv::Row row{rec.iso().str(), rec.name(), rec.family().value_or(""),
                 rec.endangerment() ? std::string(to_string(*rec.endangerment())) : "",
                 rec.script_scale() == 1.0 ? "" : csv::format_double(rec.script_scale())};
    out += csv::join(row) + "\n";
  }
  return out;
}

// --- feature matrices ------------------------------------------------------

LoadedMatrix parse_feature_matrix(std::string_view text, MatrixKind kind, bool drop_incomplete,
                                  const grammar::MorphSpecSet* specs) {
  const auto rows = csv::parse(text);
  if (rows.empty()) throw InputError("feature matrix is empty");
  const auto& header = rows.front();
  if (header.empty() || csv::trim(header[0]) != "iso") {
    throw InputError("feature matrix: first header column must be 'iso'");
  }
  if (header.size() < 2) throw InputError("feature matrix has no feature columns");

  std::vector<std::string> features;
  std::vector<ValueRange> ranges;
  for (std::size_t c = 1; c < header.size(); ++c) {
    features.emplace_back(csv::trim(header[c]));
    if (kind == MatrixKind::morphological_ordinal) {
      if (!specs) throw InputError("ordinal matrix needs feature specs to know value ranges");
      ranges.push_back(specs->at(features.back()).final_range());
    }
  }

  std::vector<IsoCode> languages;
  std::vector<int> values;
  std::vector<IsoCode> dropped;
  std::vector<MissingCell> missing;

  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != header.size()) {
      throw InputError("feature matrix " + line_ref(r) + ": expected " +
                       std::to_string(header.size()) + " fields, got " +
                       std::to_string(row.size()));
    }
    const std::string_view code = csv::trim(row[0]);
    if (!IsoCode::is_valid(code)) {
      throw InputError("feature matrix " + line_ref(r) + ": malformed iso code '" +
                       std::string(code) + "'");
    }
    const IsoCode iso(code);

    std::vector<int> cells;
    bool incomplete = false;
    for (std::size_t c = 1; c < row.size(); ++c) {
      const std::string_view cell = csv::trim(row[c]);
      if (cell == "?") {
        incomplete = true;
        missing.push_back({iso, features[c - 1]});
        cells.push_back(0);
        continue;
      }
      long long v = 0;
      if (!csv::parse_int(cell, v)) {
        throw InputError("feature matrix " + line_ref(r) + ", feature " + features[c - 1] +
                         ": not an integer '" + std::string(cell) + "'");
      }
      const ValueRange range = kind == MatrixKind::binary_syntactic ? ValueRange{0, 1}
                                                                     : ranges[c - 1];
      if (!range.contains(v)) {
        throw InputError("feature matrix: " + iso.str() + "/" + features[c - 1] + " = " +
                         std::to_string(v) + " outside [" + std::to_string(range.min) + ", " +
                         std::to_string(range.max) + "]");
      }
      cells.push_back(static_cast<int>(v));
    }
    if (incomplete) {
      dropped.push_back(iso);
      continue;
    }
    languages.push_back(iso);
    values.insert(values.end(), cells.begin(), cells.end());
  }

  if (!missing.empty() && !drop_incomplete) {
    std::string list;
    for (const auto& m : missing) {
      list += (list.empty() ? "" : ", ") + ("(" + m.language.str() + ", " + m.feature + ")");
    }
    throw InputError("feature matrix has missing values: " + list +
                     " (use --drop-incomplete to drop those rows)");
  }
  if (languages.empty()) throw InputError("feature matrix has no complete rows");

  return {FeatureMatrix(std::move(languages), std::move(features), std::move(values), kind,
                        std::move(ranges)),
          std::move(dropped)};
}

LoadedMatrix load_feature_matrix(const fs::path& path, MatrixKind kind, bool drop_incomplete,
                                 const grammar::MorphSpecSet* specs) {
  try {
    return parse_feature_matrix(csv::read_file(path), kind, drop_incomplete, specs);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

// --- corpora ---------------------------------------------------------------

CorpusSource make_corpus(std::string text, const IsoCode& iso, fs::path path) {
  const std::string where = path.empty() ? iso.str() : path.string();
  if (text.empty()) throw InputError(where + ": empty corpus");
  try {
    unicode::validate_utf8(text);
  } catch (const EncodingError& e) {
    throw EncodingError(where + ": " + e.what());
  }
  return {iso, std::move(path), unicode::to_nfc(text)};
}

CorpusSource load_corpus(const fs::path& path, const IsoCode& iso) {
  return make_corpus(csv::read_file(path), iso, path);
}

std::vector<std::pair<IsoCode, fs::path>> list_corpus_dir(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw InputError(dir.string() + ": not a directory");
  std::vector<std::pair<IsoCode, fs::path>> out;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".txt") continue;
    const std::string stem = entry.path().stem().string();
    if (IsoCode::is_valid(stem)) out.emplace_back(IsoCode(stem), entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- families --------------------------------------------------------------

FamilyCount count_families(const LanguageSet& languages) {
  FamilyCount out;
  std::set<IsoCode> unlabeled;
  for (const auto& rec : languages.members()) {
    if (rec.family()) {
      out.members[*rec.family()].push_back(rec.iso());
    } else {
      unlabeled.insert(rec.iso());
    }
  }
  for (auto& [family, isos] : out.members) {
    std::sort(isos.begin(), isos.end());
    isos.erase(std::unique(isos.begin(), isos.end()), isos.end());
  }
  out.count = out.members.size();
  out.unlabeled.assign(unlabeled.begin(), unlabeled.end());
  return out;
}

// --- lists and names -------------------------------------------------------

std::vector<std::string> read_list(const fs::path& path) {
  const std::string text = csv::read_file(path);
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line(text.data() + pos,
                          (nl == std::string::npos ? text.size() : nl) - pos);
    line = csv::trim(line);
    if (!line.empty() && line.front() != '#') out.emplace_back(line);
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::map<std::string, IsoCode, std::less<>> load_name_table(const fs::path& path) {
  const auto rows = csv::parse(csv::read_file(path));
  if (rows.empty() || rows.front().size() != 2 || csv::trim(rows.front()[0]) != "name" ||
      csv::trim(rows.front()[1]) != "iso") {
    throw InputError(path.string() + ": header must be name,iso");
  }
  std::map<std::string, IsoCode, std::less<>> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != 2 || !IsoCode::is_valid(csv::trim(row[1]))) {
      throw InputError(path.string() + " " + line_ref(r) + ": expected name,iso");
    }
    const std::string name(csv::trim(row[0]));
    if (!out.emplace(name, IsoCode(csv::trim(row[1]))).second) {
      throw InputError(path.string() + ": duplicate name '" + name + "'");
    }
  }
  return out;
}

Resolution resolve_languages(const std::vector<std::string>& entries,
                             const std::map<std::string, IsoCode, std::less<>>& names) {
  Resolution out;
  std::set<IsoCode> seen;
  for (const auto& entry : entries) {
    std::optional<IsoCode> iso;
    if (auto it = names.find(entry); it != names.end()) {
      iso = it->second;
    } else if (IsoCode::is_valid(entry)) {
      iso = IsoCode(entry);
    }
    if (!iso) {
      out.unknown.push_back(entry);
    } else if (!seen.insert(*iso).second) {
      out.merged.push_back(entry);
    } else {
      out.isos.push_back(*iso);
    }
  }
  return out;
}

}  // namespace divscore::ingest
