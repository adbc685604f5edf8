#include "divscore/grammar.hpp"

#include <algorithm>
#include <set>

#include "divscore/csv.hpp"
#include "divscore/error.hpp"

namespace divscore::grammar {

MorphSpecSet::MorphSpecSet(std::vector<MorphFeatureSpec> specs) : specs_(std::move(specs)) {
  if (specs_.size() != kFeatureCount) {
    throw InvariantError("the complexity feature set has exactly 26 chapters",
                         "got " + std::to_string(specs_.size()));
  }
  std::set<std::string> seen;
  for (const auto& s : specs_) {
    if (!seen.insert(s.chapter()).second) {
      throw InvariantError("chapter identifiers are unique", s.chapter());
    }
  }
}

const MorphSpecSet& MorphSpecSet::bundled() {
  using T = Transformation;
  static const MorphSpecSet set([] {
    std::map<int, int> cases;
    for (int k = 1; k <= 8; ++k) cases.emplace(k, k);
    return std::vector<MorphFeatureSpec>{
        {"22A", "Inflectional Synthesis", T::none, 1, 7},
        {"26A", "Prefixing vs. Suffixing in Inflectional Morphology", T::binarization, 0, 1},
        {"27A", "Reduplication", T::binarization, 0, 1},
        {"28A", "Case Syncretism", T::reorder, 1, 4},
        {"29A", "Syncretism in Verbal Person/Number marking", T::none, 1, 3},
        {"30A", "Number of Genders", T::none, 1, 5},
        {"33A", "Coding of Nominal Plurality", T::binarization, 0, 1},
        {"34A", "Occurrence of Nominal Plurality", T::none, 1, 6},
        {"49A", "Number of Cases", T::remove, 1, 8, cases},
        {"51A", "Position of Case Affixes", T::binarization, 0, 1},
        {"57A", "Position of Pronominal Possessive Affixes", T::binarization, 0, 1},
        {"59A", "Possessive Classification", T::none, 1, 4},
        {"65A", "Perfective/Imperfective Aspect", T::none, 0, 1},
        {"66A", "The Past Tense", T::reorder, 1, 4},
        {"67A", "The Future Tense", T::none, 0, 1},
        {"69A", "Position of Tense/Aspect Affixes", T::binarization, 0, 1},
        {"70A", "The Morphological Imperative", T::recategorization, 1, 4},
        {"73A", "The Optative", T::none, 0, 1},
        {"74A", "Situational Possibility", T::binarization, 0, 1},
        {"75A", "Epistemic Possibility", T::binarization, 0, 1},
        {"78A", "Coding of Evidentiality", T::binarization, 0, 1},
        {"94A", "Subordination", T::binarization, 0, 1},
        {"101A", "Expression of Pronominal Subjects", T::binarization, 0, 1},
        {"102A", "Verbal Person Marking", T::recategorization, 1, 3},
        {"111A", "Nonperiphrastic Causative Constructions", T::binarization, 0, 1},
        {"112A", "Negative Morphemes", T::binarization, 0, 1},
    };
  }());
  return set;
}

const MorphFeatureSpec* MorphSpecSet::find(std::string_view chapter) const {
  auto it = std::find_if(specs_.begin(), specs_.end(),
                         [&](const MorphFeatureSpec& s) { return s.chapter() == chapter; });
  return it == specs_.end() ? nullptr : &*it;
}

const MorphFeatureSpec& MorphSpecSet::at(std::string_view chapter) const {
  const MorphFeatureSpec* s = find(chapter);
  if (!s) throw InputError("unknown WALS chapter '" + std::string(chapter) + "'");
  return *s;
}

int transform_feature(int raw, const MorphFeatureSpec& spec) {
  if (!spec.value_map().empty()) {
    auto it = spec.value_map().find(raw);
    if (it == spec.value_map().end()) {
      throw InputError("chapter " + spec.chapter() + ": raw category " + std::to_string(raw) +
                       " is not defined (transformation " +
                       std::string(to_string(spec.transformation())) + ")");
    }
    return it->second;
  }
  if (spec.transformation() != Transformation::none) {
    throw InputError("chapter " + spec.chapter() + ": no value map configured for transformation " +
                     std::string(to_string(spec.transformation())));
  }
  if (raw < spec.final_min() || raw > spec.final_max()) {
    throw InputError("chapter " + spec.chapter() + ": raw category " + std::to_string(raw) +
                     " is not defined");
  }
  return raw;
}

NormalizedValue normalize_feature(int value, const MorphFeatureSpec& spec) {
  if (value < spec.final_min() || value > spec.final_max()) {
    throw InputError("chapter " + spec.chapter() + ": value " + std::to_string(value) +
                     " outside final range " + std::to_string(spec.final_min()) + "-" +
                     std::to_string(spec.final_max()));
  }
  if (spec.final_min() == spec.final_max()) return {0.0, true};
  return {static_cast<double>(value - spec.final_min()) /
              static_cast<double>(spec.final_max() - spec.final_min()),
          false};
}

std::vector<std::string> missing_chapters(const ChapterValues& language_values,
                                          const MorphSpecSet& specs) {
  std::vector<std::string> missing;
  for (const auto& s : specs.specs()) {
    if (!language_values.contains(s.chapter())) missing.push_back(s.chapter());
  }
  return missing;
}

double c_wals(const ChapterValues& language_values, const MorphSpecSet& specs) {
  const auto missing = missing_chapters(language_values, specs);
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw InputError("missing chapters: " + list);
  }
  double sum = 0.0;
  for (const auto& s : specs.specs()) {
    sum += normalize_feature(language_values.find(s.chapter())->second, s).value;
  }
  return sum / static_cast<double>(specs.specs().size());
}

// --- files -----------------------------------------------------------------

namespace {

std::map<int, int> parse_value_map(std::string_view text, const std::string& chapter) {
  std::map<int, int> out;
  text = csv::trim(text);
  while (!text.empty()) {
    const auto semi = text.find(';');
    const std::string_view pair = csv::trim(text.substr(0, semi));
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    if (pair.empty()) continue;
    const auto eq = pair.find('=');
    long long raw = 0;
    long long fin = 0;
    if (eq == std::string_view::npos || !csv::parse_int(pair.substr(0, eq), raw) ||
        !csv::parse_int(pair.substr(eq + 1), fin)) {
      throw InputError("chapter " + chapter + ": malformed value_map entry '" +
                       std::string(pair) + "'");
    }
    out[static_cast<int>(raw)] = static_cast<int>(fin);
  }
  return out;
}

}  // namespace

MorphSpecSet parse_spec_text(std::string_view text) {
  const auto rows = csv::parse(text, '\t');
  if (rows.empty()) throw InputError("spec file is empty");
  std::vector<MorphFeatureSpec> specs;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto row = rows[i];
    if (row.size() == 5) row.emplace_back();
    if (row.size() != 6) {
      throw InputError("spec file line " + std::to_string(i + 1) + ": expected 6 fields");
    }
    const auto transformation = parse_transformation(csv::trim(row[2]));
    long long lo = 0;
    long long hi = 0;
    if (!transformation) {
      throw InputError("spec file line " + std::to_string(i + 1) + ": unknown transformation '" +
                       row[2] + "'");
    }
    if (!csv::parse_int(row[3], lo) || !csv::parse_int(row[4], hi)) {
      throw InputError("spec file line " + std::to_string(i + 1) + ": bad final range");
    }
    const std::string chapter(csv::trim(row[0]));
    specs.emplace_back(chapter, std::string(csv::trim(row[1])), *transformation,
                       static_cast<int>(lo), static_cast<int>(hi),
                       parse_value_map(row[5], chapter));
  }
  return MorphSpecSet(std::move(specs));
}

MorphSpecSet load_spec_file(const std::filesystem::path& path) {
  return parse_spec_text(csv::read_file(path));
}

std::string format_spec_text(const MorphSpecSet& specs) {
  std::string out = "chapter\tname\ttransformation\tfinal_min\tfinal_max\tvalue_map\n";
  for (const auto& s : specs.specs()) {
    std::string map;
    for (const auto& [raw, fin] : s.value_map()) {
      if (!map.empty()) map += ";";
      map += std::to_string(raw) + "=" + std::to_string(fin);
    }
    out += s.chapter() + "\t" + s.name() + "\t" + std::string(to_string(s.transformation())) +
           "\t" + std::to_string(s.final_min()) + "\t" + std::to_string(s.final_max()) + "\t" +
           map + "\n";
  }
  return out;
}

std::vector<MorphologyRow> parse_morphology_table(std::string_view text) {
  const auto rows = csv::parse(text);
  if (rows.empty()) throw InputError("morphology table is empty");
  const auto& header = rows.front();
  if (header.empty() || csv::trim(header[0]) != "iso") {
    throw InputError("morphology table: first header column must be 'iso'");
  }
  std::vector<MorphologyRow> out;
  std::set<IsoCode> seen;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const std::string_view code = csv::trim(row[0]);
    if (!IsoCode::is_valid(code)) {
      throw InputError("morphology table line " + std::to_string(i + 1) + ": malformed iso '" +
                       std::string(code) + "'");
    }
    MorphologyRow r{IsoCode(code), {}};
    if (!seen.insert(r.iso).second) {
      throw InputError("morphology table: duplicate iso " + r.iso.str());
    }
    for (std::size_t c = 1; c < header.size() && c < row.size(); ++c) {
      const std::string_view cell = csv::trim(row[c]);
      if (cell.empty() || cell == "?") continue;
      long long v = 0;
      if (!csv::parse_int(cell, v)) {
        throw InputError("morphology table line " + std::to_string(i + 1) + ", column " +
                         header[c] + ": not an integer '" + std::string(cell) + "'");
      }
      r.values.emplace(std::string(csv::trim(header[c])), static_cast<int>(v));
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<MorphologyRow> load_morphology_table(const std::filesystem::path& path) {
  return parse_morphology_table(csv::read_file(path));
}

}  // namespace divscore::grammar
