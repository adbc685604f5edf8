#include "divscore/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "divscore/csv.hpp"
#include "divscore/error.hpp"

namespace divscore::report_io {

using json = nlohmann::ordered_json;

std::string_view to_string(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::svg: return "svg";
  }
  return "json";
}

std::optional<Format> parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "svg" || text == "svg-histogram") return Format::svg;
  return std::nullopt;
}

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json report_to_json(const DiversityReport& r) {
  const auto& f = r.fields();
  json j;
  j["schema_version"] = kSchemaVersion;
  j["score"] = std::string(to_string(f.score));
  j["value"] = f.value;
  j["normalization_c"] = opt(f.normalization_c);
  j["scaled_side"] = std::string(to_string(f.scaled_side));
  j["dataset_size"] = f.dataset_size;
  j["reference_size"] = f.reference_size;
  j["bin_width"] = opt(f.bin_width);
  json rows = json::array();
  for (const auto& row : f.per_bin) {
    rows.push_back({{"bin", row.label},
                    {"dataset", row.dataset},
                    {"reference", row.reference},
                    {"min", row.min},
                    {"max", row.max}});
  }
  j["per_bin"] = std::move(rows);
  if (f.gap) {
    json surplus = json::array();
    for (const auto& s : f.gap->surplus()) surplus.push_back({{"bin", s.label}, {"excess", s.excess}});
    json deficit = json::array();
    for (const auto& d : f.gap->deficit()) {
      deficit.push_back({{"bin", d.label}, {"shortfall", d.shortfall}, {"examples", d.examples}});
    }
    j["gap"] = {{"surplus", std::move(surplus)}, {"deficit", std::move(deficit)}};
  } else {
    j["gap"] = nullptr;
  }
  j["notes"] = f.notes;
  return j;
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

DiversityReport report_from_json(const json& j) {
  if (!j.is_object()) throw InputError("report JSON must be an object");
  if (j.value("schema_version", 0) != kSchemaVersion) {
    throw InputError("unsupported report schema_version");
  }
  DiversityReport::Fields f;
  const auto score = parse_score_name(j.at("score").get<std::string>());
  if (!score) throw InputError("unknown score name in report");
  f.score = *score;
  f.value = j.at("value").get<double>();
  f.normalization_c = get_opt<double>(j, "normalization_c");
  const auto side = parse_scaled_side(j.value("scaled_side", std::string("none")));
  if (!side) throw InputError("unknown scaled_side in report");
  f.scaled_side = *side;
  f.dataset_size = j.value("dataset_size", std::size_t{0});
  f.reference_size = j.value("reference_size", std::size_t{0});
  f.bin_width = get_opt<double>(j, "bin_width");
  for (const auto& row : j.at("per_bin")) {
    f.per_bin.push_back({row.at("bin").get<std::string>(), row.at("reference").get<double>(),
                         row.at("dataset").get<double>(), row.at("min").get<double>(),
                         row.at("max").get<double>()});
  }
  if (j.contains("gap") && !j.at("gap").is_null()) {
    std::vector<SurplusBin> surplus;
    std::vector<DeficitBin> deficit;
    for (const auto& s : j.at("gap").at("surplus")) {
      surplus.push_back({s.at("bin").get<std::string>(), s.at("excess").get<double>()});
    }
    for (const auto& d : j.at("gap").at("deficit")) {
      deficit.push_back({d.at("bin").get<std::string>(), d.at("shortfall").get<double>(),
                         d.at("examples").get<std::vector<std::string>>()});
    }
    f.gap = GapReport(std::move(surplus), std::move(deficit));
  }
  if (j.contains("notes")) f.notes = j.at("notes").get<std::vector<std::string>>();
  return DiversityReport(std::move(f));
}

std::string to_csv(const DiversityReport& r) {
  std::string out = "bin,dataset,reference,min,max\n";
  for (const auto& row : r.per_bin()) {
    out += csv::join({row.label, csv::format_double(row.dataset),
                      csv::format_double(row.reference), csv::format_double(row.min),
                      csv::format_double(row.max)}) +
           "\n";
  }
  return out;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  // two decimals are plenty for pixel coordinates
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string to_svg(const DiversityReport& r) {
  constexpr double kBar = 40.0;
  constexpr double kHeight = 200.0;
  constexpr double kMargin = 30.0;
  const auto& rows = r.per_bin();
  double peak = 0.0;
  for (const auto& row : rows) peak = std::max(peak, row.max);
  if (peak <= 0.0) peak = 1.0;

  const double width = kMargin * 2 + kBar * static_cast<double>(std::max<std::size_t>(rows.size(), 1));
  const double height = kHeight + kMargin * 2 + 20.0;
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<title>" + xml_escape(to_string(r.score())) + " = " + csv::format_double(r.value()) +
         "</title>\n";
  out += "<style>.reference{fill:#4477aa;fill-opacity:0.5}.dataset{fill:#ee6677;"
         "fill-opacity:0.5}.overlap{fill:#222222;fill-opacity:0.35}"
         "text{font:10px sans-serif}</style>\n";
  const double base = kMargin + kHeight;
  auto bar = [&](const char* cls, std::size_t i, double w, const std::string& label) {
    const double h = w / peak * kHeight;
    return "<rect class=\"" + std::string(cls) + "\" x=\"" +
           num(kMargin + kBar * static_cast<double>(i) + 4.0) + "\" y=\"" + num(base - h) +
           "\" width=\"" + num(kBar - 8.0) + "\" height=\"" + num(h) + "\"><title>" +
           xml_escape(label) + " " + cls + " " + csv::format_double(w) + "</title></rect>\n";
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (row.reference > 0.0) out += bar("reference", i, row.reference, row.label);
    if (row.dataset > 0.0) out += bar("dataset", i, row.dataset, row.label);
    if (row.min > 0.0) out += bar("overlap", i, row.min, row.label);
    out += "<text x=\"" + num(kMargin + kBar * static_cast<double>(i) + 2.0) + "\" y=\"" +
           num(base + 14.0) + "\">" + xml_escape(row.label) + "</text>\n";
  }
  out += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(base) + "\" x2=\"" +
         num(width - kMargin) + "\" y2=\"" + num(base) + "\" stroke=\"black\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace

std::string serialize_report(const DiversityReport& report, Format format) {
  switch (format) {
    case Format::json: return report_to_json(report).dump(2) + "\n";
    case Format::csv: return to_csv(report);
    case Format::svg: return to_svg(report);
  }
  throw InputError("unsupported report format");
}

DiversityReport parse_report_json(std::string_view text) {
  try {
    return report_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string serialize_comparison(const analysis::Comparison& cmp, std::string_view level,
                                 Format format) {
  if (format != Format::json) return serialize_report(cmp.jmm, format);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["level"] = std::string(level);
  j["jmm"] = report_to_json(cmp.jmm);
  j["ti_dataset"] = report_to_json(cmp.ti_dataset);
  j["ti_reference"] = report_to_json(cmp.ti_reference);
  return j.dump(2) + "\n";
}

// --- profiles --------------------------------------------------------------

namespace {

const csv::Row kProfileHeader = {"iso", "mwl", "ttr", "entropy", "token_count", "offset", "seed"};

}  // namespace

std::string format_profiles(const std::vector<TextProfile>& profiles, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& p : profiles) {
      arr.push_back({{"iso", p.iso().str()},
                     {"mwl", p.mean_word_length()},
                     {"ttr", p.ttr()},
                     {"entropy", p.unigram_entropy()},
                     {"token_count", p.token_count()},
                     {"offset", p.sample_offset()},
                     {"seed", p.seed()}});
    }
    return arr.dump(2) + "\n";
  }
  if (format != Format::csv) throw InputError("profile tables support json and csv only");
  std::string out = csv::join(kProfileHeader) + "\n";
  for (const auto& p : profiles) {
    out += csv::join({p.iso().str(), csv::format_double(p.mean_word_length()),
                      csv::format_double(p.ttr()), csv::format_double(p.unigram_entropy()),
                      std::to_string(p.token_count()), std::to_string(p.sample_offset()),
                      std::to_string(p.seed())}) +
           "\n";
  }
  return out;
}

std::vector<TextProfile> parse_profiles(std::string_view text) {
  const std::string_view body = csv::trim(text);
  std::vector<TextProfile> out;
  if (!body.empty() && (body.front() == '[' || body.front() == '{')) {
    try {
      const json j = json::parse(body);
      const json& arr = j.is_object() ? j.at("profiles") : j;
      for (const auto& p : arr) {
        out.emplace_back(IsoCode(p.at("iso").get<std::string>()), p.at("mwl").get<double>(),
                         p.at("ttr").get<double>(), p.at("entropy").get<double>(),
                         p.at("token_count").get<std::size_t>(),
                         p.value("offset", std::size_t{0}), p.value("seed", std::uint64_t{0}));
      }
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed profile JSON: ") + e.what());
    }
    return out;
  }

  const auto rows = csv::parse(text);
  if (rows.empty()) throw InputError("profile table is empty");
  std::map<std::string, std::size_t> col;
  for (std::size_t c = 0; c < rows.front().size(); ++c) col[std::string(csv::trim(rows.front()[c]))] = c;
  for (const char* need : {"iso", "mwl", "ttr", "entropy", "token_count"}) {
    if (!col.contains(need)) throw InputError(std::string("profile table lacks column ") + need);
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    auto cell = [&](const char* name) -> std::string_view {
      auto it = col.find(name);
      if (it == col.end() || it->second >= row.size()) return {};
      return csv::trim(row[it->second]);
    };
    double mwl = 0;
    double ttr = 0;
    double h = 0;
    long long n = 0;
    long long offset = 0;
    long long seed = 0;
    if (!csv::parse_double(cell("mwl"), mwl) || !csv::parse_double(cell("ttr"), ttr) ||
        !csv::parse_double(cell("entropy"), h) || !csv::parse_int(cell("token_count"), n) ||
        n <= 0) {
      throw InputError("profile table row " + std::to_string(r + 1) + ": malformed values");
    }
    if (!cell("offset").empty() && !csv::parse_int(cell("offset"), offset)) {
      throw InputError("profile table row " + std::to_string(r + 1) + ": malformed offset");
    }
    if (!cell("seed").empty() && !csv::parse_int(cell("seed"), seed)) {
      throw InputError("profile table row " + std::to_string(r + 1) + ": malformed seed");
    }
    const std::string_view iso = cell("iso");
    if (!IsoCode::is_valid(iso)) {
      throw InputError("profile table row " + std::to_string(r + 1) + ": malformed iso");
    }
    out.emplace_back(IsoCode(iso), mwl, ttr, h, static_cast<std::size_t>(n),
                     static_cast<std::size_t>(std::max(0LL, offset)),
                     static_cast<std::uint64_t>(seed));
  }
  return out;
}

// --- score tables ----------------------------------------------------------

std::string format_score_table(const std::vector<ScoreRow>& rows, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"dataset", r.dataset},
                     {"languages", r.languages},
                     {"families", opt(r.families)},
                     {"ti_syn", opt(r.ti_syn)},
                     {"jmm_syn", opt(r.jmm_syn)},
                     {"ti_morph", opt(r.ti_morph)},
                     {"jmm_morph", opt(r.jmm_morph)}});
    }
    json j;
    j["schema_version"] = kSchemaVersion;
    j["rows"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  if (format != Format::csv) throw InputError("score tables support json and csv only");
  auto d = [](const std::optional<double>& v) { return v ? csv::format_double(*v) : ""; };
  std::string out = "dataset,languages,families,ti_syn,jmm_syn,ti_morph,jmm_morph\n";
  for (const auto& r : rows) {
    out += csv::join({r.dataset, std::to_string(r.languages),
                      r.families ? std::to_string(*r.families) : "", d(r.ti_syn), d(r.jmm_syn),
                      d(r.ti_morph), d(r.jmm_morph)}) +
           "\n";
  }
  return out;
}

}  // namespace divscore::report_io
