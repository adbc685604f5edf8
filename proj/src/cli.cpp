#include "divscore/cli.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <ostream>
#include <set>

#include <json.hpp>

#include "divscore/analysis.hpp"
#include "divscore/csv.hpp"
#include "divscore/error.hpp"
#include "divscore/grammar.hpp"
#include "divscore/ingest.hpp"
#include "divscore/textstats.hpp"

namespace divscore::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using report_io::Format;

namespace {

struct Context {
  const RunConfig& config;
  std::ostream& out;
  std::ostream& err;
  int failures = 0;

  void warn(const std::string& msg) { err << "warning: " << msg << "\n"; }
  void fail(const std::string& msg) {
    err << "error: " << msg << "\n";
    ++failures;
  }
};

std::string join_isos(const std::vector<IsoCode>& isos) {
  std::string s;
  for (const auto& i : isos) s += (s.empty() ? "" : " ") + i.str();
  return s;
}

std::optional<LanguageSet> maybe_registry(const RunConfig& c) {
  if (!c.registry) return std::nullopt;
  return ingest::load_registry(*c.registry);
}

LanguageRecord record_for(const IsoCode& iso, const std::optional<LanguageSet>& registry) {
  if (registry) {
    if (const auto* r = registry->find(iso)) return *r;
  }
  return LanguageRecord(iso, iso.str());
}

const grammar::MorphSpecSet& specs_for(const RunConfig& c, std::optional<grammar::MorphSpecSet>& storage) {
  if (!c.spec) return grammar::MorphSpecSet::bundled();
  storage.emplace(grammar::load_spec_file(*c.spec));
  return *storage;
}

// Profiles every <iso>.txt in `dir` (optionally only `only`), sorted by iso.
// Per-language failures are reported and skipped.
std::vector<TextProfile> profile_dir(Context& ctx, const fs::path& dir,
                                     const std::optional<LanguageSet>& registry,
                                     const std::set<IsoCode>* only = nullptr) {
  std::vector<TextProfile> out;
  for (const auto& [iso, path] : ingest::list_corpus_dir(dir)) {
    if (only && !only->contains(iso)) continue;
    try {
      const auto corpus = ingest::load_corpus(path, iso);
      out.push_back(textstats::profile(corpus, record_for(iso, registry),
                                       ctx.config.sample_target, ctx.config.seed));
    } catch (const Error& e) {
      ctx.fail(iso.str() + ": " + e.what());
    }
  }
  return out;
}

// Directory of corpora or a precomputed profile table.
std::vector<TextProfile> load_profiles(Context& ctx, const fs::path& source,
                                       const std::optional<LanguageSet>& registry,
                                       const std::set<IsoCode>* only = nullptr) {
  if (fs::is_directory(source)) return profile_dir(ctx, source, registry, only);
  auto profiles = report_io::parse_profiles(csv::read_file(source));
  if (only) {
    std::erase_if(profiles, [&](const TextProfile& p) { return !only->contains(p.iso()); });
  }
  std::sort(profiles.begin(), profiles.end(),
            [](const TextProfile& a, const TextProfile& b) { return a.iso() < b.iso(); });
  return profiles;
}

std::vector<analysis::Measurement> mwl_of(const std::vector<TextProfile>& profiles) {
  std::vector<analysis::Measurement> out;
  for (const auto& p : profiles) out.push_back({p.iso(), p.mean_word_length()});
  return out;
}

const fs::path& single(const std::vector<fs::path>& paths, const char* flag) {
  if (paths.size() != 1) throw InputError(std::string("exactly one ") + flag + " is required");
  return paths.front();
}

// --- profile ---------------------------------------------------------------

int cmd_profile(Context& ctx) {
  const auto& c = ctx.config;
  fs::path dir;
  if (c.corpus) {
    dir = *c.corpus;
  } else {
    dir = single(c.dataset, "--dataset");
  }
  const auto registry = maybe_registry(c);
  const auto profiles = profile_dir(ctx, dir, registry);
  ctx.out << report_io::format_profiles(profiles, c.format == Format::svg ? Format::csv : c.format);
  return ctx.failures ? 1 : 0;
}

// --- score -----------------------------------------------------------------

void print_scalar(Context& ctx, const DiversityReport& r) {
  ctx.err << "normalization scalar c = " << csv::format_double(r.normalization_c().value_or(1.0))
          << " (scaled: " << to_string(r.fields().scaled_side) << ")\n";
}

int cmd_score(Context& ctx) {
  const auto& c = ctx.config;
  const fs::path& ref = single(c.reference, "--reference");
  const fs::path& ds = single(c.dataset, "--dataset");

  if (c.level == Level::morph) {
    const auto registry = maybe_registry(c);
    const auto rp = load_profiles(ctx, ref, registry);
    const auto dp = load_profiles(ctx, ds, registry);
    if (rp.empty()) throw InputError("reference has no usable languages");
    if (dp.empty()) throw InputError("dataset has no usable languages");
    const auto rm = mwl_of(rp);
    const auto dm = mwl_of(dp);
    const auto cmp = analysis::compare_morph(dm, rm, c.bin_width);
    print_scalar(ctx, cmp.jmm);
    ctx.out << report_io::serialize_comparison(cmp, "morph", c.format);
    return ctx.failures ? 1 : 0;
  }

  const auto r = ingest::load_feature_matrix(ref, MatrixKind::binary_syntactic, c.drop_incomplete);
  const auto d = ingest::load_feature_matrix(ds, MatrixKind::binary_syntactic, c.drop_incomplete);
  for (const auto* m : {&r, &d}) {
    if (!m->dropped.empty()) {
      ctx.warn(std::to_string(m->dropped.size()) + " row" + (m->dropped.size() == 1 ? "" : "s") +
               " dropped (" + join_isos(m->dropped) + ")");
    }
  }
  const auto cmp = analysis::compare_syn(d.matrix, r.matrix, c.syn_dims);
  print_scalar(ctx, cmp.jmm);
  ctx.out << report_io::serialize_comparison(cmp, "syn", c.format);
  return 0;
}

// --- cwals -----------------------------------------------------------------

int cmd_cwals(Context& ctx) {
  const auto& c = ctx.config;
  if (!c.morphology) throw InputError("--morphology is required");
  std::optional<grammar::MorphSpecSet> storage;
  const auto& specs = specs_for(c, storage);
  auto rows = grammar::load_morphology_table(*c.morphology);
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.iso < b.iso; });

  std::vector<std::pair<IsoCode, double>> scores;
  for (const auto& row : rows) {
    try {
      scores.emplace_back(row.iso, grammar::c_wals(row.values, specs));
    } catch (const Error& e) {
      ctx.fail(row.iso.str() + ": " + e.what());
    }
  }
  for (const auto& s : specs.specs()) {
    if (s.final_min() == s.final_max()) {
      ctx.warn("chapter " + s.chapter() + " has a degenerate range; contributes 0");
    }
  }
  if (c.format == Format::json) {
    json arr = json::array();
    for (const auto& [iso, v] : scores) arr.push_back({{"iso", iso.str()}, {"c_wals", v}});
    ctx.out << arr.dump(2) << "\n";
  } else {
    ctx.out << "iso,c_wals\n";
    for (const auto& [iso, v] : scores) ctx.out << iso.str() << "," << csv::format_double(v) << "\n";
  }
  return ctx.failures ? 1 : 0;
}

// --- correlate -------------------------------------------------------------

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return out;
}

struct Column {
  std::string path;
  std::string name;
  std::map<IsoCode, double> values;
};

Column load_column(const std::string& spec) {
  const auto colon = spec.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == spec.size()) {
    throw InputError("column reference must be <path>:<column>, got '" + spec + "'");
  }
  Column col{spec.substr(0, colon), spec.substr(colon + 1), {}};
  const auto rows = csv::parse(csv::read_file(col.path));
  if (rows.empty()) throw InputError(col.path + ": empty table");
  std::optional<std::size_t> iso_at;
  std::optional<std::size_t> value_at;
  for (std::size_t i = 0; i < rows.front().size(); ++i) {
    const std::string h = lower(csv::trim(rows.front()[i]));
    if (h == "iso" && !iso_at) iso_at = i;
    if (h == lower(col.name) && !value_at) value_at = i;
  }
  if (!iso_at) throw InputError(col.path + ": no 'iso' column");
  if (!value_at) throw InputError(col.path + ": no column '" + col.name + "'");
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (*iso_at >= row.size() || *value_at >= row.size()) {
      throw InputError(col.path + " row " + std::to_string(r + 1) + ": too few fields");
    }
    const std::string_view code = csv::trim(row[*iso_at]);
    double v = 0;
    if (!IsoCode::is_valid(code)) {
      throw InputError(col.path + " row " + std::to_string(r + 1) + ": malformed iso");
    }
    if (!csv::parse_double(row[*value_at], v)) {
      throw InputError(col.path + " row " + std::to_string(r + 1) + ": '" + row[*value_at] +
                       "' is not a number");
    }
    if (!col.values.emplace(IsoCode(code), v).second) {
      throw InputError(col.path + ": duplicate iso " + std::string(code));
    }
  }
  return col;
}

int cmd_correlate(Context& ctx) {
  const auto& c = ctx.config;
  if (c.columns.size() != 2) throw InputError("correlate takes exactly two <path>:<column> arguments");
  const Column x = load_column(c.columns[0]);
  const Column y = load_column(c.columns[1]);

  std::vector<IsoCode> joined;
  std::vector<IsoCode> only_x;
  std::vector<IsoCode> only_y;
  for (const auto& [iso, v] : x.values) (y.values.contains(iso) ? joined : only_x).push_back(iso);
  for (const auto& [iso, v] : y.values) {
    if (!x.values.contains(iso)) only_y.push_back(iso);
  }
  if (!only_x.empty()) ctx.warn("excluded, only in " + c.columns[0] + ": " + join_isos(only_x));
  if (!only_y.empty()) ctx.warn("excluded, only in " + c.columns[1] + ": " + join_isos(only_y));
  if (joined.empty()) throw InputError("no overlapping languages");

  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& iso : joined) {
    xs.push_back(x.values.at(iso));
    ys.push_back(y.values.at(iso));
  }
  const auto res = analysis::spearman(xs, ys);
  if (c.format == Format::json) {
    json j;
    j["x"] = c.columns[0];
    j["y"] = c.columns[1];
    j["rho"] = res.rho;
    j["n"] = res.n;
    json langs = json::array();
    for (const auto& iso : joined) langs.push_back(iso.str());
    j["languages"] = std::move(langs);
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << "x,y,n,rho\n"
            << csv::join({c.columns[0], c.columns[1], std::to_string(res.n),
                          csv::format_double(res.rho)})
            << "\n";
  }
  return 0;
}

// --- families --------------------------------------------------------------

std::vector<IsoCode> resolve_list(Context& ctx, const fs::path& path) {
  std::map<std::string, IsoCode, std::less<>> names;
  if (ctx.config.names) names = ingest::load_name_table(*ctx.config.names);
  const auto res = ingest::resolve_languages(ingest::read_list(path), names);
  for (const auto& u : res.unknown) ctx.warn(path.string() + ": unknown language '" + u + "'");
  if (!res.merged.empty()) {
    std::string m;
    for (const auto& e : res.merged) m += (m.empty() ? "" : "; ") + e;
    ctx.warn(path.string() + ": " + std::to_string(res.merged.size()) +
             " entries share a code with an earlier entry (" + m + ")");
  }
  return res.isos;
}

int cmd_families(Context& ctx) {
  const auto& c = ctx.config;
  if (!c.registry) throw InputError("--registry is required");
  const LanguageSet registry = ingest::load_registry(*c.registry);
  const auto isos = resolve_list(ctx, single(c.dataset, "--dataset"));

  std::vector<LanguageRecord> members;
  for (const auto& iso : isos) {
    if (const auto* r = registry.find(iso)) {
      members.push_back(*r);
    } else {
      ctx.warn(iso.str() + " is not in the registry; excluded");
    }
  }
  const auto fc = ingest::count_families(LanguageSet(std::move(members)));
  if (!fc.unlabeled.empty()) {
    ctx.warn(std::to_string(fc.unlabeled.size()) + " language(s) without a family label: " +
             join_isos(fc.unlabeled));
  }
  if (c.format == Format::json) {
    json fams = json::object();
    for (const auto& [family, list] : fc.members) {
      json arr = json::array();
      for (const auto& iso : list) arr.push_back(iso.str());
      fams[family] = std::move(arr);
    }
    json unl = json::array();
    for (const auto& iso : fc.unlabeled) unl.push_back(iso.str());
    json j;
    j["languages"] = isos.size();
    j["count"] = fc.count;
    j["families"] = std::move(fams);
    j["unlabeled"] = std::move(unl);
    ctx.out << j.dump(2) << "\n";
  } else {
    ctx.out << "family,languages,members\n";
    for (const auto& [family, list] : fc.members) {
      ctx.out << csv::join({family, std::to_string(list.size()), join_isos(list)}) << "\n";
    }
    ctx.out << csv::join({"(total families)", std::to_string(fc.count), ""}) << "\n";
  }
  return 0;
}

// --- table -----------------------------------------------------------------

int cmd_table(Context& ctx) {
  const auto& c = ctx.config;
  const fs::path& ref_list = single(c.reference, "--reference");
  if (c.dataset.empty()) throw InputError("at least one --dataset is required");
  if (!c.corpus && !c.syn_matrix) throw InputError("--corpus and/or --syn-matrix is required");

  const auto registry = maybe_registry(c);

  struct Side {
    std::string label;
    std::vector<IsoCode> isos;
  };
  std::vector<Side> sides;
  sides.push_back({ref_list.stem().string(), resolve_list(ctx, ref_list)});
  for (const auto& p : c.dataset) sides.push_back({p.stem().string(), resolve_list(ctx, p)});

  std::optional<FeatureMatrix> syn;
  if (c.syn_matrix) {
    auto loaded = ingest::load_feature_matrix(*c.syn_matrix, MatrixKind::binary_syntactic,
                                              c.drop_incomplete);
    if (!loaded.dropped.empty()) {
      ctx.warn(std::to_string(loaded.dropped.size()) + " incomplete matrix rows dropped (" +
               join_isos(loaded.dropped) + ")");
    }
    syn = std::move(loaded.matrix);
  }

  std::map<IsoCode, double> mwl;
  if (c.corpus) {
    std::set<IsoCode> needed;
    for (const auto& s : sides) needed.insert(s.isos.begin(), s.isos.end());
    for (const auto& p : load_profiles(ctx, *c.corpus, registry, &needed)) {
      mwl.emplace(p.iso(), p.mean_word_length());
    }
  }

  auto syn_subset = [&](const Side& s) -> std::optional<FeatureMatrix> {
    if (!syn) return std::nullopt;
    std::vector<IsoCode> missing;
    try {
      auto m = analysis::select_languages(*syn, s.isos, &missing);
      if (!missing.empty()) {
        ctx.warn(s.label + ": no syntactic row for " + join_isos(missing));
      }
      return m;
    } catch (const InputError&) {
      ctx.warn(s.label + ": no syntactic data");
      return std::nullopt;
    }
  };
  auto morph_subset = [&](const Side& s) {
    std::vector<analysis::Measurement> out;
    std::vector<IsoCode> missing;
    for (const auto& iso : s.isos) {
      if (auto it = mwl.find(iso); it != mwl.end()) {
        out.push_back({iso, it->second});
      } else {
        missing.push_back(iso);
      }
    }
    if (c.corpus && !missing.empty()) ctx.warn(s.label + ": no text profile for " + join_isos(missing));
    return out;
  };
  auto family_count = [&](const Side& s) -> std::optional<std::size_t> {
    if (!registry) return std::nullopt;
    std::vector<LanguageRecord> recs;
    for (const auto& iso : s.isos) {
      if (const auto* r = registry->find(iso)) recs.push_back(*r);
    }
    return ingest::count_families(LanguageSet(std::move(recs))).count;
  };

  const auto ref_syn = syn_subset(sides.front());
  const auto ref_morph = morph_subset(sides.front());

  std::vector<report_io::ScoreRow> rows;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    const Side& s = sides[i];
    report_io::ScoreRow row;
    row.dataset = s.label;
    row.languages = s.isos.size();
    row.families = family_count(s);

    const auto ds_syn = i == 0 ? ref_syn : syn_subset(s);
    if (ds_syn && ds_syn->language_count() >= 2) {
      row.ti_syn = diversity::ti_syn(*ds_syn);
      if (i > 0 && ref_syn) row.jmm_syn = diversity::jmm_syn(*ds_syn, *ref_syn, c.syn_dims).value();
    } else if (syn) {
      ctx.warn(s.label + ": fewer than 2 languages with syntactic data; syntax scores omitted");
    }

    const auto ds_morph = i == 0 ? ref_morph : morph_subset(s);
    if (ds_morph.size() >= 2 && ref_morph.size() >= 2) {
      const auto cmp = analysis::compare_morph(ds_morph, ref_morph, c.bin_width);
      row.ti_morph = cmp.ti_dataset.value();
      if (i > 0) row.jmm_morph = cmp.jmm.value();
    } else if (c.corpus) {
      ctx.warn(s.label + ": fewer than 2 languages with text profiles; morphology scores omitted");
    }
    rows.push_back(std::move(row));
  }
  ctx.out << report_io::format_score_table(rows, c.format == Format::svg ? Format::csv : c.format);
  return ctx.failures ? 1 : 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Context ctx{config, out, err};
  try {
    if (!(config.bin_width > 0.0)) throw InputError("--bin-width must be positive");
    if (config.sample_target == 0) throw InputError("--sample-target must be positive");
    switch (config.command) {
      case Command::profile: return cmd_profile(ctx);
      case Command::score: return cmd_score(ctx);
      case Command::cwals: return cmd_cwals(ctx);
      case Command::correlate: return cmd_correlate(ctx);
      case Command::families: return cmd_families(ctx);
      case Command::table: return cmd_table(ctx);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace divscore::cli
