// divscore command-line front end.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "divscore/cli.hpp"

using divscore::cli::Command;
using divscore::cli::Level;
using divscore::cli::RunConfig;

namespace {

void add_common(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "svg"}))
      ->default_val("json");
}

void add_text_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--sample-target", c.sample_target, "Tokens per sampled window")
      ->default_val(10000);
  sub->add_option("--seed", c.seed, "Sampling seed")->default_val(0);
  sub->add_option("--registry", c.registry, "Language registry (for script scale)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"divscore: linguistic diversity of multilingual data sets"};
  app.require_subcommand(1);

  RunConfig c;
  std::string format = "json";
  std::string level = "morph";
  int syn_dims = 103;

  auto* profile = app.add_subcommand("profile", "Text statistics per <iso>.txt corpus file");
  profile->add_option("corpus", c.corpus, "Corpus directory")->required();
  add_text_options(profile, c);
  add_common(profile, format);

  auto* score = app.add_subcommand("score", "Minmax Jaccard and typological indices");
  score->add_option("--level", level, "morph or syn")
      ->check(CLI::IsMember({"morph", "syn"}))
      ->required();
  score->add_option("--reference", c.reference,
                    "Corpus dir or profile table (morph); feature matrix (syn)")
      ->required();
  score->add_option("--dataset", c.dataset, "As --reference")->required();
  score->add_option("--bin-width", c.bin_width, "Bin width for word length")->default_val(1.0);
  score->add_flag("--drop-incomplete", c.drop_incomplete, "Drop matrix rows containing '?'");
  score->add_option("--syn-dims", syn_dims, "103: count of 1s per feature; 206: 0s and 1s")
      ->check(CLI::IsMember({103, 206}))
      ->default_val(103);
  add_text_options(score, c);
  add_common(score, format);

  auto* cwals = app.add_subcommand("cwals", "Morphological complexity per language");
  cwals->add_option("--morphology", c.morphology, "iso,22A,... table of final values")->required();
  cwals->add_option("--spec", c.spec, "Feature spec file (default: built-in 26 chapters)");
  add_common(cwals, format);

  auto* correlate = app.add_subcommand("correlate", "Spearman correlation of two columns");
  correlate->add_option("columns", c.columns, "<path>:<column> <path>:<column>")
      ->required()
      ->expected(2);
  add_common(correlate, format);

  auto* families = app.add_subcommand("families", "Top-level family count of a language list");
  families->add_option("--dataset", c.dataset, "Language list (ISO codes or names)")->required();
  families->add_option("--registry", c.registry, "Language registry")->required();
  families->add_option("--names", c.names, "name,iso lookup table");
  add_common(families, format);

  auto* table = app.add_subcommand("table", "Score matrix for several data sets");
  table->add_option("--reference", c.reference, "Reference language list")->required();
  table->add_option("--dataset", c.dataset, "Data set language list (repeatable)")->required();
  table->add_option("--corpus", c.corpus, "Corpus dir or profile table");
  table->add_option("--syn-matrix", c.syn_matrix, "Binary syntactic feature matrix");
  table->add_option("--names", c.names, "name,iso lookup table");
  table->add_option("--bin-width", c.bin_width, "Bin width for word length")->default_val(1.0);
  table->add_flag("--drop-incomplete", c.drop_incomplete, "Drop matrix rows containing '?'");
  table->add_option("--syn-dims", syn_dims, "103 or 206")
      ->check(CLI::IsMember({103, 206}))
      ->default_val(103);
  add_text_options(table, c);
  add_common(table, format);

  CLI11_PARSE(app, argc, argv);

  const std::map<CLI::App*, Command> commands = {
      {profile, Command::profile}, {score, Command::score},       {cwals, Command::cwals},
      {correlate, Command::correlate}, {families, Command::families}, {table, Command::table}};
  for (const auto& [sub, cmd] : commands) {
    if (sub->parsed()) c.command = cmd;
  }
  c.level = level == "syn" ? Level::syn : Level::morph;
  c.format = *divscore::report_io::parse_format(format);
  c.syn_dims = syn_dims == 206 ? divscore::diversity::SynDims::per_value
                               : divscore::diversity::SynDims::per_feature;
  return divscore::cli::run(c, std::cout, std::cerr);
}
