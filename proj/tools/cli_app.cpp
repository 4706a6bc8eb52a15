#include "cli_app.hpp"

#include <array>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "solvstab/errors.hpp"
#include "solvstab/report.hpp"

namespace solvstab {

namespace {

struct CommonOptions {
  CatalogLimits limits;
  std::vector<std::string> imports;
  std::string format;
  std::string output;
  int threshold = kGoodOrbitThreshold;
  int jobs = 1;
  std::string group;  // label or file path, for analyze/gluck
  std::uint64_t seed = 0;
  bool seed_set = false;
};

void add_limit_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--max-field", opt.limits.max_field,
                  "Largest p^m for the semilinear families")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-dim", opt.limits.max_dimension,
                  "Largest wreath-product dimension")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-degree", opt.limits.max_degree,
                  "Largest p^n for any constructed entry")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--odd-only", opt.limits.odd_only,
                "Keep only odd-order entries (odd |V|*|G|)");
  cmd->add_option("--import", opt.imports, "Import a JSON group fixture (repeatable)");
}

void add_output_flags(CLI::App* cmd, CommonOptions& opt, std::string& format_storage,
                      const std::string& default_format) {
  format_storage = default_format;
  cmd->add_option("--format", format_storage, "Output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv", "md"}));
  cmd->add_option("--output", opt.output, "Write output to this file instead of stdout");
}

void emit(const CommonOptions& opt, const std::string& text, std::ostream& out) {
  if (opt.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.output);
  if (!file) throw Error("cannot write output file '" + opt.output + "'");
  file << text;
}

bool looks_like_file(const std::string& group) {
  return group.find('/') != std::string::npos || group.find(".json") != std::string::npos ||
         std::filesystem::exists(group);
}

CatalogEntry resolve_group(const CommonOptions& opt) {
  if (looks_like_file(opt.group)) return import_group(opt.group);
  auto catalog = build_catalog(opt.limits, opt.imports);
  const CatalogEntry* entry = find_entry(catalog, opt.group);
  if (entry) return *entry;
  try {  // constructible names outside the catalog, e.g. larger GL(n,p)
    return make_entry(opt.group, Provenance::named, named_group(opt.group));
  } catch (const ParseError&) {
    throw ParseError("unknown group label '" + opt.group +
                     "' (not in the catalog and not a file)");
  }
}

int cmd_catalog(const CommonOptions& opt, std::ostream& out) {
  auto catalog = build_catalog(opt.limits, opt.imports);
  if (opt.format == "json")
    emit(opt, catalog_json(catalog), out);
  else if (opt.format == "csv")
    emit(opt, catalog_csv(catalog), out);
  else
    emit(opt, catalog_markdown(catalog), out);
  return 0;
}

int cmd_analyze(const CommonOptions& opt, std::ostream& out) {
  CatalogEntry entry = resolve_group(opt);
  if (!entry.is_matrix())
    throw PreconditionError("analyze needs a matrix group; '" + entry.label +
                            "' is a permutation import");
  GoodOrbitReport rep = analyze(entry.matrix(), opt.threshold, entry.label);
  if (opt.format == "json")
    emit(opt, analyze_report_json(rep), out);
  else if (opt.format == "csv")
    emit(opt, analyze_report_csv(rep), out);
  else
    emit(opt, analyze_report_markdown(rep), out);
  return 0;
}

int cmd_verify(const CommonOptions& opt, std::ostream& out) {
  auto catalog = build_catalog(opt.limits, opt.imports);
  VerifierConfig cfg;
  cfg.threshold = opt.threshold;
  cfg.jobs = opt.jobs;
  if (opt.seed_set) cfg.seress_seed = opt.seed;
  VerifyReport report = run_verification(catalog, cfg);
  if (opt.format == "md")
    emit(opt, report_markdown(report), out);
  else
    emit(opt, report_json(report), out);
  return report.all_pass() ? 0 : 1;
}

int cmd_gluck(const CommonOptions& opt, std::ostream& out) {
  CatalogEntry entry = resolve_group(opt);
  PermGroup action = entry.action();
  SubsetOrbitTable table(action);
  if (opt.format == "json")
    emit(opt, gluck_json(table, entry.label), out);
  else if (opt.format == "md")
    emit(opt, gluck_markdown(table, entry.label), out);
  else
    emit(opt, gluck_csv(table), out);
  return 0;
}

int cmd_min_dl(const CommonOptions& opt, std::ostream& out) {
  auto catalog = build_catalog(opt.limits, opt.imports);
  auto rows = min_dl_table(catalog);
  if (opt.format == "json")
    emit(opt, min_dl_json(rows), out);
  else if (opt.format == "md")
    emit(opt, min_dl_markdown(rows), out);
  else
    emit(opt, min_dl_csv(rows), out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"solvstab: construction and exhaustive verification of orbit and "
               "stabilizer structure in finite solvable linear groups"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "Read options from a config file; keys live in a [subcommand] "
                 "section and explicit flags win");

  CommonOptions opt;

  CLI::App* catalog = app.add_subcommand("catalog", "List catalog entries with flags");
  CLI::App* analyze = app.add_subcommand("analyze", "Per-orbit structural report");
  CLI::App* verify = app.add_subcommand("verify", "Full theorem sweep over the catalog");
  CLI::App* gluck = app.add_subcommand("gluck", "Power-set orbit table of a group");
  CLI::App* mindl = app.add_subcommand("min-dl",
                                       "Two-point stabilizer derived lengths across "
                                       "the primitive affine catalog");

  std::array<std::string, 5> formats;
  const std::array<const char*, 5> format_defaults{"md", "md", "json", "csv", "csv"};
  const std::array<CLI::App*, 5> commands{catalog, analyze, verify, gluck, mindl};
  for (std::size_t i = 0; i < commands.size(); ++i) {
    add_limit_flags(commands[i], opt);
    add_output_flags(commands[i], opt, formats[i], format_defaults[i]);
  }
  analyze->add_option("--group", opt.group, "Catalog label or JSON fixture path")
      ->required();
  gluck->add_option("--group", opt.group, "Catalog label or JSON fixture path")->required();
  for (CLI::App* cmd : {analyze, verify}) {
    cmd->add_option("--threshold", opt.threshold, "Good-orbit derived-length threshold")
        ->check(CLI::NonNegativeNumber);
  }
  verify->add_option("--jobs", opt.jobs,
                     "Worker count (every value gives identical output)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", opt.seed,
                     "Randomized base search in the Seress check; found bases are "
                     "re-verified deterministically");

  try {
    std::vector<const char*> argv;
    argv.push_back("solvstab");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help and friends
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
  opt.seed_set = verify->count("--seed") > 0;

  try {
    CLI::App* active = app.get_subcommands().front();
    for (std::size_t i = 0; i < commands.size(); ++i)
      if (commands[i] == active) opt.format = formats[i];
    if (active == catalog) return cmd_catalog(opt, out);
    if (active == analyze) return cmd_analyze(opt, out);
    if (active == verify) return cmd_verify(opt, out);
    if (active == gluck) return cmd_gluck(opt, out);
    if (active == mindl) return cmd_min_dl(opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace solvstab
