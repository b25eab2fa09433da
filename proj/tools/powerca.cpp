#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "powerca/cli.hpp"

using namespace powerca;

namespace {

void add_input(CLI::App* sub, cli::RunConfig& cfg, bool& no_header, bool& no_labels) {
  sub->add_option("input", cfg.input_path, "CSV table (comma-delimited)")->required();
  sub->add_flag("--no-header", no_header, "First line is data, not column labels");
  sub->add_flag("--no-row-labels", no_labels, "First field of each line is data");
  sub->add_flag("--drop-empty", cfg.drop_empty, "Remove all-zero rows and columns first");
}

void add_output(CLI::App* sub, cli::RunConfig& cfg) {
  sub->add_option("-o,--output-dir", cfg.output_dir, "Write result files here instead of stdout");
  sub->add_option("--format", cfg.format, "Report format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, io::Format>{{"json", io::Format::Json}, {"csv", io::Format::Csv}},
          CLI::ignore_case));
}

void add_factor_options(CLI::App* sub, cli::RunConfig& cfg, std::string& map_arg) {
  sub->add_option("--alpha", cfg.alpha, "Analyze the power-transformed table n^alpha");
  sub->add_option("--k", cfg.k, "Number of axes (default: all)");
  sub->add_option("--algorithm", cfg.algorithm, "Taxicab search")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, TaxicabAlgorithm>{{"exhaustive", TaxicabAlgorithm::Exhaustive},
                                                  {"ascent", TaxicabAlgorithm::Ascent},
                                                  {"auto", TaxicabAlgorithm::Auto}},
          CLI::ignore_case));
  sub->add_option("--map", map_arg, "Write map.svg for an axis pair, e.g. axes=1,2");
}

void add_method(CLI::App* sub, cli::RunConfig& cfg) {
  sub->add_option("--method", cfg.method, "Factorization")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Method>{{"svd", Method::Svd}, {"taxicab", Method::Taxicab}},
          CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correspondence, taxicab and log-ratio analysis of power-transformed tables"};
  app.require_subcommand(1);

  cli::RunConfig cfg;
  bool no_header = false;
  bool no_labels = false;
  std::string map_arg;
  bool to_indicator = false;
  bool to_log = false;
  bool only_rows = false;
  bool only_cols = false;

  auto* transform = app.add_subcommand("transform", "Power, indicator or log transform");
  add_input(transform, cfg, no_header, no_labels);
  add_output(transform, cfg);
  transform->add_option("--alpha", cfg.alpha, "Power in (0, 1]");
  transform->add_flag("--indicator", to_indicator, "0/1 presence table");
  transform->add_flag("--log", to_log, "Natural log (all entries > 0)");

  std::map<cli::Subcommand, CLI::App*> subs;
  subs[cli::Subcommand::Transform] = transform;

  auto* ca_cmd = app.add_subcommand("ca", "Correspondence analysis");
  auto* tca_cmd = app.add_subcommand("tca", "Taxicab correspondence analysis");
  auto* lra_cmd = app.add_subcommand("lra", "Weighted log-ratio analysis");
  auto* mfca_cmd = app.add_subcommand("mfca", "Marginal-free CA (balanced table)");
  for (auto* sub : {ca_cmd, tca_cmd, lra_cmd, mfca_cmd}) {
    add_input(sub, cfg, no_header, no_labels);
    add_output(sub, cfg);
    add_factor_options(sub, cfg, map_arg);
  }
  add_method(lra_cmd, cfg);
  add_method(mfca_cmd, cfg);
  lra_cmd->add_option("--weights", cfg.weights, "Row/column weights")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, WeightKind>{{"marginal", WeightKind::Marginal},
                                            {"uniform", WeightKind::Uniform}},
          CLI::ignore_case));
  subs[cli::Subcommand::Ca] = ca_cmd;
  subs[cli::Subcommand::Tca] = tca_cmd;
  subs[cli::Subcommand::Lra] = lra_cmd;
  subs[cli::Subcommand::Mfca] = mfca_cmd;

  auto* lemma = app.add_subcommand("lemma2", "Closed forms for one zero-bearing column");
  lemma->add_option("--rows,-I", cfg.lemma_rows, "Number of rows I")->required();
  lemma->add_option("--cols,-J", cfg.lemma_cols, "Number of columns J")->required();
  lemma->add_option("--zeros,-m", cfg.lemma_zeros, "Zeros in the column, 1..I-1")->required();
  add_output(lemma, cfg);
  subs[cli::Subcommand::Lemma2] = lemma;

  auto* converge = app.add_subcommand("converge", "Power-transform convergence sweep");
  add_input(converge, cfg, no_header, no_labels);
  add_output(converge, cfg);
  converge->add_option("--alphas", cfg.alphas, "Powers to evaluate")->delimiter(',');
  subs[cli::Subcommand::Converge] = converge;

  auto* merge = app.add_subcommand("merge", "Merge proportional rows and columns");
  add_input(merge, cfg, no_header, no_labels);
  add_output(merge, cfg);
  merge->add_flag("--rows-only", only_rows, "Merge rows only");
  merge->add_flag("--cols-only", only_cols, "Merge columns only");
  subs[cli::Subcommand::Merge] = merge;

  auto* stats = app.add_subcommand("stats", "Zero-cell statistics");
  add_input(stats, cfg, no_header, no_labels);
  add_output(stats, cfg);
  subs[cli::Subcommand::Stats] = stats;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (const auto& [kind, sub] : subs)
    if (sub->parsed()) cfg.subcommand = kind;
  if (no_header) cfg.has_header = false;
  if (no_labels) cfg.has_row_labels = false;
  if (to_indicator) cfg.transform = cli::TransformKind::Indicator;
  if (to_log) cfg.transform = cli::TransformKind::Log;
  if (only_rows) cfg.merge_cols = false;
  if (only_cols) cfg.merge_rows = false;

  try {
    if (!map_arg.empty()) cfg.map_axes = cli::parse_map_axes(map_arg);
    cli::run(cfg, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::exit_code_for(e);
  }
  return 0;
}
