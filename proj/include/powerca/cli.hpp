#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "powerca/analyses.hpp"
#include "powerca/io.hpp"

namespace powerca::cli {

enum class Subcommand { Transform, Ca, Tca, Lra, Mfca, Lemma2, Converge, Merge, Stats };

enum class TransformKind { Power, Indicator, Log };

struct RunConfig {
  Subcommand subcommand = Subcommand::Ca;
  std::filesystem::path input_path;
  std::optional<bool> has_header;      // sniffed when unset
  std::optional<bool> has_row_labels;  // sniffed when unset
  bool drop_empty = false;
  std::optional<double> alpha;
  TransformKind transform = TransformKind::Power;
  WeightKind weights = WeightKind::Uniform;
  Method method = Method::Svd;
  std::size_t k = kAllAxes;
  TaxicabAlgorithm algorithm = TaxicabAlgorithm::Auto;
  std::optional<std::filesystem::path> output_dir;
  io::Format format = io::Format::Json;
  // 1-based axis pair; second empty for a strip plot.
  std::optional<std::pair<std::size_t, std::optional<std::size_t>>> map_axes;
  bool merge_rows = true;
  bool merge_cols = true;
  std::vector<double> alphas = kDefaultAlphaGrid;
  long lemma_rows = 0;
  long lemma_cols = 0;
  long lemma_zeros = 0;
};

// Subcommand-specific checks, run before any computation. Throws InvalidArgument.
void validate(const RunConfig& config);

// Executes the configured run. Machine-readable output goes to `out` unless an output
// directory is configured.
void run(const RunConfig& config, std::ostream& out);

// Exit code for an exception: 2 validation, 3 numeric, 4 IO, 1 otherwise.
int exit_code_for(const std::exception& e);

// Parses "axes=1,2", "1,2" or "1".
std::pair<std::size_t, std::optional<std::size_t>> parse_map_axes(const std::string& text);

const char* to_string(Subcommand s);

}  // namespace powerca::cli
