#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "powerca/analyses.hpp"
#include "powerca/table.hpp"
#include "powerca/transform.hpp"

namespace powerca::io {

struct CsvLayout {
  bool has_header = true;
  bool has_row_labels = true;
};

// Guess the layout from the first two records: a header when the first record has a
// non-numeric field past the label column, row labels when the first field of the
// first data record is non-numeric.
CsvLayout sniff_layout(const std::string& text);

// Comma-delimited, optional header row and first-column labels, decimal-point reals.
// Throws ParseError(line, field) or NegativeEntry(i, j).
ContingencyTable parse_table(const std::string& text, const CsvLayout& layout);
ContingencyTable read_table(const std::filesystem::path& path, bool has_row_labels,
                            bool has_header);
// Layout sniffed from the file contents.
ContingencyTable read_table(const std::filesystem::path& path);

std::string format_table(const ContingencyTable& table);
void write_table(const ContingencyTable& table, const std::filesystem::path& path);

enum class Format { Json, Csv };

// JSON document:
//   { "method", "index_kind", "residual_norm", "total_dispersion",
//     "dispersions": [ {"axis", "delta", "delta2", "percent"} ],
//     "rows":    [ {"label", "coords": [f_1(i), ...]} ],
//     "columns": [ {"label", "coords": [g_1(j), ...]} ] }
std::string decomposition_json(const Decomposition& d);

// axis,delta,delta2,percent with one line per axis.
std::string dispersions_csv(const Decomposition& d);

// Writes decomposition.json, or dispersions.csv, rows.csv and columns.csv, into dir.
// Returns the files written.
std::vector<std::filesystem::path> write_decomposition(const Decomposition& d, Format format,
                                                       const std::filesystem::path& dir);

// Factor map of rows (f) and columns (g). With no second axis the map is a 1-D strip.
// Throws NotEnoughAxes when an axis is out of range.
std::string factor_map_svg(const Decomposition& d, std::size_t first_axis,
                           std::optional<std::size_t> second_axis);
void emit_map(const Decomposition& d, std::size_t first_axis,
              std::optional<std::size_t> second_axis, const std::filesystem::path& path);

// Writes text to path, throwing IoError with the path on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

// 17 significant digits.
std::string format_number(double x);

}  // namespace powerca::io
