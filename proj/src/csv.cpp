#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "powerca/errors.hpp"
#include "powerca/io.hpp"

namespace powerca::io {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

// Splits one record on commas; double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_record(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char ch = line[k];
    if (quoted) {
      if (ch == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        cur += '"';
        ++k;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur += ch;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (quoted) throw ParseError("unterminated quote", line_no, fields.size() + 1);
  fields.push_back(trim(cur));
  return fields;
}

std::optional<double> to_number(const std::string& field) {
  if (field.empty()) return std::nullopt;
  const char* begin = field.data();
  const char* end = begin + field.size();
  if (*begin == '+') ++begin;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

struct Record {
  std::size_t line_no;
  std::vector<std::string> fields;
};

std::vector<Record> records_of(const std::string& text) {
  std::vector<Record> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (trim(line).empty()) continue;
    out.push_back({line_no, split_record(line, line_no)});
  }
  return out;
}

}  // namespace

CsvLayout sniff_layout(const std::string& text) {
  const auto recs = records_of(text);
  CsvLayout layout{false, false};
  if (recs.empty()) return layout;
  const auto& first = recs.front().fields;
  for (std::size_t k = 1; k < first.size(); ++k)
    if (!to_number(first[k])) layout.has_header = true;
  const std::size_t data = layout.has_header ? 1 : 0;
  if (data < recs.size() && !recs[data].fields.empty() && !to_number(recs[data].fields[0]))
    layout.has_row_labels = true;
  return layout;
}

ContingencyTable parse_table(const std::string& text, const CsvLayout& layout) {
  const auto recs = records_of(text);
  if (recs.empty()) throw ParseError("empty input", 1, 1);

  std::vector<std::string> col_labels;
  std::size_t start = 0;
  const std::size_t offset = layout.has_row_labels ? 1 : 0;
  if (layout.has_header) {
    const auto& h = recs.front().fields;
    for (std::size_t k = offset; k < h.size(); ++k) col_labels.push_back(h[k]);
    start = 1;
  }
  if (recs.size() <= start) throw ParseError("no data rows", recs.front().line_no + 1, 1);

  const std::size_t width = recs[start].fields.size();
  if (width <= offset) throw ParseError("row has no numeric fields", recs[start].line_no, 1);
  const std::size_t ncols = width - offset;
  if (layout.has_header && col_labels.size() != ncols)
    throw ParseError("header has " + std::to_string(col_labels.size()) + " labels but rows have " +
                         std::to_string(ncols) + " values",
                     recs.front().line_no, 1);

  Matrix values(static_cast<Eigen::Index>(recs.size() - start), static_cast<Eigen::Index>(ncols));
  std::vector<std::string> row_labels;
  for (std::size_t r = start; r < recs.size(); ++r) {
    const auto& rec = recs[r];
    if (rec.fields.size() != width)
      throw ParseError("expected " + std::to_string(width) + " fields, found " +
                           std::to_string(rec.fields.size()),
                       rec.line_no, std::min(rec.fields.size(), width) + 1);
    if (layout.has_row_labels) row_labels.push_back(rec.fields[0]);
    for (std::size_t k = offset; k < width; ++k) {
      const auto value = to_number(rec.fields[k]);
      if (!value) throw ParseError("not a number: '" + rec.fields[k] + "'", rec.line_no, k + 1);
      const auto i = static_cast<Eigen::Index>(r - start);
      const auto j = static_cast<Eigen::Index>(k - offset);
      if (*value < 0.0) throw NegativeEntry(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      values(i, j) = *value;
    }
  }
  return ContingencyTable(std::move(values), std::move(row_labels), std::move(col_labels));
}

namespace {

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ContingencyTable read_table(const std::filesystem::path& path, bool has_row_labels,
                            bool has_header) {
  return parse_table(slurp(path), {has_header, has_row_labels});
}

ContingencyTable read_table(const std::filesystem::path& path) {
  const std::string text = slurp(path);
  return parse_table(text, sniff_layout(text));
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string quote_label(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string format_table(const ContingencyTable& table) {
  std::string out;
  for (const auto& label : table.col_labels()) out += "," + quote_label(label);
  out += "\n";
  for (Eigen::Index i = 0; i < table.rows(); ++i) {
    out += quote_label(table.row_labels()[static_cast<std::size_t>(i)]);
    for (Eigen::Index j = 0; j < table.cols(); ++j) out += "," + format_number(table(i, j));
    out += "\n";
  }
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

void write_table(const ContingencyTable& table, const std::filesystem::path& path) {
  write_text(path, format_table(table));
}

}  // namespace powerca::io
