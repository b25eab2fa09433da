#include <json.hpp>

#include "powerca/errors.hpp"
#include "powerca/io.hpp"

namespace powerca::io {

namespace {

std::string label_at(const std::vector<std::string>& labels, std::size_t k, const char* prefix) {
  return k < labels.size() ? labels[k] : prefix + std::to_string(k + 1);
}

}  // namespace

std::string decomposition_json(const Decomposition& d) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["method"] = to_string(d.method);
  doc["index_kind"] = to_string(d.source.kind());
  doc["residual_norm"] = d.residual_norm;
  doc["total_dispersion"] = d.total_dispersion;

  ordered_json disp = ordered_json::array();
  for (std::size_t a = 0; a < d.axes.size(); ++a) {
    const double delta = d.axes[a].delta;
    disp.push_back({{"axis", a + 1},
                    {"delta", delta},
                    {"delta2", delta * delta},
                    {"percent", d.percent(a)}});
  }
  doc["dispersions"] = std::move(disp);

  const auto points = [&](bool rows) {
    ordered_json arr = ordered_json::array();
    const Eigen::Index n = rows ? d.source.rows() : d.source.cols();
    for (Eigen::Index i = 0; i < n; ++i) {
      ordered_json coords = ordered_json::array();
      for (const Axis& axis : d.axes) coords.push_back(rows ? axis.f(i) : axis.g(i));
      arr.push_back({{"label", rows ? label_at(d.row_labels, static_cast<std::size_t>(i), "R")
                                    : label_at(d.col_labels, static_cast<std::size_t>(i), "C")},
                     {"coords", std::move(coords)}});
    }
    return arr;
  };
  doc["rows"] = points(true);
  doc["columns"] = points(false);
  return doc.dump(2) + "\n";
}

namespace {

std::string coordinates_csv(const Decomposition& d, bool rows) {
  std::string out = "label";
  for (std::size_t a = 0; a < d.axes.size(); ++a) out += ",axis" + std::to_string(a + 1);
  out += "\n";
  const Eigen::Index n = rows ? d.source.rows() : d.source.cols();
  for (Eigen::Index i = 0; i < n; ++i) {
    out += rows ? label_at(d.row_labels, static_cast<std::size_t>(i), "R")
                : label_at(d.col_labels, static_cast<std::size_t>(i), "C");
    for (const Axis& axis : d.axes) out += "," + format_number(rows ? axis.f(i) : axis.g(i));
    out += "\n";
  }
  return out;
}

}  // namespace

std::string dispersions_csv(const Decomposition& d) {
  std::string s = "axis,delta,delta2,percent\n";
  for (std::size_t a = 0; a < d.axes.size(); ++a) {
    const double delta = d.axes[a].delta;
    s += std::to_string(a + 1) + "," + format_number(delta) + "," + format_number(delta * delta) +
         "," + format_number(d.percent(a)) + "\n";
  }
  return s;
}

std::vector<std::filesystem::path> write_decomposition(const Decomposition& d, Format format,
                                                       const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  if (format == Format::Json) {
    const auto path = dir / "decomposition.json";
    write_text(path, decomposition_json(d));
    return {path};
  }

  const std::vector<std::filesystem::path> paths{dir / "dispersions.csv", dir / "rows.csv",
                                                 dir / "columns.csv"};
  write_text(paths[0], dispersions_csv(d));
  write_text(paths[1], coordinates_csv(d, true));
  write_text(paths[2], coordinates_csv(d, false));
  return paths;
}

}  // namespace powerca::io
