#include "powerca/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "powerca/errors.hpp"
#include "powerca/transform.hpp"

namespace powerca::cli {

using nlohmann::ordered_json;

const char* to_string(Subcommand s) {
  switch (s) {
    case Subcommand::Transform: return "transform";
    case Subcommand::Ca: return "ca";
    case Subcommand::Tca: return "tca";
    case Subcommand::Lra: return "lra";
    case Subcommand::Mfca: return "mfca";
    case Subcommand::Lemma2: return "lemma2";
    case Subcommand::Converge: return "converge";
    case Subcommand::Merge: return "merge";
    case Subcommand::Stats: return "stats";
  }
  return "?";
}

namespace {

bool is_analysis(Subcommand s) {
  return s == Subcommand::Ca || s == Subcommand::Tca || s == Subcommand::Lra ||
         s == Subcommand::Mfca;
}

ContingencyTable load(const RunConfig& cfg) {
  std::ifstream in(cfg.input_path, std::ios::binary);
  if (!in) throw IoError("cannot open " + cfg.input_path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  io::CsvLayout layout = io::sniff_layout(text);
  if (cfg.has_header) layout.has_header = *cfg.has_header;
  if (cfg.has_row_labels) layout.has_row_labels = *cfg.has_row_labels;
  ContingencyTable table = io::parse_table(text, layout);
  return cfg.drop_empty ? drop_empty(table) : table;
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& file_name,
          const std::string& text) {
  if (cfg.output_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*cfg.output_dir, ec);
    if (ec) throw IoError("cannot create " + cfg.output_dir->string() + ": " + ec.message());
    io::write_text(*cfg.output_dir / file_name, text);
  } else {
    out << text;
  }
}

Decomposition analyze(const RunConfig& cfg, const ContingencyTable& raw) {
  const ContingencyTable N = cfg.alpha ? power_transform(raw, *cfg.alpha) : raw;
  const FactorOptions opts{cfg.method, cfg.k, cfg.algorithm};
  switch (cfg.subcommand) {
    case Subcommand::Ca: return ca(N, cfg.k);
    case Subcommand::Tca: return tca(N, cfg.k, cfg.algorithm);
    case Subcommand::Lra: return lra(N, cfg.weights, opts);
    case Subcommand::Mfca: return mfca(N, opts);
    default: break;
  }
  throw InvalidArgument("not an analysis subcommand");
}

ordered_json groups_json(const std::vector<std::vector<std::size_t>>& groups) {
  ordered_json arr = ordered_json::array();
  for (const auto& g : groups) arr.push_back(g);
  return arr;
}

std::string matrix_csv(const Matrix& M, const ContingencyTable& labels_from) {
  std::string s;
  for (const auto& label : labels_from.col_labels()) s += "," + label;
  s += "\n";
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    s += labels_from.row_labels()[static_cast<std::size_t>(i)];
    for (Eigen::Index j = 0; j < M.cols(); ++j) s += "," + io::format_number(M(i, j));
    s += "\n";
  }
  return s;
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.subcommand == Subcommand::Lemma2) {
    if (cfg.lemma_rows < 2 || cfg.lemma_cols < 2)
      throw InvalidArgument("lemma2 needs --rows >= 2 and --cols >= 2");
    if (cfg.lemma_zeros < 1 || cfg.lemma_zeros > cfg.lemma_rows - 1)
      throw BadZeroCount(cfg.lemma_zeros, cfg.lemma_rows);
    return;
  }
  if (cfg.input_path.empty()) throw InvalidArgument("an input CSV path is required");
  if (cfg.alpha && (!(*cfg.alpha > 0.0) || *cfg.alpha > 1.0)) throw InvalidAlpha(*cfg.alpha);
  if (cfg.subcommand == Subcommand::Transform && cfg.transform == TransformKind::Power &&
      !cfg.alpha)
    throw InvalidArgument("transform needs --alpha, --indicator or --log");
  if (cfg.map_axes) {
    if (!is_analysis(cfg.subcommand))
      throw InvalidArgument("--map applies to ca, tca, lra and mfca only");
    if (!cfg.output_dir) throw InvalidArgument("--map needs --output-dir");
  }
  if (cfg.subcommand == Subcommand::Converge) {
    if (cfg.alphas.empty()) throw InvalidArgument("--alphas must not be empty");
    for (double a : cfg.alphas)
      if (!(a > 0.0) || a > 1.0) throw InvalidAlpha(a);
  }
  if (cfg.k == 0) throw InvalidArgument("--k must be at least 1");
}

void run(const RunConfig& cfg, std::ostream& out) {
  validate(cfg);

  if (cfg.subcommand == Subcommand::Lemma2) {
    const ContingencyTable R =
        one_zero_column_reduction(cfg.lemma_rows, cfg.lemma_cols, cfg.lemma_zeros);
    const Decomposition dc = ca(R);
    const Decomposition dt = tca(R);
    ordered_json doc;
    doc["I"] = cfg.lemma_rows;
    doc["J"] = cfg.lemma_cols;
    doc["m"] = cfg.lemma_zeros;
    doc["reduced_table"] = {{R(0, 0), R(0, 1)}, {R(1, 0), R(1, 1)}};
    doc["ca_inertia_closed_form"] = lemma2_ca_inertia(cfg.lemma_zeros, cfg.lemma_rows, cfg.lemma_cols);
    doc["ca_inertia_computed"] = dc.axes.empty() ? 0.0 : dc.axes[0].delta * dc.axes[0].delta;
    doc["rho2_two_by_two"] = two_by_two_rho2(normalize(R));
    doc["tca_dispersion_closed_form"] =
        lemma2_tca_dispersion(cfg.lemma_zeros, cfg.lemma_rows, cfg.lemma_cols);
    doc["tca_dispersion_computed"] = dt.axes.empty() ? 0.0 : dt.axes[0].delta;
    emit(cfg, out, "lemma2.json", doc.dump(2) + "\n");
    return;
  }

  const ContingencyTable N = load(cfg);
  switch (cfg.subcommand) {
    case Subcommand::Transform: {
      if (cfg.transform == TransformKind::Log) {
        emit(cfg, out, "transformed.csv", matrix_csv(log_transform(N), N));
      } else {
        const ContingencyTable T =
            cfg.transform == TransformKind::Indicator ? indicator(N) : power_transform(N, *cfg.alpha);
        emit(cfg, out, "transformed.csv", io::format_table(T));
      }
      return;
    }
    case Subcommand::Converge: {
      const auto rows = convergence_sweep(N, cfg.alphas);
      if (cfg.format == io::Format::Csv) {
        std::string s = "alpha,max_err_lambda,max_err_row_marginal,max_err_col_marginal\n";
        for (const auto& r : rows)
          s += io::format_number(r.alpha) + "," + io::format_number(r.max_err_lambda) + "," +
               io::format_number(r.max_err_row_marginal) + "," +
               io::format_number(r.max_err_col_marginal) + "\n";
        emit(cfg, out, "convergence.csv", s);
      } else {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows)
          arr.push_back({{"alpha", r.alpha},
                         {"max_err_lambda", r.max_err_lambda},
                         {"max_err_row_marginal", r.max_err_row_marginal},
                         {"max_err_col_marginal", r.max_err_col_marginal}});
        emit(cfg, out, "convergence.json", arr.dump(2) + "\n");
      }
      return;
    }
    case Subcommand::Merge: {
      const MergeReport rep = merge_proportional(N, cfg.merge_rows, cfg.merge_cols);
      ordered_json doc;
      doc["rows"] = rep.merged.rows();
      doc["cols"] = rep.merged.cols();
      doc["row_groups"] = groups_json(rep.row_groups);
      doc["col_groups"] = groups_json(rep.col_groups);
      if (cfg.output_dir) {
        emit(cfg, out, "merged.csv", io::format_table(rep.merged));
        emit(cfg, out, "groups.json", doc.dump(2) + "\n");
      } else {
        doc["table"] = io::format_table(rep.merged);
        out << doc.dump(2) << "\n";
      }
      return;
    }
    case Subcommand::Stats: {
      const ZeroStats z = zero_stats(N);
      ordered_json doc;
      doc["rows"] = N.rows();
      doc["cols"] = N.cols();
      doc["total_cells"] = z.total_cells;
      doc["zero_cells"] = z.zero_cells;
      doc["zero_percent"] = z.zero_percent;
      doc["per_column_zeros"] = z.per_column_zeros;
      emit(cfg, out, "stats.json", doc.dump(2) + "\n");
      return;
    }
    default: break;
  }

  const Decomposition d = analyze(cfg, N);
  if (cfg.output_dir) {
    io::write_decomposition(d, cfg.format, *cfg.output_dir);
    if (cfg.map_axes)
      io::emit_map(d, cfg.map_axes->first, cfg.map_axes->second, *cfg.output_dir / "map.svg");
  } else if (cfg.format == io::Format::Csv) {
    out << io::dispersions_csv(d);
  } else {
    out << io::decomposition_json(d);
  }
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ValidationError*>(&e)) return 2;
  if (dynamic_cast<const NumericError*>(&e)) return 3;
  if (dynamic_cast<const IoError*>(&e)) return 4;
  return 1;
}

std::pair<std::size_t, std::optional<std::size_t>> parse_map_axes(const std::string& text) {
  std::string s = text;
  if (s.starts_with("axes=")) s = s.substr(5);
  const auto parse_one = [&](const std::string& part) -> std::size_t {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || v == 0)
      throw InvalidArgument("bad --map axes '" + text + "'; expected e.g. axes=1,2");
    return v;
  };
  const auto comma = s.find(',');
  if (comma == std::string::npos) return {parse_one(s), std::nullopt};
  return {parse_one(s.substr(0, comma)), parse_one(s.substr(comma + 1))};
}

}  // namespace powerca::cli
