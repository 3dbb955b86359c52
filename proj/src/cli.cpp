#include "godisc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "godisc/dataio.hpp"
#include "godisc/discriminant.hpp"
#include "godisc/error.hpp"
#include "godisc/eval.hpp"
#include "godisc/json_io.hpp"
#include "godisc/model_io.hpp"
#include "godisc/report.hpp"
#include "godisc/svg.hpp"

namespace godisc::cli {
namespace {

const std::vector<std::string> kMethods{"classic-lda", "gram-schmidt-lda", "go-lda", "foley-sammon", "pca"};
const std::vector<std::string> kClassifiers{"knn", "1nn", "linear", "quadratic"};

struct DataFlags {
  std::string dataset;
  std::string registry;
  std::string label_column;
  bool standardize = false;
};

struct Flags {
  DataFlags data;
  std::string method = "go-lda";
  std::string classifier;
  std::optional<std::size_t> k;
  std::vector<std::size_t> l_values;
  std::size_t folds = 10;
  std::uint64_t seed = 42;
  double delta = kDefaultDelta;
  std::string out;
  std::string format;
  std::string model;
  std::string split;
  std::vector<std::size_t> dims{1, 2};
  std::string sweep = "features";
  std::vector<std::size_t> sizes;
  std::size_t classes = 5;
  std::size_t directions = 4;
  int repeats = 3;
};

void add_data_flags(CLI::App* cmd, DataFlags& d, bool required = true) {
  auto* opt = cmd->add_option("--dataset", d.dataset, "Registry name or path to a CSV file");
  if (required) opt->required();
  cmd->add_option("--registry", d.registry, "Registry file (default: $GODISC_DATA_DIR/registry.txt)");
  cmd->add_option("--label-column", d.label_column, "Label column for CSV paths (index or header name)");
  cmd->add_flag("--standardize", d.standardize, "Z-score every feature column");
}

void add_method_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--method", f.method, "Subspace method")->check(CLI::IsMember(kMethods));
  cmd->add_option("--delta", f.delta, "Within-class scatter regularization")->check(CLI::NonNegativeNumber);
}

void add_output_flags(CLI::App* cmd, Flags& f, const std::vector<std::string>& formats) {
  cmd->add_option("--out", f.out, "Output file (default: standard output)");
  cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember(formats));
}

void add_cv_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--classifier", f.classifier, "Classifier")->check(CLI::IsMember(kClassifiers));
  cmd->add_option("--folds", f.folds, "Cross-validation folds")->check(CLI::Range(2, 1000000));
  cmd->add_option("--seed", f.seed, "Fold shuffling seed");
  cmd->add_option("--split", f.split, "Predefined train/test split file (replaces folds)");
}

LabeledDataset load_dataset(const DataFlags& d) {
  const bool looks_like_path = d.dataset.find('/') != std::string::npos ||
                               d.dataset.ends_with(".csv") || d.dataset.ends_with(".txt");
  const Registry registry = d.registry.empty() ? Registry::load_default() : Registry::load(d.registry);
  DatasetSpec spec;
  if (!looks_like_path && registry.contains(d.dataset)) {
    spec = registry.lookup(d.dataset);
  } else if (looks_like_path || std::filesystem::exists(d.dataset)) {
    spec.path = d.dataset;
  } else {
    spec = registry.lookup(d.dataset);
  }
  if (!d.label_column.empty()) spec.label_column = d.label_column;
  if (d.standardize) spec.standardize = true;
  return load_csv(spec);
}

std::string dataset_label(const std::string& dataset) {
  if (dataset.find('/') == std::string::npos && !dataset.ends_with(".csv")) return dataset;
  return std::filesystem::path(dataset).stem().string();
}

std::size_t default_k(Method method, const LabeledDataset& data) {
  return std::min<std::size_t>(max_directions(method, data.n_classes(), data.n_features()), 15);
}

void emit(const Flags& f, const std::string& text, std::ostream& out) {
  if (f.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(f.out, std::ios::binary);
  if (!file) throw Error(ErrorCode::IoError, "cannot write " + f.out);
  file << text;
  if (!file) throw Error(ErrorCode::IoError, "write failed for " + f.out);
}

std::string render_report(const EvalReport& report, const std::string& format) {
  if (format == "json") return dump_json(report_to_json(report)) + "\n";
  if (format == "csv") return format_csv(report);
  return format_table(report);
}

EvalOptions eval_options(const Flags& f, const LabeledDataset& data) {
  EvalOptions options;
  options.folds = f.folds;
  options.seed = f.seed;
  options.delta = f.delta;
  if (!f.split.empty()) options.fixed_split = load_split_file(f.split, data.n_samples());
  return options;
}

int cmd_fit(const Flags& f, std::ostream& out) {
  const auto data = load_dataset(f.data);
  const Method method = parse_method(f.method);
  const auto model = fit_method(method, data, f.k.value_or(default_k(method, data)), f.delta);
  emit(f, dump_json(model_to_json(model)) + "\n", out);
  return 0;
}

int cmd_project(const Flags& f, std::ostream& out) {
  const auto model = load_model(f.model);
  const auto data = load_dataset(f.data);
  const MatrixXd projected = project(model, MatrixXd(data.features), f.k.value_or(0));
  if (f.format == "csv") {
    std::ostringstream csv;
    for (Eigen::Index c = 0; c < projected.cols(); ++c) csv << 'u' << c + 1 << ',';
    csv << "class\n";
    char buf[32];
    for (Eigen::Index r = 0; r < projected.rows(); ++r) {
      for (Eigen::Index c = 0; c < projected.cols(); ++c) {
        std::snprintf(buf, sizeof buf, "%.17g", projected(r, c));
        csv << buf << ',';
      }
      csv << data.class_names[static_cast<std::size_t>(data.labels[static_cast<std::size_t>(r)])] << '\n';
    }
    emit(f, csv.str(), out);
    return 0;
  }
  nlohmann::json doc;
  doc["format"] = "godisc-projection";
  doc["version"] = 1;
  doc["dataset"] = dataset_label(f.data.dataset);
  doc["method"] = std::string(method_name(model.method));
  doc["k"] = projected.cols();
  doc["class_names"] = data.class_names;
  doc["labels"] = data.labels;
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < projected.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < projected.cols(); ++c) row.push_back(projected(r, c));
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  emit(f, dump_json(doc) + "\n", out);
  return 0;
}

int cmd_fisher_curve(const Flags& f, std::ostream& out) {
  const auto data = load_dataset(f.data);
  const Method method = parse_method(f.method);
  const std::size_t k = f.k.value_or(std::min<std::size_t>(data.n_features(), 15));
  auto report = fisher_curve(data, method, k, f.delta);
  report.dataset = dataset_label(f.data.dataset);
  emit(f, render_report(report, f.format.empty() ? "json" : f.format), out);
  return 0;
}

int cmd_per_direction(const Flags& f, std::ostream& out) {
  const auto data = load_dataset(f.data);
  const Method method = parse_method(f.method);
  const auto classifier = parse_classifier(f.classifier.empty() ? "quadratic" : f.classifier);
  const std::size_t k = f.k.value_or(std::min<std::size_t>(data.n_features(), 15));
  auto report = per_direction_accuracy(data, method, classifier, k, eval_options(f, data));
  report.dataset = dataset_label(f.data.dataset);
  emit(f, render_report(report, f.format.empty() ? "table" : f.format), out);
  return 0;
}

int cmd_subspace(const Flags& f, std::ostream& out) {
  const auto data = load_dataset(f.data);
  const Method method = parse_method(f.method);
  const auto classifier = parse_classifier(f.classifier.empty() ? "knn" : f.classifier);
  auto report = subspace_accuracy(data, method, classifier, f.l_values, eval_options(f, data));
  report.dataset = dataset_label(f.data.dataset);
  emit(f, render_report(report, f.format.empty() ? "table" : f.format), out);
  return 0;
}

int cmd_timing(const Flags& f, std::ostream& out) {
  TimingOptions options;
  options.n_classes = f.classes;
  options.n_directions = f.directions;
  options.seed = f.seed;
  options.repeats = f.repeats;
  const auto report = timing_benchmark(parse_sweep(f.sweep), f.sizes, options);
  emit(f, render_report(report, f.format.empty() ? "json" : f.format), out);
  return 0;
}

int cmd_scatter(const Flags& f, std::ostream& out) {
  const auto data = load_dataset(f.data);
  const Method method = parse_method(f.method);
  const std::size_t k = std::max(f.dims[0], f.dims[1]);
  const auto model = fit_method(method, data, k, f.delta);
  const MatrixXd projected = project(model, MatrixXd(data.features));
  ScatterPlot plot;
  plot.points.resize(projected.rows(), 2);
  plot.points.col(0) = projected.col(static_cast<Eigen::Index>(f.dims[0] - 1));
  plot.points.col(1) = projected.col(static_cast<Eigen::Index>(f.dims[1] - 1));
  plot.labels = data.labels;
  plot.class_names = data.class_names;
  plot.title = dataset_label(f.data.dataset) + " (" + std::string(method_name(method)) + ")";
  plot.x_label = "direction " + std::to_string(f.dims[0]);
  plot.y_label = "direction " + std::to_string(f.dims[1]);

  if (f.format == "json") {
    nlohmann::json doc;
    doc["format"] = "godisc-scatter";
    doc["version"] = 1;
    doc["dataset"] = dataset_label(f.data.dataset);
    doc["method"] = std::string(method_name(method));
    doc["dims"] = f.dims;
    doc["class_names"] = data.class_names;
    doc["labels"] = data.labels;
    nlohmann::json x = nlohmann::json::array(), y = nlohmann::json::array();
    for (Eigen::Index r = 0; r < plot.points.rows(); ++r) {
      x.push_back(plot.points(r, 0));
      y.push_back(plot.points(r, 1));
    }
    doc["x"] = std::move(x);
    doc["y"] = std::move(y);
    emit(f, dump_json(doc) + "\n", out);
    return 0;
  }
  emit(f, render_scatter_svg(plot), out);
  return 0;
}

int cmd_datasets(const Flags& f, std::ostream& out) {
  const Registry registry = f.data.registry.empty() ? Registry::load_default() : Registry::load(f.data.registry);
  for (const auto& name : registry.names()) out << name << '\t' << registry.lookup(name).path.string() << '\n';
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonal discriminant subspaces: fitting, evaluation and benchmarks", "godisc"};
  app.require_subcommand(1);
  Flags f;

  auto* fit = app.add_subcommand("fit", "Fit a subspace model and write it as JSON");
  add_data_flags(fit, f.data);
  add_method_flags(fit, f);
  fit->add_option("--k", f.k, "Number of directions")->check(CLI::PositiveNumber);
  fit->add_option("--out", f.out, "Model file (default: standard output)");

  auto* proj = app.add_subcommand("project", "Project a dataset through a saved model");
  proj->add_option("--model", f.model, "Model file written by fit")->required();
  add_data_flags(proj, f.data);
  proj->add_option("--k", f.k, "Use only the first k directions")->check(CLI::PositiveNumber);
  add_output_flags(proj, f, {"json", "csv"});

  auto* curve = app.add_subcommand("fisher-curve", "Fisher ratio of each direction on the full dataset");
  add_data_flags(curve, f.data);
  add_method_flags(curve, f);
  curve->add_option("--k", f.k, "Number of directions")->check(CLI::PositiveNumber);
  add_output_flags(curve, f, {"json", "table", "csv"});

  auto* per_dir = app.add_subcommand("per-direction", "Cross-validated accuracy on each single direction");
  add_data_flags(per_dir, f.data);
  add_method_flags(per_dir, f);
  add_cv_flags(per_dir, f);
  per_dir->add_option("--k", f.k, "Number of directions")->check(CLI::PositiveNumber);
  add_output_flags(per_dir, f, {"json", "table", "csv"});

  auto* sub = app.add_subcommand("subspace", "Cross-validated accuracy on the first l directions");
  add_data_flags(sub, f.data);
  add_method_flags(sub, f);
  add_cv_flags(sub, f);
  sub->add_option("--l", f.l_values, "Subspace dimensions, comma separated")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  add_output_flags(sub, f, {"json", "table", "csv"});

  auto* timing = app.add_subcommand("timing", "Wall time of classic LDA and GO-LDA on synthetic blobs");
  timing->add_option("--sweep", f.sweep, "features (N fixed at 1000) or samples (M fixed at 10)")
      ->check(CLI::IsMember({"features", "samples"}));
  timing->add_option("--sizes", f.sizes, "Ascending sizes of the swept dimension, comma separated")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  timing->add_option("--classes", f.classes, "Number of classes")->check(CLI::Range(2, 1000000));
  timing->add_option("--directions", f.directions, "Directions fitted by each method")
      ->check(CLI::PositiveNumber);
  timing->add_option("--repeats", f.repeats, "Repeats per size (median reported)")->check(CLI::PositiveNumber);
  timing->add_option("--seed", f.seed, "Blob generator seed");
  add_output_flags(timing, f, {"json", "table", "csv"});

  auto* scatter = app.add_subcommand("scatter", "2-D scatter of the projections on two directions");
  add_data_flags(scatter, f.data);
  add_method_flags(scatter, f);
  scatter->add_option("--dims", f.dims, "Two 1-based direction indices, e.g. 4,5")
      ->delimiter(',')
      ->expected(2)
      ->check(CLI::PositiveNumber);
  add_output_flags(scatter, f, {"svg", "json"});

  auto* datasets = app.add_subcommand("datasets", "List the registered datasets");
  datasets->add_option("--registry", f.data.registry, "Registry file");

  try {
    app.parse(argc, argv);
    if (*scatter && f.dims.size() != 2) throw CLI::ValidationError("--dims", "expects exactly two indices");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  }

  try {
    if (*fit) return cmd_fit(f, out);
    if (*proj) return cmd_project(f, out);
    if (*curve) return cmd_fisher_curve(f, out);
    if (*per_dir) return cmd_per_direction(f, out);
    if (*sub) return cmd_subspace(f, out);
    if (*timing) return cmd_timing(f, out);
    if (*scatter) return cmd_scatter(f, out);
    if (*datasets) return cmd_datasets(f, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"godisc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace godisc::cli
