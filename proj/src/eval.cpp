#include "godisc/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "godisc/error.hpp"
#include "godisc/random.hpp"
#include "godisc/scatter.hpp"

namespace godisc {
namespace {

RowMatrix gather_rows(const RowMatrix& X, const std::vector<std::size_t>& rows) {
  RowMatrix out(static_cast<Eigen::Index>(rows.size()), X.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Eigen::Index>(i)) = X.row(static_cast<Eigen::Index>(rows[i]));
  }
  return out;
}

std::vector<int> gather_labels(const std::vector<int>& labels, const std::vector<std::size_t>& rows) {
  std::vector<int> out;
  out.reserve(rows.size());
  for (std::size_t r : rows) out.push_back(labels[r]);
  return out;
}

RowMatrix project_columns(const DiscriminantModel& model, const RowMatrix& X, std::size_t first,
                          std::size_t count) {
  return RowMatrix(X * model.directions.middleCols(static_cast<Eigen::Index>(first),
                                                   static_cast<Eigen::Index>(count)));
}

struct FoldCounts {
  std::size_t correct = 0;
  std::size_t total = 0;
};

AccuracyStat summarize(const std::vector<FoldCounts>& counts) {
  AccuracyStat stat;
  for (const auto& c : counts) {
    stat.correct += c.correct;
    stat.total += c.total;
    stat.per_fold.push_back(static_cast<double>(c.correct) / static_cast<double>(c.total));
  }
  double sum = 0.0;
  for (double a : stat.per_fold) sum += a;
  stat.mean = sum / static_cast<double>(stat.per_fold.size());
  double sq = 0.0;
  for (double a : stat.per_fold) sq += (a - stat.mean) * (a - stat.mean);
  stat.std = std::sqrt(sq / static_cast<double>(stat.per_fold.size()));
  return stat;
}

EvalReport base_report(const LabeledDataset& data, Method method, std::optional<ClassifierKind> classifier,
                       double delta) {
  EvalReport report;
  report.method = method;
  report.classifier = classifier;
  report.n_samples = data.n_samples();
  report.n_features = data.n_features();
  report.n_classes = data.n_classes();
  report.delta = delta;
  return report;
}

std::vector<Fold> resolve_folds(const LabeledDataset& data, const EvalOptions& options, EvalReport& report) {
  if (options.fixed_split) {
    report.folds = options.fixed_split->size();
    return *options.fixed_split;
  }
  report.folds = options.folds;
  report.seed = options.seed;
  return stratified_kfold(data.labels, data.n_classes(), options.folds, options.seed, &report.warnings);
}

FoldCounts score_fold(ClassifierKind kind, const RowMatrix& train_x, const std::vector<int>& train_y,
                      const RowMatrix& test_x, const std::vector<int>& test_y, std::size_t n_classes,
                      const ClassifierOptions& options) {
  const auto model = fit_classifier(kind, train_x, train_y, n_classes, options);
  const auto predicted = predict(model, test_x);
  FoldCounts counts;
  counts.total = test_y.size();
  for (std::size_t i = 0; i < test_y.size(); ++i) counts.correct += predicted[i] == test_y[i] ? 1 : 0;
  return counts;
}

}  // namespace

std::vector<Fold> stratified_kfold(const std::vector<int>& labels, std::size_t n_classes, std::size_t folds,
                                   std::uint64_t seed, std::vector<std::string>* warnings) {
  if (folds < 2) throw Error(ErrorCode::InvalidArgument, "folds must be >= 2");
  if (labels.size() < folds) {
    throw Error(ErrorCode::TooFewSamples, std::to_string(labels.size()) + " samples cannot fill " +
                                              std::to_string(folds) + " folds");
  }
  std::vector<std::vector<std::size_t>> members(n_classes);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int l = labels[i];
    if (l < 0 || static_cast<std::size_t>(l) >= n_classes) {
      throw Error(ErrorCode::InvalidArgument, "label " + std::to_string(l) + " out of range");
    }
    members[static_cast<std::size_t>(l)].push_back(i);
  }

  Rng rng(seed);
  std::vector<std::vector<std::size_t>> test(folds);
  std::size_t next_fold = 0;
  for (std::size_t j = 0; j < n_classes; ++j) {
    auto& idx = members[j];
    if (!idx.empty() && idx.size() < folds && warnings) {
      warnings->push_back("class " + std::to_string(j) + " has " + std::to_string(idx.size()) +
                          " samples, fewer than " + std::to_string(folds) + " folds");
    }
    rng.shuffle(std::span<std::size_t>(idx));
    for (std::size_t r : idx) {
      test[next_fold].push_back(r);
      next_fold = (next_fold + 1) % folds;
    }
  }

  std::vector<Fold> out(folds);
  std::vector<std::size_t> owner(labels.size());
  for (std::size_t f = 0; f < folds; ++f) {
    std::sort(test[f].begin(), test[f].end());
    for (std::size_t r : test[f]) owner[r] = f;
    out[f].test = std::move(test[f]);
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t f = 0; f < folds; ++f) {
      if (owner[i] != f) out[f].train.push_back(i);
    }
  }
  return out;
}

std::vector<Fold> load_split_file(const std::filesystem::path& path, std::size_t n_samples) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open split file " + path.string());
  Fold fold;
  std::string line;
  std::size_t line_no = 0;
  std::size_t sample = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string word;
    if (!(tokens >> word)) continue;
    if (word == "train") {
      fold.train.push_back(sample);
    } else if (word == "test") {
      fold.test.push_back(sample);
    } else {
      throw Error(ErrorCode::ParseError, path.string() + ":" + std::to_string(line_no) +
                                             ": expected 'train' or 'test', got '" + word + "'");
    }
    ++sample;
  }
  if (sample != n_samples) {
    throw Error(ErrorCode::ShapeError, "split file lists " + std::to_string(sample) + " samples, dataset has " +
                                           std::to_string(n_samples));
  }
  if (fold.train.empty() || fold.test.empty()) {
    throw Error(ErrorCode::InvalidArgument, "split file needs both train and test samples");
  }
  return {fold};
}

std::string_view sweep_name(Sweep sweep) noexcept {
  return sweep == Sweep::FeatureSweep ? "features" : "samples";
}

Sweep parse_sweep(std::string_view name) {
  if (name == "features" || name == "feature" || name == "M") return Sweep::FeatureSweep;
  if (name == "samples" || name == "sample" || name == "N") return Sweep::SampleSweep;
  throw Error(ErrorCode::InvalidArgument, "unknown sweep '" + std::string(name) + "'");
}

EvalReport per_direction_accuracy(const LabeledDataset& data, Method method, ClassifierKind classifier,
                                  std::size_t k, const EvalOptions& options) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  auto report = base_report(data, method, classifier, options.delta);
  const auto folds = resolve_folds(data, options, report);
  const std::size_t fitted = std::min(k, max_directions(method, data.n_classes(), data.n_features()));

  std::vector<std::vector<FoldCounts>> counts(fitted);
  for (const auto& fold : folds) {
    const auto train = subset(data, fold.train);
    const auto model = fit_method(method, train, fitted, options.delta);
    const RowMatrix test_x = gather_rows(data.features, fold.test);
    const auto test_y = gather_labels(data.labels, fold.test);
    for (std::size_t n = 0; n < fitted; ++n) {
      counts[n].push_back(score_fold(classifier, project_columns(model, train.features, n, 1), train.labels,
                                     project_columns(model, test_x, n, 1), test_y, data.n_classes(),
                                     options.classifier));
    }
  }
  for (std::size_t n = 0; n < k; ++n) {
    if (n < fitted) {
      report.per_direction.emplace_back(summarize(counts[n]));
    } else {
      report.per_direction.emplace_back(std::nullopt);
    }
  }
  return report;
}

EvalReport subspace_accuracy(const LabeledDataset& data, Method method, ClassifierKind classifier,
                             const std::vector<std::size_t>& l_values, const EvalOptions& options) {
  if (l_values.empty()) throw Error(ErrorCode::InvalidArgument, "no subspace dimensions given");
  std::vector<std::size_t> dims(l_values);
  std::sort(dims.begin(), dims.end());
  dims.erase(std::unique(dims.begin(), dims.end()), dims.end());
  const std::size_t limit = max_directions(method, data.n_classes(), data.n_features());
  std::size_t fitted = 0;
  for (std::size_t l : dims) {
    if (l == 0) throw Error(ErrorCode::InvalidArgument, "subspace dimension l must be >= 1");
    if (l <= limit) fitted = std::max(fitted, l);
  }
  auto report = base_report(data, method, classifier, options.delta);
  const auto folds = resolve_folds(data, options, report);

  std::map<std::size_t, std::vector<FoldCounts>> counts;
  if (fitted > 0) {
    for (const auto& fold : folds) {
      const auto train = subset(data, fold.train);
      const auto model = fit_method(method, train, fitted, options.delta);
      const RowMatrix test_x = gather_rows(data.features, fold.test);
      const auto test_y = gather_labels(data.labels, fold.test);
      for (std::size_t l : dims) {
        if (l > limit) continue;
        counts[l].push_back(score_fold(classifier, project_columns(model, train.features, 0, l), train.labels,
                                       project_columns(model, test_x, 0, l), test_y, data.n_classes(),
                                       options.classifier));
      }
    }
  }
  for (std::size_t l : dims) {
    if (l > limit) {
      report.subspace[l] = std::nullopt;
    } else {
      report.subspace[l] = summarize(counts[l]);
    }
  }
  return report;
}

EvalReport fisher_curve(const LabeledDataset& data, Method method, std::size_t k, double delta) {
  if (method == Method::PCA) {
    throw Error(ErrorCode::InvalidArgument, "fisher curves are defined for discriminant methods");
  }
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  auto report = base_report(data, method, std::nullopt, delta);
  const std::size_t limit = max_directions(method, data.n_classes(), data.n_features());
  if (k > limit) {
    report.warnings.push_back(std::string(method_name(method)) + " yields at most " + std::to_string(limit) +
                              " directions; curve truncated");
  }
  const auto stats = compute_stats(data, delta);
  const std::size_t fitted = std::min(k, limit);
  DiscriminantModel model;
  switch (method) {
    case Method::ClassicLDA: model = classic_lda(stats, fitted); break;
    case Method::GOLDA: model = go_lda(stats, fitted); break;
    case Method::FoleySammon: model = foley_sammon(stats, fitted); break;
    default: model = fit_method(method, data, fitted, delta); break;
  }
  for (std::size_t n = 0; n < std::min(fitted, model.n_directions()); ++n) {
    report.fisher_curve.push_back(fisher_ratio(model.directions.col(static_cast<Eigen::Index>(n)), stats));
  }
  return report;
}

EvalReport timing_benchmark(Sweep sweep, const std::vector<std::size_t>& sizes, const TimingOptions& options) {
  if (sizes.empty()) throw Error(ErrorCode::InvalidArgument, "no sizes given");
  if (!std::is_sorted(sizes.begin(), sizes.end())) {
    throw Error(ErrorCode::InvalidArgument, "sizes must be ascending");
  }
  if (options.repeats < 1) throw Error(ErrorCode::InvalidArgument, "repeats must be >= 1");
  EvalReport report;
  report.dataset = "blobs";
  report.sweep = sweep;
  report.seed = options.seed;
  report.n_classes = options.n_classes;

  using Clock = std::chrono::steady_clock;
  const auto seconds_since = [](Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  };
  const auto median = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t mid = v.size() / 2;
    return v.size() % 2 == 1 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
  };

  for (std::size_t size : sizes) {
    const std::size_t n = sweep == Sweep::FeatureSweep ? options.fixed_samples : size;
    const std::size_t m = sweep == Sweep::FeatureSweep ? size : options.fixed_features;
    const double bytes = static_cast<double>(n) * static_cast<double>(m) * sizeof(double) +
                         4.0 * static_cast<double>(m) * static_cast<double>(m) * sizeof(double);
    if (bytes > static_cast<double>(options.memory_budget_bytes)) {
      report.warnings.push_back("skipped N=" + std::to_string(n) + " M=" + std::to_string(m) +
                                ": exceeds memory budget");
      continue;
    }
    const auto data = make_blobs(n, m, options.n_classes, options.seed);
    std::vector<double> classic_times;
    std::vector<double> golda_times;
    const auto time_classic = [&] {
      const auto start = Clock::now();
      const auto stats = compute_stats(data);
      const auto model = classic_lda(stats, options.n_directions);
      classic_times.push_back(seconds_since(start));
      return model.n_directions();
    };
    const auto time_golda = [&] {
      const auto start = Clock::now();
      const auto stats = compute_stats(data);
      const auto model = go_lda(stats, options.n_directions);
      golda_times.push_back(seconds_since(start));
      return model.n_directions();
    };
    for (int r = 0; r < options.repeats; ++r) {
      if (r % 2 == 0) {
        time_classic();
        time_golda();
      } else {
        time_golda();
        time_classic();
      }
    }
    report.timing.push_back({n, m, median(classic_times), median(golda_times)});
  }
  return report;
}

}  // namespace godisc
