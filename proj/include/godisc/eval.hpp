#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "godisc/classify.hpp"
#include "godisc/dataio.hpp"
#include "godisc/discriminant.hpp"

namespace godisc {

struct Fold {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Stratified split: each class is shuffled with its own seeded stream and
/// dealt round-robin across folds, continuing from where the previous class
/// stopped so fold sizes stay balanced too. Classes with fewer than `folds`
/// samples are dealt best-effort and reported in `warnings`.
std::vector<Fold> stratified_kfold(const std::vector<int>& labels, std::size_t n_classes, std::size_t folds,
                                   std::uint64_t seed, std::vector<std::string>* warnings = nullptr);

/// Fixed train/test split, one line per sample holding `train` or `test`
/// (blank lines and `#` comments skipped).
std::vector<Fold> load_split_file(const std::filesystem::path& path, std::size_t n_samples);

struct AccuracyStat {
  double mean = 0.0;
  double std = 0.0;  // population std over folds
  std::vector<double> per_fold;
  std::size_t correct = 0;
  std::size_t total = 0;
};

enum class Sweep { FeatureSweep, SampleSweep };

std::string_view sweep_name(Sweep sweep) noexcept;
Sweep parse_sweep(std::string_view name);

struct TimingRow {
  std::size_t n_samples = 0;
  std::size_t n_features = 0;
  double classic_seconds = 0.0;
  double golda_seconds = 0.0;
};

struct EvalReport {
  std::string dataset;
  std::optional<Method> method;
  std::optional<ClassifierKind> classifier;
  std::size_t n_samples = 0;
  std::size_t n_features = 0;
  std::size_t n_classes = 0;
  std::size_t folds = 0;
  std::uint64_t seed = 0;
  double delta = kDefaultDelta;

  // Entry n-1 is direction n; nullopt marks a direction the method cannot produce.
  std::vector<std::optional<AccuracyStat>> per_direction;
  std::map<std::size_t, std::optional<AccuracyStat>> subspace;
  std::vector<double> fisher_curve;

  std::optional<Sweep> sweep;
  std::vector<TimingRow> timing;

  std::vector<std::string> warnings;
};

struct EvalOptions {
  std::size_t folds = 10;
  std::uint64_t seed = 42;
  double delta = kDefaultDelta;
  ClassifierOptions classifier;
  // Used instead of stratified folds when set.
  std::optional<std::vector<Fold>> fixed_split;
};

EvalReport per_direction_accuracy(const LabeledDataset& data, Method method, ClassifierKind classifier,
                                  std::size_t k, const EvalOptions& options = {});

/// Values of l above the method's direction limit are reported as N/A; l = 0
/// is rejected.
EvalReport subspace_accuracy(const LabeledDataset& data, Method method, ClassifierKind classifier,
                             const std::vector<std::size_t>& l_values, const EvalOptions& options = {});

/// Fisher ratio of each fitted direction against the full dataset's scatter.
/// Classic LDA is truncated at C-1 directions.
EvalReport fisher_curve(const LabeledDataset& data, Method method, std::size_t k,
                        double delta = kDefaultDelta);

struct TimingOptions {
  std::size_t n_classes = 5;
  std::size_t n_directions = 4;
  std::uint64_t seed = 42;
  int repeats = 3;
  std::size_t fixed_samples = 1000;  // FeatureSweep
  std::size_t fixed_features = 10;   // SampleSweep
  std::size_t memory_budget_bytes = std::size_t{2} << 30;
};

/// Wall time (median of `repeats`, monotonic clock) of fitting classic LDA
/// and GO-LDA, scatter computation included, on blobs of each size.
EvalReport timing_benchmark(Sweep sweep, const std::vector<std::size_t>& sizes,
                            const TimingOptions& options = {});

}  // namespace godisc
