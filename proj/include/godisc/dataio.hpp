#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "godisc/types.hpp"

namespace godisc {

/// N-by-M feature matrix with dense class labels in [0, C).
///
/// Construct through make_dataset() or load_csv(); both validate that every
/// class occurs, that features are finite, and that N >= C >= 2, M >= 1.
struct LabeledDataset {
  RowMatrix features;
  std::vector<int> labels;
  std::vector<std::string> class_names;

  std::size_t n_samples() const noexcept { return static_cast<std::size_t>(features.rows()); }
  std::size_t n_features() const noexcept { return static_cast<std::size_t>(features.cols()); }
  std::size_t n_classes() const noexcept { return class_names.size(); }
};

/// Builds and validates a dataset. Empty `class_names` yields "0".."C-1" with
/// C = max(label) + 1.
LabeledDataset make_dataset(RowMatrix features, std::vector<int> labels,
                            std::vector<std::string> class_names = {});

/// Throws the matching Error when an invariant of LabeledDataset is broken.
void validate(const LabeledDataset& data);

/// Rows selected by `index`, class metadata kept (every class must still occur).
LabeledDataset subset(const LabeledDataset& data, const std::vector<std::size_t>& index);

struct DatasetSpec {
  std::filesystem::path path;
  // 0-based column index, negative index counted from the end (-1 = last
  // column), or a header name.
  std::string label_column = "-1";
  bool standardize = false;
  char delimiter = ',';
};

LabeledDataset load_csv(const DatasetSpec& spec);

/// Same as load_csv but reads from an open stream; `source` names it in errors.
LabeledDataset parse_csv(std::istream& in, const DatasetSpec& spec,
                         const std::string& source = "<stream>");

/// Per-column z-scoring with population std. Columns whose std is zero (to
/// 1e-12 relative to the column mean) are centered only.
void standardize(LabeledDataset& data);

/// Name -> DatasetSpec table read from a plain-text config.
///
/// One dataset per line: `name path label_column standardize [delimiter]`,
/// whitespace-separated; `#` starts a comment. Relative paths resolve against
/// the registry file's directory. `standardize` is 0/1/true/false. The
/// delimiter may be written as `tab` or `space`.
class Registry {
 public:
  static Registry load(const std::filesystem::path& file);
  static Registry parse(std::istream& in, const std::filesystem::path& base_dir);

  /// Registry under $GODISC_DATA_DIR/registry.txt, falling back to the data
  /// directory shipped with the sources.
  static Registry load_default();
  static std::filesystem::path default_data_dir();

  const DatasetSpec& lookup(const std::string& name) const;
  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;

 private:
  std::map<std::string, DatasetSpec> specs_;
};

/// Isotropic Gaussian blobs: centers drawn uniformly from [-10, 10]^M, unit
/// std per coordinate, samples split across classes as evenly as possible
/// (lower class indices take the remainder). Deterministic given `seed`.
LabeledDataset make_blobs(std::size_t n_samples, std::size_t n_features, std::size_t n_classes,
                          std::uint64_t seed, double cluster_std = 1.0);

}  // namespace godisc
