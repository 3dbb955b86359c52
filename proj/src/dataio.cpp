#include "godisc/dataio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "godisc/error.hpp"

namespace godisc {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view text, double& out) {
  text = trim(text);
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

bool parse_int(std::string_view text, long& out) {
  text = trim(text);
  if (text.empty()) return false;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

// RFC-4180 style reader: quoted fields may contain the delimiter, newlines and
// doubled quotes. Blank lines are skipped.
std::vector<Record> read_records(std::istream& in, char delim, const std::string& source) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::vector<Record> records;
  Record current;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  std::size_t line = 1;
  current.line = 1;

  auto end_field = [&] {
    current.fields.push_back(field_was_quoted ? field : std::string(trim(field)));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = current.fields.size() == 1 && current.fields[0].empty();
    if (!blank) records.push_back(std::move(current));
    current = Record{};
    current.line = line;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && trim(field).empty()) {
      field.clear();
      in_quotes = true;
      field_was_quoted = true;
    } else if (c == delim) {
      end_field();
    } else if (c == '\n') {
      ++line;
      end_record();
    } else if (c == '\r') {
      // CRLF: the '\n' finishes the record.
    } else {
      field.push_back(c);
    }
  }
  if (in_quotes) {
    throw Error(ErrorCode::ParseError, source + ": unterminated quoted field starting before line " +
                                           std::to_string(line));
  }
  if (!field.empty() || !current.fields.empty()) end_record();
  return records;
}

std::string location(const std::string& source, std::size_t line, std::size_t column) {
  return source + ":" + std::to_string(line) + ": column " + std::to_string(column + 1);
}

}  // namespace

void validate(const LabeledDataset& data) {
  const std::size_t n = data.n_samples();
  const std::size_t c = data.n_classes();
  if (data.labels.size() != n) {
    throw Error(ErrorCode::ShapeError, "label count " + std::to_string(data.labels.size()) +
                                           " does not match sample count " + std::to_string(n));
  }
  if (data.n_features() < 1) throw Error(ErrorCode::ShapeError, "dataset has no feature columns");
  if (c < 2) throw Error(ErrorCode::InvalidArgument, "at least two classes are required");
  if (n < c) {
    throw Error(ErrorCode::TooFewSamples,
                std::to_string(n) + " samples cannot cover " + std::to_string(c) + " classes");
  }
  std::vector<std::size_t> counts(c, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const int label = data.labels[i];
    if (label < 0 || static_cast<std::size_t>(label) >= c) {
      throw Error(ErrorCode::InvalidArgument,
                  "label " + std::to_string(label) + " at row " + std::to_string(i) + " outside [0, " +
                      std::to_string(c) + ")");
    }
    ++counts[static_cast<std::size_t>(label)];
  }
  for (std::size_t j = 0; j < c; ++j) {
    if (counts[j] == 0) {
      throw Error(ErrorCode::EmptyClass, "class '" + data.class_names[j] + "' has no samples");
    }
  }
  if (!data.features.allFinite()) {
    throw Error(ErrorCode::ParseError, "features contain NaN or Inf");
  }
}

LabeledDataset make_dataset(RowMatrix features, std::vector<int> labels,
                            std::vector<std::string> class_names) {
  if (class_names.empty()) {
    int max_label = -1;
    for (int l : labels) max_label = std::max(max_label, l);
    for (int j = 0; j <= max_label; ++j) class_names.push_back(std::to_string(j));
  }
  LabeledDataset data{std::move(features), std::move(labels), std::move(class_names)};
  validate(data);
  return data;
}

LabeledDataset subset(const LabeledDataset& data, const std::vector<std::size_t>& index) {
  LabeledDataset out;
  out.features.resize(static_cast<Eigen::Index>(index.size()), data.features.cols());
  out.labels.reserve(index.size());
  for (std::size_t r = 0; r < index.size(); ++r) {
    out.features.row(static_cast<Eigen::Index>(r)) = data.features.row(static_cast<Eigen::Index>(index[r]));
    out.labels.push_back(data.labels[index[r]]);
  }
  out.class_names = data.class_names;
  validate(out);
  return out;
}

LabeledDataset parse_csv(std::istream& in, const DatasetSpec& spec, const std::string& source) {
  std::vector<Record> records = read_records(in, spec.delimiter, source);
  if (records.empty()) throw Error(ErrorCode::ParseError, source + ": no data rows");

  const std::size_t width = records.front().fields.size();
  if (width < 2) {
    throw Error(ErrorCode::ShapeError, source + ": need at least one feature column and a label column");
  }

  std::size_t label_col = 0;
  bool has_header = false;
  long index = 0;
  if (parse_int(spec.label_column, index)) {
    const long w = static_cast<long>(width);
    if (index < -w || index >= w) {
      throw Error(ErrorCode::ParseError, source + ": label column " + spec.label_column +
                                             " out of range for " + std::to_string(width) + " columns");
    }
    label_col = static_cast<std::size_t>(index < 0 ? index + w : index);
    const auto& first = records.front().fields;
    for (std::size_t c = 0; c < width; ++c) {
      double ignored;
      if (c != label_col && !parse_double(first[c], ignored)) {
        has_header = true;
        break;
      }
    }
  } else {
    has_header = true;
    const auto& header = records.front().fields;
    const auto matches = std::count(header.begin(), header.end(), spec.label_column);
    if (matches != 1) {
      throw Error(ErrorCode::ParseError, source + ": label column '" + spec.label_column + "' matches " +
                                             std::to_string(matches) + " header cells (need exactly 1)");
    }
    label_col = static_cast<std::size_t>(
        std::find(header.begin(), header.end(), spec.label_column) - header.begin());
  }

  const std::size_t first_row = has_header ? 1 : 0;
  if (records.size() <= first_row) throw Error(ErrorCode::ParseError, source + ": no data rows");
  const std::size_t n = records.size() - first_row;
  const std::size_t m = width - 1;

  LabeledDataset data;
  data.features.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
  data.labels.reserve(n);
  std::unordered_map<std::string, int> codes;

  for (std::size_t r = 0; r < n; ++r) {
    const Record& rec = records[first_row + r];
    if (rec.fields.size() != width) {
      throw Error(ErrorCode::ShapeError, source + ":" + std::to_string(rec.line) + ": expected " +
                                             std::to_string(width) + " fields, found " +
                                             std::to_string(rec.fields.size()));
    }
    std::size_t out_col = 0;
    for (std::size_t c = 0; c < width; ++c) {
      const std::string& cell = rec.fields[c];
      if (c == label_col) {
        if (cell.empty()) {
          throw Error(ErrorCode::ParseError, location(source, rec.line, c) + ": missing label");
        }
        auto [it, inserted] = codes.try_emplace(cell, static_cast<int>(data.class_names.size()));
        if (inserted) data.class_names.push_back(cell);
        data.labels.push_back(it->second);
        continue;
      }
      double value = 0.0;
      if (!parse_double(cell, value)) {
        throw Error(ErrorCode::ParseError, location(source, rec.line, c) + ": '" + cell +
                                               "' is not a number");
      }
      if (!std::isfinite(value)) {
        throw Error(ErrorCode::ParseError, location(source, rec.line, c) + ": non-finite value");
      }
      data.features(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(out_col++)) = value;
    }
  }

  validate(data);
  if (spec.standardize) standardize(data);
  return data;
}

LabeledDataset load_csv(const DatasetSpec& spec) {
  std::ifstream in(spec.path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + spec.path.string());
  return parse_csv(in, spec, spec.path.string());
}

void standardize(LabeledDataset& data) {
  const Eigen::Index n = data.features.rows();
  for (Eigen::Index c = 0; c < data.features.cols(); ++c) {
    auto col = data.features.col(c);
    const double mean = col.mean();
    col.array() -= mean;
    const double sd = std::sqrt(col.squaredNorm() / static_cast<double>(n));
    if (sd > 1e-12 * std::max(1.0, std::abs(mean))) col /= sd;
  }
}

Registry Registry::parse(std::istream& in, const std::filesystem::path& base_dir) {
  Registry reg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() < 4 || tok.size() > 5) {
      throw Error(ErrorCode::ParseError, "registry line " + std::to_string(line_no) +
                                             ": expected 'name path label_column standardize [delimiter]'");
    }
    DatasetSpec spec;
    spec.path = tok[1];
    if (spec.path.is_relative()) spec.path = base_dir / spec.path;
    spec.label_column = tok[2];
    const std::string& flag = tok[3];
    if (flag == "1" || flag == "true") {
      spec.standardize = true;
    } else if (flag == "0" || flag == "false") {
      spec.standardize = false;
    } else {
      throw Error(ErrorCode::ParseError, "registry line " + std::to_string(line_no) +
                                             ": standardize flag must be 0/1/true/false");
    }
    if (tok.size() == 5) {
      const std::string& d = tok[4];
      if (d == "tab") {
        spec.delimiter = '\t';
      } else if (d == "space") {
        spec.delimiter = ' ';
      } else if (d.size() == 1) {
        spec.delimiter = d[0];
      } else {
        throw Error(ErrorCode::ParseError, "registry line " + std::to_string(line_no) +
                                               ": delimiter must be a single character");
      }
    }
    reg.specs_[tok[0]] = std::move(spec);
  }
  return reg;
}

Registry Registry::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error(ErrorCode::IoError, "cannot open registry " + file.string());
  return parse(in, file.parent_path());
}

std::filesystem::path Registry::default_data_dir() {
  if (const char* dir = std::getenv("GODISC_DATA_DIR"); dir != nullptr && *dir != '\0') return dir;
  return GODISC_DEFAULT_DATA_DIR;
}

Registry Registry::load_default() { return load(default_data_dir() / "registry.txt"); }

const DatasetSpec& Registry::lookup(const std::string& name) const {
  auto it = specs_.find(name);
  if (it == specs_.end()) throw Error(ErrorCode::UnknownDataset, "no dataset named '" + name + "'");
  return it->second;
}

bool Registry::contains(const std::string& name) const { return specs_.count(name) != 0; }

std::vector<std::string> Registry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, spec] : specs_) out.push_back(name);
  return out;
}

}  // namespace godisc
