#include "godisc/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace godisc {
namespace {

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

std::string exact(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string ordinal(std::size_t n) {
  const std::size_t mod100 = n % 100;
  const char* suffix = "th";
  if (mod100 < 11 || mod100 > 13) {
    switch (n % 10) {
      case 1: suffix = "st"; break;
      case 2: suffix = "nd"; break;
      case 3: suffix = "rd"; break;
      default: break;
    }
  }
  return std::to_string(n) + suffix;
}

nlohmann::json stat_json(const std::optional<AccuracyStat>& stat) {
  if (!stat) return nullptr;
  return {{"mean", stat->mean},
          {"std", stat->std},
          {"correct", stat->correct},
          {"total", stat->total},
          {"per_fold", stat->per_fold}};
}

std::string method_label(const EvalReport& r) { return r.method ? std::string(method_name(*r.method)) : "-"; }

std::string shape_label(const EvalReport& r) {
  return std::to_string(r.n_classes) + "/" + std::to_string(r.n_samples) + "/" + std::to_string(r.n_features);
}

std::string render(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size(), ' ');
    }
    out += line + '\n';
  }
  return out;
}

}  // namespace

nlohmann::json report_to_json(const EvalReport& r) {
  nlohmann::json doc;
  doc["format"] = "godisc-report";
  doc["version"] = 1;
  doc["dataset"] = r.dataset;
  if (r.method) doc["method"] = std::string(method_name(*r.method));
  if (r.classifier) doc["classifier"] = std::string(classifier_name(*r.classifier));
  doc["n_classes"] = r.n_classes;
  if (!r.sweep) {
    doc["n_samples"] = r.n_samples;
    doc["n_features"] = r.n_features;
    doc["delta"] = r.delta;
  }
  if (r.folds > 0) doc["folds"] = r.folds;
  doc["seed"] = r.seed;

  if (!r.per_direction.empty()) {
    nlohmann::json acc = nlohmann::json::array();
    nlohmann::json std_dev = nlohmann::json::array();
    nlohmann::json detail = nlohmann::json::array();
    for (const auto& stat : r.per_direction) {
      acc.push_back(stat ? nlohmann::json(stat->mean) : nlohmann::json(nullptr));
      std_dev.push_back(stat ? nlohmann::json(stat->std) : nlohmann::json(nullptr));
      detail.push_back(stat_json(stat));
    }
    doc["per_direction_acc"] = std::move(acc);
    doc["per_direction_std"] = std::move(std_dev);
    doc["per_direction"] = std::move(detail);
  }
  if (!r.subspace.empty()) {
    nlohmann::json sub = nlohmann::json::object();
    for (const auto& [l, stat] : r.subspace) sub[std::to_string(l)] = stat_json(stat);
    doc["subspace_acc"] = std::move(sub);
  }
  if (!r.fisher_curve.empty()) doc["fisher_curve"] = r.fisher_curve;
  if (r.sweep) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.timing) {
      rows.push_back({{"n_samples", row.n_samples},
                      {"n_features", row.n_features},
                      {"classic_lda_seconds", row.classic_seconds},
                      {"go_lda_seconds", row.golda_seconds}});
    }
    doc["timing"] = {{"sweep", std::string(sweep_name(*r.sweep))}, {"rows", std::move(rows)}};
  }
  doc["warnings"] = r.warnings;
  return doc;
}

std::string format_table(const EvalReport& r) {
  std::vector<std::vector<std::string>> rows;
  std::ostringstream out;

  if (!r.per_direction.empty()) {
    std::vector<std::string> header{"Data", "C/N/M", "Method"};
    std::vector<std::string> row{r.dataset, shape_label(r), method_label(r)};
    for (std::size_t n = 0; n < r.per_direction.size(); ++n) {
      header.push_back(ordinal(n + 1));
      const auto& stat = r.per_direction[n];
      row.push_back(stat ? fixed(stat->mean, 2) : "N/A");
    }
    rows = {header, row};
    out << render(rows);
  }
  if (!r.subspace.empty()) {
    if (out.tellp() > 0) out << '\n';
    std::vector<std::string> header{"Data", "C/N/M", "Method"};
    std::vector<std::string> row{r.dataset, shape_label(r), method_label(r)};
    for (const auto& [l, stat] : r.subspace) {
      header.push_back("l=" + std::to_string(l));
      row.push_back(stat ? fixed(stat->mean, 2) + "+/-" + fixed(stat->std, 2) : "N/A");
    }
    rows = {header, row};
    out << render(rows);
  }
  if (!r.fisher_curve.empty()) {
    if (out.tellp() > 0) out << '\n';
    rows = {{"n", "fisher_ratio"}};
    for (std::size_t n = 0; n < r.fisher_curve.size(); ++n) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6g", r.fisher_curve[n]);
      rows.push_back({std::to_string(n + 1), buf});
    }
    out << render(rows);
  }
  if (r.sweep) {
    if (out.tellp() > 0) out << '\n';
    rows = {{"N", "M", "classic-lda [s]", "go-lda [s]", "ratio"}};
    for (const auto& t : r.timing) {
      rows.push_back({std::to_string(t.n_samples), std::to_string(t.n_features), fixed(t.classic_seconds, 6),
                      fixed(t.golda_seconds, 6),
                      t.classic_seconds > 0.0 ? fixed(t.golda_seconds / t.classic_seconds, 3) : "N/A"});
    }
    out << render(rows);
  }
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  return out.str();
}

std::string format_csv(const EvalReport& r) {
  std::ostringstream out;
  if (!r.per_direction.empty()) {
    out << "direction,mean,std\n";
    for (std::size_t n = 0; n < r.per_direction.size(); ++n) {
      const auto& stat = r.per_direction[n];
      out << n + 1 << ',' << (stat ? exact(stat->mean) : "NA") << ',' << (stat ? exact(stat->std) : "NA")
          << '\n';
    }
  }
  if (!r.subspace.empty()) {
    out << "l,mean,std\n";
    for (const auto& [l, stat] : r.subspace) {
      out << l << ',' << (stat ? exact(stat->mean) : "NA") << ',' << (stat ? exact(stat->std) : "NA") << '\n';
    }
  }
  if (!r.fisher_curve.empty()) {
    out << "direction,fisher_ratio\n";
    for (std::size_t n = 0; n < r.fisher_curve.size(); ++n) out << n + 1 << ',' << exact(r.fisher_curve[n]) << '\n';
  }
  if (r.sweep) {
    out << "n_samples,n_features,classic_lda_seconds,go_lda_seconds\n";
    for (const auto& t : r.timing) {
      out << t.n_samples << ',' << t.n_features << ',' << exact(t.classic_seconds) << ','
          << exact(t.golda_seconds) << '\n';
    }
  }
  return out.str();
}

}  // namespace godisc
