#include "godisc/model_io.hpp"

#include <fstream>

#include "godisc/error.hpp"
#include "godisc/json_io.hpp"

namespace godisc {

nlohmann::json model_to_json(const DiscriminantModel& model) {
  nlohmann::json doc;
  doc["format"] = "godisc-model";
  doc["version"] = 1;
  doc["method"] = std::string(method_name(model.method));
  doc["delta"] = model.delta;
  doc["k_requested"] = model.k_requested;
  doc["n_features"] = model.n_features();
  nlohmann::json dirs = nlohmann::json::array();
  for (Eigen::Index k = 0; k < model.directions.cols(); ++k) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index i = 0; i < model.directions.rows(); ++i) row.push_back(model.directions(i, k));
    dirs.push_back(std::move(row));
  }
  doc["directions"] = std::move(dirs);
  doc["ratios"] = model.ratios;
  return doc;
}

DiscriminantModel model_from_json(const nlohmann::json& doc) {
  try {
    if (doc.at("format").get<std::string>() != "godisc-model") {
      throw Error(ErrorCode::ParseError, "not a godisc model document");
    }
    DiscriminantModel model;
    model.method = parse_method(doc.at("method").get<std::string>());
    model.delta = doc.at("delta").get<double>();
    model.k_requested = doc.at("k_requested").get<std::size_t>();
    const auto m = doc.at("n_features").get<Eigen::Index>();
    const auto& dirs = doc.at("directions");
    model.directions.resize(m, static_cast<Eigen::Index>(dirs.size()));
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      const auto& row = dirs[k];
      if (static_cast<Eigen::Index>(row.size()) != m) {
        throw Error(ErrorCode::ShapeError, "direction " + std::to_string(k + 1) + " has " +
                                               std::to_string(row.size()) + " entries, expected " +
                                               std::to_string(m));
      }
      for (Eigen::Index i = 0; i < m; ++i) {
        model.directions(i, static_cast<Eigen::Index>(k)) = row[static_cast<std::size_t>(i)].get<double>();
      }
    }
    model.ratios = doc.at("ratios").get<std::vector<double>>();
    if (model.ratios.size() != dirs.size()) {
      throw Error(ErrorCode::ShapeError, "ratio count does not match direction count");
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed model document: ") + e.what());
  }
}

void save_model(const DiscriminantModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << dump_json(model_to_json(model)) << '\n';
}

DiscriminantModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
  return model_from_json(doc);
}

}  // namespace godisc
