#pragma once

#include <string>
#include <vector>

#include "godisc/types.hpp"

namespace godisc {

struct ScatterPlot {
  MatrixXd points;  // P x 2
  std::vector<int> labels;
  std::vector<std::string> class_names;
  std::string title;
  std::string x_label;
  std::string y_label;
  int width = 640;
  int height = 480;
};

/// Static SVG: framed axes with tick labels, one colored circle per point,
/// legend in the top-right corner.
std::string render_scatter_svg(const ScatterPlot& plot);

}  // namespace godisc
