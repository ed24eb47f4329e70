#pragma once

#include <string>
#include <vector>

namespace swe {

struct SvgSeries {
  std::string name;
  const std::vector<double>* x = nullptr;
  const std::vector<double>* y = nullptr;
};

// Minimal fixed-styling line chart (polylines, axes, legend). Deterministic
// output for identical inputs.
std::string render_svg_chart(const std::string& title,
                             const std::vector<SvgSeries>& series);

}  // namespace swe
