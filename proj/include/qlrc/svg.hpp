#pragma once

#include <string>
#include <vector>

#include "qlrc/quantum.hpp"

namespace qlrc {

// Minimal deterministic SVG writer for the bound curves: axes with 0.1 ticks,
// one polyline per series, inline legend. No plotting dependency.
std::string curves_svg(const std::vector<CurveSeries>& series, const std::string& title);

// CSV with header "delta,griesmer,cm,singleton,plotkin" and 12-digit values.
std::string curves_csv(const std::vector<CurveSeries>& series);

}  // namespace qlrc
