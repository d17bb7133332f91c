#pragma once

#include <string>

#include "core/curve.hpp"

namespace dewet {

// Curve snapshot files: header "x,y", one node per row, 17 significant
// digits so that write/read round-trips bit-losslessly.
void write_curve_csv(const OpenCurve& curve, const std::string& path);
OpenCurve read_curve_csv(const std::string& path);

std::string format_double(double v);       // shortest-faithful, 17 digits max
double parse_double(const std::string& s); // throws IoError on garbage

}  // namespace dewet
