#pragma once

#include <ostream>
#include <vector>

#include "antvote/oracle.hpp"

namespace antvote::cli {

// Deterministic CSV: '.' decimal separator, LF line endings, %.12g values.
void write_curve_csv(std::ostream& out, const SignalModel& signal,
                     const std::vector<CurvePointReport>& points);

// Dependency-free SVG rendering of the closed-form curve, one colored
// polyline per segment, with the numeric upper bound overlaid as dots.
void write_curve_svg(std::ostream& out, const SignalModel& signal,
                     const std::vector<CurvePointReport>& points);

}  // namespace antvote::cli
