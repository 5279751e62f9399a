#include "emit.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

namespace antvote::cli {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

const char* segment_color(Segment s) {
  switch (s) {
    case Segment::StrongEq: return "#888888";
    case Segment::Flat: return "#1f77b4";
    case Segment::Steep: return "#d62728";
    case Segment::NonLinear: return "#2ca02c";
    case Segment::Tail: return "#9467bd";
  }
  return "#000000";
}

}  // namespace

void write_curve_csv(std::ostream& out, const SignalModel& signal,
                     const std::vector<CurvePointReport>& points) {
  const double th = theta(signal);
  const double anl = alpha_nl(signal);
  out << "alpha,segment,xi_star,xi_numeric_lower,xi_numeric_upper,theta,"
         "alpha_nl\n";
  for (const auto& p : points) {
    out << num(p.alpha) << ',' << segment_name(p.segment) << ','
        << num(p.closed) << ',' << num(p.lower) << ',' << num(p.upper) << ','
        << num(th) << ',' << num(anl) << '\n';
  }
}

void write_curve_svg(std::ostream& out, const SignalModel& signal,
                     const std::vector<CurvePointReport>& points) {
  const double w = 640, h = 420, ml = 60, mr = 20, mt = 20, mb = 50;
  double xmin = 0.5, xmax = theta(signal);
  double ymax = 0.0;
  for (const auto& p : points) ymax = std::max(ymax, std::max(p.closed, p.upper));
  if (ymax <= 0.0) ymax = 1.0;
  ymax *= 1.1;

  auto X = [&](double a) {
    return ml + (a - xmin) / (xmax - xmin) * (w - ml - mr);
  };
  auto Y = [&](double v) { return h - mb - v / ymax * (h - mt - mb); };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
      << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h
      << "\">\n";
  out << "<rect width=\"" << w << "\" height=\"" << h
      << "\" fill=\"white\"/>\n";
  // axes
  out << "<line x1=\"" << ml << "\" y1=\"" << h - mb << "\" x2=\"" << w - mr
      << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml
      << "\" y2=\"" << h - mb << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << (ml + w - mr) / 2 << "\" y=\"" << h - 12
      << "\" text-anchor=\"middle\" font-size=\"14\">majority share</text>\n";
  out << "<text x=\"16\" y=\"" << (mt + h - mb) / 2
      << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 "
         "16 "
      << (mt + h - mb) / 2 << ")\">threshold</text>\n";

  // one polyline per contiguous segment run
  std::size_t i = 0;
  while (i < points.size()) {
    std::size_t j = i;
    while (j < points.size() && points[j].segment == points[i].segment) ++j;
    out << "<polyline fill=\"none\" stroke=\"" << segment_color(points[i].segment)
        << "\" stroke-width=\"2\" points=\"";
    for (std::size_t k = i; k < j; ++k) {
      out << num(X(points[k].alpha)) << ',' << num(Y(points[k].closed)) << ' ';
    }
    out << "\"/>\n";
    i = j;
  }
  for (const auto& p : points) {
    out << "<circle cx=\"" << num(X(p.alpha)) << "\" cy=\"" << num(Y(p.upper))
        << "\" r=\"1.5\" fill=\"#444444\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace antvote::cli
