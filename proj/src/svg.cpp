#include "swe/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace swe {

namespace {

constexpr int kWidth = 720, kHeight = 480;
constexpr int kLeft = 64, kRight = 16, kTop = 32, kBottom = 40;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

std::string render_svg_chart(const std::string& title,
                             const std::vector<SvgSeries>& series) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series) {
    for (double v : *s.x) { xmin = std::min(xmin, v); xmax = std::max(xmax, v); }
    for (double v : *s.y) { ymin = std::min(ymin, v); ymax = std::max(ymax, v); }
  }
  if (!(xmax > xmin)) xmax = xmin + 1.0;
  if (!(ymax > ymin)) ymax = ymin + 1.0;

  const double px = (kWidth - kLeft - kRight) / (xmax - xmin);
  const double py = (kHeight - kTop - kBottom) / (ymax - ymin);
  auto sx = [&](double x) { return kLeft + (x - xmin) * px; };
  auto sy = [&](double y) { return kHeight - kBottom - (y - ymin) * py; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << kWidth / 2 << "\" y=\"20\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n";

  // axes with end labels
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kHeight - kBottom << "\" x2=\""
     << kWidth - kRight << "\" y2=\"" << kHeight - kBottom
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
     << "\" y2=\"" << kHeight - kBottom << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << kLeft << "\" y=\"" << kHeight - 12
     << "\" font-family=\"sans-serif\" font-size=\"11\">" << num(xmin)
     << "</text>\n";
  os << "<text x=\"" << kWidth - kRight << "\" y=\"" << kHeight - 12
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
     << num(xmax) << "</text>\n";
  os << "<text x=\"" << kLeft - 6 << "\" y=\"" << kHeight - kBottom
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
     << num(ymin) << "</text>\n";
  os << "<text x=\"" << kLeft - 6 << "\" y=\"" << kTop + 4
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
     << num(ymax) << "</text>\n";

  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    const char* color = kPalette[k % (sizeof(kPalette) / sizeof(*kPalette))];
    os << "<polyline fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x->size(); ++i) {
      if (i) os << ' ';
      os << num(sx((*s.x)[i])) << ',' << num(sy((*s.y)[i]));
    }
    os << "\"/>\n";
    os << "<text x=\"" << kWidth - kRight - 8 << "\" y=\""
       << kTop + 16 + 14 * k
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\" "
          "fill=\"" << color << "\">" << s.name << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace swe
