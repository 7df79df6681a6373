#include "hoctop/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace hoctop {
namespace {

constexpr double kWidth = 480.0;
constexpr double kHeight = 360.0;
constexpr double kMargin = 48.0;

struct Range {
  double lo = 0.0;
  double hi = 1.0;
};

// Pads a data range by 5% on each side; a degenerate range gets unit width.
Range padded(double lo, double hi) {
  if (!(hi > lo)) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

class Canvas {
 public:
  Canvas(std::string title, Range x, Range y) : x_(x), y_(y) {
    out_ << std::setprecision(6);
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
         << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    out_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    text(kWidth / 2, kMargin / 2, title, "middle");
    // axes
    out_ << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin
         << "\" height=\"" << kHeight - 2 * kMargin << "\" fill=\"none\" stroke=\"black\"/>\n";
    text(kMargin, kHeight - kMargin + 16, fmt(x.lo), "start");
    text(kWidth - kMargin, kHeight - kMargin + 16, fmt(x.hi), "end");
    text(kMargin - 4, kHeight - kMargin, fmt(y.lo), "end");
    text(kMargin - 4, kMargin + 10, fmt(y.hi), "end");
  }

  double px(double x) const { return kMargin + (x - x_.lo) / (x_.hi - x_.lo) * (kWidth - 2 * kMargin); }
  double py(double y) const { return kHeight - kMargin - (y - y_.lo) / (y_.hi - y_.lo) * (kHeight - 2 * kMargin); }

  void line(double x0, double y0, double x1, double y1, const char* style) {
    out_ << "<line x1=\"" << px(x0) << "\" y1=\"" << py(y0) << "\" x2=\"" << px(x1) << "\" y2=\"" << py(y1)
         << "\" " << style << "/>\n";
  }

  void dot(double x, double y) {
    out_ << "<circle cx=\"" << px(x) << "\" cy=\"" << py(y) << "\" r=\"3\" fill=\"steelblue\"/>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts) {
    out_ << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
    for (const auto& [x, y] : pts) out_ << px(x) << ',' << py(y) << ' ';
    out_ << "\"/>\n";
  }

  void text(double x, double y, const std::string& s, const char* anchor) {
    out_ << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\""
         << anchor << "\">" << s << "</text>\n";
  }

  void no_holes() { text(kWidth / 2, kHeight / 2, "no holes", "middle"); }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  static std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(4) << v;
    return s.str();
  }

  Range x_, y_;
  std::ostringstream out_;
};

std::vector<PersistencePair> visible(const Diagram& d) {
  const Diagram kept = d.off_diagonal();
  return {kept.pairs().begin(), kept.pairs().end()};
}

}  // namespace

std::string plot_name(PlotKind kind) {
  switch (kind) {
    case PlotKind::Diagram: return "diagram";
    case PlotKind::Barcode: return "barcode";
    case PlotKind::Staircase: return "staircase";
  }
  return "plot";
}

std::string render_diagram_svg(const Diagram& d) {
  const auto pairs = visible(d);
  double lo = 0.0, hi = 1.0;
  if (!pairs.empty()) {
    lo = hi = pairs.front().birth;
    for (const auto& p : pairs) {
      lo = std::min(lo, p.birth);
      hi = std::max(hi, p.death);
    }
  }
  const Range r = padded(lo, hi);
  Canvas c("persistence diagram (birth, death)", r, r);
  c.line(r.lo, r.lo, r.hi, r.hi, "stroke=\"gray\" stroke-dasharray=\"4 3\"");
  for (const auto& p : pairs) c.dot(p.birth, p.death);
  if (pairs.empty()) c.no_holes();
  return c.finish();
}

std::string render_barcode_svg(const Diagram& d) {
  const Barcode b = barcode(d);
  const double longest = b.bars.empty() ? 1.0 : b.bars.front();
  const auto rows = static_cast<double>(std::max<std::size_t>(b.bars.size(), 1));
  Canvas c("barcode (death - birth)", padded(0.0, longest), padded(0.0, rows));
  for (std::size_t i = 0; i < b.bars.size(); ++i) {
    const double y = rows - static_cast<double>(i) - 0.5;
    c.line(0.0, y, b.bars[i], y, "stroke=\"steelblue\" stroke-width=\"4\"");
  }
  if (b.bars.empty()) c.no_holes();
  return c.finish();
}

std::string render_staircase_svg(const Diagram& d) {
  const Staircase s = staircase(d);
  if (s.empty()) {
    Canvas c("persistence staircase", padded(0.0, 1.0), padded(0.0, 1.0));
    c.no_holes();
    return c.finish();
  }
  const std::size_t top = *std::max_element(s.counts.begin(), s.counts.end());
  Canvas c("persistence staircase (holes vs alpha)", padded(s.lo(), s.hi()), padded(0.0, static_cast<double>(top)));
  std::vector<std::pair<double, double>> pts;
  for (std::size_t i = 0; i < s.counts.size(); ++i) {
    const auto k = static_cast<double>(s.counts[i]);
    pts.emplace_back(s.breakpoints[i], k);
    pts.emplace_back(s.breakpoints[i + 1], k);
  }
  c.polyline(pts);
  return c.finish();
}

std::map<PlotKind, std::string> render_plots(const RunReport& report, const std::set<PlotKind>& kinds) {
  std::map<PlotKind, std::string> out;
  for (const PlotKind k : kinds) {
    switch (k) {
      case PlotKind::Diagram: out[k] = render_diagram_svg(report.diagram); break;
      case PlotKind::Barcode: out[k] = render_barcode_svg(report.diagram); break;
      case PlotKind::Staircase: out[k] = render_staircase_svg(report.diagram); break;
    }
  }
  return out;
}

}  // namespace hoctop
