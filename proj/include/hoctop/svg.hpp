#pragma once

#include <map>
#include <set>
#include <string>

#include "hoctop/report.hpp"

namespace hoctop {

enum class PlotKind { Diagram, Barcode, Staircase };

std::string plot_name(PlotKind kind);

std::string render_diagram_svg(const Diagram& d);
std::string render_barcode_svg(const Diagram& d);
std::string render_staircase_svg(const Diagram& d);

/// Static SVG documents for the requested plots; the report is not modified.
std::map<PlotKind, std::string> render_plots(const RunReport& report, const std::set<PlotKind>& kinds);

}  // namespace hoctop
