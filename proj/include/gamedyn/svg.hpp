#pragma once

#include <string>
#include <vector>

#include "gamedyn/vec.hpp"

namespace gamedyn {

struct ChartSeries {
    std::string label;
    Vec x;
    Vec y;
};

// Static polyline chart with linear axes, ticks, axis labels and a legend.
// Series longer than ~2000 points are decimated before rendering.
void write_line_chart(const std::string& path, const std::string& title,
                      const std::string& xlabel, const std::string& ylabel,
                      const std::vector<ChartSeries>& series);

}  // namespace gamedyn
