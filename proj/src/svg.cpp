#include "gamedyn/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gamedyn {

namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 24.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 56.0;
constexpr std::size_t kMaxPoints = 2000;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                          "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22",
                          "#aec7e8"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

// Round tick spacing to 1/2/5 times a power of ten.
std::vector<double> ticks(double lo, double hi, int target) {
    double span = hi - lo;
    if (span <= 0.0) span = 1.0;
    double raw = span / target;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (raw <= m * mag) {
            step = m * mag;
            break;
        }
    }
    std::vector<double> out;
    double first = std::ceil(lo / step) * step;
    for (double v = first; v <= hi + 1e-12 * span; v += step) out.push_back(v);
    return out;
}

}  // namespace

void write_line_chart(const std::string& path, const std::string& title,
                      const std::string& xlabel, const std::string& ylabel,
                      const std::vector<ChartSeries>& series) {
    double xmin = 0.0, xmax = 1.0, ymin = 0.0, ymax = 1.0;
    bool first = true;
    for (const ChartSeries& s : series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (first) {
                xmin = xmax = s.x[i];
                ymin = ymax = s.y[i];
                first = false;
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (xmax - xmin < 1e-300) xmax = xmin + 1.0;
    if (ymax - ymin < 1e-12) {
        ymax += 0.5;
        ymin -= 0.5;
    } else {
        double pad = 0.04 * (ymax - ymin);
        ymin -= pad;
        ymax += pad;
    }

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto sx = [&](double v) { return kLeft + (v - xmin) / (xmax - xmin) * plot_w; };
    auto sy = [&](double v) { return kTop + (1.0 - (v - ymin) / (ymax - ymin)) * plot_h; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // grid and tick labels
    svg << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
    for (double tx : ticks(xmin, xmax, 8)) {
        svg << "<line x1=\"" << fmt(sx(tx)) << "\" y1=\"" << fmt(kTop) << "\" x2=\""
            << fmt(sx(tx)) << "\" y2=\"" << fmt(kTop + plot_h) << "\"/>\n";
    }
    for (double ty : ticks(ymin, ymax, 6)) {
        svg << "<line x1=\"" << fmt(kLeft) << "\" y1=\"" << fmt(sy(ty)) << "\" x2=\""
            << fmt(kLeft + plot_w) << "\" y2=\"" << fmt(sy(ty)) << "\"/>\n";
    }
    svg << "</g>\n";

    svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
    for (double tx : ticks(xmin, xmax, 8)) {
        svg << "<text x=\"" << fmt(sx(tx)) << "\" y=\"" << fmt(kTop + plot_h + 16)
            << "\" text-anchor=\"middle\">" << fmt(tx) << "</text>\n";
    }
    for (double ty : ticks(ymin, ymax, 6)) {
        svg << "<text x=\"" << fmt(kLeft - 6) << "\" y=\"" << fmt(sy(ty) + 4)
            << "\" text-anchor=\"end\">" << fmt(ty) << "</text>\n";
    }
    svg << "</g>\n";

    svg << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\"" << fmt(plot_w)
        << "\" height=\"" << fmt(plot_h)
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const ChartSeries& s = series[si];
        if (s.x.size() < 2) continue;
        std::size_t stride = std::max<std::size_t>(1, s.x.size() / kMaxPoints);
        svg << "<polyline fill=\"none\" stroke=\"" << kPalette[si % 11]
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); i += stride) {
            svg << fmt(sx(s.x[i])) << "," << fmt(sy(s.y[i])) << " ";
        }
        std::size_t last = s.x.size() - 1;
        svg << fmt(sx(s.x[last])) << "," << fmt(sy(s.y[last])) << "\"/>\n";
    }

    // legend
    double ly = kTop + 10.0;
    svg << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">\n";
    for (std::size_t si = 0; si < series.size(); ++si) {
        if (series[si].label.empty()) continue;
        double lx = kLeft + plot_w - 150.0;
        svg << "<line x1=\"" << fmt(lx) << "\" y1=\"" << fmt(ly) << "\" x2=\"" << fmt(lx + 22)
            << "\" y2=\"" << fmt(ly) << "\" stroke=\"" << kPalette[si % 11]
            << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << fmt(lx + 28) << "\" y=\"" << fmt(ly + 4) << "\">"
            << xml_escape(series[si].label) << "</text>\n";
        ly += 16.0;
    }
    svg << "</g>\n";

    // title and axis labels
    svg << "<text x=\"" << fmt(kLeft + plot_w / 2) << "\" y=\"22\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"14\" font-weight=\"bold\">"
        << xml_escape(title) << "</text>\n";
    svg << "<text x=\"" << fmt(kLeft + plot_w / 2) << "\" y=\"" << fmt(kHeight - 14)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << xml_escape(xlabel) << "</text>\n";
    svg << "<text x=\"18\" y=\"" << fmt(kTop + plot_h / 2)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        << "transform=\"rotate(-90,18," << fmt(kTop + plot_h / 2) << ")\">"
        << xml_escape(ylabel) << "</text>\n";
    svg << "</svg>\n";

    std::ofstream file(path);
    if (!file) throw std::runtime_error("cannot open " + path);
    file << svg.str();
}

}  // namespace gamedyn
