// Copyright 2026 The repchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "repchain/svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace repchain {

namespace {

constexpr double kWidth = 960;
constexpr double kHeight = 600;
constexpr double kLeft = 80;
constexpr double kRight = 300;  // legend column
constexpr double kTop = 40;
constexpr double kBottom = 60;

constexpr const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939",
};

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string threshold_text(double t) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.3f", t);
    return buf;
}

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;  // (n, metric)
};

}  // namespace

double metric_value(const ResultRow& row, Metric m) {
    switch (m) {
        case Metric::End:
            return row.end_time;
        case Metric::Intermediate:
            return row.intermediate_time;
        case Metric::Total:
            return row.total_time;
    }
    return 0.0;
}

std::string metric_label(Metric m) {
    switch (m) {
        case Metric::End:
            return "end-node qubit occupancy (qubit x unit time)";
        case Metric::Intermediate:
            return "intermediate-node qubit occupancy (qubit x unit time)";
        case Metric::Total:
            return "total qubit occupancy (qubit x unit time)";
    }
    return "";
}

std::string setting_label(const ResultRow& row) {
    return "l2:" + threshold_text(row.l2) + ", l3:" +
           (row.l3 ? threshold_text(*row.l3) : std::string("None")) +
           ", l4:" + threshold_text(row.l4);
}

std::string render_svg(std::span<const ResultRow> rows, Metric metric) {
    if (rows.empty()) {
        throw std::invalid_argument("no rows to plot");
    }

    std::vector<Series> series;
    double x_min = std::numeric_limits<double>::infinity();
    double x_max = -x_min;
    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -y_min;
    {
        std::string current;
        bool stopped = false;
        for (const ResultRow& r : rows) {
            if (r.preset != rows.front().preset) {
                throw std::invalid_argument("rows mix presets '" + rows.front().preset +
                                            "' and '" + r.preset + "'");
            }
            const std::string label = setting_label(r);
            if (series.empty() || label != current) {
                series.push_back({label, {}});
                current = label;
                stopped = false;
            }
            x_min = std::min(x_min, static_cast<double>(r.n_nodes));
            x_max = std::max(x_max, static_cast<double>(r.n_nodes));
            stopped = stopped || r.broken;
            const double v = metric_value(r, metric);
            if (stopped || !(v > 0.0)) {
                stopped = true;
                continue;
            }
            series.back().points.emplace_back(static_cast<double>(r.n_nodes), v);
            y_min = std::min(y_min, v);
            y_max = std::max(y_max, v);
        }
    }
    if (x_max <= x_min) {
        x_max = x_min + 1;
    }
    double dec_lo = 0;
    double dec_hi = 1;
    if (y_min <= y_max) {
        dec_lo = std::floor(std::log10(y_min));
        dec_hi = std::max(dec_lo + 1, std::ceil(std::log10(y_max)));
    }

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto sx = [&](double n) { return kLeft + (n - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double v) {
        return kTop + plot_h - (std::log10(v) - dec_lo) / (dec_hi - dec_lo) * plot_h;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(kWidth) << "\" height=\""
        << px(kHeight) << "\" viewBox=\"0 0 " << px(kWidth) << ' ' << px(kHeight) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << px(kLeft) << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">"
        << "preset " << rows.front().preset << "</text>\n";

    // Axes, decade grid and labels.
    svg << "<g stroke=\"#cccccc\" stroke-width=\"1\">\n";
    for (double dec = dec_lo; dec <= dec_hi; dec += 1) {
        const double y = kTop + plot_h - (dec - dec_lo) / (dec_hi - dec_lo) * plot_h;
        svg << "<line x1=\"" << px(kLeft) << "\" y1=\"" << px(y) << "\" x2=\""
            << px(kLeft + plot_w) << "\" y2=\"" << px(y) << "\"/>\n";
    }
    svg << "</g>\n";
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">\n";
    for (double dec = dec_lo; dec <= dec_hi; dec += 1) {
        const double y = kTop + plot_h - (dec - dec_lo) / (dec_hi - dec_lo) * plot_h;
        svg << "<text x=\"" << px(kLeft - 6) << "\" y=\"" << px(y + 4) << "\">1e"
            << static_cast<int>(dec) << "</text>\n";
    }
    svg << "</g>\n";
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
    const int ticks = 8;
    for (int i = 0; i <= ticks; ++i) {
        const double n = x_min + (x_max - x_min) * i / ticks;
        svg << "<text x=\"" << px(sx(n)) << "\" y=\"" << px(kTop + plot_h + 18) << "\">"
            << static_cast<long long>(std::lround(n)) << "</text>\n";
    }
    svg << "<text x=\"" << px(kLeft + plot_w / 2) << "\" y=\"" << px(kHeight - 16)
        << "\">number of nodes</text>\n";
    svg << "<text transform=\"translate(18 " << px(kTop + plot_h / 2)
        << ") rotate(-90)\">" << metric_label(metric) << "</text>\n";
    svg << "</g>\n";
    svg << "<rect x=\"" << px(kLeft) << "\" y=\"" << px(kTop) << "\" width=\"" << px(plot_w)
        << "\" height=\"" << px(plot_h) << "\" fill=\"none\" stroke=\"black\"/>\n";

    for (std::size_t k = 0; k < series.size(); ++k) {
        const Series& s = series[k];
        const char* color = kPalette[k % std::size(kPalette)];
        if (!s.points.empty()) {
            svg << "<polyline fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < s.points.size(); ++i) {
                svg << (i ? " " : "") << px(sx(s.points[i].first)) << ','
                    << px(sy(s.points[i].second));
            }
            svg << "\"/>\n";
        }
        const double ly = kTop + 10 + 20.0 * static_cast<double>(k);
        const double lx = kWidth - kRight + 20;
        svg << "<line x1=\"" << px(lx) << "\" y1=\"" << px(ly) << "\" x2=\"" << px(lx + 24)
            << "\" y2=\"" << px(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << px(lx + 30) << "\" y=\"" << px(ly + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\">(" << s.label << ")</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void emit_svg(std::span<const ResultRow> rows, Metric metric,
              const std::filesystem::path& destination) {
    const std::string text = render_svg(rows, metric);
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open " + destination.string() + " for writing");
    }
    out << text;
    out.flush();
    if (!out) {
        throw std::runtime_error("failed writing " + destination.string());
    }
}

}  // namespace repchain
