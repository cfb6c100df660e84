// SPDX-License-Identifier: Apache-2.0
//
// ostbc-cr-precoder: minimum-variance OSTBC precoding for cognitive radio
// Copyright (C) 2026 The ostbc-cr-precoder authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "ostbccr_cli/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>

namespace ostbccr::cli {

std::string format_number(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), res.ptr};
}

void write_csv(std::ostream& os, const std::vector<TableRow>& rows) {
    os << "power_db,qt,qr,snr_db,frac_interf_limited,interference,ber\n";
    for (const TableRow& r : rows) {
        os << format_number(r.power_db) << ',' << r.qt << ',' << r.qr << ','
           << format_number(r.snr_db) << ',' << format_number(r.frac_interf_limited) << ','
           << format_number(r.interference) << ',' << (r.ber ? format_number(*r.ber) : "")
           << '\n';
    }
}

std::vector<Curve> curves_from_rows(const std::vector<TableRow>& rows) {
    std::vector<Curve> curves;
    std::map<std::string, std::size_t> index;
    for (const TableRow& r : rows) {
        const std::string label = r.qt == "best" ? "best mode" : "qt=" + r.qt + " qr=" + r.qr;
        auto [it, inserted] = index.try_emplace(label, curves.size());
        if (inserted) {
            curves.push_back({label, {}, {}});
        }
        curves[it->second].x.push_back(r.power_db);
        curves[it->second].y.push_back(r.snr_db);
    }
    return curves;
}

namespace {

// Step of 1, 2 or 5 times a power of ten giving at most ~8 ticks.
double nice_step(double span) {
    const double raw = span / 8.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw) {
            return m * mag;
        }
    }
    return 10.0 * mag;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

} // namespace

void write_svg(std::ostream& os, const std::vector<Curve>& curves, const std::string& title) {
    constexpr double width = 720, height = 480;
    constexpr double left = 80, right = 190, top = 40, bottom = 60;
    constexpr std::array<const char*, 6> colors{"#1f77b4", "#d62728", "#2ca02c",
                                                 "#ff7f0e", "#9467bd", "#8c564b"};

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const Curve& c : curves) {
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            if (!std::isfinite(c.x[i]) || !std::isfinite(c.y[i])) {
                continue;
            }
            xmin = std::min(xmin, c.x[i]);
            xmax = std::max(xmax, c.x[i]);
            ymin = std::min(ymin, c.y[i]);
            ymax = std::max(ymax, c.y[i]);
        }
    }
    if (!std::isfinite(xmin)) {
        xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    }
    if (xmax - xmin < 1e-9) {
        xmin -= 1, xmax += 1;
    }
    if (ymax - ymin < 1e-9) {
        ymin -= 1, ymax += 1;
    }
    const double xstep = nice_step(xmax - xmin);
    const double ystep = nice_step(ymax - ymin);
    xmin = std::floor(xmin / xstep) * xstep;
    xmax = std::ceil(xmax / xstep) * xstep;
    ymin = std::floor(ymin / ystep) * ystep;
    ymax = std::ceil(ymax / ystep) * ystep;

    const double pw = width - left - right;
    const double ph = height - top - bottom;
    auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double y) { return top + (ymax - y) / (ymax - ymin) * ph; };
    auto f = [](double v) { return format_number(std::round(v * 100.0) / 100.0); };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f(width) << "\" height=\""
       << f(height) << "\" viewBox=\"0 0 " << f(width) << ' ' << f(height)
       << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
       << "<text x=\"" << f(left + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
       << xml_escape(title) << "</text>\n";

    for (double x = xmin; x <= xmax + 1e-9 * xstep; x += xstep) {
        os << "<line x1=\"" << f(px(x)) << "\" y1=\"" << f(top) << "\" x2=\"" << f(px(x))
           << "\" y2=\"" << f(top + ph) << "\" stroke=\"#e0e0e0\"/>\n"
           << "<text x=\"" << f(px(x)) << "\" y=\"" << f(top + ph + 18)
           << "\" text-anchor=\"middle\">" << f(x) << "</text>\n";
    }
    for (double y = ymin; y <= ymax + 1e-9 * ystep; y += ystep) {
        os << "<line x1=\"" << f(left) << "\" y1=\"" << f(py(y)) << "\" x2=\"" << f(left + pw)
           << "\" y2=\"" << f(py(y)) << "\" stroke=\"#e0e0e0\"/>\n"
           << "<text x=\"" << f(left - 8) << "\" y=\"" << f(py(y) + 4)
           << "\" text-anchor=\"end\">" << f(y) << "</text>\n";
    }
    os << "<rect x=\"" << f(left) << "\" y=\"" << f(top) << "\" width=\"" << f(pw)
       << "\" height=\"" << f(ph) << "\" fill=\"none\" stroke=\"black\"/>\n"
       << "<text x=\"" << f(left + pw / 2) << "\" y=\"" << f(height - 16)
       << "\" text-anchor=\"middle\">P_maxSU/P_noise (dB)</text>\n"
       << "<text transform=\"translate(22 " << f(top + ph / 2)
       << ") rotate(-90)\" text-anchor=\"middle\">Average SNR at SR (dB)</text>\n";

    for (std::size_t k = 0; k < curves.size(); ++k) {
        const Curve& c = curves[k];
        const char* color = colors[k % colors.size()];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        bool first = true;
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            if (!std::isfinite(c.x[i]) || !std::isfinite(c.y[i])) {
                continue;
            }
            os << (first ? "" : " ") << f(px(c.x[i])) << ',' << f(py(c.y[i]));
            first = false;
        }
        os << "\"/>\n";
        const double ly = top + 16 + 20.0 * static_cast<double>(k);
        os << "<line x1=\"" << f(left + pw + 14) << "\" y1=\"" << f(ly) << "\" x2=\""
           << f(left + pw + 40) << "\" y2=\"" << f(ly) << "\" stroke=\"" << color
           << "\" stroke-width=\"2\"/>\n"
           << "<text x=\"" << f(left + pw + 46) << "\" y=\"" << f(ly + 4) << "\">"
           << xml_escape(c.label) << "</text>\n";
    }
    os << "</svg>\n";
}

} // namespace ostbccr::cli
