// SPDX-License-Identifier: Apache-2.0
//
// risaoi: RIS-assisted mmWave link optimization and AoI-aware scheduling
// Copyright (C) 2026 The risaoi authors
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

#include "risaoi/report.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>

namespace risaoi {

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows)
{
    out << kSweepCsvHeader << '\n';
    for (const auto& r : rows) {
        const auto& m = r.metrics;
        out << format_number(r.axis_value) << ',' << to_string(r.scheme) << ',' << format_number(m.sum_rate.mean)
            << ',' << format_number(m.sum_rate.sd) << ',' << format_number(m.rate_per_slot.mean) << ','
            << format_number(m.system_aoi.mean) << ',' << format_number(m.system_aoi.sd) << ','
            << format_number(m.feasible_fraction) << ',' << format_number(m.bcd_iterations.mean) << '\n';
    }
}

void write_detail_csv(std::ostream& out, const std::array<std::vector<RealizationResult>, 4>& results)
{
    out << "scheme,realization,sum_rate,rate_per_slot,system_aoi,demodulable_ues,feasible,phase_one_feasible,"
           "mean_bcd_iters\n";
    for (const auto& per_scheme : results)
        for (const auto& r : per_scheme) {
            double iters = 0.0;
            for (int it : r.bcd_iterations)
                iters += it;
            if (!r.bcd_iterations.empty())
                iters /= static_cast<double>(r.bcd_iterations.size());
            out << to_string(r.scheme) << ',' << r.index << ',' << format_number(r.sum_rate) << ','
                << format_number(r.avg_sum_rate_per_slot) << ',' << format_number(r.system_average_aoi) << ','
                << r.profile.k_u().size() << ',' << (r.feasibility.feasible() ? 1 : 0) << ','
                << (r.phase_one_feasible ? 1 : 0) << ',' << format_number(iters) << '\n';
        }
}

void write_ue_aoi_csv(std::ostream& out, const std::vector<SweepRow>& rows)
{
    out << "axis_value,scheme,ue,mean_aoi,sd_aoi\n";
    for (const auto& r : rows)
        for (std::size_t k = 0; k < r.metrics.ue_aoi.size(); ++k)
            out << format_number(r.axis_value) << ',' << to_string(r.scheme) << ',' << k + 1 << ','
                << format_number(r.metrics.ue_aoi[k].mean) << ',' << format_number(r.metrics.ue_aoi[k].sd) << '\n';
}

namespace {

double metric_of(const AggregateMetrics& m, PlotMetric metric)
{
    switch (metric) {
    case PlotMetric::sum_rate:
        return m.sum_rate.mean;
    case PlotMetric::rate_per_slot:
        return m.rate_per_slot.mean;
    case PlotMetric::system_aoi:
        return m.system_aoi.mean;
    }
    return 0.0;
}

const char* metric_label(PlotMetric metric)
{
    switch (metric) {
    case PlotMetric::sum_rate:
        return "sum rate over T slots (bit/s/Hz)";
    case PlotMetric::rate_per_slot:
        return "rate per slot (bit/s/Hz)";
    case PlotMetric::system_aoi:
        return "system average AoI (slots)";
    }
    return "";
}

} // namespace

void write_sweep_svg(std::ostream& out, const std::vector<SweepRow>& rows, PlotMetric metric,
                     const std::string& title, const std::string& x_label)
{
    constexpr double W = 640, H = 420, L = 70, R = 150, T = 40, B = 50;
    double x0 = std::numeric_limits<double>::max(), x1 = std::numeric_limits<double>::lowest();
    double y0 = 0.0, y1 = std::numeric_limits<double>::lowest();
    std::map<Scheme, std::vector<std::pair<double, double>>> lines;
    for (const auto& r : rows) {
        const double y = metric_of(r.metrics, metric);
        lines[r.scheme].push_back({r.axis_value, y});
        x0 = std::min(x0, r.axis_value);
        x1 = std::max(x1, r.axis_value);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    }
    if (rows.empty() || x1 <= x0)
        x1 = x0 + 1.0;
    if (y1 <= y0)
        y1 = y0 + 1.0;
    auto px = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
    auto py = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };

    static const std::map<Scheme, const char*> colors = {{Scheme::proposed, "#d62728"},
                                                         {Scheme::random_ris, "#2ca02c"},
                                                         {Scheme::random_bf, "#9467bd"},
                                                         {Scheme::round_robin, "#1f77b4"}};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">" << title << "</text>\n";
    out << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
        << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B
        << "\" stroke=\"black\"/>\n";
    for (int i = 0; i <= 4; ++i) {
        const double yv = y0 + (y1 - y0) * i / 4.0;
        const double xv = x0 + (x1 - x0) * i / 4.0;
        out << "<text x=\"" << L - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\" font-size=\"11\">"
            << format_number(yv) << "</text>\n";
        out << "<text x=\"" << px(xv) << "\" y=\"" << H - B + 16 << "\" text-anchor=\"middle\" font-size=\"11\">"
            << format_number(xv) << "</text>\n";
    }
    out << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\" font-size=\"12\">"
        << x_label << "</text>\n";
    out << "<text x=\"16\" y=\"" << (T + H - B) / 2 << "\" text-anchor=\"middle\" font-size=\"12\" "
        << "transform=\"rotate(-90 16 " << (T + H - B) / 2 << ")\">" << metric_label(metric) << "</text>\n";

    int legend = 0;
    for (const auto& [scheme, pts] : lines) {
        out << "<polyline fill=\"none\" stroke-width=\"2\" stroke=\"" << colors.at(scheme) << "\" points=\"";
        for (const auto& [x, y] : pts)
            out << px(x) << ',' << py(y) << ' ';
        out << "\"/>\n";
        const double ly = T + 20.0 * legend++;
        out << "<line x1=\"" << W - R + 10 << "\" y1=\"" << ly << "\" x2=\"" << W - R + 30 << "\" y2=\"" << ly
            << "\" stroke-width=\"2\" stroke=\"" << colors.at(scheme) << "\"/>\n";
        out << "<text x=\"" << W - R + 36 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">" << to_string(scheme)
            << "</text>\n";
    }
    out << "</svg>\n";
}

void write_codebook_csv(std::ostream& out, const HierarchicalCodebook& cb)
{
    for (int l = 0; l <= cb.last_layer(); ++l)
        for (std::size_t n = 1; n <= cb.layer_size(l); ++n) {
            out << l << ',' << n;
            for (const cplx& v : cb.codeword(l, n))
                out << ',' << format_number(v.real()) << ',' << format_number(v.imag());
            out << '\n';
        }
}

} // namespace risaoi
