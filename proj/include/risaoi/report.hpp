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

#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "risaoi/codebook.hpp"
#include "risaoi/harness.hpp"

namespace risaoi {

inline constexpr const char* kSweepCsvHeader =
    "axis_value,scheme,mean_sum_rate,sd_sum_rate,mean_rate_per_slot,mean_system_aoi,sd_system_aoi,"
    "feasible_fraction,mean_bcd_iters";

/// Fixed 6-significant-digit rendering used by every CSV writer.
std::string format_number(double v);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// One row per (scheme, realization).
void write_detail_csv(std::ostream& out, const std::array<std::vector<RealizationResult>, 4>& results);

/// Per-UE mean average AoI, one row per (axis value, scheme, UE).
void write_ue_aoi_csv(std::ostream& out, const std::vector<SweepRow>& rows);

enum class PlotMetric { sum_rate, rate_per_slot, system_aoi };

/// Static SVG line plot: axis value on x, `metric` on y, one polyline per scheme.
void write_sweep_svg(std::ostream& out, const std::vector<SweepRow>& rows, PlotMetric metric,
                     const std::string& title, const std::string& x_label);

/// One row per codeword: layer, index, then interleaved real/imag entries.
void write_codebook_csv(std::ostream& out, const HierarchicalCodebook& cb);

} // namespace risaoi
