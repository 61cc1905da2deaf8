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

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "risaoi/report.hpp"

namespace risaoi {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitRuntimeError = 1, kExitUsageError = 2 };

/// Named sweep preset (axis, values, plotted metric).
struct FigurePreset {
    std::string name;
    std::string axis;
    std::vector<double> values;
    PlotMetric metric = PlotMetric::sum_rate;
    std::string title;
    std::string x_label;
};

const std::vector<FigurePreset>& figure_presets();
std::optional<FigurePreset> find_figure_preset(const std::string& name);

/// Parses argv and runs the selected subcommand (run, sweep, figure, selftest).
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Small-instance oracle suites; prints one summary line per suite.
bool run_selftest(std::ostream& out);

} // namespace risaoi
