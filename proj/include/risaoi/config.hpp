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

#include "risaoi/bcd.hpp"
#include "risaoi/channel.hpp"

namespace risaoi {

enum class Scheme { proposed, random_ris, random_bf, round_robin };

inline constexpr Scheme kAllSchemes[] = {Scheme::proposed, Scheme::random_ris, Scheme::random_bf,
                                         Scheme::round_robin};

std::string to_string(Scheme s);
Scheme parse_scheme(const std::string& name);

struct SweepSpec {
    std::string axis;
    std::vector<double> values;
};

/// Everything needed to reproduce one experiment. Defaults are the reference
/// scenario: 64x64 ULAs, a 10x10 RIS with 3-bit phases, 6 UEs, 100 slots, A_max = 9.
struct ExperimentConfig {
    ArrayConfig arrays;
    SystemGeometry geometry;
    LinkBudget budget = LinkBudget::defaults();
    double carrier_frequency_ghz = 28.0;

    std::size_t k_ues = 6;
    std::size_t t_slots = 100;
    int bits = 3;
    std::size_t p_paths = 4;
    std::size_t l_paths = 4;

    /// Uniform tolerable AoI; overridden per UE by a_max_per_ue when non-empty.
    double a_max = 9.0;
    std::vector<double> a_max_per_ue;
    /// The first high_requirement_count UEs get high_requirement_a_max instead of a_max.
    std::size_t high_requirement_count = 0;
    double high_requirement_a_max = 4.0;

    double delta = kDefaultBcdTolerance;
    int max_bcd_iterations = kDefaultBcdIterationCap;
    std::uint64_t seed = 1;
    std::size_t realizations = 20;
    Scheme scheme = Scheme::proposed;
    std::optional<SweepSpec> sweep;

    /// Resolved per-UE limits, length k_ues.
    std::vector<double> aoi_limits() const;

    /// Throws ConfigError on any violated invariant.
    void validate() const;
};

/// Sets one key from its textual value. Throws ConfigError for unknown keys or
/// malformed values. Power keys are given in dB/dBm and stored linear.
void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Applies a numeric sweep-axis value. Valid axes: a_max, high_requirement_count,
/// k_ues, bits, ris_elements, n_tx, t_slots.
void apply_axis(ExperimentConfig& cfg, const std::string& axis, double value);
bool is_sweep_axis(const std::string& axis);

/// Flat `key = value` text, `#` starts a comment. Unknown keys are errors.
ExperimentConfig parse_config(std::istream& in, ExperimentConfig base = {});
ExperimentConfig load_config(const std::string& path, ExperimentConfig base = {});

} // namespace risaoi
