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
#include <span>
#include <string>
#include <vector>

#include "risaoi/bcd.hpp"
#include "risaoi/channel.hpp"
#include "risaoi/codebook.hpp"
#include "risaoi/config.hpp"
#include "risaoi/scheduler.hpp"

namespace risaoi {

/// Independent random substream purposes derived from the root seed.
enum class StreamPurpose : std::uint32_t { channel = 0, bcd_init = 1, random_ris = 2, random_bf = 3 };

/// Substream for (seed, realization, purpose, ue). Streams for distinct tuples
/// are independent, and identical tuples always give the same stream.
Rng make_stream(std::uint64_t seed, std::size_t realization, StreamPurpose purpose, std::size_t ue = 0);

/// Rate probe closed over one UE's hidden channel.
RateProbe make_channel_probe(const ChannelRealization& channel, std::size_t ue, const LinkBudget& budget);

struct RealizationResult {
    Scheme scheme = Scheme::proposed;
    std::size_t index = 0;

    std::vector<LinkSolution> links;
    RateProfile profile;
    ScheduleMatrix schedule;

    /// sum_t R_t in bit/s/Hz * slots.
    double sum_rate = 0.0;
    double avg_sum_rate_per_slot = 0.0;
    std::vector<double> ue_average_aoi;
    double system_average_aoi = 0.0;
    FeasibilityReport feasibility;
    /// The round-robin stage alone met every demodulable UE's limit.
    bool phase_one_feasible = false;
    /// No UE was demodulable; nothing was scheduled.
    bool all_infeasible = false;
    std::vector<int> bcd_iterations;

    /// Link configuration (w, f, phi) used in slot t, or nullptr for an idle slot.
    const LinkSolution* slot_link(std::size_t t) const;
};

/// Runs config.scheme on realization `index`.
RealizationResult run_realization(const ExperimentConfig& config, std::size_t index);

/// Runs one baseline scheme on realization `index`. Throws ConfigError for Scheme::proposed.
RealizationResult run_baseline(const ExperimentConfig& config, Scheme scheme, std::size_t index);

/// All four schemes on the same channel draw, in kAllSchemes order. The
/// proposed per-UE optimization is shared with round_robin.
std::array<RealizationResult, 4> run_all_schemes(const ExperimentConfig& config, std::size_t index);

struct MeanSd {
    double mean = 0.0;
    double sd = 0.0;
};

struct AggregateMetrics {
    std::size_t count = 0;
    MeanSd sum_rate;
    MeanSd rate_per_slot;
    MeanSd system_aoi;
    std::vector<MeanSd> ue_aoi;
    MeanSd bcd_iterations;
    double feasible_fraction = 0.0;
};

/// Means and sample standard deviations (zero for a single result).
AggregateMetrics monte_carlo_mean(std::span<const RealizationResult> results);

struct SweepRow {
    double axis_value = 0.0;
    Scheme scheme = Scheme::proposed;
    AggregateMetrics metrics;
};

/// Every scheme for every value of `axis`, config.realizations paired draws each.
/// Rows are ordered by value, then by kAllSchemes.
std::vector<SweepRow> sweep(const ExperimentConfig& config, const std::string& axis,
                            const std::vector<double>& values, unsigned threads = 1);

/// Every scheme on the unmodified config.
std::vector<SweepRow> run_schemes(const ExperimentConfig& config, unsigned threads = 1);

/// Raw per-realization results for every scheme (outer index: kAllSchemes order).
std::array<std::vector<RealizationResult>, 4> run_schemes_detailed(const ExperimentConfig& config,
                                                                   unsigned threads = 1);

/// Calls fn(i) for i in [0, n) on up to `threads` workers.
template <typename Fn> void parallel_for(std::size_t n, unsigned threads, Fn&& fn);

} // namespace risaoi

#include "risaoi/detail/parallel.hpp"
