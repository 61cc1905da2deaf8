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

#include <optional>
#include <stdexcept>
#include <vector>

#include "risaoi/types.hpp"

namespace risaoi {

/// Initial age of every UE before slot 1.
inline constexpr int kInitialAoi = 1;

struct AoiTrace {
    std::vector<int> values;
    double a_max = 0.0;
};

/// Per-UE optimized rates and demodulation flags.
struct RateProfile {
    std::vector<double> rates;
    std::vector<bool> demodulable;

    std::size_t ue_count() const { return rates.size(); }
    /// Indices (0-based) of the demodulable UEs, ascending.
    std::vector<std::size_t> k_u() const;
    /// Rate counted for scheduling: zero for non-demodulable UEs.
    double effective_rate(std::size_t k) const { return demodulable[k] ? rates[k] : 0.0; }

    static RateProfile from_rates(std::vector<double> rates, std::vector<bool> demodulable);
};

/// K x T assignment stored as the scheduled UE per slot. Slots without a UE
/// (only possible when no UE is demodulable) hold kIdle.
class ScheduleMatrix {
public:
    static constexpr int kIdle = -1;

    ScheduleMatrix() = default;
    ScheduleMatrix(std::size_t k_ues, std::size_t t_slots);
    static ScheduleMatrix from_slots(std::size_t k_ues, std::vector<int> scheduled_ue);

    std::size_t ue_count() const { return k_; }
    std::size_t slot_count() const { return slots_.size(); }

    int scheduled_ue(std::size_t t) const { return slots_[t]; }
    const std::vector<int>& scheduled() const { return slots_; }
    void assign(std::size_t t, int ue);

    /// u_{k,t} in {0, 1}.
    int u(std::size_t k, std::size_t t) const { return slots_[t] == static_cast<int>(k) ? 1 : 0; }
    std::size_t slots_of(std::size_t k) const;

    bool operator==(const ScheduleMatrix&) const = default;

private:
    std::size_t k_ = 0;
    std::vector<int> slots_;
};

/// Infeasible scheduling input (e.g. no demodulable UE).
class InfeasibleSchedule : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// 1 if scheduled and demodulated, else prev + 1.
int aoi_step(int prev, bool scheduled, bool demod_ok);

/// AoI trace of UE k over all slots of `u`.
AoiTrace aoi_trace(const ScheduleMatrix& u, std::size_t k, bool demodulable, double a_max);

/// Mean of the trace values.
double average_aoi(const AoiTrace& trace);

/// Descending-rate round robin over the demodulable UEs (ties to the lower index).
ScheduleMatrix phase_one_schedule(const RateProfile& profile, std::size_t t_slots);

/// Round robin followed by greedy reassignment of slots to the top-rate UE,
/// each swap kept only if the displaced UE's average AoI stays within its limit.
/// Throws InfeasibleSchedule if no UE is demodulable.
ScheduleMatrix design_schedule(const RateProfile& profile, std::size_t t_slots, const std::vector<double>& a_max);

/// Sum of effective rates over all slots.
double schedule_sum_rate(const ScheduleMatrix& u, const RateProfile& profile);

struct FeasibilityReport {
    bool one_ue_per_slot = true;
    bool binary_entries = true;
    /// Per-UE average AoI and whether it is within the limit.
    std::vector<double> average_aoi;
    std::vector<double> peak_aoi;
    std::vector<bool> aoi_ok;
    /// All UEs within their limit.
    bool aoi_feasible = true;
    /// All demodulable UEs within their limit.
    bool demodulable_aoi_feasible = true;

    bool feasible() const { return one_ue_per_slot && binary_entries && aoi_feasible; }
};

FeasibilityReport validate_schedule(const ScheduleMatrix& u, const RateProfile& profile,
                                    const std::vector<double>& a_max);

/// Raw 0/1 matrix check (rows = UEs, columns = slots).
FeasibilityReport validate_schedule(const std::vector<std::vector<int>>& u, const RateProfile& profile,
                                    const std::vector<double>& a_max);

struct BruteForceResult {
    ScheduleMatrix schedule;
    double sum_rate = 0.0;
};

inline constexpr double kBruteForceLimit = 1e7;

/// Exhaustive search over all |K_u|^T assignments of demodulable UEs; returns
/// the max-sum-rate schedule whose demodulable UEs all meet their AoI limit,
/// or nullopt if none does. Ties keep the first assignment in lexicographic
/// slot order. Throws std::length_error above kBruteForceLimit assignments.
std::optional<BruteForceResult> brute_force_schedule(const RateProfile& profile, std::size_t t_slots,
                                                     const std::vector<double>& a_max);

} // namespace risaoi
