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

#include "risaoi/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace risaoi {

std::vector<std::size_t> RateProfile::k_u() const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < rates.size(); ++k)
        if (demodulable[k])
            out.push_back(k);
    return out;
}

RateProfile RateProfile::from_rates(std::vector<double> rates, std::vector<bool> demodulable)
{
    if (rates.size() != demodulable.size())
        throw ContractViolation("RateProfile: rates and flags differ in length");
    return RateProfile{std::move(rates), std::move(demodulable)};
}

ScheduleMatrix::ScheduleMatrix(std::size_t k_ues, std::size_t t_slots) : k_(k_ues), slots_(t_slots, kIdle) {}

ScheduleMatrix ScheduleMatrix::from_slots(std::size_t k_ues, std::vector<int> scheduled_ue)
{
    ScheduleMatrix u(k_ues, 0);
    for (int k : scheduled_ue)
        if (k != kIdle && (k < 0 || static_cast<std::size_t>(k) >= k_ues))
            throw ContractViolation("ScheduleMatrix: UE index out of range");
    u.slots_ = std::move(scheduled_ue);
    return u;
}

void ScheduleMatrix::assign(std::size_t t, int ue)
{
    if (t >= slots_.size() || (ue != kIdle && (ue < 0 || static_cast<std::size_t>(ue) >= k_)))
        throw ContractViolation("ScheduleMatrix::assign out of range");
    slots_[t] = ue;
}

std::size_t ScheduleMatrix::slots_of(std::size_t k) const
{
    return static_cast<std::size_t>(std::count(slots_.begin(), slots_.end(), static_cast<int>(k)));
}

int aoi_step(int prev, bool scheduled, bool demod_ok)
{
    return scheduled && demod_ok ? 1 : prev + 1;
}

AoiTrace aoi_trace(const ScheduleMatrix& u, std::size_t k, bool demodulable, double a_max)
{
    AoiTrace tr;
    tr.a_max = a_max;
    tr.values.reserve(u.slot_count());
    int age = kInitialAoi;
    for (std::size_t t = 0; t < u.slot_count(); ++t) {
        age = aoi_step(age, u.u(k, t) == 1, demodulable);
        tr.values.push_back(age);
    }
    return tr;
}

double average_aoi(const AoiTrace& trace)
{
    if (trace.values.empty())
        throw ContractViolation("average_aoi: empty trace");
    const double sum = std::accumulate(trace.values.begin(), trace.values.end(), 0.0);
    return sum / static_cast<double>(trace.values.size());
}

namespace {

// Demodulable UEs by descending rate; equal rates keep ascending index.
std::vector<std::size_t> rate_order(const RateProfile& profile)
{
    auto order = profile.k_u();
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return profile.rates[a] > profile.rates[b]; });
    return order;
}

double limit_of(const std::vector<double>& a_max, std::size_t k)
{
    if (k >= a_max.size())
        throw ContractViolation("AoI limit missing for UE " + std::to_string(k));
    return a_max[k];
}

// Odometer increment over base^digits; false once it wraps around.
bool next_assignment(std::vector<std::size_t>& digits, std::size_t base)
{
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (++*it < base)
            return true;
        *it = 0;
    }
    return false;
}

} // namespace

ScheduleMatrix phase_one_schedule(const RateProfile& profile, std::size_t t_slots)
{
    const auto order = rate_order(profile);
    if (order.empty())
        throw InfeasibleSchedule("no demodulable UE to schedule");
    ScheduleMatrix u(profile.ue_count(), t_slots);
    for (std::size_t t = 0; t < t_slots; ++t)
        u.assign(t, static_cast<int>(order[t % order.size()]));
    return u;
}

ScheduleMatrix design_schedule(const RateProfile& profile, std::size_t t_slots, const std::vector<double>& a_max)
{
    if (t_slots < 1)
        throw ContractViolation("design_schedule: T must be >= 1");
    ScheduleMatrix u = phase_one_schedule(profile, t_slots);
    const int k_max = static_cast<int>(rate_order(profile).front());

    for (std::size_t t = 0; t < t_slots; ++t) {
        const int displaced = u.scheduled_ue(t);
        if (displaced == k_max)
            continue;
        u.assign(t, k_max);
        const auto d = static_cast<std::size_t>(displaced);
        const AoiTrace tr = aoi_trace(u, d, profile.demodulable[d], limit_of(a_max, d));
        if (average_aoi(tr) > tr.a_max)
            u.assign(t, displaced);
    }
    return u;
}

double schedule_sum_rate(const ScheduleMatrix& u, const RateProfile& profile)
{
    double sum = 0.0;
    for (int k : u.scheduled())
        if (k != ScheduleMatrix::kIdle)
            sum += profile.effective_rate(static_cast<std::size_t>(k));
    return sum;
}

FeasibilityReport validate_schedule(const std::vector<std::vector<int>>& u, const RateProfile& profile,
                                    const std::vector<double>& a_max)
{
    const std::size_t k_count = profile.ue_count();
    if (u.size() != k_count)
        throw ContractViolation("validate_schedule: row count differs from UE count");
    const std::size_t t_slots = k_count == 0 ? 0 : u.front().size();

    FeasibilityReport rep;
    for (std::size_t t = 0; t < t_slots; ++t) {
        int column = 0;
        for (std::size_t k = 0; k < k_count; ++k) {
            const int v = u[k].at(t);
            if (v != 0 && v != 1)
                rep.binary_entries = false;
            column += v;
        }
        if (column != 1)
            rep.one_ue_per_slot = false;
    }

    for (std::size_t k = 0; k < k_count; ++k) {
        int age = kInitialAoi;
        double sum = 0.0;
        int peak = 0;
        for (std::size_t t = 0; t < t_slots; ++t) {
            age = aoi_step(age, u[k][t] == 1, profile.demodulable[k]);
            sum += age;
            peak = std::max(peak, age);
        }
        const double avg = t_slots == 0 ? 0.0 : sum / static_cast<double>(t_slots);
        const bool ok = avg <= limit_of(a_max, k);
        rep.average_aoi.push_back(avg);
        rep.peak_aoi.push_back(peak);
        rep.aoi_ok.push_back(ok);
        rep.aoi_feasible = rep.aoi_feasible && ok;
        if (profile.demodulable[k])
            rep.demodulable_aoi_feasible = rep.demodulable_aoi_feasible && ok;
    }
    return rep;
}

FeasibilityReport validate_schedule(const ScheduleMatrix& u, const RateProfile& profile,
                                    const std::vector<double>& a_max)
{
    std::vector<std::vector<int>> rows(u.ue_count(), std::vector<int>(u.slot_count(), 0));
    for (std::size_t t = 0; t < u.slot_count(); ++t)
        if (u.scheduled_ue(t) != ScheduleMatrix::kIdle)
            rows[static_cast<std::size_t>(u.scheduled_ue(t))][t] = 1;
    return validate_schedule(rows, profile, a_max);
}

std::optional<BruteForceResult> brute_force_schedule(const RateProfile& profile, std::size_t t_slots,
                                                     const std::vector<double>& a_max)
{
    const auto ku = profile.k_u();
    if (ku.empty() || t_slots == 0)
        return std::nullopt;
    if (std::pow(static_cast<double>(ku.size()), static_cast<double>(t_slots)) > kBruteForceLimit)
        throw std::length_error("brute_force_schedule: instance too large");

    std::vector<std::size_t> digits(t_slots, 0);
    std::vector<int> slots(t_slots);
    std::optional<BruteForceResult> best;

    for (;;) {
        double sum = 0.0;
        for (std::size_t t = 0; t < t_slots; ++t) {
            slots[t] = static_cast<int>(ku[digits[t]]);
            sum += profile.rates[ku[digits[t]]];
        }
        if (!best || sum > best->sum_rate) {
            bool ok = true;
            for (std::size_t k : ku) {
                int age = kInitialAoi;
                double total = 0.0;
                for (std::size_t t = 0; t < t_slots; ++t) {
                    age = aoi_step(age, slots[t] == static_cast<int>(k), true);
                    total += age;
                }
                if (total / static_cast<double>(t_slots) > limit_of(a_max, k)) {
                    ok = false;
                    break;
                }
            }
            if (ok)
                best = BruteForceResult{ScheduleMatrix::from_slots(profile.ue_count(), slots), sum};
        }

        if (!next_assignment(digits, ku.size()))
            break;
    }
    return best;
}

} // namespace risaoi
