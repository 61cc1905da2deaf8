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

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <string>

#include "risaoi/bcd.hpp"
#include "risaoi/beam_training.hpp"
#include "risaoi/channel.hpp"
#include "risaoi/cli.hpp"
#include "risaoi/codebook.hpp"
#include "risaoi/local_search.hpp"
#include "risaoi/scheduler.hpp"

namespace risaoi {
namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

CMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng)
{
    std::normal_distribution<double> n(0.0, 1.0);
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            m(i, j) = cplx(n(rng), n(rng));
    return m;
}

LinkBudget unit_budget()
{
    LinkBudget b;
    b.tx_power = 1.0;
    b.noise_power = 1.0;
    b.snr_threshold = 1.0;
    return b;
}

// Probe that builds the effective channel explicitly (no caching).
RateProbe dense_probe(const CMatrix& g, const CMatrix& h_r)
{
    return [g, h_r](const Codeword& w, const Codeword& f, const ReflectionConfig& phi) {
        return rate(snr(f, w, effective_channel(g, phi, h_r), unit_budget()));
    };
}

Outcome codebook_suite()
{
    int checked = 0;
    for (std::size_t n = 2; n <= 256; n *= 2) {
        const auto cb = build_codebook(n);
        for (int l = 0; l <= cb.last_layer(); ++l)
            for (std::size_t i = 1; i <= cb.layer_size(l); ++i, ++checked)
                if (std::abs(cb.codeword(l, i).norm() - 1.0) > 1e-9)
                    return {false, "codeword (" + std::to_string(l) + "," + std::to_string(i) + ") of N=" +
                                       std::to_string(n) + " is not unit norm"};
        for (std::size_t i = 1; i <= n; ++i) {
            const double omega = -1.0 + (2.0 * i - 1.0) / static_cast<double>(n);
            const Codeword leaf = ula_steering_sin(n, omega, kHalfWavelength);
            if ((cb.codeword(cb.last_layer(), i) - leaf).norm() > 1e-9)
                return {false, "leaf " + std::to_string(i) + " of N=" + std::to_string(n) + " is off-grid"};
        }
    }
    return {true, std::to_string(checked) + " codewords"};
}

Outcome search_suite()
{
    Rng rng(7);
    const auto cb = build_codebook(2);
    for (int trial = 0; trial < 200; ++trial) {
        const CMatrix g = random_matrix(2, 4, rng);
        const CMatrix h = random_matrix(4, 2, rng);
        const RateProbe probe = dense_probe(g, h);
        const ReflectionConfig phi = ReflectionConfig::random(4, 2, rng);

        int calls = 0;
        const RateProbe counted = [&](const Codeword& w, const Codeword& f, const ReflectionConfig& p) {
            ++calls;
            return probe(w, f, p);
        };
        const BeamPair got = hierarchical_search(counted, cb, cb, phi);

        // Receive side against the omni transmitter, then transmit side.
        const Codeword omni = omni_codeword(2);
        std::size_t rx = probe(omni, cb.codeword(1, 2), phi) > probe(omni, cb.codeword(1, 1), phi) ? 2 : 1;
        const Codeword& f = cb.codeword(1, rx);
        std::size_t tx = probe(cb.codeword(1, 2), f, phi) > probe(cb.codeword(1, 1), f, phi) ? 2 : 1;
        if (got.rx_index != rx || got.tx_index != tx)
            return {false, "trial " + std::to_string(trial) + " picked a different pair"};
        if (calls != 4)
            return {false, "used " + std::to_string(calls) + " probes instead of 4"};
    }
    return {true, "200 random 2x2 links"};
}

Outcome local_search_suite()
{
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int bits = 1 + trial % 4;
        const CMatrix g = random_matrix(4, 1, rng);
        const CMatrix h = random_matrix(1, 4, rng);
        const RateProbe probe = dense_probe(g, h);
        const Codeword w = build_codebook(4).codeword(2, 1 + trial % 4);
        const Codeword f = build_codebook(4).codeword(2, 1 + (trial / 4) % 4);
        const ReflectionConfig start = ReflectionConfig::random(1, bits, rng);

        ReflectionConfig best(1, bits);
        double best_rate = -1.0;
        for (std::size_t p = 0; p < best.levels(); ++p) {
            ReflectionConfig c(1, bits);
            c.set_index(0, p);
            const double r = probe(w, f, c);
            if (r > best_rate) {
                best_rate = r;
                best = c;
            }
        }
        const ReflectionConfig got = local_search(probe, w, f, start);
        if (std::abs(probe(w, f, got) - best_rate) > 1e-12)
            return {false, "trial " + std::to_string(trial) + " missed the single-element optimum"};
    }
    return {true, "200 single-element surfaces"};
}

Outcome bcd_suite()
{
    const auto cb = build_codebook(2);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        const CMatrix g = random_matrix(2, 2, rng);
        const CMatrix h = random_matrix(2, 2, rng);
        const RateProbe probe = dense_probe(g, h);

        // 2 x 2 leaf pairs x 4 reflection settings.
        double best = 0.0;
        for (std::size_t i = 1; i <= 2; ++i)
            for (std::size_t j = 1; j <= 2; ++j)
                for (std::size_t p = 0; p < 4; ++p) {
                    ReflectionConfig c(2, 1);
                    c.set_index(0, p & 1);
                    c.set_index(1, p >> 1);
                    best = std::max(best, probe(cb.codeword(1, i), cb.codeword(1, j), c));
                }
        const LinkSolution s = joint_optimize(probe, cb, cb, 2, 1, kDefaultBcdTolerance, rng);
        if (s.rate < s.rate_history.front() - 1e-12 || s.rate > best + 1e-9)
            return {false, "seed " + std::to_string(seed) + " left the [initial, exhaustive] interval"};
    }
    return {true, "200 seeds, 16 configurations each"};
}

Outcome scheduler_suite()
{
    {
        const auto profile = RateProfile::from_rates({3.0, 1.0}, {true, true});
        const ScheduleMatrix s = design_schedule(profile, 4, {3.0, 3.0});
        if (s.scheduled() != std::vector<int>{0, 0, 0, 1} || std::abs(schedule_sum_rate(s, profile) - 10.0) > 1e-12)
            return {false, "two-UE, four-slot example did not reach sum rate 10"};
    }
    Rng rng(23);
    std::uniform_real_distribution<double> rate(0.1, 8.0);
    std::uniform_int_distribution<int> limit(1, 6);
    int compared = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t k = 2 + trial % 3;
        const std::size_t t = 3 + trial % 5;
        std::vector<double> rates(k), limits(k);
        for (std::size_t i = 0; i < k; ++i) {
            rates[i] = rate(rng);
            limits[i] = limit(rng);
        }
        const auto profile = RateProfile::from_rates(rates, std::vector<bool>(k, true));
        const ScheduleMatrix heur = design_schedule(profile, t, limits);
        const auto rep = validate_schedule(heur, profile, limits);
        const auto oracle = brute_force_schedule(profile, t, limits);
        if (rep.feasible()) {
            if (!oracle)
                return {false, "trial " + std::to_string(trial) + ": heuristic feasible but oracle found none"};
            if (schedule_sum_rate(heur, profile) > oracle->sum_rate + 1e-9)
                return {false, "trial " + std::to_string(trial) + ": heuristic beat the exhaustive optimum"};
            ++compared;
        }
        const bool phase_one_ok =
            validate_schedule(phase_one_schedule(profile, t), profile, limits).feasible();
        if (phase_one_ok && !rep.feasible())
            return {false, "trial " + std::to_string(trial) + ": Phase II broke a feasible Phase I schedule"};
    }
    return {true, "worked example plus " + std::to_string(compared) + " oracle comparisons"};
}

} // namespace

bool run_selftest(std::ostream& out)
{
    struct Suite {
        const char* name;
        Outcome (*fn)();
    };
    static constexpr Suite suites[] = {{"codebook", codebook_suite},
                                       {"beam_search", search_suite},
                                       {"local_search", local_search_suite},
                                       {"bcd", bcd_suite},
                                       {"scheduler", scheduler_suite}};
    bool all = true;
    for (const auto& s : suites) {
        Outcome o;
        try {
            o = s.fn();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        out << (o.ok ? "PASS " : "FAIL ") << s.name << " (" << o.detail << ")\n";
        all = all && o.ok;
    }
    return all;
}

} // namespace risaoi
