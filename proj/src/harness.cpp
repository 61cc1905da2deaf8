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

#include "risaoi/harness.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "risaoi/beam_training.hpp"
#include "risaoi/local_search.hpp"

namespace risaoi {

Rng make_stream(std::uint64_t seed, std::size_t realization, StreamPurpose purpose, std::size_t ue)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(realization),
                      static_cast<std::uint32_t>(static_cast<std::uint64_t>(realization) >> 32),
                      static_cast<std::uint32_t>(purpose),
                      static_cast<std::uint32_t>(ue)};
    return Rng(seq);
}

RateProbe make_channel_probe(const ChannelRealization& channel, std::size_t ue, const LinkBudget& budget)
{
    if (ue >= channel.ue_count())
        throw ContractViolation("make_channel_probe: UE index out of range");
    auto eval = std::make_shared<LinkEvaluator>(channel.g, channel.h_r[ue], budget);
    return [eval](const Codeword& w, const Codeword& f, const ReflectionConfig& phi) {
        return eval->rate(w, f, phi);
    };
}

const LinkSolution* RealizationResult::slot_link(std::size_t t) const
{
    const int k = schedule.scheduled_ue(t);
    return k == ScheduleMatrix::kIdle ? nullptr : &links[static_cast<std::size_t>(k)];
}

namespace {

struct Prepared {
    ChannelRealization channel;
    HierarchicalCodebook cb_tx;
    HierarchicalCodebook cb_rx;
};

Prepared prepare(const ExperimentConfig& cfg, std::size_t index)
{
    cfg.validate();
    Rng rng = make_stream(cfg.seed, index, StreamPurpose::channel);
    return Prepared{draw_channel(cfg.geometry, cfg.arrays, cfg.budget, cfg.p_paths, cfg.l_paths, cfg.k_ues, rng),
                    build_codebook(cfg.arrays.n_tx), build_codebook(cfg.arrays.n_rx)};
}

LinkSolution fixed_link(Codeword w, Codeword f, ReflectionConfig phi, double rate)
{
    LinkSolution s;
    s.w = std::move(w);
    s.f = std::move(f);
    s.phi = std::move(phi);
    s.rate = rate;
    s.snr = snr_from_rate(rate);
    s.rate_history = {rate};
    return s;
}

std::vector<LinkSolution> proposed_links(const ExperimentConfig& cfg, std::size_t index, const Prepared& p)
{
    std::vector<LinkSolution> out;
    for (std::size_t k = 0; k < cfg.k_ues; ++k) {
        const RateProbe probe = make_channel_probe(p.channel, k, cfg.budget);
        Rng rng = make_stream(cfg.seed, index, StreamPurpose::bcd_init, k);
        out.push_back(joint_optimize(probe, p.cb_tx, p.cb_rx, cfg.arrays.ris_elements(), cfg.bits, cfg.delta, rng,
                                     cfg.max_bcd_iterations));
    }
    return out;
}

// Random RIS phases held fixed; beams from the hierarchical search.
std::vector<LinkSolution> random_ris_links(const ExperimentConfig& cfg, std::size_t index, const Prepared& p)
{
    std::vector<LinkSolution> out;
    for (std::size_t k = 0; k < cfg.k_ues; ++k) {
        const RateProbe probe = make_channel_probe(p.channel, k, cfg.budget);
        Rng rng = make_stream(cfg.seed, index, StreamPurpose::random_ris, k);
        ReflectionConfig phi = ReflectionConfig::random(cfg.arrays.ris_elements(), cfg.bits, rng);
        BeamPair beams = hierarchical_search(probe, p.cb_tx, p.cb_rx, phi);
        const double r = probe(beams.w, beams.f, phi);
        out.push_back(fixed_link(std::move(beams.w), std::move(beams.f), std::move(phi), r));
    }
    return out;
}

// Random leaf codewords at both ends; RIS phases from one local-search sweep.
std::vector<LinkSolution> random_bf_links(const ExperimentConfig& cfg, std::size_t index, const Prepared& p)
{
    std::vector<LinkSolution> out;
    for (std::size_t k = 0; k < cfg.k_ues; ++k) {
        const RateProbe probe = make_channel_probe(p.channel, k, cfg.budget);
        Rng rng = make_stream(cfg.seed, index, StreamPurpose::random_bf, k);
        Codeword w = p.cb_tx.codeword(p.cb_tx.last_layer(), random_leaf(p.cb_tx, rng));
        Codeword f = p.cb_rx.codeword(p.cb_rx.last_layer(), random_leaf(p.cb_rx, rng));
        ReflectionConfig phi = ReflectionConfig::random(cfg.arrays.ris_elements(), cfg.bits, rng);
        phi = local_search(probe, w, f, phi);
        const double r = probe(w, f, phi);
        out.push_back(fixed_link(std::move(w), std::move(f), std::move(phi), r));
    }
    return out;
}

RealizationResult finish(const ExperimentConfig& cfg, Scheme scheme, std::size_t index,
                         std::vector<LinkSolution> links)
{
    RealizationResult res;
    res.scheme = scheme;
    res.index = index;

    std::vector<double> rates;
    std::vector<bool> demod;
    for (const auto& l : links) {
        rates.push_back(l.rate);
        demod.push_back(l.snr > cfg.budget.snr_threshold);
        res.bcd_iterations.push_back(l.iterations);
    }
    res.links = std::move(links);
    res.profile = RateProfile::from_rates(std::move(rates), std::move(demod));

    const auto limits = cfg.aoi_limits();
    if (res.profile.k_u().empty()) {
        res.all_infeasible = true;
        res.schedule = ScheduleMatrix(cfg.k_ues, cfg.t_slots);
    } else {
        const ScheduleMatrix phase_one = phase_one_schedule(res.profile, cfg.t_slots);
        res.phase_one_feasible = validate_schedule(phase_one, res.profile, limits).demodulable_aoi_feasible;
        res.schedule = scheme == Scheme::round_robin ? phase_one
                                                     : design_schedule(res.profile, cfg.t_slots, limits);
    }

    res.sum_rate = schedule_sum_rate(res.schedule, res.profile);
    res.avg_sum_rate_per_slot = res.sum_rate / static_cast<double>(cfg.t_slots);
    res.feasibility = validate_schedule(res.schedule, res.profile, limits);
    res.ue_average_aoi = res.feasibility.average_aoi;
    res.system_average_aoi = std::accumulate(res.ue_average_aoi.begin(), res.ue_average_aoi.end(), 0.0) /
                             static_cast<double>(res.ue_average_aoi.size());
    return res;
}

} // namespace

RealizationResult run_realization(const ExperimentConfig& config, std::size_t index)
{
    if (config.scheme != Scheme::proposed)
        return run_baseline(config, config.scheme, index);
    const Prepared p = prepare(config, index);
    return finish(config, Scheme::proposed, index, proposed_links(config, index, p));
}

RealizationResult run_baseline(const ExperimentConfig& config, Scheme scheme, std::size_t index)
{
    const Prepared p = prepare(config, index);
    switch (scheme) {
    case Scheme::random_ris:
        return finish(config, scheme, index, random_ris_links(config, index, p));
    case Scheme::random_bf:
        return finish(config, scheme, index, random_bf_links(config, index, p));
    case Scheme::round_robin:
        return finish(config, scheme, index, proposed_links(config, index, p));
    case Scheme::proposed:
        break;
    }
    throw ConfigError("run_baseline: the proposed scheme is not a baseline");
}

std::array<RealizationResult, 4> run_all_schemes(const ExperimentConfig& config, std::size_t index)
{
    const Prepared p = prepare(config, index);
    auto links = proposed_links(config, index, p);
    std::array<RealizationResult, 4> out;
    out[0] = finish(config, Scheme::proposed, index, links);
    out[1] = finish(config, Scheme::random_ris, index, random_ris_links(config, index, p));
    out[2] = finish(config, Scheme::random_bf, index, random_bf_links(config, index, p));
    out[3] = finish(config, Scheme::round_robin, index, std::move(links));
    return out;
}

namespace {

// Sorted summation makes the aggregate independent of input order.
MeanSd mean_sd(std::vector<double> v)
{
    MeanSd out;
    if (v.empty())
        return out;
    std::sort(v.begin(), v.end());
    const double n = static_cast<double>(v.size());
    out.mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
    if (v.size() > 1) {
        std::vector<double> sq;
        sq.reserve(v.size());
        for (double x : v)
            sq.push_back((x - out.mean) * (x - out.mean));
        std::sort(sq.begin(), sq.end());
        out.sd = std::sqrt(std::accumulate(sq.begin(), sq.end(), 0.0) / (n - 1.0));
    }
    return out;
}

} // namespace

AggregateMetrics monte_carlo_mean(std::span<const RealizationResult> results)
{
    if (results.empty())
        throw ContractViolation("monte_carlo_mean: no results");

    AggregateMetrics agg;
    agg.count = results.size();
    std::vector<double> sum, per_slot, aoi, iters;
    std::size_t feasible = 0;
    std::size_t ues = results.front().ue_average_aoi.size();
    for (const auto& r : results) {
        sum.push_back(r.sum_rate);
        per_slot.push_back(r.avg_sum_rate_per_slot);
        aoi.push_back(r.system_average_aoi);
        for (int it : r.bcd_iterations)
            iters.push_back(it);
        feasible += r.feasibility.feasible() ? 1 : 0;
        ues = std::min(ues, r.ue_average_aoi.size());
    }
    agg.sum_rate = mean_sd(sum);
    agg.rate_per_slot = mean_sd(per_slot);
    agg.system_aoi = mean_sd(aoi);
    agg.bcd_iterations = mean_sd(iters);
    agg.feasible_fraction = static_cast<double>(feasible) / static_cast<double>(results.size());
    for (std::size_t k = 0; k < ues; ++k) {
        std::vector<double> v;
        for (const auto& r : results)
            v.push_back(r.ue_average_aoi[k]);
        agg.ue_aoi.push_back(mean_sd(std::move(v)));
    }
    return agg;
}

std::array<std::vector<RealizationResult>, 4> run_schemes_detailed(const ExperimentConfig& config, unsigned threads)
{
    config.validate();
    const std::size_t n = config.realizations;
    std::vector<std::array<RealizationResult, 4>> raw(n);
    parallel_for(n, threads, [&](std::size_t i) { raw[i] = run_all_schemes(config, i); });

    std::array<std::vector<RealizationResult>, 4> out;
    for (auto& r : raw)
        for (std::size_t s = 0; s < 4; ++s)
            out[s].push_back(std::move(r[s]));
    return out;
}

std::vector<SweepRow> run_schemes(const ExperimentConfig& config, unsigned threads)
{
    const auto detailed = run_schemes_detailed(config, threads);
    std::vector<SweepRow> rows;
    for (std::size_t s = 0; s < 4; ++s)
        rows.push_back({0.0, kAllSchemes[s], monte_carlo_mean(detailed[s])});
    return rows;
}

std::vector<SweepRow> sweep(const ExperimentConfig& config, const std::string& axis,
                            const std::vector<double>& values, unsigned threads)
{
    if (!is_sweep_axis(axis))
        throw ConfigError("unknown sweep axis '" + axis + "'");
    std::vector<SweepRow> rows;
    for (double v : values) {
        ExperimentConfig c = config;
        c.sweep.reset();
        apply_axis(c, axis, v);
        for (auto row : run_schemes(c, threads)) {
            row.axis_value = v;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace risaoi
