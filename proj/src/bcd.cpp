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

#include "risaoi/bcd.hpp"

#include "risaoi/beam_training.hpp"
#include "risaoi/local_search.hpp"

namespace risaoi {

std::size_t random_leaf(const HierarchicalCodebook& cb, Rng& rng)
{
    std::uniform_int_distribution<std::size_t> pick(1, cb.layer_size(cb.last_layer()));
    return pick(rng);
}

namespace {

bool converged(double current, double previous, double delta)
{
    if (previous == 0.0)
        return current == 0.0;
    return std::abs(current - previous) / previous < delta;
}

} // namespace

LinkSolution joint_optimize(const RateProbe& probe, const HierarchicalCodebook& cb_tx,
                            const HierarchicalCodebook& cb_rx, std::size_t ris_elements, int bits,
                            double delta, Rng& rng, int max_iterations)
{
    if (!(delta > 0.0))
        throw ConfigError("BCD tolerance must be positive");
    if (max_iterations < 1)
        throw ConfigError("BCD iteration cap must be >= 1");

    LinkSolution s;
    s.phi = ReflectionConfig::random(ris_elements, bits, rng);
    s.w = cb_tx.codeword(cb_tx.last_layer(), random_leaf(cb_tx, rng));
    s.f = cb_rx.codeword(cb_rx.last_layer(), random_leaf(cb_rx, rng));
    s.rate = probe(s.w, s.f, s.phi);
    s.rate_history.push_back(s.rate);

    for (;;) {
        BeamPair beams = hierarchical_search(probe, cb_tx, cb_rx, s.phi);
        const double r_bf = probe(beams.w, beams.f, s.phi);
        if (!(s.rate > r_bf)) {
            s.w = std::move(beams.w);
            s.f = std::move(beams.f);
        }

        s.phi = local_search(probe, s.w, s.f, s.phi);
        const double previous = s.rate;
        s.rate = probe(s.w, s.f, s.phi);
        s.rate_history.push_back(s.rate);
        ++s.iterations;

        if (converged(s.rate, previous, delta))
            break;
        if (s.iterations >= max_iterations) {
            s.hit_iteration_cap = true;
            break;
        }
    }
    s.snr = snr_from_rate(s.rate);
    return s;
}

} // namespace risaoi
