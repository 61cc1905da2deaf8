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

#include "risaoi/beam_training.hpp"

namespace risaoi {

Codeword omni_codeword(std::size_t n)
{
    if (n < 1)
        throw ContractViolation("omni_codeword: antenna count must be >= 1");
    Codeword w = Codeword::Zero(static_cast<Eigen::Index>(n));
    w[0] = 1.0;
    return w;
}

namespace {

// Descends `cb` from layer 1 to the leaves; `measure` rates a candidate codeword.
template <typename Measure>
std::vector<std::size_t> descend(const HierarchicalCodebook& cb, Measure&& measure)
{
    std::vector<std::size_t> path;
    std::size_t left = 1;
    for (int layer = 1; layer <= cb.last_layer(); ++layer) {
        const std::size_t right = left + 1;
        const double r_left = measure(cb.codeword(layer, left));
        const double r_right = measure(cb.codeword(layer, right));
        const std::size_t kept = r_right > r_left ? right : left;
        path.push_back(kept);
        if (layer < cb.last_layer())
            left = children(cb, layer, kept).first;
    }
    return path;
}

} // namespace

BeamPair hierarchical_search(const RateProbe& probe, const HierarchicalCodebook& cb_tx,
                             const HierarchicalCodebook& cb_rx, const ReflectionConfig& phi)
{
    BeamPair out;
    const Codeword omni = omni_codeword(cb_tx.antennas());

    out.rx_path = descend(cb_rx, [&](const Codeword& f) { return probe(omni, f, phi); });
    out.rx_index = out.rx_path.back();
    out.f = cb_rx.codeword(cb_rx.last_layer(), out.rx_index);

    out.tx_path = descend(cb_tx, [&](const Codeword& w) { return probe(w, out.f, phi); });
    out.tx_index = out.tx_path.back();
    out.w = cb_tx.codeword(cb_tx.last_layer(), out.tx_index);
    return out;
}

} // namespace risaoi
