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

#include "risaoi/codebook.hpp"

#include <string>

#include "risaoi/steering.hpp"

namespace risaoi {

namespace {

// First codeword of a non-leaf layer from Q sub-arrays, N_A of them active.
Codeword first_codeword(std::size_t n, int layer)
{
    const int p = ilog2(n) - layer;
    const std::size_t q_count = std::size_t{1} << ((p + 1) / 2);
    const std::size_t ns = n / q_count;
    const std::size_t active = (p % 2 == 1) ? q_count / 2 : q_count;

    Codeword w = Codeword::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t q = 1; q <= active; ++q) {
        const double nsd = static_cast<double>(ns);
        const double qd = static_cast<double>(q);
        const cplx theta = std::polar(1.0, -qd * (nsd - 1.0) / nsd * kPi);
        const CVector sub = theta * ula_steering_sin(ns, -1.0 + (2.0 * qd - 1.0) / nsd);
        w.segment(static_cast<Eigen::Index>((q - 1) * ns), static_cast<Eigen::Index>(ns)) = sub;
    }
    return w;
}

} // namespace

HierarchicalCodebook::HierarchicalCodebook(std::size_t n) : n_(n)
{
    if (n < 2 || !is_power_of_two(n))
        throw ConfigError("codebook size must be a power of two >= 2, got " + std::to_string(n));

    const int last = ilog2(n);
    const double nd = static_cast<double>(n);
    layers_.resize(static_cast<std::size_t>(last) + 1);

    for (std::size_t i = 1; i <= n; ++i)
        layers_[last].push_back(ula_steering_sin(n, -1.0 + (2.0 * static_cast<double>(i) - 1.0) / nd));

    for (int l = 0; l < last; ++l) {
        const Codeword base = first_codeword(n, l);
        const std::size_t count = std::size_t{1} << l;
        auto& out = layers_[static_cast<std::size_t>(l)];
        for (std::size_t i = 1; i <= count; ++i) {
            const double shift = 2.0 * static_cast<double>(i - 1) / static_cast<double>(count);
            Codeword w = base.cwiseProduct(std::sqrt(nd) * ula_steering_sin(n, shift));
            w.normalize();
            out.push_back(std::move(w));
        }
    }
}

std::size_t HierarchicalCodebook::layer_size(int layer) const { return this->layer(layer).size(); }

const std::vector<Codeword>& HierarchicalCodebook::layer(int layer) const
{
    if (layer < 0 || layer > last_layer())
        throw ContractViolation("codebook layer out of range");
    return layers_[static_cast<std::size_t>(layer)];
}

const Codeword& HierarchicalCodebook::codeword(int layer, std::size_t index) const
{
    const auto& l = this->layer(layer);
    if (index < 1 || index > l.size())
        throw ContractViolation("codeword index out of range");
    return l[index - 1];
}

std::pair<double, double> HierarchicalCodebook::coverage(int layer, std::size_t index) const
{
    const double width = 2.0 / static_cast<double>(layer_size(layer));
    const double lo = -1.0 + width * static_cast<double>(index - 1);
    return {lo, lo + width};
}

HierarchicalCodebook build_codebook(std::size_t n) { return HierarchicalCodebook(n); }

double beam_gain_sin(const Codeword& w, double omega)
{
    const std::size_t n = static_cast<std::size_t>(w.size());
    const CVector a = ula_steering_sin(n, omega);
    return std::abs(std::sqrt(static_cast<double>(n)) * a.dot(w));
}

double beam_gain(const Codeword& w, double psi, std::size_t n)
{
    if (static_cast<std::size_t>(w.size()) != n)
        throw ContractViolation("beam_gain: codeword length does not match antenna count");
    return beam_gain_sin(w, std::sin(psi));
}

std::pair<std::size_t, std::size_t> children(const HierarchicalCodebook& codebook, int layer,
                                             std::size_t n_idx)
{
    if (layer < 0 || layer >= codebook.last_layer())
        throw ContractViolation("children: layer has no children");
    if (n_idx < 1 || n_idx > codebook.layer_size(layer))
        throw ContractViolation("children: codeword index out of range");
    return {2 * n_idx - 1, 2 * n_idx};
}

} // namespace risaoi
