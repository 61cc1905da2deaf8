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

#include <string>

#include "risaoi/local_search.hpp"
#include "risaoi/reflection_config.hpp"

namespace risaoi {

std::vector<double> phase_set(int bits)
{
    if (bits < 1 || bits > 16)
        throw ConfigError("phase quantization bits must be in [1, 16], got " + std::to_string(bits));
    const std::uint32_t levels = 1u << bits;
    std::vector<double> out(levels);
    for (std::uint32_t p = 0; p < levels; ++p)
        out[p] = static_cast<double>(p) * 2.0 * kPi / static_cast<double>(levels);
    return out;
}

ReflectionConfig::ReflectionConfig(std::size_t elements, int bits) : bits_(bits), indices_(elements, 0)
{
    phase_set(bits); // validates
}

ReflectionConfig ReflectionConfig::random(std::size_t elements, int bits, Rng& rng)
{
    ReflectionConfig cfg(elements, bits);
    std::uniform_int_distribution<std::uint32_t> pick(0, cfg.levels() - 1);
    for (auto& i : cfg.indices_)
        i = pick(rng);
    return cfg;
}

void ReflectionConfig::set_index(std::size_t m, std::uint32_t p)
{
    if (m >= indices_.size() || p >= levels())
        throw ContractViolation("ReflectionConfig::set_index out of range");
    indices_[m] = p;
}

double ReflectionConfig::phase(std::size_t m) const
{
    return static_cast<double>(indices_.at(m)) * 2.0 * kPi / static_cast<double>(levels());
}

std::vector<double> ReflectionConfig::phases() const
{
    std::vector<double> out(indices_.size());
    for (std::size_t m = 0; m < out.size(); ++m)
        out[m] = phase(m);
    return out;
}

CVector ReflectionConfig::coefficients() const
{
    CVector c(static_cast<Eigen::Index>(indices_.size()));
    for (std::size_t m = 0; m < indices_.size(); ++m)
        c[static_cast<Eigen::Index>(m)] = std::polar(1.0, phase(m));
    return c;
}

ReflectionConfig local_search(const RateProbe& probe, const Codeword& w, const Codeword& f,
                              const ReflectionConfig& phi_init)
{
    ReflectionConfig phi = phi_init;
    for (std::size_t m = 0; m < phi.size(); ++m) {
        std::uint32_t best = 0;
        double best_rate = -1.0;
        for (std::uint32_t p = 0; p < phi.levels(); ++p) {
            phi.set_index(m, p);
            const double r = probe(w, f, phi);
            if (r > best_rate) {
                best_rate = r;
                best = p;
            }
        }
        phi.set_index(m, best);
    }
    return phi;
}

} // namespace risaoi
