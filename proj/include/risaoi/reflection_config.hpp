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

#include <vector>

#include "risaoi/types.hpp"

namespace risaoi {

/// Uniform b-bit phase grid {p * 2 pi / 2^b : p = 0 .. 2^b - 1}.
std::vector<double> phase_set(int bits);

/// Discrete RIS reflection state. Each of the M elements holds an index into
/// phase_set(bits); amplitudes are fixed to one.
class ReflectionConfig {
public:
    ReflectionConfig() = default;
    /// All elements at phase index 0.
    ReflectionConfig(std::size_t elements, int bits);

    static ReflectionConfig random(std::size_t elements, int bits, Rng& rng);

    std::size_t size() const { return indices_.size(); }
    int bits() const { return bits_; }
    std::uint32_t levels() const { return 1u << bits_; }

    std::uint32_t index(std::size_t m) const { return indices_[m]; }
    void set_index(std::size_t m, std::uint32_t p);
    const std::vector<std::uint32_t>& indices() const { return indices_; }

    double phase(std::size_t m) const;
    std::vector<double> phases() const;
    /// exp(j phi_m) for every element, i.e. the diagonal of the reflection matrix.
    CVector coefficients() const;

    bool operator==(const ReflectionConfig&) const = default;

private:
    int bits_ = 1;
    std::vector<std::uint32_t> indices_;
};

} // namespace risaoi
