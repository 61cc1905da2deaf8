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

#include <utility>
#include <vector>

#include "risaoi/types.hpp"

namespace risaoi {

/// Binary-tree beamforming codebook for an N-antenna ULA.
///
/// Layer l (0 <= l <= log2 N) holds 2^l unit-norm codewords; the n-th
/// codeword of layer l nominally covers [-1 + 2(n-1)/2^l, -1 + 2n/2^l] in
/// sin-space. Codeword indices are 1-based in the public interface, matching
/// the (2n - 1, 2n) child arithmetic.
class HierarchicalCodebook {
public:
    explicit HierarchicalCodebook(std::size_t n);

    std::size_t antennas() const { return n_; }
    int last_layer() const { return static_cast<int>(layers_.size()) - 1; }
    std::size_t layer_count() const { return layers_.size(); }
    std::size_t layer_size(int layer) const;

    /// 1-based codeword index within the layer.
    const Codeword& codeword(int layer, std::size_t index) const;
    const std::vector<Codeword>& layer(int layer) const;

    /// Nominal sin-space coverage interval of a codeword.
    std::pair<double, double> coverage(int layer, std::size_t index) const;

private:
    std::size_t n_;
    std::vector<std::vector<Codeword>> layers_;
};

/// Builds the codebook with the joint sub-array and deactivation method.
/// Throws ConfigError unless n is a power of two and n >= 2.
HierarchicalCodebook build_codebook(std::size_t n);

/// |sqrt(n) a(n, psi)^H w|.
double beam_gain(const Codeword& w, double psi, std::size_t n);

/// beam_gain parameterized by omega = sin(psi).
double beam_gain_sin(const Codeword& w, double omega);

/// Child indices (2n - 1, 2n) of codeword n in `layer` of `codebook`.
std::pair<std::size_t, std::size_t> children(const HierarchicalCodebook& codebook, int layer,
                                             std::size_t n_idx);

} // namespace risaoi
