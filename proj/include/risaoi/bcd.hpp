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

#include "risaoi/codebook.hpp"
#include "risaoi/probe.hpp"
#include "risaoi/reflection_config.hpp"

namespace risaoi {

inline constexpr double kDefaultBcdTolerance = 3e-3;
inline constexpr int kDefaultBcdIterationCap = 50;

/// Optimized link for one UE.
struct LinkSolution {
    Codeword w;
    Codeword f;
    ReflectionConfig phi;
    double rate = 0.0;
    double snr = 0.0;
    /// Outer iterations run; always rate_history.size() - 1.
    int iterations = 0;
    /// rate_history[0] is the rate of the random starting point.
    std::vector<double> rate_history;
    bool hit_iteration_cap = false;
};

/// Alternates hierarchical beam search and one RIS local-search sweep.
///
/// Starts from uniformly random RIS phases and uniformly random leaf codewords.
/// A beam update that rates below the incumbent is rolled back, so
/// rate_history is non-decreasing. Stops once the relative change between two
/// consecutive iterates drops below `delta` (with a zero previous rate the run
/// is converged only if the new rate is zero too), or after `max_iterations`,
/// in which case hit_iteration_cap is set.
LinkSolution joint_optimize(const RateProbe& probe, const HierarchicalCodebook& cb_tx,
                            const HierarchicalCodebook& cb_rx, std::size_t ris_elements, int bits,
                            double delta, Rng& rng, int max_iterations = kDefaultBcdIterationCap);

/// Uniformly random 1-based leaf index of `cb`.
std::size_t random_leaf(const HierarchicalCodebook& cb, Rng& rng);

/// snr recovered from a rate in bit/s/Hz.
inline double snr_from_rate(double rate) { return std::exp2(rate) - 1.0; }

} // namespace risaoi
