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

namespace risaoi {

/// Single active antenna: e_0 of length n. Its beam gain is 1 in every direction.
Codeword omni_codeword(std::size_t n);

struct BeamPair {
    Codeword w;
    Codeword f;
    /// 1-based leaf indices in the transmit / receive codebooks.
    std::size_t tx_index = 0;
    std::size_t rx_index = 0;
    /// Index kept at each layer 1..last, receive stage then transmit stage.
    std::vector<std::size_t> rx_path;
    std::vector<std::size_t> tx_path;
};

/// Two-stage binary-tree search. The BS is held omni while the receive tree is
/// descended from layer 1, then the UE is fixed to the winning leaf while the
/// transmit tree is descended. Each layer probes both children of the current
/// node and keeps the higher rate, ties to the lower index. Uses exactly
/// 2 log2(N_r) + 2 log2(N_t) probes.
BeamPair hierarchical_search(const RateProbe& probe, const HierarchicalCodebook& cb_tx,
                             const HierarchicalCodebook& cb_rx, const ReflectionConfig& phi);

} // namespace risaoi
