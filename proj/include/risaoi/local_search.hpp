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

#include "risaoi/probe.hpp"
#include "risaoi/reflection_config.hpp"

namespace risaoi {

/// One coordinate sweep over the RIS elements. Element m tries every phase in
/// phase_set(b) with the other elements held, and keeps the highest-rate one
/// (ties to the lowest phase index). Exactly M * 2^b probes; the result never
/// rates below phi_init.
ReflectionConfig local_search(const RateProbe& probe, const Codeword& w, const Codeword& f,
                              const ReflectionConfig& phi_init);

} // namespace risaoi
