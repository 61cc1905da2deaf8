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

#include <functional>

#include "risaoi/reflection_config.hpp"
#include "risaoi/types.hpp"

namespace risaoi {

/// Rate measurement fed back by the UE for a (w, f, phi) configuration, in
/// bit/s/Hz. This is the only channel access the search routines get; it must
/// be deterministic for fixed inputs within one realization.
using RateProbe = std::function<double(const Codeword& w, const Codeword& f, const ReflectionConfig& phi)>;

} // namespace risaoi
