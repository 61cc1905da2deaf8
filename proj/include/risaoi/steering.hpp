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

#include "risaoi/types.hpp"

namespace risaoi {

inline constexpr double kHalfWavelength = 0.5;

/// Normalized ULA response a(n, psi); entry i is exp(j 2 pi (d/lambda) i sin psi) / sqrt(n).
CVector ula_steering(std::size_t n, double psi, double spacing_ratio = kHalfWavelength);

/// Same response parameterized directly by the spatial frequency omega = sin(psi).
/// Codebook centres live in this domain, e.g. a(N, -1 + (2n - 1) / N).
CVector ula_steering_sin(std::size_t n, double omega, double spacing_ratio = kHalfWavelength);

/// Normalized UPA response for an m_a x m_b surface. Element (i, j) sits at flat index
/// i * m_b + j and carries phase 2 pi (d/lambda) (i sin(zeta) sin(phi) + j cos(zeta)).
/// zeta is measured from the m_b axis, phi is the azimuth in the surface plane.
CVector upa_steering(std::size_t m_a, std::size_t m_b, double phi, double zeta,
                     double spacing_ratio = kHalfWavelength);

} // namespace risaoi
