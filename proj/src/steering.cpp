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

#include "risaoi/steering.hpp"

namespace risaoi {

CVector ula_steering_sin(std::size_t n, double omega, double spacing_ratio)
{
    if (n < 1)
        throw ContractViolation("ula_steering: antenna count must be >= 1");
    CVector a(static_cast<Eigen::Index>(n));
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const double k = 2.0 * kPi * spacing_ratio * omega;
    for (std::size_t i = 0; i < n; ++i)
        a[static_cast<Eigen::Index>(i)] = std::polar(scale, k * static_cast<double>(i));
    return a;
}

CVector ula_steering(std::size_t n, double psi, double spacing_ratio)
{
    return ula_steering_sin(n, std::sin(psi), spacing_ratio);
}

CVector upa_steering(std::size_t m_a, std::size_t m_b, double phi, double zeta, double spacing_ratio)
{
    if (m_a < 1 || m_b < 1)
        throw ContractViolation("upa_steering: surface dimensions must be >= 1");
    const std::size_t m = m_a * m_b;
    CVector a(static_cast<Eigen::Index>(m));
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    const double row_step = 2.0 * kPi * spacing_ratio * std::sin(zeta) * std::sin(phi);
    const double col_step = 2.0 * kPi * spacing_ratio * std::cos(zeta);
    for (std::size_t i = 0; i < m_a; ++i)
        for (std::size_t j = 0; j < m_b; ++j)
            a[static_cast<Eigen::Index>(i * m_b + j)] =
                std::polar(scale, row_step * static_cast<double>(i) + col_step * static_cast<double>(j));
    return a;
}

} // namespace risaoi
