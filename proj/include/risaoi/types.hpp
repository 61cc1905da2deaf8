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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace risaoi {

using cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

/// Unit-norm complex beamforming weight vector.
using Codeword = Eigen::VectorXcd;

/// All randomness in the library flows through this engine type.
using Rng = std::mt19937_64;

inline constexpr double kPi = 3.14159265358979323846;

/// Invalid configuration value (non-power-of-two arrays, b < 1, unknown keys ...).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Caller broke a documented precondition (dimension mismatch, index range).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Mathematical domain error (log of a nonpositive distance, negative SNR).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    bool operator==(const Vec3&) const = default;
};

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// log2 of a power of two.
inline int ilog2(std::size_t n)
{
    int r = 0;
    while (n > 1) {
        n >>= 1;
        ++r;
    }
    return r;
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

} // namespace risaoi
