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

#include "risaoi/channel.hpp"

#include <algorithm>

namespace risaoi {

namespace {

// Azimuth seen by a ULA whose axis is `axis` and whose broadside is `broadside`
// (both horizontal unit vectors). Only the horizontal part of d is used.
double ula_azimuth(const Vec3& d, const Vec3& axis, const Vec3& broadside)
{
    const double along = d.x * axis.x + d.y * axis.y;
    const double across = d.x * broadside.x + d.y * broadside.y;
    const double h = std::hypot(along, across);
    if (h == 0.0)
        return 0.0;
    return std::asin(std::clamp(along / h, -1.0, 1.0));
}

struct RisAngles {
    double azimuth;
    double elevation;
};

// Angles at the RIS (rows along y, columns along z, facing +x) towards d.
// The azimuth is folded into [-pi/2, pi/2]; the UPA response only depends on
// sin(zeta) sin(phi) and cos(zeta), both of which are preserved.
RisAngles ris_angles(const Vec3& d)
{
    const double r = d.norm();
    const double uz = std::clamp(d.z / r, -1.0, 1.0);
    const double h = std::hypot(d.x, d.y);
    const double az = h == 0.0 ? 0.0 : std::asin(std::clamp(d.y / h, -1.0, 1.0));
    return {az, std::acos(uz)};
}

struct DrawnPath {
    cplx gain;
    double ula_azimuth;
    RisAngles ris;
};

cplx complex_normal(Rng& rng, double variance)
{
    std::normal_distribution<double> n(0.0, std::sqrt(variance / 2.0));
    const double re = n(rng);
    const double im = n(rng);
    return {re, im};
}

double uniform(Rng& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Rng substream(std::uint64_t base, std::uint64_t tag)
{
    std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                      static_cast<std::uint32_t>(tag), static_cast<std::uint32_t>(tag >> 32)};
    return Rng(seq);
}

constexpr Vec3 kBsAxis{1.0, 0.0, 0.0};
constexpr Vec3 kBsBroadside{0.0, 1.0, 0.0};
constexpr Vec3 kUeAxis{0.0, 1.0, 0.0};
constexpr Vec3 kUeBroadside{-1.0, 0.0, 0.0};

constexpr std::uint64_t kBsRisTag = 0xB5B5B5B5ull;

} // namespace

void SystemGeometry::validate() const
{
    if (!(ue_circle_radius > 0.0))
        throw ConfigError("ue_circle_radius must be positive");
    if (bs_height() < 0.0 || ris_height() < 0.0 || ue_height() < 0.0)
        throw ConfigError("node heights must be non-negative");
}

void ArrayConfig::validate() const
{
    if (!is_power_of_two(n_tx))
        throw ConfigError("n_tx must be a power of two");
    if (!is_power_of_two(n_rx))
        throw ConfigError("n_rx must be a power of two");
    if (ris_rows < 1 || ris_cols < 1)
        throw ConfigError("RIS must have at least one element");
    if (!(element_spacing_ratio > 0.0))
        throw ConfigError("element_spacing_ratio must be positive");
}

LinkBudget LinkBudget::from_db(double tx_power_dbm, double noise_power_dbm, double snr_threshold_db,
                               double a, double b, double shadow_sigma_db, double rician_mu_db)
{
    LinkBudget lb;
    lb.tx_power = db_to_linear(tx_power_dbm);
    lb.noise_power = db_to_linear(noise_power_dbm);
    lb.snr_threshold = db_to_linear(snr_threshold_db);
    lb.pathloss_a = a;
    lb.pathloss_b = b;
    lb.shadow_sigma = shadow_sigma_db;
    lb.rician_mu = rician_mu_db;
    return lb;
}

LinkBudget LinkBudget::defaults() { return from_db(45.0, -90.0, 2.0); }

void LinkBudget::validate() const
{
    if (!(tx_power > 0.0) || !(noise_power > 0.0))
        throw ConfigError("transmit and noise power must be positive");
    if (!(snr_threshold > 0.0))
        throw ConfigError("snr threshold must be positive");
    if (shadow_sigma < 0.0)
        throw ConfigError("shadow_sigma must be non-negative");
}

double pathloss_db(double distance, double shadow_db, const LinkBudget& budget)
{
    if (!(distance > 0.0))
        throw DomainError("pathloss_db: distance must be positive");
    return budget.pathloss_a + 10.0 * budget.pathloss_b * std::log10(distance) + shadow_db;
}

ChannelRealization draw_channel(const SystemGeometry& geometry, const ArrayConfig& arrays,
                                const LinkBudget& budget, std::size_t p_paths, std::size_t l_paths,
                                std::size_t k_ues, Rng& rng)
{
    if (p_paths < 1 || l_paths < 1 || k_ues < 1)
        throw ContractViolation("draw_channel: path and UE counts must be >= 1");

    const std::size_t nt = arrays.n_tx;
    const std::size_t nr = arrays.n_rx;
    const std::size_t ma = arrays.ris_rows;
    const std::size_t mb = arrays.ris_cols;
    const std::size_t m = arrays.ris_elements();
    const double dl = arrays.element_spacing_ratio;

    const std::uint64_t base = rng();
    ChannelRealization ch;

    // Draws for one link: shadowing first, then per path gain followed by (NLOS only)
    // ULA sin-angle, RIS azimuth, RIS elevation. The count is independent of array size.
    auto draw_paths = [&](Rng& s, std::size_t count, double distance, double los_ula,
                          RisAngles los_ris) {
        std::normal_distribution<double> shadow(0.0, budget.shadow_sigma);
        const double kappa = pathloss_db(distance, budget.shadow_sigma > 0.0 ? shadow(s) : 0.0, budget);
        std::vector<DrawnPath> out;
        for (std::size_t i = 0; i < count; ++i) {
            const bool los = i == 0;
            const double var = db_to_linear(-(los ? kappa : kappa + budget.rician_mu));
            const cplx gain = complex_normal(s, var);
            double ula = los_ula;
            RisAngles ris = los_ris;
            if (!los) {
                ula = std::asin(uniform(s, -1.0, 1.0));
                ris.azimuth = uniform(s, -kPi / 2.0, kPi / 2.0);
                ris.elevation = uniform(s, 0.0, kPi);
            }
            out.push_back({gain, ula, ris});
        }
        return out;
    };

    {
        Rng s = substream(base, kBsRisTag);
        const Vec3 to_ris = geometry.ris_position - geometry.bs_position;
        const Vec3 to_bs = geometry.bs_position - geometry.ris_position;
        const auto paths = draw_paths(s, p_paths, to_ris.norm(), ula_azimuth(to_ris, kBsAxis, kBsBroadside),
                                      ris_angles(to_bs));
        const double c = std::sqrt(static_cast<double>(nt * m) / static_cast<double>(p_paths));
        ch.g = CMatrix::Zero(static_cast<Eigen::Index>(nt), static_cast<Eigen::Index>(m));
        for (std::size_t i = 0; i < paths.size(); ++i) {
            const auto& [gain, psi, ris] = paths[i];
            // Physical M x N_t term alpha a_r(M) a_t(N_t)^H, stored conjugate-transposed.
            const CVector at = ula_steering(nt, psi, dl);
            const CVector ar = upa_steering(ma, mb, ris.azimuth, ris.elevation, dl);
            ch.g.noalias() += (c * std::conj(gain)) * at * ar.adjoint();
            PathComponent pc;
            pc.complex_gain = gain;
            pc.azimuth_aod = psi;
            pc.azimuth_aoa = ris.azimuth;
            pc.elevation_aoa = ris.elevation;
            pc.is_los = i == 0;
            ch.paths_g.push_back(pc);
        }
    }

    const double c = std::sqrt(static_cast<double>(m * nr) / static_cast<double>(l_paths));
    for (std::size_t k = 0; k < k_ues; ++k) {
        Rng s = substream(base, k);
        const double radius = geometry.ue_circle_radius * std::sqrt(uniform(s, 0.0, 1.0));
        const double theta = uniform(s, 0.0, 2.0 * kPi);
        const Vec3 ue{geometry.ue_circle_center.x + radius * std::cos(theta),
                      geometry.ue_circle_center.y + radius * std::sin(theta), geometry.ue_height()};
        ch.ue_positions.push_back(ue);

        const Vec3 to_ris = geometry.ris_position - ue;
        const Vec3 to_ue = ue - geometry.ris_position;
        const auto paths = draw_paths(s, l_paths, to_ris.norm(), ula_azimuth(to_ris, kUeAxis, kUeBroadside),
                                      ris_angles(to_ue));
        CMatrix h = CMatrix::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(nr));
        std::vector<PathComponent> comps;
        for (std::size_t i = 0; i < paths.size(); ++i) {
            const auto& [gain, psi, ris] = paths[i];
            // Physical N_r x M term beta a_r(N_r) a_t(M)^H, stored conjugate-transposed.
            const CVector ar = ula_steering(nr, psi, dl);
            const CVector at = upa_steering(ma, mb, ris.azimuth, ris.elevation, dl);
            h.noalias() += (c * std::conj(gain)) * at * ar.adjoint();
            PathComponent pc;
            pc.complex_gain = gain;
            pc.azimuth_aod = ris.azimuth;
            pc.elevation_aod = ris.elevation;
            pc.azimuth_aoa = psi;
            pc.is_los = i == 0;
            comps.push_back(pc);
        }
        ch.h_r.push_back(std::move(h));
        ch.paths_h.push_back(std::move(comps));
    }
    return ch;
}

CMatrix effective_channel(const CMatrix& g, const ReflectionConfig& phi, const CMatrix& h_r)
{
    const auto m = static_cast<Eigen::Index>(phi.size());
    if (g.cols() != m || h_r.rows() != m)
        throw ContractViolation("effective_channel: dimension mismatch");
    return g * phi.coefficients().asDiagonal() * h_r;
}

double snr(const Codeword& f, const Codeword& w, const CMatrix& h_eff, const LinkBudget& budget)
{
    if (w.size() != h_eff.rows() || f.size() != h_eff.cols())
        throw ContractViolation("snr: codeword dimensions do not match the channel");
    const cplx y = f.dot(h_eff.adjoint() * w);
    return std::norm(y) * budget.tx_power / budget.noise_power;
}

double rate(double snr_linear)
{
    if (snr_linear < 0.0)
        throw DomainError("rate: negative SNR");
    return std::log2(1.0 + snr_linear);
}

LinkEvaluator::LinkEvaluator(const CMatrix& g, const CMatrix& h_r, const LinkBudget& budget)
    : g_(&g), h_r_(&h_r), power_ratio_(budget.tx_power / budget.noise_power)
{
    if (g.cols() != h_r.rows())
        throw ContractViolation("LinkEvaluator: G and H_r disagree on the RIS size");
}

double LinkEvaluator::snr(const Codeword& w, const Codeword& f, const ReflectionConfig& phi)
{
    if (w.size() != g_->rows() || f.size() != h_r_->cols() ||
        static_cast<Eigen::Index>(phi.size()) != g_->cols())
        throw ContractViolation("LinkEvaluator: dimension mismatch");

    if (last_w_.size() != w.size() || last_w_ != w) {
        bs_side_.noalias() = g_->adjoint() * w;
        last_w_ = w;
    }
    if (last_f_.size() != f.size() || last_f_ != f) {
        ue_side_.noalias() = *h_r_ * f;
        last_f_ = f;
    }
    if (table_bits_ != phi.bits()) {
        conj_table_.clear();
        for (double p : phase_set(phi.bits()))
            conj_table_.push_back(std::polar(1.0, -p));
        table_bits_ = phi.bits();
    }

    // f^H H_r^H Phi^H G^H w = sum_m conj(ue_m) conj(e^{j phi_m}) bs_m
    cplx y{0.0, 0.0};
    const auto& idx = phi.indices();
    for (std::size_t m = 0; m < idx.size(); ++m) {
        const auto e = static_cast<Eigen::Index>(m);
        y += std::conj(ue_side_[e]) * conj_table_[idx[m]] * bs_side_[e];
    }
    return std::norm(y) * power_ratio_;
}

} // namespace risaoi
