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

#include "risaoi/reflection_config.hpp"
#include "risaoi/steering.hpp"
#include "risaoi/types.hpp"

namespace risaoi {

/// Node layout. The z component of every point is the node height.
///
/// Array orientations are fixed: the BS ULA lies along x with broadside +y,
/// each UE ULA lies along y with broadside -x (towards the RIS wall), and the
/// RIS lies in the y-z plane (rows along y, columns along z) facing +x.
struct SystemGeometry {
    Vec3 bs_position{2.0, 0.0, 10.0};
    Vec3 ris_position{0.0, 40.0, 2.5};
    Vec3 ue_circle_center{10.0, 40.0, 1.5};
    double ue_circle_radius = 5.0;

    double bs_height() const { return bs_position.z; }
    double ris_height() const { return ris_position.z; }
    double ue_height() const { return ue_circle_center.z; }

    void validate() const;
};

struct ArrayConfig {
    std::size_t n_tx = 64;
    std::size_t n_rx = 64;
    std::size_t ris_rows = 10;
    std::size_t ris_cols = 10;
    double element_spacing_ratio = kHalfWavelength;

    std::size_t ris_elements() const { return ris_rows * ris_cols; }
    void validate() const;
};

/// One multipath component. For BS->RIS paths the departure angle is the BS
/// azimuth and the arrival angles are at the RIS; for RIS->UE paths the
/// departure angles are at the RIS and the arrival angle is the UE azimuth.
struct PathComponent {
    cplx complex_gain{0.0, 0.0};
    double azimuth_aod = 0.0;
    double elevation_aod = 0.0;
    double azimuth_aoa = 0.0;
    double elevation_aoa = 0.0;
    bool is_los = false;

    bool operator==(const PathComponent&) const = default;
};

/// All powers are linear (mW) or linear ratios; see from_db().
struct LinkBudget {
    double tx_power = 0.0;
    double noise_power = 0.0;
    double snr_threshold = 0.0;
    double pathloss_a = 61.4;
    double pathloss_b = 2.0;
    double shadow_sigma = 5.8;
    double rician_mu = 10.0;

    static LinkBudget from_db(double tx_power_dbm, double noise_power_dbm, double snr_threshold_db,
                              double a = 61.4, double b = 2.0, double shadow_sigma_db = 5.8,
                              double rician_mu_db = 10.0);
    /// 45 dBm transmit, -90 dBm noise, 2 dB demodulation threshold.
    static LinkBudget defaults();

    void validate() const;
};

/// One quasi-static channel draw.
///
/// g is stored N_t x M and each h_r[k] is M x N_r so that the end-to-end
/// channel is H = g diag(exp(j phi)) h_r[k] and the received amplitude is
/// f^H H^H w. Both are the conjugate transposes of the physical
/// receive-by-transmit S-V sums.
struct ChannelRealization {
    CMatrix g;
    std::vector<CMatrix> h_r;
    std::vector<PathComponent> paths_g;
    std::vector<std::vector<PathComponent>> paths_h;
    std::vector<Vec3> ue_positions;

    std::size_t ue_count() const { return h_r.size(); }
};

/// a + 10 b log10(d) + shadow, in dB.
double pathloss_db(double distance, double shadow_db, const LinkBudget& budget);

/// Draws a Saleh-Valenzuela realization. The first path of every link is the
/// geometric LOS path; the rest are NLOS with uniformly drawn angles.
///
/// A single value is taken from `rng` and used to seed independent substreams
/// for the BS->RIS link and for each UE, so UE k's draw does not depend on
/// k_ues, and no draw depends on the array sizes.
ChannelRealization draw_channel(const SystemGeometry& geometry, const ArrayConfig& arrays,
                                const LinkBudget& budget, std::size_t p_paths, std::size_t l_paths,
                                std::size_t k_ues, Rng& rng);

/// G diag(exp(j phi)) H_r.
CMatrix effective_channel(const CMatrix& g, const ReflectionConfig& phi, const CMatrix& h_r);

/// |f^H h_eff^H w|^2 P_T / sigma^2.
double snr(const Codeword& f, const Codeword& w, const CMatrix& h_eff, const LinkBudget& budget);

/// log2(1 + snr).
double rate(double snr_linear);

/// Fast evaluation of the received SNR for one (BS, UE) link without forming
/// the N_t x N_r effective channel. Caches G^H w and H_r f between calls so a
/// sweep over RIS phases costs O(M) per evaluation. Not thread-safe.
class LinkEvaluator {
public:
    LinkEvaluator(const CMatrix& g, const CMatrix& h_r, const LinkBudget& budget);

    double snr(const Codeword& w, const Codeword& f, const ReflectionConfig& phi);
    double rate(const Codeword& w, const Codeword& f, const ReflectionConfig& phi)
    {
        return risaoi::rate(snr(w, f, phi));
    }

private:
    const CMatrix* g_;
    const CMatrix* h_r_;
    double power_ratio_;

    Codeword last_w_;
    Codeword last_f_;
    CVector bs_side_;
    CVector ue_side_;
    int table_bits_ = -1;
    std::vector<cplx> conj_table_;
};

} // namespace risaoi
