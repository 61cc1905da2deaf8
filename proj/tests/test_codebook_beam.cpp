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

#include <doctest.h>

#include "oracle.hpp"
#include "risaoi/beam_training.hpp"
#include "risaoi/codebook.hpp"
#include "risaoi/steering.hpp"

using namespace risaoi;

namespace {

double gain_oracle(const Codeword& w, double omega)
{
    const auto a = oracle::ula(static_cast<std::size_t>(w.size()), omega);
    return std::abs(oracle::inner(a, w)) * std::sqrt(static_cast<double>(w.size()));
}

RateProbe counting(const RateProbe& inner, int& calls)
{
    return [&calls, inner](const Codeword& w, const Codeword& f, const ReflectionConfig& p) {
        ++calls;
        return inner(w, f, p);
    };
}

} // namespace

TEST_CASE("codebook layout")
{
    const auto cb2 = build_codebook(2);
    CHECK(cb2.layer_count() == 2);
    const auto lo = oracle::ula(2, -0.5), hi = oracle::ula(2, 0.5);
    CHECK(std::abs(cb2.codeword(1, 1)[0] - lo[0]) < 1e-12);
    CHECK(std::abs(cb2.codeword(1, 1)[1] - lo[1]) < 1e-12);
    CHECK(std::abs(cb2.codeword(1, 2)[1] - hi[1]) < 1e-12);

    const auto cb4 = build_codebook(4);
    CHECK(cb4.layer_count() == 3);
    CHECK(cb4.layer_size(0) == 1);
    CHECK(cb4.layer_size(1) == 2);
    CHECK(cb4.layer_size(2) == 4);

    CHECK_THROWS_AS(build_codebook(6), ConfigError);
    CHECK_THROWS_AS(build_codebook(1), ConfigError);
    CHECK_THROWS_AS(cb4.codeword(2, 5), ContractViolation);
    CHECK_THROWS_AS(cb4.codeword(3, 1), ContractViolation);
}

TEST_CASE("codewords are unit norm")
{
    for (std::size_t n = 2; n <= 512; n *= 2) {
        const auto cb = build_codebook(n);
        for (int l = 0; l <= cb.last_layer(); ++l)
            for (const auto& w : cb.layer(l))
                CHECK(std::abs(w.norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("later codewords in a layer are shifted copies of the first")
{
    for (std::size_t n : {8u, 16u, 64u}) {
        const auto cb = build_codebook(n);
        for (int l = 1; l < cb.last_layer(); ++l) {
            const double size = static_cast<double>(cb.layer_size(l));
            for (std::size_t i = 2; i <= cb.layer_size(l); ++i) {
                const double shift = 2.0 * static_cast<double>(i - 1) / size;
                for (double omega = -1.0; omega <= 1.0; omega += 0.01) {
                    double back = omega - shift;
                    if (back < -1.0)
                        back += 2.0;
                    CHECK(std::abs(gain_oracle(cb.codeword(l, i), omega) -
                                   gain_oracle(cb.codeword(l, 1), back)) < 1e-9);
                }
            }
        }
    }
}

TEST_CASE("beam gain")
{
    const Codeword w = ula_steering(8, 0.4);
    CHECK(beam_gain(w, 0.4, 8) == doctest::Approx(std::sqrt(8.0)));
    CHECK(beam_gain(ula_steering(2, 0.0), kPi / 2, 2) < 1e-12);
    CHECK(beam_gain(Codeword::Zero(4), 0.3, 4) == 0.0);
    CHECK_THROWS_AS(beam_gain(w, 0.4, 4), ContractViolation);
}

TEST_CASE("each codeword is strongest inside its own coverage interval")
{
    const auto cb = build_codebook(32);
    for (int l = 1; l <= cb.last_layer(); ++l) {
        const std::size_t size = cb.layer_size(l);
        for (std::size_t i = 1; i <= size; ++i) {
            const auto [lo, hi] = cb.coverage(l, i);
            const double mid = 0.5 * (lo + hi);
            double best = 0.0;
            std::size_t arg = 0;
            for (std::size_t j = 1; j <= size; ++j) {
                const double g = gain_oracle(cb.codeword(l, j), mid);
                if (g > best) {
                    best = g;
                    arg = j;
                }
            }
            CHECK(arg == i);
        }
    }
}

TEST_CASE("children refine the parent's coverage")
{
    CHECK(children(build_codebook(8), 1, 1) == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK(children(build_codebook(8), 1, 2) == std::pair<std::size_t, std::size_t>{3, 4});
    CHECK(children(build_codebook(8), 2, 3) == std::pair<std::size_t, std::size_t>{5, 6});
    CHECK_THROWS_AS(children(build_codebook(8), 3, 1), ContractViolation);

    const auto cb = build_codebook(16);
    for (int l = 0; l < cb.last_layer(); ++l)
        for (std::size_t i = 1; i <= cb.layer_size(l); ++i) {
            const auto [a, b] = children(cb, l, i);
            const auto parent = cb.coverage(l, i);
            CHECK(cb.coverage(l + 1, a).first == doctest::Approx(parent.first));
            CHECK(cb.coverage(l + 1, b).second == doctest::Approx(parent.second));
            CHECK(cb.coverage(l + 1, a).second == doctest::Approx(cb.coverage(l + 1, b).first));
        }
}

TEST_CASE("omni codeword")
{
    CHECK(omni_codeword(1) == Codeword::Ones(1));
    const Codeword e = omni_codeword(4);
    CHECK(e[0] == cplx(1.0, 0.0));
    CHECK(e.tail(3).norm() == 0.0);
    for (double psi = -1.5; psi <= 1.5; psi += 0.1)
        CHECK(beam_gain(e, psi, 4) == doctest::Approx(1.0));
}

TEST_CASE("hierarchical search: 2x2 is exhaustive")
{
    Rng rng(4);
    const auto cb = build_codebook(2);
    for (int trial = 0; trial < 50; ++trial) {
        const double sin_tx = std::uniform_real_distribution<double>(-1, 1)(rng);
        const double sin_rx = std::uniform_real_distribution<double>(-1, 1)(rng);
        // Single-path channel: separable gain at each end.
        const RateProbe probe = [&](const Codeword& w, const Codeword& f, const ReflectionConfig&) {
            return gain_oracle(w, sin_tx) * gain_oracle(f, sin_rx);
        };
        int calls = 0;
        const BeamPair got = hierarchical_search(counting(probe, calls), cb, cb, ReflectionConfig(1, 1));
        double best = -1.0;
        std::size_t bt = 0, br = 0;
        for (std::size_t t = 1; t <= 2; ++t)
            for (std::size_t r = 1; r <= 2; ++r) {
                const double v = probe(cb.codeword(1, t), cb.codeword(1, r), {});
                if (v > best) {
                    best = v;
                    bt = t;
                    br = r;
                }
            }
        CHECK(got.tx_index == bt);
        CHECK(got.rx_index == br);
        CHECK(calls == 4);
    }
}

TEST_CASE("hierarchical search: constant probe ties to the lowest index")
{
    const auto cb = build_codebook(8);
    const RateProbe flat = [](const Codeword&, const Codeword&, const ReflectionConfig&) { return 1.0; };
    const BeamPair got = hierarchical_search(flat, cb, cb, ReflectionConfig(1, 1));
    CHECK(got.tx_index == 1);
    CHECK(got.rx_index == 1);
    CHECK(got.w == cb.codeword(3, 1));
}

TEST_CASE("hierarchical search: N=4 finds the nearest leaf")
{
    const auto cb = build_codebook(4);
    for (std::size_t leaf = 1; leaf <= 4; ++leaf) {
        const auto [lo, hi] = cb.coverage(2, leaf);
        const double omega = lo + 0.3 * (hi - lo);
        const RateProbe probe = [&](const Codeword& w, const Codeword&, const ReflectionConfig&) {
            const double g = gain_oracle(w, omega);
            return g * g;
        };
        const BeamPair got = hierarchical_search(probe, cb, cb, ReflectionConfig(1, 1));
        CHECK(got.tx_index == leaf);
    }
}

TEST_CASE("hierarchical search probe budget")
{
    const RateProbe flat = [](const Codeword&, const Codeword&, const ReflectionConfig&) { return 0.5; };
    for (std::size_t nt : {2u, 8u, 64u})
        for (std::size_t nr : {4u, 32u}) {
            int calls = 0;
            hierarchical_search(counting(flat, calls), build_codebook(nt), build_codebook(nr), ReflectionConfig(1, 1));
            CHECK(calls == 2 * ilog2(nt) + 2 * ilog2(nr));
        }
}
