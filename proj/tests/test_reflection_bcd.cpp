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

#include <memory>

#include "oracle.hpp"
#include "risaoi/bcd.hpp"
#include "risaoi/channel.hpp"
#include "risaoi/local_search.hpp"

using namespace risaoi;

namespace {

LinkBudget unit_budget()
{
    LinkBudget b;
    b.tx_power = 1.0;
    b.noise_power = 1.0;
    return b;
}

RateProbe oracle_probe(const CMatrix& g, const CMatrix& h)
{
    return [g, h](const Codeword& w, const Codeword& f, const ReflectionConfig& phi) {
        return std::log2(1.0 + oracle::received_power(g, phi.phases(), h, w, f));
    };
}

} // namespace

TEST_CASE("phase set")
{
    const auto one = phase_set(1);
    REQUIRE(one.size() == 2);
    CHECK(one[0] == 0.0);
    CHECK(one[1] == doctest::Approx(kPi));

    const auto two = phase_set(2);
    REQUIRE(two.size() == 4);
    for (int p = 0; p < 4; ++p)
        CHECK(two[static_cast<std::size_t>(p)] == doctest::Approx(p * kPi / 2));

    for (int b = 1; b <= 6; ++b)
        CHECK(phase_set(b).size() == (std::size_t{1} << b));
    CHECK_THROWS_AS(phase_set(0), ConfigError);
}

TEST_CASE("reflection config")
{
    ReflectionConfig c(3, 2);
    CHECK(c.size() == 3);
    CHECK(c.levels() == 4);
    c.set_index(1, 3);
    CHECK(c.phase(1) == doctest::Approx(3 * kPi / 2));
    CHECK(std::abs(c.coefficients()[1] - cplx(0.0, -1.0)) < 1e-12);
    CHECK_THROWS_AS(c.set_index(1, 4), ContractViolation);

    Rng a(5), b(5);
    CHECK(ReflectionConfig::random(50, 3, a) == ReflectionConfig::random(50, 3, b));
}

TEST_CASE("local search: one element matches brute force")
{
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const int bits = 1 + trial % 3;
        const CMatrix g = oracle::gaussian(2, 1, rng);
        const CMatrix h = oracle::gaussian(1, 2, rng);
        const RateProbe probe = oracle_probe(g, h);
        const Codeword w = oracle::gaussian(2, 1, rng).col(0).normalized();
        const Codeword f = oracle::gaussian(2, 1, rng).col(0).normalized();
        double best = -1.0;
        for (std::uint32_t p = 0; p < (1u << bits); ++p) {
            ReflectionConfig c(1, bits);
            c.set_index(0, p);
            best = std::max(best, probe(w, f, c));
        }
        const ReflectionConfig got = local_search(probe, w, f, ReflectionConfig::random(1, bits, rng));
        CHECK(probe(w, f, got) == doctest::Approx(best).epsilon(1e-12));
    }
}

TEST_CASE("local search: coordinate-wise optimal, monotone, exact probe budget")
{
    Rng rng(22);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 2 + static_cast<std::size_t>(trial % 5);
        const int bits = 1 + trial % 3;
        const CMatrix g = oracle::gaussian(3, m, rng);
        const CMatrix h = oracle::gaussian(m, 2, rng);
        const RateProbe probe = oracle_probe(g, h);
        const Codeword w = oracle::gaussian(3, 1, rng).col(0).normalized();
        const Codeword f = oracle::gaussian(2, 1, rng).col(0).normalized();
        const ReflectionConfig start = ReflectionConfig::random(m, bits, rng);

        int calls = 0;
        const RateProbe counted = [&](const Codeword& a, const Codeword& b, const ReflectionConfig& p) {
            ++calls;
            return probe(a, b, p);
        };
        const ReflectionConfig got = local_search(counted, w, f, start);
        CHECK(calls == static_cast<int>(m) * (1 << bits));
        const double r = probe(w, f, got);
        CHECK(r >= probe(w, f, start) - 1e-12);
        CHECK(got.bits() == bits);
        // The last element was optimized with every other element in its final state.
        for (std::uint32_t p = 0; p < got.levels(); ++p) {
            ReflectionConfig n = got;
            n.set_index(m - 1, p);
            CHECK(probe(w, f, n) <= r + 1e-12);
        }
    }
}

TEST_CASE("local search: two elements, one bit")
{
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const CMatrix g = oracle::gaussian(2, 2, rng);
        const CMatrix h = oracle::gaussian(2, 2, rng);
        const RateProbe probe = oracle_probe(g, h);
        const Codeword w = oracle::gaussian(2, 1, rng).col(0).normalized();
        const Codeword f = oracle::gaussian(2, 1, rng).col(0).normalized();
        const ReflectionConfig got = local_search(probe, w, f, ReflectionConfig::random(2, 1, rng));
        // Element 0 was chosen before element 1 moved, so only element 1 is guaranteed.
        ReflectionConfig flip = got;
        flip.set_index(1, 1 - got.index(1));
        CHECK(probe(w, f, flip) <= probe(w, f, got) + 1e-12);
    }
}

TEST_CASE("local search: constant probe keeps the first phase")
{
    const RateProbe flat = [](const Codeword&, const Codeword&, const ReflectionConfig&) { return 2.0; };
    Rng rng(1);
    const ReflectionConfig got =
        local_search(flat, Codeword::Ones(1), Codeword::Ones(1), ReflectionConfig::random(8, 3, rng));
    for (std::size_t m = 0; m < 8; ++m)
        CHECK(got.index(m) == 0);
}

TEST_CASE("bcd: tiny instance is bounded by exhaustive enumeration")
{
    const auto cb = build_codebook(2);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        const CMatrix g = oracle::gaussian(2, 2, rng);
        const CMatrix h = oracle::gaussian(2, 2, rng);
        const RateProbe probe = oracle_probe(g, h);
        double global = 0.0;
        for (std::size_t i = 1; i <= 2; ++i)
            for (std::size_t j = 1; j <= 2; ++j)
                for (double p0 : {0.0, kPi})
                    for (double p1 : {0.0, kPi})
                        global = std::max(global, std::log2(1.0 + oracle::received_power(
                                                                      g, {p0, p1}, h, cb.codeword(1, i),
                                                                      cb.codeword(1, j))));
        const LinkSolution s = joint_optimize(probe, cb, cb, 2, 1, kDefaultBcdTolerance, rng);
        CHECK(s.rate >= s.rate_history.front() - 1e-12);
        CHECK(s.rate <= global + 1e-9);
    }
}

TEST_CASE("bcd: invariants on random links")
{
    const auto cb_t = build_codebook(16), cb_r = build_codebook(8);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        const CMatrix g = oracle::gaussian(16, 6, rng);
        const CMatrix h = oracle::gaussian(6, 8, rng);
        auto eval = std::make_shared<LinkEvaluator>(g, h, unit_budget());
        const RateProbe probe = [eval](const Codeword& w, const Codeword& f, const ReflectionConfig& p) {
            return eval->rate(w, f, p);
        };
        const LinkSolution s = joint_optimize(probe, cb_t, cb_r, 6, 2, kDefaultBcdTolerance, rng);
        CHECK(s.iterations == static_cast<int>(s.rate_history.size()) - 1);
        CHECK(s.rate == s.rate_history.back());
        CHECK(rate(s.snr) == doctest::Approx(s.rate).epsilon(1e-12));
        CHECK(s.rate == doctest::Approx(probe(s.w, s.f, s.phi)).epsilon(1e-12));
        for (std::size_t i = 1; i < s.rate_history.size(); ++i)
            CHECK(s.rate_history[i] >= s.rate_history[i - 1]);
        CHECK_FALSE(s.hit_iteration_cap);
    }
}

TEST_CASE("bcd: zero channel stops after one iteration")
{
    const auto cb = build_codebook(4);
    const RateProbe zero = oracle_probe(CMatrix::Zero(4, 3), CMatrix::Zero(3, 4));
    Rng rng(3);
    const LinkSolution s = joint_optimize(zero, cb, cb, 3, 2, kDefaultBcdTolerance, rng);
    CHECK(s.rate_history == std::vector<double>{0.0, 0.0});
    CHECK(s.iterations == 1);
    CHECK(s.snr == 0.0);
}

TEST_CASE("bcd: determinism, cap and arguments")
{
    Rng ch(9);
    const CMatrix g = oracle::gaussian(8, 4, ch);
    const CMatrix h = oracle::gaussian(4, 8, ch);
    const RateProbe probe = oracle_probe(g, h);
    const auto cb = build_codebook(8);

    Rng a(44), b(44);
    const LinkSolution s1 = joint_optimize(probe, cb, cb, 4, 2, kDefaultBcdTolerance, a);
    const LinkSolution s2 = joint_optimize(probe, cb, cb, 4, 2, kDefaultBcdTolerance, b);
    CHECK(s1.rate_history == s2.rate_history);
    CHECK(s1.phi == s2.phi);
    CHECK(s1.w == s2.w);

    Rng c(44);
    const LinkSolution capped = joint_optimize(probe, cb, cb, 4, 2, 1e-300, c, 1);
    CHECK(capped.iterations == 1);

    Rng d(1);
    CHECK_THROWS_AS(joint_optimize(probe, cb, cb, 4, 2, 0.0, d), ConfigError);
}
