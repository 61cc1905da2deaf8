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

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "risaoi/cli.hpp"
#include "risaoi/config.hpp"
#include "risaoi/harness.hpp"
#include "risaoi/report.hpp"

using namespace risaoi;

namespace {

ExperimentConfig small_config()
{
    ExperimentConfig c;
    c.arrays.n_tx = 16;
    c.arrays.n_rx = 8;
    c.arrays.ris_rows = 4;
    c.arrays.ris_cols = 4;
    c.k_ues = 3;
    c.t_slots = 20;
    c.realizations = 4;
    return c;
}

int run_cli(std::vector<std::string> args, std::string* out_text = nullptr)
{
    args.insert(args.begin(), "risaoi_cli");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int rc = dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out_text)
        *out_text = out.str() + err.str();
    return rc;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("config defaults")
{
    const ExperimentConfig c;
    CHECK(c.arrays.n_tx == 64);
    CHECK(c.arrays.n_rx == 64);
    CHECK(c.arrays.ris_elements() == 100);
    CHECK(c.k_ues == 6);
    CHECK(c.t_slots == 100);
    CHECK(c.bits == 3);
    CHECK(c.p_paths == 4);
    CHECK(c.l_paths == 4);
    CHECK(c.a_max == 9.0);
    CHECK(c.delta == doctest::Approx(3e-3));
    CHECK(c.realizations == 20);
    CHECK(c.geometry.bs_height() == 10.0);
    CHECK(c.geometry.ris_height() == 2.5);
    CHECK(c.geometry.ue_height() == 1.5);
    CHECK(c.geometry.ue_circle_radius == 5.0);
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("config parsing")
{
    std::istringstream in("# comment\n"
                          "k_ues = 4   # trailing\n"
                          "ris_elements = 36\n"
                          "a_max = 3, 4, 5, 6\n"
                          "tx_power_dbm = 30\n"
                          "scheme = round_robin\n"
                          "sweep_axis = bits\n"
                          "sweep_values = 1,2,3\n");
    const ExperimentConfig c = parse_config(in);
    CHECK(c.k_ues == 4);
    CHECK(c.arrays.ris_rows == 6);
    CHECK(c.arrays.ris_cols == 6);
    CHECK(c.aoi_limits() == std::vector<double>{3, 4, 5, 6});
    CHECK(c.budget.tx_power == doctest::Approx(1000.0));
    CHECK(c.scheme == Scheme::round_robin);
    REQUIRE(c.sweep.has_value());
    CHECK(c.sweep->axis == "bits");
    CHECK(c.sweep->values == std::vector<double>{1, 2, 3});
}

TEST_CASE("config errors")
{
    ExperimentConfig c;
    CHECK_THROWS_AS(set_config_value(c, "no_such_key", "1"), ConfigError);
    CHECK_THROWS_AS(set_config_value(c, "k_ues", "six"), ConfigError);
    CHECK_THROWS_AS(set_config_value(c, "k_ues", "-2"), ConfigError);
    CHECK_THROWS_AS(set_config_value(c, "bs_position", "1,2"), ConfigError);
    CHECK_THROWS_AS(set_config_value(c, "scheme", "greedy"), ConfigError);

    std::istringstream no_equals("k_ues 4\n");
    CHECK_THROWS_AS(parse_config(no_equals), ConfigError);

    c = ExperimentConfig{};
    c.k_ues = 0;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = ExperimentConfig{};
    c.arrays.n_rx = 12;
    CHECK_THROWS_AS(c.validate(), ConfigError);
    c = ExperimentConfig{};
    c.a_max_per_ue = {1.0, 2.0};
    CHECK_THROWS_AS(c.validate(), ConfigError);
    CHECK_THROWS_AS(load_config("/nonexistent/risaoi.cfg"), ConfigError);
}

TEST_CASE("high-requirement UEs get the tighter limit")
{
    ExperimentConfig c;
    c.high_requirement_count = 2;
    CHECK(c.aoi_limits() == std::vector<double>{4, 4, 9, 9, 9, 9});
}

TEST_CASE("realizations are deterministic and schemes share the pipeline")
{
    const ExperimentConfig c = small_config();
    const auto a = run_all_schemes(c, 2);
    const auto b = run_all_schemes(c, 2);
    for (std::size_t s = 0; s < 4; ++s) {
        CHECK(a[s].sum_rate == b[s].sum_rate);
        CHECK(a[s].schedule == b[s].schedule);
    }
    const auto single = run_realization(c, 2);
    CHECK(single.sum_rate == a[0].sum_rate);
    CHECK(run_baseline(c, Scheme::random_bf, 2).sum_rate == a[2].sum_rate);

    const auto& prop = a[0];
    const auto& rr = a[3];
    REQUIRE(prop.links.size() == rr.links.size());
    for (std::size_t k = 0; k < prop.links.size(); ++k) {
        CHECK(prop.links[k].rate == rr.links[k].rate);
        CHECK(prop.links[k].phi == rr.links[k].phi);
    }
    CHECK(rr.sum_rate <= prop.sum_rate + 1e-9);
    if (!prop.all_infeasible)
        CHECK(rr.system_average_aoi <= prop.system_average_aoi + 1e-12);
}

TEST_CASE("result bookkeeping")
{
    const ExperimentConfig c = small_config();
    const auto r = run_realization(c, 0);
    CHECK(r.avg_sum_rate_per_slot == doctest::Approx(r.sum_rate / static_cast<double>(c.t_slots)));
    double s = 0.0;
    for (std::size_t t = 0; t < c.t_slots; ++t)
        if (const LinkSolution* l = r.slot_link(t); l && r.profile.demodulable[static_cast<std::size_t>(r.schedule.scheduled_ue(t))])
            s += l->rate;
    CHECK(s == doctest::Approx(r.sum_rate));
    for (std::size_t k = 0; k < c.k_ues; ++k)
        CHECK(r.profile.demodulable[k] == (r.links[k].snr > c.budget.snr_threshold));
}

TEST_CASE("one UE on a strong channel takes every slot")
{
    ExperimentConfig c = small_config();
    c.k_ues = 1;
    c.budget.tx_power *= 1e6;
    const auto r = run_realization(c, 0);
    REQUIRE_FALSE(r.all_infeasible);
    CHECK(r.schedule.slots_of(0) == c.t_slots);
    CHECK(r.sum_rate == doctest::Approx(c.t_slots * r.links[0].rate));
}

TEST_CASE("no demodulable UE leaves every slot idle")
{
    ExperimentConfig c = small_config();
    c.budget.tx_power = 1e-12;
    const auto r = run_realization(c, 0);
    CHECK(r.all_infeasible);
    CHECK(r.sum_rate == 0.0);
    for (int k : r.schedule.scheduled())
        CHECK(k == ScheduleMatrix::kIdle);
}

TEST_CASE("monte carlo aggregation")
{
    const ExperimentConfig c = small_config();
    std::vector<RealizationResult> rs;
    for (std::size_t i = 0; i < 5; ++i)
        rs.push_back(run_realization(c, i));

    const auto one = monte_carlo_mean(std::span<const RealizationResult>(rs.data(), 1));
    CHECK(one.sum_rate.mean == rs[0].sum_rate);
    CHECK(one.sum_rate.sd == 0.0);

    std::vector<RealizationResult> twins{rs[1], rs[1]};
    CHECK(monte_carlo_mean(twins).sum_rate.sd == 0.0);

    const auto forward = monte_carlo_mean(rs);
    std::reverse(rs.begin(), rs.end());
    std::rotate(rs.begin(), rs.begin() + 2, rs.end());
    const auto shuffled = monte_carlo_mean(rs);
    CHECK(forward.sum_rate.mean == shuffled.sum_rate.mean);
    CHECK(forward.sum_rate.sd == shuffled.sum_rate.sd);
    CHECK(forward.system_aoi.mean == shuffled.system_aoi.mean);
    CHECK(forward.bcd_iterations.mean == shuffled.bcd_iterations.mean);

    double mean = 0.0;
    for (const auto& r : rs)
        mean += r.sum_rate;
    mean /= 5.0;
    CHECK(forward.sum_rate.mean == doctest::Approx(mean));

    CHECK_THROWS_AS(monte_carlo_mean(std::span<const RealizationResult>()), ContractViolation);
}

TEST_CASE("sweep and threading give identical rows")
{
    const ExperimentConfig c = small_config();
    const auto serial = sweep(c, "k_ues", {2, 3}, 1);
    const auto threaded = sweep(c, "k_ues", {2, 3}, 3);
    REQUIRE(serial.size() == 8);
    REQUIRE(threaded.size() == 8);
    std::ostringstream a, b;
    write_sweep_csv(a, serial);
    write_sweep_csv(b, threaded);
    CHECK(a.str() == b.str());
    CHECK(serial[0].axis_value == 2.0);
    CHECK(serial[4].scheme == Scheme::proposed);
    CHECK_THROWS_AS(sweep(c, "colour", {1}, 1), ConfigError);
}

TEST_CASE("csv formatting")
{
    CHECK(format_number(5.97) == "5.97");
    CHECK(format_number(1.0 / 3.0) == "0.333333");
    CHECK(format_number(123456789.0) == "1.23457e+08");
}

TEST_CASE("figure presets")
{
    CHECK(figure_presets().size() == 9);
    const auto f13 = find_figure_preset("fig13");
    REQUIRE(f13.has_value());
    CHECK(f13->axis == "t_slots");
    CHECK(f13->values == std::vector<double>{50, 100, 150, 200, 250, 300});
    CHECK_FALSE(find_figure_preset("fig4").has_value());
}

TEST_CASE("cli: usage errors")
{
    CHECK(run_cli({}) == kExitUsageError);
    CHECK(run_cli({"bogus"}) == kExitUsageError);
    CHECK(run_cli({"run", "--set", "k_ues=0"}) == kExitUsageError);
    CHECK(run_cli({"run", "--set", "k_ues"}) == kExitUsageError);
    CHECK(run_cli({"figure", "fig99"}) == kExitUsageError);
    CHECK(run_cli({"sweep", "--set", "k_ues=2"}) == kExitUsageError);
    CHECK(run_cli({"--help"}) == kExitOk);
}

TEST_CASE("cli: run and figure write their files")
{
    const auto dir = std::filesystem::temp_directory_path() / "risaoi_cli_test";
    std::filesystem::remove_all(dir);
    const std::vector<std::string> small = {"--set", "n_tx=8",       "--set", "n_rx=8",   "--set",
                                            "ris_elements=9", "--set", "k_ues=3", "--set", "realizations=2",
                                            "--out", dir.string()};

    std::vector<std::string> run = {"run"};
    run.insert(run.end(), small.begin(), small.end());
    REQUIRE(run_cli(run) == kExitOk);
    CHECK(std::filesystem::exists(dir / "run.csv"));
    CHECK(std::filesystem::exists(dir / "run_detail.csv"));
    CHECK(slurp(dir / "run.csv").rfind(kSweepCsvHeader, 0) == 0);

    std::vector<std::string> fig = {"figure", "fig13"};
    fig.insert(fig.end(), small.begin(), small.end());
    REQUIRE(run_cli(fig) == kExitOk);
    const std::string csv = slurp(dir / "fig13.csv");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 6 * 4);
    CHECK(slurp(dir / "fig13.svg").find("<svg") != std::string::npos);

    std::vector<std::string> sw = {"sweep", "--axis", "bits", "--values", "1,2"};
    sw.insert(sw.end(), small.begin(), small.end());
    REQUIRE(run_cli(sw) == kExitOk);
    CHECK(std::filesystem::exists(dir / "sweep_bits.csv"));
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli: selftest")
{
    std::string text;
    CHECK(run_cli({"selftest"}, &text) == kExitOk);
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
    CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("shipped default config reproduces the built-in defaults")
{
    const ExperimentConfig c = load_config(std::string(RISAOI_SOURCE_DIR) + "/configs/default.cfg");
    const auto a = run_realization(c, 3);
    const auto b = run_realization(ExperimentConfig{}, 3);
    CHECK(a.sum_rate == b.sum_rate);
    CHECK(a.schedule == b.schedule);
    CHECK(c.budget.tx_power == doctest::Approx(ExperimentConfig{}.budget.tx_power).epsilon(1e-15));
}
