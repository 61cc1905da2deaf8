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

#include "risaoi/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "risaoi/config.hpp"
#include "risaoi/harness.hpp"

namespace risaoi {

const std::vector<FigurePreset>& figure_presets()
{
    static const std::vector<FigurePreset> presets = {
        {"fig5", "a_max", {3, 5, 7, 9, 11}, PlotMetric::sum_rate, "Sum rate vs maximum tolerable AoI", "A_max"},
        {"fig6", "a_max", {3, 5, 7, 9, 11}, PlotMetric::system_aoi, "System average AoI vs A_max", "A_max"},
        {"fig7", "a_max", {4, 9, 14}, PlotMetric::system_aoi, "Per-UE average AoI vs A_max", "A_max"},
        {"fig8", "high_requirement_count", {0, 1, 2, 3, 4, 5, 6}, PlotMetric::sum_rate,
         "Sum rate vs number of high-requirement UEs", "UEs with A_max = 4"},
        {"fig9", "k_ues", {4, 6, 8, 10, 12, 14}, PlotMetric::sum_rate, "Sum rate vs number of UEs", "K"},
        {"fig10", "bits", {1, 2, 3, 4, 5, 6}, PlotMetric::sum_rate, "Sum rate vs phase quantization bits", "b"},
        {"fig11", "ris_elements", {36, 64, 100, 144, 196, 256}, PlotMetric::sum_rate,
         "Sum rate vs number of RIS elements", "M"},
        {"fig12", "n_tx", {16, 32, 64, 128, 256, 512}, PlotMetric::sum_rate, "Sum rate vs BS antennas", "N_t"},
        {"fig13", "t_slots", {50, 100, 150, 200, 250, 300}, PlotMetric::sum_rate, "Sum rate vs number of slots",
         "T"},
    };
    return presets;
}

std::optional<FigurePreset> find_figure_preset(const std::string& name)
{
    for (const auto& p : figure_presets())
        if (p.name == name)
            return p;
    return std::nullopt;
}

namespace {

struct Invocation {
    std::string config_path;
    std::vector<std::string> overrides;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string figure;
    std::string axis;
    std::vector<double> values;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ExperimentConfig resolve_config(const Invocation& inv)
{
    ExperimentConfig cfg = inv.config_path.empty() ? ExperimentConfig{} : load_config(inv.config_path);
    for (const auto& kv : inv.overrides) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--set expects key=value, got '" + kv + "'");
        set_config_value(cfg, kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (inv.seed)
        cfg.seed = *inv.seed;
    cfg.validate();
    return cfg;
}

std::filesystem::path prepare_out_dir(const std::string& dir)
{
    std::filesystem::path p(dir);
    std::filesystem::create_directories(p);
    return p;
}

template <typename Writer> void write_file(const std::filesystem::path& path, Writer&& writer, std::ostream& log)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot write " + path.string());
    writer(f);
    log << "wrote " << path.string() << '\n';
}

void write_sweep_outputs(const std::filesystem::path& dir, const std::string& stem, const std::vector<SweepRow>& rows,
                         PlotMetric metric, const std::string& title, const std::string& x_label, std::ostream& log)
{
    write_file(dir / (stem + ".csv"), [&](std::ostream& o) { write_sweep_csv(o, rows); }, log);
    write_file(dir / (stem + "_ue_aoi.csv"), [&](std::ostream& o) { write_ue_aoi_csv(o, rows); }, log);
    write_file(dir / (stem + ".svg"), [&](std::ostream& o) { write_sweep_svg(o, rows, metric, title, x_label); },
               log);
}

int cmd_run(const Invocation& inv, std::ostream& out)
{
    const ExperimentConfig cfg = resolve_config(inv);
    const auto dir = prepare_out_dir(inv.out_dir);
    const auto detailed = run_schemes_detailed(cfg, inv.threads);
    std::vector<SweepRow> rows;
    for (std::size_t s = 0; s < 4; ++s)
        rows.push_back({0.0, kAllSchemes[s], monte_carlo_mean(detailed[s])});
    write_file(dir / "run.csv", [&](std::ostream& o) { write_sweep_csv(o, rows); }, out);
    write_file(dir / "run_detail.csv", [&](std::ostream& o) { write_detail_csv(o, detailed); }, out);
    write_file(dir / "run_ue_aoi.csv", [&](std::ostream& o) { write_ue_aoi_csv(o, rows); }, out);
    for (const auto& r : rows)
        out << to_string(r.scheme) << ": rate/slot " << format_number(r.metrics.rate_per_slot.mean)
            << " bit/s/Hz, system AoI " << format_number(r.metrics.system_aoi.mean) << '\n';
    return kExitOk;
}

int cmd_sweep(const Invocation& inv, std::ostream& out)
{
    ExperimentConfig cfg = resolve_config(inv);
    SweepSpec spec = cfg.sweep.value_or(SweepSpec{});
    if (!inv.axis.empty())
        spec.axis = inv.axis;
    if (!inv.values.empty())
        spec.values = inv.values;
    if (spec.axis.empty() || spec.values.empty())
        throw ConfigError("sweep needs an axis and values (sweep_axis/sweep_values or --axis/--values)");
    if (!is_sweep_axis(spec.axis))
        throw ConfigError("unknown sweep axis '" + spec.axis + "'");
    const auto dir = prepare_out_dir(inv.out_dir);
    const auto rows = sweep(cfg, spec.axis, spec.values, inv.threads);
    write_sweep_outputs(dir, "sweep_" + spec.axis, rows, PlotMetric::sum_rate, "Sweep over " + spec.axis, spec.axis,
                        out);
    return kExitOk;
}

int cmd_figure(const Invocation& inv, std::ostream& out)
{
    const auto preset = find_figure_preset(inv.figure);
    if (!preset)
        throw UsageError("unknown figure '" + inv.figure + "' (expected fig5 .. fig13)");
    const ExperimentConfig cfg = resolve_config(inv);
    const auto dir = prepare_out_dir(inv.out_dir);
    const auto rows = sweep(cfg, preset->axis, preset->values, inv.threads);
    write_sweep_outputs(dir, preset->name, rows, preset->metric, preset->title, preset->x_label, out);
    return kExitOk;
}

} // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"RIS-assisted mmWave sum-rate optimization under AoI constraints"};
    app.require_subcommand(1);

    Invocation inv;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-c,--config", inv.config_path, "key = value config file")->check(CLI::ExistingFile);
        sub->add_option("--set", inv.overrides, "override a config key (key=value), repeatable");
        sub->add_option("-o,--out", inv.out_dir, "output directory");
        sub->add_option("--seed", inv.seed, "root RNG seed");
        sub->add_option("-j,--threads", inv.threads, "worker threads")->check(CLI::PositiveNumber);
    };

    auto* run = app.add_subcommand("run", "run every scheme on one configuration");
    add_common(run);
    auto* sw = app.add_subcommand("sweep", "sweep one parameter axis");
    add_common(sw);
    sw->add_option("--axis", inv.axis, "sweep axis");
    sw->add_option("--values", inv.values, "sweep values")->delimiter(',');
    auto* fig = app.add_subcommand("figure", "run a named figure preset");
    add_common(fig);
    fig->add_option("name", inv.figure, "fig5 .. fig13")->required();
    auto* self = app.add_subcommand("selftest", "small-instance oracle suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsageError;
    }

    try {
        if (*run)
            return cmd_run(inv, out);
        if (*sw)
            return cmd_sweep(inv, out);
        if (*fig)
            return cmd_figure(inv, out);
        if (*self)
            return run_selftest(out) ? kExitOk : kExitRuntimeError;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const std::exception& e) {
        err << "runtime error: " << e.what() << '\n';
        return kExitRuntimeError;
    }
    return kExitUsageError;
}

} // namespace risaoi
