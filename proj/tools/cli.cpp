// SPDX-License-Identifier: Apache-2.0
//
// femtorelay: link-level simulator for femtocell uplinks with limited backhaul
// Copyright (C) 2026 femtorelay developers
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

#include "cli.hpp"

#include "femtorelay/montecarlo.hpp"
#include "femtorelay/rng.hpp"
#include "femtorelay/sweep_io.hpp"
#include "femtorelay/verification.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace femtorelay::cli {

namespace {

enum class Format
{
    Csv,
    Table,
};

const std::map<std::string, Format> kFormats = {{"csv", Format::Csv}, {"table", Format::Table}};

/// Flags shared by every command that builds a scenario.
struct ScenarioFlags
{
    double rx_snr_db = 10.0;
    double alpha = 3.0;
    double shadow_sigma_db = 8.0;
    double d_min = 1.0;
    double r_m = 200.0;
    double r_f = 20.0;
    double s_o = 150.0;
    std::uint64_t seed = 1;

    void add_to(CLI::App& app)
    {
        app.add_option("--snr-db", rx_snr_db, "Power-controlled received SNR in dB")->capture_default_str();
        app.add_option("--alpha", alpha, "Path-loss exponent")->capture_default_str();
        app.add_option("--shadow-sigma-db", shadow_sigma_db, "Log-normal shadowing deviation in dB, 0 disables")
            ->capture_default_str();
        app.add_option("--d-min", d_min, "Minimum link distance in meters")->capture_default_str();
        app.add_option("--r-m", r_m, "Macrocell radius in meters")->capture_default_str();
        app.add_option("--r-f", r_f, "Femtocell radius in meters")->capture_default_str();
        app.add_option("--s-o", s_o, "FBS distance from the MBS in meters")->capture_default_str();
        app.add_option("--seed", seed, "Master seed")->capture_default_str();
    }

    NetworkGeometry geometry() const { return {s_o, r_m, r_f}; }
    PropagationParams propagation() const { return {alpha, shadow_sigma_db, d_min, rx_snr_db}; }
};

struct SweepFlags
{
    ScenarioFlags scenario;
    std::size_t trials = 10000;
    unsigned workers = 1;
    std::vector<std::string> schemes;
    std::vector<double> values;
    std::optional<double> min;
    std::optional<double> max;
    std::optional<double> step;
    std::string output;
    Format format = Format::Csv;

    void add_to(CLI::App& app)
    {
        scenario.add_to(app);
        app.add_option("--trials", trials, "Monte Carlo trials per sweep value")->capture_default_str();
        app.add_option("--workers", workers, "Worker threads, 0 = hardware concurrency")->capture_default_str();
        app.add_option("--schemes", schemes, "Comma-separated subset of DF,QF_EQ,QF_WZQ,DFQSI")->delimiter(',');
        auto* vals = app.add_option("--values", values, "Comma-separated sweep values")->delimiter(',');
        auto* lo = app.add_option("--min", min, "Sweep start (with --max, --step)");
        auto* hi = app.add_option("--max", max, "Sweep end, inclusive");
        auto* st = app.add_option("--step", step, "Sweep increment");
        vals->excludes(lo)->excludes(hi)->excludes(st);
        lo->needs(hi)->needs(st);
        hi->needs(lo);
        st->needs(lo);
        app.add_option("-o,--output", output, "Output file (stdout if omitted)");
        app.add_option("--format", format, "csv or table")
            ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
            ->option_text("csv|table");
    }

    std::vector<double> sweep_values(std::vector<double> defaults) const
    {
        if (!values.empty())
            return values;
        if (!min)
            return defaults;
        if (!(*step > 0.0) || *max < *min)
            throw std::invalid_argument("--step must be > 0 and --max >= --min");
        std::vector<double> out;
        for (std::size_t k = 0;; ++k) {
            const double v = *min + static_cast<double>(k) * *step;
            if (v > *max + 1e-9 * *step)
                break;
            out.push_back(v);
        }
        return out;
    }

    ScenarioConfig config() const
    {
        ScenarioConfig c;
        c.geometry = scenario.geometry();
        c.propagation = scenario.propagation();
        c.trials = trials;
        c.workers = workers;
        c.master_seed = scenario.seed;
        if (!schemes.empty()) {
            c.schemes.clear();
            for (const auto& name : schemes) {
                const auto s = parse_scheme(name);
                if (!s)
                    throw std::invalid_argument("unknown scheme '" + name + "'");
                c.schemes.push_back(*s);
            }
        }
        return c;
    }
};

std::string sig(double v)
{
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
}

// Writes to the file named by path, or to `fallback` when path is empty.
template <typename Writer>
bool emit(const std::string& path, std::ostream& fallback, std::ostream& err, Writer&& write)
{
    if (path.empty()) {
        write(fallback);
        return true;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << path << "'\n";
        return false;
    }
    write(file);
    file.flush();
    if (!file) {
        err << "error: failed writing '" << path << "'\n";
        return false;
    }
    return true;
}

void print_single(std::ostream& out, const TrialResult& trial, const BackhaulCapacities& caps, Format format)
{
    const SnrTriplet& snr = trial.snr;
    if (format == Format::Csv) {
        out << "# gamma_uf=" << format_double(snr.gamma_uf) << " gamma_vf=" << format_double(snr.gamma_vf)
            << " gamma_ub=" << format_double(snr.gamma_ub) << " c_up=" << format_double(caps.c_up)
            << " c_down=" << format_double(caps.c_down) << '\n';
        out << "scheme,order,r_u,r_v,beta,gamma_qu,max_sum,max_min\n";
        for (const SchemeTrial& t : trial.schemes) {
            const QuantizationState q = quantization_state(t.scheme, snr, caps);
            for (const RatePoint& p : {t.uv, t.vu}) {
                out << to_string(t.scheme) << ',' << to_string(p.order) << ',' << format_double(p.r_u) << ','
                    << format_double(p.r_v) << ',' << format_double(q.beta) << ',' << format_double(q.gamma_qu) << ','
                    << format_double(t.max_sum.value) << ',' << format_double(t.max_min.value) << '\n';
            }
        }
        return;
    }

    out << "gamma_uf = " << sig(snr.gamma_uf) << "  gamma_vf = " << sig(snr.gamma_vf) << "  gamma_ub = " << sig(snr.gamma_ub)
        << "  c_up = " << sig(caps.c_up) << "  c_down = " << sig(caps.c_down) << "\n\n";
    out << std::left << std::setw(8) << "scheme" << std::setw(7) << "order" << std::setw(17) << "r_u" << std::setw(17)
        << "r_v" << '\n';
    for (const SchemeTrial& t : trial.schemes)
        for (const RatePoint& p : {t.uv, t.vu})
            out << std::setw(8) << to_string(t.scheme) << std::setw(7) << to_string(p.order) << std::setw(17) << sig(p.r_u)
                << std::setw(17) << sig(p.r_v) << '\n';
    out << '\n'
        << std::setw(8) << "scheme" << std::setw(17) << "beta" << std::setw(17) << "gamma_qu" << std::setw(17) << "max_sum"
        << std::setw(17) << "max_min" << '\n';
    for (const SchemeTrial& t : trial.schemes) {
        const QuantizationState q = quantization_state(t.scheme, snr, caps);
        out << std::setw(8) << to_string(t.scheme) << std::setw(17) << sig(q.beta) << std::setw(17) << sig(q.gamma_qu)
            << std::setw(17) << sig(t.max_sum.value) << std::setw(17) << sig(t.max_min.value) << '\n';
    }
    out << std::right;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Uplink rate simulator for a macrocell/femtocell pair with limited backhaul", "femtorelay"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    // single
    auto* single = app.add_subcommand("single", "Rates and metrics for one SNR triplet or one random placement");
    ScenarioFlags single_scenario;
    single_scenario.add_to(*single);
    std::optional<double> gamma_uf, gamma_vf, gamma_ub;
    double single_c_up = 0.0;
    double single_c_down = 0.0;
    Format single_format = Format::Table;
    auto* guf = single->add_option("--gamma-uf", gamma_uf, "Linear SNR of U at the FBS");
    auto* gvf = single->add_option("--gamma-vf", gamma_vf, "Linear SNR of V at the FBS");
    auto* gub = single->add_option("--gamma-ub", gamma_ub, "Linear SNR of U at the MBS");
    guf->needs(gvf)->needs(gub);
    gvf->needs(guf)->needs(gub);
    gub->needs(guf)->needs(gvf);
    single->add_option("--c-up", single_c_up, "Backhaul uplink capacity, b/s/Hz")->required();
    single->add_option("--c-down", single_c_down, "Backhaul downlink capacity, b/s/Hz")->capture_default_str();
    single->add_option("--format", single_format, "csv or table")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case))
        ->option_text("csv|table");

    // sweep-backhaul
    auto* sweep_backhaul = app.add_subcommand("sweep-backhaul", "Sweep the backhaul uplink capacity");
    SweepFlags backhaul_flags;
    backhaul_flags.add_to(*sweep_backhaul);
    double backhaul_ratio = 3.0;
    std::optional<double> backhaul_fixed_down;
    auto* ratio_opt = sweep_backhaul->add_option("--c-down-ratio", backhaul_ratio, "c_down = ratio * c_up")
                          ->capture_default_str();
    sweep_backhaul->add_option("--c-down", backhaul_fixed_down, "Fixed c_down instead of the ratio")->excludes(ratio_opt);

    // sweep-position
    auto* sweep_position = app.add_subcommand("sweep-position", "Sweep the FBS distance from the MBS");
    SweepFlags position_flags;
    position_flags.add_to(*sweep_position);
    double position_c_up = 4.0;
    double position_c_down = 1.0;
    sweep_position->add_option("--c-up", position_c_up, "Backhaul uplink capacity, b/s/Hz")->capture_default_str();
    sweep_position->add_option("--c-down", position_c_down, "Backhaul downlink capacity, b/s/Hz")->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "Run the randomized property battery");
    std::size_t verify_samples = 10000;
    std::uint64_t verify_seed = 1;
    verify->add_option("--samples", verify_samples, "Samples per property")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", verify_seed, "Seed")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? e.what() : app.help()) << '\n';
            return kSuccess;
        }
        err << "error: " << e.what() << '\n';
        CLI::App* active = &app;
        for (CLI::App* sub : {single, sweep_backhaul, sweep_position, verify})
            if (sub->parsed())
                active = sub;
        err << active->help();
        return kUsageError;
    }

    try {
        if (single->parsed()) {
            const BackhaulCapacities caps{single_c_up, single_c_down};
            caps.validate();
            TrialResult trial;
            std::vector<Scheme> schemes(kAllSchemes.begin(), kAllSchemes.end());
            if (gamma_uf) {
                const SnrTriplet snr{*gamma_uf, *gamma_vf, *gamma_ub};
                snr.validate();
                trial = evaluate_schemes(snr, caps, schemes);
            } else {
                PointConfig point{single_scenario.geometry(), single_scenario.propagation(), caps, schemes};
                point.geometry.validate();
                point.propagation.validate();
                trial = run_trial(split_seed(single_scenario.seed, 0, 0), point);
            }
            print_single(out, trial, caps, single_format);
            return kSuccess;
        }

        if (sweep_backhaul->parsed() || sweep_position->parsed()) {
            const bool by_backhaul = sweep_backhaul->parsed();
            const SweepFlags& flags = by_backhaul ? backhaul_flags : position_flags;
            ScenarioConfig config = flags.config();
            if (by_backhaul) {
                config.variable = SweepVariable::CUp;
                config.values = flags.sweep_values({0.5, 1.0, 2.0, 4.0, 8.0});
                config.backhaul.c_up = config.values.front();
                if (backhaul_fixed_down) {
                    config.backhaul.c_down = *backhaul_fixed_down;
                } else {
                    config.backhaul.down_ratio = backhaul_ratio;
                    config.backhaul.c_down = backhaul_ratio * config.backhaul.c_up;
                }
            } else {
                config.variable = SweepVariable::SO;
                config.values = flags.sweep_values({20.0, 40.0, 60.0, 80.0, 100.0, 120.0, 140.0, 160.0, 180.0});
                config.geometry.s_o = config.values.front();
                config.backhaul.c_up = position_c_up;
                config.backhaul.c_down = position_c_down;
            }
            config.validate();
            const SweepSummary summary = run_sweep(config);
            const bool ok = emit(flags.output, out, err, [&](std::ostream& os) {
                if (flags.format == Format::Csv)
                    write_sweep_csv(os, summary, config);
                else
                    write_sweep_table(os, summary, config);
            });
            return ok ? kSuccess : kUsageError;
        }

        if (verify->parsed()) {
            const auto reports = run_verification(verify_samples, verify_seed);
            write_verification_report(out, reports);
            const bool all = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
            return all ? kSuccess : kVerificationFailed;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace femtorelay::cli
