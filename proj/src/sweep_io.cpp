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

#include "femtorelay/sweep_io.hpp"

#include "femtorelay/rng.hpp"

#include <charconv>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace femtorelay {

namespace {

std::string join_values(const std::vector<double>& values)
{
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            s += ';';
        s += format_double(values[i]);
    }
    return s;
}

double parse_double(std::string_view text)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw std::runtime_error("bad number in CSV: '" + std::string(text) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        fields.push_back(line.substr(start, pos - start));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return fields;
}

}  // namespace

std::string format_double(double value)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    if (ec != std::errc())
        throw std::runtime_error("failed to format double");
    return std::string(buf, ptr);
}

std::vector<std::string> describe_config(const ScenarioConfig& config)
{
    std::vector<std::string> lines;
    std::string schemes;
    for (std::size_t i = 0; i < config.schemes.size(); ++i) {
        if (i)
            schemes += ';';
        schemes += to_string(config.schemes[i]);
    }
    const auto& g = config.geometry;
    const auto& p = config.propagation;
    const auto& b = config.backhaul;

    lines.push_back(std::string(kVersion));
    lines.push_back("master_seed=" + std::to_string(config.master_seed));
    lines.push_back("seed_mixer=" + std::string(kSeedMixer));
    lines.push_back("sweep_var=" + std::string(to_string(config.variable)) + " values=" + join_values(config.values));
    lines.push_back("trials=" + std::to_string(config.trials));
    lines.push_back("schemes=" + schemes);
    lines.push_back("geometry s_o=" + format_double(g.s_o) + " r_m=" + format_double(g.r_m) + " r_f=" + format_double(g.r_f));
    lines.push_back("propagation alpha=" + format_double(p.alpha) + " shadow_sigma_db=" + format_double(p.shadow_sigma_db) +
                    " d_min=" + format_double(p.d_min) + " rx_snr_db=" + format_double(p.rx_snr_db));
    lines.push_back("backhaul c_up=" + format_double(b.c_up) + " c_down=" + format_double(b.c_down) +
                    " c_down_ratio=" + (b.down_ratio ? format_double(*b.down_ratio) : std::string("none")));
    return lines;
}

void write_sweep_csv(std::ostream& out, const SweepSummary& summary, const ScenarioConfig& config)
{
    for (const std::string& line : describe_config(config))
        out << "# " << line << '\n';
    out << kCsvHeader << '\n';
    for (const SummaryRow& r : summary.rows) {
        out << to_string(r.variable) << ',' << format_double(r.value) << ',' << to_string(r.scheme) << ','
            << format_double(r.max_sum.mean) << ',' << format_double(r.max_sum.std_error) << ','
            << format_double(r.max_min.mean) << ',' << format_double(r.max_min.std_error) << ','
            << format_double(r.ru_maxmin.mean) << ',' << format_double(r.rv_maxmin.mean) << ','
            << format_double(r.ru_maxsum.mean) << ',' << format_double(r.rv_maxsum.mean) << ',' << r.trials << '\n';
    }
}

void write_sweep_table(std::ostream& out, const SweepSummary& summary, const ScenarioConfig& config)
{
    for (const std::string& line : describe_config(config))
        out << "# " << line << '\n';
    out << std::left << std::setw(6) << to_string(config.variable) << std::setw(8) << "scheme" << std::right;
    for (const char* h : {"max_sum", "se", "max_min", "se", "ru@maxmin", "rv@maxmin", "ru@maxsum", "rv@maxsum"})
        out << std::setw(12) << h;
    out << std::setw(8) << "trials" << '\n';
    const auto flags = out.flags();
    const auto precision = out.precision();
    for (const SummaryRow& r : summary.rows) {
        out << std::left << std::setw(6) << format_double(r.value) << std::setw(8) << to_string(r.scheme) << std::right
            << std::fixed << std::setprecision(6);
        for (double v : {r.max_sum.mean, r.max_sum.std_error, r.max_min.mean, r.max_min.std_error, r.ru_maxmin.mean,
                         r.rv_maxmin.mean, r.ru_maxsum.mean, r.rv_maxsum.mean})
            out << std::setw(12) << v;
        out << std::setw(8) << r.trials << '\n';
        out.flags(flags);
        out.precision(precision);
    }
}

std::vector<SummaryRow> read_sweep_csv(std::istream& in)
{
    std::vector<SummaryRow> rows;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#')
            continue;
        if (!header_seen) {
            if (line != kCsvHeader)
                throw std::runtime_error("unexpected CSV header");
            header_seen = true;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 12)
            throw std::runtime_error("expected 12 CSV fields");
        SummaryRow r;
        if (f[0] == "c_up")
            r.variable = SweepVariable::CUp;
        else if (f[0] == "s_o")
            r.variable = SweepVariable::SO;
        else
            throw std::runtime_error("unknown sweep variable in CSV");
        r.value = parse_double(f[1]);
        const auto scheme = parse_scheme(f[2]);
        if (!scheme)
            throw std::runtime_error("unknown scheme in CSV");
        r.scheme = *scheme;
        r.max_sum = {parse_double(f[3]), parse_double(f[4])};
        r.max_min = {parse_double(f[5]), parse_double(f[6])};
        r.ru_maxmin.mean = parse_double(f[7]);
        r.rv_maxmin.mean = parse_double(f[8]);
        r.ru_maxsum.mean = parse_double(f[9]);
        r.rv_maxsum.mean = parse_double(f[10]);
        r.trials = static_cast<std::size_t>(parse_double(f[11]));
        rows.push_back(r);
    }
    if (!header_seen)
        throw std::runtime_error("missing CSV header");
    return rows;
}

}  // namespace femtorelay
