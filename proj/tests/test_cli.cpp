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

#include "femtorelay/sweep_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

struct Outcome
{
    int code = -1;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    Outcome o;
    o.code = femtorelay::cli::run(args, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t data_rows(const std::string& csv)
{
    std::size_t n = 0;
    std::istringstream in(csv);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#')
            ++n;
    return n == 0 ? 0 : n - 1;
}

std::filesystem::path scratch(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("femtorelay_test_" + name);
}

}  // namespace

TEST_CASE("single with explicit SNRs prints the reference table")
{
    const Outcome o = run({"single", "--gamma-uf", "3", "--gamma-vf", "3", "--gamma-ub", "3", "--c-up", "2", "--c-down", "2"});
    REQUIRE(o.code == 0);
    CHECK(o.out.find("0.807354922") != std::string::npos);
    CHECK(o.out.find("2.16146342") != std::string::npos);
    CHECK(o.out.find("0.925999418") != std::string::npos);
    CHECK(o.out.find("DFQSI") != std::string::npos);
    CHECK(o.out.find("max_min") != std::string::npos);
}

TEST_CASE("single with zero uplink")
{
    const Outcome o = run({"single", "--gamma-uf", "3", "--gamma-vf", "3", "--gamma-ub", "3", "--c-up", "0", "--format", "csv"});
    REQUIRE(o.code == 0);
    std::istringstream in(o.out);
    int rows = 0;
    for (std::string line; std::getline(in, line);) {
        if (line.empty() || line[0] == '#' || line.rfind("scheme,", 0) == 0)
            continue;
        // scheme,order,r_u,r_v,...: r_v is 0 for every scheme and order
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');)
            cells.push_back(c);
        REQUIRE(cells.size() >= 4);
        CHECK(cells[3] == "0");
        ++rows;
    }
    CHECK(rows == 8);
}

TEST_CASE("single samples a realization when no SNRs are given")
{
    const Outcome a = run({"single", "--c-up", "2", "--seed", "5"});
    const Outcome b = run({"single", "--c-up", "2", "--seed", "5"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run({"single", "--c-up", "2", "--seed", "6"}).out != a.out);
}

TEST_CASE("usage errors")
{
    const Outcome missing = run({"single", "--gamma-uf", "3", "--gamma-vf", "3", "--gamma-ub", "3"});
    CHECK(missing.code == 1);
    CHECK(missing.err.find("--c-up") != std::string::npos);

    CHECK(run({}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"single", "--c-up", "1", "--unknown-flag"}).code == 1);
    CHECK(run({"single", "--c-up", "1", "--gamma-uf", "3"}).code == 1);
    CHECK(run({"single", "--c-up", "-1"}).code == 1);
    CHECK(run({"verify", "--samples", "0"}).code == 1);
    CHECK(run({"sweep-backhaul", "--trials", "0"}).code == 1);
    CHECK(run({"sweep-backhaul", "--schemes", "DF,XYZ"}).code == 1);
    CHECK(run({"sweep-backhaul", "--values", "1,1"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"--version"}).code == 0);
}

TEST_CASE("verify is deterministic and passes")
{
    const Outcome a = run({"verify", "--samples", "500", "--seed", "3"});
    const Outcome b = run({"verify", "--samples", "500", "--seed", "3"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("wzq_identity: max residual") != std::string::npos);
    CHECK(a.out.find("FAIL") == std::string::npos);
}

TEST_CASE("sweep-backhaul writes a reproducible CSV")
{
    const auto p1 = scratch("bh1.csv");
    const auto p2 = scratch("bh2.csv");
    REQUIRE(run({"sweep-backhaul", "--trials", "200", "--workers", "1", "-o", p1.string()}).code == 0);
    REQUIRE(run({"sweep-backhaul", "--trials", "200", "--workers", "3", "-o", p2.string()}).code == 0);
    const std::string a = slurp(p1);
    CHECK(a == slurp(p2));
    CHECK(data_rows(a) == 5 * 4);
    CHECK(a.find(std::string(femtorelay::kCsvHeader)) != std::string::npos);
    CHECK(a.find("# master_seed=") != std::string::npos);
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

TEST_CASE("sweep with one trial has zero standard errors")
{
    const Outcome o = run({"sweep-position", "--trials", "1", "--values", "50,100"});
    REQUIRE(o.code == 0);
    std::istringstream in(o.out);
    const auto rows = femtorelay::read_sweep_csv(in);
    REQUIRE(rows.size() == 8);
    for (const auto& r : rows) {
        CHECK(r.max_sum.std_error == 0.0);
        CHECK(r.max_min.std_error == 0.0);
        CHECK(r.trials == 1);
    }
}

TEST_CASE("sweep range flags")
{
    const Outcome o = run({"sweep-backhaul", "--trials", "5", "--min", "1", "--max", "3", "--step", "1", "--schemes", "DF"});
    REQUIRE(o.code == 0);
    CHECK(data_rows(o.out) == 3);
    CHECK(run({"sweep-backhaul", "--min", "1", "--max", "3"}).code == 1);
}

TEST_CASE("unwritable output path")
{
    const Outcome o = run({"sweep-backhaul", "--trials", "5", "-o", "/nonexistent-dir/out.csv"});
    CHECK(o.code == 1);
    CHECK(!o.err.empty());
}
