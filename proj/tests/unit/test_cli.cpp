// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The hybridmimo Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hybridmimo/analysis.hpp"
#include "hybridmimo/cli/cli.hpp"
#include "hybridmimo/cli/config.hpp"
#include "hybridmimo/cli/format.hpp"
#include "hybridmimo/errors.hpp"
#include "hybridmimo/rng.hpp"

namespace hm = hybridmimo;
namespace cli = hybridmimo::cli;
namespace an = hybridmimo::analysis;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    Run r;
    r.code = cli::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

struct CsvRow {
    std::string scheme;
    std::string b1;
    std::string b2;
    double snr_db = 0.0;
    int user = 0;
    double rate = 0.0;
    double ci = 0.0;
    std::string source;
};

std::vector<CsvRow> parse_csv(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "scheme,b1,b2,snr_db,user,rate_bps_hz,ci_halfwidth,source");
    std::vector<CsvRow> rows;
    while (std::getline(in, line)) {
        const auto f = cli::split(line, ',');
        EXPECT_EQ(f.size(), 8u) << line;
        if (f.size() != 8) {
            continue;
        }
        rows.push_back({f[0], f[1], f[2], std::stod(f[3]), std::stoi(f[4]), std::stod(f[5]), std::stod(f[6]), f[7]});
    }
    return rows;
}

fs::path temp_path(const std::string& name)
{
    return fs::temp_directory_path() / ("hybridmimo_cli_test_" + name);
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

TEST(Format, ShortestRoundTrip)
{
    EXPECT_EQ(cli::format_double(0.1), "0.1");
    EXPECT_EQ(cli::format_double(-0.0), "0");
    EXPECT_EQ(cli::format_double(std::numeric_limits<double>::infinity()), "inf");
    EXPECT_EQ(cli::format_double(-std::numeric_limits<double>::infinity()), "-inf");
    EXPECT_EQ(cli::format_double(std::nan("")), "nan");
    hm::RngStream s(1, 0);
    for (int i = 0; i < 10000; ++i) {
        const double x = std::ldexp(s.uniform(-1.0, 1.0), static_cast<int>(s.next_u64() % 200) - 100);
        ASSERT_EQ(std::stod(cli::format_double(x)), x);
    }
}

TEST(Grid, RangeListAndSingle)
{
    const auto g = cli::parse_db_grid("-10:30:5");
    ASSERT_EQ(g.size(), 9u);
    EXPECT_EQ(g.front(), -10.0);
    EXPECT_EQ(g.back(), 30.0);
    EXPECT_EQ(cli::parse_db_grid("0:1:0.25").size(), 5u);
    EXPECT_EQ(cli::parse_db_grid("0:1:0.3").size(), 4u);
    EXPECT_EQ(cli::parse_db_grid("1, 2,3"), (std::vector<double>{1, 2, 3}));
    EXPECT_EQ(cli::parse_db_grid("7.5"), std::vector<double>{7.5});
}

TEST(Grid, RejectsMalformed)
{
    EXPECT_THROW(cli::parse_db_grid("0:10:0"), hm::ConfigError);
    EXPECT_THROW(cli::parse_db_grid("10:0:1"), hm::ConfigError);
    EXPECT_THROW(cli::parse_db_grid("a:b:c"), hm::ConfigError);
    EXPECT_THROW(cli::parse_db_grid(""), hm::ConfigError);
    EXPECT_THROW(cli::parse_real("1.5x", "value"), hm::ConfigError);
    EXPECT_THROW(cli::parse_integer("3.0", "value"), hm::ConfigError);
}

TEST(ConfigFile, ParsesKeyValues)
{
    std::istringstream in("# comment\nm = 60\n--k=6   # trailing\n\nsnr-db = -10:30:5\n");
    const auto kv = cli::parse_key_values(in);
    EXPECT_EQ(kv.at("m"), "60");
    EXPECT_EQ(kv.at("k"), "6");
    EXPECT_EQ(kv.at("snr-db"), "-10:30:5");
    EXPECT_EQ(kv.size(), 3u);
}

TEST(ConfigFile, RejectsDuplicatesAndGarbage)
{
    std::istringstream dup("m = 1\nm = 2\n");
    EXPECT_THROW(cli::parse_key_values(dup), hm::ConfigError);
    std::istringstream bad("just words\n");
    EXPECT_THROW(cli::parse_key_values(bad), hm::ConfigError);
    EXPECT_THROW(cli::load_config_file("/nonexistent/hybridmimo.cfg"), hm::ConfigError);
}

TEST(ConfigFile, FlagsOverrideFile)
{
    const auto cfg = temp_path("override.cfg");
    {
        std::ofstream f(cfg);
        f << "m = 60\nk = 6\nb1 = 2\nb2 = 10\nsnr-db = 0,10\n";
    }
    const auto a = run({"analyze", "--config", cfg.string(), "--formula", "analog"});
    ASSERT_EQ(a.code, 0) << a.err;
    const auto rows = parse_csv(a.out);
    ASSERT_EQ(rows.size(), 12u);
    const auto b = run({"analyze", "--config", cfg.string(), "--formula", "analog", "--m", "120"});
    ASSERT_EQ(b.code, 0) << b.err;
    const auto rows_b = parse_csv(b.out);
    const an::SystemParams p{120, 6, 2.0, 10.0, 1.0, 1.0, 5.0};
    EXPECT_NEAR(rows_b[0].rate, an::rate_analog(p), 1e-12);
    EXPECT_NE(rows[0].rate, rows_b[0].rate);
    fs::remove(cfg);
}

TEST(ConfigFile, UnknownKeyIsAnError)
{
    const auto cfg = temp_path("unknown.cfg");
    {
        std::ofstream f(cfg);
        f << "antennas = 60\n";
    }
    EXPECT_EQ(run({"analyze", "--config", cfg.string()}).code, cli::kExitConfigError);
    fs::remove(cfg);
}

TEST(Analyze, UnquantizedAnalogUsesPerfectForm)
{
    const auto r = run({"analyze", "--b1", "inf", "--formula", "analog", "--snr-db", "10"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 6u);
    const an::SystemParams p{120, 6, std::numeric_limits<double>::infinity(), 10.0, 10.0, 1.0, 5.0};
    EXPECT_NEAR(rows[0].rate, an::rate_analog_perfect(p), 1e-12);
}

TEST(Analyze, HighResolutionMrtMatchesPerfectForm)
{
    const auto a = run({"analyze", "--b1", "30", "--b2", "400", "--formula", "mrt-approx"});
    const auto b = run({"analyze", "--b1", "30", "--b2", "400", "--formula", "mrt-perfect"});
    ASSERT_EQ(a.code, 0);
    ASSERT_EQ(b.code, 0);
    const auto ra = parse_csv(a.out);
    const auto rb = parse_csv(b.out);
    ASSERT_EQ(ra.size(), 54u);
    ASSERT_EQ(ra.size(), rb.size());
    for (std::size_t i = 0; i < ra.size(); ++i) {
        EXPECT_LE(std::abs(ra[i].rate - rb[i].rate), 1e-9 * rb[i].rate);
    }
}

TEST(Analyze, UnknownFormulaRejected)
{
    EXPECT_EQ(run({"analyze", "--formula", "bogus"}).code, cli::kExitConfigError);
}

TEST(Regime, ReportsThresholds)
{
    const auto r = run({"regime", "--m", "120", "--k", "6", "--b2", "10", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_NEAR(doc["b1_threshold"].get<double>(), 1.0558, 1e-3);
    ASSERT_EQ(doc["users"].size(), 6u);
    EXPECT_EQ(doc["users"][0]["mrt_vs_analog"]["regime"], "crossover");
}

TEST(Regime, CoarseFeedbackMeansAnalogAlways)
{
    const auto r = run({"regime", "--m", "60", "--k", "6", "--b1", "2", "--b2", "3", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    const auto& zf = doc["users"][0]["zf_vs_analog"];
    EXPECT_NEAR(zf["b2_threshold"].get<double>(), 4.79, 0.01);
    EXPECT_EQ(zf["regime"], "analog-always");
    EXPECT_TRUE(zf["gamma1_db"].is_null());
}

TEST(Regime, TextOutputMentionsThreshold)
{
    const auto r = run({"regime"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("B1 threshold:"), std::string::npos);
}

TEST(Simulate, RequiresSeed)
{
    const auto r = run({"simulate", "--trials", "100"});
    EXPECT_EQ(r.code, cli::kExitConfigError);
    EXPECT_NE(r.err.find("seed"), std::string::npos);
}

TEST(Simulate, OversizedCodebookIsResourceError)
{
    EXPECT_EQ(run({"simulate", "--seed", "1", "--b2", "21", "--trials", "100"}).code, cli::kExitResourceLimit);
}

TEST(Simulate, InvalidArrayIsConfigError)
{
    EXPECT_EQ(run({"simulate", "--seed", "1", "--m", "10", "--k", "3"}).code, cli::kExitConfigError);
    EXPECT_EQ(run({"simulate", "--seed", "1", "--preset", "fig9"}).code, cli::kExitConfigError);
    EXPECT_EQ(run({"simulate", "--seed", "1", "--bogus", "1"}).code, cli::kExitConfigError);
}

TEST(Simulate, PresetCsvShape)
{
    const auto r = run({"simulate", "--preset", "fig1a", "--trials", "100", "--seed", "3", "--workers", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_csv(r.out);
    EXPECT_EQ(rows.size(), 2u * 2u * 9u * 6u);
    std::map<std::string, int> per_arm;
    for (const auto& row : rows) {
        EXPECT_TRUE(row.scheme == "analog" || row.scheme == "mrt-hybrid") << row.scheme;
        EXPECT_GE(row.user, 1);
        EXPECT_LE(row.user, 6);
        EXPECT_EQ(row.source, "mc");
        ++per_arm[row.b1];
    }
    EXPECT_EQ(per_arm["1"], 108);
    EXPECT_EQ(per_arm["5"], 108);
}

TEST(Simulate, AnalyticRowsFollowMonteCarloRows)
{
    const auto r = run({"simulate", "--m", "24", "--k", "4", "--snr-db", "0,10", "--trials", "100", "--seed", "4",
                        "--with-analytic", "--workers", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = parse_csv(r.out);
    ASSERT_EQ(rows.size(), 3u * 2u * 2u * 4u);
    int closed = 0;
    for (const auto& row : rows) {
        closed += row.source == "closed_form";
    }
    EXPECT_EQ(closed, 24);
}

TEST(Simulate, ByteIdenticalAcrossRunsAndWorkers)
{
    const std::vector<std::string> base{"simulate", "--preset", "fig1b", "--trials", "130", "--seed", "11",
                                        "--with-analytic"};
    std::vector<std::string> files;
    for (const char* w : {"1", "8", "8"}) {
        const auto p = temp_path(std::string("det_") + w + std::to_string(files.size()) + ".csv");
        auto args = base;
        args.insert(args.end(), {"--workers", w, "--out", p.string()});
        ASSERT_EQ(run(args).code, 0);
        files.push_back(slurp(p));
        fs::remove(p);
    }
    EXPECT_FALSE(files[0].empty());
    EXPECT_EQ(files[0], files[1]);
    EXPECT_EQ(files[1], files[2]);
}

TEST(Simulate, CoarseFeedbackZfNeverBeatsAnalog)
{
    const auto r = run({"simulate", "--preset", "fig1b", "--b2", "3", "--trials", "1000", "--seed", "6",
                        "--workers", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::map<double, std::pair<double, double>> analog;
    std::map<double, std::pair<double, double>> zf;
    for (const auto& row : parse_csv(r.out)) {
        auto& slot = (row.scheme == "analog" ? analog : zf)[row.snr_db];
        slot.first += row.rate / 6.0;
        slot.second += row.ci / 6.0;
    }
    ASSERT_EQ(analog.size(), 9u);
    for (const auto& [snr, a] : analog) {
        EXPECT_GE(a.first + a.second + zf[snr].second, zf[snr].first) << "snr_db=" << snr;
    }
}

TEST(Validate, RefusesSmallTrialCount)
{
    const auto r = run({"validate", "--trials", "100"});
    EXPECT_EQ(r.code, cli::kExitConfigError);
}

TEST(Validate, UnquantizedPhaseMeanTarget)
{
    const auto r = run({"validate", "--b1", "inf", "--b2", "inf", "--json"});
    ASSERT_TRUE(r.code == cli::kExitOk || r.code == cli::kExitValidationFailed) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto& row : doc["rows"]) {
        if (row["name"] == "mean of Re(lambda)") {
            found = true;
            EXPECT_NEAR(row["closed_form"].get<double>(), std::sqrt(std::numbers::pi) / 2.0, 1e-12);
            EXPECT_TRUE(row["pass"].get<bool>());
        }
    }
    EXPECT_TRUE(found);
}

TEST(Validate, DefaultParametersPass)
{
    const auto r = run({"validate"});
    EXPECT_EQ(r.code, cli::kExitOk) << r.out;
}

TEST(Help, ExitsCleanly)
{
    EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
    EXPECT_EQ(run({}).code, cli::kExitConfigError);
}

}  // namespace
