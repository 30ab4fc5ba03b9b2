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

#include "hybridmimo/cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "hybridmimo/analysis.hpp"
#include "hybridmimo/cli/config.hpp"
#include "hybridmimo/cli/format.hpp"
#include "hybridmimo/errors.hpp"

namespace hybridmimo::cli {

namespace {

using nlohmann::json;

// Value-taking keys accepted on the command line and in config files.
constexpr std::string_view kValueKeys[] = {"m",      "k",     "b1",      "b2",   "snr-db",  "beta",
                                           "channel", "paths", "trials",  "seed", "workers", "out",
                                           "preset",  "scheme", "formula"};
constexpr std::string_view kFlagKeys[] = {"json", "with-analytic", "redraw-beta", "freeze-codebook"};

constexpr std::string_view kDefaultGrid = "-10:30:5";

std::vector<Preset> make_presets()
{
    std::vector<Preset> out;
    {
        Preset p;
        p.name = "fig1a";
        p.base.m = 120;
        p.base.k = 6;
        p.base.b2 = Bits(10);
        p.base.schemes = {Scheme::analog, Scheme::mrt_hybrid};
        p.arm = Preset::Arm::b1;
        p.arm_values = {Bits(1), Bits(5)};
        p.note = "Rayleigh, M=120, K=6, B2=10; B1 arms 1 and 5";
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig1b";
        p.base.m = 60;
        p.base.k = 6;
        p.base.b1 = Bits(2);
        p.base.schemes = {Scheme::analog, Scheme::zf_hybrid};
        p.arm = Preset::Arm::b2;
        p.arm_values = {Bits(3), Bits(10)};
        p.note = "Rayleigh, M=60, K=6, B1=2; B2 arms 3 and 10 chosen to straddle the B2 threshold (about 4.3 to 4.8)";
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig2";
        p.base.m = 40;
        p.base.k = 5;
        p.base.b1 = Bits(2);
        p.base.channel = ChannelModel::mmwave;
        p.base.mmwave.paths = 10;
        p.base.schemes = {Scheme::analog, Scheme::zf_hybrid};
        p.arm = Preset::Arm::b2;
        p.arm_values = {Bits(3), Bits(12)};
        p.note = "mmWave, M=40, K=5, B1=2, 10 paths; B2 arms 3 and 12";
        out.push_back(std::move(p));
    }
    for (auto& p : out) {
        p.base.beta = BetaSpec::uniform(0.5, 1.5);
        p.base.snr_db = parse_db_grid(kDefaultGrid);
    }
    return out;
}

// Merged settings: command-line flags over config file.
class Settings {
public:
    bool has(std::string_view key) const { return values_.count(std::string(key)) > 0; }
    const std::string& get(std::string_view key) const { return values_.at(std::string(key)); }
    void set(std::string key, std::string value) { values_[std::move(key)] = std::move(value); }

    bool flag(std::string_view key) const
    {
        if (!has(key)) {
            return false;
        }
        const std::string& v = get(key);
        if (v == "true" || v == "1" || v == "yes" || v == "on") {
            return true;
        }
        if (v == "false" || v == "0" || v == "no" || v == "off") {
            return false;
        }
        throw ConfigError(std::string(key) + ": expected true or false, got '" + v + "'");
    }

    std::size_t count(std::string_view key, long long min_value) const
    {
        const long long v = parse_integer(get(key), key);
        if (v < min_value) {
            throw ConfigError(std::string(key) + " must be at least " + std::to_string(min_value));
        }
        return static_cast<std::size_t>(v);
    }

    std::uint64_t seed() const
    {
        const std::string& s = get("seed");
        std::uint64_t v = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
            throw ConfigError("seed: '" + s + "' is not a non-negative integer");
        }
        return v;
    }

private:
    std::map<std::string, std::string> values_;
};

BetaSpec parse_beta(std::string_view text)
{
    if (text.rfind("uniform:", 0) == 0) {
        const auto parts = split(text.substr(8), ',');
        if (parts.size() != 2) {
            throw ConfigError("beta: expected uniform:lo,hi");
        }
        const double lo = parse_real(parts[0], "beta lower bound");
        const double hi = parse_real(parts[1], "beta upper bound");
        if (!(lo > 0.0 && lo <= hi && std::isfinite(hi))) {
            throw ConfigError("beta: uniform range needs 0 < lo <= hi");
        }
        return BetaSpec::uniform(lo, hi);
    }
    std::vector<double> v;
    for (const auto& item : split(text, ',')) {
        const double b = parse_real(item, "beta");
        if (!(b > 0.0) || !std::isfinite(b)) {
            throw ConfigError("beta values must be positive and finite");
        }
        v.push_back(b);
    }
    return BetaSpec::fixed(std::move(v));
}

ChannelModel parse_channel(std::string_view text)
{
    if (text == "rayleigh") {
        return ChannelModel::rayleigh;
    }
    if (text == "mmwave") {
        return ChannelModel::mmwave;
    }
    throw ConfigError("channel: expected rayleigh or mmwave, got '" + std::string(text) + "'");
}

std::size_t default_workers()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

// Scenario from defaults, optional preset and explicit settings.
std::vector<ScenarioConfig> build_scenarios(const Settings& s, const Preset** preset_out)
{
    ScenarioConfig base;
    base.snr_db = parse_db_grid(kDefaultGrid);
    base.workers = default_workers();
    const Preset* preset = nullptr;
    if (s.has("preset")) {
        preset = &find_preset(s.get("preset"));
        base = preset->base;
        base.workers = default_workers();
    }
    if (preset_out != nullptr) {
        *preset_out = preset;
    }

    if (s.has("m")) {
        base.m = s.count("m", 1);
    }
    if (s.has("k")) {
        base.k = s.count("k", 1);
    }
    if (s.has("b1")) {
        base.b1 = Bits::parse(s.get("b1"));
    }
    if (s.has("b2")) {
        base.b2 = Bits::parse(s.get("b2"));
    }
    if (s.has("snr-db")) {
        base.snr_db = parse_db_grid(s.get("snr-db"));
    }
    if (s.has("beta")) {
        base.beta = parse_beta(s.get("beta"));
    }
    if (s.has("channel")) {
        base.channel = parse_channel(s.get("channel"));
    }
    if (s.has("paths")) {
        base.mmwave.paths = s.count("paths", 1);
    }
    if (s.has("trials")) {
        base.trials = s.count("trials", 1);
    }
    if (s.has("seed")) {
        base.seed = s.seed();
    }
    if (s.has("workers")) {
        base.workers = s.count("workers", 1);
    }
    if (s.has("scheme")) {
        base.schemes.clear();
        for (const auto& name : split(s.get("scheme"), ',')) {
            const Scheme sc = parse_scheme(name);
            if (std::find(base.schemes.begin(), base.schemes.end(), sc) == base.schemes.end()) {
                base.schemes.push_back(sc);
            }
        }
    }

    base.redraw_beta = s.flag("redraw-beta");
    base.freeze_codebook = s.flag("freeze-codebook");

    std::vector<ScenarioConfig> arms;
    const bool arm_overridden =
        preset != nullptr && s.has(preset->arm == Preset::Arm::b1 ? "b1" : "b2");
    if (preset == nullptr || arm_overridden) {
        arms.push_back(base);
    } else {
        for (Bits v : preset->arm_values) {
            ScenarioConfig c = base;
            (preset->arm == Preset::Arm::b1 ? c.b1 : c.b2) = v;
            arms.push_back(c);
        }
    }
    for (const auto& c : arms) {
        c.validate();
    }
    return arms;
}

double closed_form(std::string_view formula, const analysis::SystemParams& p)
{
    if (formula == "analog") {
        return std::isinf(p.b1) ? analysis::rate_analog_perfect(p) : analysis::rate_analog(p);
    }
    if (formula == "analog-perfect") {
        return analysis::rate_analog_perfect(p);
    }
    if (formula == "mrt-approx") {
        return analysis::rate_mrt_hybrid(p);
    }
    if (formula == "mrt-perfect") {
        return analysis::rate_mrt_hybrid_perfect(p);
    }
    if (formula == "zf-lb") {
        return analysis::rate_zf_hybrid_lb(p);
    }
    if (formula == "zf-perfect") {
        return analysis::rate_zf_hybrid_perfect(p);
    }
    throw ConfigError("unknown formula '" + std::string(formula) + "'");
}

std::string_view analytic_formula(Scheme s, const ScenarioConfig& c)
{
    switch (s) {
    case Scheme::analog:
        return "analog";
    case Scheme::mrt_hybrid:
        return c.b1.is_infinite() && c.b2.is_infinite() ? "mrt-perfect" : "mrt-approx";
    case Scheme::zf_hybrid:
        return "zf-lb";
    }
    return "analog";
}

constexpr std::string_view kCsvHeader = "scheme,b1,b2,snr_db,user,rate_bps_hz,ci_halfwidth,source\n";

void csv_row(std::ostream& os, std::string_view scheme, Bits b1, Bits b2, double snr_db, std::size_t user,
             double rate, double ci, std::string_view source)
{
    os << scheme << ',' << b1.to_string() << ',' << b2.to_string() << ',' << format_double(snr_db) << ','
       << user + 1 << ',' << format_double(rate) << ',' << format_double(ci) << ',' << source << '\n';
}

double db_to_linear(double db)
{
    return std::pow(10.0, db / 10.0);
}

// Writes to --out when given, otherwise to `fallback`.
class Sink {
public:
    Sink(const Settings& s, std::ostream& fallback) : os_(&fallback)
    {
        if (s.has("out")) {
            file_.open(s.get("out"), std::ios::binary | std::ios::trunc);
            if (!file_) {
                throw ConfigError("cannot open output file '" + s.get("out") + "'");
            }
            os_ = &file_;
        }
    }
    std::ostream& stream() { return *os_; }
    bool is_file() const { return file_.is_open(); }
    void close()
    {
        if (file_.is_open()) {
            file_.close();
            if (!file_) {
                throw ConfigError("failed writing output file");
            }
        }
    }

private:
    std::ofstream file_;
    std::ostream* os_;
};

std::string join_betas(const std::vector<double>& b)
{
    std::string s;
    for (std::size_t i = 0; i < b.size(); ++i) {
        s += (i ? "," : "") + format_double(b[i]);
    }
    return s;
}

int cmd_simulate(const Settings& s, std::ostream& out, std::ostream& err)
{
    if (!s.has("seed")) {
        throw ConfigError("simulate requires --seed (there is no time-based default)");
    }
    const Preset* preset = nullptr;
    const std::vector<ScenarioConfig> arms = build_scenarios(s, &preset);
    const bool analytic = s.flag("with-analytic");

    Sink sink(s, out);
    std::ostream& summary = sink.is_file() ? out : err;
    std::ostream& csv = sink.stream();
    csv << kCsvHeader;

    if (preset != nullptr) {
        summary << "preset " << preset->name << ": " << preset->note << '\n';
    }
    for (const ScenarioConfig& c : arms) {
        const RateResult r = run_experiment(c);
        summary << "B1=" << c.b1.to_string() << " B2=" << c.b2.to_string() << " M=" << c.m << " K=" << c.k
                << " channel=" << to_string(c.channel) << " trials=" << r.trials << " beta=" << join_betas(r.beta)
                << " zf_degenerate=" << r.zf_degenerate << '\n';
        for (std::size_t si = 0; si < r.schemes.size(); ++si) {
            const std::string_view name = to_string(r.schemes[si]);
            for (std::size_t g = 0; g < r.snr_db.size(); ++g) {
                for (std::size_t u = 0; u < r.users; ++u) {
                    const MeanCI& m = r.per_user[si][g][u];
                    csv_row(csv, name, c.b1, c.b2, r.snr_db[g], u, m.mean, m.half_width, "mc");
                }
                summary << "  " << std::left << std::setw(11) << name << " snr_db=" << std::setw(6)
                        << format_double(r.snr_db[g]) << " sum_rate=" << format_double(r.sum_rate[si][g].mean)
                        << " +/- " << format_double(r.sum_rate[si][g].half_width) << '\n';
            }
            if (analytic) {
                const std::string_view formula = analytic_formula(r.schemes[si], c);
                for (std::size_t g = 0; g < r.snr_db.size(); ++g) {
                    for (std::size_t u = 0; u < r.users; ++u) {
                        const auto p = analysis::SystemParams::for_user(c.m, c.k, c.b1.as_real(), c.b2.as_real(),
                                                                        db_to_linear(r.snr_db[g]), r.beta, u);
                        csv_row(csv, name, c.b1, c.b2, r.snr_db[g], u, closed_form(formula, p), 0.0,
                                "closed_form");
                    }
                }
            }
        }
    }
    sink.close();
    return kExitOk;
}

int cmd_analyze(const Settings& s, std::ostream& out)
{
    std::vector<std::string> formulas{"analog", "mrt-approx", "zf-lb"};
    if (s.has("formula")) {
        formulas = split(s.get("formula"), ',');
        for (const auto& f : formulas) {
            if (std::find(std::begin(kFormulas), std::end(kFormulas), f) == std::end(kFormulas)) {
                throw ConfigError("unknown formula '" + f + "'");
            }
        }
    }
    const std::size_t m = s.has("m") ? s.count("m", 1) : 120;
    const std::size_t k = s.has("k") ? s.count("k", 1) : 6;
    check_array_shape(m, k);
    const Bits b1 = s.has("b1") ? Bits::parse(s.get("b1")) : Bits(2);
    const Bits b2 = s.has("b2") ? Bits::parse(s.get("b2")) : Bits(10);
    const std::vector<double> grid = parse_db_grid(s.has("snr-db") ? s.get("snr-db") : std::string(kDefaultGrid));
    const BetaSpec beta_spec = s.has("beta") ? parse_beta(s.get("beta")) : BetaSpec::fixed({1.0});
    const std::vector<double> beta = beta_spec.resolve(k, s.has("seed") ? s.seed() : 0);

    Sink sink(s, out);
    std::ostream& csv = sink.stream();
    csv << kCsvHeader;
    for (const auto& f : formulas) {
        for (double db : grid) {
            for (std::size_t u = 0; u < k; ++u) {
                const auto p =
                    analysis::SystemParams::for_user(m, k, b1.as_real(), b2.as_real(), db_to_linear(db), beta, u);
                csv_row(csv, f, b1, b2, db, u, closed_form(f, p), 0.0, "closed_form");
            }
        }
    }
    sink.close();
    return kExitOk;
}

json json_number(double x)
{
    if (std::isfinite(x)) {
        return x;
    }
    return format_double(x);
}

double to_db(double gamma)
{
    return 10.0 * std::log10(gamma);
}

int cmd_regime(const Settings& s, std::ostream& out)
{
    const std::size_t m = s.has("m") ? s.count("m", 1) : 120;
    const std::size_t k = s.has("k") ? s.count("k", 1) : 6;
    check_array_shape(m, k);
    if (k < 2) {
        throw ConfigError("regime analysis needs K >= 2");
    }
    const Bits b1 = s.has("b1") ? Bits::parse(s.get("b1")) : Bits(2);
    const Bits b2 = s.has("b2") ? Bits::parse(s.get("b2")) : Bits(10);
    const std::vector<double> grid = parse_db_grid(s.has("snr-db") ? s.get("snr-db") : std::string(kDefaultGrid));
    const BetaSpec beta_spec = s.has("beta") ? parse_beta(s.get("beta")) : BetaSpec::fixed({1.0});
    const std::vector<double> beta = beta_spec.resolve(k, s.has("seed") ? s.seed() : 0);
    const double n = static_cast<double>(m) / static_cast<double>(k);

    const double b1_thr = analysis::b1_threshold(n, k, b2.as_real());
    const double k_thr = analysis::k_threshold(n, b1.as_real(), b2.as_real(), k);

    json doc;
    doc["m"] = m;
    doc["k"] = k;
    doc["n"] = n;
    doc["b1"] = b1.to_string();
    doc["b2"] = b2.to_string();
    doc["b1_threshold"] = json_number(b1_thr);
    doc["k_threshold"] = json_number(k_thr);
    doc["users"] = json::array();

    std::ostringstream text;
    text << "M=" << m << " K=" << k << " N=" << format_double(n) << " B1=" << b1.to_string()
         << " B2=" << b2.to_string() << '\n';
    text << "B1 threshold: " << format_double(b1_thr) << '\n';
    text << "K threshold:  " << format_double(k_thr) << '\n';

    for (std::size_t u = 0; u < k; ++u) {
        auto p = analysis::SystemParams::for_user(m, k, b1.as_real(), b2.as_real(), db_to_linear(grid.front()), beta, u);
        const auto mrt = analysis::predict_winner(p, analysis::Comparison::mrt_vs_analog);
        const auto zf = analysis::predict_winner(p, analysis::Comparison::zf_vs_analog);

        json ju;
        ju["user"] = u + 1;
        ju["beta"] = beta[u];
        ju["beta_other"] = p.beta_other;
        json jm;
        jm["regime"] = std::string(to_string(mrt.kind));
        jm["gamma0_db"] = mrt.crossover_gamma ? json(to_db(*mrt.crossover_gamma)) : json(nullptr);
        if (mrt.kind == analysis::RegimeKind::hybrid_always && p.b1 > b1_thr) {
            jm["note"] = "gamma0 undefined or non-positive: the user-count condition holds";
        }
        json jz;
        jz["b2_threshold"] = json_number(zf.bit_threshold);
        jz["regime"] = std::string(to_string(zf.kind));
        jz["gamma1_db"] = zf.crossover_gamma ? json(to_db(*zf.crossover_gamma)) : json(nullptr);
        if (zf.kind == analysis::RegimeKind::analog_always && p.b2 > zf.bit_threshold) {
            jz["note"] = "gamma1 undefined at the threshold boundary";
        }

        text << "user " << u + 1 << " (beta=" << format_double(beta[u]) << ", others=" << format_double(p.beta_other)
             << ")\n";
        text << "  mrt-vs-analog: " << to_string(mrt.kind);
        if (mrt.crossover_gamma) {
            text << ", gamma0 = " << format_double(to_db(*mrt.crossover_gamma)) << " dB (hybrid wins below)";
        }
        text << '\n';
        text << "  zf-vs-analog:  B2 threshold " << format_double(zf.bit_threshold) << ", " << to_string(zf.kind);
        if (zf.crossover_gamma) {
            text << ", gamma1 = " << format_double(to_db(*zf.crossover_gamma)) << " dB (hybrid wins above)";
        }
        text << '\n';

        json winners = json::array();
        std::string mrt_line = "  winner mrt-vs-analog:";
        std::string zf_line = "  winner zf-vs-analog: ";
        for (double db : grid) {
            p.gamma = db_to_linear(db);
            const auto wm = analysis::predict_winner(p, analysis::Comparison::mrt_vs_analog).winner;
            const auto wz = analysis::predict_winner(p, analysis::Comparison::zf_vs_analog).winner;
            winners.push_back({{"snr_db", db},
                               {"mrt_vs_analog", std::string(to_string(wm))},
                               {"zf_vs_analog", std::string(to_string(wz))}});
            mrt_line += " " + format_double(db) + ":" + std::string(to_string(wm));
            zf_line += " " + format_double(db) + ":" + std::string(to_string(wz));
        }
        text << mrt_line << '\n' << zf_line << '\n';
        ju["mrt_vs_analog"] = jm;
        ju["zf_vs_analog"] = jz;
        ju["winners"] = winners;
        doc["users"].push_back(ju);
    }

    Sink sink(s, out);
    if (s.flag("json")) {
        sink.stream() << doc.dump(2) << '\n';
    } else {
        sink.stream() << text.str();
    }
    sink.close();
    return kExitOk;
}

int cmd_validate(const Settings& s, std::ostream& out)
{
    MomentConfig cfg;
    cfg.workers = default_workers();
    cfg.seed = 1;
    if (s.has("m")) {
        cfg.m = s.count("m", 1);
    }
    if (s.has("k")) {
        cfg.k = s.count("k", 1);
    }
    if (s.has("b1")) {
        cfg.b1 = Bits::parse(s.get("b1"));
    }
    if (s.has("b2")) {
        cfg.b2 = Bits::parse(s.get("b2"));
    }
    if (s.has("trials")) {
        cfg.trials = s.count("trials", 1);
    }
    if (s.has("seed")) {
        cfg.seed = s.seed();
    }
    if (s.has("workers")) {
        cfg.workers = s.count("workers", 1);
    }
    if (s.has("snr-db")) {
        const auto grid = parse_db_grid(s.get("snr-db"));
        if (grid.size() != 1) {
            throw ConfigError("validate takes a single SNR value for the rate-loss row");
        }
        cfg.gamma_db = grid.front();
    }
    const std::vector<MomentRow> rows = validate_moments(cfg);
    const bool all_pass = std::all_of(rows.begin(), rows.end(), [](const MomentRow& r) { return r.pass; });

    Sink sink(s, out);
    std::ostream& os = sink.stream();
    if (s.flag("json")) {
        json doc;
        doc["m"] = cfg.m;
        doc["k"] = cfg.k;
        doc["b1"] = cfg.b1.to_string();
        doc["b2"] = cfg.b2.to_string();
        doc["trials"] = cfg.trials;
        doc["seed"] = cfg.seed;
        doc["snr_db"] = cfg.gamma_db;
        doc["pass"] = all_pass;
        doc["rows"] = json::array();
        for (const auto& r : rows) {
            doc["rows"].push_back({{"name", r.name},
                                   {"empirical", r.empirical},
                                   {"closed_form", r.closed_form},
                                   {"std_error", r.std_error},
                                   {"check", std::string(to_string(r.check))},
                                   {"lower", r.lower},
                                   {"upper", r.upper},
                                   {"pass", r.pass}});
        }
        os << doc.dump(2) << '\n';
    } else {
        os << "M=" << cfg.m << " K=" << cfg.k << " B1=" << cfg.b1.to_string() << " B2=" << cfg.b2.to_string()
           << " trials=" << cfg.trials << " seed=" << cfg.seed << '\n';
        os << std::left << std::setw(26) << "moment" << std::setw(14) << "empirical" << std::setw(14)
           << "closed_form" << std::setw(12) << "std_error" << std::setw(13) << "check" << "result\n";
        os << std::setprecision(6);
        for (const auto& r : rows) {
            os << std::setw(26) << r.name << std::setw(14) << r.empirical << std::setw(14) << r.closed_form
               << std::setw(12) << r.std_error << std::setw(13) << to_string(r.check) << (r.pass ? "pass" : "FAIL")
               << '\n';
        }
        os << (all_pass ? "all rows pass\n" : "some rows failed\n");
    }
    sink.close();
    return all_pass ? kExitOk : kExitValidationFailed;
}

}  // namespace

const std::vector<Preset>& presets()
{
    static const std::vector<Preset> all = make_presets();
    return all;
}

const Preset& find_preset(std::string_view name)
{
    for (const auto& p : presets()) {
        if (p.name == name) {
            return p;
        }
    }
    throw ConfigError("unknown preset '" + std::string(name) + "' (expected fig1a, fig1b or fig2)");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hybrid precoding rate simulator and closed-form analysis", "hybridmimo"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::map<std::string, std::string> values;
    std::map<std::string, bool> flags;
    std::map<std::string, std::vector<std::string>> lists;
    std::string config_path;

    const std::map<std::string_view, std::string_view> help = {
        {"m", "BS antennas"},
        {"k", "users (= RF chains)"},
        {"b1", "phase-shifter bits, or inf"},
        {"b2", "feedback bits, or inf"},
        {"snr-db", "SNR grid: start:stop:step or comma list"},
        {"beta", "path losses: comma list or uniform:lo,hi"},
        {"channel", "rayleigh or mmwave"},
        {"paths", "mmWave path count"},
        {"trials", "Monte Carlo trials"},
        {"seed", "master seed"},
        {"workers", "worker threads (results do not depend on it)"},
        {"out", "output file (default: standard output)"},
        {"preset", "fig1a, fig1b or fig2"},
        {"scheme", "analog, mrt-hybrid, zf-hybrid (repeatable or comma list)"},
        {"formula", "closed-form curve(s) for analyze"},
    };

    struct Sub {
        CLI::App* app;
        std::string name;
    };
    std::vector<Sub> subs;
    for (const auto& [name, desc] : {std::pair{"simulate", "Monte Carlo rates as CSV"},
                                     std::pair{"analyze", "closed-form rate curves as CSV"},
                                     std::pair{"regime", "analog-vs-hybrid threshold report"},
                                     std::pair{"validate", "moment validation suite"}}) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("--config", config_path, "key=value settings file; flags override it");
        for (std::string_view key : kValueKeys) {
            const std::string k(key);
            if (key == "scheme" || key == "formula") {
                sub->add_option("--" + k, lists[k], std::string(help.at(key)))->delimiter(',');
            } else {
                sub->add_option("--" + k, values[k], std::string(help.at(key)));
            }
        }
        sub->add_flag("--json", flags["json"], "machine-readable output");
        sub->add_flag("--with-analytic", flags["with-analytic"], "add closed-form rows to simulate output");
        sub->add_flag("--redraw-beta", flags["redraw-beta"], "draw uniform path losses per trial instead of once");
        sub->add_flag("--freeze-codebook", flags["freeze-codebook"], "one feedback codebook per user for the whole run");
        subs.push_back({sub, name});
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfigError;
    }

    try {
        const Sub* active = nullptr;
        for (const auto& s : subs) {
            if (s.app->parsed()) {
                active = &s;
            }
        }
        Settings settings;
        if (!config_path.empty()) {
            for (const auto& [key, value] : load_config_file(config_path)) {
                const bool known = std::find(std::begin(kValueKeys), std::end(kValueKeys), key) != std::end(kValueKeys) ||
                                   std::find(std::begin(kFlagKeys), std::end(kFlagKeys), key) != std::end(kFlagKeys);
                if (!known) {
                    throw ConfigError("config file: unknown key '" + key + "'");
                }
                settings.set(key, value);
            }
        }
        for (std::string_view key : kValueKeys) {
            const std::string k(key);
            if (active->app->count("--" + k) == 0) {
                continue;
            }
            if (key == "scheme" || key == "formula") {
                std::string joined;
                for (const auto& item : lists[k]) {
                    joined += (joined.empty() ? "" : ",") + item;
                }
                settings.set(k, joined);
            } else {
                settings.set(k, values[k]);
            }
        }
        for (std::string_view key : kFlagKeys) {
            const std::string k(key);
            if (active->app->count("--" + k) > 0) {
                settings.set(k, flags[k] ? "true" : "false");
            }
        }

        if (active->name == "simulate") {
            return cmd_simulate(settings, out, err);
        }
        if (active->name == "analyze") {
            return cmd_analyze(settings, out);
        }
        if (active->name == "regime") {
            return cmd_regime(settings, out);
        }
        return cmd_validate(settings, out);
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
}

}  // namespace hybridmimo::cli
