// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "irsthz/cli/commands.hpp"
#include "irsthz/cli/config.hpp"
#include "irsthz/metrics/metrics.hpp"
#include "irsthz/specfun/errors.hpp"

using namespace irsthz;
using doctest::Approx;
namespace fs = std::filesystem;

namespace
{
struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> const& args)
{
    std::ostringstream out;
    std::ostringstream err;
    int const code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(fs::path const& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

fs::path scratch_dir()
{
    auto const d = fs::temp_directory_path() / "irsthz_cli_test";
    fs::create_directories(d);
    return d;
}

int count_lines(std::string const& s)
{
    return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}
}  // namespace

TEST_CASE("config defaults")
{
    ScenarioConfig const c;
    CHECK_NOTHROW(c.validate());
    CHECK(c.link.n_elements == 10);
    CHECK(c.hop1.tx_gain_dbi == 55);
    CHECK(c.hop2.rx_gain_dbi == 55);
    CHECK(c.sweep.points().size() == 91);
    CHECK(c.threshold_linear() == 1);
    auto const sc = c.scenario();
    CHECK(sc.n_elements == 10);
    CHECK(sc.noise_var_w == Approx(6.08e-6));
}

TEST_CASE("config errors name the key, invariant and line")
{
    std::string const text = "[link]\nn_elements = 4\n[hops]\nalpha1 = -1\n";
    try
    {
        parse_config_text(text, "demo.cfg");
        FAIL("expected a ConfigError");
    }
    catch (ConfigError const& e)
    {
        std::string const msg = e.what();
        CAPTURE(msg);
        CHECK(msg.find("demo.cfg:4") != std::string::npos);
        CHECK(msg.find("alpha1") != std::string::npos);
        CHECK(msg.find("> 0") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_config_text("[link]\nbogus = 1\n", "x"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[nowhere]\n", "x"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("n_elements = 3\n", "x"), ConfigError);
    CHECK_THROWS_AS(parse_config_text("[link]\nn_elements = 3\nn_elements = 4\n", "x"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config_text("[link]\nn_elements = three\n", "x"),
                    ConfigError);
}

TEST_CASE("config text round trip")
{
    ScenarioConfig c;
    c.link.freq_ghz = 300.125;
    c.hop1.phi = 18;
    c.hop2.s0 = 0.75;
    c.phase.kind = PhaseModel::Kind::quantized;
    c.phase.q_bits = 3;
    c.sweep = parse_sweep_axis("10:20:2.5");
    auto const text = emit_config(c);
    auto const back = parse_config_text(text, "emitted");
    CHECK(emit_config(back) == text);
    CHECK(config_hash(back) == config_hash(c));

    ScenarioConfig d = c;
    d.output.path = "elsewhere.csv";
    d.mc.threads = 7;
    CHECK(config_hash(d) == config_hash(c));
    d.hop1.phi = 18.5;
    CHECK(config_hash(d) != config_hash(c));
}

TEST_CASE("overrides are validated together")
{
    ScenarioConfig c;
    apply_overrides(c, {"phase.model=quantized", "phase.q_bits=2", "link.n_elements=36"});
    CHECK(c.phase.q_bits == 2);
    CHECK(c.link.n_elements == 36);
    CHECK_THROWS_AS(apply_overrides(c, {"hops.s0_1=1.5"}), ConfigError);
    CHECK_THROWS_AS(apply_overrides(c, {"hops.s0_1"}), ConfigError);
}

TEST_CASE("sweep axis")
{
    auto a = parse_sweep_axis("-5:40:0.5");
    CHECK(a.points().size() == 91);
    CHECK(a.points().back() == 40);
    auto b = parse_sweep_axis("12");
    CHECK(b.points() == std::vector<double>{12});
    CHECK(parse_sweep_axis(format_sweep_axis(a)).points() == a.points());
    CHECK_THROWS_AS(parse_sweep_axis("1:0:1"), ConfigError);
    CHECK_THROWS_AS(parse_sweep_axis("a:b"), ConfigError);
}

TEST_CASE("csv and jsonl rows")
{
    CHECK(csv_header()
          == "sweep_ps_dbm,metric,analytical,asymptotic,mc_estimate,"
             "mc_std_error,mc_trials,surrogate,config_hash");
    CsvRow r;
    r.sweep_ps_dbm = 20;
    r.metric = "op";
    r.analytical = 0.125;
    r.config_hash = "abc";
    auto const line = format_csv_row(r);
    CHECK(line.rfind("20,op,0.125,,,,,,abc", 0) == 0);
    auto const j = nlohmann::json::parse(format_jsonl_row(r));
    CHECK(j["analytical"] == 0.125);
    CHECK(j["mc_estimate"].is_null());
}

TEST_CASE("op at a single power")
{
    auto const r = cli({"op", "--ps-dbm", "20"});
    CAPTURE(r.err);
    REQUIRE(r.code == exit_ok);
    CHECK(count_lines(r.out) == 2);
    CHECK(r.out.rfind(csv_header(), 0) == 0);

    ScenarioConfig c;
    c.sweep = parse_sweep_axis("20");
    auto rows = evaluate_sweep(c, {});
    REQUIRE(rows.size() == 1);
    double const expect = outage_probability(lse_params(c.scenario()), c.lambda0(20),
                                             c.threshold_linear());
    CHECK(*rows[0].analytical == Approx(expect).epsilon(1e-14));
    CHECK(rows[0].asymptotic.has_value());
}

TEST_CASE("exit codes")
{
    CHECK(cli({"op", "--n", "0", "--ps-dbm", "10"}).code == exit_usage);
    CHECK(cli({"op", "--no-such-flag"}).code == exit_usage);
    CHECK(cli({"frobnicate"}).code == exit_usage);
    CHECK(cli({"op", "--config", "/nonexistent/file.cfg"}).code == exit_io);
    CHECK(cli({"predict", "--model", "/nonexistent/model", "--input", "1,2"}).code
          == exit_io);
    CHECK(cli({"op", "--ps-dbm", "10", "--output", "/nonexistent/dir/out.csv"}).code
          == exit_io);

    auto const bad = cli({"op", "--set", "hops.alpha1=-1"});
    CHECK(bad.code == exit_usage);
    CHECK(bad.err.find("alpha1") != std::string::npos);
}

TEST_CASE("runs are byte-identical and replayable")
{
    auto const dir = scratch_dir();
    auto const a = dir / "a.csv";
    auto const b = dir / "b.csv";
    std::vector<std::string> args{"sweep", "--metric", "aser-rqam", "--ps-dbm",
                                  "0:20:10", "--with-mc", "--trials", "20000"};
    auto args_a = args;
    args_a.insert(args_a.end(), {"--output", a.string(), "--threads", "1"});
    auto args_b = args;
    args_b.insert(args_b.end(), {"--output", b.string(), "--threads", "2"});
    REQUIRE(cli(args_a).code == exit_ok);
    REQUIRE(cli(args_b).code == exit_ok);
    auto const text = slurp(a);
    CHECK(count_lines(text) == 4);
    CHECK(text == slurp(b));

    // The manifest replays to the same bytes
    auto const manifest = fs::path(a.string() + ".manifest.json");
    REQUIRE(fs::exists(manifest));
    auto const m = nlohmann::json::parse(slurp(manifest));
    CHECK(m["command"] == "sweep");
    auto const c = dir / "c.csv";
    auto const replay = cli({"sweep", "--metric", "aser-rqam", "--with-mc",
                             "--config", manifest.string(), "--output", c.string()});
    CAPTURE(replay.err);
    REQUIRE(replay.code == exit_ok);
    CHECK(slurp(c) == text);
    fs::remove_all(dir);
}

TEST_CASE("jsonl output")
{
    auto const r = cli({"acc", "--ps-dbm", "0:10:5", "--format", "jsonl"});
    REQUIRE(r.code == exit_ok);
    std::istringstream in(r.out);
    int n = 0;
    for (std::string line; std::getline(in, line); ++n)
    {
        auto const j = nlohmann::json::parse(line);
        CHECK(j["metric"] == "acc");
        CHECK(j["analytical"].get<double>() > 0);
    }
    CHECK(n == 3);
}

TEST_CASE("emit-defaults parses back")
{
    auto const r = cli({"--emit-defaults"});
    REQUIRE(r.code == exit_ok);
    auto const c = parse_config_text(r.out, "defaults");
    CHECK(config_hash(c) == config_hash(ScenarioConfig{}));
}

TEST_CASE("version and selftest")
{
    auto const v = cli({"--version"});
    CHECK(v.code == exit_ok);
    CHECK(v.out.find("irsthz") != std::string::npos);
    auto const s = cli({"selftest"});
    CAPTURE(s.out);
    CHECK(s.code == exit_ok);
}

TEST_CASE("executable")
{
    char const* exe = std::getenv("IRSTHZ_CLI");
    if (exe == nullptr)
        return;
    auto const dir = scratch_dir();
    auto const out = dir / "exe.txt";
    std::string const cmd = std::string(exe) + " aser-hqam --m 16 --ps-dbm 15 > "
                            + out.string();
    CHECK(std::system(cmd.c_str()) == 0);
    auto const text = slurp(out);
    CHECK(text.find("aser-hqam") != std::string::npos);
    std::string const fail = std::string(exe) + " op --n -3 2> /dev/null";
    int const status = std::system(fail.c_str());
    CHECK(WEXITSTATUS(status) == exit_usage);
    fs::remove_all(dir);
}
