// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include "irsthz/cli/config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "irsthz/specfun/errors.hpp"
#include "irsthz/util/hash.hpp"

namespace irsthz
{
namespace
{
//---------------------------------------------------------------------------//
// Scalar parsing and formatting
//---------------------------------------------------------------------------//
std::string trim(std::string const& s)
{
    auto const b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    auto const e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_real(std::string const& v)
{
    if (v.empty())
        throw ConfigError("expected a number, got an empty value");
    char* end = nullptr;
    errno = 0;
    double const x = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size() || errno == ERANGE || !std::isfinite(x))
        throw ConfigError("expected a finite number, got '" + v + "'");
    return x;
}

long long parse_integer(std::string const& v)
{
    if (v.empty())
        throw ConfigError("expected an integer, got an empty value");
    char* end = nullptr;
    errno = 0;
    long long const x = std::strtoll(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size() || errno == ERANGE)
        throw ConfigError("expected an integer, got '" + v + "'");
    return x;
}

std::uint64_t parse_unsigned(std::string const& v)
{
    if (v.empty() || v.front() == '-')
        throw ConfigError("expected a nonnegative integer, got '" + v + "'");
    char* end = nullptr;
    errno = 0;
    unsigned long long const x = std::strtoull(v.c_str(), &end, 10);
    if (end != v.c_str() + v.size() || errno == ERANGE)
        throw ConfigError("expected a nonnegative integer, got '" + v + "'");
    return x;
}

std::string format_real(double x)
{
    // Shortest text that parses back to the same double
    char buf[32];
    auto const r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

std::string unquote(std::string v)
{
    if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
        return v.substr(1, v.size() - 2);
    return v;
}

//---------------------------------------------------------------------------//
// Key table
//---------------------------------------------------------------------------//
struct Field
{
    std::string section;
    std::string key;
    std::function<void(ScenarioConfig&, std::string const&)> set;
    std::function<std::string(ScenarioConfig const&)> get;
};

using RealRef = std::function<double&(ScenarioConfig&)>;

Field real_field(std::string section, std::string key, RealRef ref,
                 std::function<bool(double)> ok, std::string invariant)
{
    return {std::move(section), std::move(key),
            [=](ScenarioConfig& c, std::string const& v) {
                double const x = parse_real(v);
                if (ok && !ok(x))
                    throw ConfigError("value " + v + " violates invariant: "
                                      + invariant);
                ref(c) = x;
            },
            [=](ScenarioConfig const& c) {
                return format_real(ref(const_cast<ScenarioConfig&>(c)));
            }};
}

bool positive(double x)
{
    return x > 0;
}

bool nonnegative(double x)
{
    return x >= 0;
}

void add_hop_fields(std::vector<Field>& f, int idx)
{
    auto hop = [idx](ScenarioConfig& c) -> HopConfig& {
        return idx == 1 ? c.hop1 : c.hop2;
    };
    std::string const n = std::to_string(idx);
    f.push_back(real_field(
        "hops", "alpha" + n, [=](auto& c) -> double& { return hop(c).alpha; },
        positive, "alpha" + n + " > 0"));
    f.push_back(real_field(
        "hops", "mu" + n, [=](auto& c) -> double& { return hop(c).mu; },
        positive, "mu" + n + " > 0"));
    f.push_back(real_field(
        "hops", "omega" + n, [=](auto& c) -> double& { return hop(c).omega; },
        positive, "omega" + n + " > 0"));
    f.push_back(real_field(
        "hops", "phi" + n, [=](auto& c) -> double& { return hop(c).phi; },
        positive, "phi" + n + " > 0"));
    f.push_back(real_field(
        "hops", "s0_" + n, [=](auto& c) -> double& { return hop(c).s0; },
        [](double x) { return x > 0 && x <= 1; }, "0 < s0_" + n + " <= 1"));
    f.push_back(real_field(
        "hops", "distance" + n + "_m",
        [=](auto& c) -> double& { return hop(c).distance_m; }, positive,
        "distance" + n + "_m > 0"));
    f.push_back(real_field(
        "hops", "gt" + n + "_dbi",
        [=](auto& c) -> double& { return hop(c).tx_gain_dbi; }, nonnegative,
        "gt" + n + "_dbi >= 0"));
    f.push_back(real_field(
        "hops", "gr" + n + "_dbi",
        [=](auto& c) -> double& { return hop(c).rx_gain_dbi; }, nonnegative,
        "gr" + n + "_dbi >= 0"));
}

std::vector<Field> build_fields()
{
    std::vector<Field> f;
    // link
    f.push_back({"link", "n_elements",
                 [](ScenarioConfig& c, std::string const& v) {
                     auto const n = parse_integer(v);
                     if (n < 1 || n > 1'000'000)
                         throw ConfigError("value " + v
                                           + " violates invariant: 1 <= "
                                             "n_elements <= 1000000");
                     c.link.n_elements = static_cast<int>(n);
                 },
                 [](ScenarioConfig const& c) {
                     return std::to_string(c.link.n_elements);
                 }});
    f.push_back(real_field(
        "link", "freq_ghz", [](auto& c) -> double& { return c.link.freq_ghz; },
        positive, "freq_ghz > 0"));
    f.push_back(real_field(
        "link", "noise_uw", [](auto& c) -> double& { return c.link.noise_uw; },
        positive, "noise_uw > 0"));
    f.push_back(real_field(
        "link", "path_loss_exponent",
        [](auto& c) -> double& { return c.link.path_loss_exponent; }, positive,
        "path_loss_exponent > 0"));
    f.push_back(real_field(
        "link", "threshold_db",
        [](auto& c) -> double& { return c.link.threshold_db; }, nullptr, ""));

    add_hop_fields(f, 1);
    add_hop_fields(f, 2);

    // atmosphere
    f.push_back(real_field(
        "atmosphere", "temperature_k",
        [](auto& c) -> double& { return c.atmosphere.temperature_k; },
        positive, "temperature_k > 0"));
    f.push_back(real_field(
        "atmosphere", "pressure_hpa",
        [](auto& c) -> double& { return c.atmosphere.pressure_hpa; }, positive,
        "pressure_hpa > 0"));
    f.push_back(real_field(
        "atmosphere", "rel_humidity_pct",
        [](auto& c) -> double& { return c.atmosphere.rel_humidity_pct; },
        [](double x) { return x >= 0 && x <= 100; },
        "0 <= rel_humidity_pct <= 100"));
    f.push_back(real_field(
        "atmosphere", "k_alpha_per_m",
        [](auto& c) -> double& { return c.atmosphere.k_alpha_per_m; },
        nonnegative, "k_alpha_per_m >= 0"));
    f.push_back(real_field(
        "atmosphere", "absorption_length_m",
        [](auto& c) -> double& { return c.atmosphere.absorption_length_m; },
        nullptr, ""));

    // modulation
    auto order_field = [](std::string key, std::function<int&(ScenarioConfig&)> ref,
                          int min) {
        return Field{
            "modulation", key,
            [=](ScenarioConfig& c, std::string const& v) {
                auto const m = parse_integer(v);
                if (m < min || m > (1 << 20) || (m & (m - 1)) != 0)
                    throw ConfigError("value " + v + " violates invariant: "
                                      + key + " is a power of two >= "
                                      + std::to_string(min));
                ref(c) = static_cast<int>(m);
            },
            [=](ScenarioConfig const& c) {
                return std::to_string(ref(const_cast<ScenarioConfig&>(c)));
            }};
    };
    f.push_back(order_field(
        "mi", [](ScenarioConfig& c) -> int& { return c.rqam.mi; }, 2));
    f.push_back(order_field(
        "mq", [](ScenarioConfig& c) -> int& { return c.rqam.mq; }, 2));
    f.push_back(real_field(
        "modulation", "beta", [](auto& c) -> double& { return c.rqam.beta; },
        positive, "beta > 0"));
    f.push_back({"modulation", "rqam_variant",
                 [](ScenarioConfig& c, std::string const& v) {
                     if (v == "standard")
                         c.rqam.variant = RqamVariant::standard;
                     else if (v == "paper_literal")
                         c.rqam.variant = RqamVariant::paper_literal;
                     else
                         throw ConfigError("expected standard or "
                                           "paper_literal, got '"
                                           + v + "'");
                 },
                 [](ScenarioConfig const& c) -> std::string {
                     return c.rqam.variant == RqamVariant::standard
                                ? "standard"
                                : "paper_literal";
                 }});
    f.push_back(order_field(
        "hqam_m", [](ScenarioConfig& c) -> int& { return c.hqam.m; }, 4));

    // sweep
    f.push_back({"sweep", "ps_dbm",
                 [](ScenarioConfig& c, std::string const& v) {
                     c.sweep = parse_sweep_axis(v);
                 },
                 [](ScenarioConfig const& c) {
                     return format_sweep_axis(c.sweep);
                 }});

    // phase
    f.push_back({"phase", "model",
                 [](ScenarioConfig& c, std::string const& v) {
                     using K = PhaseModel::Kind;
                     if (v == "ideal")
                         c.phase.kind = K::ideal;
                     else if (v == "quantized")
                         c.phase.kind = K::quantized;
                     else if (v == "random")
                         c.phase.kind = K::random;
                     else
                         throw ConfigError("expected ideal, quantized or "
                                           "random, got '"
                                           + v + "'");
                 },
                 [](ScenarioConfig const& c) -> std::string {
                     switch (c.phase.kind)
                     {
                         case PhaseModel::Kind::ideal: return "ideal";
                         case PhaseModel::Kind::quantized: return "quantized";
                         case PhaseModel::Kind::random: return "random";
                     }
                     return "ideal";
                 }});
    f.push_back({"phase", "q_bits",
                 [](ScenarioConfig& c, std::string const& v) {
                     auto const q = parse_integer(v);
                     if (q < 0 || q > 16)
                         throw ConfigError("value " + v
                                           + " violates invariant: 0 <= "
                                             "q_bits <= 16");
                     c.phase.q_bits = static_cast<int>(q);
                 },
                 [](ScenarioConfig const& c) {
                     return std::to_string(c.phase.q_bits);
                 }});

    // mc
    f.push_back({"mc", "trials",
                 [](ScenarioConfig& c, std::string const& v) {
                     auto const t = parse_integer(v);
                     if (t < 1000)
                         throw ConfigError("value " + v
                                           + " violates invariant: trials "
                                             ">= 1000");
                     c.mc.trials = t;
                 },
                 [](ScenarioConfig const& c) {
                     return std::to_string(c.mc.trials);
                 }});
    f.push_back({"mc", "seed",
                 [](ScenarioConfig& c, std::string const& v) {
                     c.mc.seed = parse_unsigned(v);
                 },
                 [](ScenarioConfig const& c) {
                     return std::to_string(c.mc.seed);
                 }});
    f.push_back({"mc", "chunk",
                 [](ScenarioConfig& c, std::string const& v) {
                     auto const n = parse_integer(v);
                     if (n < 1)
                         throw ConfigError("value " + v
                                           + " violates invariant: chunk >= 1");
                     c.mc.chunk = n;
                 },
                 [](ScenarioConfig const& c) {
                     return std::to_string(c.mc.chunk);
                 }});
    f.push_back({"mc", "threads",
                 [](ScenarioConfig& c, std::string const& v) {
                     auto const n = parse_integer(v);
                     if (n < 0 || n > 4096)
                         throw ConfigError("value " + v
                                           + " violates invariant: 0 <= "
                                             "threads <= 4096");
                     c.mc.threads = static_cast<int>(n);
                 },
                 [](ScenarioConfig const& c) {
                     return std::to_string(c.mc.threads);
                 }});

    // surrogate and output
    auto string_field = [](std::string section, std::string key,
                           std::function<std::string&(ScenarioConfig&)> ref) {
        return Field{section, key,
                     [=](ScenarioConfig& c, std::string const& v) {
                         ref(c) = unquote(v);
                     },
                     [=](ScenarioConfig const& c) {
                         return ref(const_cast<ScenarioConfig&>(c));
                     }};
    };
    f.push_back(string_field("surrogate", "op_model",
                             [](ScenarioConfig& c) -> std::string& {
                                 return c.surrogate.op_model;
                             }));
    f.push_back(string_field("surrogate", "aser_model",
                             [](ScenarioConfig& c) -> std::string& {
                                 return c.surrogate.aser_model;
                             }));
    f.push_back(string_field(
        "output", "path",
        [](ScenarioConfig& c) -> std::string& { return c.output.path; }));
    f.push_back({"output", "format",
                 [](ScenarioConfig& c, std::string const& v) {
                     if (v != "csv" && v != "jsonl")
                         throw ConfigError("expected csv or jsonl, got '" + v
                                           + "'");
                     c.output.format = v;
                 },
                 [](ScenarioConfig const& c) { return c.output.format; }});
    return f;
}

std::vector<Field> const& fields()
{
    static std::vector<Field> const table = build_fields();
    return table;
}

Field const* find_field(std::string const& section, std::string const& key)
{
    for (auto const& f : fields())
    {
        if (f.section == section && f.key == key)
            return &f;
    }
    return nullptr;
}

bool known_section(std::string const& section)
{
    for (auto const& f : fields())
    {
        if (f.section == section)
            return true;
    }
    return false;
}

void set_field(ScenarioConfig& cfg, std::string const& section,
               std::string const& key, std::string const& value,
               std::string const& where)
{
    Field const* f = find_field(section, key);
    if (!f)
        throw ConfigError(where + ": unknown key '" + section + "." + key
                          + "'");
    try
    {
        f->set(cfg, value);
    }
    catch (ConfigError const& e)
    {
        throw ConfigError(where + ": " + section + "." + key + ": "
                          + e.what());
    }
}

void validate_or_throw(ScenarioConfig const& cfg, std::string const& origin)
{
    try
    {
        cfg.validate();
    }
    catch (ConfigError const& e)
    {
        throw ConfigError(origin + ": " + e.what());
    }
}

}  // namespace

//---------------------------------------------------------------------------//
// Sweep axis
//---------------------------------------------------------------------------//
std::vector<double> SweepAxis::points() const
{
    validate();
    std::vector<double> out;
    // Index-based so the grid does not accumulate rounding
    double const span = (stop_dbm - start_dbm) / step_db;
    auto const n = static_cast<long>(std::floor(span + 1e-9));
    for (long i = 0; i <= n; ++i)
        out.push_back(start_dbm + static_cast<double>(i) * step_db);
    return out;
}

void SweepAxis::validate() const
{
    if (!(step_db > 0))
        throw ConfigError("sweep: step must be > 0");
    if (!(stop_dbm >= start_dbm))
        throw ConfigError("sweep: stop must be >= start");
    if ((stop_dbm - start_dbm) / step_db > 1e6)
        throw ConfigError("sweep: more than 1e6 points");
}

SweepAxis parse_sweep_axis(std::string const& text)
{
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':'))
        parts.push_back(trim(item));
    SweepAxis axis;
    if (parts.size() == 1)
    {
        axis.start_dbm = axis.stop_dbm = parse_real(parts[0]);
        axis.step_db = 1;
    }
    else if (parts.size() == 3)
    {
        axis.start_dbm = parse_real(parts[0]);
        axis.stop_dbm = parse_real(parts[1]);
        axis.step_db = parse_real(parts[2]);
    }
    else
    {
        throw ConfigError("expected start:stop:step or a single value, got '"
                          + text + "'");
    }
    axis.validate();
    return axis;
}

std::string format_sweep_axis(SweepAxis const& axis)
{
    return format_real(axis.start_dbm) + ":" + format_real(axis.stop_dbm) + ":"
           + format_real(axis.step_db);
}

//---------------------------------------------------------------------------//
// ScenarioConfig
//---------------------------------------------------------------------------//
Scenario ScenarioConfig::scenario() const
{
    auto hop = [](HopConfig const& h) {
        HopParams p;
        p.fading = {h.alpha, h.mu, h.omega};
        p.pointing = {h.phi, h.s0};
        p.distance_m = h.distance_m;
        p.tx_gain_linear = db_to_linear(h.tx_gain_dbi);
        p.rx_gain_linear = db_to_linear(h.rx_gain_dbi);
        return p;
    };
    Scenario sc;
    sc.hop1 = hop(hop1);
    sc.hop2 = hop(hop2);
    sc.atmosphere = atmosphere;
    sc.n_elements = link.n_elements;
    sc.freq_hz = link.freq_ghz * 1e9;
    sc.path_loss_exponent = link.path_loss_exponent;
    sc.noise_var_w = link.noise_uw * 1e-6;
    return sc;
}

double ScenarioConfig::threshold_linear() const
{
    return db_to_linear(link.threshold_db);
}

double ScenarioConfig::lambda0(double ps_dbm) const
{
    return snr_scale(scenario(), dbm_to_watt(ps_dbm));
}

void ScenarioConfig::validate() const
{
    scenario().validate();
    rqam.validate();
    hqam.validate();
    sweep.validate();
    phase.validate();
    mc.validate();
}

//---------------------------------------------------------------------------//
// Parsing and emission
//---------------------------------------------------------------------------//
ScenarioConfig parse_config_text(std::string const& text,
                                 std::string const& origin)
{
    ScenarioConfig cfg;
    std::set<std::string> seen;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw))
    {
        ++line_no;
        std::string const where = origin + ":" + std::to_string(line_no);
        std::string const line = trim(raw);
        if (line.empty() || line.front() == '#' || line.front() == ';')
            continue;
        if (line.front() == '[')
        {
            if (line.back() != ']')
                throw ConfigError(where + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            if (!known_section(section))
                throw ConfigError(where + ": unknown section [" + section
                                  + "]");
            continue;
        }
        auto const eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(where + ": expected key = value");
        std::string const key = trim(line.substr(0, eq));
        std::string const value = trim(line.substr(eq + 1));
        if (section.empty())
            throw ConfigError(where + ": key '" + key
                              + "' appears before any [section]");
        if (!seen.insert(section + "." + key).second)
            throw ConfigError(where + ": duplicate key '" + section + "."
                              + key + "'");
        set_field(cfg, section, key, value, where);
    }
    validate_or_throw(cfg, origin);
    return cfg;
}

ScenarioConfig parse_config(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read config '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

void apply_overrides(ScenarioConfig& cfg,
                     std::vector<std::string> const& assignments)
{
    // Validation waits for the last override so that coupled keys (phase
    // model and quantizer bits) can change together
    for (auto const& a : assignments)
    {
        auto const eq = a.find('=');
        auto const dot = a.find('.');
        if (eq == std::string::npos || dot == std::string::npos || dot > eq)
            throw ConfigError("override '" + a
                              + "': expected section.key=value");
        set_field(cfg, trim(a.substr(0, dot)),
                  trim(a.substr(dot + 1, eq - dot - 1)),
                  trim(a.substr(eq + 1)), "override");
    }
    validate_or_throw(cfg, "overrides");
}

std::string emit_config(ScenarioConfig const& cfg)
{
    std::string out;
    std::string section;
    for (auto const& f : fields())
    {
        if (f.section != section)
        {
            if (!section.empty())
                out += "\n";
            section = f.section;
            out += "[" + section + "]\n";
        }
        out += f.key + " = " + f.get(cfg) + "\n";
    }
    return out;
}

std::string config_hash(ScenarioConfig const& cfg)
{
    // Where results go and how many workers compute them do not change the
    // numbers, so they stay out of the hash
    ScenarioConfig canonical = cfg;
    canonical.output = OutputConfig{};
    canonical.mc.threads = 0;
    return fnv1a_hex(emit_config(canonical));
}

std::string resolve_config_path(std::string const& path)
{
    namespace fs = std::filesystem;
    fs::path const p(path);
    if (fs::exists(p) || p.is_absolute())
        return path;
    if (char const* dir = std::getenv("IRSTHZ_CONFIG_DIR"))
    {
        fs::path const alt = fs::path(dir) / p;
        if (fs::exists(alt))
            return alt.string();
    }
    return path;
}

}  // namespace irsthz
