// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include <string>
#include <vector>

#include "irsthz/channel/channel.hpp"
#include "irsthz/metrics/modulation.hpp"
#include "irsthz/montecarlo/simulate.hpp"
#include "irsthz/specfun/errors.hpp"

namespace irsthz
{
//! Inclusive transmit-power axis in dBm
struct SweepAxis
{
    double start_dbm = -5;
    double stop_dbm = 40;
    double step_db = 0.5;

    std::vector<double> points() const;
    void validate() const;
};

// Parse "a:b:c" (start:stop:step) or a single value
SweepAxis parse_sweep_axis(std::string const& text);
std::string format_sweep_axis(SweepAxis const& axis);

struct OutputConfig
{
    std::string path;  //!< empty writes to stdout
    std::string format = "csv";  //!< csv or jsonl
};

struct SurrogateConfig
{
    std::string op_model;
    std::string aser_model;
};

//! Link budget in interface units (converted once by ScenarioConfig)
struct LinkConfig
{
    int n_elements = 10;
    double freq_ghz = 275;
    double noise_uw = 6.08;
    double path_loss_exponent = 2;
    double threshold_db = 0;  //!< outage threshold lambda_th
};

struct HopConfig
{
    double alpha = 3;
    double mu = 3;
    double omega = 1;
    double phi = 15;
    double s0 = 0.8;
    double distance_m = 15;
    double tx_gain_dbi = 55;
    double rx_gain_dbi = 55;
};

/*!
 * Everything a CLI run depends on.
 *
 * Values are held in the units the file uses so that emitting and parsing
 * reproduce them bit for bit. Defaults mirror the simulation parameter
 * table: 275 GHz, 55 dBi transmit and receive gains on both hops, 6.08 uW
 * noise, alpha = mu = 3, phi = 15, S0 = 0.8, 15 m hops and N = 10.
 */
struct ScenarioConfig
{
    LinkConfig link;
    HopConfig hop1;
    HopConfig hop2;
    AtmosphereConfig atmosphere;
    RqamSpec rqam;
    HqamSpec hqam;
    SweepAxis sweep;
    PhaseModel phase;
    McConfig mc;
    SurrogateConfig surrogate;
    OutputConfig output;

    void validate() const;
    Scenario scenario() const;
    double threshold_linear() const;
    //! Deterministic SNR scale for a transmit power in dBm
    double lambda0(double ps_dbm) const;
};

// Parse config text; origin labels diagnostics ("file:line: key: ...")
ScenarioConfig parse_config_text(std::string const& text,
                                 std::string const& origin = "<config>");
ScenarioConfig parse_config(std::string const& path);

// Apply "section.key=value" overrides in order, then validate once
void apply_overrides(ScenarioConfig& cfg,
                     std::vector<std::string> const& assignments);

// Canonical text; parse_config_text(emit_config(c)) reproduces c exactly
std::string emit_config(ScenarioConfig const& cfg);

// FNV-1a hash of the canonical text
std::string config_hash(ScenarioConfig const& cfg);

// Resolve a config path, falling back to $IRSTHZ_CONFIG_DIR for relative
// names that do not exist in the working directory
std::string resolve_config_path(std::string const& path);

}  // namespace irsthz
