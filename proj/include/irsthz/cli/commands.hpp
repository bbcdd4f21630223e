// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "irsthz/cli/config.hpp"

namespace irsthz
{
//! Process exit status contract
enum ExitCode : int
{
    exit_ok = 0,
    exit_usage = 1,  //!< bad arguments or configuration
    exit_numeric = 2,  //!< a metric could not be evaluated
    exit_io = 3,  //!< unreadable or unwritable files
};

/*!
 * One output record. Absent values are empty CSV cells (null in JSON).
 *
 * Column order: sweep_ps_dbm, metric, analytical, asymptotic, mc_estimate,
 * mc_std_error, mc_trials, surrogate, config_hash.
 */
struct CsvRow
{
    double sweep_ps_dbm = 0;
    std::string metric;
    std::optional<double> analytical;
    std::optional<double> asymptotic;
    std::optional<double> mc_estimate;
    std::optional<double> mc_std_error;
    std::optional<std::int64_t> mc_trials;
    std::optional<double> surrogate;
    std::string config_hash;
};

std::string csv_header();
std::string format_csv_row(CsvRow const& row);
std::string format_jsonl_row(CsvRow const& row);

//! Metric names accepted on the command line
inline constexpr char const* metric_names[] = {"op", "aser-rqam",
                                               "aser-hqam", "acc"};

struct SweepRequest
{
    std::string metric = "op";
    bool analytical = true;
    bool with_mc = false;
    bool with_dnn = false;
};

// Evaluate every sweep point; rows come back in sweep order
std::vector<CsvRow> evaluate_sweep(ScenarioConfig const& cfg,
                                   SweepRequest const& req);

// Entry point: args exclude the program name
int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err);

}  // namespace irsthz
