// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "irsthz/surrogate/dataset.hpp"
#include "irsthz/surrogate/mlp.hpp"

namespace irsthz
{
enum class InitScheme
{
    nguyen_widrow,
    xavier,
};

struct TrainConfig
{
    int max_epochs = 2000;
    double train_fraction = 0.70;
    double val_fraction = 0.15;
    double test_fraction = 0.15;
    //! Consecutive epochs without validation improvement before stopping
    int max_fail = 6;
    double mu_init = 1e-3;
    double mu_decrease = 0.1;
    double mu_increase = 10;
    double mu_max = 1e10;
    double min_gradient = 1e-10;
    double goal_mse = 0;
    std::uint64_t seed = 1;
    InitScheme init = InitScheme::nguyen_widrow;
    //! Wall-clock budget in seconds; 0 disables it
    double time_limit_s = 0;
    //! Above this size of the Gauss-Newton matrix the Adam optimizer is used
    std::size_t lm_memory_limit_bytes = std::size_t(1) << 30;
    //! Called after every epoch with (epoch, train_mse, val_mse)
    std::function<void(int, double, double)> on_epoch;

    void validate() const;
};

struct DataSplit
{
    std::vector<Eigen::Index> train;
    std::vector<Eigen::Index> val;
    std::vector<Eigen::Index> test;
};

DataSplit split_dataset(Eigen::Index rows, TrainConfig const& cfg);
Dataset subset(Dataset const& data, std::vector<Eigen::Index> const& idx);

struct TrainResult
{
    MlpModel model;
    DataSplit split;
    std::vector<double> train_curve;
    std::vector<double> val_curve;
    double seconds = 0;
};

/*!
 * Levenberg-Marquardt training with validation early stopping.
 *
 * The loss is the mean squared error of the transformed output (for
 * probabilities, -log10). Inputs and outputs are min-max scaled to [-1, 1]
 * using the training split only, and the parameters with the lowest
 * validation error are restored at the end.
 */
TrainResult train_mlp(MlpSpec const& spec,
                      std::vector<InputTransform> const& inputs,
                      OutputTransform output, Dataset const& data,
                      TrainConfig const& cfg);

struct EvalMetrics
{
    double mse = 0;
    double correlation = 0;
    //! Least-squares fit prediction = slope * target + intercept
    double slope = 0;
    double intercept = 0;
    Eigen::Index rows = 0;
};

//! The two predictors the tooling knows how to build
enum class SurrogateKind
{
    op,
    aser,
};

MlpSpec surrogate_spec(SurrogateKind kind);
// log10 on the continuous inputs; modulation orders pass through
std::vector<InputTransform> surrogate_input_transforms(SurrogateKind kind);

struct BenchResult
{
    int samples = 0;
    double closed_form_seconds = 0;
    double surrogate_seconds = 0;
    //! Transformed-domain MSE over samples whose target is >= 1e-30
    double transformed_mse = 0;
    int scored = 0;

    double speedup() const { return closed_form_seconds / surrogate_seconds; }
};

/*!
 * Time closed-form targets against surrogate predictions on the same random
 * inputs, drawn log-uniformly from the default training ranges.
 */
BenchResult benchmark_surrogate(SurrogateKind kind, MlpModel const& model,
                                int samples, std::uint64_t seed);

//! Metrics of the transformed-domain prediction against the targets
EvalMetrics evaluate_model(MlpModel const& model, Dataset const& data);

}  // namespace irsthz
