// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace irsthz
{
enum class InputTransform
{
    identity,
    log10,
};

//! neg_log10: the network predicts y = -log10(target), so target = 10^(-y)
enum class OutputTransform
{
    identity,
    neg_log10,
};

char const* to_string(InputTransform t);
char const* to_string(OutputTransform t);
InputTransform parse_input_transform(std::string const& s);
OutputTransform parse_output_transform(std::string const& s);

//! Fully connected tanh network with a linear output layer
struct MlpSpec
{
    std::vector<int> layer_sizes;

    static MlpSpec op_net() { return {{2, 14, 12, 8, 1}}; }
    static MlpSpec aser_net() { return {{4, 20, 15, 10, 1}}; }

    void validate() const;
    int inputs() const { return layer_sizes.front(); }
    int n_params() const;
};

//! Affine map of each feature onto [-1, 1]
struct MinMaxScaling
{
    std::vector<double> lo;
    std::vector<double> hi;

    static MinMaxScaling identity(int n);
    double apply(int i, double x) const;
    double invert(int i, double z) const;
};

struct TrainingMeta
{
    double train_mse = 0;
    double val_mse = 0;
    double test_mse = 0;
    int epochs = 0;
    int best_epoch = 0;
    std::uint64_t seed = 0;
    std::string data_hash;
    std::string stop_reason;
};

struct MlpModel
{
    MlpSpec spec;
    std::vector<InputTransform> input_transforms;
    OutputTransform output_transform = OutputTransform::neg_log10;
    MinMaxScaling input_scaling;
    MinMaxScaling output_scaling;
    //! weights[l] maps layer l to layer l+1 (rows = outputs)
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
    TrainingMeta meta;

    //! All-zero parameters with identity scaling
    static MlpModel zeros(MlpSpec spec, std::vector<InputTransform> inputs,
                          OutputTransform output);

    void validate() const;

    //! Network output for inputs already transformed and scaled
    double forward_scaled(Eigen::Ref<Eigen::VectorXd const> z) const;
    //! Raw inputs to the transformed-domain output y
    double predict_transformed(std::span<double const> inputs) const;
    //! Raw inputs to the physical prediction (10^-y for neg_log10)
    double predict(std::span<double const> inputs) const;

    //! Apply the per-input transform and scaling
    Eigen::VectorXd prepare(std::span<double const> inputs) const;

    Eigen::VectorXd pack() const;
    void unpack(Eigen::Ref<Eigen::VectorXd const> theta);
};

double apply_transform(InputTransform t, double x);
double target_to_transformed(OutputTransform t, double target);
double transformed_to_target(OutputTransform t, double y);

}  // namespace irsthz
