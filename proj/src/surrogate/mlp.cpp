// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include "irsthz/surrogate/mlp.hpp"

#include <cmath>

#include "irsthz/specfun/errors.hpp"

namespace irsthz
{
char const* to_string(InputTransform t)
{
    return t == InputTransform::log10 ? "log10" : "identity";
}

char const* to_string(OutputTransform t)
{
    return t == OutputTransform::neg_log10 ? "neg_log10" : "identity";
}

InputTransform parse_input_transform(std::string const& s)
{
    if (s == "identity")
        return InputTransform::identity;
    if (s == "log10")
        return InputTransform::log10;
    throw ConfigError("unknown input transform '" + s + "'");
}

OutputTransform parse_output_transform(std::string const& s)
{
    if (s == "identity")
        return OutputTransform::identity;
    if (s == "neg_log10")
        return OutputTransform::neg_log10;
    throw ConfigError("unknown output transform '" + s + "'");
}

double apply_transform(InputTransform t, double x)
{
    if (t == InputTransform::identity)
        return x;
    if (!(x > 0))
        throw DomainError("log10 input transform needs a positive value");
    return std::log10(x);
}

double target_to_transformed(OutputTransform t, double target)
{
    if (t == OutputTransform::identity)
        return target;
    if (!(target > 0))
        throw DomainError("neg_log10 output transform needs a positive target");
    return -std::log10(target);
}

double transformed_to_target(OutputTransform t, double y)
{
    return t == OutputTransform::identity ? y : std::pow(10.0, -y);
}

//---------------------------------------------------------------------------//
void MlpSpec::validate() const
{
    require(layer_sizes.size() >= 2, "mlp: need input and output layers");
    for (int s : layer_sizes)
        require(s >= 1, "mlp: layer sizes must be positive");
    require(layer_sizes.back() == 1, "mlp: a single output is supported");
}

int MlpSpec::n_params() const
{
    int n = 0;
    for (std::size_t l = 0; l + 1 < layer_sizes.size(); ++l)
        n += (layer_sizes[l] + 1) * layer_sizes[l + 1];
    return n;
}

MinMaxScaling MinMaxScaling::identity(int n)
{
    return {std::vector<double>(n, -1.0), std::vector<double>(n, 1.0)};
}

double MinMaxScaling::apply(int i, double x) const
{
    double const span = hi[i] - lo[i];
    return span > 0 ? 2 * (x - lo[i]) / span - 1 : 0;
}

double MinMaxScaling::invert(int i, double z) const
{
    return lo[i] + 0.5 * (z + 1) * (hi[i] - lo[i]);
}

//---------------------------------------------------------------------------//
MlpModel MlpModel::zeros(MlpSpec spec, std::vector<InputTransform> inputs,
                         OutputTransform output)
{
    spec.validate();
    MlpModel m;
    m.spec = std::move(spec);
    m.input_transforms = std::move(inputs);
    m.output_transform = output;
    m.input_scaling = MinMaxScaling::identity(m.spec.inputs());
    m.output_scaling = MinMaxScaling::identity(1);
    auto const& ls = m.spec.layer_sizes;
    for (std::size_t l = 0; l + 1 < ls.size(); ++l)
    {
        m.weights.push_back(Eigen::MatrixXd::Zero(ls[l + 1], ls[l]));
        m.biases.push_back(Eigen::VectorXd::Zero(ls[l + 1]));
    }
    m.validate();
    return m;
}

void MlpModel::validate() const
{
    spec.validate();
    auto const& ls = spec.layer_sizes;
    int const n_in = spec.inputs();
    require(static_cast<int>(input_transforms.size()) == n_in,
            "mlp: one input transform per input required");
    require(static_cast<int>(input_scaling.lo.size()) == n_in
                && static_cast<int>(input_scaling.hi.size()) == n_in,
            "mlp: input scaling shape mismatch");
    require(output_scaling.lo.size() == 1 && output_scaling.hi.size() == 1,
            "mlp: output scaling shape mismatch");
    require(weights.size() + 1 == ls.size() && biases.size() == weights.size(),
            "mlp: layer count mismatch");
    for (std::size_t l = 0; l < weights.size(); ++l)
    {
        require(weights[l].rows() == ls[l + 1] && weights[l].cols() == ls[l],
                "mlp: weight shape mismatch");
        require(biases[l].size() == ls[l + 1], "mlp: bias shape mismatch");
    }
}

double MlpModel::forward_scaled(Eigen::Ref<Eigen::VectorXd const> z) const
{
    Eigen::VectorXd a = z;
    std::size_t const last = weights.size() - 1;
    for (std::size_t l = 0; l < last; ++l)
        a = (weights[l] * a + biases[l]).array().tanh().matrix();
    return (weights[last] * a + biases[last])(0);
}

Eigen::VectorXd MlpModel::prepare(std::span<double const> inputs) const
{
    int const n_in = spec.inputs();
    if (static_cast<int>(inputs.size()) != n_in)
        throw DomainError("mlp: expected " + std::to_string(n_in)
                          + " inputs, got " + std::to_string(inputs.size()));
    Eigen::VectorXd z(n_in);
    for (int i = 0; i < n_in; ++i)
        z(i) = input_scaling.apply(i, apply_transform(input_transforms[i],
                                                      inputs[i]));
    return z;
}

double MlpModel::predict_transformed(std::span<double const> inputs) const
{
    return output_scaling.invert(0, forward_scaled(prepare(inputs)));
}

double MlpModel::predict(std::span<double const> inputs) const
{
    return transformed_to_target(output_transform,
                                 predict_transformed(inputs));
}

Eigen::VectorXd MlpModel::pack() const
{
    Eigen::VectorXd theta(spec.n_params());
    Eigen::Index k = 0;
    for (std::size_t l = 0; l < weights.size(); ++l)
    {
        for (Eigen::Index i = 0; i < weights[l].rows(); ++i)
            for (Eigen::Index j = 0; j < weights[l].cols(); ++j)
                theta(k++) = weights[l](i, j);
        for (Eigen::Index i = 0; i < biases[l].size(); ++i)
            theta(k++) = biases[l](i);
    }
    return theta;
}

void MlpModel::unpack(Eigen::Ref<Eigen::VectorXd const> theta)
{
    require(theta.size() == spec.n_params(), "mlp: parameter count mismatch");
    Eigen::Index k = 0;
    for (std::size_t l = 0; l < weights.size(); ++l)
    {
        for (Eigen::Index i = 0; i < weights[l].rows(); ++i)
            for (Eigen::Index j = 0; j < weights[l].cols(); ++j)
                weights[l](i, j) = theta(k++);
        for (Eigen::Index i = 0; i < biases[l].size(); ++i)
            biases[l](i) = theta(k++);
    }
}

}  // namespace irsthz
