// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include <doctest.h>

#include "irsthz/metrics/metrics.hpp"
#include "irsthz/montecarlo/philox.hpp"
#include "irsthz/specfun/errors.hpp"
#include "irsthz/surrogate/dataset.hpp"
#include "irsthz/surrogate/model_io.hpp"
#include "irsthz/surrogate/train.hpp"
#include "irsthz/util/hash.hpp"

using namespace irsthz;
using doctest::Approx;

namespace
{
MlpModel random_model(std::uint64_t seed)
{
    auto m = MlpModel::zeros(MlpSpec::op_net(),
                             surrogate_input_transforms(SurrogateKind::op),
                             OutputTransform::neg_log10);
    Philox4x32 rng(seed, 0);
    Eigen::VectorXd theta = m.pack();
    for (auto& v : theta)
        v = rng.uniform() - 0.5;
    m.unpack(theta);
    m.input_scaling.lo = {0.0, -2.0};
    m.input_scaling.hi = {2.1, 0.6};
    m.output_scaling.lo = {0.0};
    m.output_scaling.hi = {12.5};
    return m;
}

// Replace the first occurrence of `from` and re-sign the body
std::string patch_model(std::string text, std::string const& from,
                        std::string const& to)
{
    text.replace(text.find(from), from.size(), to);
    std::string const body = text.substr(0, text.rfind("checksum "));
    return body + "checksum " + fnv1a_hex(body) + '\n';
}

TrainConfig quick_config(int epochs)
{
    TrainConfig cfg;
    cfg.max_epochs = epochs;
    cfg.seed = 5;
    return cfg;
}
}  // namespace

TEST_CASE("zero model predicts 10^-b")
{
    auto m = MlpModel::zeros(MlpSpec::op_net(),
                             surrogate_input_transforms(SurrogateKind::op),
                             OutputTransform::neg_log10);
    m.biases.back()(0) = 2.5;
    double const x[2] = {3.0, 0.1};
    CHECK(m.predict(x) == Approx(std::pow(10.0, -2.5)).epsilon(1e-14));
    CHECK(m.predict_transformed(x) == Approx(2.5));
    double const bad[3] = {1, 2, 3};
    CHECK_THROWS(m.predict(bad));
}

TEST_CASE("tanh saturation bounds the output")
{
    auto m = MlpModel::zeros(MlpSpec{{1, 1, 1}}, {InputTransform::identity},
                             OutputTransform::identity);
    m.weights[0](0, 0) = 1e300;
    m.weights[1](0, 0) = 2.0;
    double const x[1] = {1.0};
    CHECK(m.predict(x) == 2.0);
}

TEST_CASE("model file round trip is bit-exact")
{
    auto const m = random_model(17);
    auto const path = std::filesystem::temp_directory_path() / "irsthz_rt.model";
    save_model(m, path.string());
    auto const r = load_model(path.string());
    CHECK(r.pack() == m.pack());
    Philox4x32 rng(4, 0);
    for (int i = 0; i < 100; ++i)
    {
        double const x[2] = {1 + 100 * rng.uniform(), 0.01 + 3 * rng.uniform()};
        REQUIRE(r.predict(x) == m.predict(x));
    }
    std::filesystem::remove(path);
}

TEST_CASE("model format policy")
{
    std::string const text = serialize_model(random_model(3));
    CHECK_THROWS_AS(deserialize_model(text.substr(0, text.size() / 2)),
                    ModelFormatError);

    std::string tampered = text;
    tampered[tampered.size() / 3] ^= 1;
    CHECK_THROWS_AS(deserialize_model(tampered), ModelFormatError);

    std::vector<std::string> warnings;
    auto newer = patch_model(text, "irsthz-mlp 1.0", "irsthz-mlp 1.7");
    CHECK_NOTHROW(deserialize_model(newer, &warnings));
    CHECK(warnings.size() == 1);

    auto major = patch_model(text, "irsthz-mlp 1.0", "irsthz-mlp 2.0");
    CHECK_THROWS_AS(deserialize_model(major), ModelFormatError);

    CHECK_THROWS_AS(load_model("/nonexistent/dir/model.txt"), IoError);
}

TEST_CASE("op dataset rows")
{
    auto const d = generate_op_dataset(400, {}, 9);
    CHECK(d.rows() == 400);
    std::set<std::pair<double, double>> seen;
    for (Eigen::Index i = 0; i < d.rows(); ++i)
    {
        double const n1 = d.inputs(i, 0);
        double const n2 = d.inputs(i, 1);
        seen.insert({n1, n2});
        // P(N1, N1 N2) equals the closed form on a unit-scale link
        LseParams lse;
        lse.lambda = 1;
        lse.tau = n1 - 1;
        double const th = n1 * n2 * n1 * n2;
        REQUIRE(d.targets(i) == Approx(outage_probability(lse, 1, th)).epsilon(1e-12));
        REQUIRE(d.targets(i) >= min_dataset_target);
    }
    CHECK(seen.size() == 400);
    CHECK(generate_op_dataset(400, {}, 9).hash() == d.hash());
}

TEST_CASE("features of a concrete link reproduce the metrics")
{
    Scenario sc;
    auto const lse = lse_params(sc);
    double const l0 = 3.0 / (lse.mean * lse.mean);
    double const th = 2.0;
    auto const f = op_features(lse, l0, th);
    CHECK(op_target(f[0], f[1])
          == Approx(outage_probability(lse, l0, th)).epsilon(1e-10));

    RqamSpec spec{8, 4};
    auto const g = aser_features(8, 4, lse, l0);
    CHECK(aser_target(8, 4, g[2], g[3])
          == Approx(aser_rqam(spec, lse, l0)).epsilon(1e-10));
}

TEST_CASE("aser dataset rows")
{
    AserDatasetGrid g;
    g.orders = {2, 8};
    g.points = 3;
    g.lo = 0.5;
    g.hi = 8;
    g.threads = 2;
    auto const d = generate_aser_dataset(g);
    CHECK(d.generated == 36);
    CHECK(d.rows() == 36);
    for (Eigen::Index i = 0; i < d.rows(); ++i)
    {
        RqamSpec spec;
        spec.mi = static_cast<int>(d.inputs(i, 0));
        spec.mq = static_cast<int>(d.inputs(i, 1));
        LseParams lse;
        lse.lambda = 1;
        lse.tau = d.inputs(i, 2) - 1;
        double const s = d.inputs(i, 3);
        REQUIRE(d.targets(i) == Approx(aser_rqam(spec, lse, s * s)).epsilon(1e-12));
    }
}

TEST_CASE("dataset csv round trip")
{
    auto const d = generate_op_dataset(50, {}, 2);
    auto const path = std::filesystem::temp_directory_path() / "irsthz_ds.csv";
    write_dataset_csv(d, path.string());
    auto const r = read_dataset_csv(path.string());
    CHECK(r.hash() == d.hash());
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_dataset_csv(path.string()), IoError);
}

TEST_CASE("training on a constant target")
{
    Dataset d;
    d.input_names = {"a", "b"};
    d.inputs.resize(60, 2);
    d.targets.resize(60);
    for (int i = 0; i < 60; ++i)
    {
        d.inputs(i, 0) = 1 + i;
        d.inputs(i, 1) = 0.1 * (1 + (i * 7) % 13);
        d.targets(i) = 1e-3;
    }
    auto r = train_mlp(MlpSpec::op_net(), {InputTransform::log10, InputTransform::log10},
                       OutputTransform::neg_log10, d, quick_config(50));
    CHECK(r.model.meta.train_mse < 1e-12);
    double const x[2] = {7.0, 0.4};
    CHECK(r.model.predict_transformed(x) == Approx(3).epsilon(1e-6));
}

TEST_CASE("training is reproducible and restores the best weights")
{
    auto const d = generate_op_dataset(300, {}, 4);
    auto const spec = MlpSpec::op_net();
    auto const in = surrogate_input_transforms(SurrogateKind::op);
    auto a = train_mlp(spec, in, OutputTransform::neg_log10, d, quick_config(30));
    auto b = train_mlp(spec, in, OutputTransform::neg_log10, d, quick_config(30));
    CHECK(a.model.pack() == b.model.pack());
    CHECK(a.split.train.size() == 210);
    CHECK(a.split.val.size() == 45);
    CHECK(a.split.test.size() == 45);

    double best = a.val_curve.front();
    for (double v : a.val_curve)
        best = std::min(best, v);
    CHECK(a.model.meta.val_mse == Approx(best).epsilon(1e-12));
    CHECK(a.model.meta.val_mse < a.val_curve.front());

    // A model scored on its own predictions fits perfectly
    Dataset self = subset(d, a.split.test);
    for (Eigen::Index i = 0; i < self.rows(); ++i)
    {
        double const x[2] = {self.inputs(i, 0), self.inputs(i, 1)};
        self.targets(i) = a.model.predict(x);
    }
    auto const e = evaluate_model(a.model, self);
    CHECK(e.mse < 1e-20);
    CHECK(e.correlation == Approx(1).epsilon(1e-12));
    CHECK(std::abs(e.intercept) < 1e-10);
}

TEST_CASE("first-order fallback under a memory budget")
{
    auto const d = generate_op_dataset(200, {}, 6);
    auto cfg = quick_config(40);
    cfg.lm_memory_limit_bytes = 1;
    auto r = train_mlp(MlpSpec::op_net(), surrogate_input_transforms(SurrogateKind::op),
                       OutputTransform::neg_log10, d, cfg);
    CHECK(r.model.meta.stop_reason.rfind("adam:", 0) == 0);
    CHECK(r.model.meta.val_mse < r.val_curve.front() + 1e-300);
}

TEST_CASE("training configuration is validated")
{
    TrainConfig cfg;
    cfg.train_fraction = 0.9;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg = TrainConfig{};
    cfg.max_fail = 0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
}
