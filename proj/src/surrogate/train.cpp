// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include "irsthz/surrogate/train.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "irsthz/montecarlo/philox.hpp"
#include "irsthz/specfun/errors.hpp"

namespace irsthz
{
namespace
{
constexpr Eigen::Index block_rows = 256;

using Clock = std::chrono::steady_clock;

// Scaled design matrix (features x samples) and scaled targets
struct Prepared
{
    Eigen::MatrixXd z;
    Eigen::VectorXd t;
};

Prepared prepare(MlpModel const& m, Dataset const& data,
                 std::vector<Eigen::Index> const& idx)
{
    int const n_in = m.spec.inputs();
    Prepared p;
    p.z.resize(n_in, static_cast<Eigen::Index>(idx.size()));
    p.t.resize(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k)
    {
        auto const r = idx[k];
        for (int i = 0; i < n_in; ++i)
            p.z(i, k) = m.input_scaling.apply(
                i, apply_transform(m.input_transforms[i], data.inputs(r, i)));
        p.t(k) = m.output_scaling.apply(
            0, target_to_transformed(m.output_transform, data.targets(r)));
    }
    return p;
}

// Forward pass over a column block; acts[l] holds layer l activations
void forward_block(MlpModel const& m, Eigen::Ref<Eigen::MatrixXd const> z,
                   std::vector<Eigen::MatrixXd>& acts)
{
    std::size_t const n_layers = m.weights.size();
    acts.resize(n_layers + 1);
    acts[0] = z;
    for (std::size_t l = 0; l < n_layers; ++l)
    {
        acts[l + 1] = m.weights[l] * acts[l];
        acts[l + 1].colwise() += m.biases[l];
        if (l + 1 < n_layers)
            acts[l + 1] = acts[l + 1].array().tanh().matrix();
    }
}

double sse(MlpModel const& m, Prepared const& p)
{
    std::vector<Eigen::MatrixXd> acts;
    double s = 0;
    for (Eigen::Index b0 = 0; b0 < p.z.cols(); b0 += block_rows)
    {
        Eigen::Index const nb = std::min(block_rows, p.z.cols() - b0);
        forward_block(m, p.z.middleCols(b0, nb), acts);
        s += (p.t.segment(b0, nb).transpose() - acts.back()).squaredNorm();
    }
    return s;
}

/*!
 * Jacobian of the network output with respect to the packed parameters for
 * one block (rows = samples), plus the residuals target - output.
 */
void jacobian_block(MlpModel const& m, Eigen::Ref<Eigen::MatrixXd const> z,
                    Eigen::Ref<Eigen::VectorXd const> t,
                    std::vector<Eigen::MatrixXd>& acts, Eigen::MatrixXd& jac,
                    Eigen::VectorXd& resid)
{
    Eigen::Index const nb = z.cols();
    forward_block(m, z, acts);
    resid = t - acts.back().transpose();
    jac.resize(nb, m.spec.n_params());

    std::size_t const n_layers = m.weights.size();
    std::vector<Eigen::Index> offset(n_layers);
    Eigen::Index off = 0;
    for (std::size_t l = 0; l < n_layers; ++l)
    {
        offset[l] = off;
        off += m.weights[l].size() + m.biases[l].size();
    }

    Eigen::MatrixXd delta = Eigen::MatrixXd::Ones(1, nb);
    for (std::size_t l = n_layers; l-- > 0;)
    {
        auto const& a = acts[l];
        Eigen::Index const n_out = m.weights[l].rows();
        Eigen::Index const n_in = m.weights[l].cols();
        Eigen::Index col = offset[l];
        for (Eigen::Index i = 0; i < n_out; ++i)
            for (Eigen::Index j = 0; j < n_in; ++j)
                jac.col(col++) = (delta.row(i).array() * a.row(j).array())
                                     .transpose();
        for (Eigen::Index i = 0; i < n_out; ++i)
            jac.col(col++) = delta.row(i).transpose();
        if (l > 0)
        {
            Eigen::MatrixXd next = m.weights[l].transpose() * delta;
            delta = next.array() * (1 - a.array().square());
        }
    }
}

void initialize(MlpModel& m, InitScheme scheme, Philox4x32& rng)
{
    auto uniform_pm = [&rng] { return 2 * rng.uniform() - 1; };
    std::size_t const n_layers = m.weights.size();
    for (std::size_t l = 0; l < n_layers; ++l)
    {
        auto& w = m.weights[l];
        auto& b = m.biases[l];
        bool const hidden = l + 1 < n_layers;
        if (scheme == InitScheme::nguyen_widrow && hidden)
        {
            double const beta
                = 0.7 * std::pow(static_cast<double>(w.rows()),
                                 1.0 / static_cast<double>(w.cols()));
            for (Eigen::Index i = 0; i < w.rows(); ++i)
            {
                for (Eigen::Index j = 0; j < w.cols(); ++j)
                    w(i, j) = uniform_pm();
                double const norm = w.row(i).norm();
                if (norm > 0)
                    w.row(i) *= beta / norm;
                b(i) = beta * uniform_pm();
            }
        }
        else
        {
            double const limit = std::sqrt(
                6.0 / static_cast<double>(w.rows() + w.cols()));
            for (Eigen::Index i = 0; i < w.rows(); ++i)
                for (Eigen::Index j = 0; j < w.cols(); ++j)
                    w(i, j) = limit * uniform_pm();
            b.setZero();
        }
    }
}

MinMaxScaling fit_scaling(std::vector<std::vector<double>> const& cols)
{
    MinMaxScaling s;
    for (auto const& c : cols)
    {
        auto const [lo, hi] = std::minmax_element(c.begin(), c.end());
        s.lo.push_back(*lo);
        s.hi.push_back(*hi);
    }
    return s;
}

double elapsed(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}
}  // namespace

//---------------------------------------------------------------------------//
void TrainConfig::validate() const
{
    require(max_epochs >= 1, "train: max_epochs must be positive");
    require(train_fraction > 0 && val_fraction > 0 && test_fraction >= 0,
            "train: split fractions must be positive");
    require(std::abs(train_fraction + val_fraction + test_fraction - 1)
                < 1e-12,
            "train: split fractions must sum to 1");
    require(max_fail >= 1, "train: max_fail must be positive");
    require(mu_init > 0 && mu_decrease > 0 && mu_decrease < 1
                && mu_increase > 1 && mu_max > mu_init,
            "train: invalid damping schedule");
}

DataSplit split_dataset(Eigen::Index rows, TrainConfig const& cfg)
{
    cfg.validate();
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(rows));
    for (Eigen::Index i = 0; i < rows; ++i)
        perm[i] = i;
    Philox4x32 rng(cfg.seed, 1);
    for (std::size_t i = perm.size(); i > 1; --i)
    {
        auto const j = static_cast<std::size_t>(rng.next_u64() % i);
        std::swap(perm[i - 1], perm[j]);
    }
    auto const n_train = static_cast<std::size_t>(
        std::llround(cfg.train_fraction * static_cast<double>(rows)));
    auto const n_val = static_cast<std::size_t>(
        std::llround(cfg.val_fraction * static_cast<double>(rows)));
    DataSplit s;
    s.train.assign(perm.begin(), perm.begin() + n_train);
    s.val.assign(perm.begin() + n_train, perm.begin() + n_train + n_val);
    s.test.assign(perm.begin() + n_train + n_val, perm.end());
    return s;
}

Dataset subset(Dataset const& data, std::vector<Eigen::Index> const& idx)
{
    Dataset out;
    out.input_names = data.input_names;
    out.inputs.resize(static_cast<Eigen::Index>(idx.size()), data.inputs.cols());
    out.targets.resize(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k)
    {
        out.inputs.row(k) = data.inputs.row(idx[k]);
        out.targets(k) = data.targets(idx[k]);
    }
    out.generated = out.rows();
    return out;
}

//---------------------------------------------------------------------------//
TrainResult train_mlp(MlpSpec const& spec,
                      std::vector<InputTransform> const& inputs,
                      OutputTransform output, Dataset const& data,
                      TrainConfig const& cfg)
{
    cfg.validate();
    spec.validate();
    require(data.rows() >= 10, "train: dataset too small");
    require(data.inputs.cols() == spec.inputs(),
            "train: dataset arity does not match the network");
    for (Eigen::Index i = 0; i < data.rows(); ++i)
        require(std::isfinite(data.targets(i)), "train: non-finite target");

    auto const t0 = Clock::now();
    TrainResult res;
    res.model = MlpModel::zeros(spec, inputs, output);
    MlpModel& m = res.model;
    res.split = split_dataset(data.rows(), cfg);

    // Scaling fitted on the training split only
    {
        std::vector<std::vector<double>> cols(spec.inputs());
        std::vector<std::vector<double>> outs(1);
        for (auto r : res.split.train)
        {
            for (int i = 0; i < spec.inputs(); ++i)
                cols[i].push_back(
                    apply_transform(inputs[i], data.inputs(r, i)));
            outs[0].push_back(target_to_transformed(output, data.targets(r)));
        }
        m.input_scaling = fit_scaling(cols);
        m.output_scaling = fit_scaling(outs);
    }
    double const out_half_span
        = 0.5 * (m.output_scaling.hi[0] - m.output_scaling.lo[0]);
    double const mse_factor = out_half_span * out_half_span;

    Prepared const tr = prepare(m, data, res.split.train);
    Prepared const va = prepare(m, data, res.split.val);
    Prepared const te = prepare(m, data, res.split.test);
    auto mse_of = [&](Prepared const& p) {
        return p.t.size() ? mse_factor * sse(m, p) / p.t.size() : 0.0;
    };

    Philox4x32 rng(cfg.seed, 2);
    initialize(m, cfg.init, rng);

    Eigen::Index const n_par = spec.n_params();
    Eigen::VectorXd theta = m.pack();
    Eigen::VectorXd best = theta;
    double best_val = mse_of(va);
    int best_epoch = 0;
    int fails = 0;
    std::string stop = "max_epochs";
    int epoch = 0;

    bool const use_lm = static_cast<std::size_t>(n_par) * n_par * sizeof(double)
                        <= cfg.lm_memory_limit_bytes;
    std::vector<Eigen::MatrixXd> acts;
    Eigen::MatrixXd jac;
    Eigen::VectorXd resid;

    if (use_lm)
    {
        double mu = cfg.mu_init;
        Eigen::MatrixXd jtj(n_par, n_par);
        Eigen::VectorXd grad(n_par);
        for (epoch = 1; epoch <= cfg.max_epochs; ++epoch)
        {
            jtj.setZero();
            grad.setZero();
            double cur = 0;
            for (Eigen::Index b0 = 0; b0 < tr.z.cols(); b0 += block_rows)
            {
                Eigen::Index const nb = std::min(block_rows, tr.z.cols() - b0);
                jacobian_block(m, tr.z.middleCols(b0, nb), tr.t.segment(b0, nb),
                               acts, jac, resid);
                jtj.selfadjointView<Eigen::Lower>().rankUpdate(
                    jac.transpose());
                grad.noalias() += jac.transpose() * resid;
                cur += resid.squaredNorm();
            }
            jtj.triangularView<Eigen::StrictlyUpper>()
                = jtj.transpose().triangularView<Eigen::StrictlyUpper>();
            if (2 * grad.norm() < cfg.min_gradient)
            {
                stop = "min_gradient";
                break;
            }
            bool accepted = false;
            while (mu <= cfg.mu_max)
            {
                Eigen::MatrixXd h = jtj;
                h.diagonal().array() += mu;
                Eigen::LDLT<Eigen::MatrixXd> ldlt(h);
                if (ldlt.info() == Eigen::Success)
                {
                    Eigen::VectorXd const step = ldlt.solve(grad);
                    m.unpack(theta + step);
                    double const trial = sse(m, tr);
                    if (std::isfinite(trial) && trial < cur)
                    {
                        theta += step;
                        mu = std::max(mu * cfg.mu_decrease, 1e-20);
                        accepted = true;
                        break;
                    }
                }
                mu *= cfg.mu_increase;
            }
            m.unpack(theta);
            if (!accepted)
            {
                stop = "mu_max";
                break;
            }
            double const tr_mse = mse_of(tr);
            double const va_mse = mse_of(va);
            res.train_curve.push_back(tr_mse);
            res.val_curve.push_back(va_mse);
            if (cfg.on_epoch)
                cfg.on_epoch(epoch, tr_mse, va_mse);
            if (va_mse < best_val)
            {
                best_val = va_mse;
                best = theta;
                best_epoch = epoch;
                fails = 0;
            }
            else if (++fails >= cfg.max_fail)
            {
                stop = "validation_stop";
                break;
            }
            if (tr_mse <= cfg.goal_mse)
            {
                stop = "goal";
                break;
            }
            if (cfg.time_limit_s > 0 && elapsed(t0) > cfg.time_limit_s)
            {
                stop = "time_limit";
                break;
            }
        }
    }
    else
    {
        // Adam on mini-batches: bounded memory for large networks
        constexpr double lr = 1e-3, b1 = 0.9, b2 = 0.999, eps = 1e-8;
        Eigen::VectorXd mom = Eigen::VectorXd::Zero(n_par);
        Eigen::VectorXd vel = Eigen::VectorXd::Zero(n_par);
        long step_count = 0;
        for (epoch = 1; epoch <= cfg.max_epochs; ++epoch)
        {
            for (Eigen::Index b0 = 0; b0 < tr.z.cols(); b0 += block_rows)
            {
                Eigen::Index const nb = std::min(block_rows, tr.z.cols() - b0);
                jacobian_block(m, tr.z.middleCols(b0, nb), tr.t.segment(b0, nb),
                               acts, jac, resid);
                Eigen::VectorXd const g
                    = -2.0 / nb * (jac.transpose() * resid);
                ++step_count;
                mom = b1 * mom + (1 - b1) * g;
                vel = b2 * vel + (1 - b2) * g.cwiseProduct(g);
                double const c1 = 1 - std::pow(b1, step_count);
                double const c2 = 1 - std::pow(b2, step_count);
                theta -= lr
                         * ((mom / c1).array()
                            / ((vel / c2).array().sqrt() + eps))
                               .matrix();
                m.unpack(theta);
            }
            double const tr_mse = mse_of(tr);
            double const va_mse = mse_of(va);
            res.train_curve.push_back(tr_mse);
            res.val_curve.push_back(va_mse);
            if (cfg.on_epoch)
                cfg.on_epoch(epoch, tr_mse, va_mse);
            if (va_mse < best_val)
            {
                best_val = va_mse;
                best = theta;
                best_epoch = epoch;
                fails = 0;
            }
            else if (++fails >= cfg.max_fail)
            {
                stop = "validation_stop";
                break;
            }
            if (cfg.time_limit_s > 0 && elapsed(t0) > cfg.time_limit_s)
            {
                stop = "time_limit";
                break;
            }
        }
    }

    m.unpack(best);
    m.meta.train_mse = mse_of(tr);
    m.meta.val_mse = mse_of(va);
    m.meta.test_mse = mse_of(te);
    m.meta.epochs = std::min(epoch, cfg.max_epochs);
    m.meta.best_epoch = best_epoch;
    m.meta.seed = cfg.seed;
    m.meta.data_hash = data.hash();
    m.meta.stop_reason = use_lm ? stop : "adam:" + stop;
    res.seconds = elapsed(t0);
    return res;
}

EvalMetrics evaluate_model(MlpModel const& model, Dataset const& data)
{
    require(data.rows() >= 1, "evaluate_model: empty dataset");
    Eigen::Index const n = data.rows();
    Eigen::VectorXd y(n);
    Eigen::VectorXd t(n);
    std::vector<double> row(static_cast<std::size_t>(data.inputs.cols()));
    for (Eigen::Index i = 0; i < n; ++i)
    {
        for (Eigen::Index j = 0; j < data.inputs.cols(); ++j)
            row[j] = data.inputs(i, j);
        y(i) = model.predict_transformed(row);
        t(i) = target_to_transformed(model.output_transform, data.targets(i));
    }
    EvalMetrics e;
    e.rows = n;
    e.mse = (y - t).squaredNorm() / static_cast<double>(n);
    double const mt = t.mean();
    double const my = y.mean();
    Eigen::ArrayXd const dt = t.array() - mt;
    Eigen::ArrayXd const dy = y.array() - my;
    double const stt = (dt * dt).sum();
    double const syy = (dy * dy).sum();
    double const sty = (dt * dy).sum();
    if (stt > 0 && syy > 0)
        e.correlation = sty / std::sqrt(stt * syy);
    else
        e.correlation = (y - t).squaredNorm() == 0 ? 1 : 0;
    e.slope = stt > 0 ? sty / stt : 1;
    e.intercept = my - e.slope * mt;
    return e;
}

//---------------------------------------------------------------------------//
MlpSpec surrogate_spec(SurrogateKind kind)
{
    return kind == SurrogateKind::op ? MlpSpec::op_net() : MlpSpec::aser_net();
}

std::vector<InputTransform> surrogate_input_transforms(SurrogateKind kind)
{
    using T = InputTransform;
    if (kind == SurrogateKind::op)
        return {T::log10, T::log10};
    return {T::identity, T::identity, T::log10, T::log10};
}

//---------------------------------------------------------------------------//
BenchResult benchmark_surrogate(SurrogateKind kind, MlpModel const& model,
                                int samples, std::uint64_t seed)
{
    require(samples >= 1, "benchmark: need at least one sample");
    std::size_t const n_in = kind == SurrogateKind::op ? 2 : 4;
    require(model.spec.layer_sizes.front() == static_cast<int>(n_in),
            "benchmark: model input count does not match the surrogate kind");

    Philox4x32 rng(seed, 3);
    auto log_uniform = [&rng](double lo, double hi) {
        return std::exp(std::log(lo) + (std::log(hi) - std::log(lo))
                                           * rng.uniform());
    };
    std::vector<double> inputs(samples * n_in);
    if (kind == SurrogateKind::op)
    {
        OpDatasetRanges const r;
        for (int i = 0; i < samples; ++i)
        {
            inputs[2 * i] = log_uniform(r.n1_lo, r.n1_hi);
            inputs[2 * i + 1] = log_uniform(r.n2_lo, r.n2_hi);
        }
    }
    else
    {
        AserDatasetGrid const g;
        for (int i = 0; i < samples; ++i)
        {
            double* row = &inputs[4 * i];
            row[0] = g.orders[rng.next_u32() % g.orders.size()];
            row[1] = g.orders[rng.next_u32() % g.orders.size()];
            row[2] = log_uniform(g.lo, g.hi);
            row[3] = log_uniform(g.lo, g.hi);
        }
    }

    using clock = std::chrono::steady_clock;
    std::vector<double> exact(samples);
    auto t0 = clock::now();
    for (int i = 0; i < samples; ++i)
    {
        double const* row = &inputs[n_in * i];
        exact[i] = kind == SurrogateKind::op
                       ? op_target(row[0], row[1])
                       : aser_target(static_cast<int>(row[0]),
                                     static_cast<int>(row[1]), row[2], row[3]);
    }
    auto t1 = clock::now();
    std::vector<double> pred(samples);
    for (int i = 0; i < samples; ++i)
        pred[i] = model.predict_transformed(
            std::span<double const>(&inputs[n_in * i], n_in));
    auto t2 = clock::now();

    BenchResult r;
    r.samples = samples;
    r.closed_form_seconds = std::chrono::duration<double>(t1 - t0).count();
    r.surrogate_seconds = std::chrono::duration<double>(t2 - t1).count();
    double sse = 0;
    for (int i = 0; i < samples; ++i)
    {
        if (!(exact[i] >= min_dataset_target))
            continue;
        double const d
            = pred[i] - target_to_transformed(model.output_transform, exact[i]);
        sse += d * d;
        ++r.scored;
    }
    r.transformed_mse = r.scored > 0 ? sse / r.scored : 0;
    return r;
}

}  // namespace irsthz
