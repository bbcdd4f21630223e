// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include "irsthz/montecarlo/simulate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <numbers>
#include <thread>

#include "irsthz/montecarlo/sampling.hpp"
#include "irsthz/specfun/errors.hpp"
#include "irsthz/specfun/quadrature.hpp"

namespace irsthz
{
namespace
{
struct Accumulator
{
    double sum = 0;
    double sum_sq = 0;
    std::int64_t count = 0;

    void add(double x)
    {
        sum += x;
        sum_sq += x * x;
        ++count;
    }
};

using ChunkFn = std::function<void(std::int64_t chunk, Philox4x32& rng,
                                   std::int64_t begin, std::int64_t count)>;

// Runs every chunk exactly once on a private stream; scheduling order does
// not affect results because each chunk writes only its own slot.
void run_chunks(McConfig const& mc, ChunkFn const& fn)
{
    mc.validate();
    std::int64_t const n_chunks = (mc.trials + mc.chunk - 1) / mc.chunk;
    int threads = mc.threads > 0
                      ? mc.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    threads = static_cast<int>(
        std::clamp<std::int64_t>(threads, 1, n_chunks));

    std::atomic<std::int64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;)
        {
            std::int64_t const c = next.fetch_add(1);
            if (c >= n_chunks)
                return;
            try
            {
                std::int64_t const begin = c * mc.chunk;
                std::int64_t const count
                    = std::min(mc.chunk, mc.trials - begin);
                Philox4x32 rng(mc.seed, static_cast<std::uint64_t>(c));
                fn(c, rng, begin, count);
            }
            catch (...)
            {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
                next.store(n_chunks);
            }
        }
    };
    if (threads == 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }
    if (failure)
        std::rethrow_exception(failure);
}

// Mean estimator over per-trial samples, reduced in chunk order
McEstimate estimate_mean(McConfig const& mc,
                         std::function<double(Philox4x32&)> const& sample)
{
    std::int64_t const n_chunks = (mc.trials + mc.chunk - 1) / mc.chunk;
    std::vector<Accumulator> parts(std::max<std::int64_t>(n_chunks, 0));
    run_chunks(mc, [&](std::int64_t c, Philox4x32& rng, std::int64_t,
                       std::int64_t count) {
        Accumulator acc;
        for (std::int64_t i = 0; i < count; ++i)
            acc.add(sample(rng));
        parts[c] = acc;
    });
    Accumulator total;
    for (auto const& p : parts)
    {
        total.sum += p.sum;
        total.sum_sq += p.sum_sq;
        total.count += p.count;
    }
    McEstimate est;
    double const n = static_cast<double>(total.count);
    est.value = total.sum / n;
    double const var
        = std::max(0.0, (total.sum_sq - total.sum * est.value) / (n - 1));
    est.std_error = std::sqrt(var / n);
    est.trials_used = total.count;
    return est;
}

void check_lambda0(double lambda0)
{
    if (!(lambda0 >= 0) || !std::isfinite(lambda0))
        throw DomainError("simulation: lambda0 must be finite and >= 0");
}

// One dimension of threshold detection: level index uniform on 0..m-1,
// unit-variance noise, decision thresholds at +-d around each level.
bool dimension_error(int m, double d, Philox4x32& rng)
{
    auto const level = static_cast<int>(rng.next_u32()
                                        & static_cast<std::uint32_t>(m - 1));
    double const n = sample_normal(rng);
    return (level > 0 && n < -d) || (level < m - 1 && n > d);
}
}  // namespace

//---------------------------------------------------------------------------//
void PhaseModel::validate() const
{
    if (kind == Kind::quantized)
        require(q_bits >= 1 && q_bits <= 16,
                "phase model: quantizer bits must be in [1, 16]");
}

double PhaseModel::width() const
{
    switch (kind)
    {
        case Kind::ideal: return 0;
        case Kind::quantized:
            return 2 * std::numbers::pi / static_cast<double>(1 << q_bits);
        case Kind::random: return 2 * std::numbers::pi;
    }
    return 0;
}

void McConfig::validate() const
{
    require(trials >= 1000, "mc: at least 1000 trials required");
    require(chunk >= 1, "mc: chunk must be positive");
    require(threads >= 0, "mc: threads must be >= 0");
}

//---------------------------------------------------------------------------//
double sample_composite_gain(Scenario const& sc, PhaseModel const& phase,
                             Philox4x32& rng)
{
    double const width = phase.width();
    double re = 0;
    double im = 0;
    for (int j = 0; j < sc.n_elements; ++j)
    {
        double const g = sample_hop(sc.hop1, rng) * sample_hop(sc.hop2, rng);
        double const theta = width * (rng.uniform() - 0.5);
        if (width == 0)
        {
            re += g;
        }
        else
        {
            re += g * std::cos(theta);
            im += g * std::sin(theta);
        }
    }
    return std::hypot(re, im);
}

std::vector<double> sample_composite_gains(Scenario const& sc,
                                           PhaseModel const& phase,
                                           McConfig const& mc)
{
    sc.validate();
    phase.validate();
    mc.validate();
    std::vector<double> out(static_cast<std::size_t>(mc.trials));
    run_chunks(mc, [&](std::int64_t, Philox4x32& rng, std::int64_t begin,
                       std::int64_t count) {
        for (std::int64_t i = 0; i < count; ++i)
            out[begin + i] = sample_composite_gain(sc, phase, rng);
    });
    return out;
}

McEstimate simulate_outage(Scenario const& sc, double lambda0,
                           PhaseModel const& phase, double lambda_th,
                           McConfig const& mc)
{
    sc.validate();
    phase.validate();
    check_lambda0(lambda0);
    if (!(lambda_th >= 0))
        throw DomainError("simulate_outage: threshold must be >= 0");
    return estimate_mean(mc, [&](Philox4x32& rng) {
        double const b = sample_composite_gain(sc, phase, rng);
        return lambda0 * b * b < lambda_th ? 1.0 : 0.0;
    });
}

McEstimate simulate_ser_rqam(RqamSpec const& spec, Scenario const& sc,
                             double lambda0, PhaseModel const& phase,
                             McConfig const& mc)
{
    sc.validate();
    phase.validate();
    check_lambda0(lambda0);
    auto const c = rqam_constants(spec);
    return estimate_mean(mc, [&](Philox4x32& rng) {
        double const b = sample_composite_gain(sc, phase, rng);
        double const root = std::sqrt(lambda0) * b;
        bool const ei = dimension_error(spec.mi, c.a * root, rng);
        bool const eq = dimension_error(spec.mq, c.b * root, rng);
        return ei || eq ? 1.0 : 0.0;
    });
}

McEstimate simulate_ser_hqam(HqamSpec const& spec, Scenario const& sc,
                             double lambda0, PhaseModel const& phase,
                             McConfig const& mc)
{
    sc.validate();
    phase.validate();
    check_lambda0(lambda0);
    ConditionalSepTable const table(hqam_sep_derivative(spec));
    return estimate_mean(mc, [&](Philox4x32& rng) {
        double const b = sample_composite_gain(sc, phase, rng);
        return table(lambda0 * b * b);
    });
}

McEstimate simulate_capacity(Scenario const& sc, double lambda0,
                             PhaseModel const& phase, McConfig const& mc)
{
    sc.validate();
    phase.validate();
    check_lambda0(lambda0);
    return estimate_mean(mc, [&](Philox4x32& rng) {
        double const b = sample_composite_gain(sc, phase, rng);
        return std::log2(1 + lambda0 * b * b);
    });
}

//---------------------------------------------------------------------------//
ConditionalSepTable::ConditionalSepTable(SepDerivative deriv)
    : deriv_(std::move(deriv))
{
    constexpr int intervals = 4096;
    double const rate = deriv_.decay_rate();
    if (!(rate > 0) || !std::isfinite(rate))
        throw DomainError("conditional SEP table: derivative must decay");
    // exp(-690) ~ 1e-300 bounds the mass beyond the last node
    double const t_max = std::sqrt(690 / rate);
    double const h = t_max / intervals;

    // In t = sqrt(l): dP/dt = 2 t P'(t^2), finite at t = 0
    auto neg_density = [this](double t) {
        if (t <= 0)
        {
            // 2 t coef t^{-1} e^0 for each power term
            double s = 0;
            for (auto const& p : deriv_.power)
                s -= 2 * p.coef;
            return s;
        }
        return -2 * t * deriv_(t * t);
    };

    t_.resize(intervals + 1);
    values_.resize(intervals + 1);
    slopes_.resize(intervals + 1);
    for (int k = 0; k <= intervals; ++k)
        t_[k] = k * h;

    // Segments are short against the analytic integrand, so one
    // Gauss-Kronrod panel each is exact to rounding; adaptivity would only
    // chase the cancellation noise between terms deep in the tail.
    QuadOptions tail_opts;
    tail_opts.rel_tol = 1e-12;
    QuadOptions panel;
    panel.max_intervals = 1;
    values_[intervals]
        = std::max(0.0, integrate_to_infinity(neg_density, t_max, tail_opts)
                            .value);
    for (int k = intervals - 1; k >= 0; --k)
        values_[k] = values_[k + 1]
                     + std::max(0.0, integrate(neg_density, t_[k], t_[k + 1],
                                               panel)
                                         .value);
    for (int k = 0; k <= intervals; ++k)
        slopes_[k] = -neg_density(t_[k]);
}

double ConditionalSepTable::operator()(double lambda) const
{
    if (!(lambda >= 0))
        throw DomainError("conditional SEP table: lambda must be >= 0");
    double const t = std::sqrt(lambda);
    double const h = t_[1] - t_[0];
    auto const k = static_cast<std::size_t>(t / h);
    if (k + 1 >= t_.size())
        return 0;
    double const v0 = values_[k];
    double const v1 = values_[k + 1];
    double const x = (t - t_[k]) / h;
    double const x2 = x * x;
    double const x3 = x2 * x;
    double v;
    if (v1 > 0)
    {
        // Hermite in log P keeps relative accuracy deep in the tail
        double const y0 = std::log(v0);
        double const y1 = std::log(v1);
        double const m0 = h * slopes_[k] / v0;
        double const m1 = h * slopes_[k + 1] / v1;
        double const y = (2 * x3 - 3 * x2 + 1) * y0 + (x3 - 2 * x2 + x) * m0
                         + (-2 * x3 + 3 * x2) * y1 + (x3 - x2) * m1;
        v = std::exp(std::clamp(y, y1, y0));
    }
    else
    {
        v = (1 - x) * v0;
    }
    return v;
}

}  // namespace irsthz
