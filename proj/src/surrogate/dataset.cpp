// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include "irsthz/surrogate/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>
#include <utility>

#include "irsthz/channel/channel.hpp"
#include "irsthz/metrics/metrics.hpp"
#include "irsthz/montecarlo/philox.hpp"
#include "irsthz/specfun/errors.hpp"
#include "irsthz/specfun/gamma.hpp"
#include "irsthz/util/hash.hpp"

namespace irsthz
{
namespace
{
double log_uniform(Philox4x32& rng, double lo, double hi)
{
    double const a = std::log(lo);
    double const b = std::log(hi);
    return std::exp(a + (b - a) * rng.uniform());
}

std::string format_double(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace

std::string Dataset::hash() const
{
    Fnv1a h;
    for (auto const& n : input_names)
    {
        h.update(n);
        h.update(std::string_view(",", 1));
    }
    for (Eigen::Index i = 0; i < rows(); ++i)
    {
        for (Eigen::Index j = 0; j < inputs.cols(); ++j)
            h.update(inputs(i, j));
        h.update(targets(i));
    }
    return h.hex();
}

//---------------------------------------------------------------------------//
double op_target(double n1, double n2)
{
    if (!(n1 > 0) || !(n2 >= 0))
        throw DomainError("op_target: need n1 > 0 and n2 >= 0");
    return reg_lower_gamma(n1, n1 * n2);
}

std::array<double, 2> op_features(LseParams const& lse, double lambda0,
                                  double lambda_th)
{
    require(lambda0 > 0 && lambda_th > 0,
            "op features: lambda0 and lambda_th must be positive");
    return {lse.tau + 1, std::sqrt(lambda_th / lambda0) / lse.mean};
}

Dataset generate_op_dataset(int n_samples, OpDatasetRanges const& r,
                            std::uint64_t seed)
{
    require(n_samples >= 1, "op dataset: need at least one sample");
    require(r.n1_lo > 0 && r.n1_hi > r.n1_lo && r.n2_lo > 0
                && r.n2_hi > r.n2_lo,
            "op dataset: ranges must be positive and increasing");
    Dataset d;
    d.input_names = {"shape", "threshold_ratio"};
    d.inputs.resize(n_samples, 2);
    d.targets.resize(n_samples);
    Philox4x32 rng(seed, 0);
    std::set<std::pair<double, double>> seen;
    int kept = 0;
    while (kept < n_samples)
    {
        double const n1 = log_uniform(rng, r.n1_lo, r.n1_hi);
        double const n2 = log_uniform(rng, r.n2_lo, r.n2_hi);
        ++d.generated;
        double const p = op_target(n1, n2);
        if (!(p >= min_dataset_target) || !seen.insert({n1, n2}).second)
            continue;
        d.inputs(kept, 0) = n1;
        d.inputs(kept, 1) = n2;
        d.targets(kept) = p;
        ++kept;
    }
    return d;
}

//---------------------------------------------------------------------------//
double aser_target(int mi, int mq, double shape, double scale)
{
    RqamSpec spec;
    spec.mi = mi;
    spec.mq = mq;
    LseParams lse;
    lse.lambda = 1;
    lse.tau = shape - 1;
    // Only Lambda sqrt(lambda0) enters the SNR distribution
    return aser_rqam(spec, lse, scale * scale);
}

Dataset generate_aser_dataset(AserDatasetGrid const& g)
{
    require(!g.orders.empty(), "aser dataset: need modulation orders");
    require(g.points >= 2, "aser dataset: need at least two grid points");
    require(g.lo > 0 && g.hi > g.lo, "aser dataset: invalid axis range");
    std::vector<double> axis(g.points);
    for (int i = 0; i < g.points; ++i)
        axis[i] = std::exp(std::log(g.lo)
                           + (std::log(g.hi) - std::log(g.lo)) * i
                                 / (g.points - 1));

    struct Row
    {
        int mi, mq;
        double shape, scale, target;
    };
    std::vector<Row> rows;
    for (int mi : g.orders)
        for (int mq : g.orders)
            for (double shape : axis)
                for (double scale : axis)
                    rows.push_back({mi, mq, shape, scale, 0});

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < rows.size();)
        {
            auto& r = rows[i];
            r.target = aser_target(r.mi, r.mq, r.shape, r.scale);
        }
    };
    int threads = g.threads > 0
                      ? g.threads
                      : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(threads, 1);
    if (threads == 1)
    {
        worker();
    }
    else
    {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    Dataset d;
    d.input_names = {"mi", "mq", "shape", "scale"};
    d.generated = static_cast<std::int64_t>(rows.size());
    auto const kept = std::count_if(rows.begin(), rows.end(), [](Row const& r) {
        return r.target >= min_dataset_target;
    });
    d.inputs.resize(kept, 4);
    d.targets.resize(kept);
    Eigen::Index k = 0;
    for (auto const& r : rows)
    {
        if (!(r.target >= min_dataset_target))
            continue;
        d.inputs.row(k) << r.mi, r.mq, r.shape, r.scale;
        d.targets(k) = r.target;
        ++k;
    }
    return d;
}

std::array<double, 4> aser_features(int mi, int mq, LseParams const& lse,
                                    double lambda0)
{
    require(lambda0 > 0, "aser features: lambda0 must be positive");
    return {static_cast<double>(mi), static_cast<double>(mq), lse.tau + 1,
            lse.lambda * std::sqrt(lambda0)};
}

//---------------------------------------------------------------------------//
void write_dataset_csv(Dataset const& data, std::string const& path)
{
    std::ofstream out(path);
    if (!out)
        throw IoError("cannot write dataset '" + path + "'");
    for (auto const& n : data.input_names)
        out << n << ',';
    out << "target\n";
    for (Eigen::Index i = 0; i < data.rows(); ++i)
    {
        for (Eigen::Index j = 0; j < data.inputs.cols(); ++j)
            out << format_double(data.inputs(i, j)) << ',';
        out << format_double(data.targets(i)) << '\n';
    }
    if (!out)
        throw IoError("failed writing dataset '" + path + "'");
}

Dataset read_dataset_csv(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot read dataset '" + path + "'");
    std::string line;
    if (!std::getline(in, line))
        throw ConfigError(path + ": empty dataset file");
    Dataset d;
    {
        std::stringstream ss(line);
        std::string name;
        while (std::getline(ss, name, ','))
            d.input_names.push_back(name);
        if (d.input_names.size() < 2 || d.input_names.back() != "target")
            throw ConfigError(path + ":1: last column must be 'target'");
        d.input_names.pop_back();
    }
    std::size_t const n_in = d.input_names.size();
    std::vector<double> values;
    int line_no = 1;
    while (std::getline(in, line))
    {
        ++line_no;
        if (line.empty())
            continue;
        std::stringstream ss(line);
        std::string cell;
        std::size_t cols = 0;
        while (std::getline(ss, cell, ','))
        {
            try
            {
                values.push_back(std::stod(cell));
            }
            catch (std::exception const&)
            {
                throw ConfigError(path + ":" + std::to_string(line_no)
                                  + ": not a number '" + cell + "'");
            }
            ++cols;
        }
        if (cols != n_in + 1)
            throw ConfigError(path + ":" + std::to_string(line_no)
                              + ": wrong column count");
    }
    Eigen::Index const n = static_cast<Eigen::Index>(values.size() / (n_in + 1));
    d.inputs.resize(n, static_cast<Eigen::Index>(n_in));
    d.targets.resize(n);
    for (Eigen::Index i = 0; i < n; ++i)
    {
        for (std::size_t j = 0; j < n_in; ++j)
            d.inputs(i, static_cast<Eigen::Index>(j)) = values[i * (n_in + 1) + j];
        d.targets(i) = values[i * (n_in + 1) + n_in];
    }
    d.generated = n;
    return d;
}

}  // namespace irsthz
