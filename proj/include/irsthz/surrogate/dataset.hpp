// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "irsthz/channel/channel.hpp"

namespace irsthz
{
//! Targets below this are dropped: they dominate a -log10 loss
inline constexpr double min_dataset_target = 1e-30;

struct Dataset
{
    std::vector<std::string> input_names;
    Eigen::MatrixXd inputs;  //!< one row per sample, raw (untransformed)
    Eigen::VectorXd targets;
    //! Grid or sample points that were generated before clipping
    std::int64_t generated = 0;

    Eigen::Index rows() const { return targets.size(); }
    //! FNV-1a over names and values
    std::string hash() const;
};

//---------------------------------------------------------------------------//
// Outage surrogate: inputs N1 = tau + 1, N2 = sqrt(lambda_th) / (mu_B
// sqrt(lambda0)); the outage probability is then P(N1, N1 N2).
//---------------------------------------------------------------------------//
struct OpDatasetRanges
{
    double n1_lo = 1;
    double n1_hi = 128;
    double n2_lo = 1e-2;
    double n2_hi = 4;
};

double op_target(double n1, double n2);

//! Surrogate inputs for a concrete link
std::array<double, 2> op_features(LseParams const& lse, double lambda0,
                                  double lambda_th);

//! Log-uniform sampling until n_samples rows survive clipping
Dataset generate_op_dataset(int n_samples, OpDatasetRanges const& ranges,
                            std::uint64_t seed);

//---------------------------------------------------------------------------//
// RQAM ASER surrogate: inputs (M_I, M_Q, tau + 1, Lambda sqrt(lambda0))
//---------------------------------------------------------------------------//
struct AserDatasetGrid
{
    std::vector<int> orders{2, 4, 8, 16};
    int points = 20;  //!< per continuous axis; 80 gives the full-scale set
    double lo = 1e-7;
    double hi = 200;
    int threads = 0;
};

double aser_target(int mi, int mq, double shape, double scale);

std::array<double, 4> aser_features(int mi, int mq, LseParams const& lse,
                                    double lambda0);

Dataset generate_aser_dataset(AserDatasetGrid const& grid);

//---------------------------------------------------------------------------//
void write_dataset_csv(Dataset const& data, std::string const& path);
Dataset read_dataset_csv(std::string const& path);

}  // namespace irsthz
