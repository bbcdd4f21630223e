// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#pragma once

#include <complex>
#include <optional>
#include <vector>

namespace irsthz
{
//---------------------------------------------------------------------------//
/*!
 * One gamma factor argument, shift + scale * s.
 */
struct GammaTerm
{
    double shift = 0;
    double scale = 1;
};

//! Open interval of admissible contour abscissae (ends may be infinite).
struct Strip
{
    double lo;
    double hi;
    bool contains(double c) const { return c > lo && c < hi; }
    double width() const { return hi - lo; }
};

//---------------------------------------------------------------------------//
/*!
 * Parameters of a univariate Fox H-function H^{m,n}_{p,q}.
 *
 * The Mellin-Barnes kernel is
 * \f[
 *   \frac{\prod_{j\le m}\Gamma(b_j+B_j s)\prod_{i\le n}\Gamma(1-a_i-A_i s)}
 *        {\prod_{i>n}\Gamma(a_i+A_i s)\prod_{j>m}\Gamma(1-b_j-B_j s)}
 * \f]
 * integrated against z^{-s} along a vertical line. Construction rejects
 * parameter sets whose left and right pole families overlap or whose kernel
 * does not decay along vertical lines.
 */
class FoxHSpec
{
  public:
    FoxHSpec(int m, int n, std::vector<GammaTerm> upper,
             std::vector<GammaTerm> lower);

    //! Meijer G-function: all scales equal to one
    static FoxHSpec meijer_g(int m, int n, std::vector<double> const& a,
                             std::vector<double> const& b);

    int m() const { return m_; }
    int n() const { return n_; }
    int p() const { return static_cast<int>(upper_.size()); }
    int q() const { return static_cast<int>(lower_.size()); }
    std::vector<GammaTerm> const& upper() const { return upper_; }
    std::vector<GammaTerm> const& lower() const { return lower_; }

    Strip strip() const { return strip_; }
    //! Exponential decay rate parameter along vertical lines
    double decay() const { return decay_; }

    //! Log of the kernel (without z^{-s}); -inf real part where it vanishes
    std::complex<double> log_kernel(std::complex<double> s) const;

  private:
    int m_;
    int n_;
    std::vector<GammaTerm> upper_;
    std::vector<GammaTerm> lower_;
    Strip strip_;
    double decay_;
};

//---------------------------------------------------------------------------//
struct ContourConfig
{
    //! Abscissa of the vertical contour; chosen automatically when unset
    std::optional<double> offset;
    //! Initial half-extent of the truncated line (0 selects automatically)
    double half_extent = 0;
    //! Initial trapezoid nodes on [0, half_extent]; at least 64
    int nodes = 64;
    double target_rel_tol = 1e-11;
    int max_refinements = 16;
};

struct FoxHResult
{
    double value = 0;
    double error_estimate = 0;
    double offset = 0;
    double half_extent = 0;
    long nodes = 0;
    int refinements = 0;
    //! Result below the smallest normal double; value is zero
    bool underflow = false;
};

// Evaluate exp(log_prefactor) * H(z) for z > 0.
FoxHResult fox_h(FoxHSpec const& spec, double z, ContourConfig const& cfg = {},
                 double log_prefactor = 0);

// Convenience: value only.
double fox_h_univariate(FoxHSpec const& spec, double z,
                        ContourConfig const& cfg = {});

//---------------------------------------------------------------------------//
/*!
 * Gamma argument shared by both integration variables, shift + a r + b s.
 */
struct JointTerm
{
    double shift = 0;
    double scale_r = 1;
    double scale_s = 1;
};

/*!
 * Bivariate Fox H-function of the product-kernel type.
 *
 * Kernel: K1(r) K2(s) J(r, s) z1^{-r} z2^{-s}, where K1 and K2 are
 * univariate kernels and the joint factor is
 * \f[
 *  J = \frac{\prod_{i<n}\Gamma(1-a_i-\alpha_i r-\beta_i s)}
 *           {\prod_{i\ge n}\Gamma(a_i+\alpha_i r+\beta_i s)
 *            \prod_j\Gamma(1-c_j-\gamma_j r-\delta_j s)} .
 * \f]
 */
class BivariateFoxHSpec
{
  public:
    BivariateFoxHSpec(int n_joint, std::vector<JointTerm> joint_upper,
                      std::vector<JointTerm> joint_lower, FoxHSpec first,
                      FoxHSpec second);

    FoxHSpec const& first() const { return first_; }
    FoxHSpec const& second() const { return second_; }
    int n_joint() const { return n_joint_; }
    std::vector<JointTerm> const& joint_upper() const { return joint_upper_; }
    std::vector<JointTerm> const& joint_lower() const { return joint_lower_; }

    std::complex<double> log_joint(std::complex<double> r,
                                   std::complex<double> s) const;
    //! True if (r, s) keeps every joint numerator argument positive
    bool admissible(double r, double s, double margin = 0) const;

  private:
    int n_joint_;
    std::vector<JointTerm> joint_upper_;
    std::vector<JointTerm> joint_lower_;
    FoxHSpec first_;
    FoxHSpec second_;
};

struct BivariateContourConfig
{
    std::optional<double> offset_r;
    std::optional<double> offset_s;
    int nodes = 64;
    double target_rel_tol = 1e-9;
    int max_refinements = 8;
};

struct BivariateResult
{
    double value = 0;
    //! |Im| / |Re| of the raw complex estimate
    double imag_residue = 0;
    double error_estimate = 0;
    double offset_r = 0;
    double offset_s = 0;
    long nodes_r = 0;
    long nodes_s = 0;
    bool underflow = false;
};

// Evaluate exp(log_prefactor) * H(z1, z2) for z1, z2 > 0.
BivariateResult fox_h_bivariate(BivariateFoxHSpec const& spec, double z1,
                                double z2,
                                BivariateContourConfig const& cfg = {},
                                double log_prefactor = 0);

}  // namespace irsthz
