// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include "irsthz/specfun/fox_h.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "irsthz/specfun/errors.hpp"
#include "irsthz/specfun/gamma.hpp"

namespace irsthz
{
namespace
{
using cplx = std::complex<double>;

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double eps = std::numeric_limits<double>::epsilon();
// Integrand magnitude (relative to its value on the real axis) below which
// the tail of the line is dropped: e^-46 ~ 1e-20
constexpr double log_tail_cut = -46.0;
// Largest half-extent considered before giving up
constexpr double max_half_extent = 1e5;

// Search window [a, b] inside a strip, keeping away from the pole families
std::pair<double, double> search_window(Strip s)
{
    bool const lo_fin = std::isfinite(s.lo);
    bool const hi_fin = std::isfinite(s.hi);
    if (lo_fin && hi_fin)
    {
        double const margin = std::min(0.25, 0.2 * s.width());
        return {s.lo + margin, s.hi - margin};
    }
    if (lo_fin)
        return {s.lo + 0.25, s.lo + 40.0};
    if (hi_fin)
        return {s.hi - 40.0, s.hi - 0.25};
    return {-20.0, 20.0};
}

double pole_distance(Strip s, double c)
{
    double d = std::min(c - s.lo, s.hi - c);
    return std::isfinite(d) ? d : 1.0;
}

// Minimize a one-dimensional function over [a, b]: coarse grid then golden
double minimize_1d(std::function<double(double)> const& phi, double a, double b)
{
    constexpr int grid = 96;
    double best_c = 0.5 * (a + b);
    double best_v = inf;
    int best_i = grid / 2;
    for (int i = 0; i <= grid; ++i)
    {
        double const c = a + (b - a) * i / grid;
        double const v = phi(c);
        if (std::isfinite(v) && v < best_v)
        {
            best_v = v;
            best_c = c;
            best_i = i;
        }
    }
    double lo = a + (b - a) * std::max(0, best_i - 1) / grid;
    double hi = a + (b - a) * std::min(grid, best_i + 1) / grid;
    double const g = 0.5 * (std::sqrt(5.0) - 1);
    double x1 = hi - g * (hi - lo);
    double x2 = lo + g * (hi - lo);
    double f1 = phi(x1);
    double f2 = phi(x2);
    for (int it = 0; it < 40; ++it)
    {
        if (!(f1 > f2))
        {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - g * (hi - lo);
            f1 = phi(x1);
        }
        else
        {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + g * (hi - lo);
            f2 = phi(x2);
        }
    }
    double const c = 0.5 * (lo + hi);
    double const v = phi(c);
    return (std::isfinite(v) && v <= best_v) ? c : best_c;
}

// Scale a converged mantissa by exp(ref) with explicit over/underflow policy
std::pair<double, bool> rescale(double mantissa, double ref, char const* who)
{
    if (mantissa == 0)
        return {0.0, false};
    double const log_mag = ref + std::log(std::abs(mantissa));
    if (log_mag > 709.0)
        throw NumericError(std::string(who) + ": result overflows double");
    if (log_mag < -708.0)
        return {0.0, true};
    return {mantissa * std::exp(ref), false};
}

}  // namespace

//---------------------------------------------------------------------------//
// UNIVARIATE
//---------------------------------------------------------------------------//
FoxHSpec::FoxHSpec(int m, int n, std::vector<GammaTerm> upper,
                   std::vector<GammaTerm> lower)
    : m_(m), n_(n), upper_(std::move(upper)), lower_(std::move(lower))
{
    require(m_ >= 0 && m_ <= q(), "FoxHSpec: need 0 <= m <= q");
    require(n_ >= 0 && n_ <= p(), "FoxHSpec: need 0 <= n <= p");
    for (auto const& t : upper_)
        require(t.scale > 0 && std::isfinite(t.shift),
                "FoxHSpec: scales must be positive and shifts finite");
    for (auto const& t : lower_)
        require(t.scale > 0 && std::isfinite(t.shift),
                "FoxHSpec: scales must be positive and shifts finite");

    // Left poles of Gamma(b + B s) sit at s = -(b + k) / B
    strip_.lo = -inf;
    for (int j = 0; j < m_; ++j)
        strip_.lo = std::max(strip_.lo, -lower_[j].shift / lower_[j].scale);
    // Right poles of Gamma(1 - a - A s) sit at s = (1 - a + k) / A
    strip_.hi = inf;
    for (int i = 0; i < n_; ++i)
        strip_.hi = std::min(strip_.hi,
                             (1 - upper_[i].shift) / upper_[i].scale);
    require(strip_.lo < strip_.hi,
            "FoxHSpec: left and right pole families are not separable");

    decay_ = 0;
    for (int j = 0; j < q(); ++j)
        decay_ += (j < m_ ? 1 : -1) * lower_[j].scale;
    for (int i = 0; i < p(); ++i)
        decay_ += (i < n_ ? 1 : -1) * upper_[i].scale;
    require(decay_ > 0,
            "FoxHSpec: kernel does not decay along vertical contours");
}

FoxHSpec FoxHSpec::meijer_g(int m, int n, std::vector<double> const& a,
                            std::vector<double> const& b)
{
    std::vector<GammaTerm> up;
    std::vector<GammaTerm> lo;
    for (double v : a)
        up.push_back({v, 1.0});
    for (double v : b)
        lo.push_back({v, 1.0});
    return FoxHSpec(m, n, std::move(up), std::move(lo));
}

cplx FoxHSpec::log_kernel(cplx s) const
{
    cplx acc{0, 0};
    for (int j = 0; j < q(); ++j)
    {
        auto const& t = lower_[j];
        if (j < m_)
            acc += log_gamma(t.shift + t.scale * s);
        else
            acc += log_recip_gamma(1.0 - t.shift - t.scale * s);
    }
    for (int i = 0; i < p(); ++i)
    {
        auto const& t = upper_[i];
        if (i < n_)
            acc += log_gamma(1.0 - t.shift - t.scale * s);
        else
            acc += log_recip_gamma(t.shift + t.scale * s);
    }
    return acc;
}

/*!
 * Trapezoid rule along Re s = c, using the conjugate symmetry of the kernel.
 *
 * The abscissa defaults to the point of the admissible strip where the
 * integrand is smallest on the real axis (the saddle of the Mellin-Barnes
 * integrand), which keeps the cancellation between positive and negative
 * contributions small when z is far from one. Node spacing starts at a third
 * of the distance to the nearest pole and halves until two successive sums
 * agree.
 */
FoxHResult fox_h(FoxHSpec const& spec, double z, ContourConfig const& cfg,
                 double log_prefactor)
{
    if (!(z > 0) || !std::isfinite(z))
        throw DomainError("fox_h: argument must be positive and finite");
    require(cfg.nodes >= 64, "fox_h: at least 64 nodes are required");
    require(cfg.target_rel_tol > 0, "fox_h: tolerance must be positive");

    Strip const strip = spec.strip();
    double const log_z = std::log(z);

    auto log_integrand = [&](cplx s) {
        return spec.log_kernel(s) - s * log_z + log_prefactor;
    };

    double c;
    if (cfg.offset)
    {
        c = *cfg.offset;
        if (!strip.contains(c))
            throw DomainError("fox_h: contour offset outside admissible strip");
    }
    else
    {
        auto [a, b] = search_window(strip);
        c = minimize_1d(
            [&](double x) { return log_integrand(cplx(x, 0)).real(); }, a, b);
    }

    // Reference magnitude: real-axis value (or nearby, if the kernel vanishes)
    double ref = log_integrand(cplx(c, 0)).real();
    if (!std::isfinite(ref))
        ref = log_integrand(cplx(c, 0.5)).real();
    if (!std::isfinite(ref))
        throw NumericError("fox_h: kernel vanishes on the contour");

    auto term = [&](double t, double& abs_out) {
        cplx const v = log_integrand(cplx(c, t)) - ref;
        double const mag = std::exp(v.real());
        abs_out = mag;
        return mag * std::cos(v.imag());
    };
    auto log_mag = [&](double t) {
        return log_integrand(cplx(c, t)).real() - ref;
    };

    double T = cfg.half_extent > 0 ? cfg.half_extent : 4.0;
    while (log_mag(T) > log_tail_cut || log_mag(1.5 * T) > log_tail_cut)
    {
        T *= 1.5;
        if (T > max_half_extent)
            throw NumericError("fox_h: integrand does not decay on contour");
    }

    double const d = pole_distance(strip, c);
    long n = std::max<long>(cfg.nodes, std::lround(std::ceil(3 * T / d)));
    double h = T / n;

    double a0;
    double sum = 0.5 * term(0, a0);
    double abs_sum = 0.5 * a0;
    for (long k = 1; k <= n; ++k)
    {
        double ak;
        sum += term(k * h, ak);
        abs_sum += ak;
    }
    double est = sum * h / std::numbers::pi;

    FoxHResult res;
    res.offset = c;
    res.half_extent = T;
    for (int level = 1; level <= cfg.max_refinements; ++level)
    {
        for (long k = 0; k < n; ++k)
        {
            double ak;
            sum += term((k + 0.5) * h, ak);
            abs_sum += ak;
        }
        h *= 0.5;
        n *= 2;
        double const next = sum * h / std::numbers::pi;
        double const diff = std::abs(next - est);
        double const floor = 64 * eps * abs_sum * h / std::numbers::pi;
        double const prev = est;
        est = next;
        if (diff <= std::max(cfg.target_rel_tol * std::abs(next), floor))
        {
            res.error_estimate = diff;
            res.nodes = n;
            res.refinements = level;
            auto [v, under] = rescale(est, ref, "fox_h");
            res.value = v;
            res.underflow = under;
            res.error_estimate = diff * std::exp(std::min(ref, 700.0));
            return res;
        }
        if (level == cfg.max_refinements)
        {
            double const scale = std::exp(std::clamp(ref, -700.0, 700.0));
            throw NumericError("fox_h: trapezoid refinement did not converge",
                               next * scale, prev * scale);
        }
    }
    throw NumericError("fox_h: no refinement levels allowed");
}

double fox_h_univariate(FoxHSpec const& spec, double z,
                        ContourConfig const& cfg)
{
    return fox_h(spec, z, cfg).value;
}

//---------------------------------------------------------------------------//
// BIVARIATE
//---------------------------------------------------------------------------//
BivariateFoxHSpec::BivariateFoxHSpec(int n_joint,
                                     std::vector<JointTerm> joint_upper,
                                     std::vector<JointTerm> joint_lower,
                                     FoxHSpec first, FoxHSpec second)
    : n_joint_(n_joint)
    , joint_upper_(std::move(joint_upper))
    , joint_lower_(std::move(joint_lower))
    , first_(std::move(first))
    , second_(std::move(second))
{
    require(n_joint_ >= 0
                && n_joint_ <= static_cast<int>(joint_upper_.size()),
            "BivariateFoxHSpec: need 0 <= n_joint <= number of joint terms");
    double net_r = 0;
    double net_s = 0;
    for (std::size_t i = 0; i < joint_upper_.size(); ++i)
    {
        auto const& t = joint_upper_[i];
        require(t.scale_r > 0 && t.scale_s > 0,
                "BivariateFoxHSpec: joint scales must be positive");
        double const sign = static_cast<int>(i) < n_joint_ ? 1 : -1;
        net_r += sign * t.scale_r;
        net_s += sign * t.scale_s;
    }
    for (auto const& t : joint_lower_)
    {
        require(t.scale_r > 0 && t.scale_s > 0,
                "BivariateFoxHSpec: joint scales must be positive");
        net_r -= t.scale_r;
        net_s -= t.scale_s;
    }
    require(net_r >= 0 && net_s >= 0,
            "BivariateFoxHSpec: joint factor grows along vertical contours");
}

cplx BivariateFoxHSpec::log_joint(cplx r, cplx s) const
{
    cplx acc{0, 0};
    for (std::size_t i = 0; i < joint_upper_.size(); ++i)
    {
        auto const& t = joint_upper_[i];
        cplx const lin = t.scale_r * r + t.scale_s * s;
        if (static_cast<int>(i) < n_joint_)
            acc += log_gamma(1.0 - t.shift - lin);
        else
            acc += log_recip_gamma(t.shift + lin);
    }
    for (auto const& t : joint_lower_)
        acc += log_recip_gamma(1.0 - t.shift - t.scale_r * r - t.scale_s * s);
    return acc;
}

bool BivariateFoxHSpec::admissible(double r, double s, double margin) const
{
    if (!(first_.strip().lo + margin < r && r < first_.strip().hi - margin))
        return false;
    if (!(second_.strip().lo + margin < s && s < second_.strip().hi - margin))
        return false;
    for (int i = 0; i < n_joint_; ++i)
    {
        auto const& t = joint_upper_[i];
        if (!(1 - t.shift - t.scale_r * r - t.scale_s * s > margin))
            return false;
    }
    return true;
}

namespace
{
struct Offsets
{
    double r;
    double s;
};

Offsets choose_offsets(BivariateFoxHSpec const& spec,
                       BivariateContourConfig const& cfg,
                       std::function<double(double, double)> const& phi)
{
    auto [ar, br] = search_window(spec.first().strip());
    auto [as, bs] = search_window(spec.second().strip());
    if (cfg.offset_r)
        ar = br = *cfg.offset_r;
    if (cfg.offset_s)
        as = bs = *cfg.offset_s;

    for (double margin : {0.2, 0.05, 0.01})
    {
        constexpr int grid = 48;
        double best = inf;
        Offsets at{0, 0};
        for (int i = 0; i <= grid; ++i)
        {
            double const r = ar + (br - ar) * i / grid;
            for (int j = 0; j <= grid; ++j)
            {
                double const s = as + (bs - as) * j / grid;
                if (!spec.admissible(r, s, margin))
                    continue;
                double const v = phi(r, s);
                if (std::isfinite(v) && v < best)
                {
                    best = v;
                    at = {r, s};
                }
            }
        }
        if (!std::isfinite(best))
            continue;
        // Pattern search to polish the grid minimum
        double step_r = cfg.offset_r ? 0 : (br - ar) / grid;
        double step_s = cfg.offset_s ? 0 : (bs - as) / grid;
        for (int it = 0; it < 200 && (step_r > 1e-4 || step_s > 1e-4); ++it)
        {
            bool moved = false;
            Offsets const trial[4] = {{at.r + step_r, at.s},
                                      {at.r - step_r, at.s},
                                      {at.r, at.s + step_s},
                                      {at.r, at.s - step_s}};
            for (auto const& o : trial)
            {
                if (!spec.admissible(o.r, o.s, margin))
                    continue;
                double const v = phi(o.r, o.s);
                if (std::isfinite(v) && v < best)
                {
                    best = v;
                    at = o;
                    moved = true;
                }
            }
            if (!moved)
            {
                step_r *= 0.5;
                step_s *= 0.5;
            }
        }
        return at;
    }
    throw DomainError("fox_h_bivariate: no admissible contour pair");
}

// Whether all joint terms share one r:s scale ratio (enables lattice reuse)
bool shared_ratio(BivariateFoxHSpec const& spec, double& ratio)
{
    std::vector<JointTerm> all = spec.joint_upper();
    all.insert(all.end(), spec.joint_lower().begin(), spec.joint_lower().end());
    if (all.empty())
    {
        ratio = 1;
        return true;
    }
    ratio = all.front().scale_r / all.front().scale_s;
    for (auto const& t : all)
        if (std::abs(t.scale_r / t.scale_s - ratio) > 1e-14 * ratio)
            return false;
    return true;
}
}  // namespace

/*!
 * Tensor-product trapezoid rule over two vertical lines.
 *
 * When every joint factor depends on r and s only through one fixed linear
 * combination, the s spacing is tied to the r spacing so that the joint
 * argument on the grid depends on j + k alone. The joint gamma values then
 * form a one-dimensional table and the double sum costs only complex
 * multiplications.
 */
BivariateResult fox_h_bivariate(BivariateFoxHSpec const& spec, double z1,
                                double z2, BivariateContourConfig const& cfg,
                                double log_prefactor)
{
    if (!(z1 > 0) || !(z2 > 0) || !std::isfinite(z1) || !std::isfinite(z2))
        throw DomainError("fox_h_bivariate: arguments must be positive");
    require(cfg.nodes >= 64, "fox_h_bivariate: at least 64 nodes required");

    FoxHSpec const& k1 = spec.first();
    FoxHSpec const& k2 = spec.second();
    double const lz1 = std::log(z1);
    double const lz2 = std::log(z2);

    auto log_a = [&](cplx r) { return k1.log_kernel(r) - r * lz1; };
    auto log_b = [&](cplx s) { return k2.log_kernel(s) - s * lz2; };

    Offsets c;
    if (cfg.offset_r && cfg.offset_s)
    {
        c = {*cfg.offset_r, *cfg.offset_s};
        if (!spec.admissible(c.r, c.s))
            throw DomainError(
                "fox_h_bivariate: contour offsets outside admissible region");
    }
    else
    {
        c = choose_offsets(spec, cfg, [&](double r, double s) {
            return (log_a(r) + log_b(s) + spec.log_joint(r, s)).real();
        });
    }

    double const ref_a = log_a(c.r).real();
    double const ref_b = log_b(c.s).real();
    double const ref_c = spec.log_joint(c.r, c.s).real();
    if (!std::isfinite(ref_a) || !std::isfinite(ref_b) || !std::isfinite(ref_c))
        throw NumericError("fox_h_bivariate: kernel vanishes at the offsets");

    // Tails along each axis through the offset point
    auto axis_mag_r = [&](double t) {
        cplx const r(c.r, t);
        return (log_a(r) + spec.log_joint(r, c.s)).real() - ref_a - ref_c;
    };
    auto axis_mag_s = [&](double t) {
        cplx const s(c.s, t);
        return (log_b(s) + spec.log_joint(c.r, s)).real() - ref_b - ref_c;
    };
    auto find_tail = [](auto const& mag) {
        double T = 4;
        while (mag(T) > log_tail_cut || mag(1.5 * T) > log_tail_cut
               || mag(-T) > log_tail_cut || mag(-1.5 * T) > log_tail_cut)
        {
            T *= 1.5;
            if (T > max_half_extent)
                throw NumericError(
                    "fox_h_bivariate: integrand does not decay on contour");
        }
        return T;
    };
    double Tr = find_tail(axis_mag_r);
    double Ts = find_tail(axis_mag_s);

    // Distances to the nearest singularity in each variable
    double dr = pole_distance(k1.strip(), c.r);
    double ds = pole_distance(k2.strip(), c.s);
    for (int i = 0; i < spec.n_joint(); ++i)
    {
        auto const& t = spec.joint_upper()[i];
        double const arg = 1 - t.shift - t.scale_r * c.r - t.scale_s * c.s;
        dr = std::min(dr, arg / t.scale_r);
        ds = std::min(ds, arg / t.scale_s);
    }

    double ratio = 1;
    bool const lattice = shared_ratio(spec, ratio);
    double hr = std::min(Tr / cfg.nodes, dr / 3);
    double hs = std::min(Ts / cfg.nodes, ds / 3);
    if (lattice)
    {
        // Joint imaginary part: scale_r * hr * j + scale_s * hs * k
        hr = std::min(hr, hs / ratio);
        hs = ratio * hr;
    }

    double const ref = ref_a + ref_b + ref_c + log_prefactor;
    double const norm = 1.0 / (4 * std::numbers::pi * std::numbers::pi);

    struct Level
    {
        cplx total;
        double abs_total;
        double edge;  // largest boundary term relative to the peak
        long J, K;
    };

    // With half set, rows j < 0 are folded onto j > 0 by conjugate symmetry
    // and only the real part is accumulated.
    auto run_level = [&](double h_r, double h_s, double T_r, double T_s,
                         bool half) {
        long const J = std::lround(std::ceil(T_r / h_r));
        long const K = std::lround(std::ceil(T_s / h_s));
        if (static_cast<double>(2 * J + 1) * (2 * K + 1) > 4e8)
            throw NumericError("fox_h_bivariate: grid too large");
        std::vector<cplx> A(2 * J + 1);
        std::vector<cplx> B(2 * K + 1);
        for (long j = -J; j <= J; ++j)
            A[j + J] = std::exp(log_a(cplx(c.r, j * h_r)) - ref_a);
        for (long k = -K; k <= K; ++k)
            B[k + K] = std::exp(log_b(cplx(c.s, k * h_s)) - ref_b);

        cplx total{0, 0};
        double abs_total = 0;
        double edge = 0;
        auto track_edge = [&](long j, long k, double mag) {
            if (std::abs(j) == J || std::abs(k) == K)
                edge = std::max(edge, mag);
        };
        if (lattice)
        {
            std::vector<cplx> C(2 * (J + K) + 1);
            for (long m = -(J + K); m <= J + K; ++m)
                C[m + J + K] = std::exp(
                    spec.log_joint(cplx(c.r, m * h_r), cplx(c.s, 0)) - ref_c);
            for (long j = half ? 0 : -J; j <= J; ++j)
            {
                cplx row{0, 0};
                double abs_row = 0;
                cplx const* cj = &C[j + J + K];
                for (long k = -K; k <= K; ++k)
                {
                    cplx const v = B[k + K] * cj[k];
                    row += v;
                    abs_row += std::abs(v);
                }
                double const w = half && j > 0 ? 2 : 1;
                cplx const term = A[j + J] * row;
                total += half ? cplx(w * term.real(), 0) : term;
                abs_total += w * std::abs(A[j + J]) * abs_row;
                double const aj = std::abs(A[j + J]);
                if (std::abs(j) == J)
                    for (long k = -K; k <= K; ++k)
                        edge = std::max(edge, aj * std::abs(B[k + K] * cj[k]));
                else
                    for (long k : {-K, K})
                        edge = std::max(edge, aj * std::abs(B[k + K] * cj[k]));
            }
        }
        else
        {
            for (long j = half ? 0 : -J; j <= J; ++j)
            {
                cplx const r(c.r, j * h_r);
                double const w = half && j > 0 ? 2 : 1;
                for (long k = -K; k <= K; ++k)
                {
                    cplx const s(c.s, k * h_s);
                    cplx const v = A[j + J] * B[k + K]
                                   * std::exp(spec.log_joint(r, s) - ref_c);
                    total += half ? cplx(w * v.real(), 0) : v;
                    abs_total += w * std::abs(v);
                    track_edge(j, k, std::abs(v));
                }
            }
        }
        return Level{total * (h_r * h_s * norm), abs_total * h_r * h_s * norm,
                     edge, J, K};
    };

    for (int grow = 0; grow < 6; ++grow)
    {
        double h_r = hr;
        double h_s = hs;
        // The full first level supplies the imaginary residue diagnostic
        Level prev = run_level(h_r, h_s, Tr, Ts, false);
        double const residue = prev.total.real() != 0
                                   ? std::abs(prev.total.imag())
                                         / std::abs(prev.total.real())
                                   : std::abs(prev.total.imag());
        bool truncated = prev.edge > std::exp(log_tail_cut);
        for (int level = 1; level <= cfg.max_refinements && !truncated; ++level)
        {
            h_r *= 0.5;
            h_s *= 0.5;
            Level cur = run_level(h_r, h_s, Tr, Ts, true);
            double const diff = std::abs(cur.total.real() - prev.total.real());
            double const floor = 64 * eps * cur.abs_total;
            // Trapezoid error in an analytic strip decays like exp(-c/h), so
            // halving h squares the relative error of the previous level.
            double const accept = std::max(
                cfg.target_rel_tol, 0.1 * std::sqrt(cfg.target_rel_tol));
            if (diff <= std::max(accept * std::abs(cur.total.real()), floor))
            {
                BivariateResult res;
                auto [v, under] = rescale(cur.total.real(), ref,
                                          "fox_h_bivariate");
                res.value = v;
                res.underflow = under;
                res.imag_residue = residue;
                res.error_estimate = diff * std::exp(std::min(ref, 700.0));
                res.offset_r = c.r;
                res.offset_s = c.s;
                res.nodes_r = 2 * cur.J + 1;
                res.nodes_s = 2 * cur.K + 1;
                return res;
            }
            if (level == cfg.max_refinements)
            {
                double const scale = std::exp(std::clamp(ref, -700.0, 700.0));
                throw NumericError(
                    "fox_h_bivariate: refinement did not converge",
                    cur.total.real() * scale, prev.total.real() * scale);
            }
            prev = cur;
        }
        // Boundary terms not negligible: widen the truncated lines
        Tr *= 1.5;
        Ts *= 1.5;
    }
    throw NumericError("fox_h_bivariate: truncation did not converge");
}

}  // namespace irsthz
