// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
//
// End-to-end acceptance checks. Each criterion prints one PASS or FAIL line
// followed by indented details; the exit status is nonzero if any failed.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "irsthz/channel/channel.hpp"
#include "irsthz/cli/commands.hpp"
#include "irsthz/metrics/metrics.hpp"
#include "irsthz/montecarlo/philox.hpp"
#include "irsthz/montecarlo/simulate.hpp"
#include "irsthz/specfun/fox_h.hpp"
#include "irsthz/specfun/gamma.hpp"
#include "irsthz/surrogate/dataset.hpp"
#include "irsthz/surrogate/train.hpp"

using namespace irsthz;
namespace fs = std::filesystem;

namespace
{
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome
{
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, std::string const& what)
    {
        if (!ok)
        {
            pass = false;
            detail << "    violated: " << what << "\n";
        }
    }
};

int failures = 0;

void criterion(char const* name, std::function<void(Outcome&)> const& body)
{
    Outcome o;
    auto const t0 = Clock::now();
    try
    {
        body(o);
    }
    catch (std::exception const& e)
    {
        o.pass = false;
        o.detail << "    exception: " << e.what() << "\n";
    }
    std::printf("%s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", name,
                seconds_since(t0));
    std::fputs(o.detail.str().c_str(), stdout);
    std::fflush(stdout);
    failures += !o.pass;
}

HopParams hop(double alpha, double mu, double phi, double s0)
{
    HopParams h;
    h.fading = {alpha, mu, 1.0};
    h.pointing = {phi, s0};
    return h;
}

Scenario scenario(HopParams const& h, int n)
{
    Scenario sc;
    sc.hop1 = h;
    sc.hop2 = h;
    sc.n_elements = n;
    return sc;
}

McConfig mc_config(std::int64_t trials, std::uint64_t seed)
{
    McConfig mc;
    mc.trials = trials;
    mc.seed = seed;
    return mc;
}

// Scale lambda0 for which f(lambda0) = target, f decreasing in lambda0
double solve_decreasing(std::function<double(double)> const& f, double target)
{
    double lo = std::log(1e-30);
    double hi = std::log(1e30);
    for (int i = 0; i < 200; ++i)
    {
        double const mid = 0.5 * (lo + hi);
        (f(std::exp(mid)) > target ? lo : hi) = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

std::string slurp(fs::path const& p)
{
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

// Diversity-order parameter set: alpha = 1, mu = 1.04, phi = 15, S0 = 0.75
HopParams const do_hop = hop(1.0, 1.04, 15.0, 0.75);
// Simulation-table hop: alpha = mu = 3, phi = 15, S0 = 0.8
HopParams const table_hop = hop(3.0, 3.0, 15.0, 0.8);
}  // namespace

int main()
{
    criterion("diversity order", [](Outcome& o) {
        auto const t0 = Clock::now();
        double const gd = diversity_order(do_hop, do_hop, 10);
        double const dt = seconds_since(t0);
        o.detail << "    G_d = " << gd << " (expected 1.737 +- 0.01), "
                 << dt * 1e6 << " us\n";
        o.require(std::abs(gd - 1.737) <= 0.01, "|G_d - 1.737| <= 0.01");
        o.require(dt < 1e-3, "runtime < 1 ms");
    });

    criterion("empirical slope", [](Outcome& o) {
        double const s = empirical_diversity_order(1.0328e-7, 1.1184e-7, 60, 59.8);
        o.detail << "    slope = " << s << " (expected 1.729 +- 0.001)\n";
        o.require(std::abs(s - 1.729) <= 0.001, "|slope - 1.729| <= 0.001");
    });

    criterion("Fox-H incomplete-gamma reduction", [](Outcome& o) {
        auto const t0 = Clock::now();
        double worst = 0;
        for (double a : {1.0, 2.7, 5.0})
            for (double x : {0.1, 1.0, 10.0})
            {
                auto const spec = FoxHSpec::meijer_g(2, 0, {1.0}, {a, 0.0});
                double const h = fox_h_univariate(spec, x);
                worst = std::max(worst, std::abs(h / upper_gamma(a, x) - 1));
            }
        double const dt = seconds_since(t0);
        o.detail << "    worst relative error " << worst << " over 9 points\n";
        o.require(worst <= 1e-8, "relative error <= 1e-8");
        o.require(dt < 1, "runtime < 1 s");
    });

    criterion("closed forms vs quadrature oracle", [](Outcome& o) {
        auto const t0 = Clock::now();
        Philox4x32 rng(2026, 1);
        int const orders[] = {2, 4, 8, 16};
        int const hq[] = {4, 16, 64};
        double worst[3] = {0, 0, 0};
        int const sets = 12;
        for (int k = 0; k < sets; ++k)
        {
            LseParams lse;
            lse.lambda = 1;
            lse.tau = 0.5 + 19.5 * rng.uniform();
            double const s = std::exp(std::log(0.1) + std::log(1000.0) * rng.uniform());
            double const l0 = s * s;
            RqamSpec r;
            r.mi = orders[rng.next_u32() % 4];
            r.mq = orders[rng.next_u32() % 4];
            HqamSpec h{hq[rng.next_u32() % 3]};
            double const e[3] = {
                aser_rqam(r, lse, l0) / quadrature_oracle_aser(rqam_sep_derivative(r), lse, l0),
                aser_hqam(h, lse, l0) / quadrature_oracle_aser(hqam_sep_derivative(h), lse, l0),
                acc(lse, l0) / quadrature_oracle_acc(lse, l0)};
            for (int m = 0; m < 3; ++m)
                worst[m] = std::max(worst[m], std::abs(e[m] - 1));
        }
        double const dt = seconds_since(t0);
        o.detail << "    " << sets << " sets, worst relative error: aser_rqam "
                 << worst[0] << ", aser_hqam " << worst[1] << ", acc " << worst[2]
                 << "\n";
        for (double w : worst)
            o.require(w <= 1e-4, "relative error <= 1e-4");
        o.require(dt < 120, "runtime < 2 min");
    });

    criterion("analytical vs Monte Carlo", [](Outcome& o) {
        auto const t0 = Clock::now();
        Scenario const sc = scenario(table_hop, 10);
        LseParams const lse = lse_params(sc);
        // The link scale is swept directly; lambda_th = 1 and the normalized
        // SNR runs over the whole waterfall in 1 dB steps.
        double const unit = 1 / (lse.mean * lse.mean);
        RqamSpec const spec;
        int checked = 0;
        for (auto metric : {"op", "aser-rqam"})
        {
            double worst = 0;
            for (double db = -10; db <= 10; db += 1)
            {
                double const l0 = unit * std::pow(10.0, db / 10);
                bool const is_op = std::string(metric) == "op";
                double const exact = is_op ? outage_probability(lse, l0, 1)
                                           : aser_rqam(spec, lse, l0);
                if (exact < 1e-4)
                    continue;
                auto const mc = mc_config(1'000'000, 77);
                McEstimate const e
                    = is_op ? simulate_outage(sc, l0, PhaseModel::ideal(), 1, mc)
                            : simulate_ser_rqam(spec, sc, l0, PhaseModel::ideal(), mc);
                double const diff = std::abs(e.value - exact);
                double const tol = std::max(3 * e.std_error, 0.05 * exact);
                worst = std::max(worst, diff / exact);
                ++checked;
                if (diff > tol)
                {
                    char buf[200];
                    std::snprintf(buf, sizeof buf,
                                  "%s at %+.0f dB: analytical %.4e, MC %.4e "
                                  "(se %.1e, rel %.1f%%)",
                                  metric, db, exact, e.value, e.std_error,
                                  100 * (e.value / exact - 1));
                    o.require(false, buf);
                }
            }
            o.detail << "    " << metric << ": worst relative deviation "
                     << worst << "\n";
        }
        double const dt = seconds_since(t0);
        o.detail << "    " << checked << " points with metric >= 1e-4\n";
        o.require(checked >= 10, "enough points above 1e-4");
        o.require(dt < 300, "runtime < 5 min");
    });

    criterion("LSE distribution quality", [](Outcome& o) {
        auto const t0 = Clock::now();
        for (int n : {4, 10, 36})
        {
            Scenario const sc = scenario(table_hop, n);
            LseParams const lse = lse_params(sc);
            auto gains = sample_composite_gains(sc, PhaseModel::ideal(),
                                                mc_config(1'000'000, 5));
            std::sort(gains.begin(), gains.end());
            double d = 0;
            double const m = static_cast<double>(gains.size());
            for (std::size_t i = 0; i < gains.size(); ++i)
            {
                double const f = snr_cdf(gains[i] * gains[i], lse, 1);
                d = std::max({d, std::abs(f - i / m), std::abs(f - (i + 1) / m)});
            }
            o.detail << "    N = " << n << ": KS distance " << d << "\n";
            o.require(d <= 0.02, "KS distance <= 0.02");
        }
        o.require(seconds_since(t0) < 180, "runtime < 3 min");
    });

    criterion("phase-error ordering", [](Outcome& o) {
        auto const t0 = Clock::now();
        Scenario const sc = scenario(do_hop, 10);
        LseParams const lse = lse_params(sc);
        // Operating point where the analytical (LSE) outage is 1e-2
        double const l0 = solve_decreasing(
            [&](double x) { return outage_probability(lse, x, 1); }, 1e-2);
        auto const mc = mc_config(1'000'000, 31);
        auto run = [&](PhaseModel p) { return simulate_outage(sc, l0, p, 1, mc); };
        auto const ideal = run(PhaseModel::ideal());
        auto const q4 = run(PhaseModel::quantized(4));
        auto const q1 = run(PhaseModel::quantized(1));
        auto const rnd = run(PhaseModel::random());
        o.detail << "    OP ideal " << ideal.value << ", Q=4 " << q4.value
                 << ", Q=1 " << q1.value << ", random " << rnd.value << "\n";
        o.require(rnd.value > q1.value, "OP(random) > OP(Q=1)");
        o.require(q1.value > q4.value, "OP(Q=1) > OP(Q=4)");
        o.require(std::abs(q4.value / ideal.value - 1) <= 0.05,
                  "|OP(Q=4) - OP(ideal)| <= 5%");
        o.require(seconds_since(t0) < 300, "runtime < 5 min");
    });

    criterion("high-SNR asymptotics", [](Outcome& o) {
        Scenario const sc = scenario(do_hop, 10);
        LseParams const lse = lse_params(sc);
        double const gd = diversity_order(lse);
        // Place the link so that OP(60 dBm) matches the reported 1.0328e-7
        double const l0_60 = solve_decreasing(
            [&](double x) { return outage_probability(lse, x, 1); }, 1.0328e-7);
        auto l0 = [&](double dbm) { return l0_60 * std::pow(10.0, (dbm - 60) / 10); };
        double const hi = outage_probability(lse, l0(60), 1);
        double const lo = outage_probability(lse, l0(59.8), 1);
        double const slope = empirical_diversity_order(hi, lo, 60, 59.8);
        double const ratio = hi / outage_asymptotic(lse, l0(60), 1);
        o.detail << "    G_d " << gd << ", slope over 59.8-60 dBm " << slope
                 << ", exact/asymptote at 60 dBm " << ratio << "\n";
        o.require(std::abs(slope / gd - 1) <= 0.02, "slope within 2% of G_d");
        o.require(ratio >= 0.98 && ratio <= 1.02, "ratio in [0.98, 1.02]");
    });

    criterion("monotonicity suite", [](Outcome& o) {
        Scenario const sc = scenario(table_hop, 10);
        LseParams const lse = lse_params(sc);
        double const unit = 1 / (lse.mean * lse.mean);
        RqamSpec const r44{4, 4};

        double prev = 2;
        bool mono = true;
        for (double db = -10; db <= 12; db += 0.5)
        {
            double const v = aser_rqam(r44, lse, unit * std::pow(10.0, db / 10));
            mono &= v <= prev;
            prev = v;
        }
        o.require(mono, "ASER nonincreasing in lambda0");

        double const l0 = 2 * unit;
        prev = 2;
        mono = true;
        std::ostringstream sn;
        for (int n : {4, 8, 10, 16, 36, 64})
        {
            double const v = aser_rqam(r44, lse_params(scenario(table_hop, n)), l0);
            sn << " " << v;
            mono &= v <= prev;
            prev = v;
        }
        o.detail << "    ASER vs N (4..64):" << sn.str() << "\n";
        o.require(mono, "ASER nonincreasing in N");

        prev = 0;
        mono = true;
        for (RqamSpec s : {RqamSpec{2, 2}, RqamSpec{4, 2}, RqamSpec{4, 4},
                           RqamSpec{8, 4}, RqamSpec{8, 8}, RqamSpec{16, 8},
                           RqamSpec{16, 16}})
        {
            double const v = aser_rqam(s, lse, l0);
            mono &= v > prev;
            prev = v;
        }
        o.require(mono, "ASER increasing in the RQAM order");
        o.require(aser_hqam(HqamSpec{4}, lse, l0) < aser_hqam(HqamSpec{16}, lse, l0)
                      && aser_hqam(HqamSpec{16}, lse, l0)
                             < aser_hqam(HqamSpec{64}, lse, l0),
                  "ASER increasing in the HQAM order");

        // Capacity set: alpha = mu = 3.5, phi = 18, S0 = 0.8, 38 dBm on the
        // table link budget
        ScenarioConfig cfg;
        for (HopConfig* h : {&cfg.hop1, &cfg.hop2})
        {
            h->alpha = 3.5;
            h->mu = 3.5;
            h->phi = 18;
        }
        std::vector<double> by_n;
        for (int n : {36, 49, 64})
        {
            cfg.link.n_elements = n;
            by_n.push_back(acc(lse_params(cfg.scenario()), cfg.lambda0(38)));
        }
        o.detail << "    ACC at N = 36, 49, 64: " << by_n[0] << ", " << by_n[1]
                 << ", " << by_n[2] << " bit/s/Hz\n";
        o.require(by_n[0] < by_n[1] && by_n[1] < by_n[2], "ACC increasing in N");

        cfg.link.n_elements = 36;
        std::vector<double> by_s0;
        for (double s0 : {0.6, 0.7, 0.8})
        {
            cfg.hop1.s0 = s0;
            cfg.hop2.s0 = s0;
            by_s0.push_back(acc(lse_params(cfg.scenario()), cfg.lambda0(38)));
        }
        o.detail << "    ACC at S0 = 0.6, 0.7, 0.8: " << by_s0[0] << ", "
                 << by_s0[1] << ", " << by_s0[2] << " bit/s/Hz\n";
        o.require(by_s0[0] < by_s0[1] && by_s0[1] < by_s0[2],
                  "ACC increasing in S0");
    });

    criterion("surrogates", [](Outcome& o) {
        for (SurrogateKind kind : {SurrogateKind::op, SurrogateKind::aser})
        {
            bool const is_op = kind == SurrogateKind::op;
            auto const t0 = Clock::now();
            Dataset const data = is_op ? generate_op_dataset(20000, {}, 7)
                                       : generate_aser_dataset(AserDatasetGrid{});
            TrainConfig const tc;
            TrainResult const r = train_mlp(surrogate_spec(kind),
                                            surrogate_input_transforms(kind),
                                            OutputTransform::neg_log10, data, tc);
            double const dt = seconds_since(t0);
            EvalMetrics const test
                = evaluate_model(r.model, subset(data, r.split.test));
            double const limit = is_op ? 1e-6 : 5e-6;
            char buf[320];
            std::snprintf(buf, sizeof buf,
                          "    %s net: %lld rows, %d epochs (%s), val MSE %.3e "
                          "(limit %.0e), test MSE %.3e, test correlation %.8f, "
                          "%.0f s\n",
                          is_op ? "OP" : "ASER", static_cast<long long>(data.rows()),
                          r.model.meta.epochs, r.model.meta.stop_reason.c_str(),
                          r.model.meta.val_mse, limit, r.model.meta.test_mse,
                          test.correlation, dt);
            o.detail << buf;
            o.require(r.model.meta.val_mse <= limit,
                      std::string(is_op ? "OP" : "ASER") + " validation MSE");
            o.require(test.correlation >= 0.999,
                      std::string(is_op ? "OP" : "ASER") + " correlation >= 0.999");
            o.require(dt < 1800, "training < 30 min");

            if (!is_op)
            {
                BenchResult const b = benchmark_surrogate(kind, r.model, 1000, 5);
                o.detail << "    1000 aser_rqam evaluations " << b.closed_form_seconds
                         << " s, 1000 predictions " << b.surrogate_seconds
                         << " s, speed-up " << b.speedup() << "x\n";
                o.require(b.speedup() >= 100, "speed-up >= 100x");
            }
        }
    });

    criterion("reproducibility", [](Outcome& o) {
        auto const dir = fs::temp_directory_path() / "irsthz_acceptance";
        fs::create_directories(dir);
        auto const a = dir / "a.csv";
        auto const b = dir / "b.csv";
        std::ostringstream out;
        std::ostringstream err;
        int const c1 = run_cli({"sweep", "--metric", "op", "--with-mc", "--trials",
                                "200000", "--set", "hops.s0_1=0.75", "--ps-dbm",
                                "-5:40:5", "--threshold-db", "75", "--output",
                                a.string()},
                               out, err);
        int const c2 = run_cli({"sweep", "--metric", "op", "--with-mc", "--config",
                                a.string() + ".manifest.json", "--output",
                                b.string(), "--threads", "1"},
                               out, err);
        o.require(c1 == 0 && c2 == 0, "both runs succeed: " + err.str());
        std::string const ta = slurp(a);
        std::string const tb = slurp(b);
        o.detail << "    " << std::count(ta.begin(), ta.end(), '\n')
                 << " CSV lines, replayed from the manifest\n";
        o.require(!ta.empty() && ta == tb, "byte-identical CSV");
        fs::remove_all(dir);
    });

    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
