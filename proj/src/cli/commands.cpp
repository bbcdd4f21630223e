// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The irsthz Authors
#include "irsthz/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <Eigen/Core>
#include <json.hpp>

#include "irsthz/channel/channel.hpp"
#include "irsthz/metrics/metrics.hpp"
#include "irsthz/montecarlo/simulate.hpp"
#include "irsthz/specfun/errors.hpp"
#include "irsthz/specfun/fox_h.hpp"
#include "irsthz/specfun/gamma.hpp"
#include "irsthz/surrogate/dataset.hpp"
#include "irsthz/surrogate/model_io.hpp"
#include "irsthz/surrogate/train.hpp"
#include "irsthz/util/hash.hpp"
#include "irsthz/version.hpp"

namespace irsthz
{
namespace
{
using Json = nlohmann::ordered_json;

std::string fmt(double x)
{
    // Shortest text that parses back to the same double
    char buf[32];
    auto const r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

std::string fmt_opt(std::optional<double> x)
{
    return x ? fmt(*x) : std::string{};
}

Json json_opt(std::optional<double> x)
{
    return x ? Json(*x) : Json(nullptr);
}

bool known_metric(std::string const& m)
{
    return std::find(std::begin(metric_names), std::end(metric_names), m)
           != std::end(metric_names);
}

int worker_count(int requested)
{
    if (requested > 0)
        return requested;
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

// Run body(i) for i in [0, n) on a pool; the first failure (by index) is
// rethrown after all workers finish
template<class F>
void parallel_for(std::size_t n, int threads, F body)
{
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < n;)
        {
            try
            {
                body(i);
            }
            catch (...)
            {
                errors[i] = std::current_exception();
            }
        }
    };
    threads = static_cast<int>(std::min<std::size_t>(threads, n));
    if (threads <= 1)
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
    for (auto& e : errors)
    {
        if (e)
            std::rethrow_exception(e);
    }
}

//---------------------------------------------------------------------------//
// Sweep evaluation
//---------------------------------------------------------------------------//
struct SweepOutcome
{
    std::vector<CsvRow> rows;
    std::map<std::string, int> eval_paths;
};

std::string point_context(std::string const& metric, double ps,
                          LseParams const& lse, double lambda0)
{
    return "metric " + metric + " at ps_dbm=" + fmt(ps) + " (tau=" + fmt(lse.tau)
           + ", Lambda=" + fmt(lse.lambda) + ", lambda0=" + fmt(lambda0)
           + "): ";
}

// Rethrow numeric failures with the metric and its parameters attached
template<class F>
auto with_context(std::string const& context, F f) -> decltype(f())
{
    try
    {
        return f();
    }
    catch (NumericError const& e)
    {
        throw NumericError(context + e.what());
    }
    catch (DegenerateChannelError const& e)
    {
        throw DegenerateChannelError(context + e.what());
    }
    catch (DomainError const& e)
    {
        throw DomainError(context + e.what());
    }
}

MlpModel load_surrogate(ScenarioConfig const& cfg, std::string const& metric)
{
    std::string path;
    std::size_t inputs = 0;
    if (metric == "op")
    {
        path = cfg.surrogate.op_model;
        inputs = 2;
    }
    else if (metric == "aser-rqam")
    {
        path = cfg.surrogate.aser_model;
        inputs = 4;
    }
    else
    {
        throw ConfigError("no surrogate exists for metric '" + metric
                          + "' (only op and aser-rqam)");
    }
    if (path.empty())
        throw ConfigError("surrogate predictions for " + metric
                          + " need surrogate."
                          + (metric == "op" ? "op_model" : "aser_model"));
    MlpModel model = load_model(path);
    if (model.spec.layer_sizes.front() != static_cast<int>(inputs))
        throw ConfigError("model '" + path + "' takes "
                          + std::to_string(model.spec.layer_sizes.front())
                          + " inputs; " + metric + " needs "
                          + std::to_string(inputs));
    return model;
}

SweepOutcome run_sweep(ScenarioConfig const& cfg, SweepRequest const& req)
{
    if (!known_metric(req.metric))
        throw ConfigError("unknown metric '" + req.metric
                          + "' (expected op, aser-rqam, aser-hqam or acc)");
    cfg.validate();
    Scenario const sc = cfg.scenario();
    LseParams const lse = lse_params(sc);
    std::string const hash = config_hash(cfg);
    std::vector<double> const points = cfg.sweep.points();
    double const lambda_th = cfg.threshold_linear();
    std::optional<MlpModel> model;
    if (req.with_dnn)
        model = load_surrogate(cfg, req.metric);

    std::optional<SepDerivative> deriv;
    if (req.metric == "aser-rqam")
        deriv = rqam_sep_derivative(cfg.rqam);
    else if (req.metric == "aser-hqam")
        deriv = hqam_sep_derivative(cfg.hqam);

    SweepOutcome result;
    result.rows.resize(points.size());
    std::vector<std::optional<EvalPath>> paths(points.size());

    parallel_for(points.size(), worker_count(cfg.mc.threads),
                 [&](std::size_t i) {
        double const ps = points[i];
        double const l0 = cfg.lambda0(ps);
        CsvRow& row = result.rows[i];
        row.sweep_ps_dbm = ps;
        row.metric = req.metric;
        row.config_hash = hash;
        with_context(point_context(req.metric, ps, lse, l0), [&] {
            if (req.metric == "op")
            {
                row.analytical = outage_probability(lse, l0, lambda_th);
                row.asymptotic = outage_asymptotic(lse, l0, lambda_th);
            }
            else if (req.metric == "acc")
            {
                MetricValue const v = acc_detailed(lse, l0);
                row.analytical = v.value;
                paths[i] = v.path;
            }
            else
            {
                MetricValue const v = aser(*deriv, lse, l0);
                row.analytical = v.value;
                paths[i] = v.path;
                row.asymptotic = aser_asymptotic(*deriv, lse, l0).value_at->second;
            }
        });
    });

    // Monte Carlo parallelizes over chunks internally; points run in order
    // and share random numbers, which keeps simulated curves smooth
    if (req.with_mc)
    {
        for (std::size_t i = 0; i < points.size(); ++i)
        {
            CsvRow& row = result.rows[i];
            double const l0 = cfg.lambda0(points[i]);
            McEstimate const est = with_context(
                point_context(req.metric, points[i], lse, l0), [&] {
                    if (req.metric == "op")
                        return simulate_outage(sc, l0, cfg.phase, lambda_th,
                                               cfg.mc);
                    if (req.metric == "aser-rqam")
                        return simulate_ser_rqam(cfg.rqam, sc, l0, cfg.phase,
                                                 cfg.mc);
                    if (req.metric == "aser-hqam")
                        return simulate_ser_hqam(cfg.hqam, sc, l0, cfg.phase,
                                                 cfg.mc);
                    return simulate_capacity(sc, l0, cfg.phase, cfg.mc);
                });
            row.mc_estimate = est.value;
            row.mc_std_error = est.std_error;
            row.mc_trials = est.trials_used;
        }
    }

    if (model)
    {
        for (std::size_t i = 0; i < points.size(); ++i)
        {
            double const l0 = cfg.lambda0(points[i]);
            if (req.metric == "op")
            {
                auto const x = op_features(lse, l0, lambda_th);
                result.rows[i].surrogate = model->predict(x);
            }
            else
            {
                auto const x = aser_features(cfg.rqam.mi, cfg.rqam.mq, lse, l0);
                result.rows[i].surrogate = model->predict(x);
            }
        }
    }

    for (auto const& p : paths)
    {
        if (p)
            ++result.eval_paths[to_string(*p)];
    }
    return result;
}

//---------------------------------------------------------------------------//
// Output
//---------------------------------------------------------------------------//
void write_text(std::string const& path, std::string const& text,
                std::ostream& fallback)
{
    if (path.empty())
    {
        fallback << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot write '" + path + "'");
    f << text;
    if (!f)
        throw IoError("failed writing '" + path + "'");
}

std::string render_rows(std::vector<CsvRow> const& rows,
                        std::string const& format)
{
    std::string text;
    if (format == "jsonl")
    {
        for (auto const& r : rows)
            text += format_jsonl_row(r) + "\n";
        return text;
    }
    text = csv_header() + "\n";
    for (auto const& r : rows)
        text += format_csv_row(r) + "\n";
    return text;
}

Json versions_json()
{
    Json v;
    v["irsthz"] = version_string;
    v["model_format"] = std::to_string(model_format_major) + "."
                        + std::to_string(model_format_minor);
    v["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "."
                 + std::to_string(EIGEN_MAJOR_VERSION) + "."
                 + std::to_string(EIGEN_MINOR_VERSION);
    v["compiler"] = __VERSION__;
    return v;
}

//---------------------------------------------------------------------------//
// Shared option plumbing
//---------------------------------------------------------------------------//
//! A flag that overrides one config key when given
struct FlagBinding
{
    std::string key;
    std::string value;
    CLI::Option* option = nullptr;
};

struct CommonArgs
{
    std::string config;
    std::vector<std::string> sets;
    std::string manifest;
    std::deque<FlagBinding> flags;
};

void add_flag(CLI::App* app, CommonArgs& common, std::string const& name,
              std::string const& key, std::string const& help)
{
    auto& b = common.flags.emplace_back();
    b.key = key;
    b.option = app->add_option(name, b.value, help + " (" + key + ")");
}

void add_config_options(CLI::App* app, CommonArgs& common)
{
    app->add_option("--config", common.config,
                    "Config file, or a run manifest to replay");
    app->add_option("--set", common.sets,
                    "Override a key: section.key=value (repeatable)");
    app->add_option("--manifest", common.manifest,
                    "Manifest path (default: <output>.manifest.json)");
}

void add_scenario_flags(CLI::App* app, CommonArgs& common)
{
    add_flag(app, common, "--ps-dbm", "sweep.ps_dbm",
             "Transmit power: value or start:stop:step");
    add_flag(app, common, "--n", "link.n_elements", "IRS elements");
    add_flag(app, common, "--threshold-db", "link.threshold_db",
             "Outage threshold in dB");
    add_flag(app, common, "--mi", "modulation.mi", "RQAM in-phase levels");
    add_flag(app, common, "--mq", "modulation.mq", "RQAM quadrature levels");
    add_flag(app, common, "--beta", "modulation.beta", "RQAM aspect ratio");
    add_flag(app, common, "--m", "modulation.hqam_m", "HQAM order");
    add_flag(app, common, "--phase", "phase.model",
             "ideal, quantized or random");
    add_flag(app, common, "--q-bits", "phase.q_bits", "Quantizer bits");
    add_flag(app, common, "--trials", "mc.trials", "Monte Carlo trials");
    add_flag(app, common, "--seed", "mc.seed", "Monte Carlo seed");
    add_flag(app, common, "--threads", "mc.threads", "Worker threads");
    add_flag(app, common, "--op-model", "surrogate.op_model",
             "Outage surrogate model file");
    add_flag(app, common, "--aser-model", "surrogate.aser_model",
             "ASER surrogate model file");
    add_flag(app, common, "--output", "output.path", "Output file");
    add_flag(app, common, "--format", "output.format", "csv or jsonl");
}

bool ends_with(std::string const& s, std::string const& suffix)
{
    return s.size() >= suffix.size()
           && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string read_file(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ScenarioConfig load_config(CommonArgs const& common)
{
    std::string path = common.config;
    if (path.empty())
    {
        if (char const* dir = std::getenv("IRSTHZ_CONFIG_DIR"))
        {
            auto const p = std::filesystem::path(dir) / "default.cfg";
            if (std::filesystem::exists(p))
                path = p.string();
        }
    }
    ScenarioConfig cfg;
    if (!path.empty())
    {
        path = resolve_config_path(path);
        if (ends_with(path, ".json"))
        {
            Json manifest;
            try
            {
                manifest = Json::parse(read_file(path));
            }
            catch (Json::exception const& e)
            {
                throw ConfigError(path + ": not a valid manifest: "
                                  + e.what());
            }
            if (!manifest.contains("config") || !manifest["config"].is_string())
                throw ConfigError(path + ": manifest has no config text");
            cfg = parse_config_text(manifest["config"].get<std::string>(),
                                    path + "#config");
        }
        else
        {
            cfg = parse_config(path);
        }
    }
    std::vector<std::string> overrides = common.sets;
    for (auto const& f : common.flags)
    {
        if (f.option->count() > 0)
            overrides.push_back(f.key + "=" + f.value);
    }
    apply_overrides(cfg, overrides);
    return cfg;
}

std::string manifest_path(CommonArgs const& common, std::string const& output)
{
    if (!common.manifest.empty())
        return common.manifest;
    if (!output.empty())
        return output + ".manifest.json";
    return {};
}

//---------------------------------------------------------------------------//
// Subcommands
//---------------------------------------------------------------------------//
struct MetricCommand
{
    CLI::App* app = nullptr;
    CommonArgs common;
    SweepRequest req;
};

int run_metric(MetricCommand& cmd, std::vector<std::string> const& args,
               std::ostream& out, std::ostream& err)
{
    ScenarioConfig const cfg = load_config(cmd.common);
    SweepOutcome const outcome = run_sweep(cfg, cmd.req);
    write_text(cfg.output.path, render_rows(outcome.rows, cfg.output.format),
               out);

    std::string const mpath = manifest_path(cmd.common, cfg.output.path);
    if (!mpath.empty())
    {
        Json m;
        m["tool"] = "irsthz";
        m["command"] = cmd.app->get_name();
        m["arguments"] = args;
        m["request"] = {{"metric", cmd.req.metric},
                        {"with_mc", cmd.req.with_mc},
                        {"with_dnn", cmd.req.with_dnn}};
        m["config_hash"] = config_hash(cfg);
        m["seed"] = cfg.mc.seed;
        m["rows"] = outcome.rows.size();
        m["eval_paths"] = outcome.eval_paths;
        m["output"] = {{"path", cfg.output.path},
                       {"format", cfg.output.format}};
        m["versions"] = versions_json();
        m["config"] = emit_config(cfg);
        write_text(mpath, m.dump(2) + "\n", err);
    }
    for (auto const& [path, count] : outcome.eval_paths)
    {
        if (path != to_string(EvalPath::closed_form))
            err << "irsthz: note: " << count << " point(s) evaluated via "
                << path << "\n";
    }
    return exit_ok;
}

struct TrainArgs
{
    std::string kind = "op";
    int samples = 20000;
    int grid_points = 20;
    std::uint64_t data_seed = 7;
    std::uint64_t seed = 1;
    int epochs = 2000;
    double time_limit = 0;
    int threads = 0;
    std::string model_out;
    std::string dataset_in;
    std::string dataset_out;
    std::string manifest;
    bool verbose = false;
};

SurrogateKind parse_kind(std::string const& s)
{
    if (s == "op")
        return SurrogateKind::op;
    if (s == "aser")
        return SurrogateKind::aser;
    throw ConfigError("unknown surrogate kind '" + s + "' (op or aser)");
}

int run_train(TrainArgs const& a, std::vector<std::string> const& args,
              std::ostream& out, std::ostream& err)
{
    SurrogateKind const kind = parse_kind(a.kind);
    Dataset data;
    if (!a.dataset_in.empty())
    {
        data = read_dataset_csv(a.dataset_in);
    }
    else if (kind == SurrogateKind::op)
    {
        data = generate_op_dataset(a.samples, {}, a.data_seed);
    }
    else
    {
        AserDatasetGrid grid;
        grid.points = a.grid_points;
        grid.threads = a.threads;
        data = generate_aser_dataset(grid);
    }
    if (!a.dataset_out.empty())
        write_dataset_csv(data, a.dataset_out);

    TrainConfig tc;
    tc.max_epochs = a.epochs;
    tc.seed = a.seed;
    tc.time_limit_s = a.time_limit;
    if (a.verbose)
    {
        tc.on_epoch = [&err](int e, double tr, double va) {
            if (e % 25 == 0)
                err << "epoch " << e << " train " << tr << " val " << va
                    << "\n";
        };
    }
    TrainResult const r = train_mlp(surrogate_spec(kind),
                                    surrogate_input_transforms(kind),
                                    OutputTransform::neg_log10, data, tc);
    save_model(r.model, a.model_out);
    EvalMetrics const test = evaluate_model(r.model, subset(data, r.split.test));

    Json s;
    s["kind"] = a.kind;
    s["rows"] = data.rows();
    s["generated"] = data.generated;
    s["data_hash"] = data.hash();
    s["epochs"] = r.model.meta.epochs;
    s["best_epoch"] = r.model.meta.best_epoch;
    s["stop_reason"] = r.model.meta.stop_reason;
    s["train_mse"] = r.model.meta.train_mse;
    s["val_mse"] = r.model.meta.val_mse;
    s["test_mse"] = r.model.meta.test_mse;
    s["test_correlation"] = test.correlation;
    s["seconds"] = r.seconds;
    s["model"] = a.model_out;
    out << s.dump() << "\n";

    std::string const mpath
        = a.manifest.empty() ? a.model_out + ".manifest.json" : a.manifest;
    Json m;
    m["tool"] = "irsthz";
    m["command"] = "train";
    m["arguments"] = args;
    m["seed"] = a.seed;
    m["data_seed"] = a.data_seed;
    m["summary"] = s;
    m["versions"] = versions_json();
    write_text(mpath, m.dump(2) + "\n", err);
    return exit_ok;
}

struct PredictArgs
{
    std::string model;
    std::vector<double> inputs;
    bool transformed = false;
};

int run_predict(PredictArgs const& a, std::ostream& out)
{
    MlpModel const model = load_model(a.model);
    if (a.inputs.size() != static_cast<std::size_t>(model.spec.layer_sizes.front()))
        throw ConfigError("model takes "
                          + std::to_string(model.spec.layer_sizes.front())
                          + " inputs, got " + std::to_string(a.inputs.size()));
    double const y = a.transformed ? model.predict_transformed(a.inputs)
                                   : model.predict(a.inputs);
    out << fmt(y) << "\n";
    return exit_ok;
}

struct BenchArgs
{
    std::string metric = "aser-rqam";
    int samples = 1000;
    std::string model;
    std::uint64_t seed = 5;
};

int run_bench(BenchArgs const& a, std::ostream& out, std::ostream& err)
{
    SurrogateKind kind;
    if (a.metric == "op")
        kind = SurrogateKind::op;
    else if (a.metric == "aser-rqam")
        kind = SurrogateKind::aser;
    else
        throw ConfigError("bench supports op and aser-rqam, got '" + a.metric
                          + "'");
    MlpModel model;
    if (a.model.empty())
    {
        // Timing does not depend on the weights; accuracy is then unknown
        model = MlpModel::zeros(surrogate_spec(kind),
                                surrogate_input_transforms(kind),
                                OutputTransform::neg_log10);
        err << "irsthz: note: no --model given; timing uses an untrained "
               "network of the same shape and the MSE column is empty\n";
    }
    else
    {
        model = load_model(a.model);
    }
    BenchResult const r = benchmark_surrogate(kind, model, a.samples, a.seed);
    out << "method,evaluations,total_seconds,microseconds_per_eval,"
           "transformed_mse\n";
    out << "closed_form," << r.samples << "," << fmt(r.closed_form_seconds)
        << "," << fmt(1e6 * r.closed_form_seconds / r.samples) << ",\n";
    out << "surrogate," << r.samples << "," << fmt(r.surrogate_seconds) << ","
        << fmt(1e6 * r.surrogate_seconds / r.samples) << ","
        << (a.model.empty() ? std::string{} : fmt(r.transformed_mse)) << "\n";
    err << "irsthz: speed-up " << fmt(r.speedup()) << "x\n";
    return exit_ok;
}

int run_selftest(std::ostream& out)
{
    int failures = 0;
    auto report = [&](bool ok, std::string const& name,
                      std::string const& detail) {
        out << (ok ? "PASS " : "FAIL ") << name << ": " << detail << "\n";
        failures += ok ? 0 : 1;
    };

    HopParams hop;
    hop.fading = {1.0, 1.04, 1.0};
    hop.pointing = {15.0, 0.75};
    double const gd = diversity_order(hop, hop, 10);
    report(std::abs(gd - 1.737) <= 0.01, "diversity_order", fmt(gd));

    double const slope
        = empirical_diversity_order(1.0328e-7, 1.1184e-7, 60, 59.8);
    report(std::abs(slope - 1.729) <= 0.001, "empirical_slope", fmt(slope));

    double worst = 0;
    for (double s : {1.0, 2.7, 5.0})
    {
        for (double x : {0.1, 1.0, 10.0})
        {
            auto spec = FoxHSpec::meijer_g(2, 0, {1.0}, {s, 0.0});
            double const h = fox_h_univariate(spec, x);
            worst = std::max(worst, std::abs(h / upper_gamma(s, x) - 1));
        }
    }
    report(worst <= 1e-8, "fox_h_upper_gamma", "max rel err " + fmt(worst));

    LseParams lse;
    lse.lambda = 1;
    lse.tau = 3;
    lse.mean = 4;
    lse.variance = 4;
    RqamSpec rq;
    double const cf = aser_rqam(rq, lse, 4.0);
    double const q = quadrature_oracle_aser(rqam_sep_derivative(rq), lse, 4.0);
    report(std::abs(cf / q - 1) <= 1e-6, "aser_rqam_vs_quadrature",
           fmt(cf) + " vs " + fmt(q));

    ScenarioConfig const defaults;
    ScenarioConfig const back = parse_config_text(emit_config(defaults));
    report(config_hash(back) == config_hash(defaults), "config_round_trip",
           config_hash(defaults));

    return failures == 0 ? exit_ok : exit_numeric;
}

}  // namespace

//---------------------------------------------------------------------------//
// Public API
//---------------------------------------------------------------------------//
std::string csv_header()
{
    return "sweep_ps_dbm,metric,analytical,asymptotic,mc_estimate,"
           "mc_std_error,mc_trials,surrogate,config_hash";
}

std::string format_csv_row(CsvRow const& r)
{
    std::string s = fmt(r.sweep_ps_dbm) + "," + r.metric + ","
                    + fmt_opt(r.analytical) + "," + fmt_opt(r.asymptotic) + ","
                    + fmt_opt(r.mc_estimate) + "," + fmt_opt(r.mc_std_error)
                    + ",";
    if (r.mc_trials)
        s += std::to_string(*r.mc_trials);
    s += "," + fmt_opt(r.surrogate) + "," + r.config_hash;
    return s;
}

std::string format_jsonl_row(CsvRow const& r)
{
    Json j;
    j["sweep_ps_dbm"] = r.sweep_ps_dbm;
    j["metric"] = r.metric;
    j["analytical"] = json_opt(r.analytical);
    j["asymptotic"] = json_opt(r.asymptotic);
    j["mc_estimate"] = json_opt(r.mc_estimate);
    j["mc_std_error"] = json_opt(r.mc_std_error);
    j["mc_trials"] = r.mc_trials ? Json(*r.mc_trials) : Json(nullptr);
    j["surrogate"] = json_opt(r.surrogate);
    j["config_hash"] = r.config_hash;
    return j.dump();
}

std::vector<CsvRow> evaluate_sweep(ScenarioConfig const& cfg,
                                   SweepRequest const& req)
{
    return run_sweep(cfg, req).rows;
}

int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err)
{
    CLI::App app{"Performance metrics of IRS-assisted THz links", "irsthz"};
    app.require_subcommand(0, 1);
    bool emit_defaults = false;
    app.add_flag("--emit-defaults", emit_defaults,
                 "Print the default configuration and exit");
    app.set_version_flag("--version", std::string("irsthz ") + version_string);

    // Metric commands share one implementation
    std::deque<MetricCommand> metric_cmds;
    auto add_metric_cmd = [&](std::string const& name,
                              std::string const& description,
                              std::string const& metric, bool mc_forced,
                              bool metric_option) {
        auto& c = metric_cmds.emplace_back();
        c.app = app.add_subcommand(name, description);
        c.req.metric = metric;
        c.req.with_mc = mc_forced;
        add_config_options(c.app, c.common);
        add_scenario_flags(c.app, c.common);
        if (metric_option)
            c.app->add_option("--metric", c.req.metric,
                              "op, aser-rqam, aser-hqam or acc")
                ->required(name == "sweep");
        if (!mc_forced)
            c.app->add_flag("--with-mc", c.req.with_mc,
                            "Add Monte Carlo columns");
        c.app->add_flag("--with-dnn", c.req.with_dnn,
                        "Add surrogate predictions");
    };
    add_metric_cmd("op", "Outage probability", "op", false, false);
    add_metric_cmd("aser-rqam", "Average SER, rectangular QAM", "aser-rqam",
                   false, false);
    add_metric_cmd("aser-hqam", "Average SER, hexagonal QAM", "aser-hqam",
                   false, false);
    add_metric_cmd("acc", "Average channel capacity", "acc", false, false);
    add_metric_cmd("sweep", "Metric curve over the power axis", "op", false,
                   true);
    add_metric_cmd("mc", "Monte Carlo estimate beside the analytical value",
                   "op", true, true);

    TrainArgs train;
    auto* train_cmd = app.add_subcommand("train", "Train a surrogate network");
    train_cmd->add_option("--kind", train.kind, "op or aser")->required();
    train_cmd->add_option("--model-out", train.model_out, "Model file")
        ->required();
    train_cmd->add_option("--samples", train.samples, "Outage dataset rows");
    train_cmd->add_option("--grid-points", train.grid_points,
                          "ASER grid points per continuous axis");
    train_cmd->add_option("--data-seed", train.data_seed,
                          "Outage dataset sampling seed");
    train_cmd->add_option("--seed", train.seed, "Split and init seed");
    train_cmd->add_option("--epochs", train.epochs, "Maximum epochs");
    train_cmd->add_option("--time-limit", train.time_limit,
                          "Wall-clock budget in seconds (0 = none)");
    train_cmd->add_option("--threads", train.threads,
                          "Dataset generation threads");
    train_cmd->add_option("--dataset-in", train.dataset_in,
                          "Train on this CSV instead of generating");
    train_cmd->add_option("--dataset-out", train.dataset_out,
                          "Also write the dataset CSV");
    train_cmd->add_option("--manifest", train.manifest, "Manifest path");
    train_cmd->add_flag("--verbose", train.verbose, "Log training progress");

    PredictArgs predict;
    auto* predict_cmd
        = app.add_subcommand("predict", "Evaluate a surrogate model");
    predict_cmd->add_option("--model", predict.model, "Model file")
        ->required();
    predict_cmd->add_option("--input", predict.inputs, "Raw input values")
        ->required()
        ->delimiter(',');
    predict_cmd->add_flag("--transformed", predict.transformed,
                          "Print the transformed-domain output");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand(
        "bench", "Time closed-form evaluation against a surrogate");
    bench_cmd->add_option("--metric", bench.metric, "op or aser-rqam");
    bench_cmd->add_option("--samples", bench.samples, "Evaluations per method");
    bench_cmd->add_option("--model", bench.model, "Trained model file");
    bench_cmd->add_option("--seed", bench.seed, "Input sampling seed");

    auto* selftest_cmd
        = app.add_subcommand("selftest", "Quick numerical sanity checks");

    try
    {
        // CLI11 consumes a vector from the back
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (CLI::ParseError const& e)
    {
        int const code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (emit_defaults)
        {
            out << emit_config(ScenarioConfig{});
            return exit_ok;
        }
        for (auto& c : metric_cmds)
        {
            if (c.app->parsed())
                return run_metric(c, args, out, err);
        }
        if (train_cmd->parsed())
            return run_train(train, args, out, err);
        if (predict_cmd->parsed())
            return run_predict(predict, out);
        if (bench_cmd->parsed())
            return run_bench(bench, out, err);
        if (selftest_cmd->parsed())
            return run_selftest(out);
        err << app.help();
        return exit_usage;
    }
    catch (ConfigError const& e)
    {
        err << "irsthz: error[config]: " << e.what() << "\n";
        return exit_usage;
    }
    catch (IoError const& e)
    {
        err << "irsthz: error[io]: " << e.what() << "\n";
        return exit_io;
    }
    catch (ModelFormatError const& e)
    {
        err << "irsthz: error[io]: " << e.what() << "\n";
        return exit_io;
    }
    catch (NumericError const& e)
    {
        err << "irsthz: error[numeric]: " << e.what() << "\n";
        return exit_numeric;
    }
    catch (std::domain_error const& e)
    {
        err << "irsthz: error[numeric]: " << e.what() << "\n";
        return exit_numeric;
    }
    catch (std::exception const& e)
    {
        err << "irsthz: error[internal]: " << e.what() << "\n";
        return exit_numeric;
    }
}

}  // namespace irsthz
