#include "interplab_tools/cli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "interplab/bernstein.hpp"
#include "interplab/complexint.hpp"
#include "interplab/error.hpp"
#include "interplab/lagrange.hpp"
#include "interplab/optimize.hpp"
#include "interplab/parallel.hpp"
#include "interplab/potential.hpp"
#include "interplab/trig.hpp"
#include "interplab/version.hpp"
#include "interplab_tools/acceptance.hpp"
#include "interplab_tools/batteries.hpp"
#include "interplab_tools/config.hpp"
#include "interplab_tools/io.hpp"

namespace interplab::tools {

namespace {
using json = nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Context {
    RunConfig cfg;
    json inputs = json::object();
    std::ostream& out;
    std::ostream& err;

    NodeSet load_nodes(const std::string& path) {
        const std::string bytes = read_file(path);
        inputs[path] = "fnv1a64:" + fnv1a_hex(bytes);
        json doc;
        try {
            doc = json::parse(bytes);
        } catch (const json::parse_error& e) {
            throw InputError(path + ": " + e.what());
        }
        return nodes_from_json(doc);
    }
};

json check_json(const std::string& name, double value, double limit, bool pass) {
    return {{"name", name}, {"ratio", value}, {"budget", limit}, {"pass", pass}};
}

int finish(Context& ctx, json result, const json& checks, bool pass) {
    json report{{"command", to_string(ctx.cfg.command)},
                {"version", kVersion},
                {"config", config_to_json(ctx.cfg)},
                {"inputs", ctx.inputs},
                {"result", std::move(result)},
                {"checks", checks},
                {"pass", pass}};
    const std::string text = report.dump(2) + "\n";
    if (ctx.cfg.output_path.empty()) {
        ctx.out << text;
    } else {
        write_file(ctx.cfg.output_path, text);
    }
    return pass ? kExitPass : kExitFail;
}

Interval make_interval(const std::vector<double>& v) {
    if (v.size() != 2) throw UsageError("--interval takes two numbers");
    return Interval{v[0], v[1]};
}

// ---- nodes

struct NodesOpts {
    std::string kind = "chebyshev";
    std::size_t n = 0;
    double magnitude = 0.0;
    std::string base;
    std::string out;
};

int cmd_nodes(Context& ctx, const NodesOpts& o) {
    if (o.n == 0 && o.base.empty()) throw UsageError("nodes: --n is required");
    NodeSet nodes = [&] {
        if (o.kind == "chebyshev") return chebyshev_nodes(o.n);
        if (o.kind == "equispaced") return equispaced_nodes(o.n);
        if (o.kind == "random") return random_nodes(o.n, ctx.cfg.seed);
        if (o.kind == "perturbed") {
            const NodeSet base = o.base.empty() ? chebyshev_nodes(o.n) : ctx.load_nodes(o.base);
            return perturbed_nodes(base, o.magnitude, ctx.cfg.seed);
        }
        throw UsageError("nodes: unknown --kind " + o.kind);
    }();
    if (o.out.empty()) {
        ctx.out << nodes_to_json(nodes).dump(2) << "\n";
    } else {
        write_nodes(o.out, nodes);
    }
    return kExitPass;
}

// ---- lebesgue

struct LebesgueOpts {
    std::string nodes;
    std::vector<double> interval{-1.0, 1.0};
    std::string mode = "both";
    std::optional<std::size_t> grid;
    std::optional<std::size_t> order;
    std::string csv;
    std::size_t csv_points = 2001;
};

int cmd_lebesgue(Context& ctx, const LebesgueOpts& o) {
    const NodeSet nodes = ctx.load_nodes(o.nodes);
    const Interval I = make_interval(o.interval);
    if (o.mode != "sup" && o.mode != "integral" && o.mode != "both") throw UsageError("lebesgue: --mode is sup, integral or both");
    const std::size_t grid = o.grid.value_or(ctx.cfg.grid("lebesgue.grid_points_per_gap", kDefaultGridPointsPerGap));
    const std::size_t order = o.order.value_or(ctx.cfg.grid("lebesgue.quadrature_order", kDefaultQuadratureOrder));
    const LagrangeBasis basis(nodes);
    json result{{"label", nodes.label()}, {"n", nodes.size()}, {"interval", {I.lo, I.hi}}};
    json checks = json::array();
    bool pass = true;
    if (o.mode != "integral") {
        const LebesgueReport r = lebesgue_sup(basis, I, grid);
        result["sup_value"] = r.sup_value;
        result["argmax"] = r.argmax;
        result["grid_points_per_gap"] = grid;
        const bool ok = r.sup_value >= 1.0;
        checks.push_back(check_json("sup_at_least_one", r.sup_value, 1.0, ok));
        pass = pass && ok;
    }
    if (o.mode != "sup") {
        const LebesgueReport r = lebesgue_integral(basis, I, order);
        result["integral_value"] = r.integral_value;
        result["quadrature_order"] = order;
        const bool ok = r.integral_value >= I.length() * (1.0 - 1e-12);
        checks.push_back(check_json("integral_at_least_length", r.integral_value, I.length(), ok));
        pass = pass && ok;
    }
    if (!o.csv.empty()) {
        if (o.csv_points < 2) throw UsageError("lebesgue: --csv-points must be >= 2");
        std::vector<double> xs(o.csv_points), ys(o.csv_points);
        for (std::size_t i = 0; i < o.csv_points; ++i) {
            xs[i] = I.lo + (I.hi - I.lo) * static_cast<double>(i) / static_cast<double>(o.csv_points - 1);
            ys[i] = basis.lebesgue(xs[i]);
        }
        write_csv(o.csv, "lambda", xs, ys);
    }
    return finish(ctx, std::move(result), checks, pass);
}

// ---- potential

struct PotentialOpts {
    std::string nodes;
    std::optional<double> eta;
    double beta = kDefaultAmplitudeExponent;
    std::vector<double> interval;
    std::optional<double> step;
    std::size_t samples = 10000;
    std::size_t density_points = 201;
    std::optional<double> x;
    std::optional<double> slack;
    std::string csv_density;
    std::string csv_amplitude;
    std::string csv_potential;
};

int cmd_potential(Context& ctx, const PotentialOpts& o) {
    const NodeSet nodes = ctx.load_nodes(o.nodes);
    const std::size_t n = nodes.size();
    if (n < 2) throw UsageError("potential: need at least two nodes");
    const double eta = o.eta.value_or(default_eta(n));
    const Interval I = o.interval.empty() ? Interval{nodes.front(), nodes.back()} : make_interval(o.interval);
    const double max_step = std::pow(static_cast<double>(n), -o.beta) / 4.0;
    const double step = o.step.value_or(std::min(max_step, 1e-4));
    if (o.density_points < 2) throw UsageError("potential: --density-points must be >= 2");

    std::vector<double> dxs(o.density_points);
    for (std::size_t i = 0; i < dxs.size(); ++i)
        dxs[i] = I.lo + (I.hi - I.lo) * static_cast<double>(i) / static_cast<double>(dxs.size() - 1);
    const DensityProfile density = density_profile(nodes, dxs, eta);
    const AmplitudeProfile amp = amplitude_profile(nodes, I, step, o.beta);

    json checks = json::array();
    bool pass = true;
    const auto add = [&](const std::string& name, double value, double limit, bool ok) {
        checks.push_back(check_json(name, value, limit, ok));
        pass = pass && ok;
    };
    const SandwichCheck sw = deltax_sandwich_check(nodes, I, o.samples);
    add("deltax_sandwich", sw.worst_margin, 1e-9, sw.pass);

    double domination = -std::numeric_limits<double>::infinity();
    double lipschitz = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < amp.xs.size(); ++i) {
        if (std::isfinite(amp.log_abs_p[i])) domination = std::max(domination, amp.log_abs_p[i] - amp.log_a[i]);
        if (i > 0) lipschitz = std::max(lipschitz, std::abs(amp.log_a[i] - amp.log_a[i - 1]) - amp.slope() * (amp.xs[i] - amp.xs[i - 1]));
    }
    add("amplitude_domination", domination, 0.0, domination <= 0.0);
    add("amplitude_log_lipschitz", lipschitz, 1e-9, lipschitz <= 1e-9);

    json result{{"label", nodes.label()},
                {"n", n},
                {"alpha_hat", alpha_hat(nodes)},
                {"eta", eta},
                {"beta", o.beta},
                {"interval", {I.lo, I.hi}},
                {"amplitude_step", amp.step},
                {"amplitude_points", amp.xs.size()},
                {"density", {{"xs", density.xs}, {"rho", density.rho}}}};
    if (o.x) {
        const double slack = o.slack.value_or(ctx.cfg.tolerance("potential.pderiv_slack", 0.2));
        const DerivativeBoundCheck d = pderiv_bound_check(nodes, amp, density, *o.x, slack);
        result["pderiv"] = {{"x", *o.x}, {"ratio", d.ratio}, {"rho", d.rho}, {"log_a", d.log_a}};
        add("pderiv_bound", d.ratio, 1.0 + slack, d.pass);
    }
    if (!o.csv_density.empty()) write_csv(o.csv_density, "rho", density.xs, density.rho);
    if (!o.csv_amplitude.empty()) write_csv(o.csv_amplitude, "log_a", amp.xs, amp.log_a);
    if (!o.csv_potential.empty()) {
        std::vector<double> u(density.xs.size());
        for (std::size_t i = 0; i < u.size(); ++i) u[i] = log_potential(nodes, {density.xs[i], eta});
        write_csv(o.csv_potential, "potential", density.xs, u);
    }
    return finish(ctx, std::move(result), checks, pass);
}

// ---- trig-verify

struct TrigOpts {
    std::optional<std::size_t> trials;
    std::optional<std::size_t> max_degree;
};

int cmd_trig(Context& ctx, const TrigOpts& o) {
    const std::size_t trials = o.trials.value_or(ctx.cfg.grid("trig.trials", 200));
    const std::size_t max_degree = o.max_degree.value_or(ctx.cfg.grid("trig.max_degree", 10));
    if (max_degree == 0) throw UsageError("trig-verify: --max-degree must be >= 1");
    const auto records = trig_battery(trials, max_degree, ctx.cfg.seed);
    json arr = json::array();
    bool pass = true;
    for (const auto& r : records) {
        arr.push_back({{"seed", r.seed},
                       {"degree", r.degree},
                       {"sup", r.sup},
                       {"integral", r.integral},
                       {"l1_ratio", r.l1_ratio()},
                       {"recip_ratio", r.recip_ratio()},
                       {"pass", r.pass}});
        pass = pass && r.pass;
    }
    json checks = json::array();
    checks.push_back(check_json("all_records_pass", static_cast<double>(std::count_if(records.begin(), records.end(),
                                                                                     [](const TrigRecord& r) { return !r.pass; })),
                                0.0, pass));
    return finish(ctx, json{{"trials", trials}, {"max_degree", max_degree}, {"records", std::move(arr)}}, checks, pass);
}

// ---- bernstein

struct BernsteinOpts {
    std::string mode = "global";
    std::optional<std::size_t> trials;
    std::optional<std::size_t> grid;
    std::size_t n = 1000;
    std::string nodes;
    std::optional<double> xstar;
    double x = 0.0;
    double T = 20.0;
    double y0 = 2.0;
    double c1 = 10.0;
    double c2 = 10.0;
};

json report_checks(const BernsteinReport& rep, bool& pass) {
    json arr = json::array();
    for (const auto& c : rep.checks) {
        arr.push_back(check_json(c.name, c.ratio, c.limit, c.pass));
        pass = pass && c.pass;
    }
    return arr;
}

int cmd_bernstein(Context& ctx, const BernsteinOpts& o) {
    if (o.mode == "global") {
        const std::size_t trials = o.trials.value_or(ctx.cfg.grid("ds.trials", 100));
        const std::size_t grid = o.grid.value_or(ctx.cfg.grid("ds.grid", 4096));
        const auto members = ds_battery(trials, ctx.cfg.seed);
        const auto reports = parallel_map(members.size(), [&](std::size_t i) { return global_ds_report(members[i].p, grid); });
        json arr = json::array();
        bool pass = true;
        for (std::size_t i = 0; i < members.size(); ++i) {
            bool member_pass = true;
            json checks = report_checks(reports[i], member_pass);
            arr.push_back({{"index", i},
                           {"degree", members[i].p.degree()},
                           {"sinusoid", members[i].sinusoid},
                           {"A", reports[i].A},
                           {"argmax", reports[i].argmax},
                           {"checks", std::move(checks)},
                           {"pass", member_pass}});
            pass = pass && member_pass;
        }
        json checks = json::array();
        checks.push_back(check_json("all_members_pass", pass ? 0.0 : 1.0, 0.0, pass));
        return finish(ctx, json{{"mode", "global"}, {"grid", grid}, {"members", std::move(arr)}}, checks, pass);
    }
    if (o.mode != "local") throw UsageError("bernstein: --mode is global or local");
    const NodeSet nodes = o.nodes.empty() ? chebyshev_nodes(o.n) : ctx.load_nodes(o.nodes);
    const double xstar = o.xstar.value_or(local_argmax_abs_P(nodes, 0.0));
    const double rho = density_estimate(nodes, xstar, default_eta(nodes.size()));
    const Rect rect{Interval{-o.T, o.T}, o.y0};
    const HoloSampler q = rescale_Q(nodes, xstar, rho, rect);
    LocalOptions opt;
    opt.c1 = o.c1;
    opt.c2 = o.c2;
    const BernsteinReport rep = local_bernstein_report(q, rect, o.x, opt);
    bool pass = true;
    json checks = report_checks(rep, pass);
    json result{{"mode", "local"},
                {"label", nodes.label()},
                {"n", nodes.size()},
                {"xstar", xstar},
                {"rho", rho},
                {"rect", {{"interval", {rect.I.lo, rect.I.hi}}, {"y0", rect.y0}}},
                {"x", o.x},
                {"A", rep.A},
                {"lambda", rep.lambda},
                {"L", rep.L},
                {"c1", rep.c1},
                {"c2", rep.c2},
                {"error_budget", rep.error_budget}};
    return finish(ctx, std::move(result), checks, pass);
}

// ---- residue-check

struct ResidueOpts {
    std::optional<std::size_t> points_per_edge;
    std::optional<std::size_t> area_grid;
};

json complex_json(std::complex<double> z) { return {z.real(), z.imag()}; }

int cmd_residue(Context& ctx, const ResidueOpts& o) {
    const std::size_t ppe = o.points_per_edge.value_or(ctx.cfg.grid("residue.points_per_edge", 64));
    const std::size_t area = o.area_grid.value_or(ctx.cfg.grid("residue.area_grid", kDefaultAreaGrid));
    const double tol = ctx.cfg.tolerance("c9.max_residual", 1e-6);
    const auto cases = residue_battery();
    const auto results = parallel_map(cases.size(), [&](std::size_t i) {
        return weighted_residue_convergence(cases[i].f, cases[i].w, cases[i].box, tol, ppe, area);
    });
    json arr = json::array();
    json checks = json::array();
    bool pass = true;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto& r = results[i];
        arr.push_back({{"case", cases[i].name},
                       {"contour_value", complex_json(r.coarse.contour_value)},
                       {"residue_sum", complex_json(r.coarse.residue_sum)},
                       {"area_term", complex_json(r.coarse.area_term)},
                       {"residual", r.coarse.residual},
                       {"residual_doubled", r.fine.residual},
                       {"pass", r.pass}});
        checks.push_back(check_json(cases[i].name, r.coarse.residual, tol, r.pass));
        pass = pass && r.pass;
    }
    return finish(ctx, json{{"points_per_edge", ppe}, {"area_grid", area}, {"cases", std::move(arr)}}, checks, pass);
}

// ---- harmonic

struct HarmonicOpts {
    double T = 5.0;
    double y0 = 1.0;
    double x0 = 0.0;
    double eta = 0.5;
    std::optional<std::size_t> M;
    double C = 10.0;
    std::optional<std::size_t> grid;
};

int cmd_harmonic(Context& ctx, const HarmonicOpts& o) {
    const std::size_t M = o.M.value_or(ctx.cfg.grid("harmonic.series_order", 64));
    const std::size_t grid = o.grid.value_or(ctx.cfg.grid("harmonic.poisson_grid", 20));
    const HarmonicMassReport r = harmonic_side_mass(o.T, o.y0, o.x0, o.eta, M, o.C, grid);
    const PoissonDominance pd = poisson_dominance_check(o.T, o.y0, o.x0, o.eta, grid);
    const double sum_tol = ctx.cfg.tolerance("c10.mass_sum_error", 1e-6);
    json checks = json::array();
    checks.push_back(check_json("mass_sum", r.sum_residual, sum_tol, r.sum_residual <= sum_tol));
    checks.push_back(check_json("poisson_dominance", pd.worst_excess, 1e-6, r.poisson_bound_ok));
    checks.push_back(check_json("upper_mass", r.upper_mass, o.eta / o.y0, r.upper_bound_ok));
    checks.push_back(check_json("side_mass", r.side_mass, r.side_bound, r.side_bound_ok));
    const bool pass = r.sum_residual <= sum_tol && r.poisson_bound_ok && r.upper_bound_ok && r.side_bound_ok;
    json result{{"T", o.T},
                {"y0", o.y0},
                {"x0", o.x0},
                {"eta", o.eta},
                {"M", M},
                {"C", o.C},
                {"lower_mass", r.lower_mass},
                {"upper_mass", r.upper_mass},
                {"side_mass", r.side_mass},
                {"side_fejer_M", r.side_fejer},
                {"side_fejer_half_M", r.side_fejer_half},
                {"side_fejer_difference", std::abs(r.side_fejer - r.side_fejer_half)},
                {"poisson_grid", grid},
                {"series_mass", pd.series_mass},
                {"poisson_mass", pd.poisson_mass}};
    return finish(ctx, std::move(result), checks, pass);
}

// ---- optimize

struct OptimizeOpts {
    std::size_t n = 16;
    std::vector<double> interval{-1.0, 1.0};
    std::string objective = "sup";
    std::size_t iterations = 100;
    std::string start = "chebyshev";
    std::string start_file;
    std::optional<std::size_t> grid;
    std::optional<double> slack;
    std::string nodes_out;
};

int cmd_optimize(Context& ctx, const OptimizeOpts& o) {
    const Interval I = make_interval(o.interval);
    const Objective objective = parse_objective(o.objective);
    const NodeSet start = [&] {
        if (!o.start_file.empty()) return ctx.load_nodes(o.start_file);
        if (o.start == "chebyshev") return chebyshev_nodes(o.n);
        if (o.start == "equispaced") return equispaced_nodes(o.n);
        if (o.start == "random") return random_nodes(o.n, ctx.cfg.seed);
        throw UsageError("optimize: --start is chebyshev, equispaced or random");
    }();
    OptimizeOptions opt;
    opt.grid_points_per_gap = o.grid.value_or(ctx.cfg.grid("optimize.grid_points_per_gap", opt.grid_points_per_gap));
    opt.certificate_slack = o.slack.value_or(ctx.cfg.tolerance("optimize.certificate_slack", opt.certificate_slack));
    const OptimizationResult r = optimize_nodes(start, I, objective, o.iterations, ctx.cfg.seed, opt);

    const double floor = objective == Objective::Sup ? 1.0 : I.length();
    const bool improved = r.best_value <= r.initial_value;
    const bool sorted = std::is_sorted(r.trace.rbegin(), r.trace.rend());
    // the [-1, 1] sup certificate has no slack built in
    const bool full_sup = objective == Objective::Sup && I == Interval{};
    const double cert_floor = full_sup ? r.certificate - opt.certificate_slack : r.certificate;
    json checks = json::array();
    checks.push_back(check_json("nonincreasing", r.best_value, r.initial_value, improved));
    checks.push_back(check_json("trace_sorted", sorted ? 0.0 : 1.0, 0.0, sorted));
    checks.push_back(check_json("above_certificate", r.best_value, cert_floor, r.best_value >= cert_floor));
    checks.push_back(check_json("above_trivial_floor", r.best_value, floor, r.best_value >= floor * (1.0 - 1e-12)));
    bool pass = true;
    for (const auto& c : checks) pass = pass && c["pass"].get<bool>();
    if (!o.nodes_out.empty()) write_nodes(o.nodes_out, r.best_nodes);
    json result{{"n", start.size()},
                {"interval", {I.lo, I.hi}},
                {"objective", to_string(objective)},
                {"seed", r.seed},
                {"iterations", r.iterations},
                {"accepted", r.accepted},
                {"initial_value", r.initial_value},
                {"best_value", r.best_value},
                {"fine_value", r.fine_value},
                {"certificate", r.certificate},
                {"certificate_slack", opt.certificate_slack},
                {"grid_points_per_gap", opt.grid_points_per_gap},
                {"quadrature_order", opt.quadrature_order},
                {"trace", r.trace},
                {"best_nodes", nodes_to_json(r.best_nodes)}};
    return finish(ctx, std::move(result), checks, pass);
}

// ---- verify-all

int cmd_verify_all(Context& ctx, const std::vector<int>& only) {
    std::vector<CriterionResult> results;
    for (int id = 1; id <= kCriterionCount; ++id) {
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        results.push_back(run_criterion(id, ctx.cfg));
        ctx.err << format_criterion(results.back()) << "\n";
    }
    json summary = summary_json(results);
    const bool pass = summary["pass"].get<bool>();
    json checks = std::move(summary["checks"]);
    return finish(ctx, json{{"criteria", results.size()}}, checks, pass);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"interplab: Lebesgue constants, node potentials and Bernstein-type checks"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    std::optional<std::size_t> workers;
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_path;
    app.add_option("--workers", workers, "worker threads (default: $INTERPLAB_WORKERS or all cores)")->check(CLI::PositiveNumber);
    app.add_option("--config", config_path, "RunConfig JSON file");

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "64-bit seed");
        sub->add_option("--out", out_path, "report path (default: stdout)");
    };

    NodesOpts nodes_o;
    auto* nodes_cmd = app.add_subcommand("nodes", "generate a node set");
    nodes_cmd->add_option("--kind", nodes_o.kind, "chebyshev | equispaced | random | perturbed");
    nodes_cmd->add_option("--n", nodes_o.n, "node count");
    nodes_cmd->add_option("--magnitude", nodes_o.magnitude, "jitter for --kind perturbed");
    nodes_cmd->add_option("--base", nodes_o.base, "base node file for --kind perturbed");
    nodes_cmd->add_option("--seed", seed, "64-bit seed");
    nodes_cmd->add_option("--out", nodes_o.out, "node file to write (default: stdout)");

    LebesgueOpts leb_o;
    auto* leb_cmd = app.add_subcommand("lebesgue", "Lebesgue function sup and integral");
    leb_cmd->add_option("--nodes", leb_o.nodes, "node file")->required();
    leb_cmd->add_option("--interval", leb_o.interval, "a b")->expected(2);
    leb_cmd->add_option("--mode", leb_o.mode, "sup | integral | both");
    leb_cmd->add_option("--grid", leb_o.grid, "grid points per gap");
    leb_cmd->add_option("--order", leb_o.order, "Gauss-Legendre order");
    leb_cmd->add_option("--csv", leb_o.csv, "x,lambda dump");
    leb_cmd->add_option("--csv-points", leb_o.csv_points, "points in the CSV dump");
    common(leb_cmd);

    PotentialOpts pot_o;
    auto* pot_cmd = app.add_subcommand("potential", "potential, density and amplitude diagnostics");
    pot_cmd->add_option("--nodes", pot_o.nodes, "node file")->required();
    pot_cmd->add_option("--eta", pot_o.eta, "smoothing ordinate (default 5 log n / n)");
    pot_cmd->add_option("--beta", pot_o.beta, "amplitude exponent");
    pot_cmd->add_option("--interval", pot_o.interval, "a b (default: node hull)")->expected(2);
    pot_cmd->add_option("--step", pot_o.step, "amplitude grid step");
    pot_cmd->add_option("--samples", pot_o.samples, "sandwich check samples");
    pot_cmd->add_option("--density-points", pot_o.density_points, "density profile points");
    pot_cmd->add_option("--x", pot_o.x, "point for the P' bound");
    pot_cmd->add_option("--slack", pot_o.slack, "slack of the P' bound");
    pot_cmd->add_option("--csv-density", pot_o.csv_density, "x,rho dump");
    pot_cmd->add_option("--csv-amplitude", pot_o.csv_amplitude, "x,log_a dump");
    pot_cmd->add_option("--csv-potential", pot_o.csv_potential, "x,potential dump at height eta");
    common(pot_cmd);

    TrigOpts trig_o;
    auto* trig_cmd = app.add_subcommand("trig-verify", "toy-model inequalities on random real-rooted trig polynomials");
    trig_cmd->add_option("--trials", trig_o.trials, "number of polynomials");
    trig_cmd->add_option("--max-degree", trig_o.max_degree, "degrees cycle through 1..max");
    common(trig_cmd);

    BernsteinOpts bern_o;
    auto* bern_cmd = app.add_subcommand("bernstein", "global or local Bernstein-type checks");
    bern_cmd->add_option("--mode", bern_o.mode, "global | local");
    bern_cmd->add_option("--trials", bern_o.trials, "global: battery size");
    bern_cmd->add_option("--grid", bern_o.grid, "global: sample points");
    bern_cmd->add_option("--n", bern_o.n, "local: Chebyshev node count");
    bern_cmd->add_option("--nodes", bern_o.nodes, "local: node file instead of Chebyshev");
    bern_cmd->add_option("--xstar", bern_o.xstar, "local: rescaling centre (default: max of |P| near 0)");
    bern_cmd->add_option("--x", bern_o.x, "local: evaluation point");
    bern_cmd->add_option("--T", bern_o.T, "local: rectangle half-width");
    bern_cmd->add_option("--y0", bern_o.y0, "local: rectangle height");
    bern_cmd->add_option("--c1", bern_o.c1, "local: exponential error constant");
    bern_cmd->add_option("--c2", bern_o.c2, "local: type error constant");
    common(bern_cmd);

    ResidueOpts res_o;
    auto* res_cmd = app.add_subcommand("residue-check", "weighted residue identity on the built-in battery");
    res_cmd->add_option("--points-per-edge", res_o.points_per_edge, "contour nodes per edge");
    res_cmd->add_option("--area-grid", res_o.area_grid, "area cells per axis");
    common(res_cmd);

    HarmonicOpts harm_o;
    auto* harm_cmd = app.add_subcommand("harmonic", "harmonic measure of a rectangle");
    harm_cmd->add_option("--T", harm_o.T, "half-width");
    harm_cmd->add_option("--y0", harm_o.y0, "height");
    harm_cmd->add_option("--x0", harm_o.x0, "start abscissa");
    harm_cmd->add_option("--eta", harm_o.eta, "start height");
    harm_cmd->add_option("--M", harm_o.M, "Fejer order");
    harm_cmd->add_option("--C", harm_o.C, "side-mass constant");
    harm_cmd->add_option("--grid", harm_o.grid, "Poisson comparison pieces");
    common(harm_cmd);

    OptimizeOpts opt_o;
    auto* opt_cmd = app.add_subcommand("optimize", "coordinate-descent node optimization");
    opt_cmd->add_option("--n", opt_o.n, "node count");
    opt_cmd->add_option("--interval", opt_o.interval, "a b")->expected(2);
    opt_cmd->add_option("--objective", opt_o.objective, "sup | integral");
    opt_cmd->add_option("--iterations", opt_o.iterations, "sweeps");
    opt_cmd->add_option("--start", opt_o.start, "chebyshev | equispaced | random");
    opt_cmd->add_option("--start-file", opt_o.start_file, "start from a node file");
    opt_cmd->add_option("--grid", opt_o.grid, "grid points per gap of the sup objective");
    opt_cmd->add_option("--slack", opt_o.slack, "certificate slack");
    opt_cmd->add_option("--nodes-out", opt_o.nodes_out, "write the best nodes");
    common(opt_cmd);

    std::vector<int> only;
    auto* all_cmd = app.add_subcommand("verify-all", "run the acceptance suite");
    all_cmd->add_option("--criteria", only, "subset of criteria 1..11");
    common(all_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        Context ctx{RunConfig{}, json::object(), out, err};
        if (!config_path.empty()) {
            const std::string bytes = read_file(config_path);
            json doc;
            try {
                doc = json::parse(bytes);
            } catch (const json::parse_error& e) {
                throw ConfigError(config_path + ": " + e.what());
            }
            ctx.cfg = config_from_json(doc);
            ctx.inputs[config_path] = "fnv1a64:" + fnv1a_hex(bytes);
        }
        if (workers) set_worker_count(*workers);
        if (seed) ctx.cfg.seed = *seed;
        if (!out_path.empty()) ctx.cfg.output_path = out_path;
        for (int id : only) {
            if (id < 1 || id > kCriterionCount) throw UsageError("--criteria takes ids 1..11");
        }
        CLI::App* chosen = app.get_subcommands().front();
        ctx.cfg.command = *parse_command(chosen->get_name());
        switch (ctx.cfg.command) {
            case Command::Nodes: return cmd_nodes(ctx, nodes_o);
            case Command::Lebesgue: return cmd_lebesgue(ctx, leb_o);
            case Command::Potential: return cmd_potential(ctx, pot_o);
            case Command::TrigVerify: return cmd_trig(ctx, trig_o);
            case Command::Bernstein: return cmd_bernstein(ctx, bern_o);
            case Command::ResidueCheck: return cmd_residue(ctx, res_o);
            case Command::Harmonic: return cmd_harmonic(ctx, harm_o);
            case Command::Optimize: return cmd_optimize(ctx, opt_o);
            case Command::VerifyAll: return cmd_verify_all(ctx, only);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace interplab::tools
