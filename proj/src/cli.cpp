#include "stilde/cli.hpp"

#include "stilde/convergence.hpp"
#include "stilde/dilatation.hpp"
#include "stilde/domain_json.hpp"
#include "stilde/metrics.hpp"
#include "stilde/mobius.hpp"
#include "stilde/sampling.hpp"
#include "stilde/verify.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

namespace stilde {

namespace {

constexpr std::array<std::pair<Command, const char*>, 8> kCommandNames{{
    {Command::Eval, "eval"},
    {Command::VerifyAxioms, "verify-axioms"},
    {Command::VerifySharpness, "verify-sharpness"},
    {Command::VerifyBounds, "verify-bounds"},
    {Command::Balls, "balls"},
    {Command::Mobius, "mobius"},
    {Command::Hausdorff, "hausdorff"},
    {Command::Dilatation, "dilatation"},
}};

constexpr std::size_t kBallCloud = 1000;
constexpr std::size_t kTraceLength = 30;
constexpr std::size_t kStabilitySetSize = 20;
constexpr std::size_t kDilatationProbes = 256;

std::string point_cell(const Point& p) {
    std::string s;
    for (std::size_t i = 0; i < p.dim(); ++i) s += (i ? ";" : "") + format_double(p[i]);
    return s;
}

const DomainSpec& require_domain(const RunConfig& cfg) {
    if (!cfg.domain) throw ConfigError(to_string(cfg.command) + " requires --domain");
    return *cfg.domain;
}

std::size_t samples_or(const RunConfig& cfg, std::size_t fallback) {
    return cfg.samples == 0 ? fallback : cfg.samples;
}

void base_meta(Report& r, const RunConfig& cfg) {
    r.command = to_string(cfg.command);
    r.add_meta("seed", static_cast<std::int64_t>(cfg.seed));
    r.add_meta("c", cfg.c);
    if (cfg.domain) r.add_meta("domain", domain_to_json(*cfg.domain).dump());
}

// Shared tail of every sweep command: one row per check, exit 2 on the first
// violated check with its witness.
void summarize(RunResult& out, const SweepResult& sweep) {
    out.report.columns = {"check", "samples", "violations", "worst_slack", "tolerance"};
    for (const CheckSummary& c : sweep.checks) {
        out.report.rows.push_back({c.name, static_cast<std::int64_t>(c.samples),
                                   static_cast<std::int64_t>(c.violations), c.worst_slack, c.tolerance});
    }
    if (const CheckSummary* bad = sweep.first_failure()) {
        out.exit_code = kExitViolation;
        out.witness = witness_json(bad->name, *bad->first_violation);
        out.report.add_meta("witness", out.witness->dump());
    }
}

void run_eval(RunResult& out, const RunConfig& cfg) {
    const DomainSpec& domain = require_domain(cfg);
    if (!cfg.x || !cfg.y) throw ConfigError("eval requires --x and --y");
    const Point& x = *cfg.x;
    const Point& y = *cfg.y;
    const MetricParams p(cfg.c);
    const BoundarySet& g = domain.boundary;
    out.report.add_meta("x", point_cell(x));
    out.report.add_meta("y", point_cell(y));
    out.report.columns = {"quantity", "value"};
    auto& rows = out.report.rows;
    rows.push_back({std::string("d_x"), dist_to_set(x, g)});
    rows.push_back({std::string("d_y"), dist_to_set(y, g)});
    rows.push_back({std::string("euclid"), euclid_dist(x, y)});
    rows.push_back({std::string("stilde"), stilde(x, y, g)});
    rows.push_back({std::string("S"), stilde_metric(x, y, g, p)});
    const DistanceSandwich ds = distance_sandwich(x, y, g, p);
    rows.push_back({std::string("sandwich_lower"), ds.lower});
    rows.push_back({std::string("sandwich_upper"), ds.upper});
    if (domain.interior && domain.contains(x) && domain.contains(y)) {
        const TBounds b = t_comparison_bounds(x, y, domain, p);
        rows.push_back({std::string("t"), b.t});
        rows.push_back({std::string("t_lower"), b.lower});
        rows.push_back({std::string("t_upper"), b.upper});
    }
    if (x.norm() < 1.0 && y.norm() < 1.0) {
        rows.push_back({std::string("th_half_rho"), hyperbolic_th_half(x, y)});
        if (x.norm() > 0.0 && y.norm() > 0.0) {
            rows.push_back({std::string("hyperbolic_bound"), hyperbolic_upper_bound(x, y, p)});
        }
    }
}

void run_sharpness(RunResult& out, const RunConfig& cfg) {
    std::vector<double> Ms{3.0, 1e2, 1e4, 1e6};
    if (cfg.domain && cfg.domain->dim() == 1 && cfg.domain->boundary.get_if<FinitePointSet>()) {
        const auto& pts = cfg.domain->boundary.members();
        if (pts.size() == 2 && pts[0][0] == -pts[1][0] && pts[0][0] != 0.0) Ms = {std::abs(pts[0][0])};
    }
    const SharpnessSweep sweep = sharpness_sweep(Ms, cfg.c);
    out.report.add_meta("sup_deficiency", sweep.sup_deficiency);
    out.report.add_meta("c_admissible", std::string(cfg.c >= sweep.sup_deficiency ? "true" : "false"));
    for (const CheckSummary& c : sweep.result.checks) {
        out.report.add_meta(c.name + "_violations", static_cast<std::int64_t>(c.violations));
    }
    out.report.columns = {"M", "t", "deficiency", "closed_form", "abs_err"};
    for (const SharpnessRow& r : sweep.rows) {
        out.report.rows.push_back({r.M, r.t, r.deficiency, r.closed_form, std::abs(r.deficiency - r.closed_form)});
    }
    if (const CheckSummary* bad = sweep.result.first_failure()) {
        out.exit_code = kExitViolation;
        out.witness = witness_json(bad->name, *bad->first_violation);
        out.report.add_meta("witness", out.witness->dump());
    }
}

void run_balls(RunResult& out, const RunConfig& cfg) {
    const BallSweep sweep =
        verify_balls(require_domain(cfg), MetricParams(cfg.c), samples_or(cfg, 100), kBallCloud, cfg.seed);
    out.report.add_meta("cloud", static_cast<std::int64_t>(kBallCloud));
    out.report.add_meta("tolerance", kBallTol);
    out.report.columns = {"center", "dx", "r", "l", "L", "cloud", "in_t_l", "in_S_r", "in_t_L", "misclassified"};
    for (const BallRow& r : sweep.rows) {
        out.report.rows.push_back({point_cell(r.center), r.dx, r.r, r.l, r.L, static_cast<std::int64_t>(r.cloud),
                                   static_cast<std::int64_t>(r.in_t_l), static_cast<std::int64_t>(r.in_s_r),
                                   static_cast<std::int64_t>(r.in_t_L), static_cast<std::int64_t>(r.misclassified)});
    }
    if (const CheckSummary* bad = sweep.result.first_failure()) {
        out.exit_code = kExitViolation;
        out.witness = witness_json(bad->name, *bad->first_violation);
        out.report.add_meta("witness", out.witness->dump());
    }
}

void run_hausdorff(RunResult& out, const RunConfig& cfg) {
    const DomainSpec& domain = require_domain(cfg);
    const MetricParams p(cfg.c);
    const SweepResult stability_sweep = verify_stability(samples_or(cfg, 10000), kStabilitySetSize, cfg.seed);

    Rng rng(cfg.seed);
    DomainSampler sampler(domain);
    const Point x = cfg.x ? *cfg.x : sampler.sample(rng);
    const Point y = cfg.y ? *cfg.y : sampler.sample(rng);
    const ConvergenceTrace trace = convergence_run(x, y, domain.boundary, dyadic_schedule(kTraceLength), p);

    const CheckSummary& stab = stability_sweep.checks.front();
    out.report.add_meta("x", point_cell(x));
    out.report.add_meta("y", point_cell(y));
    out.report.add_meta("schedule", std::string("delta_n=2^-n"));
    out.report.add_meta("stability_samples", static_cast<std::int64_t>(stab.samples));
    out.report.add_meta("stability_violations", static_cast<std::int64_t>(stab.violations));
    out.report.add_meta("stability_worst_slack", stab.worst_slack);
    out.report.add_meta("rate_bound", std::string("gap_n <= c*eps_n*K (library construction, not a published rate)"));
    out.report.add_meta("K", trace.rate_constant_K);
    out.report.add_meta("rate_bound_holds", std::string(trace.rate_bound_holds ? "true" : "false"));
    out.report.add_meta("trace_stability_holds", std::string(trace.stability_holds ? "true" : "false"));
    out.report.columns = {"n", "eps_n", "s_n", "s_limit", "gap"};
    for (const ConvergenceRow& r : trace.rows) {
        out.report.rows.push_back({static_cast<std::int64_t>(r.n), r.eps_n, r.s_n, r.s_limit, r.gap});
    }
    if (!stability_sweep.passed()) {
        out.exit_code = kExitViolation;
        out.witness = witness_json(stab.name, *stab.first_violation);
    } else if (!trace.rate_bound_holds || !trace.stability_holds) {
        out.exit_code = kExitViolation;
        nlohmann::ordered_json w;
        w["violation"] = trace.stability_holds ? "rate_bound" : "trace_stability";
        w["x"] = std::vector<double>(x.coords().begin(), x.coords().end());
        w["y"] = std::vector<double>(y.coords().begin(), y.coords().end());
        w["K"] = trace.rate_constant_K;
        out.witness = w;
    }
    if (out.witness) out.report.add_meta("witness", out.witness->dump());
}

MapUnderTest make_map(const std::string& name, const BoundarySet& g, const Point& center, double radius) {
    if (g.dim() != 2) throw ConfigError("dilatation maps are defined on R^2");
    Matrix m = Matrix::identity(2);
    if (name == "identity") {
        return {name, [](const Point& p) -> std::optional<Point> { return p; }, g, g, center, radius};
    }
    if (name == "rotation") {
        const double a = 0.7;
        m(0, 0) = std::cos(a);
        m(0, 1) = -std::sin(a);
        m(1, 0) = std::sin(a);
        m(1, 1) = std::cos(a);
    } else if (name == "scaling") {
        m(0, 0) = m(1, 1) = 2.0;
    } else if (name == "stretch") {
        m(0, 0) = 2.0;
    } else if (name == "mobius") {
        const MobiusMap phi = mobius_to_origin(Point{0.3, 0.2});
        auto forward = [phi](const Point& p) -> std::optional<Point> {
            if (p.norm() >= 1.0) return std::nullopt;
            return phi(p);
        };
        const auto* s = g.get_if<Sphere>();
        const bool unit = s && s->radius == 1.0 && s->center == Point::zero(2);
        BoundarySet target = unit ? g : map_boundary(g, [phi](const Point& p) { return phi(p); });
        return {name, forward, g, std::move(target), center, radius};
    } else {
        throw ConfigError("unknown map \"" + name + "\" (identity|rotation|scaling|stretch|mobius)");
    }
    return linear_map_under_test(name, m, g, center, radius);
}

void run_dilatation(RunResult& out, const RunConfig& cfg) {
    const DomainSpec& domain = require_domain(cfg);
    const BoundarySet& g = domain.boundary;
    const MetricParams p(cfg.c);
    if (g.get_if<HalfSpaceBoundary>()) throw ConfigError("dilatation needs a bounded reference set");

    Point center = Point::zero(g.dim());
    if (const auto* s = g.get_if<Sphere>()) {
        center = s->center;
    } else {
        for (const Point& q : g.members()) center = center + q;
        center = center / static_cast<double>(g.members().size());
    }
    const double radius = 0.9 * dist_to_set(center, g);
    if (!(radius > 0.0)) throw ConfigError("reference set centroid lies on the set");

    MapUnderTest f = make_map(cfg.map, g, center, radius);
    f.L = estimate_bilipschitz_L(f, samples_or(cfg, 10000), p, cfg.seed);
    const Point x = cfg.x ? *cfg.x : center + Point{0.2 * radius, 0.1 * radius};
    const DilatationEstimate est = linear_dilatation(f, x, geometric_radii(0.1 * radius, 5), kDilatationProbes);

    out.report.add_meta("map", cfg.map);
    out.report.add_meta("x", point_cell(x));
    out.report.add_meta("probes", static_cast<std::int64_t>(kDilatationProbes));
    out.report.add_meta("L", est.L);
    out.report.add_meta("L_squared", est.L * est.L);
    out.report.add_meta("H", est.H);
    out.report.add_meta("bound_holds", std::string(est.bound_holds ? "true" : "false"));
    out.report.columns = {"r", "Lf", "lf", "ratio"};
    for (std::size_t i = 0; i < est.radii.size(); ++i) {
        out.report.rows.push_back({est.radii[i], est.max_displacement[i], est.min_displacement[i], est.ratios[i]});
    }
    if (!est.bound_holds) {
        out.exit_code = kExitViolation;
        nlohmann::ordered_json w;
        w["violation"] = "dilatation_bound";
        w["x"] = std::vector<double>(x.coords().begin(), x.coords().end());
        w["H"] = est.H;
        w["L"] = est.L;
        w["slack"] = est.L * est.L - est.H;
        out.witness = w;
        out.report.add_meta("witness", w.dump());
    }
}

}  // namespace

std::optional<Command> command_from_string(const std::string& name) {
    for (const auto& [cmd, text] : kCommandNames)
        if (name == text) return cmd;
    return std::nullopt;
}

std::string to_string(Command c) {
    for (const auto& [cmd, text] : kCommandNames)
        if (cmd == c) return text;
    return "eval";
}

RunResult run_command(const RunConfig& cfg) {
    if (!(cfg.c > 0.0) || !std::isfinite(cfg.c)) throw ConfigError("--c must be a positive number");
    RunResult out;
    base_meta(out.report, cfg);
    switch (cfg.command) {
        case Command::Eval:
            run_eval(out, cfg);
            break;
        case Command::VerifyAxioms:
            summarize(out, verify_axioms(require_domain(cfg), MetricParams(cfg.c), samples_or(cfg, 100000), cfg.seed));
            break;
        case Command::VerifySharpness:
            run_sharpness(out, cfg);
            break;
        case Command::VerifyBounds:
            summarize(out, verify_bounds(require_domain(cfg), MetricParams(cfg.c), samples_or(cfg, 10000), cfg.seed));
            break;
        case Command::Balls:
            run_balls(out, cfg);
            break;
        case Command::Mobius: {
            const std::size_t dim = cfg.domain ? cfg.domain->dim() : 2;
            summarize(out, verify_mobius(dim, MetricParams(cfg.c), samples_or(cfg, 10000), cfg.seed));
            break;
        }
        case Command::Hausdorff:
            run_hausdorff(out, cfg);
            break;
        case Command::Dilatation:
            run_dilatation(out, cfg);
            break;
    }
    return out;
}

std::string render(const Report& r, ReportFormat format) {
    std::ostringstream os;
    if (format == ReportFormat::Csv) {
        write_csv(os, r);
    } else {
        write_json(os, r);
    }
    return os.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    RunResult result;
    try {
        result = run_command(config);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        // includes DimensionError
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    const std::string text = render(result.report, config.format);
    if (config.out.empty()) {
        out << text;
    } else {
        std::ofstream file(config.out, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << config.out << " for writing\n";
            return kExitUsage;
        }
        file << text;
    }
    if (result.witness) out << result.witness->dump() << '\n';
    return result.exit_code;
}

}  // namespace stilde
