// Acceptance suite: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Tolerances and runtime budgets are pinned below.
#include "stilde/cli.hpp"
#include "stilde/convergence.hpp"
#include "stilde/dilatation.hpp"
#include "stilde/domain_json.hpp"
#include "stilde/metrics.hpp"
#include "stilde/mobius.hpp"
#include "stilde/sampling.hpp"
#include "stilde/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

using namespace stilde;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = elapsed < budget_s;
    const bool pass = o.pass && in_budget;
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s [%s; %.3fs of %.3gs budget%s]\n", pass ? "PASS" : "FAIL", id, title,
                o.detail.c_str(), elapsed, budget_s, in_budget ? "" : ", over budget");
    std::fflush(stdout);
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

const DomainSpec kDisc{BoundarySet::sphere(Point{0.0, 0.0}, 1.0), Interior::Inside};
const DomainSpec kUpper{BoundarySet::halfspace(Point{0.0, 1.0}, 0.0), Interior::Positive};

Outcome counterexample() {
    const BoundarySet g = BoundarySet::points({Point{-4.0}, Point{4.0}});
    const double s31 = stilde::stilde(Point{3.0}, Point{1.0}, g);
    const double s32 = stilde::stilde(Point{3.0}, Point{2.0}, g);
    const double s12 = stilde::stilde(Point{1.0}, Point{2.0}, g);
    const double err = std::max({std::abs(s31 - 1.0 / std::sqrt(2.0)), std::abs(s32 - 1.0 / std::sqrt(6.0)),
                                 std::abs(s12 - 1.0 / (2.0 * std::sqrt(3.0)))});
    const bool fails = s31 > s32 + s12;
    return {err <= 1e-15 && fails, "max abs err " + fmt("%.2e", err) + ", triangle gap " + fmt("%.6f", s31 - s32 - s12)};
}

Outcome axioms() {
    const std::vector<DomainSpec> domains{
        {BoundarySet::points({Point{-4.0}, Point{4.0}}), std::nullopt},
        {BoundarySet::sphere(Point{0.0, 0.0}, 1.0), std::nullopt},
        {BoundarySet::chain({Point{-1.0, -1.0}, Point{1.0, -1.0}, Point{1.0, 1.0}, Point{-1.0, 1.0}}, true),
         std::nullopt},
    };
    std::size_t violations = 0;
    std::size_t triples = 0;
    double worst = INFINITY;
    for (double c : {2.0, 2.5, 5.0, 10.0}) {
        for (const DomainSpec& d : domains) {
            SweepResult r = verify_axioms(d, MetricParams(c), 100000, 0);
            const CheckSummary* tri = r.find("triangle");
            violations += tri->violations;
            triples += tri->samples;
            worst = std::min(worst, tri->worst_slack);
            if (!r.passed()) ++violations;
        }
    }
    return {violations == 0, std::to_string(triples) + " triangle checks over 12 configurations, worst slack " +
                                 fmt("%.3e", worst)};
}

Outcome sharpness() {
    const std::vector<double> Ms{3.0, 1e2, 1e4, 1e6};
    double worst = 0.0;
    double at_1e6 = 0.0;
    for (double M : Ms) {
        const BoundarySet g = BoundarySet::points({Point{-M}, Point{M}});
        const double h = triangle_deficiency(Point{M}, Point{-M}, Point{0.0}, g);
        const double closed = 2.0 * std::sqrt(1.0 + M) / (std::sqrt(1.0 + M) + 1.0);
        worst = std::max(worst, std::abs(h - closed));
        if (M == 1e6) at_1e6 = h;
    }
    bool violated = false;
    for (double M : Ms) {
        DomainSpec d{BoundarySet::points({Point{-M}, Point{M}}), std::nullopt};
        if (!verify_axioms(d, MetricParams(1.9), 10000, 0).passed()) violated = true;
    }
    return {worst <= 1e-12 && at_1e6 > 1.99 && violated,
            "closed-form err " + fmt("%.2e", worst) + ", h(1e6) = " + fmt("%.9f", at_1e6) +
                (violated ? ", c=1.9 violation found" : ", no c=1.9 violation")};
}

Outcome hyperbolic() {
    const BoundarySet sphere = BoundarySet::sphere(Point{0.0, 0.0}, 1.0);
    Rng rng(0);
    double worst = INFINITY;
    std::size_t pairs = 0;
    for (double c : {2.0, 5.0}) {
        MetricParams p(c);
        for (int i = 0; i < 100000; ++i) {
            Point x = random_in_ball(rng, Point{0.0, 0.0}, 1.0);
            Point y = random_in_ball(rng, Point{0.0, 0.0}, 1.0);
            if (x.norm() == 0.0 || y.norm() == 0.0) continue;
            worst = std::min(worst, hyperbolic_upper_bound(x, y, p) - stilde_metric(x, y, sphere, p));
            ++pairs;
        }
    }
    MetricParams p2(2.0);
    const Point x{0.5, 0.0}, y{-0.5, 0.0};
    const double s = stilde_metric(x, y, sphere, p2);
    const double bound = hyperbolic_upper_bound(x, y, p2);
    const bool worked = std::abs(s - 0.847298) <= 1e-6 && std::abs(bound - 1.435085) <= 1e-6;
    return {worst >= -1e-12 && worked, std::to_string(pairs) + " pairs, worst slack " + fmt("%.3e", worst) +
                                           ", worked pair S=" + fmt("%.6f", s) + " bound=" + fmt("%.6f", bound)};
}

Outcome envelopes() {
    std::string detail;
    bool ok = true;
    for (const auto& [name, domain] : {std::pair{"half-plane", kUpper}, std::pair{"disc", kDisc}}) {
        SweepResult r = verify_bounds(domain, MetricParams(2.0), 10000, 0);
        const CheckSummary* env = r.find("t_envelope");
        ok = ok && env->passed() && env->samples == 10000;
        detail += std::string(detail.empty() ? "" : ", ") + name + " worst slack " + fmt("%.3e", env->worst_slack);
    }
    return {ok, detail};
}

Outcome balls() {
    BallSweep s = verify_balls(kDisc, MetricParams(2.0), 100, 1000, 0);
    std::size_t wrong = 0;
    for (const BallRow& r : s.rows) wrong += r.misclassified;
    BallInclusionRadii b = ball_inclusion_radii(1.0, std::log(2.0), MetricParams(2.0));
    const bool worked = std::abs(b.l - 1.0 / 3.0) <= 1e-15 && std::abs(b.L - 1.0) <= 1e-15;
    return {s.result.passed() && wrong == 0 && worked && s.rows.size() == 100,
            std::to_string(s.rows.size()) + " centres, " + std::to_string(wrong) + " misclassified, l=" +
                fmt("%.17g", b.l) + " L=" + fmt("%.17g", b.L)};
}

Outcome hausdorff() {
    SweepResult stability = verify_stability(10000, 20, 0);
    const BoundarySet poly = regular_polygon(Point{0.0, 0.0}, 1.0, 64);
    ConvergenceTrace tr = convergence_run(Point{0.5, 0.0}, Point{-0.5, 0.0}, poly, dyadic_schedule(30), MetricParams(2.0));
    const double gap25 = tr.rows.at(24).gap;
    return {stability.passed() && stability.checks[0].samples == 10000 && gap25 < 1e-6,
            "stability violations " + std::to_string(stability.checks[0].violations) + ", gap_25 = " + fmt("%.3e", gap25)};
}

Outcome dilatation() {
    const BoundarySet circle = BoundarySet::sphere(Point{0.0, 0.0}, 1.0);
    const Point centre{0.0, 0.0};
    const Point x{0.18, 0.09};
    const auto radii = geometric_radii(0.09, 5);
    auto linear = [&](const char* name, double a, double b, double c, double d) {
        Matrix m = Matrix::identity(2);
        m(0, 0) = a;
        m(0, 1) = b;
        m(1, 0) = c;
        m(1, 1) = d;
        return linear_map_under_test(name, m, circle, centre, 0.9);
    };
    MapUnderTest id{"identity", [](const Point& p) -> std::optional<Point> { return p; }, circle, circle, centre, 0.9};
    std::vector<MapUnderTest> similar{id, linear("rotation", std::cos(0.7), -std::sin(0.7), std::sin(0.7), std::cos(0.7)),
                                      linear("scaling", 2.0, 0.0, 0.0, 2.0)};
    double worst_similar = 0.0;
    for (const MapUnderTest& f : similar) {
        worst_similar = std::max(worst_similar, std::abs(linear_dilatation(f, x, radii, 256).H - 1.0));
    }
    MapUnderTest stretch = linear("stretch", 2.0, 0.0, 0.0, 1.0);
    stretch.L = estimate_bilipschitz_L(stretch, 10000, MetricParams(2.0), 0);
    DilatationEstimate e = linear_dilatation(stretch, x, radii, 256);
    const bool ok = worst_similar <= 1e-9 && std::abs(e.H - 2.0) <= 1e-3 && e.H <= stretch.L * stretch.L + 1e-3;
    return {ok, "similarity |H-1| <= " + fmt("%.2e", worst_similar) + ", stretch H=" + fmt("%.12f", e.H) +
                    " L^2=" + fmt("%.6f", stretch.L * stretch.L)};
}

Outcome mobius() {
    SweepResult r = verify_mobius(2, MetricParams(2.0), 10000, 0);
    bool ok = r.passed();
    std::string detail;
    for (const char* name : {"reflection_involution", "reflection_distance_identity", "sigma_norm_chain", "log_ratio",
                             "distortion", "distortion_a0"}) {
        const CheckSummary* c = r.find(name);
        ok = ok && c && c->samples >= 10000;
    }
    ok = ok && r.find("reflection_involution")->tolerance <= 1e-12 &&
         r.find("reflection_distance_identity")->tolerance <= 1e-12 && r.find("distortion")->tolerance <= 1e-10 &&
         r.find("distortion_a0")->tolerance <= 1e-12;
    for (const CheckSummary& c : r.checks) {
        detail += std::string(detail.empty() ? "" : " ") + c.name + "=" + std::to_string(c.violations);
    }
    return {ok, "violations: " + detail};
}

// Every CLI command with fixed seeds; report bytes collected per command.
std::vector<std::pair<std::string, std::string>> full_suite() {
    const std::string pm4 = R"({"type": "points", "points": [[-4], [4]]})";
    const std::string disc = R"({"type": "sphere", "center": [0, 0], "radius": 1, "interior": "inside"})";
    const std::string upper = R"({"type": "halfspace", "normal": [0, 1], "offset": 0, "interior": "positive"})";
    const std::string circle = R"({"type": "sphere", "center": [0, 0], "radius": 1})";
    struct Job {
        std::string name;
        Command cmd;
        std::string domain;
        std::size_t samples;
        std::string map = "stretch";
    };
    const std::vector<Job> jobs{
        {"eval", Command::Eval, disc, 0},
        {"axioms", Command::VerifyAxioms, pm4, 20000},
        {"sharpness", Command::VerifySharpness, "", 0},
        {"bounds_disc", Command::VerifyBounds, disc, 2000},
        {"bounds_half", Command::VerifyBounds, upper, 2000},
        {"balls", Command::Balls, disc, 20},
        {"mobius", Command::Mobius, disc, 2000},
        {"hausdorff", Command::Hausdorff, disc, 2000},
        {"dilatation", Command::Dilatation, circle, 2000, "stretch"},
        {"dilatation_mobius", Command::Dilatation, circle, 2000, "mobius"},
    };
    std::vector<std::pair<std::string, std::string>> out;
    for (const Job& j : jobs) {
        RunConfig cfg;
        cfg.command = j.cmd;
        if (!j.domain.empty()) cfg.domain = parse_domain(j.domain);
        cfg.seed = 20240601;
        cfg.samples = j.samples;
        cfg.map = j.map;
        if (j.cmd == Command::Eval) {
            cfg.x = Point{0.5, 0.0};
            cfg.y = Point{-0.5, 0.0};
        }
        for (ReportFormat f : {ReportFormat::Csv, ReportFormat::Json}) {
            cfg.format = f;
            out.emplace_back(j.name + (f == ReportFormat::Csv ? ".csv" : ".json"), render(run_command(cfg).report, f));
        }
    }
    return out;
}

Outcome determinism() {
    namespace fs = std::filesystem;
    const fs::path root = fs::current_path() / "acceptance_reports";
    std::size_t files = 0;
    for (const char* run : {"run1", "run2"}) {
        fs::create_directories(root / run);
        for (const auto& [name, text] : full_suite()) {
            std::ofstream(root / run / name, std::ios::binary) << text;
            ++files;
        }
    }
    std::size_t differing = 0;
    for (const auto& entry : fs::directory_iterator(root / "run1")) {
        auto slurp = [](const fs::path& p) {
            std::ifstream in(p, std::ios::binary);
            std::stringstream s;
            s << in.rdbuf();
            return s.str();
        };
        if (slurp(entry.path()) != slurp(root / "run2" / entry.path().filename())) ++differing;
    }
    return {differing == 0 && files > 0,
            std::to_string(files / 2) + " report files per run, " + std::to_string(differing) + " differ"};
}

}  // namespace

int main() {
    criterion(1, "non-metric counterexample for s~ on R with G={-4,4}", 1e-3, counterexample);
    criterion(2, "triangle inequality for c in {2,2.5,5,10} on three domains", 30.0, axioms);
    criterion(3, "sharpness of c=2", 5.0, sharpness);
    criterion(4, "hyperbolic upper bound in the unit disc", 10.0, hyperbolic);
    criterion(5, "triangular ratio envelopes", 60.0, envelopes);
    criterion(6, "ball inclusion", 60.0, balls);
    criterion(7, "Hausdorff stability and convergence", 10.0, hausdorff);
    criterion(8, "linear dilatation", 10.0, dilatation);
    criterion(9, "Moebius reflections and distortion", 30.0, mobius);
    criterion(10, "byte-identical reports across runs", 120.0, determinism);
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
