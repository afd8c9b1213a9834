#include "heis/verify.hpp"

#include "heis/curvature.hpp"
#include "heis/error.hpp"
#include "heis/geodesics.hpp"
#include "heis/helicoid.hpp"
#include "heis/measures.hpp"
#include "heis/mesh.hpp"
#include "heis/surfaces.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace heis {

namespace {

constexpr double kPi = std::numbers::pi;

using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

/// |lambda| log-uniform in [1e-9, 10] with a random sign; every 16th draw is 0.
double random_lambda(Rng& rng, int i)
{
    if (i % 16 == 0) return 0.0;
    const double mag = std::pow(10.0, uniform(rng, -9.0, 1.0));
    return uniform(rng, 0.0, 1.0) < 0.5 ? -mag : mag;
}

Point random_point(Rng& rng) { return {uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)}; }

struct Suite {
    std::string name;
    const VerifyConfig& cfg;
    std::vector<Check>& out;

    void add(std::string check, double measured, double expected, const std::string& tol_name, Compare cmp,
             std::string basis, std::string note = {})
    {
        Check c;
        c.suite = name;
        c.name = std::move(check);
        c.measured = measured;
        c.expected = expected;
        c.tolerance = cfg.tolerance(tol_name);
        c.compare = cmp;
        c.basis = std::move(basis);
        c.note = std::move(note);
        evaluate(c);
        out.push_back(std::move(c));
    }

    void error(std::string check, const GeometryError& e)
    {
        Check c;
        c.suite = name;
        c.name = std::move(check);
        c.measured = std::numeric_limits<double>::quiet_NaN();
        c.expected = std::numeric_limits<double>::quiet_NaN();
        c.basis = "identity";
        c.pass = false;
        c.note = e.what();
        out.push_back(std::move(c));
    }
};

/// Killing field of the rotation w and the left translations (a, b, c),
/// restricted to a curve, in frame coefficients.
FieldAlong killing_along(const GeodesicSpec& g, double a, double b, double c, double w)
{
    return [g, a, b, c, w](double s) {
        const CartesianJet j = geodesic_jet(g, s);
        const Vec3 K{a - w * j.p.y, b + w * j.p.x, c + b * j.p.x - a * j.p.y};
        const Vec3 dK{-w * j.d1.y, w * j.d1.x, b * j.d1.x - a * j.d1.y};
        return FieldJet{to_frame(j.p, K), frame_rate(j.p, j.d1, K, dK)};
    };
}

double bisect_cut(double h, double lambda)
{
    auto f = [h, lambda](double s) {
        const double u = 2.0 * lambda * s;
        return 2.0 * lambda * std::sin(u) / (1.0 - std::cos(u)) - h;
    };
    double lo = 0.0, hi = kPi / std::abs(lambda);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

void geodesics_suite(Suite& su)
{
    const VerifyConfig& cfg = su.cfg;
    Rng rng(cfg.seed);
    const int n = std::max(cfg.samples, 1) * 50;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
        const double lambda = random_lambda(rng, i);
        const GeodesicSpec g{random_point(rng), uniform(rng, 0.0, 2 * kPi), lambda};
        const double s = uniform(rng, 0.0, std::min(10.0, 4 * kPi / std::max(std::abs(lambda), 1e-12)));
        worst = std::max(worst, geodesic_residual(g, s));
    }
    su.add("residual_max (" + std::to_string(n) + " samples)", worst, 0.0, "geodesic", Compare::Below, "reference");

    const double lambda = cfg.lambda;
    const Point pole{0.0, 0.0, kPi / (2.0 * lambda * lambda)};
    double spread = 0.0;
    for (int k = 0; k < 64; ++k) {
        const Point q = geodesic_point(GeodesicSpec{kIdentity, 2 * kPi * k / 64.0, lambda}, kPi / std::abs(lambda));
        spread = std::max(spread, norm(q.as_vec() - pole.as_vec()));
    }
    su.add("pole_concurrence", spread, 0.0, "pole", Compare::Below, "reference");

    double horiz = 0.0;
    for (int i = 0; i < 256; ++i) {
        const GeodesicSpec g{random_point(rng), uniform(rng, 0.0, 2 * kPi), random_lambda(rng, i + 1)};
        const CartesianJet j = geodesic_jet(g, uniform(rng, 0.0, 5.0));
        const Vec3 v = to_frame(j.p, j.d1);
        horiz = std::max({horiz, std::abs(v.z), std::abs(norm(v) - 1.0)});
    }
    su.add("horizontal_unit_speed", horiz, 0.0, "geodesic", Compare::Below, "identity");

    const double l = std::abs(lambda);
    su.add("cut_time(0)", cut_time(0.0, l), kPi / (2.0 * l), "cut", Compare::Absolute, "reference");
    double sym = 0.0, oracle = 0.0;
    for (int i = 0; i < std::max(cfg.samples, 1) * 5; ++i) {
        const double h = std::tan(uniform(rng, -1.5, 1.5)) * 4.0 * l;
        sym = std::max(sym, std::abs(cut_time(h, lambda) + cut_time(-h, lambda) - kPi / l));
        oracle = std::max(oracle, std::abs(cut_time(h, lambda) - bisect_cut(h, lambda)));
    }
    su.add("cut_time(h)+cut_time(-h)-pi/|lambda|", sym, 0.0, "cut", Compare::Below, "identity");
    su.add("cut_time_vs_bisection", oracle, 0.0, "cut_oracle", Compare::Below, "derived");
}

void jacobi_suite(Suite& su)
{
    const VerifyConfig& cfg = su.cfg;
    Rng rng(cfg.seed + 1);

    double spread = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double lambda = i % 10 == 0 ? 0.0 : uniform(rng, -3.0, 3.0);
        const GeodesicSpec g{random_point(rng), uniform(rng, 0.0, 2 * kPi), lambda};
        const FieldAlong K = killing_along(g, uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1),
                                           uniform(rng, -1, 1));
        std::vector<double> q;
        for (int k = 0; k <= 32; ++k) {
            const double s = 4.0 * k / 32.0;
            q.push_back(conserved_quantity(g, [&K](double t) { return K(t).value; }, s));
        }
        double mean = 0.0;
        for (double v : q) mean += v;
        mean /= static_cast<double>(q.size());
        double var = 0.0;
        for (double v : q) var += (v - mean) * (v - mean);
        spread = std::max(spread, std::sqrt(var / static_cast<double>(q.size())));
    }
    su.add("conserved_stddev_killing", spread, 0.0, "conserved", Compare::Below, "reference");

    const double lambda = cfg.lambda;
    const OrthogonalFamily fams[] = {
        {helix_curve(cfg.r, -1.0, 1.0), lambda, Side::PlusJ},
        {helix_curve(cfg.r, -1.0, 1.0), lambda, Side::MinusJ},
        {line_curve(-1.0, 1.0), lambda, Side::PlusJ},
    };
    double conserved = 0.0, residual = 0.0;
    const int n = std::max(cfg.samples, 1) * 5;
    for (int i = 0; i < n; ++i) {
        const OrthogonalFamily& f = fams[i % 3];
        const double eps = uniform(rng, -0.9, 0.9);
        const GeodesicSpec g = f.geodesic(eps);
        const FieldAlong V = f.variation_field(eps);
        const double s = uniform(rng, 0.0, f.cut(eps));
        conserved = std::max(conserved,
                             std::abs(conserved_quantity(g, [&V](double t) { return V(t).value; }, s)));
        residual = std::max(residual, jacobi_residual(g, V, s));
    }
    su.add("conserved_orthogonal_family", conserved, 0.0, "conserved", Compare::Below, "reference");
    su.add("jacobi_residual_orthogonal_family", residual, 0.0, "jacobi", Compare::Below, "reference");

    double killing_res = 0.0, tangent_res = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double lam = i % 4 == 0 ? 0.0 : uniform(rng, -3.0, 3.0);
        const GeodesicSpec g{random_point(rng), uniform(rng, 0.0, 2 * kPi), lam};
        const FieldAlong K = killing_along(g, uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1),
                                           uniform(rng, -1, 1));
        const double s = uniform(rng, 0.0, 3.0);
        killing_res = std::max(killing_res, jacobi_residual(g, K, s));
        const double a = lam == 0.0 ? uniform(rng, -1, 1) : 0.0;
        const double b = uniform(rng, -1, 1);
        const FieldAlong T = [g, a, b](double t) {
            const Vec3 u = geodesic_velocity(g, t).coeffs();
            return FieldJet{(a * t + b) * u, a * u - (a * t + b) * 2.0 * g.lambda * J(u)};
        };
        tangent_res = std::max(tangent_res, jacobi_residual(g, T, s));
    }
    su.add("jacobi_residual_killing", killing_res, 0.0, "jacobi", Compare::Below, "identity");
    su.add("jacobi_residual_tangent", tangent_res, 0.0, "jacobi", Compare::Below, "reference");
}

double max_h_error(const ImmersedPatch& p, double H, Rng& rng, int n, double s_lo, double s_hi, int* used)
{
    const Domain& d = p.domain();
    double worst = 0.0;
    int count = 0;
    for (int i = 0; i < n; ++i) {
        const double e = d.eps_min + d.eps_width() * uniform(rng, 0.05, 0.95);
        const double s = d.s_min + d.s_width() * uniform(rng, s_lo, s_hi);
        try {
            worst = std::max(worst, std::abs(mean_curvature_char(p, e, s) - H));
            ++count;
        } catch (const GeometryError&) {
        }
    }
    if (used) *used = count;
    return count > 0 ? worst : std::numeric_limits<double>::infinity();
}

void curvature_suite(Suite& su)
{
    const VerifyConfig& cfg = su.cfg;
    const double lambda = cfg.lambda;
    Rng rng(cfg.seed + 2);
    const int n = std::max(cfg.samples / 4, 8);

    auto mc = [&](const std::string& label, const ImmersedPatch& p, double H, double lo, double hi) {
        try {
            int used = 0;
            const double err = max_h_error(p, H, rng, n, lo, hi, &used);
            su.add("mean_curvature " + label, err, 0.0, "curvature", Compare::Below, "reference",
                   std::to_string(used) + " regular samples");
        } catch (const GeometryError& e) {
            su.error("mean_curvature " + label, e);
        }
    };

    const double lam_abs = std::abs(lambda);
    mc("sphere", sphere_geodesic(lam_abs), lam_abs, 0.05, 0.95);
    const CylinderS cyl = cylinder_S(lambda);
    mc("sigma_lambda(x-axis)", cyl.plus.patch, lambda, 0.05, 0.95);
    mc("sigma_lambda(x-axis) companion", cyl.minus.patch, lambda, 0.05, 0.95);
    mc("sigma_lambda(helix)", build_sigma_lambda(helix_curve(cfg.r, -1.0, 1.0), lambda).patch, lambda, 0.05, 0.95);
    const Helicoid hel = helicoid_L(lambda, cfg.r, 2);
    for (const HelicoidPiece& piece : hel.pieces) {
        mc("helicoid_L k=" + std::to_string(piece.k) + " i=" + std::to_string(piece.index), piece.sigma.patch,
           lambda, 0.05, 0.95);
    }
    mc("bernstein g=" + cfg.g, bernstein_graph(Polynomial::parse(cfg.g)), 0.0, 0.05, 0.95);
    mc("bernstein g=y", bernstein_graph(Polynomial::parse("y")), 0.0, 0.05, 0.95);

    const SphereGraph sg = sphere_graph(lam_abs);
    double pde = 0.0;
    for (int i = 0; i < n; ++i) {
        const double rho = uniform(rng, 0.05, 0.95) / lam_abs;
        const double th = uniform(rng, 0.0, 2 * kPi);
        const double x = rho * std::cos(th), y = rho * std::sin(th);
        pde = std::max({pde, std::abs(graph_pde_residual(sg.upper_fn, x, y, sg.upper_fn.pde_H)),
                        std::abs(graph_pde_residual(sg.lower_fn, x, y, sg.lower_fn.pde_H))});
    }
    su.add("graph_pde_residual sphere sheets", pde, 0.0, "pde", Compare::Below, "reference");

    double ruling = 0.0;
    bool all_completed = true;
    const ImmersedPatch sphere = sphere_geodesic(lam_abs);
    for (int i = 0; i < 4; ++i) {
        const RulingCheck rc = ruling_check(sphere, uniform(rng, 0.0, 2 * kPi), uniform(rng, 0.2, 0.4) * kPi / lam_abs,
                                            lam_abs, 0.5 / lam_abs);
        all_completed = all_completed && rc.completed;
        ruling = std::max(ruling, rc.max_deviation);
    }
    su.add("ruling sphere", all_completed ? ruling : std::numeric_limits<double>::infinity(), 0.0, "ruling",
           Compare::Below, "reference");

    su.add("helicoid c2 + c1 - sgn(lambda) pi/(2 lambda^2)",
           std::abs(hel.c2 + hel.c1 - std::copysign(kPi / (2 * lambda * lambda), lambda)), 0.0, "helicoid",
           Compare::Below, "reference");
    const Helicoid unit = helicoid_L(1.0, 1.0, 4);
    double offsets = 0.0;
    for (const HelicoidPiece& piece : unit.pieces) {
        offsets = std::max(offsets, std::abs(reduce_mod(piece.measured_offset - piece.formula_offset, unit.pitch)));
    }
    su.add("helicoid offsets vs c_ik (r=lambda=1, k<=4)", offsets, 0.0, "helicoid_offset", Compare::Below,
           "reference");
}

void minkowski_suite(Suite& su)
{
    const VerifyConfig& cfg = su.cfg;
    const double lambda = std::abs(cfg.lambda);
    const ImmersedPatch sphere = sphere_geodesic(lambda);
    const double A = area(sphere, cfg.n_eps, cfg.n_s).value;
    const double V = volume_enclosed(sphere, cfg.n_eps, cfg.n_s).value;
    su.add("area sphere", A, kPi * kPi / std::pow(lambda, 3), "area", Compare::Relative, "reference");
    su.add("volume sphere", V, 3 * kPi * kPi / (8 * std::pow(lambda, 4)), "volume", Compare::Relative, "reference");
    su.add("minkowski_defect sphere", std::abs(3 * A - 8 * lambda * V) / (3 * A), 0.0, "minkowski", Compare::Below,
           "reference");

    for (double s : {-0.5, std::log(2.0)}) {
        const DilationRatios r = dilation_homogeneity(sphere, s, cfg.n_eps);
        std::ostringstream tag;
        tag << "s=" << format_double(s);
        su.add("dilation ratio_A " + tag.str(), r.ratio_A, std::exp(3 * s), "area", Compare::Relative, "identity");
        su.add("dilation ratio_V " + tag.str(), r.ratio_V, std::exp(4 * s), "volume", Compare::Relative, "identity");
    }

    const int nv = std::min(cfg.n_eps, 64);
    const FirstVariation fv = first_variation_check(sphere, lambda, [](double, double) { return 1.0; }, 1e-4, nv);
    su.add("first_variation |A'-2HV'|/|A'| (u=1)", fv.defect / std::abs(fv.A_prime), 0.0, "first_variation",
           Compare::Below, "reference");
}

void bernstein_suite(Suite& su)
{
    const VerifyConfig& cfg = su.cfg;
    Rng rng(cfg.seed + 3);

    const Polynomial g = Polynomial::parse(cfg.g);
    const Polynomial g2 = g.derivative().derivative();
    const ImmersedPatch graph = bernstein_graph(g);
    const SingularCurveOnPatch& sc = graph.info().singular_curves.front();
    double mismatch = 0.0, largest = 0.0;
    for (int k = 0; k <= 16; ++k) {
        const double tau = sc.tau_min + (sc.tau_max - sc.tau_min) * (0.05 + 0.9 * k / 16.0);
        const double defect = orthogonality_defect(graph, sc, tau);
        mismatch = std::max(mismatch, std::abs(defect - (-0.5 * g2(tau))));
        largest = std::max(largest, std::abs(defect));
    }
    const double tol_orth = cfg.tolerance("orthogonality");
    const bool stationary = largest < tol_orth;
    const double mid = 0.5 * (sc.tau_min + sc.tau_max);
    su.add("orthogonality_defect g=" + cfg.g + " at tau=" + format_double(mid), orthogonality_defect(graph, sc, mid),
           -0.5 * g2(mid), "orthogonality", Compare::Absolute, "reference",
           stationary ? "stationary" : "NOT-stationary");
    su.add("orthogonality_defect g=" + cfg.g + " vs -g''/2", mismatch, 0.0, "orthogonality", Compare::Below,
           "reference", stationary ? "stationary" : "NOT-stationary");

    const ImmersedPatch linear = bernstein_graph(Polynomial::parse("0.7*y+0.2"));
    double lin = 0.0;
    for (int k = 0; k <= 16; ++k) lin = std::max(lin, std::abs(orthogonality_defect(linear, 0, -1.8 + 3.6 * k / 16.0)));
    su.add("orthogonality_defect g=0.7y+0.2", lin, 0.0, "orthogonality", Compare::Below, "reference", "stationary");

    for (const auto& [label, gamma] : {std::pair{std::string("x-axis"), line_curve(-1.0, 1.0)},
                                       std::pair{std::string("helix"), helix_curve(cfg.r, -1.0, 1.0)}}) {
        const SigmaLambda sig = build_sigma_lambda(gamma, cfg.lambda);
        double worst = 0.0;
        for (std::size_t c = 0; c < sig.patch.info().singular_curves.size(); ++c) {
            const SingularCurveOnPatch& row = sig.patch.info().singular_curves[c];
            for (int k = 0; k <= 8; ++k) {
                const double tau = row.tau_min + (row.tau_max - row.tau_min) * (0.1 + 0.8 * k / 8.0);
                worst = std::max(worst, std::abs(orthogonality_defect(sig.patch, row, tau)));
            }
        }
        su.add("orthogonality_defect sigma_lambda(" + label + ") rows", worst, 0.0, "orthogonality", Compare::Below,
               "reference", "stationary");
    }

    double div_a = 0.0, div_plane = 0.0;
    const double a = uniform(rng, -1, 1), b = uniform(rng, -1, 1);
    int taken = 0;
    while (taken < 100) {
        const Point q = random_point(rng);
        try {
            const double d1 = calibration_divergence(a, b, q);
            const double d2 = calibration_divergence(plane_leaf(), q);
            div_a = std::max(div_a, std::abs(d1));
            div_plane = std::max(div_plane, std::abs(d2));
            ++taken;
        } catch (const GeometryError&) {
        }
    }
    su.add("calibration_divergence t=xy+ay+b", div_a, 0.0, "calibration", Compare::Below, "reference");
    su.add("calibration_divergence t=0", div_plane, 0.0, "calibration", Compare::Below, "reference");

    GraphFunction cubic;
    cubic.eval = [](double x, double y) { return GraphJet{x * y + y * y * y, y, x + 3 * y * y, 0.0, 1.0, 6 * y}; };
    double neg = 0.0;
    const double h = kDefaultFdStep;
    for (int k = 0; k <= 32; ++k) {
        const double y = -1.0 + 2.0 * k / 32.0;
        const Point q{-1.5 * y * y + 0.5 * h, y, uniform(rng, -1, 1)};
        try {
            neg = std::max(neg, std::abs(calibration_divergence(cubic, q, h)));
        } catch (const GeometryError&) {
        }
    }
    su.add("calibration_divergence t=xy+y^3 near locus", neg, 1e-2, "calibration_negative", Compare::Above,
           "reference", "NOT-stationary");
}

void iso_suite(Suite& su)
{
    const VerifyConfig& cfg = su.cfg;
    const double expected = 512.0 * kPi * kPi / 27.0;
    const double lambda = std::abs(cfg.lambda);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (double l : {lambda, 2.0 * lambda}) {
        const double r = iso_ratio(sphere_geodesic(l), cfg.n_eps);
        su.add("iso_ratio sphere lambda=" + format_double(l), r, expected, "iso", Compare::Relative, "reference");
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    su.add("iso_ratio lambda spread", (hi - lo) / expected, 0.0, "iso", Compare::Below, "identity");
}

using SuiteFn = void (*)(Suite&);

const std::vector<std::pair<std::string, SuiteFn>>& suites()
{
    static const std::vector<std::pair<std::string, SuiteFn>> list = {
        {"geodesics", geodesics_suite}, {"jacobi", jacobi_suite},       {"curvature", curvature_suite},
        {"minkowski", minkowski_suite}, {"bernstein", bernstein_suite}, {"iso", iso_suite},
    };
    return list;
}

const char* compare_name(Compare c)
{
    switch (c) {
    case Compare::Absolute: return "abs";
    case Compare::Relative: return "rel";
    case Compare::Below: return "below";
    case Compare::Above: return "above";
    }
    return "?";
}

} // namespace

const std::map<std::string, double>& default_tolerances()
{
    static const std::map<std::string, double> tol = {
        {"geodesic", 1e-8},        {"pole", 1e-12},          {"conserved", 1e-10},
        {"jacobi", 1e-6},          {"cut", 1e-12},           {"cut_oracle", 1e-10},
        {"curvature", 1e-4},       {"pde", 1e-6},            {"ruling", 1e-5},
        {"orthogonality", 1e-6},   {"calibration", 1e-6},    {"calibration_negative", 1e-2},
        {"area", 1e-4},            {"volume", 1e-4},         {"minkowski", 1e-4},
        {"iso", 1e-3},             {"first_variation", 1e-3}, {"helicoid", 1e-12},
        {"helicoid_offset", 1e-8},
    };
    return tol;
}

double VerifyConfig::tolerance(const std::string& name) const
{
    if (auto it = tol.find(name); it != tol.end()) return it->second;
    const auto& d = default_tolerances();
    if (auto it = d.find(name); it != d.end()) return it->second;
    fail(ErrorCode::InvalidArgument, "unknown tolerance '" + name + "'");
}

std::vector<std::string> suite_names()
{
    std::vector<std::string> names;
    for (const auto& [name, fn] : suites()) names.push_back(name);
    return names;
}

std::vector<Check> run_suite(const std::string& suite, const VerifyConfig& cfg)
{
    std::vector<Check> out;
    bool found = false;
    for (const auto& [name, fn] : suites()) {
        if (suite != "all" && suite != name) continue;
        found = true;
        Suite su{name, cfg, out};
        fn(su);
    }
    if (!found) {
        fail(ErrorCode::InvalidArgument, "unknown suite '" + suite + "'");
    }
    return out;
}

bool evaluate(Check& c)
{
    const double m = c.measured, e = c.expected, t = c.tolerance;
    switch (c.compare) {
    case Compare::Absolute: c.pass = std::abs(m - e) <= t; break;
    case Compare::Relative: c.pass = std::abs(m - e) <= t * std::abs(e); break;
    case Compare::Below: c.pass = m < t; break;
    case Compare::Above: c.pass = m > t; break;
    }
    return c.pass;
}

bool all_passed(const std::vector<Check>& checks)
{
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string format_report_text(const std::vector<Check>& checks)
{
    std::ostringstream out;
    int failed = 0;
    for (const Check& c : checks) {
        failed += c.pass ? 0 : 1;
        out << (c.pass ? "PASS " : "FAIL ") << c.suite << '/' << c.name << "  measured=" << format_double(c.measured)
            << " expected=" << format_double(c.expected) << " tol=" << format_double(c.tolerance) << " ("
            << compare_name(c.compare) << ") basis=" << c.basis;
        if (!c.note.empty()) out << "  [" << c.note << ']';
        out << '\n';
    }
    out << (failed == 0 ? "all " : "") << checks.size() - failed << '/' << checks.size() << " checks passed\n";
    return out.str();
}

std::string format_report_json(const std::vector<Check>& checks)
{
    auto num = [](double v) { return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr); };
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const Check& c : checks) {
        nlohmann::ordered_json j;
        j["suite"] = c.suite;
        j["name"] = c.name;
        j["measured"] = num(c.measured);
        j["expected"] = num(c.expected);
        j["tolerance"] = num(c.tolerance);
        j["compare"] = compare_name(c.compare);
        j["basis"] = c.basis;
        j["pass"] = c.pass;
        j["note"] = c.note;
        arr.push_back(std::move(j));
    }
    nlohmann::ordered_json root;
    root["passed"] = all_passed(checks);
    root["checks"] = std::move(arr);
    return root.dump(2) + "\n";
}

} // namespace heis
