// Acceptance criteria for the heis library. Prints one PASS/FAIL line per
// criterion and exits non-zero if any fails.

#include "heis/curvature.hpp"
#include "heis/error.hpp"
#include "heis/geodesics.hpp"
#include "heis/helicoid.hpp"
#include "heis/measures.hpp"
#include "heis/surfaces.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

using namespace heis;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Rng = std::mt19937_64;

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

Point random_point(Rng& rng) { return {uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2)}; }

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

double rel(double measured, double expected) { return std::abs(measured - expected) / std::abs(expected); }

const double kLambdas[] = {0.5, 1.0, 2.0};

Outcome sphere_area()
{
    double worst = 0.0;
    for (double l : kLambdas) worst = std::max(worst, rel(area(sphere_geodesic(l), 256).value, kPi * kPi / std::pow(l, 3)));
    return {worst < 1e-4, "max rel err " + fmt("%.3e", worst) + " (tol 1e-4, 256x256)"};
}

Outcome sphere_volume()
{
    double worst = 0.0;
    for (double l : kLambdas) {
        worst = std::max(worst, rel(volume_enclosed(sphere_geodesic(l), 256).value, 3 * kPi * kPi / (8 * std::pow(l, 4))));
    }
    return {worst < 1e-4, "max rel err " + fmt("%.3e", worst) + " (tol 1e-4, 256x256)"};
}

Outcome minkowski()
{
    double worst = 0.0;
    for (double l : kLambdas) worst = std::max(worst, minkowski_check(sphere_geodesic(l), l, 256));
    return {worst < 1e-4, "max |3A-8HV|/(3A) " + fmt("%.3e", worst) + " (tol 1e-4)"};
}

Outcome isoperimetric()
{
    const double expected = 512.0 * kPi * kPi / 27.0;
    double worst = 0.0, lo = kInf, hi = -kInf;
    for (double l : kLambdas) {
        const double r = iso_ratio(sphere_geodesic(l), 256);
        worst = std::max(worst, rel(r, expected));
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    const double spread = (hi - lo) / expected;
    return {worst < 1e-3 && spread < 1e-3,
            "max rel err " + fmt("%.3e", worst) + ", lambda spread " + fmt("%.3e", spread) + " (tol 1e-3)"};
}

Outcome geodesic_residuals()
{
    Rng rng(5);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        double lambda = std::pow(10.0, uniform(rng, -9.0, 1.0));
        if (i % 2) lambda = -lambda;
        const GeodesicSpec g{random_point(rng), uniform(rng, 0.0, 2 * kPi), lambda};
        const double s = uniform(rng, 0.0, std::min(10.0, 4 * kPi / std::abs(lambda)));
        worst = std::max(worst, geodesic_residual(g, s));
    }
    double pole = 0.0;
    for (double lambda : {0.5, 1.0, 2.0, -1.0}) {
        const Point target{0.0, 0.0, std::copysign(kPi / (2 * lambda * lambda), lambda)};
        for (int k = 0; k < 64; ++k) {
            const Point q = geodesic_point(GeodesicSpec{kIdentity, 2 * kPi * k / 64.0, lambda}, kPi / std::abs(lambda));
            pole = std::max(pole, norm(q.as_vec() - target.as_vec()));
        }
    }
    return {worst < 1e-8 && pole < 1e-12,
            "residual max " + fmt("%.3e", worst) + " over 1e4 (tol 1e-8), pole spread " + fmt("%.3e", pole) +
                " over 64 directions (tol 1e-12)"};
}

/// Killing field generated by the rotation w and translations (a, b, c), along g.
FieldAlong killing_along(const GeodesicSpec& g, double a, double b, double c, double w)
{
    return [g, a, b, c, w](double s) {
        const CartesianJet j = geodesic_jet(g, s);
        const Vec3 K{a - w * j.p.y, b + w * j.p.x, c + b * j.p.x - a * j.p.y};
        const Vec3 dK{-w * j.d1.y, w * j.d1.x, b * j.d1.x - a * j.d1.y};
        return FieldJet{to_frame(j.p, K), frame_rate(j.p, j.d1, K, dK)};
    };
}

std::vector<OrthogonalFamily> families(Rng& rng)
{
    std::vector<OrthogonalFamily> out;
    for (int i = 0; i < 8; ++i) {
        const double lambda = (i % 2 ? -1.0 : 1.0) * uniform(rng, 0.3, 3.0);
        const Side side = i % 4 < 2 ? Side::PlusJ : Side::MinusJ;
        const HorizontalCurve gamma = i % 3 == 0 ? line_curve(-1.0, 1.0) : helix_curve(uniform(rng, 0.5, 2.0), -1.0, 1.0);
        out.emplace_back(gamma, lambda, side);
    }
    return out;
}

Outcome conserved()
{
    Rng rng(6);
    double spread = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double lambda = i % 10 == 0 ? 0.0 : uniform(rng, -3.0, 3.0);
        const GeodesicSpec g{random_point(rng), uniform(rng, 0.0, 2 * kPi), lambda};
        const FieldAlong K =
            killing_along(g, uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1));
        std::vector<double> q;
        for (int k = 0; k <= 64; ++k) {
            q.push_back(conserved_quantity(g, [&K](double t) { return K(t).value; }, 4.0 * k / 64.0));
        }
        double mean = 0.0, var = 0.0;
        for (double v : q) mean += v;
        mean /= static_cast<double>(q.size());
        for (double v : q) var += (v - mean) * (v - mean);
        spread = std::max(spread, std::sqrt(var / static_cast<double>(q.size())));
    }
    double family = 0.0;
    const std::vector<OrthogonalFamily> fams = families(rng);
    for (int i = 0; i < 1000; ++i) {
        const OrthogonalFamily& f = fams[i % fams.size()];
        const double eps = uniform(rng, -0.9, 0.9);
        const GeodesicSpec g = f.geodesic(eps);
        const double s = uniform(rng, 0.0, f.cut(eps));
        const FieldAlong V = f.variation_field(eps);
        family = std::max(family, std::abs(conserved_quantity(g, [&V](double t) { return V(t).value; }, s)));
    }
    return {spread < 1e-10 && family < 1e-10,
            "stddev max " + fmt("%.3e", spread) + " on 100 geodesics, orthogonal family max |q| " + fmt("%.3e", family) +
                " (tol 1e-10)"};
}

Outcome jacobi()
{
    Rng rng(7);
    const std::vector<OrthogonalFamily> fams = families(rng);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const OrthogonalFamily& f = fams[i % fams.size()];
        const double eps = uniform(rng, -0.9, 0.9);
        const double s = uniform(rng, 0.0, f.cut(eps));
        worst = std::max(worst, jacobi_residual(f.geodesic(eps), f.variation_field(eps), s));
    }
    double tangent = 0.0, control = kInf;
    for (int i = 0; i < 200; ++i) {
        const double lambda = i % 4 == 0 ? 0.0 : uniform(rng, -3.0, 3.0);
        const GeodesicSpec g{random_point(rng), uniform(rng, 0.0, 2 * kPi), lambda};
        const double s = uniform(rng, 0.0, 3.0);
        const auto field = [g](double a, double b) -> FieldAlong {
            return [g, a, b](double t) {
                const Vec3 u = geodesic_velocity(g, t).coeffs();
                return FieldJet{(a * t + b) * u, a * u - (a * t + b) * 2.0 * g.lambda * J(u)};
            };
        };
        const double a = lambda == 0.0 ? uniform(rng, -1, 1) : 0.0;
        tangent = std::max(tangent, jacobi_residual(g, field(a, uniform(rng, -1, 1)), s));
        if (std::abs(lambda) > 0.5) control = std::min(control, jacobi_residual(g, field(1.0, 0.0), s));
    }
    return {worst < 1e-6 && tangent < 1e-6 && control > 1e-3,
            "V_eps residual max " + fmt("%.3e", worst) + " over 1e3, tangent " + fmt("%.3e", tangent) +
                " (tol 1e-6), a!=0 control min " + fmt("%.3e", control)};
}

double bisect_cut(double h, double lambda)
{
    const auto f = [h, lambda](double s) {
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

Outcome cut_function()
{
    Rng rng(8);
    double at_zero = 0.0;
    for (double lambda : {0.5, 1.0, 2.0, 4.0}) at_zero = std::max(at_zero, std::abs(cut_time(0.0, lambda) - kPi / (2 * lambda)));
    double sym = 0.0, oracle = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double lambda = (i % 2 ? -1.0 : 1.0) * uniform(rng, 0.2, 5.0);
        const double h = std::tan(uniform(rng, -1.5, 1.5)) * 4.0 * std::abs(lambda);
        sym = std::max(sym, std::abs(cut_time(h, lambda) + cut_time(-h, lambda) - kPi / std::abs(lambda)));
        oracle = std::max(oracle, std::abs(cut_time(h, lambda) - bisect_cut(h, lambda)));
    }
    return {at_zero == 0.0 && sym < 1e-12 && oracle < 1e-10,
            "cut_time(0) err " + fmt("%.1e", at_zero) + ", symmetry max " + fmt("%.3e", sym) + " (tol 1e-12), bisection " +
                fmt("%.3e", oracle) + " (tol 1e-10)"};
}

double max_h_error(const ImmersedPatch& p, double H)
{
    const Domain& d = p.domain();
    double worst = 0.0;
    int used = 0;
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            const double e = d.eps_min + d.eps_width() * (0.05 + 0.9 * i / 7.0);
            const double s = d.s_min + d.s_width() * (0.07 + 0.86 * j / 7.0);
            try {
                worst = std::max(worst, std::abs(mean_curvature_char(p, e, s) - H));
                ++used;
            } catch (const GeometryError&) {
            }
        }
    }
    return used >= 32 ? worst : kInf;
}

Outcome mean_curvature()
{
    double worst = 0.0;
    worst = std::max(worst, max_h_error(sphere_geodesic(1.0), 1.0));
    worst = std::max(worst, max_h_error(build_sigma_lambda(line_curve(-1.0, 1.0), 1.0).patch, 1.0));
    const CylinderS cyl = cylinder_S(1.0);
    worst = std::max({worst, max_h_error(cyl.plus.patch, 1.0), max_h_error(cyl.minus.patch, 1.0)});
    for (double lambda : {1.0, -2.0}) {
        for (const HelicoidPiece& piece : helicoid_L(lambda, 1.0, 3).pieces) {
            worst = std::max(worst, max_h_error(piece.sigma.patch, lambda));
        }
    }
    for (const char* g : {"y^2", "y", "0.7*y + 0.2", "y^3 - 0.5*y"}) {
        worst = std::max(worst, max_h_error(bernstein_graph(Polynomial::parse(g)), 0.0));
    }
    double pde = 0.0;
    for (double lambda : kLambdas) {
        const SphereGraph sg = sphere_graph(lambda);
        for (int i = 1; i < 10; ++i) {
            for (int k = 0; k < 12; ++k) {
                const double rho = 0.1 * i / lambda, th = 2 * kPi * k / 12.0;
                const double x = rho * std::cos(th), y = rho * std::sin(th);
                pde = std::max({pde, std::abs(graph_pde_residual(sg.upper_fn, x, y, sg.upper_fn.pde_H)),
                                std::abs(graph_pde_residual(sg.lower_fn, x, y, sg.lower_fn.pde_H))});
            }
        }
    }
    return {worst < 1e-4 && pde < 1e-6,
            "max |H - H_expected| " + fmt("%.3e", worst) + " (tol 1e-4), sphere sheet PDE residual " + fmt("%.3e", pde) +
                " (tol 1e-6)"};
}

double max_defect(const ImmersedPatch& p)
{
    double worst = 0.0;
    for (const SingularCurveOnPatch& c : p.info().singular_curves) {
        for (int k = 0; k <= 16; ++k) {
            const double tau = c.tau_min + (c.tau_max - c.tau_min) * (0.05 + 0.9 * k / 16.0);
            worst = std::max(worst, std::abs(orthogonality_defect(p, c, tau)));
        }
    }
    return worst;
}

Outcome stationarity()
{
    double worst = 0.0;
    for (double lambda : {1.0, -2.0}) {
        worst = std::max(worst, max_defect(build_sigma_lambda(line_curve(-1.0, 1.0), lambda).patch));
        worst = std::max(worst, max_defect(build_sigma_lambda(helix_curve(1.0, -1.0, 1.0), lambda).patch));
    }
    for (const char* g : {"0.7*y + 0.2", "-1.3*y", "0.4"}) worst = std::max(worst, max_defect(bernstein_graph(Polynomial::parse(g))));
    const ImmersedPatch sq = bernstein_graph(Polynomial::parse("y^2"));
    const SingularCurveOnPatch& c = sq.info().singular_curves.front();
    double control = 0.0;
    for (int k = 0; k <= 16; ++k) {
        const double tau = c.tau_min + (c.tau_max - c.tau_min) * (0.05 + 0.9 * k / 16.0);
        control = std::max(control, std::abs(orthogonality_defect(sq, c, tau) + 1.0));
    }
    return {worst < 1e-6 && control < 1e-6,
            "stationary defect max " + fmt("%.3e", worst) + ", g=y^2 |defect+1| " + fmt("%.3e", control) + " (tol 1e-6)"};
}

Outcome calibration()
{
    Rng rng(11);
    const double a = uniform(rng, -1, 1), b = uniform(rng, -1, 1);
    double worst = 0.0;
    int taken = 0;
    while (taken < 100) {
        const Point q = random_point(rng);
        if (std::abs(2 * q.x + a) < 1e-3 || std::hypot(q.x, q.y) < 1e-3) continue;
        worst = std::max({worst, std::abs(calibration_divergence(a, b, q)), std::abs(calibration_divergence(plane_leaf(), q))});
        ++taken;
    }
    GraphFunction cubic;
    cubic.eval = [](double x, double y) { return GraphJet{x * y + y * y * y, y, x + 3 * y * y, 0.0, 1.0, 6 * y}; };
    double control = 0.0;
    const double h = kDefaultFdStep;
    for (int k = 0; k <= 32; ++k) {
        const double y = -1.0 + 2.0 * k / 32.0;
        try {
            control = std::max(control, std::abs(calibration_divergence(cubic, {-1.5 * y * y + 0.5 * h, y, 0.3}, h)));
        } catch (const GeometryError&) {
        }
    }
    return {worst < 1e-6 && control > 1e-2,
            "stationary max |div| " + fmt("%.3e", worst) + " (tol 1e-6), t=xy+y^3 max |div| " + fmt("%.3e", control) +
                " (> 1e-2)"};
}

Outcome helicoid()
{
    double relation = 0.0;
    for (double lambda : {0.5, 1.0, 2.0, -1.0, -3.0}) {
        for (double r : {0.5, 1.0, 2.0}) {
            relation = std::max(relation, std::abs(helicoid_c2(lambda, r) -
                                                   (std::copysign(kPi / (2 * lambda * lambda), lambda) - helicoid_c1(lambda, r))));
        }
    }
    const Helicoid h = helicoid_L(1.0, 1.0, 4);
    double offsets = 0.0;
    for (const HelicoidPiece& p : h.pieces) {
        offsets = std::max({offsets, std::abs(reduce_mod(p.measured_offset - p.formula_offset, h.pitch)), p.offset_spread,
                            p.radial_error});
    }
    double gap = kInf;
    for (std::size_t i = 0; i < h.pieces.size(); ++i) {
        for (std::size_t j = i + 1; j < h.pieces.size(); ++j) {
            gap = std::min(gap, std::abs(reduce_mod(h.pieces[i].measured_offset - h.pieces[j].measured_offset, h.pitch)));
        }
    }
    return {relation < 1e-12 && offsets < 1e-8 && h.pieces.size() == 8 && gap > 1e-6,
            "c2 relation " + fmt("%.3e", relation) + " (tol 1e-12), offsets " + fmt("%.3e", offsets) +
                " (tol 1e-8), min gap between " + std::to_string(h.pieces.size()) + " curves " + fmt("%.3e", gap)};
}

Outcome dilation()
{
    const ImmersedPatch pieces[] = {sphere_geodesic(1.0), build_sigma_lambda(line_curve(-1.0, 1.0), 1.0).patch};
    double worst = 0.0;
    for (const ImmersedPatch& p : pieces) {
        for (double s : {-0.5, std::log(2.0)}) {
            const DilationRatios d = dilation_homogeneity(p, s, 64);
            worst = std::max({worst, rel(d.ratio_A, std::exp(3 * s)), rel(d.ratio_V, std::exp(4 * s))});
        }
    }
    return {worst < 1e-4, "max rel err " + fmt("%.3e", worst) + " (tol 1e-4)"};
}

Outcome first_variation()
{
    const ImmersedPatch s = sphere_geodesic(1.0);
    const FirstVariation one = first_variation_check(s, 1.0, [](double, double) { return 1.0; }, 1e-4, 64);
    const double ratio = one.defect / std::abs(one.A_prime);
    const FirstVariation zero =
        first_variation_check(s, 1.0, [](double th, double sv) { return std::cos(th) * std::sin(sv); }, 1e-4, 64);
    const double A = area(s, 64).value;
    const double mean_zero = std::abs(zero.A_prime) / A;
    return {ratio < 1e-3 && mean_zero < 1e-3,
            "u=1 |A'-2HV'|/|A'| " + fmt("%.3e", ratio) + ", mean-zero |A'|/A " + fmt("%.3e", mean_zero) + " (tol 1e-3)"};
}

Outcome ruling()
{
    double worst = 0.0;
    int surfaces = 0;
    std::string missing;
    for (const std::string& name : catalog_names()) {
        SurfaceParams params;
        params.extent = 3.0;
        const ImmersedPatch p = make_surface(name, params);
        if (!p.info().mean_curvature) continue;
        const double H = *p.info().mean_curvature;
        const Domain& d = p.domain();
        int completed = 0;
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                const double e = d.eps_min + d.eps_width() * (0.1 + 0.8 * i / 4.0);
                const double s = d.s_min + d.s_width() * (0.08 + 0.8 * j / 4.0);
                try {
                    const RulingCheck rc = ruling_check(p, e, s, H, 1.0);
                    worst = std::max(worst, rc.max_deviation);
                    completed += rc.completed ? 1 : 0;
                } catch (const GeometryError&) {
                }
            }
        }
        ++surfaces;
        if (completed < 4) missing += " " + name;
    }
    return {worst < 1e-5 && missing.empty(),
            "max deviation " + fmt("%.3e", worst) + " over " + std::to_string(surfaces) + " surfaces (tol 1e-5)" +
                (missing.empty() ? std::string() : ", too few full traces on" + missing)};
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"sphere area", sphere_area},
        {"sphere volume", sphere_volume},
        {"Minkowski formula", minkowski},
        {"isoperimetric constant", isoperimetric},
        {"geodesic residual and poles", geodesic_residuals},
        {"conserved quantity", conserved},
        {"Jacobi residual", jacobi},
        {"cut function", cut_function},
        {"mean curvature", mean_curvature},
        {"stationarity", stationarity},
        {"calibration", calibration},
        {"helicoid bookkeeping", helicoid},
        {"dilation homogeneity", dilation},
        {"first variation", first_variation},
        {"ruling property", ruling},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2zu %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(), secs);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
