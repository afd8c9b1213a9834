#include "heis/surfaces.hpp"

#include "heis/error.hpp"
#include "heis/helicoid.hpp"

#include <cmath>
#include <numbers>

namespace heis {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        fail(ErrorCode::InvalidArgument, std::string(what) + " must be positive");
    }
}

void require_nonzero(double v, const char* what)
{
    if (v == 0.0 || !std::isfinite(v)) {
        fail(ErrorCode::InvalidArgument, std::string(what) + " must be nonzero");
    }
}

double sgn(double v) { return (v > 0.0) - (v < 0.0); }

// Radial profile u(rho) of a sphere sheet and its first two derivatives.
std::array<double, 3> sheet_profile(double lambda, double rho, int sign)
{
    const double lr = lambda * rho;
    const double root = std::sqrt(std::max(0.0, 1.0 - lr * lr));
    const double u = sphere_sheet_t(lambda, rho, sign);
    const double du = -sign * lambda * rho * rho / root;
    const double ddu = -sign * lambda * rho * (2.0 - lr * lr) / (root * root * root);
    return {u, du, ddu};
}

GraphFunction sheet_graph(double lambda, int sign)
{
    GraphFunction g;
    g.pde_H = sign * lambda;
    g.eval = [lambda, sign](double x, double y) {
        const double rho = std::hypot(x, y);
        const auto [u, du, ddu] = sheet_profile(lambda, rho, sign);
        GraphJet j;
        j.u = u;
        if (rho == 0.0) return j;
        const double lr = lambda * rho;
        const double du_over_rho = -sign * lambda * rho / std::sqrt(1.0 - lr * lr);
        const double cx = x / rho, cy = y / rho;
        j.ux = du * cx;
        j.uy = du * cy;
        j.uxx = ddu * cx * cx + du_over_rho * cy * cy;
        j.uyy = ddu * cy * cy + du_over_rho * cx * cx;
        j.uxy = (ddu - du_over_rho) * cx * cy;
        return j;
    };
    return g;
}

ImmersedPatch sheet_patch(double lambda, int sign)
{
    const Domain d{0.0, 2.0 * kPi, 0.0, 1.0 / lambda};
    PatchInfo info;
    info.mean_curvature = lambda;
    info.graph = sheet_graph(lambda, sign);
    info.periodic_eps = true;
    info.collapsed_s_min = true;
    auto jet = [lambda, sign](double th, double rho) {
        const auto [u, du, ddu] = sheet_profile(lambda, rho, sign);
        (void)ddu;
        const double c = std::cos(th), s = std::sin(th);
        return PatchJet{{rho * c, rho * s, u}, {-rho * s, rho * c, 0.0}, {c, s, du}};
    };
    return ImmersedPatch(sign > 0 ? "sphere_graph_upper" : "sphere_graph_lower", d, jet,
                         sign > 0 ? Orientation::Positive : Orientation::Negative, info);
}

} // namespace

ImmersedPatch sphere_geodesic(double lambda)
{
    require_positive(lambda, "lambda");
    const Domain d{0.0, 2.0 * kPi, 0.0, kPi / lambda};
    PatchInfo info;
    info.mean_curvature = lambda;
    info.closed = true;
    info.periodic_eps = true;
    info.collapsed_s_min = true;
    info.collapsed_s_max = true;
    auto jet = [lambda](double th, double s) {
        const double A = std::cos(th), B = std::sin(th);
        const CartesianJet g = geodesic_jet(kIdentity, A, B, lambda, s);
        const GeodesicBasis f = geodesic_basis(lambda, s);
        return PatchJet{g.p, {-B * f.S + A * f.C, B * f.C + A * f.S, 0.0}, g.d1};
    };
    return ImmersedPatch("sphere", d, jet, Orientation::Negative, info);
}

double sphere_sheet_t(double lambda, double rho, int sign)
{
    const double lr = std::clamp(lambda * rho, -1.0, 1.0);
    const double l2 = lambda * lambda;
    return kPi / (4.0 * l2) + sign / (2.0 * l2) * (lr * std::sqrt(1.0 - lr * lr) + std::acos(lr));
}

SphereGraph sphere_graph(double lambda)
{
    require_positive(lambda, "lambda");
    return {sheet_patch(lambda, 1), sheet_patch(lambda, -1), sheet_graph(lambda, 1),
            sheet_graph(lambda, -1)};
}

ImmersedPatch plane_patch(const Vec3& n, double d, double extent)
{
    const double nn = norm(n);
    if (!(nn > 0.0)) {
        fail(ErrorCode::InvalidArgument, "plane normal must be nonzero");
    }
    const Vec3 unit = n / nn;
    Vec3 e1 = cross(unit, basis(2));
    if (norm(e1) < 1e-12) e1 = basis(0);
    e1 = e1 / norm(e1);
    const Vec3 e2 = cross(unit, e1);
    const Vec3 origin = (d / nn) * unit;
    PatchInfo info;
    info.mean_curvature = 0.0;
    if (std::abs(n.z) > 1e-12) {
        GraphFunction g;
        g.pde_H = 0.0;
        g.eval = [n, d](double x, double y) {
            GraphJet j;
            j.u = (d - n.x * x - n.y * y) / n.z;
            j.ux = -n.x / n.z;
            j.uy = -n.y / n.z;
            return j;
        };
        info.graph = g;
    }
    return ImmersedPatch("plane", {-extent, extent, -extent, extent},
                         [origin, e1, e2](double a, double b) {
                             return PatchJet{Point::from_vec(origin + a * e1 + b * e2), e1, e2};
                         },
                         Orientation::Positive, info);
}

ImmersedPatch vertical_cylinder(double rho, double half_height)
{
    require_positive(rho, "rho");
    PatchInfo info;
    info.periodic_eps = true;
    info.mean_curvature = -0.5 / rho;
    return ImmersedPatch("vertical_cylinder", {0.0, 2.0 * kPi, -half_height, half_height},
                         [rho](double th, double t) {
                             const double c = std::cos(th), s = std::sin(th);
                             return PatchJet{{rho * c, rho * s, t}, {-rho * s, rho * c, 0.0}, {0.0, 0.0, 1.0}};
                         },
                         Orientation::Positive, info);
}

ImmersedPatch bernstein_graph(const ScalarJetFn& g, double extent)
{
    PatchInfo info;
    info.mean_curvature = 0.0;
    GraphFunction graph;
    graph.pde_H = 0.0;
    graph.eval = [g](double x, double y) {
        const auto [v, d1, d2] = g(y);
        return GraphJet{x * y + v, y, x + d1, 0.0, 1.0, d2};
    };
    info.graph = graph;
    SingularCurveOnPatch sc;
    sc.label = "x=-g'(y)/2";
    sc.tau_min = -extent;
    sc.tau_max = extent;
    sc.param = [g](double y) { return ParamPoint{-0.5 * g(y)[1], y}; };
    sc.param_rate = [g](double y) { return ParamPoint{-0.5 * g(y)[2], 1.0}; };
    sc.regular_side = {1.0, 0.0};
    info.singular_curves.push_back(sc);
    return ImmersedPatch("bernstein", {-extent, extent, -extent, extent},
                         [g](double x, double y) {
                             const auto [v, d1, d2] = g(y);
                             (void)d2;
                             return PatchJet{{x, y, x * y + v}, {1.0, 0.0, y}, {0.0, 1.0, x + d1}};
                         },
                         Orientation::Positive, info);
}

ImmersedPatch bernstein_graph(const Polynomial& g, double extent)
{
    const Polynomial d1 = g.derivative();
    const Polynomial d2 = d1.derivative();
    return bernstein_graph([g, d1, d2](double y) { return std::array<double, 3>{g(y), d1(y), d2(y)}; },
                           extent);
}

// Orthogonal families ---------------------------------------------------------------

OrthogonalFamily::OrthogonalFamily(HorizontalCurve gamma, double lambda, Side side)
    : gamma_(std::move(gamma)), lambda_(lambda), side_(side)
{}

OrthogonalFamily::Initial OrthogonalFamily::initial(double eps) const
{
    const CartesianJet g = gamma_.jet(eps);
    const double k = static_cast<double>(static_cast<int>(side_));
    return {g, -k * g.d1.y, k * g.d1.x, -k * g.d2.y, k * g.d2.x};
}

GeodesicSpec OrthogonalFamily::geodesic(double eps) const
{
    const Initial in = initial(eps);
    return {in.g.p, std::atan2(in.B, in.A), lambda_};
}

PatchJet OrthogonalFamily::jet(double eps, double s) const
{
    const Initial in = initial(eps);
    const CartesianJet geo = geodesic_jet(in.g.p, in.A, in.B, lambda_, s);
    const auto [V, dV] = variation(eps, s);
    (void)dV;
    return {geo.p, V, geo.d1};
}

std::pair<Vec3, Vec3> OrthogonalFamily::variation(double eps, double s) const
{
    const Initial in = initial(eps);
    const GeodesicBasis f = geodesic_basis(lambda_, s);
    const Point& p = in.g.p;
    const Vec3& dp = in.g.d1;
    const double dP = in.dA * p.x + in.A * dp.x + in.dB * p.y + in.B * dp.y;
    const double dQ = in.dB * p.x + in.B * dp.x - in.dA * p.y - in.A * dp.y;
    const Vec3 V{dp.x + in.dA * f.S + in.dB * f.C, dp.y - in.dA * f.C + in.dB * f.S,
                 dp.z + dP * f.C - dQ * f.S};
    const Vec3 dV{in.dA * f.dS + in.dB * f.dC, -in.dA * f.dC + in.dB * f.dS, dP * f.dC - dQ * f.dS};
    return {V, dV};
}

FieldAlong OrthogonalFamily::variation_field(double eps) const
{
    const OrthogonalFamily self = *this;
    return [self, eps](double s) {
        const PatchJet j = self.jet(eps, s);
        const auto [V, dV] = self.variation(eps, s);
        return FieldJet{to_frame(j.p, V), frame_rate(j.p, j.Fs, V, dV)};
    };
}

double OrthogonalFamily::cut(double eps) const
{
    const double k = static_cast<double>(static_cast<int>(side_));
    return cut_time(k * gamma_.planar_curvature(eps), lambda_);
}

double OrthogonalFamily::cut_rate(double eps) const
{
    constexpr double h = 1e-5;
    const double k = static_cast<double>(static_cast<int>(side_));
    const double l = std::abs(lambda_);
    const double hv = k * gamma_.planar_curvature(eps);
    const double dh = k * (gamma_.planar_curvature(eps + h) - gamma_.planar_curvature(eps - h)) / (2.0 * h);
    const double q = hv / (2.0 * l);
    return -dh / (2.0 * l * l * (1.0 + q * q));
}

SigmaLambda build_sigma_lambda(const HorizontalCurve& gamma, double lambda, Side side)
{
    if (lambda == 0.0 || !std::isfinite(lambda)) {
        fail(ErrorCode::InvalidArgument, "build_sigma_lambda requires lambda != 0; use build_sigma_zero");
    }
    OrthogonalFamily family(gamma, lambda, side);
    PatchInfo info;
    info.mean_curvature = lambda;
    for (int row = 0; row < 2; ++row) {
        SingularCurveOnPatch sc;
        sc.label = row == 0 ? "Gamma" : "Gamma_1";
        sc.tau_min = gamma.eps_min();
        sc.tau_max = gamma.eps_max();
        const double sigma = row;
        sc.param = [sigma](double e) { return ParamPoint{e, sigma}; };
        sc.param_rate = [](double) { return ParamPoint{1.0, 0.0}; };
        sc.regular_side = {0.0, row == 0 ? 1.0 : -1.0};
        info.singular_curves.push_back(sc);
    }
    auto jet = [family](double e, double sigma) {
        const double se = family.cut(e);
        const double dse = family.cut_rate(e);
        const PatchJet j = family.jet(e, sigma * se);
        return PatchJet{j.p, j.Fe + (sigma * dse) * j.Fs, se * j.Fs};
    };
    const Domain d{gamma.eps_min(), gamma.eps_max(), 0.0, 1.0};
    const Orientation o = side == Side::PlusJ ? Orientation::Positive : Orientation::Negative;
    const std::string name = side == Side::PlusJ ? "sigma-lambda" : "sigma-lambda-reversed";
    return {family, ImmersedPatch(name, d, jet, o, info)};
}

SigmaLambda build_sigma_zero(const HorizontalCurve& gamma, double s_min, double s_max)
{
    OrthogonalFamily family(gamma, 0.0, Side::PlusJ);
    PatchInfo info;
    info.mean_curvature = 0.0;
    if (s_min <= 0.0 && s_max >= 0.0) {
        SingularCurveOnPatch sc;
        sc.label = "Gamma";
        sc.tau_min = gamma.eps_min();
        sc.tau_max = gamma.eps_max();
        sc.param = [](double e) { return ParamPoint{e, 0.0}; };
        sc.param_rate = [](double) { return ParamPoint{1.0, 0.0}; };
        sc.regular_side = {0.0, s_max > 0.0 ? 1.0 : -1.0};
        info.singular_curves.push_back(sc);
    }
    auto jet = [family](double e, double s) { return family.jet(e, s); };
    return {family, ImmersedPatch("sigma-zero", {gamma.eps_min(), gamma.eps_max(), s_min, s_max}, jet,
                                  Orientation::Positive, info)};
}

// Cylinders S_lambda -------------------------------------------------------------------

namespace {

GraphFunction cylinder_sheet(double lambda, int which)
{
    // which = +1: f, which = -1: g.
    GraphFunction out;
    out.pde_H = -which * lambda;
    out.eval = [lambda, which](double x, double y) {
        const double l2 = lambda * lambda;
        const double R = std::max(0.0, 1.0 - 4.0 * l2 * y * y);
        const double root = std::sqrt(R);
        const double a = std::asin(std::clamp(2.0 * lambda * y, -1.0, 1.0)) / (2.0 * lambda) - y * root;
        const double base = which > 0 ? 0.0 : sgn(lambda) * kPi / (4.0 * l2);
        GraphJet j;
        j.u = base + which * sgn(y) * a / (2.0 * lambda) - x * y;
        j.ux = -y;
        j.uy = which * 4.0 * lambda * y * std::abs(y) / root - x;
        j.uxx = 0.0;
        j.uxy = -1.0;
        j.uyy = which * 8.0 * lambda * std::abs(y) * (1.0 - 2.0 * l2 * y * y) / (R * root);
        return j;
    };
    return out;
}

ImmersedPatch graph_patch(std::string name, const GraphFunction& g, const Domain& d, Orientation o,
                          double H)
{
    PatchInfo info;
    info.graph = g;
    info.mean_curvature = H;
    return ImmersedPatch(std::move(name), d,
                         [g](double x, double y) {
                             const GraphJet j = g.eval(x, y);
                             return PatchJet{{x, y, j.u}, {1.0, 0.0, j.ux}, {0.0, 1.0, j.uy}};
                         },
                         o, info);
}

} // namespace

CylinderS cylinder_S(double lambda, double half_length)
{
    require_nonzero(lambda, "lambda");
    const HorizontalCurve axis = line_curve(-half_length, half_length);
    CylinderS out;
    out.plus = build_sigma_lambda(axis, lambda, Side::PlusJ);
    out.minus = build_sigma_lambda(axis, lambda, Side::MinusJ);
    out.f = cylinder_sheet(lambda, 1);
    out.g = cylinder_sheet(lambda, -1);
    const double w = 1.0 / (2.0 * std::abs(lambda));
    const Domain d{-half_length, half_length, -w, w};
    out.f_sheet = graph_patch("cylinder_S_f", out.f, d, Orientation::Positive, lambda);
    out.g_sheet = graph_patch("cylinder_S_g", out.g, d, Orientation::Negative, lambda);
    return out;
}

// Catalog ---------------------------------------------------------------------------------

std::vector<std::string> catalog_names()
{
    return {"plane", "vertical_plane", "vertical_cylinder", "sphere", "cylinder_S",
            "helicoid_L", "bernstein", "sigma-lambda", "sigma-zero"};
}

ImmersedPatch make_surface(const std::string& name, const SurfaceParams& p)
{
    if (name == "plane") return plane_patch(p.normal, p.offset, p.extent);
    if (name == "vertical_plane") return plane_patch({0.0, 1.0, 0.0}, p.offset, p.extent).renamed("vertical_plane");
    if (name == "vertical_cylinder") return vertical_cylinder(p.rho, p.extent);
    if (name == "sphere") return sphere_geodesic(p.lambda);
    if (name == "cylinder_S") return cylinder_S(p.lambda, p.extent).plus.patch.renamed("cylinder_S");
    if (name == "helicoid_L") {
        const Helicoid h = helicoid_L(p.lambda, p.r, std::max(1, p.k_max), p.extent);
        return h.pieces.front().sigma.patch.renamed("helicoid_L");
    }
    if (name == "bernstein") return bernstein_graph(Polynomial::parse(p.g), std::max(p.extent, 1.0));
    if (name == "sigma-lambda" || name == "sigma-zero") {
        HorizontalCurve gamma = helix_curve(p.r, -p.extent, p.extent);
        if (!p.curve_csv.empty()) {
            gamma = horizontal_lift(reparameterize_arclength(load_curve_csv(p.curve_csv)), 0.0);
        }
        if (name == "sigma-zero") return build_sigma_zero(gamma, -p.extent, p.extent).patch;
        return build_sigma_lambda(gamma, p.lambda).patch;
    }
    fail(ErrorCode::UnknownSurface, "unknown surface '" + name + "'");
}

} // namespace heis
