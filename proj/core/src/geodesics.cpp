#include "heis/geodesics.hpp"

#include "heis/error.hpp"

#include <cmath>
#include <numbers>

namespace heis {

namespace {

constexpr double kSeriesSwitch = 1e-4;

} // namespace

GeodesicBasis geodesic_basis(double lambda, double s)
{
    const double u = 2.0 * lambda * s;
    const double su = std::sin(u);
    const double cu = std::cos(u);
    GeodesicBasis b;
    if (std::abs(u) < kSeriesSwitch) {
        const double u2 = u * u;
        b.S = s * (1.0 - u2 / 6.0 * (1.0 - u2 / 20.0 * (1.0 - u2 / 42.0)));
        b.C = s * u * (0.5 - u2 / 24.0 * (1.0 - u2 / 30.0 * (1.0 - u2 / 56.0)));
        b.Tt = s * s * u * (1.0 / 6.0 - u2 / 120.0 * (1.0 - u2 / 42.0 * (1.0 - u2 / 72.0)));
    } else {
        const double k = 2.0 * lambda;
        b.S = su / k;
        b.C = (1.0 - cu) / k;
        b.Tt = (s - b.S) / k;
    }
    b.dS = cu;
    b.dC = su;
    b.dTt = b.C;
    b.ddS = -2.0 * lambda * su;
    b.ddC = 2.0 * lambda * cu;
    b.ddTt = su;
    return b;
}

CartesianJet geodesic_jet(const Point& base, double A, double B, double lambda, double s)
{
    const GeodesicBasis f = geodesic_basis(lambda, s);
    const double P = A * base.x + B * base.y;
    const double Q = B * base.x - A * base.y;
    CartesianJet j;
    j.p = {base.x + A * f.S + B * f.C, base.y - A * f.C + B * f.S,
           base.t + f.Tt + P * f.C - Q * f.S};
    j.d1 = {A * f.dS + B * f.dC, -A * f.dC + B * f.dS, f.dTt + P * f.dC - Q * f.dS};
    j.d2 = {A * f.ddS + B * f.ddC, -A * f.ddC + B * f.ddS, f.ddTt + P * f.ddC - Q * f.ddS};
    return j;
}

CartesianJet geodesic_jet(const GeodesicSpec& g, double s)
{
    return geodesic_jet(g.base, g.dir_a(), g.dir_b(), g.lambda, s);
}

Point geodesic_point(const Point& base, double A, double B, double lambda, double s)
{
    return geodesic_jet(base, A, B, lambda, s).p;
}

Point geodesic_point(const GeodesicSpec& g, double s) { return geodesic_jet(g, s).p; }

FrameVector geodesic_velocity(const Point& base, double A, double B, double lambda, double s)
{
    const CartesianJet j = geodesic_jet(base, A, B, lambda, s);
    return {j.p, j.d1.x, j.d1.y, 0.0};
}

FrameVector geodesic_velocity(const GeodesicSpec& g, double s)
{
    return geodesic_velocity(g.base, g.dir_a(), g.dir_b(), g.lambda, s);
}

Vec3 geodesic_residual_vector(const CartesianJet& jet, double lambda)
{
    const Vec3 u = to_frame(jet.p, jet.d1);
    const Vec3 du = frame_rate(jet.p, jet.d1, jet.d1, jet.d2);
    return covariant_derivative(u, u, du) + 2.0 * lambda * J(u);
}

double geodesic_residual(const CartesianJet& jet, double lambda)
{
    return norm(geodesic_residual_vector(jet, lambda));
}

double geodesic_residual(const GeodesicSpec& g, double s)
{
    return geodesic_residual(geodesic_jet(g, s), g.lambda);
}

double conserved_quantity(const GeodesicSpec& g, const FrameVector& V, double s)
{
    const FrameVector v = geodesic_velocity(g, s);
    return g.lambda * V.c + inner(V, v);
}

double conserved_quantity(const GeodesicSpec& g, const std::function<Vec3(double)>& V, double s)
{
    const FrameVector v = geodesic_velocity(g, s);
    return conserved_quantity(g, FrameVector::at(v.base, V(s)), s);
}

Vec3 jacobi_residual_vector(const GeodesicSpec& g, const FieldAlong& V, double s, double h)
{
    if (!(std::abs(h) >= 1e-12)) {
        fail(ErrorCode::StepUnderflow, "finite-difference step below 1e-12");
    }
    auto velocity = [&](double r) { return geodesic_velocity(g, r).coeffs(); };
    auto first = [&](double r) {
        const FieldJet f = V(r);
        return covariant_derivative(velocity(r), f.value, f.rate);
    };
    const Vec3 u = velocity(s);
    const Vec3 v = V(s).value;
    const Vec3 dv = first(s);
    const Vec3 rate = (8.0 * (first(s + h) - first(s - h)) - (first(s + 2.0 * h) - first(s - 2.0 * h))) / (12.0 * h);
    const Vec3 ddv = covariant_derivative(u, dv, rate);
    return ddv + curvature(v, u, u) + 2.0 * g.lambda * (J(dv) - dot(v, u) * basis(2));
}

double jacobi_residual(const GeodesicSpec& g, const FieldAlong& V, double s, double h)
{
    return norm(jacobi_residual_vector(g, V, s, h));
}

double jacobi_residual(const GeodesicSpec& g, const std::function<Vec3(double)>& V, double s,
                       double h)
{
    if (!(std::abs(h) >= 1e-12)) {
        fail(ErrorCode::StepUnderflow, "finite-difference step below 1e-12");
    }
    FieldAlong jet = [&](double r) {
        return FieldJet{V(r), (8.0 * (V(r + h) - V(r - h)) - (V(r + 2.0 * h) - V(r - 2.0 * h))) / (12.0 * h)};
    };
    return jacobi_residual(g, jet, s, h);
}

double cut_time(double h, double lambda)
{
    if (lambda == 0.0 || !std::isfinite(lambda)) {
        fail(ErrorCode::InvalidArgument, "cut_time requires lambda != 0");
    }
    const double l = std::abs(lambda);
    return (std::numbers::pi / 2.0 - std::atan(h / (2.0 * l))) / l;
}

} // namespace heis
