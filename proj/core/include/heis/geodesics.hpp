#pragma once

// Geodesics of curvature lambda: horizontal arclength curves solving
//     D_{gamma'} gamma' + 2 lambda J(gamma') = 0.

#include "heis/hgroup.hpp"

#include <functional>

namespace heis {

struct GeodesicSpec {
    Point base;
    double theta = 0.0;   ///< initial velocity cos(theta) X + sin(theta) Y
    double lambda = 0.0;  ///< signed curvature

    double dir_a() const { return std::cos(theta); }
    double dir_b() const { return std::sin(theta); }
};

/// The scalar functions of the closed form and their first two s-derivatives:
///     S = sin(2 lambda s) / (2 lambda),
///     C = (1 - cos(2 lambda s)) / (2 lambda),
///     Tt = (s - S) / (2 lambda).
/// Taylor series are used for |2 lambda s| < 1e-4, so lambda = 0 gives the line.
struct GeodesicBasis {
    double S = 0.0, C = 0.0, Tt = 0.0;
    double dS = 0.0, dC = 0.0, dTt = 0.0;
    double ddS = 0.0, ddC = 0.0, ddTt = 0.0;
};

GeodesicBasis geodesic_basis(double lambda, double s);

/// Cartesian position, velocity and acceleration of a curve at one parameter.
struct CartesianJet {
    Point p;
    Vec3 d1;
    Vec3 d2;
};

/// Geodesic through `base` with unit initial direction A X + B Y.
CartesianJet geodesic_jet(const Point& base, double A, double B, double lambda, double s);
CartesianJet geodesic_jet(const GeodesicSpec& g, double s);

Point geodesic_point(const Point& base, double A, double B, double lambda, double s);
Point geodesic_point(const GeodesicSpec& g, double s);

/// Unit horizontal velocity; the T-coefficient is exactly zero.
FrameVector geodesic_velocity(const Point& base, double A, double B, double lambda, double s);
FrameVector geodesic_velocity(const GeodesicSpec& g, double s);

/// D_{gamma'} gamma' + 2 lambda J(gamma') in frame coefficients for any curve
/// given by its Cartesian 2-jet.
Vec3 geodesic_residual_vector(const CartesianJet& jet, double lambda);
double geodesic_residual(const CartesianJet& jet, double lambda);
double geodesic_residual(const GeodesicSpec& g, double s);

/// Frame coefficients of a vector field along a curve and their s-derivative.
struct FieldJet {
    Vec3 value;
    Vec3 rate;
};
using FieldAlong = std::function<FieldJet(double)>;

/// lambda <V, T> + <V, gamma'>; constant along g for variation fields.
double conserved_quantity(const GeodesicSpec& g, const FrameVector& V, double s);
double conserved_quantity(const GeodesicSpec& g, const std::function<Vec3(double)>& V, double s);

/// Norm of V'' + R(V, gamma') gamma' + 2 lambda (J(V') - <V, gamma'> T), where
/// primes are covariant derivatives along g. V' is analytic from the supplied
/// rate; V'' is a fourth-order central difference of V' with step h.
Vec3 jacobi_residual_vector(const GeodesicSpec& g, const FieldAlong& V, double s,
                            double h = kDefaultFdStep);
double jacobi_residual(const GeodesicSpec& g, const FieldAlong& V, double s,
                       double h = kDefaultFdStep);

/// Variant for a field known only by value; V' is also a central difference.
double jacobi_residual(const GeodesicSpec& g, const std::function<Vec3(double)>& V, double s,
                       double h = kDefaultFdStep);

/// The unique s in (0, pi/|lambda|) with h = 2 lambda sin(2 lambda s) / (1 - cos(2 lambda s)).
/// Throws InvalidArgument for lambda = 0.
double cut_time(double h, double lambda);

} // namespace heis
