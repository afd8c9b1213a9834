#pragma once

// Mean curvature, stationarity diagnostics at singular curves, and the
// divergence of calibrating horizontal normals.

#include "heis/patch.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace heis {

/// Arclength step along characteristic curves.
inline constexpr double kCharStep = 1e-4;

/// One RK4 step of length h along the characteristic field Z in parameter space.
ParamPoint characteristic_step(const ImmersedPatch& p, const ParamPoint& q, double h);

/// H = -<D_Z nu_H, Z>/2, differentiating nu_H by central differences along an
/// RK4 trace of Z. Throws SingularPoint when |N_H| < 10 tol_singular.
double mean_curvature_char(const ImmersedPatch& p, double e, double s, double h_fd = kCharStep,
                           double tol_singular = kTolSingular);

/// (q^2 u_xx - 2 q p u_xy + p^2 u_yy) + 2H (p^2 + q^2)^{3/2} with p = u_x - y,
/// q = u_y + x. Throws SingularPoint when p^2 + q^2 < tol^2.
double graph_pde_residual(const GraphJet& u, double x, double y, double H,
                          double tol_singular = kTolSingular);
double graph_pde_residual(const GraphFunction& g, double x, double y, double H,
                          double tol_singular = kTolSingular);
/// The H that makes the residual vanish at (x, y).
double graph_pde_H(const GraphJet& u, double x, double y, double tol_singular = kTolSingular);

/// Derivatives of u up to second order by fourth-order central differences.
GraphJet graph_jet_fd(const std::function<double(double, double)>& u, double x, double y,
                      double h = 1e-3);

/// <lim Z, tangent of the singular curve> at parameter tau. The limit of Z is
/// extrapolated from offsets delta and 2 delta into the regular side, with
/// delta = 10 tol_singular. Throws NoSingularCurve if the point is regular.
double orthogonality_defect(const ImmersedPatch& p, const SingularCurveOnPatch& c, double tau,
                            double tol_singular = kTolSingular);
/// Uses the index-th singular curve attached to the patch.
double orthogonality_defect(const ImmersedPatch& p, std::size_t index, double tau,
                            double tol_singular = kTolSingular);

/// Riemannian divergence at q of nu_H for the foliation of H^1 by vertical
/// translates of the graph `leaf`. Throws OnSingularLocus at singular points.
double calibration_divergence(const GraphFunction& leaf, const Point& q, double h = kDefaultFdStep,
                              double tol_singular = kTolSingular);
/// Leaves t = xy + a y + b + c.
double calibration_divergence(double a, double b, const Point& q, double h = kDefaultFdStep,
                              double tol_singular = kTolSingular);

/// Leaves of t = xy + a y + b and of the plane t = 0.
GraphFunction bernstein_leaf(double a, double b);
GraphFunction plane_leaf();

/// Traces the characteristic curve from (e, s) for `length` with RK4 steps and
/// measures its distance from the geodesic of curvature H with the same
/// initial point and direction. A trace that leaves the domain or stalls at a
/// singular curve stops early with `completed` false.
struct RulingCheck {
    double max_deviation = 0.0;
    double traced = 0.0;
    bool completed = false;
};
RulingCheck ruling_check(const ImmersedPatch& p, double e, double s, double H, double length = 1.0,
                         double step = 1e-3, double tol_singular = kTolSingular);

struct CurvatureReport {
    double eps = 0.0;
    double s = 0.0;
    double H_est = 0.0;
    double residual = 0.0;
    std::string method;
};

/// Samples interior grid points; the characteristic method everywhere regular
/// and the graph equation where the patch carries a graph function.
std::vector<CurvatureReport> curvature_report(const ImmersedPatch& p, int n_eps, int n_s);

/// Columns eps,s,H_est,residual,method.
void write_curvature_csv(std::ostream& out, const std::vector<CurvatureReport>& rows);

} // namespace heis
