#pragma once

// Sub-Riemannian area, enclosed volume, and the identities relating them.

#include "heis/patch.hpp"

#include <functional>
#include <string>

namespace heis {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long cells = 0;
};

/// Tensor 8-point Gauss-Legendre rule on an n_eps x n_s grid of cells. The
/// error estimate compares with the rule on the half-resolution grid.
QuadratureResult integrate(const ImmersedPatch& p, int n_eps, int n_s,
                           const std::function<double(const NormalData&, double, double)>& density);

/// A = integral of |N_H| dSigma.
QuadratureResult area(const ImmersedPatch& p, int n);
QuadratureResult area(const ImmersedPatch& p, int n_eps, int n_s);

/// Riemannian area integral of dSigma.
QuadratureResult riemannian_area(const ImmersedPatch& p, int n);

/// -1/4 integral of <W, N> dSigma. Requires an oriented patch (OrientationUnset)
/// that is closed unless allow_open is set (NotApplicable).
QuadratureResult volume_enclosed(const ImmersedPatch& p, int n, bool allow_open = false);
QuadratureResult volume_enclosed(const ImmersedPatch& p, int n_eps, int n_s, bool allow_open = false);

/// |3A - 8HV| / (3A) for a closed surface of mean curvature H.
double minkowski_check(const ImmersedPatch& p, double H, int n);

struct DilationRatios {
    double ratio_A = 0.0;
    double ratio_V = 0.0;
};
/// A(phi_s Sigma)/A(Sigma) and V(phi_s Sigma)/V(Sigma); the volume term is the
/// flux integral, also for open patches.
DilationRatios dilation_homogeneity(const ImmersedPatch& p, double s, int n);

struct FirstVariation {
    double A_prime = 0.0;
    double V_prime = 0.0;
    double V_prime_direct = 0.0;  ///< -integral of u dSigma
    double defect = 0.0;          ///< |A' - 2H V'|
};

/// Central differences of A and V along F + t u N, t = +-dt. Throws StepTooSmall
/// for dt < 1e-7.
FirstVariation first_variation_check(const ImmersedPatch& p, double H,
                                     const std::function<double(double, double)>& u, double dt, int n);

/// A^4 / V^3.
double iso_ratio(const ImmersedPatch& p, int n);

struct MeasuresReport {
    std::string surface;
    double lambda = 0.0;
    double A = 0.0;
    double A_err = 0.0;
    double V = 0.0;
    double V_err = 0.0;
    double H = 0.0;
    double minkowski_defect = 0.0;
    double iso_ratio = 0.0;
};

/// Area, volume, mean curvature and derived identities for one surface. H is
/// the mean of the characteristic estimate over a probe grid. Volume-based
/// fields are NaN for open patches.
MeasuresReport measures_report(const ImmersedPatch& p, double lambda, int n);

/// JSON object with keys surface, lambda, A, A_err, V, V_err, H,
/// minkowski_defect, iso_ratio (NaN written as null).
std::string to_json(const MeasuresReport& r);

} // namespace heis
