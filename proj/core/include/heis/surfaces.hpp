#pragma once

// The surface catalog and the builders of surfaces foliated by geodesics
// leaving a horizontal curve orthogonally.

#include "heis/curves.hpp"
#include "heis/geodesics.hpp"
#include "heis/patch.hpp"
#include "heis/polynomial.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace heis {

// Spheres -------------------------------------------------------------------------

/// F(theta, s) = geodesic from the origin with direction theta and curvature
/// lambda, theta in [0, 2 pi], s in [0, pi/lambda]. Inner normal orientation.
ImmersedPatch sphere_geodesic(double lambda);

/// t-coordinate of the upper (sign = +1) or lower (sign = -1) sheet at radius rho:
/// pi/(4 lambda^2) + sign/(2 lambda^2) (lambda rho sqrt(1 - lambda^2 rho^2) + arccos(lambda rho)).
double sphere_sheet_t(double lambda, double rho, int sign);

struct SphereGraph {
    ImmersedPatch upper;  ///< polar parameters (theta, rho), inner normal
    ImmersedPatch lower;
    GraphFunction upper_fn;
    GraphFunction lower_fn;
};

SphereGraph sphere_graph(double lambda);

// Planes, cylinders, graphs ---------------------------------------------------------

/// The Euclidean plane {p : <n, p> = d} over [-extent, extent]^2.
ImmersedPatch plane_patch(const Vec3& n, double d, double extent = 1.0);

/// Right circular cylinder x^2 + y^2 = rho^2, |t| <= half_height.
ImmersedPatch vertical_cylinder(double rho, double half_height = 1.0);

/// g, g', g'' at y.
using ScalarJetFn = std::function<std::array<double, 3>(double)>;

/// t = xy + g(y) over [-extent, extent]^2, parameters (x, y), upward normal.
/// The singular curve x = -g'(y)/2 is attached, parameterized by y.
ImmersedPatch bernstein_graph(const ScalarJetFn& g, double extent = 2.0);
ImmersedPatch bernstein_graph(const Polynomial& g, double extent = 2.0);

// Orthogonal geodesic families --------------------------------------------------------

enum class Side { PlusJ = 1, MinusJ = -1 };

/// F(eps, s) = geodesic of curvature lambda from Gamma(eps) with initial velocity
/// J(Gamma'(eps)) (PlusJ) or -J(Gamma'(eps)) (MinusJ).
class OrthogonalFamily {
public:
    OrthogonalFamily() = default;
    OrthogonalFamily(HorizontalCurve gamma, double lambda, Side side);

    const HorizontalCurve& gamma() const { return gamma_; }
    double lambda() const { return lambda_; }
    Side side() const { return side_; }

    GeodesicSpec geodesic(double eps) const;
    /// Unrectified jet: F, V_eps = dF/d eps at fixed s, and dF/ds.
    PatchJet jet(double eps, double s) const;
    /// Cartesian V_eps(s) and its s-derivative.
    std::pair<Vec3, Vec3> variation(double eps, double s) const;
    /// V_eps along gamma_eps in frame coefficients.
    FieldAlong variation_field(double eps) const;

    /// Cut function: cut_time(+-h(eps), lambda). Throws for lambda = 0.
    double cut(double eps) const;
    double cut_rate(double eps) const;

private:
    struct Initial {
        CartesianJet g;
        double A, B, dA, dB;
    };
    Initial initial(double eps) const;

    HorizontalCurve gamma_;
    double lambda_ = 0.0;
    Side side_ = Side::PlusJ;
};

struct SigmaLambda {
    OrthogonalFamily family;
    /// Parameters (eps, sigma) with s = sigma * s_eps, sigma in [0, 1]. Oriented
    /// so that the mean curvature is lambda.
    ImmersedPatch patch;
};

/// Sigma_lambda(Gamma) (PlusJ) or its reversed companion (MinusJ). Both
/// boundary rows are singular curves. Throws InvalidArgument for lambda = 0.
SigmaLambda build_sigma_lambda(const HorizontalCurve& gamma, double lambda, Side side = Side::PlusJ);

/// Sigma_0(Gamma): horizontal lines orthogonal to Gamma, s in [s_min, s_max].
SigmaLambda build_sigma_zero(const HorizontalCurve& gamma, double s_min, double s_max);

struct CylinderS {
    SigmaLambda plus;   ///< Sigma_lambda(x-axis)
    SigmaLambda minus;  ///< reversed companion
    ImmersedPatch f_sheet;
    ImmersedPatch g_sheet;
    GraphFunction f;
    GraphFunction g;
};

/// The surfaces built from the x-axis, eps in [-half_length, half_length],
/// and their graph sheets over the strip |y| <= 1/(2|lambda|).
CylinderS cylinder_S(double lambda, double half_length = 1.0);

// Catalog ---------------------------------------------------------------------------

struct SurfaceParams {
    double lambda = 1.0;
    double r = 1.0;
    double rho = 1.0;
    Vec3 normal{0.0, 0.0, 1.0};
    double offset = 0.0;
    std::string g = "y^2";
    std::string curve_csv;
    int k_max = 1;
    double extent = 1.0;
};

std::vector<std::string> catalog_names();

/// Builds a catalog surface by name. Throws UnknownSurface.
ImmersedPatch make_surface(const std::string& name, const SurfaceParams& params);

} // namespace heis
