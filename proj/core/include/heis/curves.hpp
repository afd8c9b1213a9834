#pragma once

#include "heis/geodesics.hpp"
#include "heis/hgroup.hpp"

#include <functional>
#include <string>
#include <vector>

namespace heis {

inline constexpr double kTolArclength = 1e-6;
inline constexpr int kArclengthGrid = 1024;

/// Position and first two derivatives of a planar curve.
struct PlanarJet {
    double x = 0.0, y = 0.0;
    double dx = 0.0, dy = 0.0;
    double ddx = 0.0, ddy = 0.0;

    double speed() const { return std::hypot(dx, dy); }
};

struct PlanarCurve {
    double eps_min = 0.0;
    double eps_max = 1.0;
    std::function<PlanarJet(double)> eval;
};

/// Horizontal curve in H^1 given by its Cartesian 2-jet.
class HorizontalCurve {
public:
    using JetFn = std::function<CartesianJet(double)>;

    HorizontalCurve() = default;
    HorizontalCurve(double eps_min, double eps_max, JetFn jet, std::string name = "curve");

    double eps_min() const { return eps_min_; }
    double eps_max() const { return eps_max_; }
    const std::string& name() const { return name_; }

    CartesianJet jet(double eps) const { return jet_(eps); }
    Point position(double eps) const { return jet_(eps).p; }
    FrameVector velocity(double eps) const;
    /// h = x' y'' - x'' y'.
    double planar_curvature(double eps) const;

    HorizontalCurve left_translated(const Point& p) const;

    /// Max over a uniform grid of |<velocity, T>| and of ||velocity| - 1|.
    struct Defects {
        double horizontality = 0.0;
        double arclength = 0.0;
    };
    Defects defects(int samples = kArclengthGrid) const;

private:
    double eps_min_ = 0.0;
    double eps_max_ = 0.0;
    JetFn jet_;
    std::string name_;
};

/// Adaptive Simpson quadrature with absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 50);

/// Lifts an arclength planar curve to the horizontal curve with t(eps_min) = t0.
/// Throws NotArclength if the speed deviates from 1 by more than tol on the
/// validation grid.
HorizontalCurve horizontal_lift(const PlanarCurve& planar, double t0,
                                double tol_arclength = kTolArclength);

double planar_curvature(const HorizontalCurve& c, double eps);

/// Arclength reparameterization on [0, L]. Throws DegenerateCurve if the speed
/// vanishes on the grid.
PlanarCurve reparameterize_arclength(const PlanarCurve& planar, int grid = kArclengthGrid);

HorizontalCurve geodesic_as_curve(const GeodesicSpec& g, double eps_min, double eps_max);

/// The x-axis (eps, 0, 0).
HorizontalCurve line_curve(double eps_min, double eps_max);

/// Helix (sin(2 r e)/(2r), (cos(2 r e) - 1)/(2r), (e - sin(2 r e)/(2r))/(2r)).
HorizontalCurve helix_curve(double r, double eps_min, double eps_max);

PlanarCurve planar_line(double eps_min, double eps_max);
PlanarCurve planar_helix_projection(double r, double eps_min, double eps_max);

/// Natural cubic spline through (eps_i, x_i, y_i).
PlanarCurve spline_curve(const std::vector<double>& eps, const std::vector<double>& x,
                         const std::vector<double>& y);

/// Reads a CSV with header row and columns eps,x,y (eps strictly increasing).
PlanarCurve load_curve_csv(const std::string& path);

} // namespace heis
