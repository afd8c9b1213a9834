#pragma once

// Parametric immersions F(eps, s) into H^1 and their pointwise normal data.

#include "heis/curves.hpp"
#include "heis/hgroup.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace heis {

inline constexpr double kTolSingular = 1e-6;

enum class Orientation { Positive, Negative, Unset };

struct Domain {
    double eps_min = 0.0;
    double eps_max = 1.0;
    double s_min = 0.0;
    double s_max = 1.0;

    double eps_width() const { return eps_max - eps_min; }
    double s_width() const { return s_max - s_min; }
    bool contains(double e, double s, double slack = 0.0) const
    {
        return e >= eps_min - slack && e <= eps_max + slack && s >= s_min - slack && s <= s_max + slack;
    }
};

/// Position and Cartesian partials F_eps, F_s.
struct PatchJet {
    Point p;
    Vec3 Fe;
    Vec3 Fs;
};

/// u and its derivatives up to order two at (x, y).
struct GraphJet {
    double u = 0.0, ux = 0.0, uy = 0.0, uxx = 0.0, uxy = 0.0, uyy = 0.0;
};

/// A surface t = u(x, y), with the constant H for which u solves the graph
/// mean curvature equation.
struct GraphFunction {
    std::function<GraphJet(double, double)> eval;
    double pde_H = 0.0;
};

using ParamPoint = std::array<double, 2>;

/// A singular curve tau -> (eps, s)(tau) in parameter space, together with the
/// parameter direction pointing into the regular part used for limits.
struct SingularCurveOnPatch {
    std::string label;
    double tau_min = 0.0;
    double tau_max = 1.0;
    std::function<ParamPoint(double)> param;
    std::function<ParamPoint(double)> param_rate;
    ParamPoint regular_side{0.0, 1.0};
};

/// Optional knowledge attached by the surface constructors.
struct PatchInfo {
    std::optional<double> mean_curvature;
    std::optional<GraphFunction> graph;
    std::vector<SingularCurveOnPatch> singular_curves;
    bool closed = false;
    bool periodic_eps = false;
    bool collapsed_s_min = false;
    bool collapsed_s_max = false;
};

class ImmersedPatch {
public:
    using PointFn = std::function<Point(double, double)>;
    using JetFn = std::function<PatchJet(double, double)>;

    ImmersedPatch() = default;
    ImmersedPatch(std::string name, Domain domain, JetFn jet,
                  Orientation orientation = Orientation::Positive, PatchInfo info = {});

    /// Partials by fourth-order central differences with step h.
    static ImmersedPatch from_points(std::string name, Domain domain, PointFn f,
                                     Orientation orientation = Orientation::Positive,
                                     PatchInfo info = {}, double h = 1e-4);

    const std::string& name() const { return name_; }
    const Domain& domain() const { return domain_; }
    Orientation orientation() const { return orientation_; }
    /// +1 or -1; throws OrientationUnset.
    double orientation_sign() const;
    const PatchInfo& info() const { return info_; }
    PatchInfo& info() { return info_; }

    PatchJet jet(double e, double s) const { return jet_(e, s); }
    Point point(double e, double s) const { return jet_(e, s).p; }

    ImmersedPatch with_orientation(Orientation o) const;
    ImmersedPatch flipped() const;
    ImmersedPatch renamed(std::string name) const;
    /// Same immersion on a sub-rectangle; closing flags are cleared unless the
    /// full range is kept.
    ImmersedPatch restricted(const Domain& d) const;
    /// phi_s applied to the immersion. A known mean curvature scales by e^{-s}.
    ImmersedPatch dilated(double s) const;
    ImmersedPatch left_translated(const Point& p) const;
    /// F + t u N with N the oriented unit normal; partials by central differences.
    ImmersedPatch displaced(const std::function<double(double, double)>& u, double t,
                            double h = 1e-4) const;

private:
    std::string name_;
    Domain domain_;
    JetFn jet_;
    Orientation orientation_ = Orientation::Unset;
    PatchInfo info_;
};

/// Pointwise normal data in frame coefficients.
struct NormalData {
    Point p;
    Vec3 Fe;             ///< frame coefficients of F_eps
    Vec3 Fs;             ///< frame coefficients of F_s
    double jacobian = 0; ///< |F_eps x F_s|
    Vec3 N;
    Vec3 NH;
    double nh_norm = 0.0;
    bool singular = false;
    Vec3 nuH;            ///< zero when singular
    Vec3 Z;              ///< zero when singular
    Vec3 S;              ///< zero when singular
};

/// N = sign (F_eps x F_s)/|F_eps x F_s|, N_H, nu_H = N_H/|N_H|, Z = J(nu_H),
/// S = <N,T> nu_H - |N_H| T. On a collapsed edge the limit from the interior
/// is returned. Throws DegeneratePoint when |F_eps x F_s| < 1e-12 elsewhere.
NormalData normal_data(const ImmersedPatch& p, double e, double s,
                       double tol_singular = kTolSingular);

/// Parameter velocity (d eps, d s) whose image is the tangent vector v.
ParamPoint tangent_to_param(const NormalData& n, const Vec3& v);

/// Image of a singular curve as a horizontal curve (tangent from the partials).
HorizontalCurve singular_curve_image(const ImmersedPatch& p, const SingularCurveOnPatch& c);

} // namespace heis
