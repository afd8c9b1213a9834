#include "heis/patch.hpp"

#include "heis/error.hpp"

#include <cmath>
#include <sstream>

namespace heis {

namespace {

PatchJet fd_jet(const ImmersedPatch::PointFn& f, double e, double s, double h)
{
    auto d4 = [](const Point& m2, const Point& m1, const Point& p1, const Point& p2, double step) {
        return (m2.as_vec() - 8.0 * m1.as_vec() + 8.0 * p1.as_vec() - p2.as_vec()) / (12.0 * step);
    };
    PatchJet j;
    j.p = f(e, s);
    j.Fe = d4(f(e - 2 * h, s), f(e - h, s), f(e + h, s), f(e + 2 * h, s), h);
    j.Fs = d4(f(e, s - 2 * h), f(e, s - h), f(e, s + h), f(e, s + 2 * h), h);
    return j;
}

} // namespace

ImmersedPatch::ImmersedPatch(std::string name, Domain domain, JetFn jet, Orientation orientation,
                             PatchInfo info)
    : name_(std::move(name)), domain_(domain), jet_(std::move(jet)), orientation_(orientation),
      info_(std::move(info))
{
    if (!(domain_.eps_max >= domain_.eps_min) || !(domain_.s_max >= domain_.s_min)) {
        fail(ErrorCode::InvalidArgument, "patch domain is empty");
    }
}

ImmersedPatch ImmersedPatch::from_points(std::string name, Domain domain, PointFn f,
                                         Orientation orientation, PatchInfo info, double h)
{
    if (!(std::abs(h) >= 1e-12)) {
        fail(ErrorCode::StepUnderflow, "finite-difference step below 1e-12");
    }
    return ImmersedPatch(std::move(name), domain,
                         [f = std::move(f), h](double e, double s) { return fd_jet(f, e, s, h); },
                         orientation, std::move(info));
}

double ImmersedPatch::orientation_sign() const
{
    switch (orientation_) {
    case Orientation::Positive: return 1.0;
    case Orientation::Negative: return -1.0;
    case Orientation::Unset: break;
    }
    fail(ErrorCode::OrientationUnset, "patch '" + name_ + "' has no orientation");
}

ImmersedPatch ImmersedPatch::with_orientation(Orientation o) const
{
    ImmersedPatch out = *this;
    if (out.info_.mean_curvature && o != orientation_ && o != Orientation::Unset
        && orientation_ != Orientation::Unset) {
        out.info_.mean_curvature = -*out.info_.mean_curvature;
    }
    out.orientation_ = o;
    return out;
}

ImmersedPatch ImmersedPatch::flipped() const
{
    switch (orientation_) {
    case Orientation::Positive: return with_orientation(Orientation::Negative);
    case Orientation::Negative: return with_orientation(Orientation::Positive);
    case Orientation::Unset: break;
    }
    return *this;
}

ImmersedPatch ImmersedPatch::renamed(std::string name) const
{
    ImmersedPatch out = *this;
    out.name_ = std::move(name);
    return out;
}

ImmersedPatch ImmersedPatch::restricted(const Domain& d) const
{
    ImmersedPatch out = *this;
    out.domain_ = d;
    const bool full_eps = d.eps_min == domain_.eps_min && d.eps_max == domain_.eps_max;
    out.info_.periodic_eps = info_.periodic_eps && full_eps;
    out.info_.collapsed_s_min = info_.collapsed_s_min && d.s_min == domain_.s_min;
    out.info_.collapsed_s_max = info_.collapsed_s_max && d.s_max == domain_.s_max;
    out.info_.closed = info_.closed && full_eps && d.s_min == domain_.s_min && d.s_max == domain_.s_max;
    return out;
}

ImmersedPatch ImmersedPatch::dilated(double s) const
{
    ImmersedPatch out = *this;
    JetFn base = jet_;
    out.jet_ = [base, s](double e, double v) {
        const PatchJet j = base(e, v);
        return PatchJet{dilate(s, j.p), dilate_vector(s, j.Fe), dilate_vector(s, j.Fs)};
    };
    if (out.info_.mean_curvature) *out.info_.mean_curvature *= std::exp(-s);
    out.info_.graph.reset();
    return out;
}

ImmersedPatch ImmersedPatch::left_translated(const Point& q) const
{
    ImmersedPatch out = *this;
    JetFn base = jet_;
    out.jet_ = [base, q](double e, double v) {
        const PatchJet j = base(e, v);
        return PatchJet{left_translate(q, j.p), left_translate_vector(q, j.Fe),
                        left_translate_vector(q, j.Fs)};
    };
    out.info_.graph.reset();
    return out;
}

ImmersedPatch ImmersedPatch::displaced(const std::function<double(double, double)>& u, double t,
                                       double h) const
{
    const ImmersedPatch self = *this;
    PointFn moved = [self, u, t](double e, double s) {
        const NormalData n = normal_data(self, e, s);
        const Vec3 shift = t * u(e, s) * to_cartesian(n.p, n.N);
        return Point::from_vec(n.p.as_vec() + shift);
    };
    PatchInfo info = info_;
    info.mean_curvature.reset();
    info.graph.reset();
    info.singular_curves.clear();
    return from_points(name_ + "+displaced", domain_, std::move(moved), orientation_, info, h);
}

namespace {

NormalData normal_from_jet(const PatchJet& j, double sign, double tol_singular)
{
    NormalData n;
    n.p = j.p;
    n.Fe = to_frame(j.p, j.Fe);
    n.Fs = to_frame(j.p, j.Fs);
    const Vec3 c = cross(n.Fe, n.Fs);
    n.jacobian = norm(c);
    if (!(n.jacobian >= 1e-12)) return n;
    n.N = (sign / n.jacobian) * c;
    n.NH = {n.N.x, n.N.y, 0.0};
    n.nh_norm = std::hypot(n.N.x, n.N.y);
    n.singular = !(n.nh_norm >= tol_singular);
    if (!n.singular) {
        n.nuH = n.NH / n.nh_norm;
        n.Z = J(n.nuH);
        n.S = n.N.z * n.nuH - n.nh_norm * basis(2);
    }
    return n;
}

} // namespace

NormalData normal_data(const ImmersedPatch& p, double e, double s, double tol_singular)
{
    const double sign = p.orientation_sign();
    const PatchJet j = p.jet(e, s);
    if (!std::isfinite(j.p.x) || !std::isfinite(j.p.y) || !std::isfinite(j.p.t)) {
        fail(ErrorCode::NonFinite, "immersion is not finite at (" + std::to_string(e) + ", "
                                       + std::to_string(s) + ")");
    }
    NormalData n = normal_from_jet(j, sign, tol_singular);
    if (n.jacobian >= 1e-12) return n;

    const Domain& d = p.domain();
    const double edge = 1e-9 * std::max(1.0, d.s_width());
    const bool at_min = p.info().collapsed_s_min && std::abs(s - d.s_min) <= edge;
    const bool at_max = p.info().collapsed_s_max && std::abs(s - d.s_max) <= edge;
    if (at_min || at_max) {
        const double inward = at_min ? d.s_min + 1e-7 * d.s_width() : d.s_max - 1e-7 * d.s_width();
        NormalData lim = normal_from_jet(p.jet(e, inward), sign, tol_singular);
        if (lim.jacobian >= 1e-12) {
            lim.p = j.p;
            lim.Fe = to_frame(j.p, j.Fe);
            lim.Fs = to_frame(j.p, j.Fs);
            lim.jacobian = 0.0;
            return lim;
        }
    }
    std::ostringstream msg;
    msg << "|F_eps x F_s| = " << n.jacobian << " at (" << e << ", " << s << ") on " << p.name();
    fail(ErrorCode::DegeneratePoint, msg.str());
}

ParamPoint tangent_to_param(const NormalData& n, const Vec3& v)
{
    const Vec3 c = cross(n.Fe, n.Fs);
    const double c2 = dot(c, c);
    return {dot(cross(v, n.Fs), c) / c2, dot(cross(n.Fe, v), c) / c2};
}

HorizontalCurve singular_curve_image(const ImmersedPatch& p, const SingularCurveOnPatch& c)
{
    const ImmersedPatch patch = p;
    const SingularCurveOnPatch curve = c;
    constexpr double h = 1e-5;
    auto velocity = [patch, curve](double tau) {
        const ParamPoint q = curve.param(tau);
        const ParamPoint dq = curve.param_rate(tau);
        const PatchJet j = patch.jet(q[0], q[1]);
        return std::pair<Point, Vec3>{j.p, dq[0] * j.Fe + dq[1] * j.Fs};
    };
    return HorizontalCurve(c.tau_min, c.tau_max, [velocity](double tau) {
        const auto [p0, v0] = velocity(tau);
        const Vec3 acc = (velocity(tau + h).second - velocity(tau - h).second) / (2.0 * h);
        return CartesianJet{p0, v0, acc};
    }, c.label);
}

} // namespace heis
