#include "heis/curvature.hpp"

#include "heis/error.hpp"
#include "heis/geodesics.hpp"
#include "heis/mesh.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

namespace heis {

namespace {

ParamPoint z_velocity(const ImmersedPatch& p, const ParamPoint& q)
{
    const NormalData n = normal_data(p, q[0], q[1]);
    if (n.singular) {
        std::ostringstream msg;
        msg << "characteristic field undefined at (" << q[0] << ", " << q[1] << ")";
        fail(ErrorCode::SingularPoint, msg.str());
    }
    return tangent_to_param(n, n.Z);
}

ParamPoint axpy(const ParamPoint& q, double a, const ParamPoint& v)
{
    return {q[0] + a * v[0], q[1] + a * v[1]};
}

} // namespace

ParamPoint characteristic_step(const ImmersedPatch& p, const ParamPoint& q, double h)
{
    const ParamPoint k1 = z_velocity(p, q);
    const ParamPoint k2 = z_velocity(p, axpy(q, 0.5 * h, k1));
    const ParamPoint k3 = z_velocity(p, axpy(q, 0.5 * h, k2));
    const ParamPoint k4 = z_velocity(p, axpy(q, h, k3));
    return {q[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            q[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1])};
}

double mean_curvature_char(const ImmersedPatch& p, double e, double s, double h_fd, double tol_singular)
{
    if (!(std::abs(h_fd) >= 1e-12)) {
        fail(ErrorCode::StepUnderflow, "finite-difference step below 1e-12");
    }
    const NormalData n0 = normal_data(p, e, s, tol_singular);
    if (!(n0.nh_norm >= 10.0 * tol_singular)) {
        std::ostringstream msg;
        msg << "|N_H| = " << n0.nh_norm << " at (" << e << ", " << s << ") is below the regular-point guard";
        fail(ErrorCode::SingularPoint, msg.str());
    }
    const ParamPoint q{e, s};
    const ParamPoint qp = characteristic_step(p, q, h_fd);
    const ParamPoint qm = characteristic_step(p, q, -h_fd);
    const Vec3 nup = normal_data(p, qp[0], qp[1], tol_singular).nuH;
    const Vec3 num = normal_data(p, qm[0], qm[1], tol_singular).nuH;
    const Vec3 rate = (nup - num) / (2.0 * h_fd);
    const Vec3 dz_nu = covariant_derivative(n0.Z, n0.nuH, rate);
    return -0.5 * dot(dz_nu, n0.Z);
}

double graph_pde_residual(const GraphJet& u, double x, double y, double H, double tol_singular)
{
    const double p = u.ux - y;
    const double q = u.uy + x;
    const double g2 = p * p + q * q;
    if (!(g2 >= tol_singular * tol_singular)) {
        fail(ErrorCode::SingularPoint, "graph point is singular");
    }
    const double lhs = q * q * u.uxx - 2.0 * q * p * u.uxy + p * p * u.uyy;
    return lhs + 2.0 * H * g2 * std::sqrt(g2);
}

double graph_pde_residual(const GraphFunction& g, double x, double y, double H, double tol_singular)
{
    return graph_pde_residual(g.eval(x, y), x, y, H, tol_singular);
}

double graph_pde_H(const GraphJet& u, double x, double y, double tol_singular)
{
    const double p = u.ux - y;
    const double q = u.uy + x;
    const double g2 = p * p + q * q;
    if (!(g2 >= tol_singular * tol_singular)) {
        fail(ErrorCode::SingularPoint, "graph point is singular");
    }
    const double lhs = q * q * u.uxx - 2.0 * q * p * u.uxy + p * p * u.uyy;
    return -lhs / (2.0 * g2 * std::sqrt(g2));
}

GraphJet graph_jet_fd(const std::function<double(double, double)>& u, double x, double y, double h)
{
    auto d1 = [h](double m2, double m1, double p1, double p2) {
        return (m2 - 8.0 * m1 + 8.0 * p1 - p2) / (12.0 * h);
    };
    auto d2 = [h](double m2, double m1, double c, double p1, double p2) {
        return (-m2 + 16.0 * m1 - 30.0 * c + 16.0 * p1 - p2) / (12.0 * h * h);
    };
    GraphJet j;
    j.u = u(x, y);
    const double xm2 = u(x - 2 * h, y), xm1 = u(x - h, y), xp1 = u(x + h, y), xp2 = u(x + 2 * h, y);
    const double ym2 = u(x, y - 2 * h), ym1 = u(x, y - h), yp1 = u(x, y + h), yp2 = u(x, y + 2 * h);
    j.ux = d1(xm2, xm1, xp1, xp2);
    j.uy = d1(ym2, ym1, yp1, yp2);
    j.uxx = d2(xm2, xm1, j.u, xp1, xp2);
    j.uyy = d2(ym2, ym1, j.u, yp1, yp2);
    auto uy_at = [&](double xx) {
        return d1(u(xx, y - 2 * h), u(xx, y - h), u(xx, y + h), u(xx, y + 2 * h));
    };
    j.uxy = d1(uy_at(x - 2 * h), uy_at(x - h), uy_at(x + h), uy_at(x + 2 * h));
    return j;
}

double orthogonality_defect(const ImmersedPatch& p, const SingularCurveOnPatch& c, double tau,
                            double tol_singular)
{
    const ParamPoint q0 = c.param(tau);
    const NormalData n0 = normal_data(p, q0[0], q0[1], tol_singular);
    if (!n0.singular) {
        std::ostringstream msg;
        msg << "|N_H| = " << n0.nh_norm << " on '" << c.label << "' at tau=" << tau;
        fail(ErrorCode::NoSingularCurve, msg.str());
    }
    const double len = std::hypot(c.regular_side[0], c.regular_side[1]);
    const ParamPoint dir{c.regular_side[0] / len, c.regular_side[1] / len};
    const double delta = 10.0 * tol_singular;
    const NormalData n1 = normal_data(p, q0[0] + delta * dir[0], q0[1] + delta * dir[1], tol_singular);
    const NormalData n2 = normal_data(p, q0[0] + 2 * delta * dir[0], q0[1] + 2 * delta * dir[1], tol_singular);
    if (n1.singular || n2.singular) {
        fail(ErrorCode::SingularPoint, "characteristic field undefined next to '" + c.label + "'");
    }
    const Vec3 z_lim = 2.0 * n1.Z - n2.Z;
    const ParamPoint rate = c.param_rate(tau);
    const PatchJet j = p.jet(q0[0], q0[1]);
    const Vec3 tangent = to_frame(j.p, rate[0] * j.Fe + rate[1] * j.Fs);
    return dot(z_lim, tangent);
}

double orthogonality_defect(const ImmersedPatch& p, std::size_t index, double tau, double tol_singular)
{
    const auto& curves = p.info().singular_curves;
    if (index >= curves.size()) {
        fail(ErrorCode::NoSingularCurve, "patch '" + p.name() + "' has no singular curve #" + std::to_string(index));
    }
    return orthogonality_defect(p, curves[index], tau, tol_singular);
}

GraphFunction bernstein_leaf(double a, double b)
{
    GraphFunction g;
    g.pde_H = 0.0;
    g.eval = [a, b](double x, double y) { return GraphJet{x * y + a * y + b, y, x + a, 0.0, 1.0, 0.0}; };
    return g;
}

GraphFunction plane_leaf()
{
    GraphFunction g;
    g.pde_H = 0.0;
    g.eval = [](double, double) { return GraphJet{}; };
    return g;
}

double calibration_divergence(const GraphFunction& leaf, const Point& q, double h, double tol_singular)
{
    auto nu = [&leaf, tol_singular](const Point& r) {
        const GraphJet j = leaf.eval(r.x, r.y);
        const double p = j.ux - r.y, qq = j.uy + r.x;
        const double len = std::hypot(p, qq);
        if (!(len >= tol_singular)) {
            fail(ErrorCode::OnSingularLocus, "point lies on the singular locus of the foliation");
        }
        return Vec3{-p / len, -qq / len, 0.0};
    };
    nu(q);
    return divergence(nu, q, h);
}

double calibration_divergence(double a, double b, const Point& q, double h, double tol_singular)
{
    return calibration_divergence(bernstein_leaf(a, b), q, h, tol_singular);
}

RulingCheck ruling_check(const ImmersedPatch& p, double e, double s, double H, double length, double step,
                         double tol_singular)
{
    RulingCheck out;
    const NormalData n0 = normal_data(p, e, s, tol_singular);
    if (!(n0.nh_norm >= 10.0 * tol_singular)) {
        fail(ErrorCode::SingularPoint, "ruling check needs a regular starting point");
    }
    const int steps = static_cast<int>(std::ceil(length / step - 1e-9));
    const double h = length / steps;
    const Domain& d = p.domain();
    ParamPoint q{e, s};
    Point prev = n0.p;
    try {
        for (int k = 1; k <= steps; ++k) {
            q = characteristic_step(p, q, h);
            const bool eps_ok = p.info().periodic_eps || (q[0] >= d.eps_min && q[0] <= d.eps_max);
            if (!eps_ok || q[1] < d.s_min || q[1] > d.s_max) return out;
            if (normal_data(p, q[0], q[1], tol_singular).nh_norm < 10.0 * tol_singular) return out;
            const Point a = p.point(q[0], q[1]);
            // The trace has unit speed until it stalls against a singular curve.
            if (norm(to_frame(prev, a.as_vec() - prev.as_vec())) < (1.0 - 1e-4) * h) return out;
            prev = a;
            const Point b = geodesic_point(n0.p, n0.Z.x, n0.Z.y, H, k * h);
            out.max_deviation = std::max(out.max_deviation, norm(a.as_vec() - b.as_vec()));
            out.traced = k * h;
        }
    } catch (const GeometryError&) {
        return out;
    }
    out.completed = true;
    return out;
}

std::vector<CurvatureReport> curvature_report(const ImmersedPatch& p, int n_eps, int n_s)
{
    if (n_eps < 1 || n_s < 1) {
        fail(ErrorCode::InvalidArgument, "curvature report needs a positive grid");
    }
    const Domain& d = p.domain();
    const double ref = p.info().mean_curvature.value_or(std::numeric_limits<double>::quiet_NaN());
    std::vector<CurvatureReport> rows;
    for (int i = 0; i < n_eps; ++i) {
        const double e = d.eps_min + d.eps_width() * (i + 0.5) / n_eps;
        for (int j = 0; j < n_s; ++j) {
            const double s = d.s_min + d.s_width() * (j + 0.5) / n_s;
            try {
                const double H = mean_curvature_char(p, e, s);
                rows.push_back({e, s, H, std::isnan(ref) ? ref : std::abs(H - ref), "characteristic"});
            } catch (const GeometryError&) {
            }
            if (p.info().graph) {
                const Point x = p.point(e, s);
                try {
                    const GraphJet u = p.info().graph->eval(x.x, x.y);
                    const double H = graph_pde_H(u, x.x, x.y);
                    rows.push_back({e, s, H, std::abs(graph_pde_residual(u, x.x, x.y, p.info().graph->pde_H)),
                                    "graph_pde"});
                } catch (const GeometryError&) {
                }
            }
        }
    }
    return rows;
}

void write_curvature_csv(std::ostream& out, const std::vector<CurvatureReport>& rows)
{
    out << "eps,s,H_est,residual,method\n";
    for (const CurvatureReport& r : rows) {
        out << format_double(r.eps) << ',' << format_double(r.s) << ',' << format_double(r.H_est) << ','
            << format_double(r.residual) << ',' << r.method << '\n';
    }
}

} // namespace heis
