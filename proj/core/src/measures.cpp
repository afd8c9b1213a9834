#include "heis/measures.hpp"

#include "heis/curvature.hpp"
#include "heis/error.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include "json.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace heis {

namespace {

struct Rule {
    std::array<double, 8> x{};
    std::array<double, 8> w{};
};

const Rule& gauss8()
{
    static const Rule rule = [] {
        using G = boost::math::quadrature::gauss<double, 8>;
        Rule r;
        const auto& a = G::abscissa();
        const auto& w = G::weights();
        for (std::size_t i = 0; i < a.size(); ++i) {
            r.x[i] = -a[i];
            r.w[i] = w[i];
            r.x[7 - i] = a[i];
            r.w[7 - i] = w[i];
        }
        return r;
    }();
    return rule;
}

double pairwise_sum(const double* v, std::size_t n)
{
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum(v, h) + pairwise_sum(v + h, n - h);
}

double rule_value(const ImmersedPatch& p, int n_eps, int n_s,
                  const std::function<double(const NormalData&, double, double)>& density)
{
    const Domain& d = p.domain();
    if (d.eps_width() == 0.0 || d.s_width() == 0.0) return 0.0;
    const Rule& g = gauss8();
    const double he = d.eps_width() / n_eps, hs = d.s_width() / n_s;
    std::vector<double> cells(static_cast<std::size_t>(n_eps) * n_s);
    std::array<double, 64> local{};
    for (int i = 0; i < n_eps; ++i) {
        const double e0 = d.eps_min + he * i;
        for (int j = 0; j < n_s; ++j) {
            const double s0 = d.s_min + hs * j;
            for (int a = 0; a < 8; ++a) {
                const double e = e0 + 0.5 * he * (1.0 + g.x[a]);
                for (int b = 0; b < 8; ++b) {
                    const double s = s0 + 0.5 * hs * (1.0 + g.x[b]);
                    const NormalData n = normal_data(p, e, s);
                    const double f = density(n, e, s);
                    if (!std::isfinite(f)) {
                        fail(ErrorCode::NonFinite, "non-finite integrand on " + p.name());
                    }
                    local[a * 8 + b] = g.w[a] * g.w[b] * f;
                }
            }
            cells[static_cast<std::size_t>(i) * n_s + j] = 0.25 * he * hs * pairwise_sum(local.data(), 64);
        }
    }
    return pairwise_sum(cells.data(), cells.size());
}

double area_density(const NormalData& n, double, double) { return n.nh_norm * n.jacobian; }

double volume_density(const NormalData& n, double, double)
{
    const Vec3 w = W_field(n.p).coeffs();
    return -0.25 * dot(w, n.N) * n.jacobian;
}

void require_volume(const ImmersedPatch& p, bool allow_open)
{
    p.orientation_sign();
    if (!allow_open && !p.info().closed) {
        fail(ErrorCode::NotApplicable, "enclosed volume needs a closed surface; '" + p.name() + "' is open");
    }
}

} // namespace

QuadratureResult integrate(const ImmersedPatch& p, int n_eps, int n_s,
                           const std::function<double(const NormalData&, double, double)>& density)
{
    if (n_eps < 1 || n_s < 1) {
        fail(ErrorCode::InvalidArgument, "quadrature needs a positive grid");
    }
    QuadratureResult r;
    r.value = rule_value(p, n_eps, n_s, density);
    r.cells = static_cast<long>(n_eps) * n_s;
    if (n_eps >= 2 && n_s >= 2) {
        const double coarse = rule_value(p, n_eps / 2, n_s / 2, density);
        r.error_estimate = std::abs(r.value - coarse);
    }
    r.error_estimate += 1e-13 * std::abs(r.value);
    return r;
}

QuadratureResult area(const ImmersedPatch& p, int n) { return area(p, n, n); }

QuadratureResult area(const ImmersedPatch& p, int n_eps, int n_s)
{
    return integrate(p, n_eps, n_s, area_density);
}

QuadratureResult riemannian_area(const ImmersedPatch& p, int n)
{
    return integrate(p, n, n, [](const NormalData& d, double, double) { return d.jacobian; });
}

QuadratureResult volume_enclosed(const ImmersedPatch& p, int n, bool allow_open)
{
    return volume_enclosed(p, n, n, allow_open);
}

QuadratureResult volume_enclosed(const ImmersedPatch& p, int n_eps, int n_s, bool allow_open)
{
    require_volume(p, allow_open);
    return integrate(p, n_eps, n_s, volume_density);
}

double minkowski_check(const ImmersedPatch& p, double H, int n)
{
    require_volume(p, false);
    const double A = area(p, n).value;
    const double V = volume_enclosed(p, n).value;
    return std::abs(3.0 * A - 8.0 * H * V) / (3.0 * A);
}

DilationRatios dilation_homogeneity(const ImmersedPatch& p, double s, int n)
{
    const ImmersedPatch q = p.dilated(s);
    DilationRatios r;
    r.ratio_A = area(q, n).value / area(p, n).value;
    r.ratio_V = volume_enclosed(q, n, true).value / volume_enclosed(p, n, true).value;
    return r;
}

FirstVariation first_variation_check(const ImmersedPatch& p, double H,
                                     const std::function<double(double, double)>& u, double dt, int n)
{
    if (!(dt >= 1e-7)) {
        fail(ErrorCode::StepTooSmall, "first-variation step must be at least 1e-7");
    }
    p.orientation_sign();
    const ImmersedPatch plus = p.displaced(u, dt);
    const ImmersedPatch minus = p.displaced(u, -dt);
    FirstVariation fv;
    fv.A_prime = (rule_value(plus, n, n, area_density) - rule_value(minus, n, n, area_density)) / (2.0 * dt);
    fv.V_prime = (rule_value(plus, n, n, volume_density) - rule_value(minus, n, n, volume_density)) / (2.0 * dt);
    fv.V_prime_direct = -rule_value(p, n, n, [&u](const NormalData& d, double e, double s) {
        return u(e, s) * d.jacobian;
    });
    fv.defect = std::abs(fv.A_prime - 2.0 * H * fv.V_prime);
    return fv;
}

double iso_ratio(const ImmersedPatch& p, int n)
{
    const double A = area(p, n).value;
    const double V = volume_enclosed(p, n).value;
    return A * A * A * A / (V * V * V);
}

MeasuresReport measures_report(const ImmersedPatch& p, double lambda, int n)
{
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    MeasuresReport r;
    r.surface = p.name();
    r.lambda = lambda;
    const QuadratureResult A = area(p, n);
    r.A = A.value;
    r.A_err = A.error_estimate;

    constexpr int kProbe = 8;
    double sum = 0.0;
    int count = 0;
    for (const CurvatureReport& row : curvature_report(p, kProbe, kProbe)) {
        if (row.method != "characteristic") continue;
        sum += row.H_est;
        ++count;
    }
    r.H = count > 0 ? sum / count : nan;

    if (p.info().closed) {
        const QuadratureResult V = volume_enclosed(p, n);
        r.V = V.value;
        r.V_err = V.error_estimate;
        r.minkowski_defect = std::abs(3.0 * r.A - 8.0 * r.H * r.V) / (3.0 * r.A);
        r.iso_ratio = r.A * r.A * r.A * r.A / (r.V * r.V * r.V);
    } else {
        r.V = r.V_err = r.minkowski_defect = r.iso_ratio = nan;
    }
    return r;
}

std::string to_json(const MeasuresReport& r)
{
    auto num = [](double v) { return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr); };
    nlohmann::ordered_json j;
    j["surface"] = r.surface;
    j["lambda"] = num(r.lambda);
    j["A"] = num(r.A);
    j["A_err"] = num(r.A_err);
    j["V"] = num(r.V);
    j["V_err"] = num(r.V_err);
    j["H"] = num(r.H);
    j["minkowski_defect"] = num(r.minkowski_defect);
    j["iso_ratio"] = num(r.iso_ratio);
    return j.dump(2) + "\n";
}

} // namespace heis
