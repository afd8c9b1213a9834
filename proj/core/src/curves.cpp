#include "heis/curves.hpp"

#include "heis/error.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>

namespace heis {

HorizontalCurve::HorizontalCurve(double eps_min, double eps_max, JetFn jet, std::string name)
    : eps_min_(eps_min), eps_max_(eps_max), jet_(std::move(jet)), name_(std::move(name))
{
    if (!(eps_max >= eps_min)) {
        fail(ErrorCode::InvalidArgument, "curve domain is empty");
    }
}

FrameVector HorizontalCurve::velocity(double eps) const
{
    const CartesianJet j = jet_(eps);
    return cartesian_to_frame(j.p, j.d1);
}

double HorizontalCurve::planar_curvature(double eps) const
{
    const CartesianJet j = jet_(eps);
    return j.d1.x * j.d2.y - j.d2.x * j.d1.y;
}

HorizontalCurve HorizontalCurve::left_translated(const Point& p) const
{
    JetFn base = jet_;
    return HorizontalCurve(eps_min_, eps_max_, [base, p](double e) {
        const CartesianJet j = base(e);
        return CartesianJet{left_translate(p, j.p), left_translate_vector(p, j.d1),
                            left_translate_vector(p, j.d2)};
    }, name_);
}

HorizontalCurve::Defects HorizontalCurve::defects(int samples) const
{
    Defects d;
    for (int i = 0; i < samples; ++i) {
        const double e = eps_min_ + (eps_max_ - eps_min_) * i / std::max(1, samples - 1);
        const FrameVector v = velocity(e);
        d.horizontality = std::max(d.horizontality, std::abs(v.c));
        d.arclength = std::max(d.arclength, std::abs(v.norm() - 1.0));
    }
    return d;
}

namespace {

double simpson_step(const std::function<double(double)>& f, double a, double b, double fa,
                    double fm, double fb, double whole, double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
         + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

// Cumulative integral of f on a uniform knot grid, evaluated anywhere by
// finishing the last partial interval with adaptive Simpson.
class CumulativeIntegral {
public:
    CumulativeIntegral(std::function<double(double)> f, double a, double b, int knots, double tol)
        : f_(std::move(f)), a_(a), b_(b), tol_(tol)
    {
        const int n = std::max(1, knots);
        grid_.resize(n + 1);
        values_.assign(n + 1, 0.0);
        for (int i = 0; i <= n; ++i) grid_[i] = a + (b - a) * i / n;
        grid_[n] = b;
        for (int i = 0; i < n; ++i) {
            values_[i + 1] = values_[i] + adaptive_simpson(f_, grid_[i], grid_[i + 1], tol_ / n);
        }
    }

    double operator()(double e) const
    {
        if (b_ == a_) return 0.0;
        const auto it = std::upper_bound(grid_.begin(), grid_.end(), e);
        std::size_t k = it == grid_.begin() ? 0 : static_cast<std::size_t>(it - grid_.begin()) - 1;
        k = std::min(k, grid_.size() - 2);
        return values_[k] + adaptive_simpson(f_, grid_[k], e, tol_ / (grid_.size() - 1));
    }

    const std::vector<double>& grid() const { return grid_; }
    const std::vector<double>& values() const { return values_; }

private:
    std::function<double(double)> f_;
    double a_, b_, tol_;
    std::vector<double> grid_;
    std::vector<double> values_;
};

constexpr int kCumulativeKnots = 256;

} // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth)
{
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

HorizontalCurve horizontal_lift(const PlanarCurve& planar, double t0, double tol_arclength)
{
    const double a = planar.eps_min, b = planar.eps_max;
    for (int i = 0; i < kArclengthGrid; ++i) {
        const double e = a + (b - a) * i / (kArclengthGrid - 1);
        const double v = planar.eval(e).speed();
        if (!(std::abs(v - 1.0) <= tol_arclength)) {
            std::ostringstream msg;
            msg << "speed " << v << " at eps=" << e << " is not 1";
            fail(ErrorCode::NotArclength, msg.str());
        }
    }
    auto eval = planar.eval;
    auto integrand = [eval](double e) {
        const PlanarJet j = eval(e);
        return j.dx * j.y - j.x * j.dy;
    };
    auto cumulative = std::make_shared<CumulativeIntegral>(integrand, a, b, kCumulativeKnots, 1e-10);
    return HorizontalCurve(a, b, [eval, cumulative, t0](double e) {
        const PlanarJet j = eval(e);
        return CartesianJet{{j.x, j.y, t0 + (*cumulative)(e)},
                            {j.dx, j.dy, j.dx * j.y - j.x * j.dy},
                            {j.ddx, j.ddy, j.ddx * j.y - j.x * j.ddy}};
    }, "lift");
}

double planar_curvature(const HorizontalCurve& c, double eps) { return c.planar_curvature(eps); }

PlanarCurve reparameterize_arclength(const PlanarCurve& planar, int grid)
{
    const double a = planar.eps_min, b = planar.eps_max;
    for (int i = 0; i <= grid; ++i) {
        const double e = a + (b - a) * i / grid;
        if (!(planar.eval(e).speed() > 1e-12)) {
            fail(ErrorCode::DegenerateCurve, "speed vanishes on the reparameterization grid");
        }
    }
    auto eval = planar.eval;
    auto length = std::make_shared<CumulativeIntegral>(
        [eval](double e) { return eval(e).speed(); }, a, b, grid, 1e-12);
    const double total = length->values().back();

    auto invert = [eval, length](double sigma) {
        const auto& g = length->grid();
        const auto& L = length->values();
        const auto it = std::upper_bound(L.begin(), L.end(), sigma);
        std::size_t k = it == L.begin() ? 0 : static_cast<std::size_t>(it - L.begin()) - 1;
        k = std::min(k, L.size() - 2);
        const double lo = g[k], hi = g[k + 1];
        double e = lo + (hi - lo) * (sigma - L[k]) / (L[k + 1] - L[k]);
        for (int it2 = 0; it2 < 8; ++it2) {
            const double step = ((*length)(e)-sigma) / eval(e).speed();
            e = std::clamp(e - step, lo, hi);
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(e))) break;
        }
        return e;
    };

    PlanarCurve out;
    out.eps_min = 0.0;
    out.eps_max = total;
    out.eval = [eval, invert](double sigma) {
        const PlanarJet j = eval(invert(sigma));
        const double v = j.speed();
        const double tx = j.dx / v, ty = j.dy / v;
        const double along = tx * j.ddx + ty * j.ddy;
        PlanarJet r;
        r.x = j.x;
        r.y = j.y;
        r.dx = tx;
        r.dy = ty;
        r.ddx = (j.ddx - tx * along) / (v * v);
        r.ddy = (j.ddy - ty * along) / (v * v);
        return r;
    };
    return out;
}

HorizontalCurve geodesic_as_curve(const GeodesicSpec& g, double eps_min, double eps_max)
{
    return HorizontalCurve(eps_min, eps_max, [g](double e) { return geodesic_jet(g, e); },
                           "geodesic");
}

HorizontalCurve line_curve(double eps_min, double eps_max)
{
    return HorizontalCurve(eps_min, eps_max, [](double e) {
        return CartesianJet{{e, 0.0, 0.0}, {1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}};
    }, "line");
}

HorizontalCurve helix_curve(double r, double eps_min, double eps_max)
{
    if (!(r > 0.0)) {
        fail(ErrorCode::InvalidArgument, "helix radius must be positive");
    }
    const GeodesicSpec g{kIdentity, 0.0, r};
    return HorizontalCurve(eps_min, eps_max, [g](double e) { return geodesic_jet(g, e); },
                           "helix");
}

PlanarCurve planar_line(double eps_min, double eps_max)
{
    return {eps_min, eps_max, [](double e) { return PlanarJet{e, 0.0, 1.0, 0.0, 0.0, 0.0}; }};
}

PlanarCurve planar_helix_projection(double r, double eps_min, double eps_max)
{
    return {eps_min, eps_max, [r](double e) {
                const double k = 2.0 * r;
                const double s = std::sin(k * e), c = std::cos(k * e);
                return PlanarJet{s / k, (c - 1.0) / k, c, -s, -k * s, -k * c};
            }};
}

namespace {

// Second derivatives of the natural cubic spline through (t_i, v_i).
std::vector<double> spline_moments(const std::vector<double>& t, const std::vector<double>& v)
{
    const std::size_t n = t.size();
    std::vector<double> m(n, 0.0);
    if (n < 3) return m;
    std::vector<double> diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h0 = t[i] - t[i - 1], h1 = t[i + 1] - t[i];
        diag[i] = 2.0 * (h0 + h1);
        upper[i] = h1;
        rhs[i] = 6.0 * ((v[i + 1] - v[i]) / h1 - (v[i] - v[i - 1]) / h0);
        if (i > 1) {
            const double w = h0 / diag[i - 1];
            diag[i] -= w * upper[i - 1];
            rhs[i] -= w * rhs[i - 1];
        }
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
        m[i] = (rhs[i] - upper[i] * m[i + 1]) / diag[i];
        if (i == 1) break;
    }
    return m;
}

struct Spline {
    std::vector<double> t, x, y, mx, my;

    PlanarJet operator()(double e) const
    {
        const auto it = std::upper_bound(t.begin(), t.end(), e);
        std::size_t k = it == t.begin() ? 0 : static_cast<std::size_t>(it - t.begin()) - 1;
        k = std::min(k, t.size() - 2);
        const double h = t[k + 1] - t[k];
        const double A = (t[k + 1] - e) / h, B = (e - t[k]) / h;
        auto value = [&](const std::vector<double>& v, const std::vector<double>& m) {
            return A * v[k] + B * v[k + 1] + ((A * A * A - A) * m[k] + (B * B * B - B) * m[k + 1]) * h * h / 6.0;
        };
        auto first = [&](const std::vector<double>& v, const std::vector<double>& m) {
            return (v[k + 1] - v[k]) / h - (3.0 * A * A - 1.0) / 6.0 * h * m[k]
                 + (3.0 * B * B - 1.0) / 6.0 * h * m[k + 1];
        };
        auto second = [&](const std::vector<double>& m) { return A * m[k] + B * m[k + 1]; };
        return {value(x, mx), value(y, my), first(x, mx), first(y, my), second(mx), second(my)};
    }
};

} // namespace

PlanarCurve spline_curve(const std::vector<double>& eps, const std::vector<double>& x,
                         const std::vector<double>& y)
{
    if (eps.size() < 2 || eps.size() != x.size() || eps.size() != y.size()) {
        fail(ErrorCode::InvalidArgument, "spline needs at least two samples of eps,x,y");
    }
    for (std::size_t i = 1; i < eps.size(); ++i) {
        if (!(eps[i] > eps[i - 1])) {
            fail(ErrorCode::InvalidArgument, "eps must be strictly increasing");
        }
    }
    auto s = std::make_shared<Spline>(Spline{eps, x, y, spline_moments(eps, x), spline_moments(eps, y)});
    return {eps.front(), eps.back(), [s](double e) { return (*s)(e); }};
}

PlanarCurve load_curve_csv(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        fail(ErrorCode::ParseError, "cannot open curve file " + path);
    }
    std::string line;
    if (!std::getline(in, line)) {
        fail(ErrorCode::ParseError, "empty curve file " + path);
    }
    std::vector<std::string> header;
    {
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cell.erase(std::remove_if(cell.begin(), cell.end(), ::isspace), cell.end());
            header.push_back(cell);
        }
    }
    if (header != std::vector<std::string>{"eps", "x", "y"}) {
        fail(ErrorCode::ParseError, "curve CSV header must be eps,x,y");
    }
    std::vector<double> e, x, y;
    int row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::stringstream ss(line);
        std::string cell;
        double v[3];
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(ss, cell, ',')) {
                fail(ErrorCode::ParseError, "row " + std::to_string(row) + " has fewer than 3 columns");
            }
            try {
                std::size_t used = 0;
                v[i] = std::stod(cell, &used);
                if (cell.find_first_not_of(" \t\r", used) != std::string::npos) throw std::invalid_argument(cell);
            } catch (const std::exception&) {
                fail(ErrorCode::ParseError, "row " + std::to_string(row) + ": bad number '" + cell + "'");
            }
        }
        e.push_back(v[0]);
        x.push_back(v[1]);
        y.push_back(v[2]);
    }
    try {
        return spline_curve(e, x, y);
    } catch (const GeometryError& err) {
        fail(ErrorCode::ParseError, path + ": " + err.what());
    }
}

} // namespace heis
