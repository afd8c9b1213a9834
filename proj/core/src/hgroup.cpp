#include "heis/hgroup.hpp"

#include "heis/error.hpp"

#include <cmath>

namespace heis {

namespace {

using Table = std::array<std::array<std::array<Vec3, 3>, 3>, 3>;

Table build_curvature_table()
{
    Table r{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            for (int k = 0; k < 3; ++k) {
                const Vec3 ei = basis(i), ej = basis(j), ek = basis(k);
                const Vec3 dj_k = ConnectionTable::derivative(j, k);
                const Vec3 di_k = ConnectionTable::derivative(i, k);
                r[i][j][k] = ConnectionTable::contract(ei, dj_k) - ConnectionTable::contract(ej, di_k)
                           - ConnectionTable::contract(ConnectionTable::bracket(i, j), ek);
            }
        }
    }
    return r;
}

const Table& curvature_table()
{
    static const Table table = build_curvature_table();
    return table;
}

void check_step(double h)
{
    if (!(std::abs(h) >= 1e-12)) {
        fail(ErrorCode::StepUnderflow, "finite-difference step below 1e-12");
    }
}

} // namespace

FrameVector cov_deriv_along(const std::function<CurveSample(double)>& curve,
                            const std::function<Vec3(double)>& field, double s, double h)
{
    check_step(h);
    const CurveSample c = curve(s);
    const Vec3 rate = (field(s + h) - field(s - h)) / (2.0 * h);
    return FrameVector::at(c.position, covariant_derivative(c.velocity, field(s), rate));
}

Vec3 curvature_tensor(int i, int j, int k)
{
    if (i < 0 || i > 2 || j < 0 || j > 2 || k < 0 || k > 2) {
        fail(ErrorCode::InvalidArgument, "frame index out of range");
    }
    return curvature_table()[i][j][k];
}

Vec3 curvature(const Vec3& u, const Vec3& v, const Vec3& w)
{
    const Table& r = curvature_table();
    Vec3 out;
    for (int i = 0; i < 3; ++i) {
        if (u[i] == 0.0) continue;
        for (int j = 0; j < 3; ++j) {
            if (v[j] == 0.0) continue;
            for (int k = 0; k < 3; ++k) {
                if (w[k] == 0.0) continue;
                out += (u[i] * v[j] * w[k]) * r[i][j][k];
            }
        }
    }
    return out;
}

double divergence(const std::function<Vec3(const Point&)>& field, const Point& p, double h)
{
    check_step(h);
    const Frame f = frame_at(p);
    const std::array<Vec3, 3> dirs{f.X, f.Y, f.T};
    const Vec3 u = field(p);
    double div = 0.0;
    for (int i = 0; i < 3; ++i) {
        const Point plus = Point::from_vec(p.as_vec() + h * dirs[i]);
        const Point minus = Point::from_vec(p.as_vec() - h * dirs[i]);
        div += (field(plus)[i] - field(minus)[i]) / (2.0 * h);
        for (int j = 0; j < 3; ++j) {
            div += u[j] * ConnectionTable::derivative(i, j)[i];
        }
    }
    return div;
}

} // namespace heis
