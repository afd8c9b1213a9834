#pragma once

// Algebraic and metric kernel of the first Heisenberg group H^1 = (R^3, *).
//
// Tangent vectors are stored by their coefficients in the left-invariant
// orthonormal frame {X, Y, T}:
//     X = d/dx + y d/dt,   Y = d/dy - x d/dt,   T = d/dt.
// Cartesian components only appear when converting at I/O boundaries.

#include <array>
#include <cmath>
#include <functional>

namespace heis {

/// Default step for central finite differences.
inline constexpr double kDefaultFdStep = 1e-5;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

    constexpr Vec3& operator+=(const Vec3& o)
    {
        x += o.x;
        y += o.y;
        z += o.z;
        return *this;
    }
    constexpr Vec3& operator-=(const Vec3& o)
    {
        x -= o.x;
        y -= o.y;
        z -= o.z;
        return *this;
    }
    constexpr Vec3& operator*=(double s)
    {
        x *= s;
        y *= s;
        z *= s;
        return *this;
    }
};

constexpr Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
constexpr Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
constexpr Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double s, Vec3 a) { return a *= s; }
constexpr Vec3 operator*(Vec3 a, double s) { return a *= s; }
constexpr Vec3 operator/(Vec3 a, double s) { return a *= (1.0 / s); }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
constexpr Vec3 basis(int i) { return {i == 0 ? 1.0 : 0.0, i == 1 ? 1.0 : 0.0, i == 2 ? 1.0 : 0.0}; }

/// A point (x, y, t) of H^1, identified with [z, t] for z = x + iy.
struct Point {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;

    constexpr Vec3 as_vec() const { return {x, y, t}; }
    static constexpr Point from_vec(const Vec3& v) { return {v.x, v.y, v.z}; }
};

inline constexpr Point kIdentity{0.0, 0.0, 0.0};

/// Tangent vector a X + b Y + c T at `base`.
struct FrameVector {
    Point base;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    constexpr Vec3 coeffs() const { return {a, b, c}; }
    static constexpr FrameVector at(const Point& p, const Vec3& k) { return {p, k.x, k.y, k.z}; }

    double norm() const { return std::sqrt(a * a + b * b + c * c); }
    constexpr bool is_horizontal(double tol = 0.0) const { return (c < 0 ? -c : c) <= tol; }
};

/// Metric pairing. Both vectors are assumed to share a base point.
constexpr double inner(const FrameVector& u, const FrameVector& v)
{
    return u.a * v.a + u.b * v.b + u.c * v.c;
}

// Group structure ------------------------------------------------------------

/// [z,t] * [z',t'] = [z + z', t + t' + Im(z conj(z'))].
constexpr Point group_mul(const Point& p, const Point& q)
{
    return {p.x + q.x, p.y + q.y, p.t + q.t + (p.y * q.x - p.x * q.y)};
}

constexpr Point group_inv(const Point& p) { return {-p.x, -p.y, -p.t}; }

/// L_p(q) = p * q.
constexpr Point left_translate(const Point& p, const Point& q) { return group_mul(p, q); }

/// Cartesian Jacobian of L_p applied to a Cartesian vector at q.
constexpr Vec3 left_translate_vector(const Point& p, const Vec3& v)
{
    return {v.x, v.y, v.z + p.y * v.x - p.x * v.y};
}

/// phi_s(x, y, t) = (e^s x, e^s y, e^{2s} t).
inline Point dilate(double s, const Point& p)
{
    const double e = std::exp(s);
    return {e * p.x, e * p.y, e * e * p.t};
}

/// Cartesian differential of phi_s.
inline Vec3 dilate_vector(double s, const Vec3& v)
{
    const double e = std::exp(s);
    return {e * v.x, e * v.y, e * e * v.z};
}

// Frame ----------------------------------------------------------------------

struct Frame {
    Vec3 X;
    Vec3 Y;
    Vec3 T;
};

/// Cartesian components of X, Y, T at p.
constexpr Frame frame_at(const Point& p)
{
    return {{1.0, 0.0, p.y}, {0.0, 1.0, -p.x}, {0.0, 0.0, 1.0}};
}

/// Frame coefficients of the Cartesian vector v attached at p.
constexpr Vec3 to_frame(const Point& p, const Vec3& v)
{
    return {v.x, v.y, v.z - v.x * p.y + v.y * p.x};
}

/// Cartesian components of the frame-coefficient vector k attached at p.
constexpr Vec3 to_cartesian(const Point& p, const Vec3& k)
{
    return {k.x, k.y, k.z + k.x * p.y - k.y * p.x};
}

constexpr FrameVector cartesian_to_frame(const Point& p, const Vec3& v)
{
    return FrameVector::at(p, to_frame(p, v));
}

constexpr Vec3 frame_to_cartesian(const FrameVector& v) { return to_cartesian(v.base, v.coeffs()); }

/// Rate of change of the frame coefficients of a vector field V along a curve,
/// given the curve position p, its Cartesian velocity dp, and the Cartesian
/// components v and dv of V and dV/ds.
constexpr Vec3 frame_rate(const Point& p, const Vec3& dp, const Vec3& v, const Vec3& dv)
{
    return {dv.x, dv.y, dv.z - dv.x * p.y - v.x * dp.y + dv.y * p.x + v.y * dp.x};
}

// J and the Levi-Civita connection ---------------------------------------------

/// J(X) = Y, J(Y) = -X, J(T) = 0.
constexpr Vec3 J(const Vec3& k) { return {-k.y, k.x, 0.0}; }
constexpr FrameVector J(const FrameVector& v) { return {v.base, -v.b, v.a, 0.0}; }

/// Constant covariant derivatives D_{E_i} E_j of the frame fields.
class ConnectionTable {
public:
    static constexpr Vec3 derivative(int i, int j) { return table_[i][j]; }

    /// Sum over i, j of u_i v_j D_{E_i} E_j: the part of D_u V not coming from
    /// the variation of the coefficients of V.
    static constexpr Vec3 contract(const Vec3& u, const Vec3& v)
    {
        return {-u.y * v.z - u.z * v.y, u.x * v.z + u.z * v.x, u.y * v.x - u.x * v.y};
    }

    /// [E_i, E_j] = D_{E_i} E_j - D_{E_j} E_i.
    static constexpr Vec3 bracket(int i, int j) { return table_[i][j] - table_[j][i]; }

private:
    static constexpr std::array<std::array<Vec3, 3>, 3> table_{{
        {{{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}},  // D_X X, D_X Y, D_X T
        {{{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}}},  // D_Y X, D_Y Y, D_Y T
        {{{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}},  // D_T X, D_T Y, D_T T
    }};
};

/// D_u V at a point, where `field_rate` is the derivative of the frame
/// coefficients of V in the direction u.
constexpr Vec3 covariant_derivative(const Vec3& u, const Vec3& field, const Vec3& field_rate)
{
    return field_rate + ConnectionTable::contract(u, field);
}

/// A curve sampled as position plus frame velocity.
struct CurveSample {
    Point position;
    Vec3 velocity;
};

/// D_{gamma'} V at parameter s, differentiating the coefficients of V by
/// central differences with step h. Throws StepUnderflow for |h| < 1e-12.
FrameVector cov_deriv_along(const std::function<CurveSample(double)>& curve,
                            const std::function<Vec3(double)>& field, double s,
                            double h = kDefaultFdStep);

// Curvature ----------------------------------------------------------------------

/// R(E_i, E_j) E_k = D_i D_j E_k - D_j D_i E_k - D_{[E_i, E_j]} E_k, precomputed.
Vec3 curvature_tensor(int i, int j, int k);

/// Multilinear extension of curvature_tensor to vectors at a common point.
Vec3 curvature(const Vec3& u, const Vec3& v, const Vec3& w);

// Dilation field -----------------------------------------------------------------

/// W = x X + y Y + 2t T, the generator of the dilations.
constexpr FrameVector W_field(const Point& p) { return {p, p.x, p.y, 2.0 * p.t}; }

/// Riemannian divergence of a vector field given by its frame coefficients,
/// using central differences along X, Y, T with step h:
///     div U = sum_i E_i(u_i) + sum_{i,j} u_j <D_{E_i} E_j, E_i>.
double divergence(const std::function<Vec3(const Point&)>& field, const Point& p,
                  double h = kDefaultFdStep);

} // namespace heis
