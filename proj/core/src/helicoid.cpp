#include "heis/helicoid.hpp"

#include "heis/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace heis {

namespace {

constexpr double kPi = std::numbers::pi;

double sgn(double v) { return (v > 0.0) - (v < 0.0); }

} // namespace

double helicoid_c1(double lambda, double r)
{
    const double s = cut_time(-2.0 * r, lambda);
    return s / (2.0 * lambda) + (sgn(lambda) * kPi - 2.0 * lambda * s) / (4.0 * r * r)
         - (r * r + lambda * lambda) * std::sin(2.0 * lambda * s) / (4.0 * lambda * lambda * r * r);
}

double helicoid_c2(double lambda, double r)
{
    return sgn(lambda) * kPi / (2.0 * lambda * lambda) - helicoid_c1(lambda, r);
}

double helicoid_c1k(double lambda, double r, int k)
{
    return k * helicoid_c1(lambda, r) - sgn(lambda) * (k / 2) * kPi / (2.0 * lambda * lambda);
}

double helicoid_c2k(double lambda, double r, int k)
{
    return sgn(lambda) * kPi / (2.0 * lambda * lambda) - helicoid_c1k(lambda, r, k);
}

double helix_pitch(double r) { return kPi / (2.0 * r * r); }

double reduce_mod(double v, double pitch)
{
    double m = std::fmod(v, pitch);
    if (m > 0.5 * pitch) m -= pitch;
    if (m <= -0.5 * pitch) m += pitch;
    return m;
}

HelixOffset helix_offset(double r, const Point& p)
{
    const double k = 2.0 * r;
    const double phi = std::atan2(k * p.x, k * p.y + 1.0);
    const double e = phi / k;
    const double t_helix = (e - std::sin(k * e) / k) / k;
    HelixOffset out;
    out.offset = reduce_mod(p.t - t_helix, helix_pitch(r));
    out.radial_error = std::abs(std::hypot(p.x, p.y + 1.0 / k) - 1.0 / k);
    return out;
}

Helicoid helicoid_L(double lambda, double r, int k_max, double half_length)
{
    if (lambda == 0.0 || !std::isfinite(lambda)) {
        fail(ErrorCode::InvalidArgument, "helicoid requires lambda != 0");
    }
    if (!(r > 0.0)) {
        fail(ErrorCode::InvalidArgument, "helix radius must be positive");
    }
    if (k_max < 1) {
        fail(ErrorCode::InvalidArgument, "k_max must be at least 1");
    }
    Helicoid out;
    out.lambda = lambda;
    out.r = r;
    out.c1 = helicoid_c1(lambda, r);
    out.c2 = helicoid_c2(lambda, r);
    out.pitch = helix_pitch(r);

    struct Branch {
        GeodesicSpec source;
        Side side;
        double curvature;
    };
    const GeodesicSpec base{kIdentity, 0.0, r};
    Branch branches[2] = {{base, Side::PlusJ, lambda}, {base, Side::MinusJ, lambda}};
    constexpr int kSamples = 9;

    for (int k = 1; k <= k_max; ++k) {
        for (int i = 0; i < 2; ++i) {
            Branch& b = branches[i];
            const HorizontalCurve curve = geodesic_as_curve(b.source, -half_length, half_length);
            HelicoidPiece piece;
            piece.k = k;
            piece.index = i + 1;
            piece.side = b.side;
            piece.curvature = b.curvature;
            piece.source = b.source;
            piece.sigma = build_sigma_lambda(curve, b.curvature, b.side);
            if (b.curvature != lambda) piece.sigma.patch = piece.sigma.patch.flipped();

            const ImmersedPatch& patch = piece.sigma.patch;
            double lo = 0.0, hi = 0.0;
            for (int j = 0; j < kSamples; ++j) {
                const double e = -half_length + 2.0 * half_length * j / (kSamples - 1);
                const HelixOffset off = helix_offset(r, patch.point(e, 1.0));
                if (j == 0) {
                    piece.measured_offset = off.offset;
                } else {
                    const double d = reduce_mod(off.offset - piece.measured_offset, out.pitch);
                    lo = std::min(lo, d);
                    hi = std::max(hi, d);
                }
                piece.radial_error = std::max(piece.radial_error, off.radial_error);
            }
            piece.offset_spread = std::max(hi, -lo);
            piece.formula_offset = reduce_mod(i == 0 ? helicoid_c1k(lambda, r, k) : helicoid_c2k(lambda, r, k),
                                              out.pitch);

            const OrthogonalFamily& fam = piece.sigma.family;
            const double s_far = fam.cut(0.0);
            const PatchJet far = fam.jet(0.0, s_far);
            const Vec3 dir = to_frame(far.p, far.Fe);
            const double len = std::hypot(dir.x, dir.y);
            const GeodesicSpec next{far.p, std::atan2(dir.y / len, dir.x / len), r};
            const Vec3 w = to_frame(far.p, far.Fs);
            const double cross_j = -w.x * std::sin(next.theta) + w.y * std::cos(next.theta);
            b = {next, cross_j > 0.0 ? Side::PlusJ : Side::MinusJ, -b.curvature};
            out.pieces.push_back(std::move(piece));
        }
    }
    std::stable_sort(out.pieces.begin(), out.pieces.end(), [](const HelicoidPiece& a, const HelicoidPiece& b) {
        return a.k != b.k ? a.k < b.k : a.index < b.index;
    });
    return out;
}

} // namespace heis
