#pragma once

// Helicoidal surfaces L_lambda: repeated orthogonal geodesic families starting
// from the helix of radius r, alternating the curvature sign at each step.

#include "heis/surfaces.hpp"

#include <vector>

namespace heis {

/// c_1(lambda) with s_eps = cut_time(-2r, lambda).
double helicoid_c1(double lambda, double r);
double helicoid_c2(double lambda, double r);
/// k c_1 - sgn(lambda) floor(k/2) pi/(2 lambda^2).
double helicoid_c1k(double lambda, double r, int k);
double helicoid_c2k(double lambda, double r, int k);

/// Vertical pitch pi/(2 r^2) of the helix.
double helix_pitch(double r);

/// Reduces v to (-pitch/2, pitch/2].
double reduce_mod(double v, double pitch);

/// Vertical offset of p from the base helix, reduced modulo the pitch, and the
/// distance of its projection from the projected circle.
struct HelixOffset {
    double offset = 0.0;
    double radial_error = 0.0;
};
HelixOffset helix_offset(double r, const Point& p);

struct HelicoidPiece {
    int k = 1;        ///< generation, starting at 1
    int index = 1;    ///< 1 or 2
    Side side = Side::PlusJ;
    double curvature = 0.0;  ///< (-1)^(k-1) lambda
    GeodesicSpec source;     ///< the singular helix the piece leaves from, as a geodesic
    SigmaLambda sigma;       ///< patch oriented so that H = lambda
    double measured_offset = 0.0;  ///< offset of the far singular curve, mod pitch
    double offset_spread = 0.0;    ///< max deviation of sampled offsets
    double radial_error = 0.0;
    double formula_offset = 0.0;   ///< c_{ik}, mod pitch
};

struct Helicoid {
    double lambda = 0.0;
    double r = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double pitch = 0.0;
    std::vector<HelicoidPiece> pieces;  ///< ordered by k, then index
};

/// Builds pieces for generations 1..k_max, eps in [-half_length, half_length].
Helicoid helicoid_L(double lambda, double r, int k_max, double half_length = 1.0);

} // namespace heis
