#pragma once

#include "heis/patch.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace heis {

struct MeshVertex {
    double eps = 0.0;
    double s = 0.0;
    NormalData normal;
    double h_est = 0.0;  ///< NaN where the characteristic estimate is not defined
};

/// Tensor-grid sampling of a patch, row-major with eps varying slowest.
struct SurfaceMesh {
    std::string surface;
    int n_eps = 0;
    int n_s = 0;
    std::vector<MeshVertex> vertices;
    std::vector<std::array<int, 4>> quads;

    int index(int i, int j) const { return i * n_s + j; }
};

/// Samples an n_eps x n_s grid including the domain edges. Mean curvature is
/// estimated at vertices with |N_H| >= 10 tol_singular when `with_curvature`.
SurfaceMesh mesh(const ImmersedPatch& p, int n_eps, int n_s, bool with_curvature = true,
                 double tol_singular = kTolSingular);

/// Indices of vertices with |N_H| < tol.
std::vector<int> detect_singular(const SurfaceMesh& m, double tol = kTolSingular);

/// Connected components (grid 4-neighbourhood) of a vertex set.
std::vector<std::vector<int>> singular_components(const SurfaceMesh& m, const std::vector<int>& vertices);

void write_obj(std::ostream& out, const SurfaceMesh& m);
/// Columns eps,s,x,y,t,nh_norm,h_est.
void write_mesh_csv(std::ostream& out, const SurfaceMesh& m);

/// Writes through a temporary file renamed into place.
void write_file_atomic(const std::string& path, const std::string& contents);

/// Shortest round-trip decimal representation.
std::string format_double(double v);

} // namespace heis
