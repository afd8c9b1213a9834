#include "heis/mesh.hpp"

#include "heis/curvature.hpp"
#include "heis/error.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>

namespace heis {

SurfaceMesh mesh(const ImmersedPatch& p, int n_eps, int n_s, bool with_curvature, double tol_singular)
{
    if (n_eps < 2 || n_s < 2) {
        fail(ErrorCode::InvalidArgument, "mesh needs at least 2 samples in each direction");
    }
    const Domain& d = p.domain();
    SurfaceMesh m;
    m.surface = p.name();
    m.n_eps = n_eps;
    m.n_s = n_s;
    m.vertices.resize(static_cast<std::size_t>(n_eps) * n_s);
    for (int i = 0; i < n_eps; ++i) {
        const double e = i == n_eps - 1 ? d.eps_max : d.eps_min + d.eps_width() * i / (n_eps - 1);
        for (int j = 0; j < n_s; ++j) {
            const double s = j == n_s - 1 ? d.s_max : d.s_min + d.s_width() * j / (n_s - 1);
            MeshVertex& v = m.vertices[m.index(i, j)];
            v.eps = e;
            v.s = s;
            v.normal = normal_data(p, e, s, tol_singular);
            v.h_est = std::numeric_limits<double>::quiet_NaN();
            if (with_curvature && v.normal.nh_norm >= 10.0 * tol_singular && v.normal.jacobian > 0.0) {
                try {
                    v.h_est = mean_curvature_char(p, e, s);
                } catch (const GeometryError&) {
                }
            }
        }
    }
    for (int i = 0; i + 1 < n_eps; ++i) {
        for (int j = 0; j + 1 < n_s; ++j) {
            m.quads.push_back({m.index(i, j), m.index(i + 1, j), m.index(i + 1, j + 1), m.index(i, j + 1)});
        }
    }
    return m;
}

std::vector<int> detect_singular(const SurfaceMesh& m, double tol)
{
    std::vector<int> out;
    for (std::size_t k = 0; k < m.vertices.size(); ++k) {
        if (m.vertices[k].normal.nh_norm < tol) out.push_back(static_cast<int>(k));
    }
    return out;
}

std::vector<std::vector<int>> singular_components(const SurfaceMesh& m, const std::vector<int>& vertices)
{
    std::vector<int> label(m.vertices.size(), -2);
    for (int v : vertices) label[v] = -1;
    std::vector<std::vector<int>> comps;
    for (int start : vertices) {
        if (label[start] != -1) continue;
        const int id = static_cast<int>(comps.size());
        comps.emplace_back();
        std::vector<int> stack{start};
        label[start] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comps[id].push_back(v);
            const int i = v / m.n_s, j = v % m.n_s;
            const int nb[4][2] = {{i - 1, j}, {i + 1, j}, {i, j - 1}, {i, j + 1}};
            for (const auto& q : nb) {
                if (q[0] < 0 || q[0] >= m.n_eps || q[1] < 0 || q[1] >= m.n_s) continue;
                const int w = m.index(q[0], q[1]);
                if (label[w] == -1) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return comps;
}

std::string format_double(double v)
{
    if (std::isnan(v)) return "nan";
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

void write_obj(std::ostream& out, const SurfaceMesh& m)
{
    out << "# " << m.surface << " " << m.n_eps << "x" << m.n_s << "\n";
    for (const MeshVertex& v : m.vertices) {
        const Point& p = v.normal.p;
        out << "v " << format_double(p.x) << ' ' << format_double(p.y) << ' ' << format_double(p.t) << '\n';
    }
    for (const auto& q : m.quads) {
        out << "f " << q[0] + 1 << ' ' << q[1] + 1 << ' ' << q[2] + 1 << '\n';
        out << "f " << q[0] + 1 << ' ' << q[2] + 1 << ' ' << q[3] + 1 << '\n';
    }
}

void write_mesh_csv(std::ostream& out, const SurfaceMesh& m)
{
    out << "eps,s,x,y,t,nh_norm,h_est\n";
    for (const MeshVertex& v : m.vertices) {
        const Point& p = v.normal.p;
        out << format_double(v.eps) << ',' << format_double(v.s) << ',' << format_double(p.x) << ','
            << format_double(p.y) << ',' << format_double(p.t) << ',' << format_double(v.normal.nh_norm)
            << ',' << format_double(v.h_est) << '\n';
    }
}

void write_file_atomic(const std::string& path, const std::string& contents)
{
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            fail(ErrorCode::InvalidArgument, "cannot write " + tmp.string());
        }
        out << contents;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            fail(ErrorCode::InvalidArgument, "write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        fail(ErrorCode::InvalidArgument, "cannot rename into " + path);
    }
}

} // namespace heis
