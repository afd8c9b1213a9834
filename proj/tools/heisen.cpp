// heisen: build surfaces in the Heisenberg group, export meshes, run checks.

#include "heis/curvature.hpp"
#include "heis/error.hpp"
#include "heis/measures.hpp"
#include "heis/mesh.hpp"
#include "heis/surfaces.hpp"
#include "heis/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string surface = "sphere";
    heis::SurfaceParams params;
    int n_eps = 64;
    int n_s = 64;
    std::string out;
    std::string suite = "all";
    int samples = 200;
    unsigned seed = 20240611u;
    std::map<std::string, double> tol;
};

std::pair<int, int> parse_res(const std::string& text)
{
    static const std::regex re(R"((\d+)(?:[xX](\d+))?)");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw ConfigError("resolution must look like NxM, got '" + text + "'");
    const int a = std::stoi(m[1]);
    const int b = m[2].matched ? std::stoi(m[2]) : a;
    if (a < 2 || b < 2) throw ConfigError("resolution must be at least 2x2");
    return {a, b};
}

void set_tolerance(RunConfig& cfg, const std::string& name, double value)
{
    if (!heis::default_tolerances().count(name)) throw ConfigError("unknown tolerance '" + name + "'");
    if (!(value > 0.0) || !std::isfinite(value)) throw ConfigError("tolerance '" + name + "' must be positive");
    cfg.tol[name] = value;
}

void apply_config_file(RunConfig& cfg, const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file " + path + ": " + e.what());
    }
    if (!j.is_object()) throw ConfigError("config file must hold a JSON object");
    try {
        for (const auto& [key, v] : j.items()) {
            if (key == "surface") cfg.surface = v.get<std::string>();
            else if (key == "lambda") cfg.params.lambda = v.get<double>();
            else if (key == "r") cfg.params.r = v.get<double>();
            else if (key == "rho") cfg.params.rho = v.get<double>();
            else if (key == "g") cfg.params.g = v.get<std::string>();
            else if (key == "curve") cfg.params.curve_csv = v.get<std::string>();
            else if (key == "k_max") cfg.params.k_max = v.get<int>();
            else if (key == "extent") cfg.params.extent = v.get<double>();
            else if (key == "offset") cfg.params.offset = v.get<double>();
            else if (key == "normal") {
                const auto n = v.get<std::vector<double>>();
                if (n.size() != 3) throw ConfigError("normal needs three components");
                cfg.params.normal = {n[0], n[1], n[2]};
            } else if (key == "res") std::tie(cfg.n_eps, cfg.n_s) = parse_res(v.get<std::string>());
            else if (key == "out") cfg.out = v.get<std::string>();
            else if (key == "suite") cfg.suite = v.get<std::string>();
            else if (key == "samples") cfg.samples = v.get<int>();
            else if (key == "seed") cfg.seed = v.get<unsigned>();
            else if (key == "tolerances") {
                if (!v.is_object()) throw ConfigError("tolerances must be an object");
                for (const auto& [name, t] : v.items()) set_tolerance(cfg, name, t.get<double>());
            } else throw ConfigError("unknown config key '" + key + "'");
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config file " + path + ": " + e.what());
    }
}

void emit(const std::string& path, const std::string& text)
{
    if (path.empty()) {
        std::cout << text;
    } else {
        heis::write_file_atomic(path, text);
    }
}

std::string sibling(const std::string& path, const std::string& suffix)
{
    std::filesystem::path p(path);
    p.replace_extension();
    return p.string() + suffix;
}

heis::ImmersedPatch build(const RunConfig& cfg) { return heis::make_surface(cfg.surface, cfg.params); }

int cmd_mesh(const RunConfig& cfg)
{
    const heis::ImmersedPatch p = build(cfg);
    const heis::SurfaceMesh m = heis::mesh(p, cfg.n_eps, cfg.n_s);
    std::ostringstream obj, csv, curv;
    heis::write_obj(obj, m);
    heis::write_mesh_csv(csv, m);
    heis::write_curvature_csv(curv, heis::curvature_report(p, std::min(cfg.n_eps, 32), std::min(cfg.n_s, 32)));

    const auto singular = heis::detect_singular(m);
    const auto comps = heis::singular_components(m, singular);
    std::cerr << p.name() << ": " << m.vertices.size() << " vertices, " << singular.size() << " singular in "
              << comps.size() << " component(s)";
    for (int row = 0; row < m.n_s; row += m.n_s - 1) {
        bool full = true;
        for (int i = 0; i < m.n_eps && full; ++i) full = m.vertices[m.index(i, row)].normal.nh_norm < heis::kTolSingular;
        if (full) std::cerr << "; s-row " << row << " singular";
    }
    std::cerr << '\n';

    emit(cfg.out, obj.str());
    if (!cfg.out.empty()) {
        heis::write_file_atomic(sibling(cfg.out, ".csv"), csv.str());
        heis::write_file_atomic(sibling(cfg.out, ".curvature.csv"), curv.str());
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg)
{
    heis::VerifyConfig vc;
    vc.lambda = cfg.params.lambda;
    vc.r = cfg.params.r;
    vc.g = cfg.params.g;
    vc.n_eps = cfg.n_eps;
    vc.n_s = cfg.n_s;
    vc.samples = cfg.samples;
    vc.seed = cfg.seed;
    vc.tol = cfg.tol;
    const auto names = heis::suite_names();
    if (cfg.suite != "all" && std::find(names.begin(), names.end(), cfg.suite) == names.end()) {
        throw ConfigError("unknown suite '" + cfg.suite + "'");
    }
    const std::vector<heis::Check> checks = heis::run_suite(cfg.suite, vc);
    const std::string text = heis::format_report_text(checks);
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::cout << text;
        const bool json = std::filesystem::path(cfg.out).extension() == ".json";
        heis::write_file_atomic(cfg.out, json ? heis::format_report_json(checks) : text);
    }
    return heis::all_passed(checks) ? 0 : kExitFailedCheck;
}

int cmd_report(const RunConfig& cfg)
{
    const heis::ImmersedPatch p = build(cfg);
    emit(cfg.out, heis::to_json(heis::measures_report(p, cfg.params.lambda, cfg.n_eps)));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"heisen: surfaces, meshes and checks in the Heisenberg group H^1"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "heisen 0.1.0");

    RunConfig cfg;
    std::string res, config_path;
    std::map<std::string, double> tol_flags;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON config file; command-line flags take precedence");
        sub->add_option("--surface", cfg.surface, "catalog surface")
            ->description("one of: " + [] {
                std::string s;
                for (const auto& n : heis::catalog_names()) s += (s.empty() ? "" : ", ") + n;
                return s;
            }());
        sub->add_option("--lambda", cfg.params.lambda, "mean curvature parameter");
        sub->add_option("--r", cfg.params.r, "helix radius");
        sub->add_option("--rho", cfg.params.rho, "vertical cylinder radius");
        sub->add_option("--g", cfg.params.g, "polynomial g(y) for t = xy + g(y)");
        sub->add_option("--curve", cfg.params.curve_csv, "planar curve CSV (eps,x,y) for sigma-lambda");
        sub->add_option("--k-max", cfg.params.k_max, "helicoid generations");
        sub->add_option("--extent", cfg.params.extent, "parameter half-width for open surfaces");
        sub->add_option("--res", res, "resolution NxM");
        sub->add_option("--out", cfg.out, "output path (default stdout)");
        for (const auto& [name, def] : heis::default_tolerances()) {
            sub->add_option("--tol-" + name, tol_flags[name], "tolerance '" + name + "'")->default_val(def);
        }
    };

    CLI::App* mesh = app.add_subcommand("mesh", "write an OBJ mesh and per-vertex CSV");
    common(mesh);
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    common(verify);
    verify->add_option("--suite", cfg.suite, "geodesics | jacobi | curvature | minkowski | bernstein | iso | all");
    verify->add_option("--samples", cfg.samples, "random samples per check");
    verify->add_option("--seed", cfg.seed, "random seed");
    CLI::App* report = app.add_subcommand("report", "area, volume, mean curvature and isoperimetric ratio");
    common(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    CLI::App* sub = app.get_subcommands().front();
    try {
        if (!config_path.empty()) {
            RunConfig file_cfg = cfg;
            apply_config_file(file_cfg, config_path);
            auto given = [sub](const std::string& flag) { return sub->count(flag) > 0; };
            if (!given("--surface")) cfg.surface = file_cfg.surface;
            if (!given("--lambda")) cfg.params.lambda = file_cfg.params.lambda;
            if (!given("--r")) cfg.params.r = file_cfg.params.r;
            if (!given("--rho")) cfg.params.rho = file_cfg.params.rho;
            if (!given("--g")) cfg.params.g = file_cfg.params.g;
            if (!given("--curve")) cfg.params.curve_csv = file_cfg.params.curve_csv;
            if (!given("--k-max")) cfg.params.k_max = file_cfg.params.k_max;
            if (!given("--extent")) cfg.params.extent = file_cfg.params.extent;
            if (!given("--out")) cfg.out = file_cfg.out;
            if (!given("--res")) std::tie(cfg.n_eps, cfg.n_s) = std::pair{file_cfg.n_eps, file_cfg.n_s};
            cfg.params.normal = file_cfg.params.normal;
            cfg.params.offset = file_cfg.params.offset;
            if (sub == verify) {
                if (!given("--suite")) cfg.suite = file_cfg.suite;
                if (!given("--samples")) cfg.samples = file_cfg.samples;
                if (!given("--seed")) cfg.seed = file_cfg.seed;
            }
            cfg.tol = file_cfg.tol;
        }
        if (!res.empty()) std::tie(cfg.n_eps, cfg.n_s) = parse_res(res);
        for (const auto& [name, value] : tol_flags) {
            if (sub->count("--tol-" + name) > 0) set_tolerance(cfg, name, value);
        }
        if (cfg.samples < 1) throw ConfigError("--samples must be positive");

        if (sub == mesh) return cmd_mesh(cfg);
        if (sub == verify) return cmd_verify(cfg);
        return cmd_report(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "heisen: " << e.what() << '\n';
        return kExitConfig;
    } catch (const heis::GeometryError& e) {
        std::cerr << "heisen: " << e.what() << '\n';
        switch (e.code()) {
        case heis::ErrorCode::UnknownSurface:
        case heis::ErrorCode::ParseError:
        case heis::ErrorCode::InvalidArgument:
            return kExitConfig;
        default:
            return kExitNumerical;
        }
    }
}
