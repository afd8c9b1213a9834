#pragma once

// Verification suites: each check compares a measured quantity with a closed
// form or an identity and records whether it lies within tolerance.

#include <map>
#include <string>
#include <vector>

namespace heis {

enum class Compare {
    Absolute,  ///< |measured - expected| <= tol
    Relative,  ///< |measured - expected| <= tol |expected|
    Below,     ///< measured < tol
    Above,     ///< measured > tol
};

struct Check {
    std::string suite;
    std::string name;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    Compare compare = Compare::Absolute;
    std::string basis;  ///< "reference", "derived" or "identity"
    bool pass = false;
    std::string note;
};

struct VerifyConfig {
    double lambda = 1.0;
    double r = 1.0;
    std::string g = "y^2";
    int n_eps = 64;
    int n_s = 64;
    int samples = 200;
    unsigned seed = 20240611u;
    std::map<std::string, double> tol;

    /// Tolerance by name, falling back to the defaults in default_tolerances().
    double tolerance(const std::string& name) const;
};

/// Tolerance per check family, keyed by the names used in Check::tolerance
/// lookups (geodesic, pole, jacobi, curvature, area, iso, ...).
const std::map<std::string, double>& default_tolerances();

/// geodesics, jacobi, curvature, minkowski, bernstein, iso.
std::vector<std::string> suite_names();

/// Runs one suite, or every suite for "all". Throws InvalidArgument for an
/// unknown suite name.
std::vector<Check> run_suite(const std::string& suite, const VerifyConfig& cfg);

bool evaluate(Check& c);
bool all_passed(const std::vector<Check>& checks);

/// One line per check: PASS|FAIL suite/name measured expected tolerance basis note.
std::string format_report_text(const std::vector<Check>& checks);
std::string format_report_json(const std::vector<Check>& checks);

} // namespace heis
