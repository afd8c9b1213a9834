#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "heis/error.hpp"
#include "heis/measures.hpp"
#include "heis/surfaces.hpp"
#include "support.hpp"

#include <cmath>

#include "json.hpp"

using namespace heis;
using testing::kPi;

namespace {

ErrorCode code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const GeometryError& e) {
        return e.code();
    }
    FAIL("no GeometryError thrown");
    return ErrorCode::InvalidArgument;
}

const double kIso = 512.0 * kPi * kPi / 27.0;

ImmersedPatch euclidean_sphere(double R)
{
    PatchInfo info;
    info.closed = true;
    info.periodic_eps = true;
    info.collapsed_s_min = true;
    info.collapsed_s_max = true;
    return ImmersedPatch("round", {0, 2 * kPi, 0, kPi},
                         [R](double th, double ph) {
                             const double c = std::cos(th), s = std::sin(th), cp = std::cos(ph), sp = std::sin(ph);
                             return PatchJet{{R * sp * c, R * sp * s, R * cp},
                                             {-R * sp * s, R * sp * c, 0.0},
                                             {R * cp * c, R * cp * s, -R * sp}};
                         },
                         Orientation::Negative, info);
}

} // namespace

TEST_CASE("area and volume of spheres")
{
    for (double lambda : {0.5, 1.0, 2.0}) {
        const ImmersedPatch s = sphere_geodesic(lambda);
        const QuadratureResult A = area(s, 64), V = volume_enclosed(s, 64);
        CHECK(A.value == doctest::Approx(kPi * kPi / std::pow(lambda, 3)).epsilon(1e-10));
        CHECK(V.value == doctest::Approx(3 * kPi * kPi / (8 * std::pow(lambda, 4))).epsilon(1e-10));
        CHECK(A.error_estimate < 1e-8 * A.value);
        CHECK(A.cells == 64 * 64);
        CHECK(minkowski_check(s, lambda, 64) < 1e-10);
        CHECK(iso_ratio(s, 64) == doctest::Approx(kIso).epsilon(1e-10));
    }
}

TEST_CASE("quadrature converges")
{
    const ImmersedPatch s = sphere_geodesic(1.0);
    CHECK(std::abs(area(s, 4).value - kPi * kPi) < 1e-12);
    CHECK(code_of([&] { area(s, 0); }) == ErrorCode::InvalidArgument);

    const ImmersedPatch round = euclidean_sphere(1.0);
    const double ref = area(round, 128).value;
    const double e1 = std::abs(area(round, 1).value - ref), e4 = std::abs(area(round, 4).value - ref);
    const double e16 = std::abs(area(round, 16).value - ref);
    CHECK(e4 < e1);
    CHECK(e16 < e4);
    CHECK(area(round, 16).error_estimate > 0.0);
}

TEST_CASE("zero width, orientation and additivity")
{
    const ImmersedPatch s = sphere_geodesic(1.0);
    CHECK(area(s.restricted({1.0, 1.0, 0.0, kPi}), 16).value == 0.0);
    CHECK(volume_enclosed(s.flipped(), 32).value == doctest::Approx(-volume_enclosed(s, 32).value));
    CHECK(area(s.flipped(), 32).value == doctest::Approx(area(s, 32).value));

    const double whole = area(s, 32).value;
    const double a = area(s.restricted({0, kPi, 0, kPi}), 32).value;
    const double b = area(s.restricted({kPi, 2 * kPi, 0, kPi}), 32).value;
    CHECK(a + b == doctest::Approx(whole).epsilon(1e-12));
    const double v1 = volume_enclosed(s.restricted({0, 2 * kPi, 0, 1.0}), 32, true).value;
    const double v2 = volume_enclosed(s.restricted({0, 2 * kPi, 1.0, kPi}), 32, true).value;
    CHECK(v1 + v2 == doctest::Approx(volume_enclosed(s, 32).value).epsilon(1e-12));
}

TEST_CASE("volume needs a closed oriented surface")
{
    const ImmersedPatch plane = plane_patch({0, 0, 1}, 0.0);
    CHECK(code_of([&] { volume_enclosed(plane, 8); }) == ErrorCode::NotApplicable);
    CHECK(code_of([&] { minkowski_check(plane, 0.0, 8); }) == ErrorCode::NotApplicable);
    CHECK_NOTHROW(volume_enclosed(plane, 8, true));
    const ImmersedPatch unset = sphere_geodesic(1.0).with_orientation(Orientation::Unset);
    CHECK(code_of([&] { volume_enclosed(unset, 8); }) == ErrorCode::OrientationUnset);
}

TEST_CASE("left translation invariance")
{
    const ImmersedPatch s = sphere_geodesic(1.0);
    const ImmersedPatch t = s.left_translated({0.7, -0.3, 2.0});
    CHECK(area(t, 48).value == doctest::Approx(area(s, 48).value).epsilon(1e-10));
    CHECK(volume_enclosed(t, 48).value == doctest::Approx(volume_enclosed(s, 48).value).epsilon(1e-10));
}

TEST_CASE("dilation homogeneity")
{
    const ImmersedPatch s = sphere_geodesic(1.0);
    for (double r : {-0.5, std::log(2.0), 1.0}) {
        const DilationRatios d = dilation_homogeneity(s, r, 48);
        CHECK(d.ratio_A == doctest::Approx(std::exp(3 * r)).epsilon(1e-10));
        CHECK(d.ratio_V == doctest::Approx(std::exp(4 * r)).epsilon(1e-10));
    }
    const DilationRatios open = dilation_homogeneity(cylinder_S(1.0).plus.patch, 0.3, 32);
    CHECK(open.ratio_A == doctest::Approx(std::exp(0.9)).epsilon(1e-8));
    CHECK(open.ratio_V == doctest::Approx(std::exp(1.2)).epsilon(1e-8));
    CHECK(iso_ratio(sphere_geodesic(3.0), 48) == doctest::Approx(kIso).epsilon(1e-10));
}

TEST_CASE("first variation")
{
    const ImmersedPatch s = sphere_geodesic(1.0);
    const FirstVariation one = first_variation_check(s, 1.0, [](double, double) { return 1.0; }, 1e-4, 32);
    CHECK(one.defect / std::abs(one.A_prime) < 1e-6);
    CHECK(one.V_prime == doctest::Approx(one.V_prime_direct).epsilon(1e-6));
    CHECK(one.V_prime_direct == doctest::Approx(-riemannian_area(s, 32).value).epsilon(1e-12));

    const auto u = [](double th, double sv) { return 1.0 + 0.5 * std::cos(th) * std::sin(sv); };
    const FirstVariation gen = first_variation_check(s, 1.0, u, 1e-4, 32);
    CHECK(gen.defect / std::abs(gen.A_prime) < 1e-6);
    CHECK(gen.V_prime == doctest::Approx(gen.V_prime_direct).epsilon(1e-6));

    // A mean-zero normal speed moves neither A nor V to first order.
    const auto zero_mean = [](double th, double sv) { return std::cos(th) * std::sin(sv); };
    const FirstVariation z = first_variation_check(s, 1.0, zero_mean, 1e-4, 32);
    CHECK(std::abs(z.A_prime) < 1e-6);
    CHECK(std::abs(z.V_prime) < 1e-6);

    // With the wrong H the identity fails.
    const FirstVariation wrong = first_variation_check(s, 2.0, [](double, double) { return 1.0; }, 1e-4, 32);
    CHECK(wrong.defect / std::abs(wrong.A_prime) > 0.5);

    CHECK(code_of([&] { first_variation_check(s, 1.0, u, 1e-8, 8); }) == ErrorCode::StepTooSmall);
}

TEST_CASE("a Euclidean round sphere has a larger isoperimetric ratio")
{
    ImmersedPatch round = euclidean_sphere(1.0);
    if (volume_enclosed(round, 48).value < 0) round = round.flipped();
    CHECK(volume_enclosed(round, 48).value == doctest::Approx(4 * kPi / 3).epsilon(1e-10));
    CHECK(iso_ratio(round, 48) > kIso);
    CHECK(iso_ratio(round.dilated(0.7), 48) == doctest::Approx(iso_ratio(round, 48)).epsilon(1e-8));
}

TEST_CASE("measures_report")
{
    const MeasuresReport r = measures_report(sphere_geodesic(1.0), 1.0, 64);
    CHECK(r.surface == "sphere");
    CHECK(r.A == doctest::Approx(kPi * kPi));
    CHECK(r.V == doctest::Approx(3 * kPi * kPi / 8));
    CHECK(r.H == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r.minkowski_defect < 1e-6);
    CHECK(r.iso_ratio == doctest::Approx(kIso).epsilon(1e-6));

    const auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["A"].get<double>() == r.A);
    CHECK(j["surface"] == "sphere");

    const MeasuresReport open = measures_report(cylinder_S(1.0).plus.patch, 1.0, 16);
    CHECK(std::isnan(open.V));
    CHECK(open.H == doctest::Approx(1.0).epsilon(1e-6));
    const auto k = nlohmann::json::parse(to_json(open));
    CHECK(k["V"].is_null());
    CHECK(k["iso_ratio"].is_null());
    CHECK(k.size() == 9);
}
