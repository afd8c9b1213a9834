#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "heis/error.hpp"
#include "heis/polynomial.hpp"

#include <string>
#include <vector>

using heis::ErrorCode;
using heis::GeometryError;
using heis::Polynomial;

namespace {

bool parse_fails(const std::string& s)
{
    try {
        Polynomial::parse(s);
    } catch (const GeometryError& e) {
        return e.code() == ErrorCode::ParseError;
    }
    return false;
}

} // namespace

TEST_CASE("parse and evaluate")
{
    CHECK(Polynomial::parse("y^2").coeffs() == std::vector<double>{0, 0, 1});
    CHECK(Polynomial::parse("  3 ").coeffs() == std::vector<double>{3});
    CHECK(Polynomial::parse("0.7*y + 0.2").coeffs() == std::vector<double>{0.2, 0.7});
    CHECK(Polynomial::parse("(y+1)^3").coeffs() == std::vector<double>{1, 3, 3, 1});
    CHECK(Polynomial::parse("-y^2").coeffs() == std::vector<double>{0, 0, -1});
    CHECK(Polynomial::parse("2*-y").coeffs() == std::vector<double>{0, -2});
    CHECK(Polynomial::parse("1e-3*y").coeffs() == std::vector<double>{0, 1e-3});
    CHECK(Polynomial::parse("y^0").coeffs() == std::vector<double>{1});
    CHECK(Polynomial::parse("y - y").degree() == 0);
    CHECK(Polynomial::parse("y^3 - 2*y + 1")(2.0) == doctest::Approx(5.0));
}

TEST_CASE("arithmetic and derivative")
{
    const Polynomial p({1, 2, 3});
    const Polynomial q({0, 1});
    CHECK((p + q).coeffs() == std::vector<double>{1, 3, 3});
    CHECK((p - p).coeffs() == std::vector<double>{0});
    CHECK((p * q).coeffs() == std::vector<double>{0, 1, 2, 3});
    CHECK(p.derivative().coeffs() == std::vector<double>{2, 6});
    CHECK(p.derivative().derivative().derivative().coeffs() == std::vector<double>{0});
    CHECK(Polynomial().degree() == 0);
}

TEST_CASE("to_string round trips")
{
    for (const char* s : {"y^2", "y^3 - 2*y + 1", "-0.5*y^4 + y", "0", "-2", "y"}) {
        const Polynomial p = Polynomial::parse(s);
        CHECK(Polynomial::parse(p.to_string()).coeffs() == p.coeffs());
    }
    CHECK(Polynomial::parse("y^2").to_string() == "y^2");
}

TEST_CASE("parse errors")
{
    for (const char* s : {"", "x", "y^", "y^-1", "y^1.5", "(y+1", "y+", "2**y", "y)", "1.2.3", "y^100"}) {
        INFO(s);
        CHECK(parse_fails(s));
    }
}
