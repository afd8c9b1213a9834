#pragma once

#include "heis/hgroup.hpp"

#include <numbers>
#include <random>

namespace testing {

inline constexpr double kPi = std::numbers::pi;

class Sampler {
public:
    explicit Sampler(unsigned seed = 12345u) : rng_(seed) {}

    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
    heis::Point point(double r = 2.0) { return {uniform(-r, r), uniform(-r, r), uniform(-r, r)}; }
    heis::Vec3 vec(double r = 1.0) { return {uniform(-r, r), uniform(-r, r), uniform(-r, r)}; }

private:
    std::mt19937_64 rng_;
};

inline double dist(const heis::Point& a, const heis::Point& b) { return heis::norm(a.as_vec() - b.as_vec()); }

} // namespace testing
