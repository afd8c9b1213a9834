#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace heis {

/// Univariate polynomial in y with real coefficients, lowest degree first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    /// Parses +, -, *, ^ (non-negative integer exponents), parentheses, the
    /// variable y and decimal constants. Throws ParseError.
    static Polynomial parse(std::string_view text);

    double operator()(double y) const;
    Polynomial derivative() const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<double>& coeffs() const { return coeffs_; }
    std::string to_string() const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

private:
    void trim();
    std::vector<double> coeffs_{0.0};
};

} // namespace heis
