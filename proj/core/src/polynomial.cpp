#include "heis/polynomial.hpp"

#include "heis/error.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

namespace heis {

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    trim();
}

void Polynomial::trim()
{
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

double Polynomial::operator()(double y) const
{
    double v = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * y + *it;
    return v;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = static_cast<double>(i) * coeffs_[i];
    return Polynomial(std::move(d));
}

std::string Polynomial::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const double c = coeffs_[i];
        if (c == 0.0 && !(first && i == 0)) continue;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        const double a = std::abs(c);
        if (i == 0 || a != 1.0) out << a;
        if (i > 0) out << (i == 0 || a != 1.0 ? "*y" : "y");
        if (i > 1) out << "^" << i;
        first = false;
    }
    return out.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<double> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    return a + Polynomial({-1.0}) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    std::vector<double> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Polynomial run()
    {
        Polynomial p = expr();
        skip();
        if (pos_ != s_.size()) error("unexpected character");
        return p;
    }

private:
    [[noreturn]] void error(const std::string& what)
    {
        fail(ErrorCode::ParseError, what + " at position " + std::to_string(pos_) + " in '"
                                        + std::string(s_) + "'");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expr()
    {
        Polynomial p = term();
        for (;;) {
            if (accept('+')) p = p + term();
            else if (accept('-')) p = p - term();
            else return p;
        }
    }

    Polynomial term()
    {
        Polynomial p = unary();
        while (accept('*')) p = p * unary();
        return p;
    }

    Polynomial unary()
    {
        if (accept('-')) return Polynomial({-1.0}) * unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power()
    {
        Polynomial base = primary();
        if (!accept('^')) return base;
        skip();
        unsigned exponent = 0;
        const char* begin = s_.data() + pos_;
        const auto [end, ec] = std::from_chars(begin, s_.data() + s_.size(), exponent);
        if (ec != std::errc() || end == begin) error("exponent must be a non-negative integer");
        pos_ += static_cast<std::size_t>(end - begin);
        if (exponent > 64) error("exponent too large");
        Polynomial out({1.0});
        for (unsigned i = 0; i < exponent; ++i) out = out * base;
        return out;
    }

    Polynomial primary()
    {
        skip();
        if (pos_ >= s_.size()) error("unexpected end of input");
        const char c = s_[pos_];
        if (c == 'y') {
            ++pos_;
            return Polynomial({0.0, 1.0});
        }
        if (c == '(') {
            ++pos_;
            Polynomial p = expr();
            if (!accept(')')) error("missing ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t end = pos_;
            while (end < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[end])) || s_[end] == '.')) ++end;
            if (end < s_.size() && (s_[end] == 'e' || s_[end] == 'E')) {
                std::size_t k = end + 1;
                if (k < s_.size() && (s_[k] == '+' || s_[k] == '-')) ++k;
                if (k < s_.size() && std::isdigit(static_cast<unsigned char>(s_[k]))) {
                    end = k;
                    while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
                }
            }
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + end, v);
            if (ec != std::errc() || ptr != s_.data() + end) error("bad number");
            pos_ = end;
            return Polynomial({v});
        }
        error(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial Polynomial::parse(std::string_view text) { return Parser(text).run(); }

} // namespace heis
