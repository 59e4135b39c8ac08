#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "toric/rational.hpp"

namespace toric {

// Univariate polynomial with exact rational coefficients, stored lowest
// degree first with no trailing zero. The zero polynomial is the empty list.
class Poly {
public:
    Poly() = default;
    Poly(long long constant);  // NOLINT(google-explicit-constructor)
    Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)

    static Poly variable();
    static Poly from_coeffs(std::vector<Rational> coeffs);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    Rational operator()(const Rational& x) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    bool operator==(const Poly&) const = default;

    bool has_integer_coeffs() const;
    // Integer value at every integer argument; decided by evaluating at
    // 0..degree, which spans the binomial basis.
    bool is_integer_valued() const;

    std::string str(const std::string& var = "N") const;

private:
    std::vector<Rational> c_;
    void trim();
};

Poly operator*(const Rational& s, Poly p);

// Exact Lagrange interpolation through points with pairwise distinct
// abscissas; degree < number of points.
Poly poly_interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace toric
