#pragma once

#include <stdexcept>
#include <vector>

#include "toric/errors.hpp"
#include "toric/poly.hpp"
#include "toric/rational.hpp"

namespace toric {

// Power series truncated at order K: exactly K+1 coefficients, c[i] is the
// x^i coefficient. Operations require equal orders; there is no implicit
// re-truncation.
template <typename T>
struct Series {
    std::vector<T> c;

    Series() : c(1) {}
    explicit Series(int order) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
        c.resize(static_cast<std::size_t>(order) + 1);
    }

    static Series one(int order) {
        Series s(order);
        s.c[0] = T(1);
        return s;
    }

    int order() const { return static_cast<int>(c.size()) - 1; }
    bool operator==(const Series&) const = default;
};

template <typename T>
Series<T> series_mul(const Series<T>& a, const Series<T>& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series order mismatch");
    Series<T> out(a.order());
    for (int i = 0; i <= a.order(); ++i)
        for (int j = 0; i + j <= a.order(); ++j) out.c[i + j] += a.c[i] * b.c[j];
    return out;
}

template <typename T>
Series<T> series_pow(const Series<T>& a, unsigned long long n) {
    Series<T> result = Series<T>::one(a.order());
    Series<T> base = a;
    while (n > 0) {
        if (n & 1) result = series_mul(result, base);
        base = series_mul(base, base);
        n >>= 1;
    }
    return result;
}

// exp(N * A(x)) for a rational series A with zero constant term; the x^i
// coefficient of the result is a polynomial in N of degree <= i.
Series<Poly> series_exp_linear(const Series<Rational>& a);

// Substitute a numeric value for N in every coefficient.
Series<Rational> series_eval_at(const Series<Poly>& s, const Rational& n);

// n^k == sum over compositions (m_1,...,m_r) of k of k!/(m_1!...m_r!) *
// binomial(n, r), both sides evaluated exactly.
bool multinomial_identity_check(int k, int n, const Limits& limits = {});

}  // namespace toric
