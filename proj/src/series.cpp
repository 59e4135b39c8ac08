#include "toric/series.hpp"

namespace toric {

Series<Poly> series_exp_linear(const Series<Rational>& a) {
    if (a.c[0] != 0) throw std::invalid_argument("exp requires zero constant term");
    const int K = a.order();
    Series<Poly> out(K);
    out.c[0] = Poly(1);
    // exp(N*A) = sum_{m>=0} N^m A^m / m!; A has zero constant term, so A^m
    // contributes nothing below x^m and the sum per coefficient is finite.
    Series<Rational> apow = Series<Rational>::one(K);
    BigInt mfact = 1;
    for (int m = 1; m <= K; ++m) {
        apow = series_mul(apow, a);
        mfact *= m;
        Poly nm = 1;
        for (int i = 0; i < m; ++i) nm *= Poly::variable();
        for (int i = m; i <= K; ++i) out.c[i] += (apow.c[i] / Rational(mfact)) * nm;
    }
    return out;
}

Series<Rational> series_eval_at(const Series<Poly>& s, const Rational& n) {
    Series<Rational> out(s.order());
    for (int i = 0; i <= s.order(); ++i) out.c[i] = s.c[i](n);
    return out;
}

bool multinomial_identity_check(int k, int n, const Limits& limits) {
    if (k < 0) throw std::invalid_argument("multinomial identity needs k >= 0");
    if (k > limits.max_multinomial_k)
        throw GuardError("multinomial identity check limited to k <= " +
                         std::to_string(limits.max_multinomial_k));
    const BigInt kfact = factorial(k);
    Rational rhs = 0;
    if (k == 0) {
        rhs = 1;  // the empty composition, r = 0
    } else {
        // Compositions of k correspond to subsets of the k-1 gaps.
        for (unsigned long long mask = 0; mask < (1ULL << (k - 1)); ++mask) {
            BigInt denom = 1;
            int part = 1;
            int parts = 0;
            for (int gap = 0; gap < k - 1; ++gap) {
                if (mask & (1ULL << gap)) {
                    denom *= factorial(part);
                    ++parts;
                    part = 1;
                } else {
                    ++part;
                }
            }
            denom *= factorial(part);
            ++parts;
            rhs += ratio(kfact * binomial(n, parts), denom);
        }
    }
    Rational lhs = 1;
    for (int i = 0; i < k; ++i) lhs *= n;
    return lhs == rhs;
}

}  // namespace toric
