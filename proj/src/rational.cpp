#include "toric/rational.hpp"

#include <stdexcept>

#include "toric/errors.hpp"

namespace toric {

Rational ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(num) / Rational(den);
}

bool is_integer(const Rational& r) { return denominator(r) == 1; }

BigInt to_integer(const Rational& r) {
    if (!is_integer(r)) throw std::invalid_argument("rational is not an integer: " + rational_str(r));
    return numerator(r);
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    BigInt out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

BigInt binomial(const BigInt& n, int k) {
    if (k < 0) return 0;
    // Product form keeps intermediate values integral: the partial product
    // after i steps is binomial(n, i) * i! / i!.
    BigInt num = 1;
    BigInt den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    BigInt q = num / den;
    if (q * den != num) throw InternalError("binomial product not divisible");
    return q;
}

std::string rational_str(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in rational literal: " + text);
        return ratio(num, den);
    } catch (const std::runtime_error& e) {
        throw ParseError("bad rational literal '" + text + "': " + e.what());
    }
}

}  // namespace toric
