#include "toric/poly.hpp"

#include <stdexcept>

namespace toric {

Poly::Poly(long long constant) {
    if (constant != 0) c_.push_back(Rational(constant));
}

Poly::Poly(const Rational& constant) {
    if (constant != 0) c_.push_back(constant);
}

Poly Poly::variable() {
    Poly p;
    p.c_ = {Rational(0), Rational(1)};
    return p;
}

Poly Poly::from_coeffs(std::vector<Rational> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Poly();
    std::vector<Rational> out(lhs.c_.size() + rhs.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.c_.size(); ++i)
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += lhs.c_[i] * rhs.c_[j];
    return Poly::from_coeffs(std::move(out));
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly operator*(const Rational& s, Poly p) {
    if (s == 0) return Poly();
    std::vector<Rational> c = p.coeffs();
    for (auto& v : c) v *= s;
    return Poly::from_coeffs(std::move(c));
}

bool Poly::has_integer_coeffs() const {
    for (const auto& v : c_)
        if (!is_integer(v)) return false;
    return true;
}

bool Poly::is_integer_valued() const {
    for (int x = 0; x <= degree(); ++x)
        if (!is_integer((*this)(Rational(x)))) return false;
    return true;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& v = c_[i];
        if (v == 0) continue;
        Rational mag = v < 0 ? Rational(-v) : v;
        if (out.empty()) {
            if (v < 0) out += "-";
        } else {
            out += v < 0 ? " - " : " + ";
        }
        bool unit = mag == 1 && i > 0;
        if (!unit) {
            if (is_integer(mag))
                out += rational_str(mag);
            else
                out += "(" + rational_str(mag) + ")";
        }
        if (i > 0) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

Poly poly_interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first) throw std::invalid_argument("duplicate sample point");
    Poly out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Poly basis = 1;
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis *= Poly::from_coeffs({-points[j].first, Rational(1)});
            denom *= points[i].first - points[j].first;
        }
        out += (points[i].second / denom) * basis;
    }
    return out;
}

}  // namespace toric
