#include "sgc/polynomial.hpp"

#include <algorithm>

namespace sgc {

ExactPolynomial::ExactPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void ExactPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactPolynomial ExactPolynomial::constant(const Rational& c) {
    return ExactPolynomial({c});
}

ExactPolynomial ExactPolynomial::monomial(int degree, const Rational& coeff) {
    if (degree < 0) throw ValidationError("negative monomial degree");
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    c.back() = coeff;
    return ExactPolynomial(std::move(c));
}

Rational ExactPolynomial::coefficient(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(degree)];
}

Rational ExactPolynomial::evaluate(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

ExactPolynomial ExactPolynomial::operator-() const {
    ExactPolynomial r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& o) { return *this += -o; }

ExactPolynomial& ExactPolynomial::operator*=(const ExactPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
}

ExactPolynomial& ExactPolynomial::operator/=(const Rational& c) {
    for (auto& x : coeffs_) x /= c;
    normalize();
    return *this;
}

std::vector<Rational> ExactPolynomial::falling_factorial_coefficients() const {
    std::vector<Rational> out(coeffs_.size());
    ExactPolynomial rest(*this);
    for (int d = degree(); d >= 0; --d) {
        Rational c = rest.coefficient(d);
        out[static_cast<std::size_t>(d)] = c;
        if (!c.is_zero()) rest -= falling_factorial(d) * c;
    }
    if (!rest.is_zero()) throw InternalError("falling-factorial conversion left a remainder");
    return out;
}

ExactPolynomial ExactPolynomial::from_falling_factorial(const std::vector<Rational>& coeffs) {
    ExactPolynomial out;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) out += falling_factorial(static_cast<int>(i)) * coeffs[i];
    return out;
}

std::vector<std::string> ExactPolynomial::coefficient_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
}

std::string ExactPolynomial::pretty(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        Rational c = coefficient(d);
        if (c.is_zero()) continue;
        bool neg = c < Rational(0);
        Rational mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        bool unit = (mag == Rational(1)) && d > 0;
        if (!unit) {
            // keep "1/2 * k" unambiguous
            out += (!mag.is_integer() && d >= 1) ? "(" + mag.str() + ")" : mag.str();
        }
        if (d >= 1) out += var;
        if (d >= 2) out += "^" + std::to_string(d);
    }
    return out;
}

ExactPolynomial falling_factorial(int i) {
    if (i < 0) throw ValidationError("falling factorial needs a nonnegative index");
    ExactPolynomial out = ExactPolynomial::constant(Rational(1));
    for (int t = 0; t < i; ++t) {
        // k - t
        out *= ExactPolynomial({Rational(-t), Rational(1)});
    }
    return out;
}

} // namespace sgc
