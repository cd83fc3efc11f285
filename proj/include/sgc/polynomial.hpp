#ifndef SGC_POLYNOMIAL_HPP
#define SGC_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "sgc/rational.hpp"

namespace sgc {

// Univariate polynomial in k with exact rational coefficients, stored in the
// monomial basis (index = degree, no trailing zeros; empty list is the zero
// polynomial). The falling-factorial basis is available through the
// conversion functions below but is never the stored form.
class ExactPolynomial {
public:
    ExactPolynomial() = default;
    explicit ExactPolynomial(std::vector<Rational> coeffs);

    static ExactPolynomial constant(const Rational& c);
    static ExactPolynomial monomial(int degree, const Rational& coeff);

    bool is_zero() const { return coeffs_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coefficient(int degree) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& t) const;

    ExactPolynomial operator-() const;
    ExactPolynomial& operator+=(const ExactPolynomial& o);
    ExactPolynomial& operator-=(const ExactPolynomial& o);
    ExactPolynomial& operator*=(const ExactPolynomial& o);
    ExactPolynomial& operator*=(const Rational& c);
    ExactPolynomial& operator/=(const Rational& c);

    friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
    friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
    friend ExactPolynomial operator*(ExactPolynomial a, const ExactPolynomial& b) { return a *= b; }
    friend ExactPolynomial operator*(ExactPolynomial a, const Rational& c) { return a *= c; }
    friend ExactPolynomial operator/(ExactPolynomial a, const Rational& c) { return a /= c; }

    friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const ExactPolynomial& a, const ExactPolynomial& b) { return !(a == b); }

    // Coefficients c_0..c_d with poly = sum c_i * (k)_i. Exact; (k)_i is
    // monic so the conversion is a top-down synthetic division.
    std::vector<Rational> falling_factorial_coefficients() const;
    static ExactPolynomial from_falling_factorial(const std::vector<Rational>& coeffs);

    // Coefficient strings from the constant term upward, e.g. ["0","2","4"].
    std::vector<std::string> coefficient_strings() const;
    // Human-readable form, e.g. "4k^2 + 2k" or "0".
    std::string pretty(const std::string& var = "k") const;

private:
    void normalize();

    std::vector<Rational> coeffs_;
};

// (k)_i = k(k-1)...(k-i+1); (k)_0 = 1.
ExactPolynomial falling_factorial(int i);

} // namespace sgc

#endif
