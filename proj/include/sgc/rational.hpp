#ifndef SGC_RATIONAL_HPP
#define SGC_RATIONAL_HPP

#include <cstdint>
#include <string>

#include "sgc/errors.hpp"

namespace sgc {

// Exact rational over 64-bit integers, always reduced, denominator > 0.
// Intermediates run through 128-bit arithmetic; anything that cannot be
// reduced back into 64 bits throws CapacityError. No floating point.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {} // NOLINT(google-explicit-constructor)
    Rational(long long n, long long d);

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_nonnegative_integer() const { return den_ == 1 && num_ >= 0; }
    // Throws InternalError if the value is not integral.
    long long as_integer() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator<=(const Rational& a, const Rational& b) { return a < b || a == b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    // "p" for integers, "p/q" otherwise.
    std::string str() const;
    // Accepts both forms emitted by str().
    static Rational from_string(const std::string& s);

private:
    static Rational reduce128(__int128 n, __int128 d);

    long long num_ = 0;
    long long den_ = 1;
};

} // namespace sgc

#endif
