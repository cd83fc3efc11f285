#include "sgc/rational.hpp"

#include <cstdlib>
#include <limits>

namespace sgc {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow(__int128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw CapacityError("rational arithmetic overflowed 64 bits");
    return static_cast<long long>(v);
}

} // namespace

Rational Rational::reduce128(__int128 n, __int128 d) {
    if (d == 0) throw ValidationError("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    __int128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    Rational r;
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
}

Rational::Rational(long long n, long long d) { *this = reduce128(n, d); }

long long Rational::as_integer() const {
    if (den_ != 1) throw InternalError("expected integer, got " + str());
    return num_;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-static_cast<__int128>(num_));
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    *this = reduce128(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                      static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    *this = reduce128(static_cast<__int128>(num_) * o.num_,
                      static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) throw ValidationError("division of rational by zero");
    *this = reduce128(static_cast<__int128>(num_) * o.den_,
                      static_cast<__int128>(den_) * o.num_);
    return *this;
}

bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::from_string(const std::string& s) {
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::logic_error&) {
        throw ValidationError("not a rational: '" + s + "'");
    }
}

} // namespace sgc
