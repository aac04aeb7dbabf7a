#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace moyallax {

/// Arbitrary-precision rational. GMP keeps values in lowest terms with a
/// positive denominator once canonicalized; every constructor here does so.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on garbage.
Rational parse_rational(const std::string& s);

std::string rational_str(const Rational& q);

/// Exact Gaussian rational re + im*i. All field operations are exact; there
/// is no floating point anywhere in this library.
class Scalar {
public:
    Scalar() : re_(0), im_(0) {}
    Scalar(int n) : re_(n), im_(0) {}
    Scalar(long n) : re_(static_cast<signed long>(n)), im_(0) {}
    Scalar(Rational re) : re_(std::move(re)), im_(0) {}
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }
    /// i^n for any integer n (n may be negative).
    static Scalar i_pow(long n);
    static Scalar fraction(long num, long den) { return Scalar(make_rational(num, den)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    /// Exact complex division; throws std::domain_error on division by zero.
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return cmp(a.re_, b.re_) == 0 && cmp(a.im_, b.im_) == 0;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "3/4", "-i", "1/2+1/3*i", ... Deterministic, ASCII only.
    std::string to_string() const;

private:
    Rational re_, im_;
};

}  // namespace moyallax
