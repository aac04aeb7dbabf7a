#include "moyallax/scalar.hpp"

#include <stdexcept>

namespace moyallax {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::domain_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    if (sgn(Rational(q.get_den())) == 0)
        throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Scalar Scalar::i_pow(long n) {
    long r = n % 4;
    if (r < 0) r += 4;
    switch (r) {
        case 0: return Scalar(1);
        case 1: return Scalar::i();
        case 2: return Scalar(-1);
        default: return Scalar(Rational(0), Rational(-1));
    }
}

Scalar& Scalar::operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    Rational n = o.re_ * o.re_ + o.im_ * o.im_;
    if (sgn(n) == 0) throw std::domain_error("Scalar: division by zero");
    Rational re = (re_ * o.re_ + im_ * o.im_) / n;
    Rational im = (im_ * o.re_ - re_ * o.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string Scalar::to_string() const {
    auto imag_part = [this](bool with_sign) {
        std::string s;
        Rational a = with_sign ? abs(im_) : im_;
        if (a == 1)
            s = "i";
        else if (a == -1)
            s = "-i";
        else
            s = a.get_str() + "*i";
        return s;
    };
    if (is_real()) return re_.get_str();
    if (sgn(re_) == 0) return imag_part(false);
    return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag_part(true);
}

}  // namespace moyallax
