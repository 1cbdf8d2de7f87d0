#include "hypereq/complex.hpp"

#include <cmath>

#include "hypereq/errors.hpp"

namespace hypereq {

Complex::Complex(Scalar re, Scalar im) : re_(std::move(re)), im_(std::move(im)) {
    if (re_.mode() != im_.mode())
        throw MixedModeError("complex value with mixed-mode components");
}

Complex::Complex(Scalar re) {
    Mode m = re.mode();
    re_ = std::move(re);
    im_ = Scalar().to_mode(m);
}

Complex Complex::exact(Rational re, Rational im) {
    return Complex(Scalar(std::move(re)), Scalar(std::move(im)));
}

Complex Complex::exact(long re_num, long re_den, long im_num, long im_den) {
    return Complex(Scalar::exact(re_num, re_den), Scalar::exact(im_num, im_den));
}

Complex Complex::floating(double re, double im) {
    return Complex(Scalar::floating(re), Scalar::floating(im));
}

Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re_ + b.re_, a.im_ + b.im_);
}

Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re_ - b.re_, a.im_ - b.im_);
}

Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

Complex operator/(const Complex& a, const Complex& b) {
    if (b.is_zero()) throw DivisionByZero("complex division by zero");
    Scalar denom = b.mag_sq();
    Complex num = a * b.conj();
    return Complex(num.re() / denom, num.im() / denom);
}

Scalar Complex::mag() const {
    if (is_exact()) return max(re_.abs(), im_.abs());
    return Scalar::floating(std::hypot(re_.dbl(), im_.dbl()));
}

std::string Complex::str() const {
    return re_.str() + (im_.sign() < 0 ? "-" : "+") + im_.abs().str() + "i";
}

Complex principal_sqrt(const Complex& z) {
    if (z.mode() == Mode::floating) {
        std::complex<double> r = std::sqrt(std::complex<double>(z.re().dbl(), z.im().dbl()));
        // std::sqrt already lands on Re >= 0; pin the branch cut to +i.
        if (r.real() == 0.0 && r.imag() < 0.0) r = -r;
        return Complex::floating(r);
    }
    // z = u + vi; sqrt = x + yi with x = sqrt((|z|+u)/2), y = sgn(v) sqrt((|z|-u)/2).
    const Rational u = z.re().rat();
    const Rational v = z.im().rat();
    auto r = exact_sqrt(u * u + v * v);
    if (!r) throw ExactUnavailable("square root is irrational; use floating mode");
    auto x2 = Rational((*r + u) / 2);
    auto y2 = Rational((*r - u) / 2);
    auto x = exact_sqrt(x2);
    auto y = exact_sqrt(y2);
    if (!x || !y) throw ExactUnavailable("square root is irrational; use floating mode");
    Rational ry = (sgn(v) < 0) ? Rational(-*y) : *y;
    if (*x == 0 && ry < 0) ry = -ry;
    Complex root = Complex::exact(*x, ry);
    if (root * root != z)
        throw ExactUnavailable("square root is irrational; use floating mode");
    return root;
}

bool close(const Complex& a, const Complex& b, const Tolerance& tol) {
    if (a.mode() != b.mode())
        throw MixedModeError("close() between complex values of different modes");
    if (a.is_exact()) return a == b;
    return (a - b).mag().dbl() <=
           tol.atol + tol.rtol * std::fmax(a.mag().dbl(), b.mag().dbl());
}

double closeness_excess(const Complex& a, const Complex& b, const Tolerance& tol) {
    if (a.mode() != b.mode())
        throw MixedModeError("closeness_excess() between complex values of different modes");
    if (a.is_exact()) return a == b ? 0.0 : HUGE_VAL;
    double diff = (a - b).mag().dbl();
    return diff / (tol.atol + tol.rtol * std::fmax(a.mag().dbl(), b.mag().dbl()));
}

}  // namespace hypereq
