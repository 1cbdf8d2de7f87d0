#pragma once

#include <complex>
#include <string>

#include "hypereq/scalar.hpp"

namespace hypereq {

// Complex number over dual-mode scalars. Real and imaginary part always share
// one arithmetic mode.
class Complex {
public:
    Complex() = default;
    Complex(Scalar re, Scalar im);
    explicit Complex(Scalar re);
    static Complex exact(Rational re, Rational im = 0);
    static Complex exact(long re_num, long re_den = 1, long im_num = 0, long im_den = 1);
    static Complex floating(double re, double im = 0.0);
    static Complex floating(std::complex<double> z) { return floating(z.real(), z.imag()); }
    static Complex zero(Mode m) { return m == Mode::exact ? exact(0) : floating(0.0); }
    static Complex one(Mode m) { return m == Mode::exact ? exact(1) : floating(1.0); }

    const Scalar& re() const { return re_; }
    const Scalar& im() const { return im_; }
    Mode mode() const { return re_.mode(); }
    bool is_exact() const { return re_.is_exact(); }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    Complex to_mode(Mode m) const { return Complex(re_.to_mode(m), im_.to_mode(m)); }
    std::complex<double> approx() const { return {re_.approx(), im_.approx()}; }

    Complex conj() const { return Complex(re_, -im_); }
    Complex operator-() const { return Complex(-re_, -im_); }
    friend Complex operator+(const Complex& a, const Complex& b);
    friend Complex operator-(const Complex& a, const Complex& b);
    friend Complex operator*(const Complex& a, const Complex& b);
    friend Complex operator/(const Complex& a, const Complex& b);
    Complex& operator+=(const Complex& b) { *this = *this + b; return *this; }
    Complex& operator-=(const Complex& b) { *this = *this - b; return *this; }
    Complex& operator*=(const Complex& b) { *this = *this * b; return *this; }

    friend bool operator==(const Complex& a, const Complex& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    // Magnitude: hypot in floating mode; max(|re|,|im|) in exact mode, where
    // the Euclidean norm is usually irrational. Zero exactly when the value
    // is zero, which is all the exact pipeline ever needs.
    Scalar mag() const;

    // |re|^2 + |im|^2, exact in both modes.
    Scalar mag_sq() const { return re_ * re_ + im_ * im_; }

    std::string str() const;

private:
    Scalar re_;
    Scalar im_;
};

inline Complex operator*(const Scalar& a, const Complex& b) { return Complex(a) * b; }

// Principal square root: nonnegative real part, and nonnegative imaginary
// part on the branch cut. Exact mode succeeds only when the root is exactly
// representable (throws ExactUnavailable otherwise).
Complex principal_sqrt(const Complex& z);

bool close(const Complex& a, const Complex& b, const Tolerance& tol);

// Unit tolerance: |a-b| / (atol + rtol*max(mag a, mag b)); <= 1 means close.
// Exact mode: 0 when equal, +inf otherwise (reported as HUGE_VAL).
double closeness_excess(const Complex& a, const Complex& b, const Tolerance& tol);

}  // namespace hypereq
