#include "hypereq/scalar.hpp"

#include <cmath>
#include <cstdio>

#include "hypereq/errors.hpp"

namespace hypereq {

namespace {

void require_same_mode(const Scalar& a, const Scalar& b, const char* op) {
    if (a.mode() != b.mode())
        throw MixedModeError(std::string("scalar ") + op + " between " + mode_name(a.mode()) +
                             " and " + mode_name(b.mode()) + " operands");
}

}  // namespace

Scalar Scalar::exact(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return Scalar(std::move(q));
}

const Rational& Scalar::rat() const {
    if (!is_exact()) throw MixedModeError("rat() on a floating scalar");
    return std::get<Rational>(v_);
}

double Scalar::dbl() const {
    if (is_exact()) throw MixedModeError("dbl() on an exact scalar");
    return std::get<double>(v_);
}

double Scalar::approx() const {
    return is_exact() ? to_double(std::get<Rational>(v_)) : std::get<double>(v_);
}

Scalar Scalar::to_mode(Mode m) const {
    if (m == mode()) return *this;
    if (m == Mode::floating) return Scalar::floating(to_double(std::get<Rational>(v_)));
    throw MixedModeError("cannot narrow a floating scalar to exact mode");
}

bool Scalar::is_zero() const {
    return is_exact() ? std::get<Rational>(v_) == 0 : std::get<double>(v_) == 0.0;
}

int Scalar::sign() const {
    if (is_exact()) return sgn(std::get<Rational>(v_));
    double x = std::get<double>(v_);
    return (x > 0.0) - (x < 0.0);
}

Scalar Scalar::abs() const {
    return sign() < 0 ? -*this : *this;
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(Rational(-std::get<Rational>(v_)));
    return Scalar::floating(-std::get<double>(v_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same_mode(a, b, "+");
    if (a.is_exact()) return Scalar(Rational(a.rat() + b.rat()));
    return Scalar::floating(a.dbl() + b.dbl());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    require_same_mode(a, b, "-");
    if (a.is_exact()) return Scalar(Rational(a.rat() - b.rat()));
    return Scalar::floating(a.dbl() - b.dbl());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same_mode(a, b, "*");
    if (a.is_exact()) return Scalar(Rational(a.rat() * b.rat()));
    return Scalar::floating(a.dbl() * b.dbl());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    require_same_mode(a, b, "/");
    if (b.is_zero()) throw DivisionByZero("scalar division by zero");
    if (a.is_exact()) return Scalar(Rational(a.rat() / b.rat()));
    return Scalar::floating(a.dbl() / b.dbl());
}

bool operator==(const Scalar& a, const Scalar& b) {
    require_same_mode(a, b, "==");
    if (a.is_exact()) return a.rat() == b.rat();
    return a.dbl() == b.dbl();
}

bool operator<(const Scalar& a, const Scalar& b) {
    require_same_mode(a, b, "<");
    if (a.is_exact()) return a.rat() < b.rat();
    return a.dbl() < b.dbl();
}

std::string Scalar::str() const {
    return is_exact() ? format_rational(rat()) : format_double17(dbl());
}

bool close(const Scalar& a, const Scalar& b, const Tolerance& tol) {
    if (a.mode() != b.mode())
        throw MixedModeError("close() between scalars of different modes");
    if (a.is_exact()) return a == b;
    double x = a.dbl(), y = b.dbl();
    return std::fabs(x - y) <= tol.atol + tol.rtol * std::fmax(std::fabs(x), std::fabs(y));
}

std::string format_double17(double x) {
    if (!std::isfinite(x)) throw Error("non-finite value in serialized output");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    return s;
}

}  // namespace hypereq
