#pragma once

#include <string>
#include <variant>

#include "hypereq/rational.hpp"

namespace hypereq {

// Arithmetic mode of a computation pipeline. Every value in a pipeline is
// either exact (rational) or floating (double); the two never mix silently.
// Widening exact -> floating is an explicit act (`to_mode`); the reverse
// direction throws.
enum class Mode { exact, floating };

inline Mode join(Mode a, Mode b) {
    return (a == Mode::floating || b == Mode::floating) ? Mode::floating : Mode::exact;
}

inline const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "floating"; }

// Mixed absolute/relative comparison tolerance for floating pipelines.
// Exact pipelines admit no tolerance by definition.
struct Tolerance {
    double atol = 1e-12;
    double rtol = 1e-9;
};

// A real number carried through either arithmetic mode.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}
    explicit Scalar(Rational q) : v_(std::move(q)) {}
    static Scalar exact(long num, long den = 1);
    static Scalar exact(Rational q) { return Scalar(std::move(q)); }
    static Scalar floating(double x) { Scalar s; s.v_ = x; return s; }

    Mode mode() const { return std::holds_alternative<double>(v_) ? Mode::floating : Mode::exact; }
    bool is_exact() const { return mode() == Mode::exact; }

    const Rational& rat() const;  // exact mode only
    double dbl() const;           // floating mode only

    // Numeric value as a double regardless of mode (lossy for rationals).
    double approx() const;

    // exact -> floating converts; floating -> exact throws MixedModeError.
    Scalar to_mode(Mode m) const;

    bool is_zero() const;
    int sign() const;  // -1, 0, +1
    Scalar abs() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { *this = *this + b; return *this; }
    Scalar& operator-=(const Scalar& b) { *this = *this - b; return *this; }
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b);
    friend bool operator<=(const Scalar& a, const Scalar& b) { return a < b || a == b; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }

    std::string str() const;  // "p/q" or %.17g

private:
    std::variant<Rational, double> v_;
};

inline Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

// |a - b| <= atol + rtol*max(|a|,|b|) in floating mode; exact equality in
// exact mode. Both arguments must share a mode.
bool close(const Scalar& a, const Scalar& b, const Tolerance& tol);

// Deterministic literal with 17 significant digits; always re-parses as a
// floating-point JSON number (a ".0" is appended to bare integers).
std::string format_double17(double x);

}  // namespace hypereq
