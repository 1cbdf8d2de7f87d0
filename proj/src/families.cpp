#include "hypereq/families.hpp"

#include <utility>

#include "hypereq/errors.hpp"

namespace hypereq {

namespace {

struct PolyPair {
    Complex value;
    Complex derivative;
};

// (P_n(z), P_n'(z)) for n = 0..n_top, in z's mode.
std::vector<PolyPair> poly_sequence(const Recurrence& R, int n_top, const Complex& z) {
    if (n_top < 0) throw PreconditionFailed("degree", "polynomial degree must be nonnegative");
    const Mode m = z.mode();
    std::vector<PolyPair> seq;
    seq.reserve(static_cast<std::size_t>(n_top) + 1);
    seq.push_back({Complex::one(m), Complex::zero(m)});
    for (int k = 0; k < n_top; ++k) {
        RecurrenceCoeffs rc = R.at(k);
        Complex a = Complex::exact(rc.a).to_mode(m);
        Complex b = Complex::exact(rc.b).to_mode(m);
        Complex c = Complex::exact(rc.c).to_mode(m);
        const PolyPair& cur = seq.back();
        PolyPair before = k > 0 ? seq[static_cast<std::size_t>(k) - 1]
                                : PolyPair{Complex::zero(m), Complex::zero(m)};
        Complex shifted = z - b;
        Complex value = (shifted * cur.value - c * before.value) / a;
        Complex derivative =
            (cur.value + shifted * cur.derivative - c * before.derivative) / a;
        seq.push_back({value, derivative});
    }
    return seq;
}

}  // namespace

Complex eval_poly(const Recurrence& R, int n, const Complex& z) {
    return poly_sequence(R, n, z).back().value;
}

Complex eval_poly_derivative(const Recurrence& R, int n, const Complex& z) {
    return poly_sequence(R, n, z).back().derivative;
}

HFunction exponential_fn(const Recurrence& R, const Complex& lambda, int nmax) {
    std::vector<PolyPair> seq = poly_sequence(R, nmax, lambda);
    std::vector<Complex> values;
    values.reserve(seq.size());
    for (const PolyPair& p : seq) values.push_back(p.value);
    return HFunction::family({"exponential", lambda}, std::move(values),
                             "exponential(" + lambda.str() + ")");
}

HFunction additive_fn(const Recurrence& R, const Complex& constant, int nmax) {
    Complex x0 = Complex::exact(R.x0()).to_mode(constant.mode());
    std::vector<PolyPair> seq = poly_sequence(R, nmax, x0);
    std::vector<Complex> values;
    values.reserve(seq.size());
    for (const PolyPair& p : seq) values.push_back(constant * p.derivative);
    return HFunction::family({"additive", constant}, std::move(values),
                             "additive(" + constant.str() + ")");
}

HFunction sine_fn(const Recurrence& R, const Complex& lambda, int nmax) {
    std::vector<PolyPair> seq = poly_sequence(R, nmax, lambda);
    std::vector<Complex> values;
    values.reserve(seq.size());
    for (const PolyPair& p : seq) values.push_back(p.derivative);
    return HFunction::family({"sine", lambda}, std::move(values),
                             "sine(" + lambda.str() + ")");
}

CounterexampleReport counterexample_report(const Recurrence& R, const Complex& lambda,
                                           int nmax) {
    if (nmax < 3) throw PreconditionFailed("nmax", "counterexample needs nmax >= 3");
    const Mode m = lambda.mode();
    Complex x0 = Complex::exact(R.x0()).to_mode(m);
    if (m == Mode::exact ? lambda == x0 : close(lambda, x0, Tolerance{}))
        throw PreconditionFailed("lambda-x0",
                                 "at lambda = x0 the two forms coincide; nothing to refute");

    std::vector<PolyPair> at_lambda = poly_sequence(R, nmax, lambda);
    std::vector<PolyPair> at_x0 = poly_sequence(R, nmax, x0);

    // target(n) = P_n'(lambda), product(n) = P_n'(x0) * P_n(lambda)
    auto target = [&](int n) { return at_lambda[static_cast<std::size_t>(n)].derivative; };
    auto product = [&](int n) {
        return at_x0[static_cast<std::size_t>(n)].derivative *
               at_lambda[static_cast<std::size_t>(n)].value;
    };

    CounterexampleReport report;
    report.lambda = lambda;
    report.mode = m;

    Complex denom = product(1);
    bool degenerate = m == Mode::exact ? denom.is_zero()
                                       : std::abs(denom.approx()) <= Tolerance{}.atol;
    if (!degenerate) {
        report.fitted_const = target(1) / denom;
    } else {
        report.least_squares_fallback = true;
        Complex num = Complex::zero(m);
        Complex den = Complex::zero(m);
        for (int n = 1; n <= 3; ++n) {
            num += product(n).conj() * target(n);
            den += product(n).conj() * product(n);
        }
        report.fitted_const = den.is_zero() ? Complex::zero(m) : num / den;
    }

    report.max_deviation = Scalar().to_mode(m);
    for (int n = 2; n <= nmax; ++n) {
        Scalar dev = (target(n) - report.fitted_const * product(n)).mag();
        if (dev > report.max_deviation || report.argmax_n < 0) {
            report.max_deviation = dev;
            report.argmax_n = n;
        }
        report.deviations.push_back(std::move(dev));
    }
    return report;
}

}  // namespace hypereq
