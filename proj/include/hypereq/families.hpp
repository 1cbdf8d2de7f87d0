#pragma once

#include <vector>

#include "hypereq/hfunction.hpp"
#include "hypereq/recurrence.hpp"

namespace hypereq {

// P_n(z) by the forward recurrence P_{k+1} = ((z - b_k)P_k - c_k P_{k-1})/a_k,
// P_0 = 1. Computed in z's arithmetic mode.
Complex eval_poly(const Recurrence& R, int n, const Complex& z);

// P_n'(z) by propagating (P_k, P_k') through the differentiated recurrence
// P'_{k+1} = (P_k + (z - b_k)P'_k - c_k P'_{k-1})/a_k.
Complex eval_poly_derivative(const Recurrence& R, int n, const Complex& z);

// The multiplicative family n -> P_n(lambda): satisfies g(x*y) = g(x)g(y) on
// the generated hypergroup.
HFunction exponential_fn(const Recurrence& R, const Complex& lambda, int nmax);

// n -> constant * P_n'(x0): satisfies a(x*y) = a(x) + a(y).
HFunction additive_fn(const Recurrence& R, const Complex& constant, int nmax);

// n -> P_n'(lambda): satisfies f(x*y) = f(x)m(y) + f(y)m(x) against
// m = exponential_fn(R, lambda).
HFunction sine_fn(const Recurrence& R, const Complex& lambda, int nmax);

// Demonstration that n -> P_n'(lambda) is not of the product form
// n -> const * P_n'(x0) * P_n(lambda) for lambda != x0: the constant is fitted
// at n = 1 and the per-n deviation |P_n'(lambda) - const*P_n'(x0)*P_n(lambda)|
// is reported for n = 2..nmax. A strictly positive maximum settles the claim
// for this recurrence and lambda.
struct CounterexampleReport {
    Complex lambda;
    Complex fitted_const;
    // When the n=1 fit degenerates (P_1'(x0) * P_1(lambda) = 0), the constant
    // instead minimizes the summed squared deviation over n <= 3.
    bool least_squares_fallback = false;
    std::vector<Scalar> deviations;  // deviations[j] belongs to n = j + 2
    Scalar max_deviation;
    int argmax_n = -1;
    Mode mode = Mode::exact;
};

CounterexampleReport counterexample_report(const Recurrence& R, const Complex& lambda,
                                           int nmax);

}  // namespace hypereq
