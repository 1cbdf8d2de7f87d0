#pragma once

#include <utility>

#include "hypereq/hypergroup.hpp"

namespace hypereq {

// Outcome of scanning an equation's residual over every tabulated pair.
// `max_abs` is the largest |LHS - RHS|; `worst` is where it occurs. Passing is
// judged in units of tolerance: per pair, |LHS - RHS| is divided by
// atol + rtol*scale with scale the largest magnitude among LHS, RHS and the
// RHS terms individually, so cancellation between large terms is not
// mistaken for accuracy. Exact mode passes only on exact zero.
struct EquationResidual {
    Scalar max_abs;
    std::pair<Element, Element> worst{0, 0};
    double max_excess = 0.0;
    bool pass = true;
    Mode mode = Mode::exact;
};

struct CheckOutcome {
    bool ok = false;
    EquationResidual residual;
};

// f(x*y) = f(x)g(y) + f(y)g(x) over all tabulated pairs.
EquationResidual residual_sine(const Hypergroup& H, const HFunction& f, const HFunction& g,
                               const Tolerance& tol = {});

// g(x*y) = g(x)g(y) - f(x)f(y).
EquationResidual residual_cosine(const Hypergroup& H, const HFunction& f, const HFunction& g,
                                 const Tolerance& tol = {});

// g(x*y) = g(x)g(y).
EquationResidual residual_exponential(const Hypergroup& H, const HFunction& g,
                                      const Tolerance& tol = {});

// f(x*y) = f(x) + f(y).
EquationResidual residual_additive(const Hypergroup& H, const HFunction& f,
                                   const Tolerance& tol = {});

// Exponential = nonzero function with zero multiplicative residual.
CheckOutcome is_exponential(const Hypergroup& H, const HFunction& g, const Tolerance& tol = {});

// m-sine = solution f of f(x*y) = f(x)m(y) + f(y)m(x); additionally requires
// f(identity) = 0, which the equation forces whenever m(identity) = 1. An
// f(identity) violation is folded into the residual with worst = (o, o).
CheckOutcome is_m_sine(const Hypergroup& H, const HFunction& f, const HFunction& m,
                       const Tolerance& tol = {});

// Largest normalized pointwise deviation |a(n) - b(n)| / (1 + max(|a(n)|, |b(n)|))
// over the common domain; the scale-free measure used for reconstruction
// checks. Exact inputs that agree give exactly 0.
double function_deviation(const HFunction& a, const HFunction& b);

}  // namespace hypereq
