#pragma once

#include <string>

#include "hypereq/equations.hpp"

namespace hypereq {

enum class EquationTag { sine_cosine, cosine_sine };

// A pair (f, g) built to solve one of the two equations on a hypergroup.
// Builders enforce their family's hypotheses up front; the equations
// themselves then hold identically, which the test suite re-verifies through
// the residual scans.
struct SolutionPair {
    HFunction f;
    HFunction g;
    EquationTag equation;
    std::string note;  // non-empty when the family is a relabeling of another
};

// Sine-cosine families. M (and N) must pass is_exponential on H.

// g = M, f any M-sine function (not identically zero).
SolutionPair build_t1_i(const Hypergroup& H, const HFunction& M, const HFunction& f,
                        const Tolerance& tol = {});

// f = M/(2c), g = M/2, for c != 0.
SolutionPair build_t1_ii(const Hypergroup& H, const HFunction& M, const Complex& c,
                         const Tolerance& tol = {});

// f = (M-N)/(2c), g = (M+N)/2, for c != 0 and M != N somewhere.
SolutionPair build_t1_iii(const Hypergroup& H, const HFunction& M, const HFunction& N,
                          const Complex& c, const Tolerance& tol = {});

// Cosine-sine families.

// f = c*M/(1-c^2), g = M/(1-c^2), for c not in {0, 1, -1}.
SolutionPair build_t2_i(const Hypergroup& H, const HFunction& M, const Complex& c,
                        const Tolerance& tol = {});

// f = M/(2c), g = M/2. Solves the cosine-sine equation only when c^2 = -1;
// other c are rejected with the offending residual coefficient
// 1/4 - 1/(4c^2) - 1/2 in the message. The accepted pairs coincide with the
// first family at parameter 1/c, which the note records.
SolutionPair build_t2_ii(const Hypergroup& H, const HFunction& M, const Complex& c,
                         const Tolerance& tol = {});

// g = M + sign*f for an M-sine f (not identically zero), sign in {+1, -1}.
SolutionPair build_t2_iii(const Hypergroup& H, const HFunction& M, const HFunction& f,
                          int sign, const Tolerance& tol = {});

// With d the principal square root of 1 - lambda^2 (lambda^2 != 1) and s the
// sign choice: f = s*(M-N)/(2di), g = s*((s*di-lambda)/(2di))*M +
// s*((s*di+lambda)/(2di))*N. The coefficient identities certifying the
// construction are checked internally.
SolutionPair build_t2_iv(const Hypergroup& H, const HFunction& M, const HFunction& N,
                         const Complex& lambda, int sign, const Tolerance& tol = {});

// The two internal identities behind the fourth family, as magnitudes:
// |1 - d^2 - lambda^2| and |((di-lambda)^2 - 1)/(-4d^2) - (di-lambda)/(2di)|.
// Both are zero whenever d^2 = 1 - lambda^2; exposed for direct testing.
std::pair<Scalar, Scalar> t2_iv_identity_defects(const Complex& lambda, const Complex& d);

}  // namespace hypereq
