#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypereq/builders.hpp"
#include "hypereq/recurrence.hpp"

namespace hypereq {

enum class CaseTag {
    T1_I,   // g exponential, f a g-sine function
    T1_II,  // f = M/(2c), g = M/2
    T1_III, // f = (M-N)/(2c), g = (M+N)/2
    T2_I,   // f = c*M/(1-c^2), g = M/(1-c^2)
    T2_II,  // f = M/(2c), g = M/2 with c^2 = -1; reported as T2_I by the classifier
    T2_III, // g = M + sign*f with f an M-sine function
    T2_IV,  // f, g from two exponentials via lambda and d^2 = 1 - lambda^2
    NOT_A_SOLUTION,
};

const char* case_name(CaseTag tag);

struct ClassifierConfig {
    // Residual gate and structural checks (exponential membership etc.).
    Tolerance equation_tol{};
    // Agreement required between independent estimates of one parameter.
    double recovery_tol = 1e-7;
    // Largest allowed normalized deviation between the input pair and the
    // pair rebuilt from recovered parameters (exact mode demands 0).
    double reconstruction_tol = 1e-6;
};

// Outcome of running a constructive classification: the case tag, the
// recovered parameters, and the evidence. M and N are value tables; when a
// recurrence is supplied and the table matches an exponential family member,
// the fitted parameter is attached as the function's descriptor.
struct ClassificationResult {
    CaseTag tag = CaseTag::NOT_A_SOLUTION;
    std::optional<Complex> c;
    std::optional<Complex> lambda;
    std::optional<Complex> d;
    std::optional<int> sign;
    std::optional<HFunction> M;
    std::optional<HFunction> N;
    double residual_input = 0.0;           // max |LHS-RHS| of the input pair
    double residual_reconstruction = 0.0;  // normalized deviation of the rebuilt pair
    std::vector<std::string> notes;
};

// Runs the sine-cosine classification: residual gate, the g(identity)
// dichotomy, then either the direct exponential case or the Cauchy-difference
// decomposition M = g + i*d*f, N = g - i*d*f with c = d*i. NOT_A_SOLUTION is
// a result; genuinely contradictory internal states throw.
ClassificationResult classify_sine(const Hypergroup& H, const HFunction& f,
                                   const HFunction& g, const ClassifierConfig& cfg = {},
                                   const Recurrence* rec = nullptr);

// Runs the cosine-sine classification: residual gate, g(identity) dichotomy,
// recovery of the shift lambda, then the branch on lambda (zero: sine-type
// decomposition; unit: exponential shift; otherwise the two-exponential
// decomposition through h = g + lambda*f and d^2 = 1 - lambda^2).
ClassificationResult classify_cosine(const Hypergroup& H, const HFunction& f,
                                     const HFunction& g, const ClassifierConfig& cfg = {},
                                     const Recurrence* rec = nullptr);

}  // namespace hypereq
