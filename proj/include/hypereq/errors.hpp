#pragma once

#include <stdexcept>
#include <string>

namespace hypereq {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic between an exact scalar and a floating scalar. Pipelines pick one
// mode up front and convert explicitly at the boundary.
struct MixedModeError : Error {
    explicit MixedModeError(const std::string& msg) : Error(msg) {}
};

// Exact pipeline asked for a value that is not representable as a rational
// (e.g. an irrational square root). Rerun the computation in floating mode.
struct ExactUnavailable : Error {
    explicit ExactUnavailable(const std::string& msg) : Error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};

// Convolution requested for a pair whose support falls outside the truncated
// table.
struct UntabulatedPair : Error {
    int x;
    int y;
    UntabulatedPair(int x_, int y_)
        : Error("untabulated pair (" + std::to_string(x_) + ", " + std::to_string(y_) + ")"),
          x(x_), y(y_) {}
};

// A recurrence produced a negative linearization coefficient: the orthogonal
// system exists but does not generate a hypergroup.
struct NotAHypergroup : Error {
    int n;
    int m;
    int k;
    std::string value;  // offending coefficient, as "p/q"
    NotAHypergroup(int n_, int m_, int k_, std::string value_)
        : Error("negative linearization coefficient c(" + std::to_string(n_) + "," +
                std::to_string(m_) + "," + std::to_string(k_) + ") = " + value_),
          n(n_), m(m_), k(k_), value(std::move(value_)) {}
};

// A solution-family builder was handed inputs violating the family's
// hypotheses. `check` names the violated condition.
struct PreconditionFailed : Error {
    std::string check;
    PreconditionFailed(std::string check_, const std::string& detail)
        : Error("precondition failed [" + check_ + "]: " + detail), check(std::move(check_)) {}
};

struct DegenerateEqual : PreconditionFailed {
    explicit DegenerateEqual(const std::string& detail)
        : PreconditionFailed("degenerate-equal", detail) {}
};

struct DegenerateLambda : PreconditionFailed {
    explicit DegenerateLambda(const std::string& detail)
        : PreconditionFailed("degenerate-lambda", detail) {}
};

struct DegenerateFit : PreconditionFailed {
    explicit DegenerateFit(const std::string& detail)
        : PreconditionFailed("degenerate-fit", detail) {}
};

// Parameter recovery produced estimates that disagree beyond the recovery
// tolerance; the input is not a solution of the assumed shape.
struct LambdaInconsistent : Error {
    explicit LambdaInconsistent(const std::string& msg) : Error(msg) {}
};

// A classifier's internal verification failed after the residual gate passed.
// Signals tolerance miscalibration, not bad input.
struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& msg) : Error(msg) {}
};

// Malformed input document (recurrence spec, table file, function spec).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace hypereq
