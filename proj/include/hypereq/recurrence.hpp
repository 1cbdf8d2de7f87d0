#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypereq/rational.hpp"

namespace hypereq {

// One level of the three-term recurrence x*P_n = a*P_{n+1} + b*P_n + c*P_{n-1}.
struct RecurrenceCoeffs {
    Rational a;
    Rational b;
    Rational c;
};

// Three-term recurrence generating a polynomial system (P_n) normalized so
// that P_n(x0) = 1 for every n. Coefficients are exact rationals with a_n != 0,
// c_0 = 0 and a_n + b_n + c_n = x0 (the normalization, restated per level).
// Immutable after construction.
class Recurrence {
public:
    // a_0 = 1, b_n = 0, a_n = c_n = 1/2 for n >= 1; x0 = 1. Generates the
    // Chebyshev system T_n normalized at 1.
    static Recurrence chebyshev();

    // a_0 = 1, b_n = 0, a_n = q/(q+1), c_n = 1/(q+1) for n >= 1; x0 = 1.
    // Integer q >= 1. A second, non-symmetric family.
    static Recurrence cartier(long q);

    // Finite coefficient list; at(n) past the end throws.
    static Recurrence explicit_list(std::string name, Rational x0,
                                    std::vector<RecurrenceCoeffs> coeffs);

    const std::string& name() const { return name_; }
    const std::string& kind() const { return kind_; }  // chebyshev | cartier | explicit
    const Rational& x0() const { return x0_; }
    long cartier_q() const;                            // kind == "cartier" only
    const std::vector<RecurrenceCoeffs>& listed_coeffs() const { return coeffs_; }

    // Number of consecutive levels served by at(); nullopt when unbounded.
    std::optional<int> level_bound() const;

    RecurrenceCoeffs at(int n) const;

private:
    Recurrence() = default;

    std::string name_;
    std::string kind_;
    Rational x0_;
    long q_ = 0;
    std::vector<RecurrenceCoeffs> coeffs_;
};

}  // namespace hypereq
