#include "hypereq/recurrence.hpp"

#include "hypereq/errors.hpp"

namespace hypereq {

Recurrence Recurrence::chebyshev() {
    Recurrence r;
    r.name_ = "chebyshev";
    r.kind_ = "chebyshev";
    r.x0_ = 1;
    return r;
}

Recurrence Recurrence::cartier(long q) {
    if (q < 1) throw PreconditionFailed("cartier-q", "q must be a positive integer");
    Recurrence r;
    r.name_ = "cartier(" + std::to_string(q) + ")";
    r.kind_ = "cartier";
    r.x0_ = 1;
    r.q_ = q;
    return r;
}

Recurrence Recurrence::explicit_list(std::string name, Rational x0,
                                     std::vector<RecurrenceCoeffs> coeffs) {
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        const RecurrenceCoeffs& row = coeffs[n];
        if (row.a == 0)
            throw ParseError("recurrence level " + std::to_string(n) + ": a must be nonzero");
        if (n == 0 && row.c != 0)
            throw ParseError("recurrence level 0: c must be zero");
        if (row.a + row.b + row.c != x0)
            throw ParseError("recurrence level " + std::to_string(n) +
                             ": a + b + c must equal x0");
    }
    Recurrence r;
    r.name_ = std::move(name);
    r.kind_ = "explicit";
    r.x0_ = std::move(x0);
    r.coeffs_ = std::move(coeffs);
    return r;
}

long Recurrence::cartier_q() const {
    if (kind_ != "cartier") throw Error("cartier_q() on a non-cartier recurrence");
    return q_;
}

std::optional<int> Recurrence::level_bound() const {
    if (kind_ == "explicit") return static_cast<int>(coeffs_.size());
    return std::nullopt;
}

RecurrenceCoeffs Recurrence::at(int n) const {
    if (n < 0) throw PreconditionFailed("level", "recurrence level must be nonnegative");
    if (kind_ == "chebyshev") {
        if (n == 0) return {Rational(1), Rational(0), Rational(0)};
        return {Rational(1, 2), Rational(0), Rational(1, 2)};
    }
    if (kind_ == "cartier") {
        if (n == 0) return {Rational(1), Rational(0), Rational(0)};
        return {Rational(q_, q_ + 1), Rational(0), Rational(1, q_ + 1)};
    }
    if (n >= static_cast<int>(coeffs_.size()))
        throw PreconditionFailed("coeffs-exhausted",
                                 "explicit recurrence lists " + std::to_string(coeffs_.size()) +
                                     " levels, level " + std::to_string(n) + " requested");
    return coeffs_[static_cast<std::size_t>(n)];
}

}  // namespace hypereq
