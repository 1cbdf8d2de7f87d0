#include "hypereq/linearization.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "hypereq/errors.hpp"

namespace hypereq {

namespace {

// Coefficient vector over the P-basis, dense on {0,...,nmax}.
using Coefficients = std::vector<Rational>;

// x * (sum_k v[k] P_k) re-expanded through x*P_k = a_k P_{k+1} + b_k P_k + c_k P_{k-1}.
// Requires supp(v) <= nmax - 1 so nothing escapes the truncation.
Coefficients multiply_by_x(const Recurrence& R, const Coefficients& v) {
    Coefficients out(v.size(), Rational(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        RecurrenceCoeffs rc = R.at(static_cast<int>(k));
        out[k + 1] += v[k] * rc.a;
        out[k] += v[k] * rc.b;
        if (k > 0) out[k - 1] += v[k] * rc.c;
    }
    return out;
}

FiniteMeasure row_measure(const Coefficients& v, Element x, Element y) {
    std::vector<FiniteMeasure::Atom> atoms;
    Rational sum(0);
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        Element el = static_cast<Element>(k);
        if (v[k] < 0)
            throw NotAHypergroup(x, y, el, format_rational(v[k]));
        if (el < y - x || el > y + x)
            throw InternalInconsistency("linearization support escaped [y-x, y+x] at (" +
                                        std::to_string(x) + "," + std::to_string(y) + ")");
        sum += v[k];
        atoms.push_back({el, Scalar::exact(v[k])});
    }
    if (sum != 1)
        throw InternalInconsistency("linearization row (" + std::to_string(x) + "," +
                                    std::to_string(y) + ") sums to " + format_rational(sum));
    return FiniteMeasure::from_atoms(std::move(atoms));
}

}  // namespace

LinearizationRows linearization_table(const Recurrence& R, int nmax) {
    if (nmax < 0) throw PreconditionFailed("nmax", "nmax must be nonnegative");
    if (auto bound = R.level_bound(); bound && *bound < nmax)
        throw PreconditionFailed("coeffs-exhausted",
                                 "recurrence lists " + std::to_string(*bound) +
                                     " levels but nmax = " + std::to_string(nmax) +
                                     " needs that many");
    LinearizationRows rows;
    const std::size_t width = static_cast<std::size_t>(nmax) + 1;
    for (Element y = 0; y <= nmax; ++y) {
        // Q(x) = coefficients of P_x * P_y, advanced in x by the recurrence:
        // Q(x+1) = (x-multiplication(Q(x)) - b_x Q(x) - c_x Q(x-1)) / a_x.
        Coefficients prev;
        Coefficients cur(width, Rational(0));
        cur[static_cast<std::size_t>(y)] = 1;
        rows.insert({{0, y}, row_measure(cur, 0, y)});
        const Element xmax = std::min(y, nmax - y);
        for (Element x = 0; x < xmax; ++x) {
            RecurrenceCoeffs rc = R.at(x);
            Coefficients next = multiply_by_x(R, cur);
            for (std::size_t k = 0; k < width; ++k) {
                if (rc.b != 0) next[k] -= rc.b * cur[k];
                if (x > 0 && prev[k] != 0) next[k] -= rc.c * prev[k];
                if (next[k] != 0) next[k] /= rc.a;
            }
            prev = std::move(cur);
            cur = std::move(next);
            rows.insert({{x + 1, y}, row_measure(cur, x + 1, y)});
        }
    }
    return rows;
}

Hypergroup to_hypergroup(LinearizationRows rows, int nmax, std::string provenance) {
    return Hypergroup(nmax, 0, std::move(rows), std::move(provenance));
}

Hypergroup polynomial_hypergroup(const Recurrence& R, int nmax) {
    return to_hypergroup(linearization_table(R, nmax), nmax, R.name());
}

}  // namespace hypereq
