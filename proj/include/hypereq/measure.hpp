#pragma once

#include <utility>
#include <vector>

#include "hypereq/scalar.hpp"

namespace hypereq {

// Ground-set element of a discrete hypergroup: an index into {0,...,nmax}.
using Element = int;

// Finitely supported real measure on the ground set. Atoms are kept sorted by
// element with duplicates merged and exact zero weights dropped, so structural
// equality is semantic equality. Probability-measure invariants
// (nonnegativity, unit total mass) are *checked*, not enforced: defective
// measures stay representable so axiom checking can report them.
class FiniteMeasure {
public:
    using Atom = std::pair<Element, Scalar>;

    FiniteMeasure() = default;

    // Canonicalizes: sorts, merges duplicate elements, drops zero weights.
    // All weights must share one arithmetic mode.
    static FiniteMeasure from_atoms(std::vector<Atom> atoms);

    static FiniteMeasure point_mass(Element x, Mode mode = Mode::exact);

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }
    std::size_t size() const { return atoms_.size(); }
    Mode mode() const { return mode_; }

    Element min_element() const { return atoms_.front().first; }
    Element max_element() const { return atoms_.back().first; }

    Scalar total_mass() const;

    // Weight of x (zero scalar in the measure's mode if x unsupported).
    Scalar weight(Element x) const;

    FiniteMeasure to_mode(Mode m) const;

    // Probability-measure invariants, reported as data.
    bool nonnegative(const Tolerance& tol) const;
    bool normalized(const Tolerance& tol) const;
    bool is_point_mass_at(Element x, const Tolerance& tol) const;

    friend bool operator==(const FiniteMeasure& a, const FiniteMeasure& b);
    friend bool operator!=(const FiniteMeasure& a, const FiniteMeasure& b) { return !(a == b); }

private:
    std::vector<Atom> atoms_;
    Mode mode_ = Mode::exact;
};

// Weight-by-weight comparison over the union of supports.
bool measures_close(const FiniteMeasure& a, const FiniteMeasure& b, const Tolerance& tol);

}  // namespace hypereq
