#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hypereq/hfunction.hpp"
#include "hypereq/measure.hpp"

namespace hypereq {

struct AxiomWitness {
    Element x = -1;
    Element y = -1;
    Element z = -1;  // associativity only
    Element k = -1;  // offending support element, when meaningful
    std::string value;
    std::string detail;
};

struct AxiomCheckResult {
    bool pass = true;
    std::vector<AxiomWitness> witnesses;
};

struct AxiomReport {
    int depth = 0;
    Mode mode = Mode::exact;
    AxiomCheckResult nonnegativity;
    AxiomCheckResult normalization;
    AxiomCheckResult identity;
    AxiomCheckResult commutativity;
    AxiomCheckResult associativity;
    bool all_pass() const {
        return nonnegativity.pass && normalization.pass && identity.pass &&
               commutativity.pass && associativity.pass;
    }
};

// Discrete commutative hypergroup as a truncated convolution table: the
// ground set is {0,...,nmax} and a measure is stored for each tabulated pair.
// The structure is conceptually infinite; only pairs whose convolution
// support provably fits inside the truncation are tabulated. Immutable after
// construction.
class Hypergroup {
public:
    using Key = std::pair<Element, Element>;

    // Rows are stored as given (normally one row per unordered pair, x <= y).
    // Construction requires an identity row (x, identity) for every element
    // that appears in the table; everything else is check_axioms' business.
    Hypergroup(int nmax, Element identity, std::map<Key, FiniteMeasure> rows,
               std::string provenance);

    int nmax() const { return nmax_; }
    Element identity() const { return identity_; }
    Mode mode() const { return mode_; }
    const std::string& provenance() const { return provenance_; }
    const std::map<Key, FiniteMeasure>& rows() const { return rows_; }

    bool defined(Element x, Element y) const;

    // The measure realizing x*y. Throws UntabulatedPair when undefined.
    const FiniteMeasure& convolve(Element x, Element y) const;

    // Tabulated unordered pairs, (x, y) with x <= y, in lexicographic order.
    std::vector<Key> pairs() const;

private:
    int nmax_;
    Element identity_;
    std::map<Key, FiniteMeasure> rows_;
    std::string provenance_;
    Mode mode_;
};

// f(x*y): the integral of f against the convolution measure of (x, y).
// Computed in the joined mode of the table and the function.
Complex translate(const Hypergroup& H, const HFunction& f, Element x, Element y);

// Bilinear extension of the convolution to measures: sum of mu(u) nu(v) *
// table(u,v), merged per element with zero weights dropped.
FiniteMeasure convolve_measures(const Hypergroup& H, const FiniteMeasure& mu,
                                const FiniteMeasure& nu);

// Checks the hypergroup axioms on elements <= depth, exactly in exact mode
// and within `tol` in floating mode. Failures are data, not errors.
// Associativity runs over every triple whose two groupings are both fully
// tabulated; triples truncated away are skipped.
AxiomReport check_axioms(const Hypergroup& H, int depth, const Tolerance& tol = {});

}  // namespace hypereq
