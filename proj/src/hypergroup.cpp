#include "hypereq/hypergroup.hpp"

#include <algorithm>
#include <optional>

#include "hypereq/errors.hpp"

namespace hypereq {

namespace {

Mode joined_mode_of_rows(const std::map<Hypergroup::Key, FiniteMeasure>& rows) {
    Mode m = Mode::exact;
    bool seen = false;
    for (const auto& [key, measure] : rows) {
        (void)key;
        if (!seen) {
            m = measure.mode();
            seen = true;
        } else if (measure.mode() != m) {
            throw MixedModeError("hypergroup rows mix exact and floating measures");
        }
    }
    return m;
}

}  // namespace

Hypergroup::Hypergroup(int nmax, Element identity, std::map<Key, FiniteMeasure> rows,
                       std::string provenance)
    : nmax_(nmax),
      identity_(identity),
      rows_(std::move(rows)),
      provenance_(std::move(provenance)),
      mode_(joined_mode_of_rows(rows_)) {
    if (nmax_ < 0) throw PreconditionFailed("ground-set", "nmax must be nonnegative");
    if (identity_ < 0 || identity_ > nmax_)
        throw PreconditionFailed("ground-set", "identity element outside the ground set");
    for (const auto& [key, measure] : rows_) {
        auto [x, y] = key;
        if (x < 0 || y < 0 || x > nmax_ || y > nmax_)
            throw PreconditionFailed("ground-set", "tabulated pair outside the ground set");
        for (const auto& [z, w] : measure.atoms()) {
            (void)w;
            if (z > nmax_)
                throw PreconditionFailed("ground-set",
                                         "convolution support outside the ground set");
        }
    }
    // Every element used as a coordinate must convolve with the identity;
    // without that row the element is not really part of the table.
    for (const auto& [key, measure] : rows_) {
        (void)measure;
        for (Element e : {key.first, key.second}) {
            if (!defined(e, identity_))
                throw PreconditionFailed(
                    "identity-row", "missing identity row for element " + std::to_string(e));
        }
    }
}

bool Hypergroup::defined(Element x, Element y) const {
    return rows_.count({x, y}) > 0 || rows_.count({y, x}) > 0;
}

const FiniteMeasure& Hypergroup::convolve(Element x, Element y) const {
    auto it = rows_.find({x, y});
    if (it != rows_.end()) return it->second;
    it = rows_.find({y, x});
    if (it != rows_.end()) return it->second;
    throw UntabulatedPair(x, y);
}

std::vector<Hypergroup::Key> Hypergroup::pairs() const {
    std::vector<Key> out;
    out.reserve(rows_.size());
    for (const auto& [key, measure] : rows_) {
        (void)measure;
        out.push_back({std::min(key.first, key.second), std::max(key.first, key.second)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Complex translate(const Hypergroup& H, const HFunction& f, Element x, Element y) {
    const FiniteMeasure& m = H.convolve(x, y);
    Mode mode = join(H.mode(), f.mode());
    Complex acc = Complex::zero(mode);
    for (const auto& [z, w] : m.atoms()) acc = acc + w.to_mode(mode) * f(z).to_mode(mode);
    return acc;
}

FiniteMeasure convolve_measures(const Hypergroup& H, const FiniteMeasure& mu,
                                const FiniteMeasure& nu) {
    Mode mode = join(join(mu.mode(), nu.mode()), H.mode());
    std::vector<FiniteMeasure::Atom> atoms;
    for (const auto& [u, pu] : mu.atoms()) {
        for (const auto& [v, pv] : nu.atoms()) {
            Scalar coeff = pu.to_mode(mode) * pv.to_mode(mode);
            for (const auto& [z, w] : H.convolve(u, v).atoms())
                atoms.push_back({z, coeff * w.to_mode(mode)});
        }
    }
    if (atoms.empty() && mode == Mode::floating)
        atoms.push_back({0, Scalar::floating(0.0)});  // keep the mode, weight drops out
    return FiniteMeasure::from_atoms(std::move(atoms));
}

namespace {

// Largest per-element discrepancy between two measures over the merged
// support; nullopt when they agree (exactly, or within tol in floating mode).
struct MeasureDiff {
    Element where;
    Scalar gap;
};

std::optional<MeasureDiff> worst_disagreement(const FiniteMeasure& a, const FiniteMeasure& b,
                                              const Tolerance& tol) {
    std::optional<MeasureDiff> worst;
    auto consider = [&](Element z) {
        Scalar wa = a.weight(z);
        Scalar wb = b.weight(z);
        if (close(wa, wb, tol)) return;
        Scalar gap = (wa - wb).abs();
        if (!worst || worst->gap < gap) worst = MeasureDiff{z, gap};
    };
    for (const auto& [z, w] : a.atoms()) {
        (void)w;
        consider(z);
    }
    for (const auto& [z, w] : b.atoms()) {
        (void)w;
        consider(z);
    }
    return worst;
}

bool left_grouping_tabulated(const Hypergroup& H, Element x, Element y, Element z) {
    if (!H.defined(x, y)) return false;
    for (const auto& [k, w] : H.convolve(x, y).atoms()) {
        (void)w;
        if (!H.defined(k, z)) return false;
    }
    return true;
}

}  // namespace

AxiomReport check_axioms(const Hypergroup& H, int depth, const Tolerance& tol) {
    AxiomReport report;
    report.depth = depth;
    report.mode = H.mode();
    const Element d = static_cast<Element>(std::min(depth, H.nmax()));
    const bool exact = H.mode() == Mode::exact;
    const Scalar one = exact ? Scalar::exact(1) : Scalar::floating(1.0);

    auto fail = [](AxiomCheckResult& r, AxiomWitness w) {
        r.pass = false;
        r.witnesses.push_back(std::move(w));
    };

    for (Element x = 0; x <= d; ++x) {
        for (Element y = x; y <= d; ++y) {
            if (!H.defined(x, y)) continue;
            const FiniteMeasure& m = H.convolve(x, y);
            for (const auto& [z, w] : m.atoms()) {
                bool bad = exact ? w.sign() < 0 : w.approx() < -tol.atol;
                if (bad)
                    fail(report.nonnegativity,
                         {x, y, -1, z, w.str(), "negative convolution weight"});
            }
            Scalar mass = m.total_mass();
            if (!close(mass, one, tol))
                fail(report.normalization,
                     {x, y, -1, -1, mass.str(), "convolution mass is not 1"});
        }
    }

    for (Element x = 0; x <= d; ++x) {
        if (!H.defined(x, H.identity())) continue;
        if (!H.convolve(x, H.identity()).is_point_mass_at(x, tol))
            fail(report.identity,
                 {x, H.identity(), -1, -1, "", "x * identity is not the point mass at x"});
    }

    // The accessor already answers symmetrically; this only bites when a file
    // tabulates both orders of a pair with different measures.
    for (const auto& [key, m] : H.rows()) {
        auto [x, y] = key;
        if (x >= y || x > d || y > d) continue;
        auto it = H.rows().find({y, x});
        if (it == H.rows().end()) continue;
        if (auto diff = worst_disagreement(m, it->second, tol))
            fail(report.commutativity,
                 {x, y, -1, diff->where, diff->gap.str(), "x*y and y*x disagree"});
    }

    for (Element x = 0; x <= d; ++x) {
        for (Element y = 0; y <= d; ++y) {
            for (Element z = 0; z <= d; ++z) {
                if (!left_grouping_tabulated(H, x, y, z)) continue;
                if (!left_grouping_tabulated(H, z, y, x)) continue;
                FiniteMeasure lhs = convolve_measures(
                    H, H.convolve(x, y), FiniteMeasure::point_mass(z, H.mode()));
                FiniteMeasure rhs = convolve_measures(
                    H, FiniteMeasure::point_mass(x, H.mode()), H.convolve(y, z));
                if (auto diff = worst_disagreement(lhs, rhs, tol))
                    fail(report.associativity,
                         {x, y, z, diff->where, diff->gap.str(),
                          "(x*y)*z and x*(y*z) disagree"});
            }
        }
    }

    return report;
}

}  // namespace hypereq
