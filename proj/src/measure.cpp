#include "hypereq/measure.hpp"

#include <algorithm>

#include "hypereq/errors.hpp"

namespace hypereq {

FiniteMeasure FiniteMeasure::from_atoms(std::vector<Atom> atoms) {
    FiniteMeasure m;
    if (atoms.empty()) return m;
    m.mode_ = atoms.front().second.mode();
    for (const auto& [el, w] : atoms) {
        if (el < 0) throw Error("negative element in measure support");
        if (w.mode() != m.mode_)
            throw MixedModeError("measure with mixed-mode weights");
    }
    std::stable_sort(atoms.begin(), atoms.end(),
                     [](const Atom& a, const Atom& b) { return a.first < b.first; });
    for (auto& [el, w] : atoms) {
        if (!m.atoms_.empty() && m.atoms_.back().first == el)
            m.atoms_.back().second += w;
        else
            m.atoms_.emplace_back(el, w);
    }
    std::erase_if(m.atoms_, [](const Atom& a) { return a.second.is_zero(); });
    return m;
}

FiniteMeasure FiniteMeasure::point_mass(Element x, Mode mode) {
    Scalar one = Scalar::exact(1).to_mode(mode);
    return from_atoms({{x, one}});
}

Scalar FiniteMeasure::total_mass() const {
    Scalar sum = Scalar().to_mode(mode_);
    for (const auto& [el, w] : atoms_) sum += w;
    return sum;
}

Scalar FiniteMeasure::weight(Element x) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), x,
                               [](const Atom& a, Element e) { return a.first < e; });
    if (it != atoms_.end() && it->first == x) return it->second;
    return Scalar().to_mode(mode_);
}

FiniteMeasure FiniteMeasure::to_mode(Mode m) const {
    if (m == mode_) return *this;
    std::vector<Atom> converted;
    converted.reserve(atoms_.size());
    for (const auto& [el, w] : atoms_) converted.emplace_back(el, w.to_mode(m));
    return from_atoms(std::move(converted));
}

bool FiniteMeasure::nonnegative(const Tolerance& tol) const {
    for (const auto& [el, w] : atoms_) {
        if (mode_ == Mode::exact) {
            if (w.sign() < 0) return false;
        } else if (w.dbl() < -tol.atol) {
            return false;
        }
    }
    return true;
}

bool FiniteMeasure::normalized(const Tolerance& tol) const {
    return close(total_mass(), Scalar::exact(1).to_mode(mode_), tol);
}

bool FiniteMeasure::is_point_mass_at(Element x, const Tolerance& tol) const {
    if (mode_ == Mode::exact) return *this == point_mass(x);
    return measures_close(*this, point_mass(x, mode_), tol);
}

bool operator==(const FiniteMeasure& a, const FiniteMeasure& b) {
    if (a.atoms_.size() != b.atoms_.size()) return false;
    for (std::size_t i = 0; i < a.atoms_.size(); ++i) {
        if (a.atoms_[i].first != b.atoms_[i].first) return false;
        if (!(a.atoms_[i].second == b.atoms_[i].second)) return false;
    }
    return true;
}

bool measures_close(const FiniteMeasure& a, const FiniteMeasure& b, const Tolerance& tol) {
    if (a.mode() != b.mode())
        throw MixedModeError("measures_close() between measures of different modes");
    std::size_t i = 0, j = 0;
    const auto& xs = a.atoms();
    const auto& ys = b.atoms();
    Scalar zero = Scalar().to_mode(a.mode());
    while (i < xs.size() || j < ys.size()) {
        if (j == ys.size() || (i < xs.size() && xs[i].first < ys[j].first)) {
            if (!close(xs[i].second, zero, tol)) return false;
            ++i;
        } else if (i == xs.size() || ys[j].first < xs[i].first) {
            if (!close(ys[j].second, zero, tol)) return false;
            ++j;
        } else {
            if (!close(xs[i].second, ys[j].second, tol)) return false;
            ++i;
            ++j;
        }
    }
    return true;
}

}  // namespace hypereq
