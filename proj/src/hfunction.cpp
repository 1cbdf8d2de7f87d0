#include "hypereq/hfunction.hpp"

#include "hypereq/errors.hpp"

namespace hypereq {

namespace {

Mode common_mode(const std::vector<Complex>& values, const char* what) {
    if (values.empty()) throw Error(std::string(what) + ": empty value table");
    Mode m = values.front().mode();
    for (const auto& v : values)
        if (v.mode() != m) throw MixedModeError(std::string(what) + ": mixed-mode value table");
    return m;
}

}  // namespace

HFunction HFunction::table(std::vector<Complex> values, std::string label) {
    HFunction f;
    f.mode_ = common_mode(values, "HFunction::table");
    f.values_ = std::move(values);
    f.label_ = std::move(label);
    return f;
}

HFunction HFunction::family(FamilyDescriptor desc, std::vector<Complex> values,
                            std::string label) {
    HFunction f = table(std::move(values), std::move(label));
    f.descriptor_ = std::move(desc);
    return f;
}

HFunction HFunction::constant(const Complex& value, int nmax) {
    if (nmax < 0) throw Error("HFunction::constant: negative domain bound");
    std::vector<Complex> values(static_cast<std::size_t>(nmax) + 1, value);
    return family({"constant", value}, std::move(values), "constant " + value.str());
}

const Complex& HFunction::operator()(Element n) const {
    if (n < 0 || n >= static_cast<int>(values_.size()))
        throw Error("HFunction evaluated outside its domain: n=" + std::to_string(n));
    return values_[static_cast<std::size_t>(n)];
}

HFunction HFunction::to_mode(Mode m) const {
    if (m == mode_) return *this;
    std::vector<Complex> converted;
    converted.reserve(values_.size());
    for (const auto& v : values_) converted.push_back(v.to_mode(m));
    HFunction f = table(std::move(converted), label_);
    f.descriptor_ = descriptor_;
    return f;
}

bool HFunction::identically_zero(const Tolerance& tol) const {
    for (const auto& v : values_) {
        if (mode_ == Mode::exact) {
            if (!v.is_zero()) return false;
        } else if (v.mag().dbl() > tol.atol) {
            return false;
        }
    }
    return true;
}

HFunction fn_scale(const Complex& a, const HFunction& f, std::string label) {
    std::vector<Complex> values;
    values.reserve(f.values().size());
    for (const auto& v : f.values()) values.push_back(a * v);
    return HFunction::table(std::move(values),
                            label.empty() ? "scaled " + f.label() : std::move(label));
}

HFunction fn_linear(const Complex& a, const HFunction& f, const Complex& b,
                    const HFunction& g, std::string label) {
    if (f.nmax() != g.nmax()) throw Error("fn_linear: mismatched domains");
    std::vector<Complex> values;
    values.reserve(f.values().size());
    for (int n = 0; n <= f.nmax(); ++n) values.push_back(a * f(n) + b * g(n));
    return HFunction::table(std::move(values), std::move(label));
}

}  // namespace hypereq
