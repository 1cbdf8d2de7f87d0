#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypereq/complex.hpp"
#include "hypereq/measure.hpp"

namespace hypereq {

// Complex-valued function on the truncated ground set {0,...,nmax}. Either a
// bare value table or a named parametric family (exponential / sine /
// additive / constant); families keep their parameters for serialization but
// are resolved to a value table up front, which makes evaluation total and
// trivially pure.
class HFunction {
public:
    struct FamilyDescriptor {
        std::string family;
        Complex parameter;  // lambda for exponential/sine, the constant otherwise
    };

    HFunction() = default;

    static HFunction table(std::vector<Complex> values, std::string label = "table");
    static HFunction family(FamilyDescriptor desc, std::vector<Complex> values,
                            std::string label);
    static HFunction constant(const Complex& value, int nmax);

    // Value at n; throws Error outside {0,...,nmax}.
    const Complex& operator()(Element n) const;

    int nmax() const { return static_cast<int>(values_.size()) - 1; }
    const std::vector<Complex>& values() const { return values_; }
    Mode mode() const { return mode_; }
    const std::string& label() const { return label_; }
    const std::optional<FamilyDescriptor>& descriptor() const { return descriptor_; }

    HFunction to_mode(Mode m) const;

    // True when every value is zero (exactly; floating atoms below atol count
    // as zero).
    bool identically_zero(const Tolerance& tol) const;

private:
    std::vector<Complex> values_;
    std::optional<FamilyDescriptor> descriptor_;
    std::string label_;
    Mode mode_ = Mode::exact;
};

// Pointwise combinations used by the solution-family builders.
HFunction fn_scale(const Complex& a, const HFunction& f, std::string label = "");
HFunction fn_linear(const Complex& a, const HFunction& f, const Complex& b,
                    const HFunction& g, std::string label = "");

}  // namespace hypereq
