#include "hypereq/classify.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "hypereq/errors.hpp"
#include "hypereq/families.hpp"

namespace hypereq {

const char* case_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::T1_I: return "T1_I";
        case CaseTag::T1_II: return "T1_II";
        case CaseTag::T1_III: return "T1_III";
        case CaseTag::T2_I: return "T2_I";
        case CaseTag::T2_II: return "T2_II";
        case CaseTag::T2_III: return "T2_III";
        case CaseTag::T2_IV: return "T2_IV";
        case CaseTag::NOT_A_SOLUTION: return "NOT_A_SOLUTION";
    }
    throw Error("unknown case tag");
}

namespace {

std::string pair_text(std::pair<Element, Element> p) {
    return "(" + std::to_string(p.first) + ", " + std::to_string(p.second) + ")";
}

// Two parameter estimates count as one parameter: exact mode demands
// equality, floating mode agreement within rtol relative to the first.
bool estimates_agree(const Complex& a, const Complex& b, Mode m, double rtol) {
    if (m == Mode::exact) return a == b;
    return std::abs(a.approx() - b.approx()) <= rtol * (1.0 + std::abs(a.approx()));
}

// Elements carrying the largest |f|, nonzero only, ties broken by index.
std::vector<Element> largest_elements(const HFunction& f, std::size_t count) {
    std::vector<std::pair<Scalar, Element>> keyed;
    for (int n = 0; n <= f.nmax(); ++n) {
        Scalar mag = f(n).mag();
        if (!mag.is_zero()) keyed.push_back({std::move(mag), n});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return b.first < a.first;
        return a.second < b.second;
    });
    std::vector<Element> out;
    for (const auto& [mag, n] : keyed) {
        out.push_back(n);
        if (out.size() == count) break;
    }
    return out;
}

// Tabulated pairs with the largest |f(x)f(y)|, nonzero only, lexicographic
// tie-break. Restricting to tabulated pairs keeps every later translate()
// well-defined on a truncated table.
std::vector<std::pair<Element, Element>> largest_pairs(const Hypergroup& H,
                                                       const HFunction& f,
                                                       std::size_t count) {
    using Keyed = std::pair<Scalar, std::pair<Element, Element>>;
    std::vector<Keyed> keyed;
    for (auto [x, y] : H.pairs()) {
        Scalar mag = f(x).mag() * f(y).mag();
        if (!mag.is_zero()) keyed.push_back({std::move(mag), {x, y}});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
        if (a.first != b.first) return b.first < a.first;
        return a.second < b.second;
    });
    std::vector<std::pair<Element, Element>> out;
    for (const auto& [mag, p] : keyed) {
        out.push_back(p);
        if (out.size() == count) break;
    }
    return out;
}

// kappa with A = kappa*B pointwise, when it exists.
std::optional<Complex> proportionality_ratio(const HFunction& A, const HFunction& B,
                                             Mode m, double rtol) {
    std::vector<Element> anchor = largest_elements(B, 1);
    if (anchor.empty()) return std::nullopt;
    Complex kappa = A(anchor[0]) / B(anchor[0]);
    for (int n = 0; n <= A.nmax(); ++n)
        if (!estimates_agree(A(n), kappa * B(n), m, rtol)) return std::nullopt;
    return kappa;
}

// Attaches the family parameter to a value table that matches n -> P_n(lam)
// for the supplied recurrence; leaves the table untouched otherwise.
HFunction attach_exponential_fit(HFunction fn, const Recurrence* rec,
                                 const ClassifierConfig& cfg) {
    if (!rec || fn.nmax() < 1) return fn;
    RecurrenceCoeffs rc = rec->at(0);
    const Mode m = fn.mode();
    // P_1(z) = (z - b_0)/a_0, so the candidate parameter is a_0*fn(1) + b_0.
    Complex lam = Complex::exact(rc.a).to_mode(m) * fn(1) + Complex::exact(rc.b).to_mode(m);
    HFunction member = exponential_fn(*rec, lam, fn.nmax());
    double dev = function_deviation(fn, member);
    bool matches = m == Mode::exact ? dev == 0.0 : dev <= cfg.recovery_tol;
    if (!matches) return fn;
    return HFunction::family({"exponential", lam}, fn.values(), fn.label());
}

double reconstruction_deviation(const HFunction& f_in, const HFunction& g_in,
                                const SolutionPair& rebuilt) {
    return std::max(function_deviation(f_in, rebuilt.f),
                    function_deviation(g_in, rebuilt.g));
}

void assert_reconstruction(double dev, Mode m, const ClassifierConfig& cfg) {
    bool ok = m == Mode::exact ? dev == 0.0 : dev <= cfg.reconstruction_tol;
    if (!ok)
        throw InternalInconsistency("the rebuilt pair deviates from the input by " +
                                    format_double17(dev));
}

template <typename Build>
SolutionPair rebuild_or_inconsistent(Build build) {
    try {
        return build();
    } catch (const PreconditionFailed& e) {
        throw InternalInconsistency(std::string("rebuilding from recovered parameters "
                                                "failed: ") +
                                    e.what());
    }
}

void require_matching_domains(const Hypergroup& H, const HFunction& f, const HFunction& g) {
    if (f.nmax() != H.nmax() || g.nmax() != H.nmax())
        throw PreconditionFailed("domain",
                                 "f and g must be defined on the hypergroup's full domain");
}

Complex imaginary_unit(Mode m) {
    return Complex(Scalar().to_mode(m), Scalar::exact(1).to_mode(m));
}

// Shared estimate-collection step: values[i] must all agree with values[0].
void require_consistent(const std::vector<Complex>& estimates, Mode m, double rtol,
                        const char* what) {
    for (std::size_t i = 1; i < estimates.size(); ++i)
        if (!estimates_agree(estimates[0], estimates[i], m, rtol))
            throw LambdaInconsistent(std::string("independent estimates of ") + what +
                                     " disagree beyond the recovery tolerance");
}

}  // namespace

ClassificationResult classify_sine(const Hypergroup& H, const HFunction& f_in,
                                   const HFunction& g_in, const ClassifierConfig& cfg,
                                   const Recurrence* rec) {
    const Mode m = join(H.mode(), join(f_in.mode(), g_in.mode()));
    const HFunction f = f_in.to_mode(m);
    const HFunction g = g_in.to_mode(m);
    require_matching_domains(H, f, g);

    ClassificationResult res;
    EquationResidual gate = residual_sine(H, f, g, cfg.equation_tol);
    res.residual_input = std::abs((gate.max_abs.to_mode(Mode::floating)).dbl());

    if (f.identically_zero(cfg.equation_tol) || g.identically_zero(cfg.equation_tol)) {
        res.notes.push_back("f and g must both be non-identically zero; no solution family applies");
        return res;
    }
    if (!gate.pass) {
        res.notes.push_back("sine-cosine residual exceeds tolerance at pair " +
                            pair_text(gate.worst));
        return res;
    }

    const Element o = H.identity();
    const Complex one = Complex::one(m);

    if (!estimates_agree(g(o), one, m, cfg.equation_tol.rtol)) {
        // Setting y = identity in the equation forces f and g proportional:
        // f = g/c, and then 2g must be an exponential.
        std::vector<Element> probes = largest_elements(f, 5);
        std::vector<Complex> estimates;
        for (Element e : probes) {
            if (f(e).is_zero()) continue;
            estimates.push_back(g(e) / f(e));
        }
        if (estimates.empty())
            throw LambdaInconsistent("f has no nonzero value to recover c from");
        require_consistent(estimates, m, cfg.recovery_tol, "c");
        Complex c = estimates[0];
        if (c.is_zero())
            throw LambdaInconsistent("the ratio g/f vanished although g(identity) != 1");
        HFunction M = fn_scale(Complex::exact(2).to_mode(m), g, "2g");
        CheckOutcome expo = is_exponential(H, M, cfg.equation_tol);
        if (!expo.ok)
            throw InternalInconsistency(
                "g(identity) != 1 forces 2g to be an exponential; the check failed with "
                "residual " +
                expo.residual.max_abs.str() + " at pair " + pair_text(expo.residual.worst));
        SolutionPair rebuilt =
            rebuild_or_inconsistent([&] { return build_t1_ii(H, M, c, cfg.equation_tol); });
        double dev = reconstruction_deviation(f, g, rebuilt);
        assert_reconstruction(dev, m, cfg);
        res.tag = CaseTag::T1_II;
        res.c = c;
        res.M = attach_exponential_fit(std::move(M), rec, cfg);
        res.residual_reconstruction = dev;
        res.notes.push_back("g(identity) != 1: f and g are proportional halves of one "
                            "exponential");
        return res;
    }

    CheckOutcome g_expo = is_exponential(H, g, cfg.equation_tol);
    if (g_expo.ok) {
        CheckOutcome sine = is_m_sine(H, f, g, cfg.equation_tol);
        if (!sine.ok)
            throw InternalInconsistency(
                "g is an exponential, so the equation makes f a g-sine function; the check "
                "failed with residual " +
                sine.residual.max_abs.str());
        SolutionPair rebuilt =
            rebuild_or_inconsistent([&] { return build_t1_i(H, g, f, cfg.equation_tol); });
        double dev = reconstruction_deviation(f, g, rebuilt);
        assert_reconstruction(dev, m, cfg);
        res.tag = CaseTag::T1_I;
        res.M = attach_exponential_fit(g, rec, cfg);
        res.residual_reconstruction = dev;
        res.notes.push_back("g is an exponential and f is a g-sine function");
        return res;
    }

    // Cauchy-difference branch: g(x*y) - g(x)g(y) = lambda * f(x)f(y).
    std::vector<std::pair<Element, Element>> probes = largest_pairs(H, f, 5);
    if (probes.empty())
        throw LambdaInconsistent("no tabulated pair has f(x)f(y) != 0; the Cauchy "
                                 "difference cannot be read off");
    std::vector<Complex> estimates;
    for (auto [x, y] : probes) {
        Complex difference = translate(H, g, x, y) - g(x) * g(y);
        estimates.push_back(difference / (f(x) * f(y)));
    }
    require_consistent(estimates, m, cfg.recovery_tol, "lambda");
    Complex lambda = estimates[0];
    bool lambda_zero = m == Mode::exact ? lambda.is_zero()
                                        : std::abs(lambda.approx()) <= cfg.equation_tol.atol;
    if (lambda_zero)
        throw InternalInconsistency(
            "the Cauchy difference vanished although g failed the exponential check");

    Complex d = principal_sqrt(-lambda);
    Complex i = imaginary_unit(m);
    HFunction df = fn_scale(d, f, "d*f");
    HFunction M = fn_linear(one, g, i, df, "g+i*d*f");
    HFunction N = fn_linear(one, g, -i, df, "g-i*d*f");
    Complex c = d * i;

    CheckOutcome m_expo = is_exponential(H, M, cfg.equation_tol);
    CheckOutcome n_expo = is_exponential(H, N, cfg.equation_tol);
    if (!m_expo.ok || !n_expo.ok)
        throw InternalInconsistency(
            "the decomposition g +- i*d*f must consist of exponentials; residuals " +
            m_expo.residual.max_abs.str() + " and " + n_expo.residual.max_abs.str());

    SolutionPair rebuilt =
        rebuild_or_inconsistent([&] { return build_t1_iii(H, M, N, c, cfg.equation_tol); });
    double dev = reconstruction_deviation(f, g, rebuilt);
    assert_reconstruction(dev, m, cfg);
    res.tag = CaseTag::T1_III;
    res.c = c;
    res.M = attach_exponential_fit(std::move(M), rec, cfg);
    res.N = attach_exponential_fit(std::move(N), rec, cfg);
    res.residual_reconstruction = dev;
    res.notes.push_back("swapping M and N while negating c reproduces the same pair");
    return res;
}

ClassificationResult classify_cosine(const Hypergroup& H, const HFunction& f_in,
                                     const HFunction& g_in, const ClassifierConfig& cfg,
                                     const Recurrence* rec) {
    const Mode m = join(H.mode(), join(f_in.mode(), g_in.mode()));
    const HFunction f = f_in.to_mode(m);
    const HFunction g = g_in.to_mode(m);
    require_matching_domains(H, f, g);

    ClassificationResult res;
    EquationResidual gate = residual_cosine(H, f, g, cfg.equation_tol);
    res.residual_input = std::abs((gate.max_abs.to_mode(Mode::floating)).dbl());

    if (f.identically_zero(cfg.equation_tol) || g.identically_zero(cfg.equation_tol)) {
        res.notes.push_back("f and g must both be non-identically zero; no solution family applies");
        return res;
    }
    if (!gate.pass) {
        res.notes.push_back("cosine-sine residual exceeds tolerance at pair " +
                            pair_text(gate.worst));
        return res;
    }

    const Element o = H.identity();
    const Complex one = Complex::one(m);

    if (!estimates_agree(g(o), one, m, cfg.equation_tol.rtol)) {
        // Setting y = identity forces f = c*g, and (1-c^2)g is an exponential.
        std::vector<Element> probes = largest_elements(f, 5);
        std::vector<Complex> estimates;
        for (Element e : probes) {
            if (g(e).is_zero())
                throw LambdaInconsistent("f and g are not proportional: g vanishes where "
                                         "f does not");
            estimates.push_back(f(e) / g(e));
        }
        if (estimates.empty())
            throw LambdaInconsistent("f has no nonzero value to recover c from");
        require_consistent(estimates, m, cfg.recovery_tol, "c");
        Complex c = estimates[0];
        Complex denom = one - c * c;
        bool denom_zero = m == Mode::exact ? denom.is_zero()
                                           : std::abs(denom.approx()) <= cfg.equation_tol.atol;
        if (denom_zero)
            throw InternalInconsistency(
                "recovered c = +-1, which is incompatible with a finite g(identity)");
        HFunction M = fn_scale(denom, g, "(1-c^2)*g");
        CheckOutcome expo = is_exponential(H, M, cfg.equation_tol);
        if (!expo.ok)
            throw InternalInconsistency(
                "g(identity) != 1 forces (1-c^2)g to be an exponential; the check failed "
                "with residual " +
                expo.residual.max_abs.str());
        SolutionPair rebuilt =
            rebuild_or_inconsistent([&] { return build_t2_i(H, M, c, cfg.equation_tol); });
        double dev = reconstruction_deviation(f, g, rebuilt);
        assert_reconstruction(dev, m, cfg);
        res.tag = CaseTag::T2_I;
        res.c = c;
        res.M = attach_exponential_fit(std::move(M), rec, cfg);
        res.residual_reconstruction = dev;
        res.notes.push_back("g(identity) != 1: f and g are proportional to one exponential");
        return res;
    }

    // Recover the shift lambda from
    // f(x*y) = f(x)g(y) + 2*lambda*f(x)f(y) + f(y)g(x).
    std::vector<std::pair<Element, Element>> probes = largest_pairs(H, f, 5);
    if (probes.empty())
        throw LambdaInconsistent("no tabulated pair has f(x)f(y) != 0; the shift lambda "
                                 "cannot be read off");
    const Complex two = Complex::exact(2).to_mode(m);
    std::vector<Complex> estimates;
    for (auto [x, y] : probes) {
        Complex difference = translate(H, f, x, y) - f(x) * g(y) - f(y) * g(x);
        estimates.push_back(difference / (two * f(x) * f(y)));
    }
    require_consistent(estimates, m, cfg.recovery_tol, "lambda");
    Complex lambda = estimates[0];

    bool lambda_zero = m == Mode::exact ? lambda.is_zero()
                                        : std::abs(lambda.approx()) <= cfg.recovery_tol;
    if (lambda_zero) {
        // The modified difference vanished: the pair satisfies the sine-cosine
        // equation too, and its sine-type decomposition transfers.
        ClassificationResult sub = classify_sine(H, f, g, cfg, rec);
        switch (sub.tag) {
            case CaseTag::NOT_A_SOLUTION:
                res.notes = sub.notes;
                res.notes.push_back("the zero-shift delegation found no sine-type case");
                return res;
            case CaseTag::T1_III: {
                // f = (M-N)/(2c) with c = +-i matches the fourth family at
                // lambda = 0, d = 1, sign = +-1.
                Complex i = imaginary_unit(m);
                int sign;
                if (estimates_agree(*sub.c, i, m, cfg.recovery_tol)) {
                    sign = 1;
                } else if (estimates_agree(*sub.c, -i, m, cfg.recovery_tol)) {
                    sign = -1;
                } else {
                    throw InternalInconsistency(
                        "zero-shift decomposition needs c = +-i, got " + sub.c->str());
                }
                Complex lambda0 = Complex::zero(m);
                SolutionPair rebuilt = rebuild_or_inconsistent([&] {
                    return build_t2_iv(H, *sub.M, *sub.N, lambda0, sign, cfg.equation_tol);
                });
                double dev = reconstruction_deviation(f, g, rebuilt);
                assert_reconstruction(dev, m, cfg);
                res.tag = CaseTag::T2_IV;
                res.lambda = lambda0;
                res.d = one;
                res.sign = sign;
                res.M = sub.M;
                res.N = sub.N;
                res.residual_reconstruction = dev;
                res.notes.push_back("zero shift: the sine-type two-exponential "
                                    "decomposition applies with lambda = 0");
                res.notes.push_back("swapping M and N while flipping the sign reproduces "
                                    "the same pair");
                return res;
            }
            case CaseTag::T1_I:
                throw InternalInconsistency(
                    "g is an exponential yet f(x)f(y) does not vanish on tabulated pairs; "
                    "the two equations conflict");
            default:
                throw InternalInconsistency(
                    std::string("zero-shift delegation returned the impossible case ") +
                    case_name(sub.tag));
        }
    }

    bool lambda_unit = estimates_agree(lambda * lambda, one, m, cfg.recovery_tol);
    if (lambda_unit) {
        // h = g + lambda*f is an exponential and g = h - lambda*f.
        HFunction h = fn_linear(one, g, lambda, f, "g+lambda*f");
        CheckOutcome expo = is_exponential(H, h, cfg.equation_tol);
        if (!expo.ok)
            throw InternalInconsistency(
                "lambda^2 = 1 forces g + lambda*f to be an exponential; the check failed "
                "with residual " +
                expo.residual.max_abs.str());
        int sign = lambda.re().approx() < 0.0 ? 1 : -1;  // g = M + (-lambda)*f
        SolutionPair rebuilt = rebuild_or_inconsistent(
            [&] { return build_t2_iii(H, h, f, sign, cfg.equation_tol); });
        double dev = reconstruction_deviation(f, g, rebuilt);
        assert_reconstruction(dev, m, cfg);
        res.tag = CaseTag::T2_III;
        res.lambda = lambda;
        res.sign = sign;
        res.M = attach_exponential_fit(std::move(h), rec, cfg);
        res.residual_reconstruction = dev;
        res.notes.push_back("g = M + sign*f with sign = -lambda");
        return res;
    }

    Complex d = principal_sqrt(one - lambda * lambda);
    Complex i = imaginary_unit(m);
    HFunction h = fn_linear(one, g, lambda, f, "g+lambda*f");
    HFunction M = fn_linear(one, h, i * d, f, "h+i*d*f");
    HFunction N = fn_linear(one, h, -(i * d), f, "h-i*d*f");

    if (auto kappa = proportionality_ratio(M, N, m, cfg.recovery_tol)) {
        // Proportional exponential halves collapse to the single-exponential
        // family. Unreachable when g(identity) = 1; kept for the truncated
        // tables where the dichotomy could in principle leak.
        (void)kappa;
        auto ratio = proportionality_ratio(f, g, m, cfg.recovery_tol);
        if (!ratio)
            throw InternalInconsistency(
                "M and N are proportional but f and g are not; no family fits");
        Complex c = *ratio;
        Complex denom = one - c * c;
        if (denom.is_zero() || c.is_zero())
            throw InternalInconsistency(
                "proportional collapse recovered an inadmissible c = " + c.str());
        HFunction M2 = fn_scale(denom, g, "(1-c^2)*g");
        CheckOutcome expo = is_exponential(H, M2, cfg.equation_tol);
        if (!expo.ok)
            throw InternalInconsistency(
                "proportional collapse requires (1-c^2)g to be an exponential");
        SolutionPair rebuilt =
            rebuild_or_inconsistent([&] { return build_t2_i(H, M2, c, cfg.equation_tol); });
        double dev = reconstruction_deviation(f, g, rebuilt);
        assert_reconstruction(dev, m, cfg);
        res.tag = CaseTag::T2_I;
        res.c = c;
        res.M = attach_exponential_fit(std::move(M2), rec, cfg);
        res.residual_reconstruction = dev;
        res.notes.push_back("the two exponential halves are proportional; collapsed to "
                            "the single-exponential family");
        return res;
    }

    CheckOutcome m_expo = is_exponential(H, M, cfg.equation_tol);
    CheckOutcome n_expo = is_exponential(H, N, cfg.equation_tol);
    if (!m_expo.ok || !n_expo.ok)
        throw InternalInconsistency(
            "the decomposition h +- i*d*f must consist of exponentials; residuals " +
            m_expo.residual.max_abs.str() + " and " + n_expo.residual.max_abs.str());

    SolutionPair rebuilt = rebuild_or_inconsistent(
        [&] { return build_t2_iv(H, M, N, lambda, 1, cfg.equation_tol); });
    double dev = reconstruction_deviation(f, g, rebuilt);
    assert_reconstruction(dev, m, cfg);
    res.tag = CaseTag::T2_IV;
    res.lambda = lambda;
    res.d = d;
    res.sign = 1;
    res.M = attach_exponential_fit(std::move(M), rec, cfg);
    res.N = attach_exponential_fit(std::move(N), rec, cfg);
    res.residual_reconstruction = dev;
    res.notes.push_back("sign fixed to +1; the opposite sign corresponds to swapping M "
                        "and N");
    return res;
}

}  // namespace hypereq
