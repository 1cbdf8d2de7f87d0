#include "hypereq/equations.hpp"

#include <algorithm>
#include <cmath>

#include "hypereq/errors.hpp"

namespace hypereq {

namespace {

double mag_d(const Complex& z) { return std::abs(z.approx()); }

struct PairTerms {
    Complex lhs;
    Complex rhs;
    double scale;
};

template <typename Eval>
EquationResidual scan_pairs(const Hypergroup& H, Mode mode, const Tolerance& tol,
                            Eval eval) {
    EquationResidual r;
    r.mode = mode;
    r.max_abs = Scalar().to_mode(mode);
    bool first = true;
    for (auto [x, y] : H.pairs()) {
        PairTerms t = eval(x, y);
        Scalar diff = (t.lhs - t.rhs).mag();
        if (first || diff > r.max_abs) {
            r.max_abs = diff;
            r.worst = {x, y};
            first = false;
        }
        if (mode == Mode::floating) {
            double excess = diff.dbl() / (tol.atol + tol.rtol * t.scale);
            r.max_excess = std::max(r.max_excess, excess);
        }
    }
    r.pass = mode == Mode::exact ? r.max_abs.is_zero() : r.max_excess <= 1.0;
    return r;
}

}  // namespace

EquationResidual residual_sine(const Hypergroup& H, const HFunction& f, const HFunction& g,
                               const Tolerance& tol) {
    const Mode m = join(H.mode(), join(f.mode(), g.mode()));
    const HFunction fm = f.to_mode(m);
    const HFunction gm = g.to_mode(m);
    return scan_pairs(H, m, tol, [&](Element x, Element y) {
        Complex lhs = translate(H, fm, x, y);
        Complex t1 = fm(x) * gm(y);
        Complex t2 = fm(y) * gm(x);
        Complex rhs = t1 + t2;
        double scale = std::max({mag_d(lhs), mag_d(rhs), mag_d(t1), mag_d(t2)});
        return PairTerms{lhs, rhs, scale};
    });
}

EquationResidual residual_cosine(const Hypergroup& H, const HFunction& f, const HFunction& g,
                                 const Tolerance& tol) {
    const Mode m = join(H.mode(), join(f.mode(), g.mode()));
    const HFunction fm = f.to_mode(m);
    const HFunction gm = g.to_mode(m);
    return scan_pairs(H, m, tol, [&](Element x, Element y) {
        Complex lhs = translate(H, gm, x, y);
        Complex t1 = gm(x) * gm(y);
        Complex t2 = fm(x) * fm(y);
        Complex rhs = t1 - t2;
        double scale = std::max({mag_d(lhs), mag_d(rhs), mag_d(t1), mag_d(t2)});
        return PairTerms{lhs, rhs, scale};
    });
}

EquationResidual residual_exponential(const Hypergroup& H, const HFunction& g,
                                      const Tolerance& tol) {
    const Mode m = join(H.mode(), g.mode());
    const HFunction gm = g.to_mode(m);
    return scan_pairs(H, m, tol, [&](Element x, Element y) {
        Complex lhs = translate(H, gm, x, y);
        Complex rhs = gm(x) * gm(y);
        double scale = std::max(mag_d(lhs), mag_d(rhs));
        return PairTerms{lhs, rhs, scale};
    });
}

EquationResidual residual_additive(const Hypergroup& H, const HFunction& f,
                                   const Tolerance& tol) {
    const Mode m = join(H.mode(), f.mode());
    const HFunction fm = f.to_mode(m);
    return scan_pairs(H, m, tol, [&](Element x, Element y) {
        Complex lhs = translate(H, fm, x, y);
        Complex t1 = fm(x);
        Complex t2 = fm(y);
        Complex rhs = t1 + t2;
        double scale = std::max({mag_d(lhs), mag_d(rhs), mag_d(t1), mag_d(t2)});
        return PairTerms{lhs, rhs, scale};
    });
}

CheckOutcome is_exponential(const Hypergroup& H, const HFunction& g, const Tolerance& tol) {
    EquationResidual r = residual_exponential(H, g, tol);
    bool ok = r.pass && !g.identically_zero(tol);
    return {ok, std::move(r)};
}

CheckOutcome is_m_sine(const Hypergroup& H, const HFunction& f, const HFunction& m,
                       const Tolerance& tol) {
    EquationResidual r = residual_sine(H, f, m, tol);
    const Element o = H.identity();
    const Mode mode = r.mode;
    Scalar fo = f.to_mode(mode)(o).mag();
    bool origin_ok;
    if (mode == Mode::exact) {
        origin_ok = fo.is_zero();
    } else {
        double excess = fo.dbl() / (tol.atol + tol.rtol * fo.dbl());
        origin_ok = excess <= 1.0;
        r.max_excess = std::max(r.max_excess, excess);
    }
    if (!origin_ok) {
        r.pass = false;
        if (fo > r.max_abs) {
            r.max_abs = fo;
            r.worst = {o, o};
        }
    }
    return {r.pass, std::move(r)};
}

double function_deviation(const HFunction& a, const HFunction& b) {
    if (a.nmax() != b.nmax())
        throw Error("function_deviation: mismatched domains");
    double worst = 0.0;
    for (int n = 0; n <= a.nmax(); ++n) {
        std::complex<double> va = a(n).approx();
        std::complex<double> vb = b(n).approx();
        double dev = std::abs(va - vb) / (1.0 + std::max(std::abs(va), std::abs(vb)));
        worst = std::max(worst, dev);
    }
    return worst;
}

}  // namespace hypereq
