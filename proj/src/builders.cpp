#include "hypereq/builders.hpp"

#include <utility>

#include "hypereq/errors.hpp"

namespace hypereq {

namespace {

void require_exponential(const Hypergroup& H, const HFunction& fn, const char* which,
                         const Tolerance& tol) {
    CheckOutcome check = is_exponential(H, fn, tol);
    if (!check.ok)
        throw PreconditionFailed(
            "exponential", std::string(which) + " must be an exponential; residual " +
                               check.residual.max_abs.str() + " at pair (" +
                               std::to_string(check.residual.worst.first) + ", " +
                               std::to_string(check.residual.worst.second) + ")");
}

void require_not_zero(const HFunction& fn, const char* which, const Tolerance& tol) {
    if (fn.identically_zero(tol))
        throw PreconditionFailed("nonzero",
                                 std::string(which) + " must not be identically zero");
}

void require_sign(int sign) {
    if (sign != 1 && sign != -1)
        throw PreconditionFailed("sign", "sign must be +1 or -1");
}

void require_distinct(const HFunction& M, const HFunction& N, const Tolerance& tol) {
    if (M.nmax() != N.nmax())
        throw PreconditionFailed("domain", "M and N must share a domain");
    for (int n = 0; n <= M.nmax(); ++n)
        if (M.mode() == Mode::exact ? !(M(n) == N(n).to_mode(M.mode()))
                                    : !close(M(n), N(n).to_mode(M.mode()), tol))
            return;
    throw DegenerateEqual("M and N coincide on the whole domain, so f would vanish");
}

Mode pair_mode(const HFunction& a, const HFunction& b) { return join(a.mode(), b.mode()); }

}  // namespace

SolutionPair build_t1_i(const Hypergroup& H, const HFunction& M, const HFunction& f,
                        const Tolerance& tol) {
    require_exponential(H, M, "M", tol);
    require_not_zero(f, "f", tol);
    CheckOutcome sine = is_m_sine(H, f, M, tol);
    if (!sine.ok)
        throw PreconditionFailed("m-sine", "f must be an M-sine function; residual " +
                                               sine.residual.max_abs.str());
    const Mode m = pair_mode(M, f);
    return {f.to_mode(m), M.to_mode(m), EquationTag::sine_cosine, ""};
}

SolutionPair build_t1_ii(const Hypergroup& H, const HFunction& M, const Complex& c,
                         const Tolerance& tol) {
    require_exponential(H, M, "M", tol);
    if (c.is_zero()) throw PreconditionFailed("c-nonzero", "c must be nonzero");
    const Mode m = join(M.mode(), c.mode());
    const HFunction Mm = M.to_mode(m);
    const Complex two = Complex::exact(2).to_mode(m);
    const Complex half = Complex::one(m) / two;
    HFunction f = fn_scale(Complex::one(m) / (two * c.to_mode(m)), Mm, "M/(2c)");
    HFunction g = fn_scale(half, Mm, "M/2");
    return {std::move(f), std::move(g), EquationTag::sine_cosine, ""};
}

SolutionPair build_t1_iii(const Hypergroup& H, const HFunction& M, const HFunction& N,
                          const Complex& c, const Tolerance& tol) {
    require_exponential(H, M, "M", tol);
    require_exponential(H, N, "N", tol);
    if (c.is_zero()) throw PreconditionFailed("c-nonzero", "c must be nonzero");
    const Mode m = join(pair_mode(M, N), c.mode());
    const HFunction Mm = M.to_mode(m);
    const HFunction Nm = N.to_mode(m);
    require_distinct(Mm, Nm, tol);
    const Complex two = Complex::exact(2).to_mode(m);
    const Complex half = Complex::one(m) / two;
    const Complex inv2c = Complex::one(m) / (two * c.to_mode(m));
    HFunction f = fn_linear(inv2c, Mm, -inv2c, Nm, "(M-N)/(2c)");
    HFunction g = fn_linear(half, Mm, half, Nm, "(M+N)/2");
    return {std::move(f), std::move(g), EquationTag::sine_cosine, ""};
}

SolutionPair build_t2_i(const Hypergroup& H, const HFunction& M, const Complex& c,
                        const Tolerance& tol) {
    require_exponential(H, M, "M", tol);
    if (c.is_zero()) throw PreconditionFailed("c-nonzero", "c must be nonzero (f would vanish)");
    const Mode m = join(M.mode(), c.mode());
    const Complex cm = c.to_mode(m);
    const Complex denom = Complex::one(m) - cm * cm;
    if (denom.is_zero())
        throw PreconditionFailed("c-not-unit", "c must differ from 1 and -1");
    const HFunction Mm = M.to_mode(m);
    HFunction f = fn_scale(cm / denom, Mm, "c*M/(1-c^2)");
    HFunction g = fn_scale(Complex::one(m) / denom, Mm, "M/(1-c^2)");
    return {std::move(f), std::move(g), EquationTag::cosine_sine, ""};
}

SolutionPair build_t2_ii(const Hypergroup& H, const HFunction& M, const Complex& c,
                         const Tolerance& tol) {
    require_exponential(H, M, "M", tol);
    if (c.is_zero()) throw PreconditionFailed("c-nonzero", "c must be nonzero");
    const Mode m = join(M.mode(), c.mode());
    const Complex cm = c.to_mode(m);
    const Complex one = Complex::one(m);
    const Complex four = Complex::exact(4).to_mode(m);
    const Complex two = Complex::exact(2).to_mode(m);
    // Residual of the cosine-sine equation for this shape is
    // (1/4 - 1/(4c^2) - 1/2) * M(x)M(y); it vanishes exactly when c^2 = -1.
    const Complex coefficient = one / four - one / (four * cm * cm) - one / two;
    const bool admissible = m == Mode::exact ? coefficient.is_zero()
                                             : close(coefficient, Complex::zero(m), tol);
    if (!admissible)
        throw PreconditionFailed("not-a-solution-for-this-c",
                                 "requires c^2 = -1; residual coefficient is " +
                                     coefficient.str());
    SolutionPair pair = build_t1_ii(H, M, c, tol);
    pair.equation = EquationTag::cosine_sine;
    pair.note = "coincides with the c*M/(1-c^2) family at parameter 1/c";
    return pair;
}

SolutionPair build_t2_iii(const Hypergroup& H, const HFunction& M, const HFunction& f,
                          int sign, const Tolerance& tol) {
    require_sign(sign);
    require_exponential(H, M, "M", tol);
    require_not_zero(f, "f", tol);
    CheckOutcome sine = is_m_sine(H, f, M, tol);
    if (!sine.ok)
        throw PreconditionFailed("m-sine", "f must be an M-sine function; residual " +
                                               sine.residual.max_abs.str());
    const Mode m = pair_mode(M, f);
    const Complex one = Complex::one(m);
    const Complex s = sign == 1 ? one : -one;
    HFunction g = fn_linear(one, M.to_mode(m), s, f.to_mode(m),
                            sign == 1 ? "M+f" : "M-f");
    return {f.to_mode(m), std::move(g), EquationTag::cosine_sine, ""};
}

SolutionPair build_t2_iv(const Hypergroup& H, const HFunction& M, const HFunction& N,
                         const Complex& lambda, int sign, const Tolerance& tol) {
    require_sign(sign);
    require_exponential(H, M, "M", tol);
    require_exponential(H, N, "N", tol);
    const Mode m = join(pair_mode(M, N), lambda.mode());
    const HFunction Mm = M.to_mode(m);
    const HFunction Nm = N.to_mode(m);
    require_distinct(Mm, Nm, tol);
    const Complex one = Complex::one(m);
    const Complex lam = lambda.to_mode(m);
    const Complex dsq = one - lam * lam;
    if (dsq.is_zero())
        throw DegenerateLambda("lambda^2 = 1 leaves d = 0; that regime is the M+-f family");
    const Complex d = principal_sqrt(dsq);

    auto [cross, mm] = t2_iv_identity_defects(lam, d);
    const bool identities_hold =
        m == Mode::exact ? cross.is_zero() && mm.is_zero()
                         : cross.dbl() <= tol.atol + tol.rtol && mm.dbl() <= tol.atol + tol.rtol;
    if (!identities_hold)
        throw InternalInconsistency("coefficient identities failed for d = " + d.str() +
                                    ", lambda = " + lam.str());

    const Complex i = Complex(Scalar().to_mode(m), Scalar::exact(1).to_mode(m));
    const Complex s = sign == 1 ? one : -one;
    const Complex di = d * i;
    const Complex two_di = Complex::exact(2).to_mode(m) * di;
    const Complex fcoef = s / two_di;
    const Complex alpha = s * (s * di - lam) / two_di;
    const Complex beta = s * (s * di + lam) / two_di;
    HFunction f = fn_linear(fcoef, Mm, -fcoef, Nm, "s*(M-N)/(2di)");
    HFunction g = fn_linear(alpha, Mm, beta, Nm, "alpha*M+beta*N");
    return {std::move(f), std::move(g), EquationTag::cosine_sine, ""};
}

std::pair<Scalar, Scalar> t2_iv_identity_defects(const Complex& lambda, const Complex& d) {
    const Mode m = join(lambda.mode(), d.mode());
    const Complex lam = lambda.to_mode(m);
    const Complex dm = d.to_mode(m);
    if (dm.is_zero()) throw DegenerateLambda("d must be nonzero");
    const Complex one = Complex::one(m);
    const Complex i = Complex(Scalar().to_mode(m), Scalar::exact(1).to_mode(m));
    const Complex di = dm * i;
    const Complex four = Complex::exact(4).to_mode(m);
    const Complex two = Complex::exact(2).to_mode(m);
    Scalar cross = (one - dm * dm - lam * lam).mag();
    Complex lhs = ((di - lam) * (di - lam) - one) / (-(four * dm * dm));
    Complex rhs = (di - lam) / (two * di);
    return {std::move(cross), (lhs - rhs).mag()};
}

}  // namespace hypereq
