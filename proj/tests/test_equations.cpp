#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "hypereq/equations.hpp"
#include "hypereq/errors.hpp"
#include "hypereq/families.hpp"
#include "hypereq/linearization.hpp"

using namespace hypereq;

namespace {

const Recurrence& cheb() {
    static Recurrence R = Recurrence::chebyshev();
    return R;
}

const Hypergroup& table() {
    static Hypergroup H = polynomial_hypergroup(cheb(), 12);
    return H;
}

HFunction perturbed(const HFunction& fn, int at, double delta) {
    HFunction base = fn.to_mode(Mode::floating);
    std::vector<Complex> values(base.values().begin(), base.values().end());
    values[static_cast<std::size_t>(at)] =
        values[static_cast<std::size_t>(at)] + Complex::floating(delta);
    return HFunction::table(std::move(values), "perturbed");
}

}  // namespace

TEST_CASE("multiplicative family has exactly zero exponential residual") {
    HFunction expo = exponential_fn(cheb(), Complex::exact(2), 12);
    EquationResidual r = residual_exponential(table(), expo);
    CHECK(r.pass);
    CHECK(r.max_abs.is_zero());
    CHECK(r.mode == Mode::exact);

    CheckOutcome outcome = is_exponential(table(), expo);
    CHECK(outcome.ok);
}

TEST_CASE("a non-multiplicative function is pinned to its worst pair") {
    std::vector<Complex> values;
    for (int n = 0; n <= 12; ++n) values.push_back(Complex::exact(n * n + 1));
    HFunction g = HFunction::table(values, "n^2+1");
    EquationResidual r = residual_exponential(table(), g);
    CHECK_FALSE(r.pass);
    CHECK(r.max_abs.sign() > 0);

    // Hand value at (1,1): translate = (g(0)+g(2))/2 = 3 against g(1)^2 = 4.
    HFunction small = HFunction::table(
        {Complex::exact(1), Complex::exact(2), Complex::exact(5)}, "n^2+1");
    EquationResidual r2 = residual_exponential(polynomial_hypergroup(cheb(), 2), small);
    CHECK(r2.max_abs == Scalar::exact(1));
    CHECK(r2.worst == std::pair<Element, Element>{1, 1});
}

TEST_CASE("zero functions are not exponentials") {
    HFunction zero = HFunction::constant(Complex::exact(0), 12);
    CHECK_FALSE(is_exponential(table(), zero).ok);
    CHECK(residual_exponential(table(), zero).pass);  // residual alone is zero
}

TEST_CASE("derivative family solves the sine equation against its exponential") {
    HFunction f = sine_fn(cheb(), Complex::exact(2), 12);
    HFunction g = exponential_fn(cheb(), Complex::exact(2), 12);
    EquationResidual r = residual_sine(table(), f, g);
    CHECK(r.pass);
    CHECK(r.max_abs.is_zero());

    CheckOutcome msine = is_m_sine(table(), f, g);
    CHECK(msine.ok);

    SUBCASE("floating parameter stays within relative tolerance") {
        Complex lam = Complex::floating(0.3, 0.7);
        EquationResidual rf = residual_sine(table(), sine_fn(cheb(), lam, 12),
                                            exponential_fn(cheb(), lam, 12));
        CHECK(rf.pass);
        CHECK(rf.max_excess <= 1.0);
        CHECK(rf.mode == Mode::floating);
    }
}

TEST_CASE("constant one fails the sine equation with residual exactly one") {
    HFunction one = HFunction::constant(Complex::exact(1), 12);
    EquationResidual r = residual_sine(table(), one, one);
    CHECK_FALSE(r.pass);
    CHECK(r.max_abs == Scalar::exact(1));
    CHECK(r.worst == std::pair<Element, Element>{0, 0});
}

TEST_CASE("m-sine verdict requires a vanishing value at the identity") {
    HFunction one = HFunction::constant(Complex::exact(1), 12);
    HFunction g = exponential_fn(cheb(), Complex::exact(2), 12);
    CheckOutcome outcome = is_m_sine(table(), one, g);
    CHECK_FALSE(outcome.ok);
    CHECK_FALSE(outcome.residual.max_abs.is_zero());
}

TEST_CASE("additive family solves the additive equation exactly") {
    HFunction add = additive_fn(cheb(), Complex::exact(5, 3), 12);
    EquationResidual r = residual_additive(table(), add);
    CHECK(r.pass);
    CHECK(r.max_abs.is_zero());

    HFunction one = HFunction::constant(Complex::exact(1), 12);
    CHECK_FALSE(residual_additive(table(), one).pass);
}

TEST_CASE("cosine residual vanishes for a built pair and flags a broken one") {
    HFunction g = exponential_fn(cheb(), Complex::exact(2), 12);
    HFunction zero = HFunction::constant(Complex::exact(0), 12);
    EquationResidual r = residual_cosine(table(), zero, g);
    CHECK(r.pass);  // g(x*y) = g(x)g(y) - 0

    HFunction one = HFunction::constant(Complex::exact(1), 12);
    EquationResidual bad = residual_cosine(table(), one, one);
    CHECK_FALSE(bad.pass);
    CHECK(bad.max_abs == Scalar::exact(1));  // 1 against 1 - 1
}

TEST_CASE("floating tolerance separates noise from violation") {
    HFunction g = exponential_fn(cheb(), Complex::floating(1.7, 0.0), 12);
    CHECK(residual_exponential(table(), g).pass);

    EquationResidual noisy = residual_exponential(table(), perturbed(g, 6, 1e-13));
    CHECK(noisy.pass);

    EquationResidual broken = residual_exponential(table(), perturbed(g, 6, 1e-5));
    CHECK_FALSE(broken.pass);
    CHECK(broken.max_excess > 1.0);
}

TEST_CASE("pointwise deviation is scale-normalized and domain-checked") {
    HFunction a = exponential_fn(cheb(), Complex::exact(2), 10);
    CHECK(function_deviation(a, a) == 0.0);

    HFunction b = exponential_fn(cheb(), Complex::exact(3), 10);
    CHECK(function_deviation(a, b) > 0.0);

    HFunction shorter = exponential_fn(cheb(), Complex::exact(2), 9);
    CHECK_THROWS_AS(function_deviation(a, shorter), Error);

    // Relative normalization keeps huge values comparable.
    HFunction af = a.to_mode(Mode::floating);
    CHECK(function_deviation(af, perturbed(a, 10, 1e-4)) < 1e-9);
}

TEST_CASE("equation scans join arithmetic modes") {
    HFunction f = sine_fn(cheb(), Complex::exact(2), 12);
    HFunction g = exponential_fn(cheb(), Complex::exact(2), 12).to_mode(Mode::floating);
    EquationResidual r = residual_sine(table(), f, g);
    CHECK(r.mode == Mode::floating);
    CHECK(r.pass);
}
