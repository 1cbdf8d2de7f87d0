#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hypereq/builders.hpp"
#include "hypereq/classify.hpp"
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

HFunction expo(long num, long den = 1) {
    return exponential_fn(cheb(), Complex::exact(num, den), 12);
}

std::string check_slug(const PreconditionFailed& e) { return e.check; }

}  // namespace

TEST_CASE("exponential plus its sine function solves the sine-cosine equation") {
    HFunction f = sine_fn(cheb(), Complex::exact(2), 12);
    SolutionPair pair = build_t1_i(table(), expo(2), f);
    CHECK(pair.equation == EquationTag::sine_cosine);
    CHECK(residual_sine(table(), pair.f, pair.g).max_abs.is_zero());

    CHECK_THROWS_WITH_AS(build_t1_i(table(), f, f), doctest::Contains("exponential"),
                         PreconditionFailed);
    HFunction zero = HFunction::constant(Complex::exact(0), 12);
    try {
        build_t1_i(table(), expo(2), zero);
        FAIL("zero f accepted");
    } catch (const PreconditionFailed& e) {
        CHECK(check_slug(e) == "nonzero");
    }
    try {
        build_t1_i(table(), expo(2), sine_fn(cheb(), Complex::exact(3), 12));
        FAIL("mismatched sine accepted");
    } catch (const PreconditionFailed& e) {
        CHECK(check_slug(e) == "m-sine");
    }
}

TEST_CASE("proportional half-exponential pair") {
    SolutionPair pair = build_t1_ii(table(), expo(2), Complex::exact(1));
    CHECK(pair.f(1) == Complex::exact(1));  // M(1)/2 = P_1(2)/2
    CHECK(pair.g(1) == Complex::exact(1));
    CHECK(residual_sine(table(), pair.f, pair.g).max_abs.is_zero());

    try {
        build_t1_ii(table(), expo(2), Complex::exact(0));
        FAIL("c = 0 accepted");
    } catch (const PreconditionFailed& e) {
        CHECK(check_slug(e) == "c-nonzero");
    }
}

TEST_CASE("two-exponential difference pair") {
    SolutionPair pair = build_t1_iii(table(), expo(2), expo(3), Complex::exact(1));
    CHECK(pair.f(1) == Complex::exact(-1, 2));  // (2 - 3)/2
    CHECK(pair.g(1) == Complex::exact(5, 2));
    CHECK(residual_sine(table(), pair.f, pair.g).max_abs.is_zero());

    CHECK_THROWS_AS(build_t1_iii(table(), expo(2), expo(2), Complex::exact(1)),
                    DegenerateEqual);
    CHECK_THROWS_AS(build_t1_iii(table(), expo(2), expo(3), Complex::exact(0)),
                    PreconditionFailed);
}

TEST_CASE("scaled-exponential cosine pair") {
    SolutionPair pair = build_t2_i(table(), expo(2), Complex::exact(2));
    CHECK(pair.equation == EquationTag::cosine_sine);
    CHECK(pair.g(0) == Complex::exact(-1, 3));  // 1/(1 - 4)
    CHECK(residual_cosine(table(), pair.f, pair.g).max_abs.is_zero());

    try {
        build_t2_i(table(), expo(2), Complex::exact(1));
        FAIL("c = 1 accepted");
    } catch (const PreconditionFailed& e) {
        CHECK(check_slug(e) == "c-not-unit");
    }
    CHECK_THROWS_AS(build_t2_i(table(), expo(2), Complex::exact(0)), PreconditionFailed);
}

TEST_CASE("half-exponential cosine pair exists only at c squared = -1") {
    Complex i = Complex::exact(0, 1, 1, 1);
    SolutionPair pair = build_t2_ii(table(), expo(2), i);
    CHECK(pair.equation == EquationTag::cosine_sine);
    CHECK_FALSE(pair.note.empty());
    CHECK(residual_cosine(table(), pair.f, pair.g).max_abs.is_zero());
    CHECK(residual_cosine(table(), build_t2_ii(table(), expo(2), -i).f,
                          build_t2_ii(table(), expo(2), -i).g)
              .max_abs.is_zero());

    try {
        build_t2_ii(table(), expo(2), Complex::exact(1));
        FAIL("c = 1 accepted");
    } catch (const PreconditionFailed& e) {
        CHECK(check_slug(e) == "not-a-solution-for-this-c");
        CHECK(std::string(e.what()).find("-1/2") != std::string::npos);
    }

    Complex fi = Complex::floating(0.0, 1.0);
    CHECK(residual_cosine(table(), build_t2_ii(table(), expo(2).to_mode(Mode::floating), fi).f,
                          build_t2_ii(table(), expo(2).to_mode(Mode::floating), fi).g)
              .pass);
}

TEST_CASE("exponential shifted by its sine function solves the cosine equation") {
    HFunction f = sine_fn(cheb(), Complex::exact(2), 12);
    for (int sign : {1, -1}) {
        SolutionPair pair = build_t2_iii(table(), expo(2), f, sign);
        CHECK(residual_cosine(table(), pair.f, pair.g).max_abs.is_zero());
        CHECK(pair.g(0) == Complex::exact(1));
    }
    CHECK_THROWS_AS(build_t2_iii(table(), expo(2), f, 2), PreconditionFailed);
    CHECK_THROWS_AS(
        build_t2_iii(table(), expo(2), HFunction::constant(Complex::exact(1), 12), 1),
        PreconditionFailed);
}

TEST_CASE("two-exponential cosine pair with rational square root") {
    Complex lam = Complex::exact(3, 5);
    SolutionPair plus = build_t2_iv(table(), expo(2), expo(3), lam, 1);
    CHECK(residual_cosine(table(), plus.f, plus.g).max_abs.is_zero());

    SolutionPair swapped = build_t2_iv(table(), expo(3), expo(2), lam, -1);
    for (int n = 0; n <= 12; ++n) {
        CHECK(plus.f(n) == swapped.f(n));
        CHECK(plus.g(n) == swapped.g(n));
    }

    CHECK_THROWS_AS(build_t2_iv(table(), expo(2), expo(3), Complex::exact(1), 1),
                    DegenerateLambda);
    CHECK_THROWS_AS(build_t2_iv(table(), expo(2), expo(2), lam, 1), DegenerateEqual);
    // 1 - (1/3)^2 = 8/9 has no rational square root.
    CHECK_THROWS_AS(build_t2_iv(table(), expo(2), expo(3), Complex::exact(1, 3), 1),
                    ExactUnavailable);
    SolutionPair floated = build_t2_iv(table(), expo(2).to_mode(Mode::floating),
                                       expo(3).to_mode(Mode::floating),
                                       Complex::floating(1.0 / 3.0), 1);
    CHECK(residual_cosine(table(), floated.f, floated.g).pass);

    SUBCASE("zero shift lands on the averaged pair") {
        SolutionPair avg = build_t2_iv(table(), expo(2), expo(3), Complex::exact(0), 1);
        HFunction mean = fn_linear(Complex::exact(1, 2), expo(2), Complex::exact(1, 2),
                                   expo(3));
        for (int n = 0; n <= 12; ++n) CHECK(avg.g(n) == mean(n));
    }
}

TEST_CASE("internal identities behind the two-exponential construction") {
    auto [first, second] =
        t2_iv_identity_defects(Complex::exact(3, 5), Complex::exact(4, 5));
    CHECK(first.is_zero());
    CHECK(second.is_zero());

    Complex lam = Complex::floating(0.37, 0.21);
    Complex d = principal_sqrt(Complex::one(Mode::floating) - lam * lam);
    auto [f1, f2] = t2_iv_identity_defects(lam, d);
    CHECK(f1.dbl() <= 1e-12);
    CHECK(f2.dbl() <= 1e-12);

    CHECK_THROWS_AS(t2_iv_identity_defects(Complex::exact(1), Complex::exact(0)),
                    DegenerateLambda);
}

TEST_CASE("classifier recognizes the sine-type cases from their values alone") {
    ClassifierConfig cfg;

    SUBCASE("exponential with a sine companion") {
        HFunction f = sine_fn(cheb(), Complex::exact(2), 12);
        ClassificationResult res = classify_sine(table(), f, expo(2), cfg, &cheb());
        CHECK(res.tag == CaseTag::T1_I);
        CHECK(res.residual_input == 0.0);
        CHECK(res.residual_reconstruction == 0.0);
        REQUIRE(res.M.has_value());
        REQUIRE(res.M->descriptor().has_value());
        CHECK(res.M->descriptor()->parameter == Complex::exact(2));
    }
    SUBCASE("proportional halves") {
        SolutionPair pair = build_t1_ii(table(), expo(2), Complex::exact(3));
        ClassificationResult res = classify_sine(table(), pair.f, pair.g, cfg, &cheb());
        CHECK(res.tag == CaseTag::T1_II);
        REQUIRE(res.c.has_value());
        CHECK(*res.c == Complex::exact(3));
        CHECK(res.M->descriptor()->parameter == Complex::exact(2));
    }
    SUBCASE("difference of two exponentials, parameter up to a sign swap") {
        SolutionPair pair = build_t1_iii(table(), expo(2), expo(3), Complex::exact(1));
        ClassificationResult res = classify_sine(table(), pair.f, pair.g, cfg, &cheb());
        CHECK(res.tag == CaseTag::T1_III);
        REQUIRE(res.c.has_value());
        CHECK(*res.c == Complex::exact(-1));  // the swapped labeling of c = 1
        REQUIRE(res.M.has_value());
        REQUIRE(res.N.has_value());
        CHECK(res.M->descriptor()->parameter == Complex::exact(3));
        CHECK(res.N->descriptor()->parameter == Complex::exact(2));
    }
    SUBCASE("constants are rejected with unit residual") {
        HFunction one = HFunction::constant(Complex::exact(1), 12);
        ClassificationResult res = classify_sine(table(), one, one, cfg);
        CHECK(res.tag == CaseTag::NOT_A_SOLUTION);
        CHECK(res.residual_input == 1.0);
        CHECK_FALSE(res.notes.empty());
    }
    SUBCASE("zero f matches no solution family") {
        HFunction zero = HFunction::constant(Complex::exact(0), 12);
        ClassificationResult res = classify_sine(table(), zero, expo(2), cfg);
        CHECK(res.tag == CaseTag::NOT_A_SOLUTION);
    }
}

TEST_CASE("classifier recognizes the cosine-type cases") {
    ClassifierConfig cfg;

    SUBCASE("single scaled exponential") {
        SolutionPair pair = build_t2_i(table(), expo(2), Complex::exact(2));
        ClassificationResult res = classify_cosine(table(), pair.f, pair.g, cfg, &cheb());
        CHECK(res.tag == CaseTag::T2_I);
        CHECK(*res.c == Complex::exact(2));
        CHECK(res.M->descriptor()->parameter == Complex::exact(2));
    }
    SUBCASE("half-exponential input reports as the scaled-exponential case") {
        Complex i = Complex::exact(0, 1, 1, 1);
        SolutionPair pair = build_t2_ii(table(), expo(2), i);
        ClassificationResult res = classify_cosine(table(), pair.f, pair.g, cfg, &cheb());
        CHECK(res.tag == CaseTag::T2_I);
        CHECK(*res.c == -i);  // 1/c for c = i
    }
    SUBCASE("shifted exponential, sign opposite to the recovered parameter") {
        HFunction f = sine_fn(cheb(), Complex::exact(2), 12);
        SolutionPair pair = build_t2_iii(table(), expo(2), f, 1);
        ClassificationResult res = classify_cosine(table(), pair.f, pair.g, cfg, &cheb());
        CHECK(res.tag == CaseTag::T2_III);
        CHECK(*res.lambda == Complex::exact(-1));
        CHECK(res.sign == 1);
        CHECK(res.M->descriptor()->parameter == Complex::exact(2));
    }
    SUBCASE("two exponentials with rational shift") {
        SolutionPair pair = build_t2_iv(table(), expo(2), expo(3), Complex::exact(3, 5), 1);
        ClassificationResult res = classify_cosine(table(), pair.f, pair.g, cfg, &cheb());
        CHECK(res.tag == CaseTag::T2_IV);
        CHECK(*res.lambda == Complex::exact(3, 5));
        CHECK(*res.d == Complex::exact(4, 5));
        CHECK(res.sign == 1);
        CHECK(res.M->descriptor()->parameter == Complex::exact(2));
        CHECK(res.N->descriptor()->parameter == Complex::exact(3));
    }
    SUBCASE("opposite sign choice comes back as the swapped labeling") {
        SolutionPair pair = build_t2_iv(table(), expo(2), expo(3), Complex::exact(3, 5), -1);
        ClassificationResult res = classify_cosine(table(), pair.f, pair.g, cfg, &cheb());
        CHECK(res.tag == CaseTag::T2_IV);
        CHECK(res.sign == 1);
        CHECK(res.M->descriptor()->parameter == Complex::exact(3));
        CHECK(res.N->descriptor()->parameter == Complex::exact(2));
    }
    SUBCASE("zero shift collapses to the averaged two-exponential form") {
        SolutionPair pair = build_t2_iv(table(), expo(2), expo(3), Complex::exact(0), 1);
        ClassificationResult res = classify_cosine(table(), pair.f, pair.g, cfg, &cheb());
        CHECK(res.tag == CaseTag::T2_IV);
        CHECK(*res.lambda == Complex::exact(0));
        CHECK(*res.d == Complex::exact(1));
        CHECK(res.M->descriptor()->parameter == Complex::exact(2));
        CHECK(res.N->descriptor()->parameter == Complex::exact(3));
    }
    SUBCASE("constants fail with unit residual") {
        HFunction one = HFunction::constant(Complex::exact(1), 12);
        ClassificationResult res = classify_cosine(table(), one, one, cfg);
        CHECK(res.tag == CaseTag::NOT_A_SOLUTION);
        CHECK(res.residual_input == 1.0);
    }
}

TEST_CASE("floating-point round trip recovers parameters to tolerance") {
    ClassifierConfig cfg;
    Complex lam = Complex::floating(0.37, 0.21);
    HFunction M = exponential_fn(cheb(), Complex::floating(1.3, -0.4), 12);
    HFunction N = exponential_fn(cheb(), Complex::floating(-0.8, 0.9), 12);
    SolutionPair pair = build_t2_iv(table(), M, N, lam, 1);
    ClassificationResult res = classify_cosine(table(), pair.f, pair.g, cfg, &cheb());
    REQUIRE(res.tag == CaseTag::T2_IV);
    CHECK(std::abs(res.lambda->approx() - lam.approx()) <= 1e-6);
    CHECK(res.residual_reconstruction <= 1e-6);
    REQUIRE(res.M->descriptor().has_value());
    CHECK(std::abs(res.M->descriptor()->parameter.approx() -
                   std::complex<double>(1.3, -0.4)) <= 1e-6);
}

TEST_CASE("classifier demands matching domains") {
    HFunction f = sine_fn(cheb(), Complex::exact(2), 8);
    HFunction g = exponential_fn(cheb(), Complex::exact(2), 8);
    CHECK_THROWS_AS(classify_sine(table(), f, g), PreconditionFailed);
}

TEST_CASE("builders check the exponential hypothesis on their inputs") {
    HFunction bogus = HFunction::constant(Complex::exact(2), 12);
    CHECK_THROWS_AS(build_t1_ii(table(), bogus, Complex::exact(1)), PreconditionFailed);
    CHECK_THROWS_AS(build_t2_i(table(), bogus, Complex::exact(2)), PreconditionFailed);
    CHECK_THROWS_AS(build_t2_iv(table(), bogus, expo(3), Complex::exact(3, 5), 1),
                    PreconditionFailed);
}
