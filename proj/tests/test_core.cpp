#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "hypereq/complex.hpp"
#include "hypereq/errors.hpp"
#include "hypereq/hfunction.hpp"
#include "hypereq/hypergroup.hpp"
#include "hypereq/measure.hpp"
#include "hypereq/scalar.hpp"

using namespace hypereq;

TEST_CASE("scalar arithmetic stays exact and modes never mix silently") {
    Scalar third = Scalar::exact(1, 3);
    CHECK(third * Scalar::exact(3) == Scalar::exact(1));
    CHECK((Scalar::exact(1, 10) + Scalar::exact(2, 10)).rat() == Rational(3, 10));
    CHECK(Scalar::exact(-2).abs() == Scalar::exact(2));
    CHECK(Scalar::exact(0).is_zero());

    CHECK_THROWS_AS(third + Scalar::floating(0.5), MixedModeError);
    CHECK_THROWS_AS((void)(third < Scalar::floating(0.5)), MixedModeError);

    CHECK(third.to_mode(Mode::floating).dbl() == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(Scalar::floating(0.5).to_mode(Mode::exact), Error);

    CHECK(close(Scalar::floating(1.0), Scalar::floating(1.0 + 1e-13), Tolerance{}));
    CHECK_FALSE(close(Scalar::floating(1.0), Scalar::floating(1.0 + 1e-6), Tolerance{}));
}

TEST_CASE("seventeen-digit float rendering is stable and unambiguous") {
    CHECK(format_double17(0.1) == "0.10000000000000001");
    CHECK(format_double17(1.0) == "1.0");
    CHECK(format_double17(-2.0) == "-2.0");
    CHECK(format_double17(1.5e-9) == "1.5e-09");
    CHECK_THROWS_AS(format_double17(1.0 / 0.0), Error);
}

TEST_CASE("complex arithmetic and the principal square root") {
    Complex i = Complex::exact(0, 1, 1, 1);
    CHECK(i * i == Complex::exact(-1));
    CHECK(i.conj() == -i);

    CHECK(principal_sqrt(Complex::exact(-4)) == Complex::exact(0, 1, 2, 1));
    CHECK(principal_sqrt(Complex::exact(Rational(9, 16))) ==
          Complex::exact(Rational(3, 4)));
    CHECK(principal_sqrt(Complex::exact(-1)) == i);
    CHECK_THROWS_AS(principal_sqrt(Complex::exact(2)), ExactUnavailable);

    Complex r = principal_sqrt(Complex::floating(-4.0));
    CHECK(r.re().dbl() == doctest::Approx(0.0));
    CHECK(r.im().dbl() == doctest::Approx(2.0));

    Complex z = Complex::floating(-3.0, 4.0);
    Complex s = principal_sqrt(z);
    CHECK((s * s - z).mag().dbl() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s.re().dbl() >= 0.0);
}

TEST_CASE("finite measures merge, sort, and drop vanished atoms") {
    FiniteMeasure m = FiniteMeasure::from_atoms({{2, Scalar::exact(1, 4)},
                                                 {0, Scalar::exact(1, 2)},
                                                 {2, Scalar::exact(1, 4)},
                                                 {5, Scalar::exact(0)}});
    REQUIRE(m.size() == 2);
    CHECK(m.atoms()[0].first == 0);
    CHECK(m.weight(2) == Scalar::exact(1, 2));
    CHECK(m.weight(7).is_zero());
    CHECK(m.total_mass() == Scalar::exact(1));
    CHECK(m.nonnegative(Tolerance{}));
    CHECK(m.normalized(Tolerance{}));
    CHECK(m.min_element() == 0);
    CHECK(m.max_element() == 2);

    CHECK_THROWS_AS(FiniteMeasure::from_atoms({{-1, Scalar::exact(1)}}), Error);
    CHECK_THROWS_AS(
        FiniteMeasure::from_atoms({{0, Scalar::exact(1)}, {1, Scalar::floating(0.5)}}),
        MixedModeError);

    CHECK(FiniteMeasure::point_mass(3).is_point_mass_at(3, Tolerance{}));
    CHECK_FALSE(FiniteMeasure::point_mass(3).is_point_mass_at(2, Tolerance{}));
}

namespace {

FiniteMeasure atoms(std::vector<FiniteMeasure::Atom> a) {
    return FiniteMeasure::from_atoms(std::move(a));
}

// Three elements with 1*1 = (o + 2)/2; (2,2) is deliberately adjustable so
// individual axioms can be broken one at a time.
std::map<Hypergroup::Key, FiniteMeasure> base_rows(FiniteMeasure two_two) {
    std::map<Hypergroup::Key, FiniteMeasure> rows;
    rows.emplace(Hypergroup::Key{0, 0}, FiniteMeasure::point_mass(0));
    rows.emplace(Hypergroup::Key{0, 1}, FiniteMeasure::point_mass(1));
    rows.emplace(Hypergroup::Key{0, 2}, FiniteMeasure::point_mass(2));
    rows.emplace(Hypergroup::Key{1, 1},
                 atoms({{0, Scalar::exact(1, 2)}, {2, Scalar::exact(1, 2)}}));
    rows.emplace(Hypergroup::Key{1, 2}, FiniteMeasure::point_mass(1));
    rows.emplace(Hypergroup::Key{2, 2}, std::move(two_two));
    return rows;
}

}  // namespace

TEST_CASE("a consistent hand-built table passes every axiom") {
    Hypergroup H(2, 0, base_rows(FiniteMeasure::point_mass(0)), "hand");
    CHECK(H.mode() == Mode::exact);
    CHECK(H.defined(1, 0));
    CHECK(H.convolve(2, 1).is_point_mass_at(1, Tolerance{}));  // symmetric lookup
    CHECK_THROWS_AS(H.convolve(2, 3), UntabulatedPair);
    CHECK(H.pairs().size() == 6);

    AxiomReport report = check_axioms(H, 2);
    CHECK(report.all_pass());
    CHECK(report.nonnegativity.pass);
    CHECK(report.associativity.pass);
}

TEST_CASE("constructor validation rejects inconsistent tables") {
    // Identity row missing for an element used as a coordinate.
    std::map<Hypergroup::Key, FiniteMeasure> rows;
    rows.emplace(Hypergroup::Key{0, 0}, FiniteMeasure::point_mass(0));
    rows.emplace(Hypergroup::Key{1, 1}, FiniteMeasure::point_mass(0));
    CHECK_THROWS_AS(Hypergroup(2, 0, rows, "broken"), PreconditionFailed);

    // Support escaping the ground set.
    std::map<Hypergroup::Key, FiniteMeasure> rows2;
    rows2.emplace(Hypergroup::Key{0, 0}, FiniteMeasure::point_mass(0));
    rows2.emplace(Hypergroup::Key{0, 1}, FiniteMeasure::point_mass(1));
    rows2.emplace(Hypergroup::Key{1, 1}, FiniteMeasure::point_mass(5));
    CHECK_THROWS_AS(Hypergroup(1, 0, rows2, "broken"), PreconditionFailed);
}

TEST_CASE("each broken axiom is caught with a concrete witness") {
    SUBCASE("negative weight") {
        auto rows = base_rows(
            atoms({{0, Scalar::exact(-1, 10)}, {1, Scalar::exact(11, 10)}}));
        AxiomReport report = check_axioms(Hypergroup(2, 0, std::move(rows), "neg"), 2);
        CHECK_FALSE(report.all_pass());
        REQUIRE_FALSE(report.nonnegativity.pass);
        const AxiomWitness& w = report.nonnegativity.witnesses.front();
        CHECK(w.x == 2);
        CHECK(w.y == 2);
        CHECK(w.k == 0);
        CHECK(w.value == "-1/10");
    }
    SUBCASE("mass below one") {
        auto rows = base_rows(atoms({{0, Scalar::exact(9, 10)}}));
        AxiomReport report = check_axioms(Hypergroup(2, 0, std::move(rows), "mass"), 2);
        REQUIRE_FALSE(report.normalization.pass);
        CHECK(report.normalization.witnesses.front().value == "9/10");
        CHECK(report.nonnegativity.pass);
    }
    SUBCASE("identity row not a point mass") {
        auto rows = base_rows(FiniteMeasure::point_mass(0));
        rows.erase({0, 2});
        rows.emplace(Hypergroup::Key{0, 2}, FiniteMeasure::point_mass(0));
        AxiomReport report = check_axioms(Hypergroup(2, 0, std::move(rows), "id"), 2);
        REQUIRE_FALSE(report.identity.pass);
        CHECK(report.identity.witnesses.front().x == 2);
    }
    SUBCASE("stored orders disagree") {
        auto rows = base_rows(FiniteMeasure::point_mass(0));
        rows.emplace(Hypergroup::Key{2, 1}, FiniteMeasure::point_mass(2));
        AxiomReport report = check_axioms(Hypergroup(2, 0, std::move(rows), "comm"), 2);
        REQUIRE_FALSE(report.commutativity.pass);
        const AxiomWitness& w = report.commutativity.witnesses.front();
        CHECK(w.x == 1);
        CHECK(w.y == 2);
    }
    SUBCASE("regrouping changes the outcome") {
        auto rows = base_rows(FiniteMeasure::point_mass(1));
        AxiomReport report = check_axioms(Hypergroup(2, 0, std::move(rows), "assoc"), 2);
        REQUIRE_FALSE(report.associativity.pass);
        const AxiomWitness& w = report.associativity.witnesses.front();
        CHECK(w.z >= 0);
    }
}

TEST_CASE("translate integrates against the convolution measure") {
    Hypergroup H(2, 0, base_rows(FiniteMeasure::point_mass(0)), "hand");
    std::vector<Complex> square{Complex::exact(0), Complex::exact(1), Complex::exact(4)};
    HFunction f = HFunction::table(square, "n^2");

    CHECK(translate(H, f, 1, 1) == Complex::exact(2));  // (0 + 4)/2
    CHECK(translate(H, f, 0, 2) == Complex::exact(4));
    CHECK_THROWS_AS(translate(H, f, 2, 3), UntabulatedPair);

    // Linearity in the function argument.
    HFunction g = HFunction::constant(Complex::exact(3), 2);
    HFunction combo = fn_linear(Complex::exact(2), f, Complex::exact(1), g);
    CHECK(translate(H, combo, 1, 1) ==
          Complex::exact(2) * translate(H, f, 1, 1) + translate(H, g, 1, 1));
}

TEST_CASE("measure convolution extends the table bilinearly") {
    Hypergroup H(2, 0, base_rows(FiniteMeasure::point_mass(0)), "hand");
    FiniteMeasure mu = atoms({{0, Scalar::exact(1, 2)}, {1, Scalar::exact(1, 2)}});
    FiniteMeasure out = convolve_measures(H, mu, FiniteMeasure::point_mass(1));
    // (delta_0/2 + delta_1/2) * delta_1 = delta_1/2 + (delta_0 + delta_2)/4.
    CHECK(out.weight(0) == Scalar::exact(1, 4));
    CHECK(out.weight(1) == Scalar::exact(1, 2));
    CHECK(out.weight(2) == Scalar::exact(1, 4));
}

TEST_CASE("function combinators respect domains and labels") {
    HFunction f = HFunction::constant(Complex::exact(2), 3);
    HFunction g = HFunction::constant(Complex::exact(5), 3);
    CHECK(fn_scale(Complex::exact(3), f)(0) == Complex::exact(6));
    CHECK(fn_linear(Complex::exact(1), f, Complex::exact(-1), g)(2) == Complex::exact(-3));

    HFunction short_fn = HFunction::constant(Complex::exact(1), 1);
    CHECK_THROWS_AS(fn_linear(Complex::exact(1), f, Complex::exact(1), short_fn), Error);
    CHECK_THROWS_AS(f(4), Error);
    CHECK_THROWS_AS(HFunction::table({}), Error);

    CHECK(f.to_mode(Mode::floating)(1).re().dbl() == doctest::Approx(2.0));
    CHECK(HFunction::constant(Complex::exact(0), 5).identically_zero(Tolerance{}));
    CHECK_FALSE(f.identically_zero(Tolerance{}));
}
