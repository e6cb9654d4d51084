#include <doctest.h>

#include <map>

#include "glws/json_io.hpp"
#include "glws/polynomial.hpp"
#include "test_util.hpp"

using namespace glws;
using namespace glws::testing;

namespace {
const Polynomial C0 = Polynomial::variable(0);
const Polynomial C1 = Polynomial::variable(1);
const Polynomial C2 = Polynomial::variable(2);
const Polynomial C3 = Polynomial::variable(3);
const Polynomial C4 = Polynomial::variable(4);
}  // namespace

TEST_CASE("addition and multiplication basics") {
    CHECK(C2 + Polynomial::zero() == C2);
    CHECK(C1 * C2 + C2 * C1 == C1 * C2 * Polynomial::constant(2));
    CHECK((C3 - C0 * C2) + C1 * C1 == C3 - C0 * C2 + C1.pow(2));
    CHECK(C1 * C1 == Polynomial::variable(1, 2));
    CHECK(C2 * C2 == Polynomial::variable(2, 2));
    CHECK(Polynomial::zero() * Polynomial::variable(5) == Polynomial::zero());
    CHECK(Polynomial::constant(make_rational(1, 2)) + Polynomial::constant(make_rational(1, 2)) ==
          Polynomial::one());
}

TEST_CASE("ring axioms on random triples") {
    TestRng rng(20240819);
    for (int trial = 0; trial < 60; ++trial) {
        Polynomial a = random_polynomial(rng, 4, 4, 3, 6);
        Polynomial b = random_polynomial(rng, 4, 4, 3, 6);
        Polynomial c = random_polynomial(rng, 4, 4, 3, 6);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Polynomial::zero());
    }
}

TEST_CASE("substitution of C0") {
    Polynomial p = C3 - C0 * C2 + C1.pow(2);
    CHECK(p.substitute(0, Rational(0)) == C3 + C1.pow(2));
    CHECK(C0.pow(2).substitute(0, Rational(2)) == Polynomial::constant(4));
    Polynomial q = C4 - Polynomial::constant(2) * C0 * C3 + Polynomial::constant(2) * C1 * C2 +
                   C0.pow(2) * C2 - C0 * C1;
    CHECK(q.substitute(0, Rational(1)) ==
          C4 - Polynomial::constant(2) * C3 + Polynomial::constant(2) * C1 * C2 + C2 - C1);
}

TEST_CASE("substitution agrees with evaluation") {
    TestRng rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        Polynomial p = random_polynomial(rng, 4, 5, 3, 5);
        Rational v = make_rational(rng.below(9) - 4, 1 + rng.below(3));
        std::map<int, Rational> point;
        for (int var = 1; var <= 4; ++var)
            point[var] = make_rational(rng.below(9) - 4, 1 + rng.below(3));
        std::map<int, Rational> point_with_c0 = point;
        point_with_c0[0] = v;
        CHECK(p.substitute(0, v).evaluate(point) == p.evaluate(point_with_c0));
    }
}

TEST_CASE("general substitution composes polynomials") {
    // C1 -> C2 + 1 inside C1^2 gives C2^2 + 2 C2 + 1
    Polynomial p = C1.pow(2);
    Polynomial image = C2 + Polynomial::one();
    CHECK(p.substitute(1, image) ==
          C2.pow(2) + Polynomial::constant(2) * C2 + Polynomial::one());
    CHECK(C3.substitute(1, image) == C3);
}

TEST_CASE("canonical string form") {
    CHECK(Polynomial::zero().to_string() == "0");
    CHECK(Polynomial::one().to_string() == "1");
    CHECK((C3 - C0 * C2 + C1.pow(2)).to_string() == "C3 - C0*C2 + C1^2");
    CHECK((C2 * C2).to_string() == "C2^2");
    CHECK((-C2).to_string() == "-C2");
    CHECK(Polynomial::constant(make_rational(-3, 4)).to_string() == "-3/4");
    CHECK((Polynomial::constant(make_rational(3, 2)) * C1 * C2).to_string() == "3/2*C1*C2");
    CHECK((C1 + Polynomial::one()).to_string() == "1 + C1");
}

TEST_CASE("term order: degree first, then earliest heaviest variable") {
    Polynomial p = C1.pow(2) + C2.pow(2) + C0 * C2;
    CHECK(p.to_string() == "C0*C2 + C1^2 + C2^2");
    CHECK((C0 * C1 + C0 * C3 + C1 * C2).to_string() == "C0*C1 + C0*C3 + C1*C2");
}

TEST_CASE("degrees and coefficient queries") {
    Polynomial p = C3 - C0 * C2 + C1.pow(2);
    CHECK(p.total_degree() == 2);
    CHECK(p.degree_in(1) == 2);
    CHECK(p.degree_in(5) == 0);
    CHECK(p.weighted_degree([](int var) { return var == 0 ? 1 : var; }) == 3);
    CHECK(p.coefficient(Monomial::variable(3)) == 1);
    CHECK(p.coefficient(Monomial::variable(0).times(Monomial::variable(2))) == -1);
    CHECK(p.has_integer_coefficients());
    CHECK(!(p * Polynomial::constant(make_rational(1, 2))).has_integer_coefficients());
}

TEST_CASE("variable division") {
    Polynomial p = C1 * C2 + C1.pow(3);
    CHECK(p.divisible_by_variable(1));
    CHECK(!p.divisible_by_variable(2));
    CHECK(p.divided_by_variable(1) == C2 + C1.pow(2));
}

TEST_CASE("json round trip") {
    TestRng rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        Polynomial p = random_polynomial(rng, 5, 5, 3, 8);
        CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
    }
    CHECK(polynomial_to_json(Polynomial::zero()).dump() == "[]");
}
