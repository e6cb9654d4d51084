#include <doctest.h>

#include "glws/harish_chandra.hpp"
#include "glws/power_series.hpp"
#include "test_util.hpp"

using namespace glws;
using namespace glws::testing;

namespace {
const Polynomial x1 = Polynomial::variable(0);
const Polynomial x2 = Polynomial::variable(1);
const Polynomial C1p = Polynomial::variable(1);
const Polynomial C2p = Polynomial::variable(2);
}  // namespace

TEST_CASE("shift vectors") {
    CHECK(hc_shifts(1, 1) == std::vector<Rational>{-1, 1});
    CHECK(hc_shifts(2, 0) == std::vector<Rational>{1, 0});
    CHECK(hc_shifts(0, 1) == std::vector<Rational>{1});
    CHECK(hc_shifts(2, 1) == std::vector<Rational>{0, -1, 1});
    CHECK_THROWS_AS(hc_shifts(0, 0), std::invalid_argument);
}

TEST_CASE("series arithmetic is exact through the truncation order") {
    TruncatedSeries s = TruncatedSeries::one(6);
    s.set_coefficient(1, x1);
    s.set_coefficient(2, x2 * make_rational(1, 3));
    TruncatedSeries inv = s.reciprocal();
    CHECK(s * inv == TruncatedSeries::one(6));
    CHECK((s - s) == TruncatedSeries::zero(6));
    CHECK_THROWS_AS(TruncatedSeries::zero(3).reciprocal(), std::invalid_argument);

    TruncatedSeries t = TruncatedSeries::one(6);
    t.set_coefficient(6, x1);
    CHECK((s * t).coefficient(6) == s.coefficient(6) + x1);
}

TEST_CASE("Casimir images for gl(1|1)") {
    auto phi = casimir_hc_images(1, 1, 3);
    CHECK(phi[0] == Polynomial::zero());
    CHECK(phi[1] == x1 + x2);
    CHECK(phi[2] == (x1 + x2) * (x1 - x2 + Polynomial::one()));
    CHECK(phi[3] == (x1 + x2) * (x1 * x1 - x1 * x2 + x2 * x2 + x1 -
                                 Polynomial::constant(2) * x2 + Polynomial::one()));
}

TEST_CASE("phi(C0) is the supertrace dimension") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {1, 1}, {2, 1}, {1, 2}})
        CHECK(casimir_hc_images(m, n, 0)[0] == Polynomial::constant(m - n));
}

TEST_CASE("supersymmetry criterion") {
    CHECK(is_supersymmetric(x1 * x1 - x2 * x2, 1, 1));
    CHECK(!is_supersymmetric(x1 * x2, 1, 1));
    CHECK(is_supersymmetric(Polynomial::constant(7), 1, 1));
    CHECK(is_supersymmetric(x1 + x2, 2, 0));
    CHECK(!is_supersymmetric(x1, 2, 0));
    // power sum p_3 for gl(2|2)
    Polynomial p3 = Polynomial::variable(0, 3) + Polynomial::variable(1, 3) +
                    Polynomial::variable(2, 3) + Polynomial::variable(3, 3);
    CHECK(is_supersymmetric(p3, 2, 2));
    CHECK(!is_supersymmetric(Polynomial::variable(0) - Polynomial::variable(3), 2, 2));
}

TEST_CASE("projection to the diagonal") {
    GlSignature g11{1, 1};
    CHECK(hc_project(casimir_element(1, g11)) ==
          Polynomial::variable(0) + Polynomial::variable(1));

    UEAElement e12_e21 = uea_mul(UEAElement::generator(g11, 0, 1), UEAElement::generator(g11, 1, 0));
    CHECK(hc_project(e12_e21) == Polynomial::variable(0) + Polynomial::variable(1));

    Polynomial proj = hc_project(casimir_element(2, g11));
    Polynomial e11 = Polynomial::variable(0), e22 = Polynomial::variable(1);
    CHECK(proj == e11 * e11 - e11 - e22 * e22 - e22);

    // the same polynomial in shifted variables is the generating-series image
    CHECK(hc_project_shifted(casimir_element(2, g11)) ==
          (x1 + x2) * (x1 - x2 + Polynomial::one()));
}

TEST_CASE("projection of central elements is faithful at small degree") {
    GlSignature sig{2, 1};
    std::vector<UEAElement> central;
    std::vector<Polynomial> projections;
    std::vector<UEAElement> basis = {
        casimir_element(1, sig),
        casimir_element(2, sig),
        uea_mul(casimir_element(1, sig), casimir_element(1, sig)),
        casimir_element(3, sig),
        uea_mul(casimir_element(1, sig), casimir_element(2, sig)),
    };
    for (const auto& x : basis) {
        central.push_back(x);
        projections.push_back(hc_project(x));
    }
    for (std::size_t i = 0; i < central.size(); ++i)
        for (std::size_t j = 0; j < central.size(); ++j)
            CHECK((projections[i] == projections[j]) == (central[i] == central[j]));
}

TEST_CASE("generating function consistency at small signatures") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {2, 1}}) {
        auto phi = casimir_hc_images(m, n, 4);
        for (int k = 1; k <= 4; ++k) {
            CHECK(hc_project_shifted(casimir_element(k, GlSignature{m, n})) == phi[k]);
            CHECK(is_supersymmetric(phi[k], m, n));
        }
    }
}

TEST_CASE("gl(1|1) Casimirs as rational functions of C1, C2") {
    CHECK(gl11_casimir_in_c1_c2(1) == C1RationalFunction{C1p, 0});
    CHECK(gl11_casimir_in_c1_c2(2) == C1RationalFunction{C2p, 0});

    C1RationalFunction c3 = gl11_casimir_in_c1_c2(3);
    Polynomial expected_num = C2p.pow(2) * make_rational(3, 4) +
                              C1p.pow(4) * make_rational(1, 4) -
                              C1p.pow(3) * make_rational(1, 2) + C1p.pow(2) * make_rational(1, 4);
    CHECK(c3 == C1RationalFunction{expected_num, 1});
    CHECK(c3.c1_power == 1);

    CHECK_THROWS_AS(gl11_casimir_in_c1_c2(0), std::invalid_argument);
}

TEST_CASE("gl(1|1) rational functions hold in the enveloping algebra") {
    GlSignature g11{1, 1};
    CasimirEvaluator ev(g11);
    for (int k = 1; k <= 4; ++k) {
        C1RationalFunction rf = gl11_casimir_in_c1_c2(k);
        UEAElement lhs = ev.evaluate(rf.num);
        UEAElement rhs = casimir_element(k, g11);
        for (int e = 0; e < rf.c1_power; ++e) rhs = uea_mul(ev.casimir(1), rhs);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rational function normalization and printing") {
    C1RationalFunction f{C1p.pow(2) * C2p, 2};
    f.normalize();
    CHECK(f.num == C2p);
    CHECK(f.c1_power == 0);
    CHECK(f.to_string() == "C2");
    CHECK(gl11_casimir_in_c1_c2(3).to_string() ==
          "(1/4*C1^2 + 3/4*C2^2 - 1/2*C1^3 + 1/4*C1^4) / C1");
}
