#pragma once

#include <string>
#include <vector>

#include "glws/polynomial.hpp"
#include "glws/power_series.hpp"
#include "glws/uea.hpp"

namespace glws {

/// Variable index reserved for the t of the supersymmetry criterion.
constexpr int kSupersymmetryTestVariable = 1 << 20;

/// Shift vector of the Harish-Chandra variables x_i = E_ii + r_i:
///     r_i = sum_{j>i} (-1)^{p_i+p_j} + (1 - (-1)^{p_i}) / 2.
std::vector<Rational> hc_shifts(int m, int n);

/// phi(C_0)..phi(C_K) as polynomials in x_1..x_{m+n}, extracted from
///     1 - sum_{k>=0} phi(C_k) z^{k+1}
///       = prod_i (1 - z / (1 - z (-1)^{p_i} x_i))^{(-1)^{p_i}},
/// exactly. Index k of the result is phi(C_k); phi(C_0) = m - n.
std::vector<Polynomial> casimir_hc_images(int m, int n, int K);

/// The product series itself, truncated after z^{K+1}.
TruncatedSeries casimir_generating_series(int m, int n, int K);

/// Symmetric separately in x_1..x_m and x_{m+1}..x_{m+n}, and unchanged by
/// the substitution x_m = t, x_{m+n} = -t. With an empty block only the
/// ordinary symmetry applies.
bool is_supersymmetric(const Polynomial& f, int m, int n);

/// Projection U -> U(h): re-straightens into the order
/// (strictly lower) < (diagonal) < (strictly upper) and keeps the purely
/// diagonal monomials. Result is a polynomial in variables i <-> E_{i+1,i+1}.
Polynomial hc_project(const UEAElement& x);

/// hc_project rewritten in the shifted variables: E_ii = x_i - r_i.
Polynomial hc_project_shifted(const UEAElement& x);

/// num / C1^c1_power with rational coefficients, C1-cancelled as far as the
/// numerator allows. Variables: 1 <-> C1, 2 <-> C2.
struct C1RationalFunction {
    Polynomial num;
    int c1_power = 0;

    void normalize();
    bool operator==(const C1RationalFunction& o) const;
    std::string to_string() const;
};

/// Coefficient of z^k in the gl(1|1) Casimir generating function
///     C1 z / ((1 - (C2+C1-C1^2) z / (2 C1)) (1 - (C2-C1+C1^2) z / (2 C1))),
/// as an exact rational function. Requires k >= 1; k = 1, 2 reproduce C1, C2.
C1RationalFunction gl11_casimir_in_c1_c2(int k);

}  // namespace glws
