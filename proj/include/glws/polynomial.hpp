#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "glws/rational.hpp"

namespace glws {

/// Power product of integer-indexed variables, e.g. C0^2*C2.
/// Stored as (variable, exponent) pairs sorted by variable, exponents > 0.
class Monomial {
  public:
    using Powers = std::vector<std::pair<int, int>>;

    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial variable(int var, int exp = 1);
    static Monomial from_powers(Powers powers);  // validates and sorts

    const Powers& powers() const { return powers_; }
    bool is_constant() const { return powers_.empty(); }
    int degree() const;
    int exponent_of(int var) const;
    Monomial times(const Monomial& other) const;
    /// Removes one factor of `var`; requires exponent_of(var) >= 1.
    Monomial divided_by_variable(int var) const;

    bool operator==(const Monomial& o) const { return powers_ == o.powers_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
    /// Canonical term order: ascending total degree, ties broken so the
    /// lexicographically larger exponent vector (variables ascending) sorts first.
    bool operator<(const Monomial& o) const;

  private:
    Powers powers_;
};

/// Names a variable index for printing ("C0", "x1", ...).
using VariableNamer = std::function<std::string(int)>;

std::string casimir_name(int var);   // 0 -> "C0"
std::string x_name(int var);         // 0 -> "x1"
std::string diagonal_name(int var);  // 0 -> "E11"

/// Sparse multivariate polynomial with exact rational coefficients.
/// Variables are open-ended non-negative integer indices; in the Casimir
/// namespace index k stands for C_k.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Rational c);
    static Polynomial one() { return constant(1); }
    static Polynomial variable(int var, int exp = 1);
    static Polynomial term(Monomial m, Rational c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (0 for the zero polynomial).
    Rational constant_value() const;
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator*=(const Polynomial& o);
    Polynomial operator*(const Rational& s) const;
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(int e) const;

    int total_degree() const;  // 0 for the zero polynomial
    int degree_in(int var) const;
    /// Total degree where variable v weighs `weight(v)`.
    int weighted_degree(const std::function<int(int)>& weight) const;
    bool has_integer_coefficients() const;
    bool uses_variable(int var) const;

    /// Replaces every occurrence of `var` by `value`, exactly.
    Polynomial substitute(int var, const Polynomial& value) const;
    Polynomial substitute(int var, const Rational& value) const;
    /// Renames var a <-> var b.
    Polynomial swap_variables(int a, int b) const;
    /// Evaluates at a full assignment; unassigned variables default to 0.
    Rational evaluate(const std::map<int, Rational>& assignment) const;
    /// True when every term has exponent >= 1 in `var`.
    bool divisible_by_variable(int var) const;
    Polynomial divided_by_variable(int var) const;

    std::string to_string(const VariableNamer& namer = casimir_name) const;

  private:
    void add_term(const Monomial& m, const Rational& c);
    TermMap terms_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

namespace detail {
/// Shared "c1*m1 + c2*m2 - ..." renderer for polynomial-like term maps.
std::string format_terms(const Polynomial::TermMap& terms, const VariableNamer& namer,
                         const std::string& power_sep = "^", const std::string& mul_sep = "*");
}  // namespace detail

}  // namespace glws
