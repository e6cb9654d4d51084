#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "glws/permutation.hpp"
#include "glws/polynomial.hpp"
#include "glws/sign_function.hpp"

namespace glws {

/// Block signature of gl(m|n): indices 1..m are even, m+1..m+n odd.
struct GlSignature {
    int m = 0;
    int n = 0;

    int dimension() const { return m + n; }
    /// Parity of a 0-based index: 0 when i < m, 1 otherwise.
    int index_parity(int i) const { return i >= m ? 1 : 0; }
    bool operator==(const GlSignature& o) const { return m == o.m && n == o.n; }
    bool operator!=(const GlSignature& o) const { return !(*this == o); }
    std::string to_string() const { return "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")"; }
};

/// Matrix units E_ij are identified with row * dim + col (all 0-based).
using GenId = int;

inline GenId gen_id(int row, int col, int dim) { return row * dim + col; }
inline int gen_row(GenId g, int dim) { return g / dim; }
inline int gen_col(GenId g, int dim) { return g % dim; }
inline int gen_parity(GenId g, const GlSignature& sig) {
    int d = sig.dimension();
    return sig.index_parity(gen_row(g, d)) ^ sig.index_parity(gen_col(g, d));
}

/// Total orders under which straightening produces a PBW basis.
enum class GeneratorOrder {
    RowColumn,         // E_ij < E_kl iff (i,j) < (k,l) lexicographically
    TriangularBlocks,  // strictly lower < diagonal < strictly upper, (i,j) within
};

/// Exact element of U(gl(m|n)) in PBW normal form: a rational combination of
/// ordered generator monomials; odd generators never exceed exponent 1.
class UEAElement {
  public:
    using TermMap = Polynomial::TermMap;  // Monomial over GenIds -> coefficient

    explicit UEAElement(GlSignature sig) : sig_(sig) {}
    static UEAElement zero(GlSignature sig) { return UEAElement(sig); }
    static UEAElement unit(GlSignature sig);
    static UEAElement scalar(GlSignature sig, Rational c);
    /// E_{row+1, col+1}, arguments 0-based.
    static UEAElement generator(GlSignature sig, int row, int col);

    const GlSignature& signature() const { return sig_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    Rational coefficient(const Monomial& m) const;

    UEAElement& operator+=(const UEAElement& o);
    UEAElement& operator-=(const UEAElement& o);
    UEAElement operator+(const UEAElement& o) const;
    UEAElement operator-(const UEAElement& o) const;
    UEAElement operator*(const Rational& s) const;
    bool operator==(const UEAElement& o) const;
    bool operator!=(const UEAElement& o) const { return !(*this == o); }

    /// Internal accumulation of an already-normal term.
    void add_normal_term(const Monomial& mono, const Rational& coeff);

    std::string to_string() const;  // "E11^2*E22 - 2*E12*E21 + 3"

  private:
    GlSignature sig_;
    TermMap terms_;
};

/// Rewrites coeff * word into PBW normal form with respect to `order`,
/// accumulating into `out`. Adjacent out-of-order generators x y are
/// replaced by (-1)^{|x||y|} y x plus the supercommutator correction
///     [E_ij, E_kl] = d_jk E_il - (-1)^{(pi+pj)(pk+pl)} d_il E_kj,
/// and equal odd generators square to zero.
void straighten_word(const GlSignature& sig, std::vector<GenId> word, Rational coeff,
                     GeneratorOrder order, UEAElement::TermMap& out);

/// Exact product in PBW normal form (RowColumn order).
UEAElement uea_mul(const UEAElement& a, const UEAElement& b);

/// Supercommutator [E_{i1 j1}, E_{i2 j2}] straight from the defining formula
/// (no straightening); all indices 0-based.
UEAElement generator_supercommutator(GlSignature sig, int i1, int j1, int i2, int j2);

/// The k-th Casimir element: the cyclic matrix-unit sum with super signs,
/// normal ordered. Requires k >= 1.
UEAElement casimir_element(int k, GlSignature sig);

/// Supertrace of the identity: m - n.
int supertrace_dimension(GlSignature sig);

/// True when x commutes (plain commutator) with every generator.
bool is_central(const UEAElement& x);

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr long kDefaultBruteForceBudget = 1000000;

/// Sum over all (m+n)^k index tuples of (-1)^{f_sigma} times the product of
/// matrix units prescribed by sigma, normal ordered. Throws BudgetExceeded
/// when (m+n)^k exceeds the budget.
UEAElement brute_force_weight(const Permutation& sigma, GlSignature sig,
                              long budget = kDefaultBruteForceBudget);

/// Substitutes m-n for C0 and Casimir elements for C_k into a polynomial in
/// the Casimir variables, multiplying everything out in U(gl(m|n)).
/// Casimir elements are cached per instance.
class CasimirEvaluator {
  public:
    explicit CasimirEvaluator(GlSignature sig) : sig_(sig) {}

    const GlSignature& signature() const { return sig_; }
    const UEAElement& casimir(int k);
    UEAElement evaluate(const Polynomial& p);

  private:
    GlSignature sig_;
    std::map<int, UEAElement> cache_;
};

}  // namespace glws
