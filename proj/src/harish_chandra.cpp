#include "glws/harish_chandra.hpp"

#include <sstream>
#include <stdexcept>

namespace glws {

std::vector<Rational> hc_shifts(int m, int n) {
    const int d = m + n;
    if (d < 1) throw std::invalid_argument("hc_shifts needs m + n >= 1");
    GlSignature sig{m, n};
    std::vector<Rational> out(d);
    for (int i = 0; i < d; ++i) {
        long sum = 0;
        for (int j = i + 1; j < d; ++j)
            sum += ((sig.index_parity(i) + sig.index_parity(j)) % 2) ? -1 : 1;
        out[i] = Rational(sum + (sig.index_parity(i) ? 1 : 0));
    }
    return out;
}

TruncatedSeries casimir_generating_series(int m, int n, int K) {
    const GlSignature sig{m, n};
    const int order = K + 1;
    TruncatedSeries product = TruncatedSeries::one(order);
    for (int i = 0; i < sig.dimension(); ++i) {
        const bool odd = sig.index_parity(i) == 1;
        // 1 - z / (1 - z e x_i) = 1 - sum_{j>=1} e^{j-1} x_i^{j-1} z^j,  e = +-1.
        TruncatedSeries factor = TruncatedSeries::one(order);
        Polynomial xpow = Polynomial::one();
        const Polynomial x = Polynomial::variable(i);
        for (int j = 1; j <= order; ++j) {
            Rational sign = (odd && (j - 1) % 2) ? Rational(-1) : Rational(1);
            factor.set_coefficient(j, xpow * -sign);
            xpow = xpow * x;
        }
        product = odd ? product * factor.reciprocal() : product * factor;
    }
    return product;
}

std::vector<Polynomial> casimir_hc_images(int m, int n, int K) {
    if (K < 0) throw std::invalid_argument("negative truncation order");
    TruncatedSeries product = casimir_generating_series(m, n, K);
    std::vector<Polynomial> out(K + 1);
    for (int k = 0; k <= K; ++k) out[k] = -product.coefficient(k + 1);
    return out;
}

bool is_supersymmetric(const Polynomial& f, int m, int n) {
    for (int i = 0; i + 1 < m; ++i)
        if (f.swap_variables(i, i + 1) != f) return false;
    for (int i = m; i + 1 < m + n; ++i)
        if (f.swap_variables(i, i + 1) != f) return false;
    if (m >= 1 && n >= 1) {
        const Polynomial t = Polynomial::variable(kSupersymmetryTestVariable);
        Polynomial g = f.substitute(m - 1, t).substitute(m + n - 1, -t);
        if (g.degree_in(kSupersymmetryTestVariable) > 0) return false;
    }
    return true;
}

Polynomial hc_project(const UEAElement& x) {
    const GlSignature sig = x.signature();
    const int d = sig.dimension();
    UEAElement::TermMap reordered;
    std::vector<GenId> word;
    for (const auto& [mono, coeff] : x.terms()) {
        word.clear();
        for (const auto& [g, e] : mono.powers()) word.insert(word.end(), e, g);
        straighten_word(sig, word, coeff, GeneratorOrder::TriangularBlocks, reordered);
    }
    Polynomial out;
    for (const auto& [mono, coeff] : reordered) {
        bool diagonal = true;
        Monomial::Powers powers;
        for (const auto& [g, e] : mono.powers()) {
            if (gen_row(g, d) != gen_col(g, d)) {
                diagonal = false;
                break;
            }
            powers.push_back({gen_row(g, d), e});
        }
        if (diagonal) out += Polynomial::term(Monomial::from_powers(std::move(powers)), coeff);
    }
    return out;
}

Polynomial hc_project_shifted(const UEAElement& x) {
    const GlSignature sig = x.signature();
    Polynomial p = hc_project(x);
    const auto shifts = hc_shifts(sig.m, sig.n);
    for (int i = 0; i < sig.dimension(); ++i)
        p = p.substitute(i, Polynomial::variable(i) - Polynomial::constant(shifts[i]));
    return p;
}

void C1RationalFunction::normalize() {
    while (c1_power > 0 && !num.is_zero() && num.divisible_by_variable(1)) {
        num = num.divided_by_variable(1);
        --c1_power;
    }
    if (num.is_zero()) c1_power = 0;
}

bool C1RationalFunction::operator==(const C1RationalFunction& o) const {
    // Cross-multiplied so unnormalized values still compare correctly.
    return num * Polynomial::variable(1, o.c1_power) ==
           o.num * Polynomial::variable(1, c1_power);
}

std::string C1RationalFunction::to_string() const {
    if (c1_power == 0) return num.to_string();
    std::ostringstream os;
    os << "(" << num.to_string() << ") / C1";
    if (c1_power > 1) os << "^" << c1_power;
    return os.str();
}

C1RationalFunction gl11_casimir_in_c1_c2(int k) {
    if (k < 1) throw std::invalid_argument("Casimir index must be positive");
    const Polynomial c1 = Polynomial::variable(1);
    const Polynomial c2 = Polynomial::variable(2);
    const Polynomial a = c2 + c1 - c1 * c1;
    const Polynomial b = c2 - c1 + c1 * c1;
    // C_k = C1 * h_{k-1}(A/(2 C1), B/(2 C1)) with the homogeneous sum cleared
    // of denominators: C1 * sum_{p+q=k-1} A^p B^q / (2 C1)^{k-1}.
    Polynomial h;
    for (int p = 0; p <= k - 1; ++p) h += a.pow(p) * b.pow(k - 1 - p);
    Rational scale = 1;
    for (int i = 0; i < k - 1; ++i) scale /= 2;
    C1RationalFunction out{c1 * h * scale, k - 1};
    out.normalize();
    return out;
}

}  // namespace glws
