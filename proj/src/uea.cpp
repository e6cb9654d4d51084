#include "glws/uea.hpp"

#include <algorithm>
#include <utility>

namespace glws {

UEAElement UEAElement::unit(GlSignature sig) { return scalar(sig, 1); }

UEAElement UEAElement::scalar(GlSignature sig, Rational c) {
    UEAElement e(sig);
    if (c != 0) e.terms_.emplace(Monomial::one(), std::move(c));
    return e;
}

UEAElement UEAElement::generator(GlSignature sig, int row, int col) {
    int d = sig.dimension();
    if (row < 0 || col < 0 || row >= d || col >= d)
        throw std::invalid_argument("generator index outside gl(m|n)");
    UEAElement e(sig);
    e.terms_.emplace(Monomial::variable(gen_id(row, col, d)), Rational(1));
    return e;
}

bool UEAElement::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational UEAElement::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void UEAElement::add_normal_term(const Monomial& mono, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
    if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch");
    for (const auto& [m, c] : o.terms_) add_normal_term(m, c);
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
    if (sig_ != o.sig_) throw std::invalid_argument("signature mismatch");
    for (const auto& [m, c] : o.terms_) add_normal_term(m, -c);
    return *this;
}

UEAElement UEAElement::operator+(const UEAElement& o) const {
    UEAElement out = *this;
    out += o;
    return out;
}

UEAElement UEAElement::operator-(const UEAElement& o) const {
    UEAElement out = *this;
    out -= o;
    return out;
}

UEAElement UEAElement::operator*(const Rational& s) const {
    UEAElement out(sig_);
    if (s == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
}

bool UEAElement::operator==(const UEAElement& o) const {
    return sig_ == o.sig_ && terms_ == o.terms_;
}

std::string UEAElement::to_string() const {
    const int d = sig_.dimension();
    auto namer = [d](int g) {
        return "E" + std::to_string(gen_row(g, d) + 1) + std::to_string(gen_col(g, d) + 1);
    };
    return detail::format_terms(terms_, namer);
}

namespace {

// Sort key; any fixed total order on the generators yields a PBW basis.
inline int order_key(GenId g, GeneratorOrder order, int dim) {
    if (order == GeneratorOrder::RowColumn) return g;
    int row = gen_row(g, dim), col = gen_col(g, dim);
    int block = row > col ? 0 : (row == col ? 1 : 2);
    return block * dim * dim + g;
}

struct PendingWord {
    std::vector<GenId> word;
    Rational coeff;
    int scan_from;
};

}  // namespace

void straighten_word(const GlSignature& sig, std::vector<GenId> word, Rational coeff,
                     GeneratorOrder order, UEAElement::TermMap& out) {
    const int dim = sig.dimension();
    std::vector<PendingWord> stack;
    stack.push_back({std::move(word), std::move(coeff), 0});

    while (!stack.empty()) {
        PendingWord item = std::move(stack.back());
        stack.pop_back();
        std::vector<GenId>& w = item.word;

        int violation = -1;
        bool vanishes = false;
        for (int i = item.scan_from; i + 1 < static_cast<int>(w.size()); ++i) {
            GenId x = w[i], y = w[i + 1];
            if (x == y) {
                if (gen_parity(x, sig) == 1) {
                    vanishes = true;  // odd generators square to zero
                    violation = i;
                    break;
                }
                continue;
            }
            if (order_key(y, order, dim) < order_key(x, order, dim)) {
                violation = i;
                break;
            }
        }
        if (vanishes) continue;

        if (violation < 0) {
            Monomial::Powers powers;
            for (GenId g : w) {
                if (!powers.empty() && powers.back().first == g)
                    ++powers.back().second;
                else
                    powers.push_back({g, 1});
            }
            Monomial mono = Monomial::from_powers(std::move(powers));
            auto [it, inserted] = out.emplace(std::move(mono), item.coeff);
            if (!inserted) {
                it->second += item.coeff;
                if (it->second == 0) out.erase(it);
            }
            continue;
        }

        const int v = violation;
        const GenId x = w[v], y = w[v + 1];
        const int px = gen_parity(x, sig), py = gen_parity(y, sig);
        const int rx = gen_row(x, dim), cx = gen_col(x, dim);
        const int ry = gen_row(y, dim), cy = gen_col(y, dim);
        const int next_scan = std::max(0, v - 1);

        // x y = (-1)^{|x||y|} y x + [x, y]
        if (cx == ry) {
            std::vector<GenId> shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + v);
            shorter.push_back(gen_id(rx, cy, dim));
            shorter.insert(shorter.end(), w.begin() + v + 2, w.end());
            stack.push_back({std::move(shorter), item.coeff, next_scan});
        }
        if (rx == cy) {
            std::vector<GenId> shorter;
            shorter.reserve(w.size() - 1);
            shorter.insert(shorter.end(), w.begin(), w.begin() + v);
            shorter.push_back(gen_id(ry, cx, dim));
            shorter.insert(shorter.end(), w.begin() + v + 2, w.end());
            Rational c = (px & py) ? item.coeff : -item.coeff;
            stack.push_back({std::move(shorter), std::move(c), next_scan});
        }
        std::swap(w[v], w[v + 1]);
        Rational swapped_coeff = (px & py) ? -item.coeff : item.coeff;
        stack.push_back({std::move(w), std::move(swapped_coeff), next_scan});
    }
}

UEAElement uea_mul(const UEAElement& a, const UEAElement& b) {
    if (a.signature() != b.signature()) throw std::invalid_argument("signature mismatch");
    UEAElement out(a.signature());
    std::vector<GenId> word;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            word.clear();
            for (const auto& [g, e] : ma.powers()) word.insert(word.end(), e, g);
            for (const auto& [g, e] : mb.powers()) word.insert(word.end(), e, g);
            UEAElement::TermMap partial;
            straighten_word(a.signature(), word, ca * cb, GeneratorOrder::RowColumn, partial);
            for (const auto& [m, c] : partial) out.add_normal_term(m, c);
        }
    }
    return out;
}

UEAElement generator_supercommutator(GlSignature sig, int i1, int j1, int i2, int j2) {
    UEAElement out(sig);
    int p1 = sig.index_parity(i1) ^ sig.index_parity(j1);
    int p2 = sig.index_parity(i2) ^ sig.index_parity(j2);
    if (j1 == i2) out += UEAElement::generator(sig, i1, j2);
    if (i1 == j2) {
        UEAElement t = UEAElement::generator(sig, i2, j1);
        out -= (p1 & p2) ? t * Rational(-1) : t;
    }
    return out;
}

UEAElement casimir_element(int k, GlSignature sig) {
    if (k < 1) throw std::invalid_argument("Casimir index must be positive");
    const int d = sig.dimension();
    UEAElement out(sig);
    std::vector<int> tuple(k, 0);
    std::vector<GenId> word(k);
    while (true) {
        int parity_sum = 0;
        for (int t = 1; t < k; ++t) parity_sum ^= sig.index_parity(tuple[t]);
        for (int t = 0; t < k; ++t) word[t] = gen_id(tuple[t], tuple[(t + 1) % k], d);
        UEAElement::TermMap partial;
        straighten_word(sig, word, parity_sum ? Rational(-1) : Rational(1),
                        GeneratorOrder::RowColumn, partial);
        for (const auto& [m, c] : partial) out.add_normal_term(m, c);

        int pos = k - 1;
        while (pos >= 0 && tuple[pos] == d - 1) tuple[pos--] = 0;
        if (pos < 0) break;
        ++tuple[pos];
    }
    return out;
}

int supertrace_dimension(GlSignature sig) { return sig.m - sig.n; }

bool is_central(const UEAElement& x) {
    const int d = x.signature().dimension();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            UEAElement g = UEAElement::generator(x.signature(), i, j);
            if (uea_mul(x, g) != uea_mul(g, x)) return false;
        }
    }
    return true;
}

UEAElement brute_force_weight(const Permutation& sigma, GlSignature sig, long budget) {
    const int d = sig.dimension();
    const int k = sigma.size();
    if (budget <= 0) throw std::invalid_argument("budget must be positive");
    long tuples = 1;
    for (int t = 0; t < k; ++t) {
        if (tuples > budget / std::max(d, 1)) {
            tuples = budget + 1;
            break;
        }
        tuples *= d;
    }
    if (tuples > budget)
        throw BudgetExceeded("brute force needs " + std::to_string(d) + "^" +
                             std::to_string(k) + " tuples, budget " + std::to_string(budget));
    UEAElement out(sig);
    if (k == 0) return UEAElement::unit(sig);
    if (d == 0) return out;

    const SignFunction f = SignFunction::of(sigma);
    std::vector<int> tuple(k, 0);
    std::vector<int> parities(k, 0);
    std::vector<GenId> word(k);
    while (true) {
        for (int v = 0; v < k; ++v) parities[v] = sig.index_parity(tuple[v]);
        for (int v = 0; v < k; ++v) word[v] = gen_id(tuple[v], tuple[sigma.apply(v)], d);
        Rational coeff = f.evaluate(parities) ? Rational(-1) : Rational(1);
        UEAElement::TermMap partial;
        straighten_word(sig, word, coeff, GeneratorOrder::RowColumn, partial);
        for (const auto& [m, c] : partial) out.add_normal_term(m, c);

        int pos = k - 1;
        while (pos >= 0 && tuple[pos] == d - 1) tuple[pos--] = 0;
        if (pos < 0) break;
        ++tuple[pos];
    }
    return out;
}

const UEAElement& CasimirEvaluator::casimir(int k) {
    auto it = cache_.find(k);
    if (it == cache_.end()) it = cache_.emplace(k, casimir_element(k, sig_)).first;
    return it->second;
}

UEAElement CasimirEvaluator::evaluate(const Polynomial& p) {
    UEAElement out(sig_);
    const Rational c0_value(supertrace_dimension(sig_));
    for (const auto& [mono, coeff] : p.terms()) {
        UEAElement acc = UEAElement::scalar(sig_, coeff);
        for (const auto& [var, exp] : mono.powers()) {
            if (var == 0) {
                Rational scale = 1;
                for (int e = 0; e < exp; ++e) scale *= c0_value;
                acc = acc * scale;
            } else {
                for (int e = 0; e < exp; ++e) acc = uea_mul(acc, casimir(var));
            }
        }
        out += acc;
    }
    return out;
}

}  // namespace glws
