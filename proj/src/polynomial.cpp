#include "glws/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace glws {

Monomial Monomial::variable(int var, int exp) {
    if (var < 0) throw std::invalid_argument("negative variable index");
    if (exp < 0) throw std::invalid_argument("negative exponent");
    Monomial m;
    if (exp > 0) m.powers_.push_back({var, exp});
    return m;
}

Monomial Monomial::from_powers(Powers powers) {
    std::sort(powers.begin(), powers.end());
    Monomial m;
    for (const auto& [var, exp] : powers) {
        if (var < 0) throw std::invalid_argument("negative variable index");
        if (exp < 0) throw std::invalid_argument("negative exponent");
        if (exp == 0) continue;
        if (!m.powers_.empty() && m.powers_.back().first == var)
            m.powers_.back().second += exp;
        else
            m.powers_.push_back({var, exp});
    }
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [var, exp] : powers_) d += exp;
    return d;
}

int Monomial::exponent_of(int var) const {
    for (const auto& [v, e] : powers_)
        if (v == var) return e;
    return 0;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < powers_.size() || j < other.powers_.size()) {
        if (j == other.powers_.size() ||
            (i < powers_.size() && powers_[i].first < other.powers_[j].first)) {
            out.powers_.push_back(powers_[i++]);
        } else if (i == powers_.size() || other.powers_[j].first < powers_[i].first) {
            out.powers_.push_back(other.powers_[j++]);
        } else {
            out.powers_.push_back({powers_[i].first, powers_[i].second + other.powers_[j].second});
            ++i;
            ++j;
        }
    }
    return out;
}

Monomial Monomial::divided_by_variable(int var) const {
    Monomial out;
    bool found = false;
    for (const auto& [v, e] : powers_) {
        if (v == var) {
            found = true;
            if (e > 1) out.powers_.push_back({v, e - 1});
        } else {
            out.powers_.push_back({v, e});
        }
    }
    if (!found) throw std::logic_error("monomial not divisible by variable");
    return out;
}

bool Monomial::operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    std::size_t i = 0, j = 0;
    while (i < powers_.size() && j < o.powers_.size()) {
        if (powers_[i].first != o.powers_[j].first)
            return powers_[i].first < o.powers_[j].first;
        if (powers_[i].second != o.powers_[j].second)
            return powers_[i].second > o.powers_[j].second;
        ++i;
        ++j;
    }
    return i < powers_.size();
}

std::string casimir_name(int var) { return "C" + std::to_string(var); }
std::string x_name(int var) { return "x" + std::to_string(var + 1); }
std::string diagonal_name(int var) {
    return "E" + std::to_string(var + 1) + std::to_string(var + 1);
}

Polynomial Polynomial::constant(Rational c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(Monomial::one(), std::move(c));
    return p;
}

Polynomial Polynomial::variable(int var, int exp) {
    return term(Monomial::variable(var, exp), 1);
}

Polynomial Polynomial::term(Monomial m, Rational c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Polynomial::constant_value() const {
    auto it = terms_.find(Monomial::one());
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    out -= o;
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::operator*(const Rational& s) const {
    Polynomial out;
    if (s == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
    return out;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial out = one();
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) out *= base;
        base = (e >>= 1) > 0 ? base * base : base;
    }
    return out;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

int Polynomial::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exponent_of(var));
    return d;
}

int Polynomial::weighted_degree(const std::function<int(int)>& weight) const {
    int best = 0;
    for (const auto& [m, c] : terms_) {
        int d = 0;
        for (const auto& [var, exp] : m.powers()) d += weight(var) * exp;
        best = std::max(best, d);
    }
    return best;
}

bool Polynomial::has_integer_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

bool Polynomial::uses_variable(int var) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent_of(var) > 0) return true;
    return false;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
    Polynomial out;
    std::vector<Polynomial> value_powers = {Polynomial::one()};
    for (const auto& [m, c] : terms_) {
        int e = m.exponent_of(var);
        if (e == 0) {
            out.add_term(m, c);
            continue;
        }
        while (static_cast<int>(value_powers.size()) <= e)
            value_powers.push_back(value_powers.back() * value);
        Monomial rest;
        for (const auto& [v, ee] : m.powers())
            if (v != var) rest = rest.times(Monomial::variable(v, ee));
        out += Polynomial::term(rest, c) * value_powers[e];
    }
    return out;
}

Polynomial Polynomial::substitute(int var, const Rational& value) const {
    return substitute(var, Polynomial::constant(value));
}

Polynomial Polynomial::swap_variables(int a, int b) const {
    if (a == b) return *this;
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Monomial::Powers powers;
        for (auto [v, e] : m.powers()) {
            if (v == a)
                v = b;
            else if (v == b)
                v = a;
            powers.push_back({v, e});
        }
        out.add_term(Monomial::from_powers(std::move(powers)), c);
    }
    return out;
}

Rational Polynomial::evaluate(const std::map<int, Rational>& assignment) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [var, exp] : m.powers()) {
            auto it = assignment.find(var);
            Rational base = it == assignment.end() ? Rational(0) : it->second;
            for (int e = 0; e < exp; ++e) v *= base;
        }
        total += v;
    }
    return total;
}

bool Polynomial::divisible_by_variable(int var) const {
    for (const auto& [m, c] : terms_)
        if (m.exponent_of(var) == 0) return false;
    return true;
}

Polynomial Polynomial::divided_by_variable(int var) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m.divided_by_variable(var), c);
    return out;
}

namespace detail {

std::string format_terms(const Polynomial::TermMap& terms, const VariableNamer& namer,
                         const std::string& power_sep, const std::string& mul_sep) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms) {
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono;
        for (const auto& [var, exp] : m.powers()) {
            if (!mono.empty()) mono += mul_sep;
            mono += namer(var);
            if (exp > 1) mono += power_sep + std::to_string(exp);
        }
        if (mono.empty()) {
            os << rational_to_string(abs_c);
        } else if (abs_c == 1) {
            os << mono;
        } else {
            os << rational_to_string(abs_c) << mul_sep << mono;
        }
    }
    return os.str();
}

}  // namespace detail

std::string Polynomial::to_string(const VariableNamer& namer) const {
    return detail::format_terms(terms_, namer);
}

}  // namespace glws
