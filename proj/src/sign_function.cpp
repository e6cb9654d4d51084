#include "glws/sign_function.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace glws {

std::set<int> distinguished_indices(const Permutation& sigma) {
    std::set<int> out;
    for (int a = 0; a < sigma.size(); ++a)
        if (sigma.inverse_apply(a) < a) out.insert(a);
    return out;
}

namespace {

// Edge with head h, drawn from tail + 1/3 to head - 1/3; scaled by 3 so the
// endpoints 3*tail + 1 and 3*head - 1 stay integral and pairwise distinct.
struct EdgeSpan {
    int lo, hi;
};

EdgeSpan edge_span(const Permutation& sigma, int head) {
    int a = 3 * sigma.inverse_apply(head) + 1;
    int b = 3 * head - 1;
    return {std::min(a, b), std::max(a, b)};
}

bool alternate(const EdgeSpan& s, const EdgeSpan& t) {
    int inside = (t.lo > s.lo && t.lo < s.hi) + (t.hi > s.lo && t.hi < s.hi);
    return inside == 1;
}

}  // namespace

std::set<std::pair<int, int>> distinguished_pairs(const Permutation& sigma) {
    const int k = sigma.size();
    std::vector<EdgeSpan> spans;
    spans.reserve(k);
    for (int h = 0; h < k; ++h) spans.push_back(edge_span(sigma, h));
    std::set<std::pair<int, int>> out;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (alternate(spans[a], spans[b])) out.insert({a, b});
    return out;
}

SignFunction SignFunction::of(const Permutation& sigma) {
    SignFunction f(sigma.size());
    f.linear_ = distinguished_indices(sigma);
    f.quadratic_ = distinguished_pairs(sigma);
    return f;
}

void SignFunction::toggle_linear(int a) {
    auto it = linear_.find(a);
    if (it == linear_.end())
        linear_.insert(a);
    else
        linear_.erase(it);
}

void SignFunction::toggle_quadratic(int a, int b) {
    if (a == b) {
        toggle_linear(a);
        return;
    }
    if (a > b) std::swap(a, b);
    auto it = quadratic_.find({a, b});
    if (it == quadratic_.end())
        quadratic_.insert({a, b});
    else
        quadratic_.erase(it);
}

int SignFunction::evaluate(const std::vector<int>& parities) const {
    if (static_cast<int>(parities.size()) != arity_)
        throw std::invalid_argument("parity vector length does not match arity");
    int value = 0;
    for (int a : linear_) value ^= parities[a] & 1;
    for (const auto& [a, b] : quadratic_) value ^= (parities[a] & parities[b]) & 1;
    return value;
}

SignFunction SignFunction::after_neighbor_swap(const Permutation& sigma, int l) const {
    if (sigma.size() != arity_) throw std::invalid_argument("sign function arity mismatch");
    if (l < 0 || l + 1 >= arity_) throw std::invalid_argument("swap position out of range");
    // Incident edge indices: a into l+1, b into l, c out of l, d out of l+1.
    const int a = l + 1, b = l, c = sigma.apply(l), d = sigma.apply(l + 1);
    SignFunction g = *this;
    g.toggle_quadratic(a, b);
    g.toggle_quadratic(a, c);
    g.toggle_quadratic(d, b);
    g.toggle_quadratic(d, c);
    return g.swap_variables(l, l + 1);
}

SignFunction SignFunction::identify_variables(int from, int to) const {
    if (from == to) throw std::invalid_argument("identify requires distinct variables");
    SignFunction g(arity_);
    for (int v : linear_) g.toggle_linear(v == from ? to : v);
    for (const auto& [x, y] : quadratic_)
        g.toggle_quadratic(x == from ? to : x, y == from ? to : y);
    return g;
}

SignFunction SignFunction::relabel_after_removal(int removed) const {
    SignFunction g(arity_ - 1);
    auto shift = [removed](int v) {
        if (v == removed) throw std::logic_error("removed variable still occurs");
        return v > removed ? v - 1 : v;
    };
    for (int v : linear_) g.linear_.insert(shift(v));
    for (const auto& [x, y] : quadratic_) {
        int sx = shift(x), sy = shift(y);
        g.quadratic_.insert({std::min(sx, sy), std::max(sx, sy)});
    }
    return g;
}

SignFunction SignFunction::swap_variables(int a, int b) const {
    if (a == b) return *this;
    auto rename = [a, b](int v) { return v == a ? b : (v == b ? a : v); };
    SignFunction g(arity_);
    for (int v : linear_) g.linear_.insert(rename(v));
    for (const auto& [x, y] : quadratic_) {
        int sx = rename(x), sy = rename(y);
        g.quadratic_.insert({std::min(sx, sy), std::max(sx, sy)});
    }
    return g;
}

std::string SignFunction::to_string() const {
    if (linear_.empty() && quadratic_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int v : linear_) {
        if (!first) os << " + ";
        os << "i" << v + 1;
        first = false;
    }
    for (const auto& [a, b] : quadratic_) {
        if (!first) os << " + ";
        os << "i" << a + 1 << "*i" << b + 1;
        first = false;
    }
    return os.str();
}

}  // namespace glws
