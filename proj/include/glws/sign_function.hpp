#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "glws/permutation.hpp"

namespace glws {

/// Quadratic polynomial over GF(2) in the parity variables i_1..i_k of a
/// permutation's edge indices:
///     f = sum_{a in linear} i_a  +  sum_{{a,b} in quadratic} i_a i_b.
/// Variables are indexed by edge head (the edge t -> h carries index h);
/// 0-based internally. Kept in reduced Boolean form: no {a,a} pairs
/// (i_a^2 = i_a folds into the linear part).
class SignFunction {
  public:
    SignFunction() = default;
    explicit SignFunction(int arity) : arity_(arity) {}

    /// The sign function of a permutation: linear part from indices with
    /// backward-pointing edges, quadratic part from alternating edge pairs.
    static SignFunction of(const Permutation& sigma);

    int arity() const { return arity_; }
    const std::set<int>& linear() const { return linear_; }
    const std::set<std::pair<int, int>>& quadratic() const { return quadratic_; }

    void toggle_linear(int a);
    /// Toggles i_a i_b; a == b collapses to the linear term i_a.
    void toggle_quadratic(int a, int b);

    /// Evaluates over GF(2); parities must have length arity().
    int evaluate(const std::vector<int>& parities) const;

    /// Sign function of (l l+1) * sigma * (l l+1), derived from this one by
    /// toggling the four quadratic pairs of the edges incident to positions
    /// l, l+1 and renaming the two swapped variables. `sigma` must be the
    /// permutation this sign function belongs to; l is 0-based.
    SignFunction after_neighbor_swap(const Permutation& sigma, int l) const;

    /// Substitutes i_from := i_to (from != to), eliminating variable `from`.
    SignFunction identify_variables(int from, int to) const;
    /// Shifts every variable index above `removed` down by one; `removed`
    /// must not occur. Arity drops by one.
    SignFunction relabel_after_removal(int removed) const;
    SignFunction swap_variables(int a, int b) const;

    std::string to_string() const;  // "i3 + i1*i3 + ...", 1-based, "0" when zero

    bool operator==(const SignFunction& o) const {
        return arity_ == o.arity_ && linear_ == o.linear_ && quadratic_ == o.quadratic_;
    }
    bool operator!=(const SignFunction& o) const { return !(*this == o); }

  private:
    int arity_ = 0;
    std::set<int> linear_;
    std::set<std::pair<int, int>> quadratic_;
};

/// P1: indices a with sigma^{-1}(a) < a, 0-based.
std::set<int> distinguished_indices(const Permutation& sigma);

/// P2: unordered pairs {a,b} whose edges alternate once both are nudged off
/// the vertices (tail + 1/3, head - 1/3, realized in integers). 0-based.
std::set<std::pair<int, int>> distinguished_pairs(const Permutation& sigma);

}  // namespace glws
