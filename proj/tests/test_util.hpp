#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "glws/chord_diagram.hpp"
#include "glws/permutation.hpp"
#include "glws/polynomial.hpp"

namespace glws::testing {

/// xorshift64: deterministic across platforms, good enough for test data.
struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline std::vector<Permutation> symmetric_group(int k) {
    std::vector<int> images(k);
    for (int i = 0; i < k; ++i) images[i] = i;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::from_images0(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

inline Permutation random_permutation(TestRng& rng, int k) {
    std::vector<int> images(k);
    for (int i = 0; i < k; ++i) images[i] = i;
    for (int i = k - 1; i > 0; --i) std::swap(images[i], images[rng.below(i + 1)]);
    return Permutation::from_images0(std::move(images));
}

inline Polynomial random_polynomial(TestRng& rng, int max_var, int terms, int max_exp,
                                    int coeff_span) {
    Polynomial p;
    for (int t = 0; t < terms; ++t) {
        Monomial::Powers powers;
        int vars = rng.below(3);
        for (int v = 0; v < vars; ++v)
            powers.push_back({rng.below(max_var + 1), 1 + rng.below(max_exp)});
        long num = rng.below(2 * coeff_span + 1) - coeff_span;
        long den = 1 + rng.below(3);
        p += Polynomial::term(Monomial::from_powers(std::move(powers)), make_rational(num, den));
    }
    return p;
}

/// Removes the endpoint `moved` (its partner is `partner_of_moved`), then
/// re-inserts it at `slot` in the gapped labeling. Slots are 0-based:
/// inserting at the gapped index of a point places the moved endpoint
/// immediately before it; at index+1, immediately after.
inline ChordDiagram insert_moved_endpoint(const ChordDiagram& d, int moved, int partner_of_moved,
                                          int slot) {
    auto gap = [moved](int v) { return v - (v > moved ? 1 : 0); };
    std::vector<std::pair<int, int>> chords;
    for (auto [a, b] : d.pairs0()) {
        if (a == moved || b == moved) continue;
        chords.push_back({gap(a), gap(b)});
    }
    int partner_gapped = gap(partner_of_moved);
    auto widen = [slot](int v) { return v + (v >= slot ? 1 : 0); };
    for (auto& [a, b] : chords) {
        a = widen(a);
        b = widen(b);
    }
    chords.push_back({widen(partner_gapped), slot});
    return ChordDiagram::from_pairs0(std::move(chords));
}

/// The four diagrams of one four-term placement: the moved endpoint sits
/// right after / right before each endpoint of the other chord. Positions
/// f and f+1 must belong to different chords; the first returned diagram
/// reconstructs d itself.
struct FourTermQuadruple {
    ChordDiagram after_f, before_f, after_partner, before_partner;
};

inline FourTermQuadruple four_term_quadruple(const ChordDiagram& d, int f) {
    const int e = f + 1;
    const int fp = d.partner(f);
    const int ep = d.partner(e);
    auto gap = [e](int v) { return v - (v > e ? 1 : 0); };
    return FourTermQuadruple{
        insert_moved_endpoint(d, e, ep, gap(f) + 1),
        insert_moved_endpoint(d, e, ep, gap(f)),
        insert_moved_endpoint(d, e, ep, gap(fp) + 1),
        insert_moved_endpoint(d, e, ep, gap(fp)),
    };
}

}  // namespace glws::testing
