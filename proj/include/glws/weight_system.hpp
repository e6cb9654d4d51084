#pragma once

#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "glws/chord_diagram.hpp"
#include "glws/permutation.hpp"
#include "glws/polynomial.hpp"

namespace glws {

/// Which adjacent out-of-order pair the recurrence reduces at. Both choices
/// terminate; they must produce identical polynomials.
enum class ReductionPolicy {
    LeftmostInversion,
    RightmostInversion,
};

/// The universal GL weight system: permutations (and chord diagrams, via
/// their fixed-point-free involutions) to polynomials in C0, C1, C2, ...
///
/// Evaluation is by structural recursion: split into concatenation blocks,
/// read standard cycles off as C_k, otherwise bubble one adjacent pair
/// toward the canonical cycle-sorted arrangement, trading the permutation
/// for its neighbor-swap conjugate and two one-element-smaller merges (a
/// C1/C0 pair of terms when the two neighbors are joined by an edge).
/// Values are memoized; the cache tolerates concurrent readers.
class GlWeightSystem {
  public:
    explicit GlWeightSystem(ReductionPolicy policy = ReductionPolicy::LeftmostInversion);

    Polynomial evaluate(const Permutation& sigma);
    Polynomial evaluate(const ChordDiagram& diagram);
    /// evaluate, then substitute m-n for C0.
    Polynomial specialize(const Permutation& sigma, int m, int n);

    ReductionPolicy policy() const { return policy_; }
    std::size_t cache_size() const;

    /// Cache persistence: one JSON object per line, {"key": [...], "value": ...}.
    /// Loaded entries are trusted; spot validation is a cache-info concern.
    std::size_t load_cache(const std::string& path);
    /// Appends entries first computed by this instance since the last append.
    std::size_t append_cache(const std::string& path);

  private:
    Polynomial evaluate_impl(const Permutation& sigma, int depth);
    bool cache_lookup(const std::vector<int>& key, Polynomial& out);
    void cache_store(const std::vector<int>& key, const Polynomial& value);

    ReductionPolicy policy_;
    mutable std::shared_mutex mutex_;
    std::map<std::vector<int>, Polynomial> cache_;
    std::vector<std::vector<int>> unsaved_keys_;
};

/// Every occurrence of C0 replaced by the scalar v.
Polynomial substitute_c0(const Polynomial& p, const Rational& v);

/// Weight of a Casimir variable in the degree bound: C0 weighs 1, C_k weighs k.
int casimir_weight(int var);

/// The digraph surgeries of the recurrence at positions l, l+1 (0-based l).
/// The swap partner itself is Permutation::conjugate_by_adjacent_swap.
namespace reduction {

/// k-1 elements: the edge into l+1 joined with the edge out of l, the merged
/// vertex keeping the edge into l and the edge out of l+1. Requires no edge
/// between the two positions; a fixed point at either one collapses both
/// merges to fixed-point deletion.
Permutation merge_join_in_out(const Permutation& sigma, int l);

/// k-1 elements: the complementary merge (edge into l joined with the edge
/// out of l+1). Same preconditions.
Permutation merge_join_out_in(const Permutation& sigma, int l);

/// k-2 elements: both vertices deleted, outer edges joined directly.
/// Requires sigma(l+1) = l.
Permutation back_edge_bypass(const Permutation& sigma, int l);

/// k-1 elements: the two vertices contracted across the back edge.
/// Requires sigma(l+1) = l.
Permutation back_edge_contract(const Permutation& sigma, int l);

}  // namespace reduction

}  // namespace glws
