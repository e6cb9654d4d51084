#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace glws {

/// A bijection of {1..k}. Elements are named 1-based in all I/O and text
/// formats; internal storage and the index-taking methods are 0-based.
class Permutation {
  public:
    Permutation() = default;  // empty permutation, k = 0
    static Permutation identity(int k);
    /// images[i] = sigma(i+1), all 1-based.
    static Permutation from_images(const std::vector<int>& images);
    /// images[i] = sigma(i), all 0-based.
    static Permutation from_images0(std::vector<int> images);

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int i) const { return images_[i]; }
    int inverse_apply(int i) const { return inverse_[i]; }
    const std::vector<int>& images0() const { return images_; }
    std::vector<int> images() const;  // 1-based copy
    bool is_identity() const;

    /// Disjoint cycles, each listed from its minimal element, sorted by
    /// minimal element. 0-based, fixed points included.
    std::vector<std::vector<int>> cycles() const;

    /// rank[e] = position of element e in the concatenation of the cycle
    /// traversals above; the identity ranking characterises permutations
    /// that are concatenations of standard cycles.
    std::vector<int> canonical_ranks() const;

    /// Conjugate by the cyclic shift i -> i-1 (on 1..k). Requires k >= 1.
    Permutation base_point_rotation() const;

    /// Conjugate by the transposition of positions l, l+1 (0-based l).
    Permutation conjugate_by_adjacent_swap(int l) const;

    /// Finest partition of the ground set into consecutive sigma-closed
    /// intervals, each restricted permutation relabeled to start at 1.
    std::vector<Permutation> concatenation_blocks() const;

    /// k when sigma is the standard cycle 1->2->...->k->1 (a fixed point for
    /// k = 1), nothing otherwise.
    std::optional<int> standard_cycle_length() const;

    std::string to_cycle_string() const;  // "(1 3 2)", "Id", "()"
    std::string to_one_line_string() const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const;  // by size, then lex on images

  private:
    explicit Permutation(std::vector<int> images0);
    std::vector<int> images_;   // 0-based
    std::vector<int> inverse_;  // 0-based
};

/// Parses cycle notation "(1 3 2)(4 5)" or one-line notation "3 1 2".
/// Cycle notation leaves unmentioned elements fixed, up to `declared_k`
/// when given (otherwise the largest mentioned element).
/// Throws std::invalid_argument naming the offending token.
Permutation parse_permutation(const std::string& text,
                              std::optional<int> declared_k = std::nullopt);

/// Directed-graph view of a permutation: k vertices on a line, one edge
/// i -> sigma(i) per vertex; every vertex has in- and out-degree 1.
struct Digraph {
    int vertex_count = 0;
    std::vector<int> successor;    // successor[i] = sigma(i), 0-based
    std::vector<int> predecessor;  // predecessor[i] = sigma^{-1}(i)

    std::vector<std::pair<int, int>> edges() const;  // (tail, head), 0-based
};

Digraph make_digraph(const Permutation& sigma);

}  // namespace glws
