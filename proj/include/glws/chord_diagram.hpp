#pragma once

#include <string>
#include <utility>
#include <vector>

#include "glws/permutation.hpp"

namespace glws {

/// n disjoint chords pairing the 2n marked points of an oriented circle.
/// Points are numbered 1..2n from the base point, which sits just before
/// point 1. Each stored pair is (smaller, larger), pairs sorted by their
/// smaller endpoint; endpoints are 1-based in I/O and 0-based internally.
class ChordDiagram {
  public:
    ChordDiagram() = default;  // no chords
    /// pairs use 1-based endpoints; they must partition {1..2n}.
    static ChordDiagram from_pairs(std::vector<std::pair<int, int>> pairs);
    static ChordDiagram from_pairs0(std::vector<std::pair<int, int>> pairs);

    int chord_count() const { return static_cast<int>(pairs_.size()); }
    int point_count() const { return 2 * chord_count(); }
    const std::vector<std::pair<int, int>>& pairs0() const { return pairs_; }
    std::vector<std::pair<int, int>> pairs() const;  // 1-based copy

    /// The product of the chord transpositions: an involution of
    /// {1..2n} without fixed points.
    Permutation to_involution() const;

    /// Moves the base point one marked point forward (labels shift by -1).
    ChordDiagram rotated() const;

    /// Chord partner of a point, 0-based.
    int partner(int point) const;

    std::string to_string() const;  // "[[1,2],[3,4]]"

    bool operator==(const ChordDiagram& o) const { return pairs_ == o.pairs_; }
    bool operator!=(const ChordDiagram& o) const { return !(*this == o); }
    bool operator<(const ChordDiagram& o) const { return pairs_ < o.pairs_; }

  private:
    std::vector<std::pair<int, int>> pairs_;  // 0-based, normalized
};

/// Parses "[[1,2],[3,4]]" (whitespace tolerated).
/// Throws std::invalid_argument on malformed input or invalid pairing.
ChordDiagram parse_chord_diagram(const std::string& text);

/// All perfect matchings of {1..2n} as diagrams, deterministic order.
std::vector<ChordDiagram> all_chord_diagrams(int chords);

}  // namespace glws
