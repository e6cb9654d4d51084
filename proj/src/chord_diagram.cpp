#include "glws/chord_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace glws {

ChordDiagram ChordDiagram::from_pairs(std::vector<std::pair<int, int>> pairs) {
    for (auto& [a, b] : pairs) {
        --a;
        --b;
    }
    return from_pairs0(std::move(pairs));
}

ChordDiagram ChordDiagram::from_pairs0(std::vector<std::pair<int, int>> pairs) {
    const int points = 2 * static_cast<int>(pairs.size());
    std::vector<bool> seen(points, false);
    for (auto& [a, b] : pairs) {
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= points || a == b)
            throw std::invalid_argument("chord endpoints out of range");
        if (seen[a] || seen[b]) throw std::invalid_argument("chord endpoints repeat");
        seen[a] = seen[b] = true;
    }
    std::sort(pairs.begin(), pairs.end());
    ChordDiagram d;
    d.pairs_ = std::move(pairs);
    return d;
}

std::vector<std::pair<int, int>> ChordDiagram::pairs() const {
    auto out = pairs_;
    for (auto& [a, b] : out) {
        ++a;
        ++b;
    }
    return out;
}

Permutation ChordDiagram::to_involution() const {
    std::vector<int> images(point_count());
    for (const auto& [a, b] : pairs_) {
        images[a] = b;
        images[b] = a;
    }
    return Permutation::from_images0(std::move(images));
}

ChordDiagram ChordDiagram::rotated() const {
    const int points = point_count();
    auto out = pairs_;
    for (auto& [a, b] : out) {
        a = (a + points - 1) % points;
        b = (b + points - 1) % points;
    }
    return from_pairs0(std::move(out));
}

int ChordDiagram::partner(int point) const {
    for (const auto& [a, b] : pairs_) {
        if (a == point) return b;
        if (b == point) return a;
    }
    throw std::invalid_argument("point outside diagram");
}

std::string ChordDiagram::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (i) os << ",";
        os << "[" << pairs_[i].first + 1 << "," << pairs_[i].second + 1 << "]";
    }
    os << "]";
    return os.str();
}

ChordDiagram parse_chord_diagram(const std::string& text) {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> stack_values;
    int depth = 0;
    std::string number;
    auto flush_number = [&]() {
        if (number.empty()) return;
        if (number.size() > 6)
            throw std::invalid_argument("chord diagram parse error: endpoint '" + number + "'");
        stack_values.push_back(std::stoi(number));
        number.clear();
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) {
            flush_number();
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            number += ch;
        } else if (ch == '[') {
            flush_number();
            ++depth;
            if (depth > 2) throw std::invalid_argument("chord diagram parse error: nesting");
        } else if (ch == ']') {
            flush_number();
            if (depth == 2) {
                if (stack_values.size() != 2)
                    throw std::invalid_argument("chord diagram parse error: pair needs 2 points");
                pairs.push_back({stack_values[0], stack_values[1]});
                stack_values.clear();
            }
            --depth;
            if (depth < 0) throw std::invalid_argument("chord diagram parse error: bracket");
        } else if (ch == ',') {
            flush_number();
        } else {
            throw std::invalid_argument(std::string("chord diagram parse error: token '") + ch +
                                        "'");
        }
    }
    if (depth != 0) throw std::invalid_argument("chord diagram parse error: open bracket");
    return ChordDiagram::from_pairs(std::move(pairs));
}

namespace {

void enumerate_matchings(std::vector<int>& partner, int points,
                         std::vector<ChordDiagram>& out) {
    int first = -1;
    for (int i = 0; i < points; ++i)
        if (partner[i] < 0) {
            first = i;
            break;
        }
    if (first < 0) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < points; ++i)
            if (partner[i] > i) pairs.push_back({i, partner[i]});
        out.push_back(ChordDiagram::from_pairs0(std::move(pairs)));
        return;
    }
    for (int j = first + 1; j < points; ++j) {
        if (partner[j] >= 0) continue;
        partner[first] = j;
        partner[j] = first;
        enumerate_matchings(partner, points, out);
        partner[first] = partner[j] = -1;
    }
}

}  // namespace

std::vector<ChordDiagram> all_chord_diagrams(int chords) {
    if (chords < 0) throw std::invalid_argument("negative chord count");
    std::vector<ChordDiagram> out;
    std::vector<int> partner(2 * chords, -1);
    enumerate_matchings(partner, 2 * chords, out);
    return out;
}

}  // namespace glws
