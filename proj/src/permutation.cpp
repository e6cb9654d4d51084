#include "glws/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace glws {

Permutation::Permutation(std::vector<int> images0) : images_(std::move(images0)) {
    const int k = static_cast<int>(images_.size());
    inverse_.assign(k, -1);
    for (int i = 0; i < k; ++i) {
        int v = images_[i];
        if (v < 0 || v >= k || inverse_[v] != -1)
            throw std::invalid_argument("permutation images are not a bijection");
        inverse_[v] = i;
    }
}

Permutation Permutation::identity(int k) {
    if (k < 0) throw std::invalid_argument("negative permutation size");
    std::vector<int> images(k);
    std::iota(images.begin(), images.end(), 0);
    return Permutation(std::move(images));
}

Permutation Permutation::from_images(const std::vector<int>& images) {
    std::vector<int> zero_based(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) zero_based[i] = images[i] - 1;
    return Permutation(std::move(zero_based));
}

Permutation Permutation::from_images0(std::vector<int> images) {
    return Permutation(std::move(images));
}

std::vector<int> Permutation::images() const {
    std::vector<int> out(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
    return out;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (int start = 0; start < size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int i = start;
        do {
            seen[i] = true;
            cycle.push_back(i);
            i = images_[i];
        } while (i != start);
        out.push_back(std::move(cycle));
    }
    return out;
}

std::vector<int> Permutation::canonical_ranks() const {
    std::vector<int> rank(images_.size());
    int idx = 0;
    for (const auto& cycle : cycles())
        for (int e : cycle) rank[e] = idx++;
    return rank;
}

Permutation Permutation::base_point_rotation() const {
    const int k = size();
    if (k == 0) throw std::invalid_argument("base point rotation of the empty permutation");
    std::vector<int> out(k);
    for (int j = 0; j < k; ++j) {
        int pre = (j + 1) % k;               // rho^{-1}(j)
        out[j] = (images_[pre] + k - 1) % k;  // rho(sigma(rho^{-1}(j)))
    }
    return Permutation(std::move(out));
}

Permutation Permutation::conjugate_by_adjacent_swap(int l) const {
    const int k = size();
    if (l < 0 || l + 1 >= k) throw std::invalid_argument("swap position out of range");
    auto tau = [l](int v) { return v == l ? l + 1 : (v == l + 1 ? l : v); };
    std::vector<int> out(k);
    for (int j = 0; j < k; ++j) out[j] = tau(images_[tau(j)]);
    return Permutation(std::move(out));
}

std::vector<Permutation> Permutation::concatenation_blocks() const {
    std::vector<Permutation> out;
    const int k = size();
    int start = 0;
    while (start < k) {
        int end = start;
        for (int i = start; i <= end; ++i) end = std::max(end, images_[i]);
        std::vector<int> block(end - start + 1);
        for (int i = start; i <= end; ++i) block[i - start] = images_[i] - start;
        out.push_back(Permutation(std::move(block)));
        start = end + 1;
    }
    return out;
}

std::optional<int> Permutation::standard_cycle_length() const {
    const int k = size();
    if (k == 0) return std::nullopt;
    for (int i = 0; i + 1 < k; ++i)
        if (images_[i] != i + 1) return std::nullopt;
    if (images_[k - 1] != 0) return std::nullopt;
    return k;
}

std::string Permutation::to_cycle_string() const {
    if (size() == 0) return "()";
    if (is_identity()) return "Id";
    std::ostringstream os;
    for (const auto& cycle : cycles()) {
        if (cycle.size() == 1) continue;
        os << "(";
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) os << " ";
            os << cycle[i] + 1;
        }
        os << ")";
    }
    return os.str();
}

std::string Permutation::to_one_line_string() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) {
        if (i) os << " ";
        os << images_[i] + 1;
    }
    return os.str();
}

bool Permutation::operator<(const Permutation& o) const {
    if (size() != o.size()) return size() < o.size();
    return images_ < o.images_;
}

namespace {

[[noreturn]] void parse_fail(const std::string& what, const std::string& token) {
    throw std::invalid_argument("permutation parse error: " + what + " '" + token + "'");
}

std::vector<std::string> split_tokens(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
            if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
        } else if (ch == '(' || ch == ')') {
            if (!current.empty()) tokens.push_back(std::move(current)), current.clear();
            tokens.push_back(std::string(1, ch));
        } else {
            current += ch;
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));
    return tokens;
}

int parse_element(const std::string& token) {
    if (token.empty()) parse_fail("empty token", token);
    for (char ch : token)
        if (!std::isdigit(static_cast<unsigned char>(ch))) parse_fail("malformed token", token);
    long value = std::strtol(token.c_str(), nullptr, 10);
    if (value < 1 || value > 1000000) parse_fail("element out of range", token);
    return static_cast<int>(value);
}

}  // namespace

Permutation parse_permutation(const std::string& text, std::optional<int> declared_k) {
    auto tokens = split_tokens(text);
    const bool cycle_form =
        std::find(tokens.begin(), tokens.end(), "(") != tokens.end() ||
        std::find(tokens.begin(), tokens.end(), ")") != tokens.end();

    if (cycle_form) {
        std::vector<std::vector<int>> cycles;
        std::vector<int>* open = nullptr;
        std::vector<bool> seen;
        for (const auto& tok : tokens) {
            if (tok == "(") {
                if (open) parse_fail("nested parenthesis", tok);
                cycles.emplace_back();
                open = &cycles.back();
            } else if (tok == ")") {
                if (!open) parse_fail("unmatched parenthesis", tok);
                open = nullptr;
            } else {
                if (!open) parse_fail("element outside parentheses", tok);
                int e = parse_element(tok);
                if (static_cast<int>(seen.size()) < e) seen.resize(e, false);
                if (seen[e - 1]) parse_fail("duplicate element", tok);
                seen[e - 1] = true;
                open->push_back(e - 1);
            }
        }
        if (open) parse_fail("unterminated cycle", "(");
        int max_element = static_cast<int>(seen.size());
        int k = declared_k.value_or(max_element);
        if (k < max_element) parse_fail("declared size below element", std::to_string(max_element));
        std::vector<int> images(k);
        std::iota(images.begin(), images.end(), 0);
        for (const auto& cycle : cycles)
            for (std::size_t i = 0; i < cycle.size(); ++i)
                images[cycle[i]] = cycle[(i + 1) % cycle.size()];
        return Permutation::from_images0(std::move(images));
    }

    std::vector<int> images;
    images.reserve(tokens.size());
    for (const auto& tok : tokens) images.push_back(parse_element(tok) - 1);
    if (declared_k && *declared_k != static_cast<int>(images.size()))
        parse_fail("declared size does not match one-line notation",
                   std::to_string(*declared_k));
    const int k = static_cast<int>(images.size());
    std::vector<bool> hit(k, false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        int v = images[i];
        if (v >= k) parse_fail("element out of range", tokens[i]);
        if (hit[v]) parse_fail("duplicate element", tokens[i]);
        hit[v] = true;
    }
    return Permutation::from_images0(std::move(images));
}

std::vector<std::pair<int, int>> Digraph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(vertex_count);
    for (int i = 0; i < vertex_count; ++i) out.push_back({i, successor[i]});
    return out;
}

Digraph make_digraph(const Permutation& sigma) {
    Digraph g;
    g.vertex_count = sigma.size();
    g.successor.resize(g.vertex_count);
    g.predecessor.resize(g.vertex_count);
    for (int i = 0; i < g.vertex_count; ++i) {
        g.successor[i] = sigma.apply(i);
        g.predecessor[i] = sigma.inverse_apply(i);
    }
    return g;
}

}  // namespace glws
