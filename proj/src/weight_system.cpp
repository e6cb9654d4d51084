#include "glws/weight_system.hpp"

#include <fstream>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "glws/json_io.hpp"

namespace glws {

namespace {

constexpr int kMaxRecursionDepth = 100000;

std::optional<int> pick_reduction_position(const Permutation& sigma, ReductionPolicy policy) {
    const std::vector<int> rank = sigma.canonical_ranks();
    const int k = sigma.size();
    if (policy == ReductionPolicy::LeftmostInversion) {
        for (int l = 0; l + 1 < k; ++l)
            if (rank[l] > rank[l + 1]) return l;
    } else {
        for (int l = k - 2; l >= 0; --l)
            if (rank[l] > rank[l + 1]) return l;
    }
    return std::nullopt;
}

/// Rebuilds a permutation on the ground set minus `removed` (ascending),
/// taking targets from `overrides` where present and from sigma elsewhere.
Permutation rebuild_without(const Permutation& sigma, const std::vector<int>& removed,
                            const std::vector<std::pair<int, int>>& overrides) {
    const int k = sigma.size();
    std::vector<int> relabel(k, -1);
    int next = 0;
    for (int v = 0; v < k; ++v) {
        bool gone = false;
        for (int r : removed) gone = gone || (v == r);
        if (!gone) relabel[v] = next++;
    }
    std::vector<int> images(next, -1);
    for (int v = 0; v < k; ++v) {
        if (relabel[v] < 0) continue;
        int target = sigma.apply(v);
        for (const auto& [src, dst] : overrides)
            if (src == v) target = dst;
        images[relabel[v]] = relabel[target];
    }
    return Permutation::from_images0(std::move(images));
}

}  // namespace

namespace reduction {

Permutation merge_join_in_out(const Permutation& sigma, int l) {
    if (sigma.apply(l + 1) == l + 1) return rebuild_without(sigma, {l + 1}, {});
    const int p = sigma.inverse_apply(l + 1);
    const int q = sigma.apply(l);
    const int s = sigma.apply(l + 1);
    if (sigma.apply(l) == l) return rebuild_without(sigma, {l + 1}, {{p, l}, {l, s}});
    return rebuild_without(sigma, {l + 1}, {{l, s}, {p, q}});
}

Permutation merge_join_out_in(const Permutation& sigma, int l) {
    if (sigma.apply(l) == l || sigma.apply(l + 1) == l + 1) return merge_join_in_out(sigma, l);
    const int p = sigma.inverse_apply(l + 1);
    const int q = sigma.apply(l);
    const int r = sigma.inverse_apply(l);
    const int s = sigma.apply(l + 1);
    return rebuild_without(sigma, {l + 1}, {{p, l}, {l, q}, {r, s}});
}

Permutation back_edge_bypass(const Permutation& sigma, int l) {
    const int p = sigma.inverse_apply(l + 1);
    const int q = sigma.apply(l);
    return rebuild_without(sigma, {l, l + 1}, {{p, q}});
}

Permutation back_edge_contract(const Permutation& sigma, int l) {
    const int p = sigma.inverse_apply(l + 1);
    const int q = sigma.apply(l);
    return rebuild_without(sigma, {l + 1}, {{p, l}, {l, q}});
}

}  // namespace reduction

GlWeightSystem::GlWeightSystem(ReductionPolicy policy) : policy_(policy) {}

bool GlWeightSystem::cache_lookup(const std::vector<int>& key, Polynomial& out) {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(key);
    if (it == cache_.end()) return false;
    out = it->second;
    return true;
}

void GlWeightSystem::cache_store(const std::vector<int>& key, const Polynomial& value) {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_.emplace(key, value);
    if (inserted) unsaved_keys_.push_back(key);
}

std::size_t GlWeightSystem::cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

Polynomial GlWeightSystem::evaluate_impl(const Permutation& sigma, int depth) {
    if (depth > kMaxRecursionDepth) throw std::logic_error("recurrence failed to terminate");
    if (sigma.size() == 0) return Polynomial::one();

    const std::vector<int>& key = sigma.images0();
    Polynomial value;
    if (cache_lookup(key, value)) return value;

    auto blocks = sigma.concatenation_blocks();
    if (blocks.size() > 1) {
        value = Polynomial::one();
        for (const Permutation& block : blocks) value *= evaluate_impl(block, depth + 1);
    } else if (auto len = sigma.standard_cycle_length()) {
        value = Polynomial::variable(*len);
    } else {
        auto pos = pick_reduction_position(sigma, policy_);
        if (!pos) throw std::logic_error("non-canonical permutation without reduction position");
        const int l = *pos;
        if (sigma.apply(l) == l + 1)
            throw std::logic_error("reduction position landed on a forward edge");
        const Permutation swapped = sigma.conjugate_by_adjacent_swap(l);
        if (sigma.apply(l + 1) == l) {
            value = evaluate_impl(swapped, depth + 1) +
                    Polynomial::variable(1) *
                        evaluate_impl(reduction::back_edge_bypass(sigma, l), depth + 1) -
                    Polynomial::variable(0) *
                        evaluate_impl(reduction::back_edge_contract(sigma, l), depth + 1);
        } else {
            value = evaluate_impl(swapped, depth + 1) +
                    evaluate_impl(reduction::merge_join_in_out(sigma, l), depth + 1) -
                    evaluate_impl(reduction::merge_join_out_in(sigma, l), depth + 1);
        }
    }

    cache_store(key, value);
    return value;
}

Polynomial GlWeightSystem::evaluate(const Permutation& sigma) {
    Polynomial value = evaluate_impl(sigma, 0);
    if (!value.has_integer_coefficients())
        throw std::logic_error("weight system value has a non-integer coefficient");
    if (value.weighted_degree(casimir_weight) > sigma.size())
        throw std::logic_error("weight system value exceeds the degree bound");
    return value;
}

Polynomial GlWeightSystem::evaluate(const ChordDiagram& diagram) {
    return evaluate(diagram.to_involution());
}

Polynomial GlWeightSystem::specialize(const Permutation& sigma, int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("negative signature");
    return substitute_c0(evaluate(sigma), Rational(m - n));
}

std::size_t GlWeightSystem::load_cache(const std::string& path) {
    std::ifstream in(path);
    if (!in) return 0;
    std::size_t loaded = 0;
    std::string line;
    std::unique_lock lock(mutex_);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json record = Json::parse(line);
        std::vector<int> key = record.at("key").get<std::vector<int>>();
        for (int& v : key) --v;
        Polynomial value = polynomial_from_json(record.at("value"));
        if (cache_.emplace(std::move(key), std::move(value)).second) ++loaded;
    }
    return loaded;
}

std::size_t GlWeightSystem::append_cache(const std::string& path) {
    std::unique_lock lock(mutex_);
    if (unsaved_keys_.empty()) return 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file for append: " + path);
    std::size_t written = 0;
    for (const auto& key : unsaved_keys_) {
        Json record;
        Json key_json = Json::array();
        for (int v : key) key_json.push_back(v + 1);
        record["key"] = key_json;
        record["value"] = polynomial_to_json(cache_.at(key));
        out << record.dump() << "\n";
        ++written;
    }
    unsaved_keys_.clear();
    return written;
}

Polynomial substitute_c0(const Polynomial& p, const Rational& v) {
    return p.substitute(0, v);
}

int casimir_weight(int var) { return var == 0 ? 1 : var; }

}  // namespace glws
