#include <doctest.h>

#include <cstdio>
#include <string>
#include <thread>

#include "glws/uea.hpp"
#include "glws/weight_system.hpp"
#include "test_util.hpp"

using namespace glws;
using namespace glws::testing;

namespace {
const Polynomial C0 = Polynomial::variable(0);
const Polynomial C1 = Polynomial::variable(1);
const Polynomial C2 = Polynomial::variable(2);
const Polynomial C3 = Polynomial::variable(3);
const Polynomial C4 = Polynomial::variable(4);

Permutation concatenate(const Permutation& a, const Permutation& b) {
    std::vector<int> images = a.images0();
    for (int v : b.images0()) images.push_back(v + a.size());
    return Permutation::from_images0(std::move(images));
}
}  // namespace

TEST_CASE("base values") {
    GlWeightSystem w;
    CHECK(w.evaluate(Permutation()) == Polynomial::one());
    CHECK(w.evaluate(parse_permutation("(1 2)")) == C2);
    CHECK(w.evaluate(parse_permutation("(1 2 3 4)")) == C4);
    CHECK(w.evaluate(Permutation::identity(4)) == C1.pow(4));
    CHECK(w.evaluate(Permutation::identity(1)) == C1);
}

TEST_CASE("recurrence worked examples") {
    GlWeightSystem w;
    CHECK(w.evaluate(parse_permutation("(1 3 2)")) == C3 - C0 * C2 + C1.pow(2));
    CHECK(w.evaluate(parse_permutation("(1 4 3 2)")) ==
          C4 - Polynomial::constant(2) * C0 * C3 + Polynomial::constant(2) * C1 * C2 +
              C0.pow(2) * C2 - C0 * C1.pow(2));
    CHECK(w.evaluate(parse_permutation("(1 2 4 3)")) == C4 - C0 * C3 + C1 * C2);
}

TEST_CASE("diagram values") {
    GlWeightSystem w;
    CHECK(w.evaluate(parse_chord_diagram("[[1,2]]")) == C2);
    CHECK(w.evaluate(parse_chord_diagram("[[1,2],[3,4]]")) == C2.pow(2));
    CHECK(w.evaluate(parse_chord_diagram("[[1,3],[2,4]]")) == C2.pow(2) - C0 * C2 + C1.pow(2));
    CHECK(w.evaluate(parse_chord_diagram("[[1,4],[2,5],[3,6]]")) ==
          w.evaluate(parse_permutation("(1 4)(2 5)(3 6)")));
}

TEST_CASE("specialization") {
    GlWeightSystem w;
    CHECK(w.specialize(parse_permutation("(1 3 2)"), 1, 1) == C3 + C1.pow(2));
    CHECK(w.specialize(parse_permutation("(1 3 2)"), 2, 1) == C3 - C2 + C1.pow(2));
    CHECK(w.specialize(Permutation::identity(2), 3, 1) == C1.pow(2));
    CHECK_THROWS_AS(w.specialize(Permutation::identity(2), -1, 0), std::invalid_argument);
}

TEST_CASE("multiplicative under concatenation") {
    GlWeightSystem w;
    TestRng rng(555);
    for (int trial = 0; trial < 30; ++trial) {
        Permutation a = random_permutation(rng, 1 + rng.below(4));
        Permutation b = random_permutation(rng, 1 + rng.below(4));
        CHECK(w.evaluate(concatenate(a, b)) == w.evaluate(a) * w.evaluate(b));
    }
}

TEST_CASE("invariant under base point rotation") {
    GlWeightSystem w;
    for (int k = 1; k <= 5; ++k)
        for (const auto& sigma : symmetric_group(k))
            CHECK(w.evaluate(sigma) == w.evaluate(sigma.base_point_rotation()));
}

TEST_CASE("reduction policy does not change the value") {
    GlWeightSystem leftmost(ReductionPolicy::LeftmostInversion);
    GlWeightSystem rightmost(ReductionPolicy::RightmostInversion);
    for (int k = 1; k <= 5; ++k)
        for (const auto& sigma : symmetric_group(k))
            CHECK(leftmost.evaluate(sigma) == rightmost.evaluate(sigma));
}

TEST_CASE("values have integer coefficients within the degree bound") {
    GlWeightSystem w;
    TestRng rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        int k = 1 + rng.below(6);
        Permutation sigma = random_permutation(rng, k);
        Polynomial value = w.evaluate(sigma);
        CHECK(value.has_integer_coefficients());
        CHECK(value.weighted_degree(casimir_weight) <= k);
    }
}

TEST_CASE("memoization returns identical values") {
    GlWeightSystem w;
    Permutation sigma = parse_permutation("(1 4 2 5 3)");
    Polynomial first = w.evaluate(sigma);
    CHECK(w.cache_size() > 0);
    CHECK(w.evaluate(sigma) == first);
    GlWeightSystem fresh;
    CHECK(fresh.evaluate(sigma) == first);
}

TEST_CASE("surgery constructions") {
    Permutation sigma = parse_permutation("(1 3)(2 4)");  // 3 4 1 2
    SUBCASE("merges at a generic position") {
        CHECK(reduction::merge_join_in_out(sigma, 1) == parse_permutation("3 1 2"));
        CHECK(reduction::merge_join_out_in(sigma, 1) == parse_permutation("2 3 1"));
    }
    SUBCASE("back edge surgeries") {
        Permutation tau = parse_permutation("(1 3 2)");  // 3 1 2, back edge at (2,3)
        CHECK(reduction::back_edge_bypass(tau, 1) == Permutation::identity(1));
        CHECK(reduction::back_edge_contract(tau, 1) == parse_permutation("2 1"));
    }
    SUBCASE("merging across a fixed point deletes it") {
        Permutation tau = parse_permutation("1 3 2");  // fixed point 1
        CHECK(reduction::merge_join_in_out(tau, 0) == parse_permutation("2 1"));
        CHECK(reduction::merge_join_out_in(tau, 0) == parse_permutation("2 1"));
    }
}

TEST_CASE("three-chord diagrams agree with the enveloping-algebra sum") {
    GlWeightSystem w;
    for (const GlSignature& sig : {GlSignature{1, 0}, GlSignature{1, 1}, GlSignature{2, 1}}) {
        CasimirEvaluator ev(sig);
        for (const ChordDiagram& d : all_chord_diagrams(3)) {
            Permutation inv = d.to_involution();
            CHECK(ev.evaluate(w.evaluate(inv)) == brute_force_weight(inv, sig));
        }
    }
}

TEST_CASE("larger permutations reduce and agree across policies") {
    GlWeightSystem leftmost(ReductionPolicy::LeftmostInversion);
    GlWeightSystem rightmost(ReductionPolicy::RightmostInversion);
    TestRng rng(808017);
    for (int trial = 0; trial < 6; ++trial) {
        Permutation sigma = random_permutation(rng, 9 + trial % 2);
        Polynomial value = leftmost.evaluate(sigma);
        CHECK(value == rightmost.evaluate(sigma));
        CHECK(value.weighted_degree(casimir_weight) <= sigma.size());
    }
}

TEST_CASE("concurrent evaluation through one shared cache") {
    GlWeightSystem shared;
    GlWeightSystem reference;
    auto perms = symmetric_group(5);
    std::vector<Polynomial> expected(perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) expected[i] = reference.evaluate(perms[i]);

    std::vector<int> mismatches(4, 0);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t]() {
            for (std::size_t i = t; i < perms.size(); i += 2)  // overlapping ranges
                if (shared.evaluate(perms[i % perms.size()]) != expected[i % perms.size()])
                    ++mismatches[t];
        });
    }
    for (auto& th : workers) th.join();
    for (int t = 0; t < 4; ++t) CHECK(mismatches[t] == 0);
}

TEST_CASE("cache file round trip") {
    std::string path = "glws_cache_test.jsonl";
    std::remove(path.c_str());
    {
        GlWeightSystem w;
        w.evaluate(parse_permutation("(1 3 2)"));
        w.evaluate(parse_permutation("(1 3)(2 4)"));
        CHECK(w.append_cache(path) > 0);
        CHECK(w.append_cache(path) == 0);  // nothing new
    }
    {
        GlWeightSystem w;
        CHECK(w.load_cache(path) > 0);
        std::size_t preloaded = w.cache_size();
        CHECK(w.evaluate(parse_permutation("(1 3 2)")) == C3 - C0 * C2 + C1.pow(2));
        CHECK(w.cache_size() == preloaded);  // served from cache
    }
    std::remove(path.c_str());
}
