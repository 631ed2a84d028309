#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "braidfree/ann.hpp"
#include "braidfree/combinatorics.hpp"
#include "braidfree/signed_graph.hpp"

using namespace braidfree;

namespace {

SignedGraph graph_from_code(int vertex_count, std::int64_t code) {
    const int edges = vertex_count * (vertex_count - 1) / 2;
    std::vector<std::int8_t> signs(static_cast<std::size_t>(edges));
    for (int e = 0; e < edges; ++e) {
        signs[static_cast<std::size_t>(e)] = static_cast<std::int8_t>(code % 3 - 1);
        code /= 3;
    }
    return SignedGraph::from_signs(vertex_count, signs);
}

// Chordality oracle: a subset is an induced chordless cycle iff its induced
// subgraph is connected and 2-regular.
bool has_induced_long_cycle(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (auto [i, j] : edges) {
        adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
    }
    bool found = false;
    for_each_subset_by_size(n, 4, [&](std::span<const int> subset) {
        const int k = static_cast<int>(subset.size());
        int degree_ok = 0;
        for (int a = 0; a < k; ++a) {
            int degree = 0;
            for (int b = 0; b < k; ++b) {
                if (a != b && adj[static_cast<std::size_t>(subset[static_cast<std::size_t>(a)])]
                                 [static_cast<std::size_t>(subset[static_cast<std::size_t>(b)])]) {
                    ++degree;
                }
            }
            if (degree == 2) ++degree_ok;
        }
        if (degree_ok != k) return true;
        // 2-regular: connected iff a walk returns after visiting all k vertices.
        std::vector<bool> visited(static_cast<std::size_t>(k), false);
        int prev = -1, cur = 0, steps = 1;
        visited[0] = true;
        while (true) {
            int next = -1;
            for (int b = 0; b < k; ++b) {
                if (b != cur && b != prev &&
                    adj[static_cast<std::size_t>(subset[static_cast<std::size_t>(cur)])]
                       [static_cast<std::size_t>(subset[static_cast<std::size_t>(b)])] &&
                    !visited[static_cast<std::size_t>(b)]) {
                    next = b;
                    break;
                }
            }
            if (next < 0) break;
            visited[static_cast<std::size_t>(next)] = true;
            prev = cur;
            cur = next;
            ++steps;
        }
        if (steps == k) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

} // namespace

TEST_CASE("signed graph basics") {
    const SignedGraph g = SignedGraph::create(4, std::vector<std::pair<int, int>>{{0, 1}},
                                              std::vector<std::pair<int, int>>{{2, 3}});
    CHECK(g.sign(0, 1) == 1);
    CHECK(g.sign(1, 0) == 1);
    CHECK(g.sign(2, 3) == -1);
    CHECK(g.sign(0, 2) == 0);
    CHECK(g.edge_count() == 2);
    CHECK(g.sign_swapped().sign(0, 1) == -1);

    CHECK_THROWS_AS(SignedGraph::create(3, std::vector<std::pair<int, int>>{{0, 0}},
                                        std::vector<std::pair<int, int>>{}),
                    error);
    CHECK_THROWS_AS(SignedGraph::create(3, std::vector<std::pair<int, int>>{{0, 1}},
                                        std::vector<std::pair<int, int>>{{1, 0}}),
                    error);
}

TEST_CASE("ordering check") {
    const SignedGraph edgeless = SignedGraph::empty(4);
    CHECK(check_ordering(edgeless, std::vector<int>{2, 0, 3, 1}));

    const SignedGraph plus_triangle = SignedGraph::create(
        3, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}}, {});
    std::vector<int> triangle_order{0, 1, 2};
    do {
        CHECK(check_ordering(plus_triangle, triangle_order));
    } while (std::next_permutation(triangle_order.begin(), triangle_order.end()));

    const SignedGraph square = make_sigma_cycle(3, +1);
    std::vector<int> order{0, 1, 2, 3};
    bool any = false;
    do {
        any = any || check_ordering(square, order);
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK_FALSE(any);

    CHECK_THROWS_AS(check_ordering(edgeless, std::vector<int>{0, 0, 1, 2}), error);
}

TEST_CASE("brute force ordering search") {
    const SignedGraph star = SignedGraph::create(
        4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}}, {});
    const EliminationCertificate cert = is_eliminable_bruteforce(star);
    REQUIRE(cert.eliminable());
    CHECK(check_ordering(star, *cert.ordering));
    // Center-first works; center-last cannot (two leaves below share no edge).
    CHECK(check_ordering(star, std::vector<int>{0, 1, 2, 3}));
    CHECK_FALSE(check_ordering(star, std::vector<int>{1, 2, 3, 0}));

    const EliminationCertificate cycle = is_eliminable_bruteforce(make_sigma_cycle(5, +1));
    CHECK_FALSE(cycle.eliminable());
    CHECK(cycle.obstruction->kind == ObstructionKind::ordering_exhausted);

    CHECK_THROWS_AS(is_eliminable_bruteforce(SignedGraph::empty(11)), error);
}

TEST_CASE("non-eliminable four-vertex classes match the catalog") {
    std::set<std::vector<std::int8_t>> classes;
    int non_eliminable = 0;
    for (int code = 0; code < 729; ++code) {
        const SignedGraph g = graph_from_code(4, code);
        if (!is_eliminable_bruteforce(g).eliminable()) {
            ++non_eliminable;
            classes.insert(canonical_form(g, true));
        }
    }
    CHECK(classes.size() == 12);

    std::set<std::vector<std::int8_t>> catalog;
    for (const SignedGraph& g : non_eliminable_four_catalog()) {
        CHECK_FALSE(is_eliminable_bruteforce(g).eliminable());
        const SignedStats stats = signed_stats(g);
        CHECK(stats.dv > 3 * stats.q);
        catalog.insert(canonical_form(g, true));
        CHECK_FALSE(is_eliminable_bruteforce(g.sign_swapped()).eliminable());
    }
    CHECK(catalog == classes);
    CHECK(non_eliminable > 12);
}

TEST_CASE("chordality") {
    using E = std::pair<int, int>;
    CHECK_FALSE(is_chordal(4, std::vector<E>{{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    CHECK(is_chordal(6, std::vector<E>{{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}));

    std::vector<E> k5_minus;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!(i == 0 && j == 1)) k5_minus.emplace_back(i, j);
    CHECK(is_chordal(5, k5_minus));

    std::mt19937_64 rng(37);
    for (int round = 0; round < 300; ++round) {
        const int n = 5 + static_cast<int>(rng() % 3);
        std::vector<E> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) edges.emplace_back(i, j);
        CHECK(is_chordal(n, edges) == !has_induced_long_cycle(n, edges));
    }
}

TEST_CASE("structure constructors") {
    const SignedGraph square = make_sigma_cycle(3, +1);
    CHECK(square.plus_edges().size() == 4);
    CHECK(square.minus_edges().empty());

    const SignedGraph mountain = make_mountain(3, +1);
    CHECK(mountain.sign(0, 2) == 1);
    CHECK(mountain.sign(1, 2) == -1);
    CHECK(mountain.sign(2, 3) == -1);
    CHECK(mountain.edge_count() == 3);

    const SignedGraph hill = make_hill(4, -1);
    CHECK(hill.sign(0, 1) == -1);
    CHECK(hill.sign(0, 2) == -1);
    CHECK(hill.sign(0, 3) == -1);
    CHECK(hill.sign(1, 3) == -1);
    CHECK(hill.sign(1, 4) == -1);
    CHECK(hill.sign(2, 3) == 1);
    CHECK(hill.sign(3, 4) == 1);
    CHECK(hill.edge_count() == 7);

    CHECK_THROWS_AS(make_sigma_cycle(1, +1), error);
    CHECK_THROWS_AS(make_mountain(2, +1), error);
    CHECK_THROWS_AS(make_hill(3, +1), error);
}

TEST_CASE("structure detection") {
    const auto mountain = find_sigma_structure(make_mountain(4, +1));
    REQUIRE(mountain.has_value());
    CHECK(mountain->kind == ObstructionKind::mountain);
    CHECK(mountain->vertices == std::vector<int>{0, 1, 2, 3, 4});

    const auto hill = find_sigma_structure(make_hill(5, -1));
    REQUIRE(hill.has_value());
    CHECK(hill->kind == ObstructionKind::hill);

    const auto cycle = find_sigma_structure(make_sigma_cycle(4, -1));
    REQUIRE(cycle.has_value());
    CHECK(cycle->kind == ObstructionKind::sigma_cycle);
    CHECK(cycle->sigma == -1);

    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) all.emplace_back(i, j);
    CHECK_FALSE(find_sigma_structure(SignedGraph::create(6, all, {})).has_value());
}

TEST_CASE("characterization produces verifiable certificates") {
    const EliminationCertificate mountain = is_eliminable_characterization(make_mountain(4, +1));
    REQUIRE_FALSE(mountain.eliminable());
    CHECK(mountain.obstruction->kind == ObstructionKind::mountain);

    const EliminationCertificate hill = is_eliminable_characterization(make_hill(5, +1));
    REQUIRE_FALSE(hill.eliminable());
    CHECK(hill.obstruction->kind == ObstructionKind::hill);

    std::vector<std::pair<int, int>> k5;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.emplace_back(i, j);
    const EliminationCertificate complete =
        is_eliminable_characterization(SignedGraph::create(5, k5, {}));
    REQUIRE(complete.eliminable());
    CHECK(check_ordering(SignedGraph::create(5, k5, {}), *complete.ordering));
}

TEST_CASE("characterization agrees with brute force on five vertices") {
    for (std::int64_t code = 0; code < 59049; ++code) {
        const SignedGraph g = graph_from_code(5, code);
        const EliminationCertificate brute = is_eliminable_bruteforce(g);
        const EliminationCertificate characterized = is_eliminable_characterization(g);
        REQUIRE_MESSAGE(brute.eliminable() == characterized.eliminable(), "code " << code);
        if (!characterized.eliminable() &&
            characterized.obstruction->kind != ObstructionKind::ordering_exhausted) {
            // Every reported obstruction is itself non-eliminable.
            const SignedGraph induced = g.induced(characterized.obstruction->vertices);
            CHECK_FALSE(is_eliminable_bruteforce(induced).eliminable());
        }
        if (brute.eliminable()) {
            CHECK(check_ordering(g, *brute.ordering));
        }
    }
}

TEST_CASE("characterization agrees with brute force on random larger graphs") {
    std::mt19937_64 rng(41);
    for (int round = 0; round < 10000; ++round) {
        const int n = 6 + static_cast<int>(rng() % 2);
        std::vector<std::int8_t> signs(static_cast<std::size_t>(n * (n - 1) / 2));
        for (auto& s : signs) s = static_cast<std::int8_t>(rng() % 3) - 1;
        const SignedGraph g = SignedGraph::from_signs(n, signs);
        CHECK(is_eliminable_bruteforce(g).eliminable() ==
              is_eliminable_characterization(g).eliminable());
    }
}

TEST_CASE("eliminability is sign-swap symmetric") {
    std::mt19937_64 rng(43);
    for (int round = 0; round < 2000; ++round) {
        const int n = 4 + static_cast<int>(rng() % 3);
        std::vector<std::int8_t> signs(static_cast<std::size_t>(n * (n - 1) / 2));
        for (auto& s : signs) s = static_cast<std::int8_t>(rng() % 3) - 1;
        const SignedGraph g = SignedGraph::from_signs(n, signs);
        CHECK(is_eliminable_bruteforce(g).eliminable() ==
              is_eliminable_bruteforce(g.sign_swapped()).eliminable());
    }
}

TEST_CASE("one-sign chordality equals the cycle-free and four-vertex conditions") {
    // Chordality of both sign classes is equivalent to excluding one-sign
    // cycles of length over three once every four-vertex subgraph passes.
    for (std::int64_t code = 0; code < 59049; ++code) {
        const SignedGraph g = graph_from_code(5, code);
        const bool chordal_signs =
            is_chordal(5, g.plus_edges()) && is_chordal(5, g.minus_edges());
        bool no_long_sigma_cycle = true;
        for_each_subset_by_size(5, 4, [&](std::span<const int> subset) {
            const SignedGraph h = g.induced(subset);
            // one-sign 2-regular connected induced subgraph
            const auto ob = find_sigma_structure(h);
            if (ob && ob->kind == ObstructionKind::sigma_cycle &&
                static_cast<int>(ob->vertices.size()) == static_cast<int>(subset.size())) {
                no_long_sigma_cycle = false;
                return false;
            }
            return true;
        });
        bool four_ok = true;
        for_each_combination(5, 4, [&](std::span<const int> subset) {
            if (!is_eliminable_bruteforce(g.induced(subset)).eliminable()) {
                four_ok = false;
                return false;
            }
            return true;
        });
        // one-sign chordality forbids long one-sign cycles outright
        if (chordal_signs) CHECK(no_long_sigma_cycle);
        // and is forced by their absence together with the four-vertex condition
        if (no_long_sigma_cycle && four_ok) CHECK(chordal_signs);
    }
}

TEST_CASE("signed statistics") {
    CHECK(signed_stats(SignedGraph::empty(5)).q == 0);
    CHECK(signed_stats(SignedGraph::empty(5)).dv == 0);

    const SignedStats square = signed_stats(make_sigma_cycle(3, +1));
    CHECK(square.q == 0);
    CHECK(square.dv == 8);

    for (int ell = 3; ell <= 12; ++ell) {
        const std::int64_t l = ell;
        const std::int64_t expect_q = l * l - 2 * l - 3;
        const std::int64_t expect_dv = l * l * l - 2 * l * l - l + 2;
        for (int sigma : {+1, -1}) {
            const SignedStats cycle = signed_stats(make_sigma_cycle(ell, sigma));
            CHECK(cycle.q == expect_q);
            CHECK(cycle.dv == expect_dv);
            const SignedStats mountain = signed_stats(make_mountain(ell, sigma));
            CHECK(mountain.q == expect_q);
            CHECK(mountain.dv == expect_dv);
            if (ell >= 4) {
                const SignedStats hill = signed_stats(make_hill(ell, sigma));
                CHECK(hill.q == expect_q);
                CHECK(hill.dv == expect_dv);
            }
        }
    }
}

TEST_CASE("multiplicity from a signed graph") {
    const MultiBraid doubled = multiplicity_from_signed_graph(
        SignedGraph::empty(4), std::vector<std::int64_t>{1, 1, 1, 1});
    CHECK(doubled == MultiBraid::constant(4, 2));

    // Even offsets turn the complementary labeled cycle into the two-cycle
    // family with t = s + 1.
    const int s = 4;
    std::vector<std::pair<int, int>> c2{{0, 2}, {2, 4}, {1, 4}, {1, 3}, {0, 3}};
    const SignedGraph g = SignedGraph::create(5, c2, {});
    const MultiBraid m = multiplicity_from_signed_graph(
        g, std::vector<std::int64_t>(5, (s + 1) / 2));
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            CHECK(m.at(i, j) == (g.sign(i, j) ? s + 1 : s));

    CHECK_THROWS_AS(multiplicity_from_signed_graph(make_sigma_cycle(3, -1),
                                                   std::vector<std::int64_t>{0, 0, 0, 0}),
                    error);
}

TEST_CASE("canonical forms identify isomorphic graphs") {
    const SignedGraph a = SignedGraph::create(4, std::vector<std::pair<int, int>>{{0, 1}},
                                              std::vector<std::pair<int, int>>{{2, 3}});
    const SignedGraph b = SignedGraph::create(4, std::vector<std::pair<int, int>>{{2, 3}},
                                              std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(signed_isomorphic(a, b, false)); // swapping the two edges is a vertex permutation
    const SignedGraph lone_plus =
        SignedGraph::create(3, std::vector<std::pair<int, int>>{{0, 1}}, {});
    const SignedGraph lone_minus =
        SignedGraph::create(3, {}, std::vector<std::pair<int, int>>{{1, 2}});
    CHECK(signed_isomorphic(lone_plus, lone_minus, true));
    CHECK_FALSE(signed_isomorphic(lone_plus, lone_minus, false));
}
