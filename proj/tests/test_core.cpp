#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "braidfree/combinatorics.hpp"
#include "braidfree/mixed_products.hpp"
#include "braidfree/multi_braid.hpp"
#include "fixtures.hpp"

using namespace braidfree;
using braidfree::testing::hidden_witness_example;
using braidfree::testing::random_multiplicity;
using braidfree::testing::two_cycle_family;
using braidfree::testing::two_path_family;

namespace {

// Independent deviation oracle: sum |alternating sum|^2 over all ordered
// traversals of 4 distinct vertices, then divide by the 8 traversals that
// describe each cycle.
std::int64_t deviation_oracle(const MultiBraid& m, std::span<const int> u) {
    std::vector<int> vs(u.begin(), u.end());
    std::int64_t total = 0;
    std::sort(vs.begin(), vs.end());
    std::vector<int> pick(4);
    const int k = static_cast<int>(vs.size());
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                for (int d = 0; d < k; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    const std::int64_t v = m.at(vs[a], vs[b]) - m.at(vs[b], vs[c]) +
                                           m.at(vs[c], vs[d]) - m.at(vs[a], vs[d]);
                    total += v * v;
                }
    REQUIRE(total % 8 == 0);
    return total / 8;
}

} // namespace

TEST_CASE("construction validates the entry list") {
    CHECK(MultiBraid::constant(4, 1).at(2, 3) == 1);

    const MultiBraid family = two_path_family(1, 2);
    CHECK(family.at(0, 1) == 1);
    CHECK(family.at(0, 2) == 2);
    CHECK(family.at(2, 3) == 1);

    std::vector<EdgeEntry> duplicate{{0, 1, 1}, {0, 1, 2}, {0, 2, 1}, {1, 2, 1}};
    CHECK_THROWS_WITH_AS(MultiBraid::from_edges(3, duplicate), doctest::Contains("duplicate"),
                         error);
    std::vector<EdgeEntry> missing{{0, 1, 1}, {0, 2, 1}};
    CHECK_THROWS_AS(MultiBraid::from_edges(3, missing), error);
    std::vector<EdgeEntry> zero{{0, 1, 0}, {0, 2, 1}, {1, 2, 1}};
    CHECK_THROWS_AS(MultiBraid::from_edges(3, zero), error);
    std::vector<EdgeEntry> range{{0, 1, 1}, {0, 3, 1}, {1, 2, 1}};
    CHECK_THROWS_AS(MultiBraid::from_edges(3, range), error);
    CHECK_THROWS_AS(MultiBraid::constant(3, kMaxMultiplicity + 1), error);
    CHECK_THROWS_AS(MultiBraid::constant(kMaxVertices + 1, 1), error);
}

TEST_CASE("restriction relabels in subset order") {
    const MultiBraid m = hidden_witness_example();
    const MultiBraid sub = restrict_to(m, VertexSubset::of({0, 1, 3, 4}, 5));
    CHECK(sub.vertex_count() == 4);
    CHECK(sub.at(0, 1) == 1);
    CHECK(sub.at(0, 2) == 1);
    CHECK(sub.at(0, 3) == 2);
    CHECK(sub.at(1, 2) == 2);
    CHECK(sub.at(1, 3) == 1);
    CHECK(sub.at(2, 3) == 3);

    CHECK(restrict_to(m, VertexSubset::full(5)) == m);
    CHECK(restrict_to(MultiBraid::constant(5, 1), VertexSubset::of({1, 2, 4}, 5)) ==
          MultiBraid::constant(3, 1));
    CHECK_THROWS_AS(restrict_to(m, VertexSubset::of({2}, 5)), error);
}

TEST_CASE("balanced cone membership") {
    for (std::int64_t s = 1; s <= 8; ++s) {
        for (std::int64_t t = 1; t <= 8; ++t) {
            const bool expected = s <= 2 * t + 1 && t <= 2 * s + 1;
            CHECK(is_balanced(two_path_family(s, t)).balanced == expected);
        }
    }
    const MultiBraid spike =
        MultiBraid::from_edges(3, std::vector<EdgeEntry>{{0, 1, 5}, {0, 2, 1}, {1, 2, 1}});
    const BalanceReport report = is_balanced(spike);
    CHECK_FALSE(report.balanced);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations.front().long_edge == std::pair{0, 1});
    CHECK(is_balanced(hidden_witness_example()).balanced);
}

TEST_CASE("triangle sums") {
    CHECK(triangle_sum(MultiBraid::constant(4, 1), 0, 1, 2) == 3);
    const MultiBraid family = two_path_family(1, 2);
    CHECK(triangle_sum(family, 0, 1, 2) == 4); // 2s + t
    CHECK(triangle_sum(family, 0, 1, 3) == 5); // 2t + s
    CHECK_THROWS_AS(triangle_sum(family, 0, 0, 1), error);
}

TEST_CASE("odd triple counts") {
    const MultiBraid m = hidden_witness_example();
    CHECK(odd_triangle_count(m, VertexSubset::full(5)) == 4);
    CHECK(odd_triangle_count(m, VertexSubset::of({0, 1, 3, 4}, 5)) == 0);
    for (std::int64_t s = 1; s <= 6; ++s) {
        CHECK(odd_triangle_count(two_cycle_family(s, s + 1), VertexSubset::full(5)) == 5);
    }
    CHECK_THROWS_AS(odd_triangle_count(m, VertexSubset::of({0, 1}, 5)), error);
}

TEST_CASE("four-cycle values on the two-path family") {
    for (std::int64_t s = 1; s <= 5; ++s) {
        for (std::int64_t t = 1; t <= 5; ++t) {
            const MultiBraid m = two_path_family(s, t);
            CHECK(four_cycle_value(m, 0, 1, 3, 2) == 2 * std::abs(s - t));
            CHECK(four_cycle_value(m, 0, 1, 2, 3) == std::abs(s - t));
        }
    }
    const MultiBraid constant = MultiBraid::constant(6, 4);
    CHECK(four_cycle_value(constant, 1, 4, 2, 5) == 0);
}

TEST_CASE("four-cycle value is traversal invariant") {
    std::mt19937_64 rng(7);
    const MultiBraid m = random_multiplicity(7, 9, rng);
    std::array<int, 4> base{1, 3, 4, 6};
    std::array<int, 4> perm = base;
    std::sort(perm.begin(), perm.end());
    const std::int64_t reference = four_cycle_value(m, base[0], base[1], base[2], base[3]);
    // All 8 traversals of the same cyclic sequence agree.
    for (int rot = 0; rot < 4; ++rot) {
        std::array<int, 4> cy;
        for (int p = 0; p < 4; ++p) cy[static_cast<std::size_t>(p)] = base[(p + rot) % 4];
        CHECK(four_cycle_value(m, cy[0], cy[1], cy[2], cy[3]) == reference);
        CHECK(four_cycle_value(m, cy[3], cy[2], cy[1], cy[0]) == reference);
    }
}

TEST_CASE("deviation matches the paper examples and the traversal oracle") {
    const MultiBraid m = hidden_witness_example();
    CHECK(deviation(m) == 16);
    CHECK(deviation(m, VertexSubset::of({0, 1, 3, 4}, 5)) == 8);
    for (std::int64_t s = 1; s <= 6; ++s) {
        for (std::int64_t t = 1; t <= 6; ++t) {
            CHECK(deviation(two_cycle_family(s, t)) == 30 * (s - t) * (s - t));
        }
    }
    CHECK(deviation(m, VertexSubset::of({0, 1, 2}, 5)) == 0);

    std::mt19937_64 rng(11);
    for (int round = 0; round < 50; ++round) {
        const MultiBraid random = random_multiplicity(6, 12, rng);
        const auto full = VertexSubset::full(6);
        CHECK(deviation(random, full) == deviation_oracle(random, full.members()));
        const auto sub = VertexSubset::of({0, 2, 3, 5}, 6);
        CHECK(deviation(random, sub) == deviation_oracle(random, sub.members()));
    }
}

TEST_CASE("deviation is restriction compatible") {
    std::mt19937_64 rng(13);
    for (int round = 0; round < 40; ++round) {
        const MultiBraid m = random_multiplicity(7, 8, rng);
        const auto u = VertexSubset::of({0, 1, 3, 4, 6}, 7);
        CHECK(deviation(m, u) == deviation(restrict_to(m, u)));
    }
}

TEST_CASE("deviation closed form agrees with enumeration") {
    CHECK(deviation_closed_form(MultiBraid::constant(6, 3)) == 0);
    CHECK(deviation_closed_form(hidden_witness_example()) == 16);

    // Exhaustive through rank 4; the rank-5 box at entries up to 4 has 4^15
    // instances, beyond unit-test reach, so larger ranks are sampled.
    for (int ell : {2, 3, 4}) {
        const int n = ell + 1;
        const int edges = n * (n - 1) / 2;
        std::vector<EdgeEntry> entries;
        std::vector<std::int64_t> digits(static_cast<std::size_t>(edges), 1);
        while (true) {
            entries.clear();
            int e = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) entries.push_back({i, j, digits[e++]});
            const MultiBraid m = MultiBraid::from_edges(n, entries);
            REQUIRE(deviation(m) == deviation_closed_form(m));
            int pos = edges - 1;
            while (pos >= 0 && digits[pos] == 4) digits[pos--] = 1;
            if (pos < 0) break;
            ++digits[pos];
        }
    }
    std::mt19937_64 rng(17);
    for (int round = 0; round < 1000; ++round) {
        const int n = 6 + static_cast<int>(rng() % 4);
        const MultiBraid m = random_multiplicity(n, 20, rng);
        CHECK(deviation(m) == deviation_closed_form(m));
    }
}

TEST_CASE("deviation vanishes exactly when every four-cycle does") {
    std::mt19937_64 rng(19);
    for (int round = 0; round < 200; ++round) {
        // Mix flat instances (offsets only) with noisy ones.
        const int n = 5;
        std::vector<std::int64_t> offsets(n);
        for (auto& v : offsets) v = 1 + static_cast<std::int64_t>(rng() % 5);
        std::vector<EdgeEntry> entries;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::int64_t m = offsets[i] + offsets[j];
                if (round % 2 == 0 && rng() % 3 == 0) m += 1;
                entries.push_back({i, j, m});
            }
        const MultiBraid m = MultiBraid::from_edges(n, entries);
        std::int64_t max_cycle = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d < n; ++d) {
                        max_cycle = std::max({max_cycle, four_cycle_value(m, a, b, c, d),
                                              four_cycle_value(m, a, b, d, c),
                                              four_cycle_value(m, a, c, b, d)});
                    }
        CHECK((deviation(m) == 0) == (max_cycle == 0));
    }
}

TEST_CASE("constant multiplicities are balanced with zero deviation") {
    for (std::int64_t c = 1; c <= 6; ++c) {
        for (int n = 4; n <= 8; ++n) {
            const MultiBraid m = MultiBraid::constant(n, c);
            CHECK(is_balanced(m).balanced);
            CHECK(deviation(m) == 0);
        }
    }
}

TEST_CASE("total multiplicity") {
    CHECK(total_multiplicity(MultiBraid::constant(4, 1)) == 6);
    CHECK(total_multiplicity(hidden_witness_example()) == 16);
    CHECK(total_multiplicity(two_cycle_family(2, 3)) == 25);
}

TEST_CASE("rank-two exponents split the triangle sum") {
    auto triangle = [](std::int64_t a, std::int64_t b, std::int64_t c) {
        return MultiBraid::from_edges(3, std::vector<EdgeEntry>{{0, 1, a}, {0, 2, b}, {1, 2, c}});
    };
    CHECK(a2_exponents(triangle(1, 1, 1)) == std::pair<std::int64_t, std::int64_t>{1, 2});
    CHECK(a2_exponents(triangle(2, 2, 2)) == std::pair<std::int64_t, std::int64_t>{3, 3});
    CHECK(a2_exponents(triangle(1, 2, 2)) == std::pair<std::int64_t, std::int64_t>{2, 3});
    CHECK_THROWS_AS(a2_exponents(triangle(5, 1, 1)), error);
}

TEST_CASE("mixed products") {
    const MultiBraid triangle = MultiBraid::constant(3, 1);
    const MixedProductReport report = mixed_products(triangle);
    CHECK(report.lmp2 == rational(2));
    // Cross-check against the exponent product of the only rank-2 flat.
    const auto [d1, d2] = a2_exponents(triangle);
    CHECK(report.lmp2 == rational(d1 * d2));
    CHECK(report.sos_residual == 0);

    // Remainder 1 out of rank 3 with |m| = 7; the most balanced split is
    // (3, 2, 2), found here by direct enumeration of partitions.
    const MultiBraid seven =
        MultiBraid::from_edges(4, std::vector<EdgeEntry>{
                                      {0, 1, 2}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    REQUIRE(total_multiplicity(seven) == 7);
    const MixedProductReport r7 = mixed_products(seven);
    CHECK(r7.remainder_p == 1);
    std::int64_t best_e2 = 0;
    for (std::int64_t b1 = 1; b1 <= 7; ++b1)
        for (std::int64_t b2 = 1; b1 + b2 <= 7; ++b2) {
            const std::int64_t b3 = 7 - b1 - b2;
            if (b3 < 1) continue;
            best_e2 = std::max(best_e2, b1 * b2 + b1 * b3 + b2 * b3);
        }
    CHECK(best_e2 == 16);
    CHECK(r7.most_balanced_gmp2 == rational(16));
    CHECK(r7.most_balanced_gmp2 <= r7.gmp2_bound);

    CHECK_THROWS_AS(mixed_products(two_path_family(1, 4)), error);

    std::mt19937_64 rng(23);
    int checked = 0;
    while (checked < 100) {
        const MultiBraid m = random_multiplicity(5, 7, rng);
        if (!is_balanced(m).balanced) continue;
        ++checked;
        CHECK(mixed_products(m).sos_residual == 0);
    }
    // The identity residual is zero off the balanced cone as well.
    for (int round = 0; round < 100; ++round) {
        CHECK(sos_residual(random_multiplicity(6, 30, rng)) == 0);
    }
}

TEST_CASE("binomial vanishing convention") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(1, 2) == 0);
    CHECK(binomial(-2, 2) == 0);
    CHECK(binomial(4, 0) == 1);
}
