#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "braidfree/multi_braid.hpp"

namespace braidfree::testing {

// The two labeled path cycles of K5: c1 traverses 0-1-2-3-4-0 and c2
// traverses 0-2-4-1-3-0; together they cover all ten edges.
inline bool on_first_five_cycle(int i, int j) {
    if (i > j) std::swap(i, j);
    return (j == i + 1) || (i == 0 && j == 4);
}

/// Two-path family on four vertices: label s on 01, 12, 23 and t on the rest.
inline MultiBraid two_path_family(std::int64_t s, std::int64_t t) {
    return MultiBraid::from_edges(
        4, std::vector<EdgeEntry>{
               {0, 1, s}, {1, 2, s}, {2, 3, s}, {0, 2, t}, {0, 3, t}, {1, 3, t}});
}

/// Two-cycle family on five vertices: label s on one spanning cycle, t on the
/// complementary one.
inline MultiBraid two_cycle_family(std::int64_t s, std::int64_t t) {
    std::vector<EdgeEntry> entries;
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            entries.push_back({i, j, on_first_five_cycle(i, j) ? s : t});
        }
    }
    return MultiBraid::from_edges(5, entries);
}

/// The five-vertex multiplicity whose non-freeness shows only on a proper
/// restriction: ones on 01, 02, 03, 12, 14; twos on 04, 13, 23, 24; three on 34.
inline MultiBraid hidden_witness_example() {
    return MultiBraid::from_edges(5, std::vector<EdgeEntry>{{0, 1, 1},
                                                            {0, 2, 1},
                                                            {0, 3, 1},
                                                            {0, 4, 2},
                                                            {1, 2, 1},
                                                            {1, 3, 2},
                                                            {1, 4, 1},
                                                            {2, 3, 2},
                                                            {2, 4, 2},
                                                            {3, 4, 3}});
}

inline MultiBraid random_multiplicity(int vertex_count, std::int64_t max_entry,
                                      std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dist(1, max_entry);
    std::vector<EdgeEntry> entries;
    for (int i = 0; i < vertex_count; ++i) {
        for (int j = i + 1; j < vertex_count; ++j) {
            entries.push_back({i, j, dist(rng)});
        }
    }
    return MultiBraid::from_edges(vertex_count, entries);
}

} // namespace braidfree::testing
