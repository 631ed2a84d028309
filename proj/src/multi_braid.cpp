#include "braidfree/multi_braid.hpp"

#include <algorithm>
#include <string>

#include "braidfree/combinatorics.hpp"

namespace braidfree {

namespace {

std::string pair_text(int i, int j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

} // namespace

std::size_t MultiBraid::index(int i, int j) const {
    // upper triangle in lexicographic (i, j) order, i < j
    return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

std::int64_t MultiBraid::at(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) {
        raise(errc::index_out_of_range, "multiplicity lookup at " + pair_text(i, j));
    }
    if (i > j) std::swap(i, j);
    return m_[index(i, j)];
}

MultiBraid MultiBraid::from_edges(int vertex_count, std::span<const EdgeEntry> entries) {
    if (vertex_count < 2) {
        raise(errc::too_small, "need at least 2 vertices, got " + std::to_string(vertex_count));
    }
    if (vertex_count > kMaxVertices) {
        raise(errc::too_large, "vertex count " + std::to_string(vertex_count) + " exceeds supported " +
                                   std::to_string(kMaxVertices));
    }
    const std::size_t pair_count =
        static_cast<std::size_t>(vertex_count) * (vertex_count - 1) / 2;
    std::vector<std::int64_t> table(pair_count, 0);
    std::vector<bool> seen(pair_count, false);
    MultiBraid result(vertex_count, std::move(table));
    for (const EdgeEntry& e : entries) {
        int i = e.i, j = e.j;
        if (i == j || i < 0 || j < 0 || i >= vertex_count || j >= vertex_count) {
            raise(errc::index_out_of_range, "edge " + pair_text(i, j));
        }
        if (i > j) std::swap(i, j);
        const std::size_t at = result.index(i, j);
        if (seen[at]) {
            raise(errc::duplicate_pair, "pair " + pair_text(i, j) + " listed twice");
        }
        if (e.m < 1) {
            raise(errc::non_positive_multiplicity,
                  "pair " + pair_text(i, j) + " has multiplicity " + std::to_string(e.m));
        }
        if (e.m > kMaxMultiplicity) {
            raise(errc::too_large, "multiplicity " + std::to_string(e.m) + " at pair " +
                                       pair_text(i, j) + " exceeds supported " +
                                       std::to_string(kMaxMultiplicity));
        }
        seen[at] = true;
        result.m_[at] = e.m;
    }
    for (int i = 0; i < vertex_count; ++i) {
        for (int j = i + 1; j < vertex_count; ++j) {
            if (!seen[result.index(i, j)]) {
                raise(errc::missing_pair, "pair " + pair_text(i, j) + " not listed");
            }
        }
    }
    return result;
}

MultiBraid MultiBraid::constant(int vertex_count, std::int64_t value) {
    std::vector<EdgeEntry> entries;
    entries.reserve(static_cast<std::size_t>(vertex_count) * (vertex_count - 1) / 2);
    for (int i = 0; i < vertex_count; ++i) {
        for (int j = i + 1; j < vertex_count; ++j) {
            entries.push_back({i, j, value});
        }
    }
    return from_edges(vertex_count, entries);
}

std::vector<EdgeEntry> MultiBraid::edges() const {
    std::vector<EdgeEntry> result;
    result.reserve(m_.size());
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            result.push_back({i, j, m_[index(i, j)]});
        }
    }
    return result;
}

VertexSubset VertexSubset::of(std::vector<int> members, int ambient_vertex_count) {
    for (std::size_t k = 0; k < members.size(); ++k) {
        if (members[k] < 0 || members[k] >= ambient_vertex_count) {
            raise(errc::index_out_of_range, "subset member " + std::to_string(members[k]));
        }
        if (k > 0 && members[k] <= members[k - 1]) {
            raise(errc::bad_input, "subset members must be strictly increasing");
        }
    }
    return VertexSubset(std::move(members));
}

VertexSubset VertexSubset::full(int vertex_count) {
    std::vector<int> all(static_cast<std::size_t>(vertex_count));
    for (int v = 0; v < vertex_count; ++v) all[static_cast<std::size_t>(v)] = v;
    return VertexSubset(std::move(all));
}

BalanceReport is_balanced(const MultiBraid& m) {
    BalanceReport report;
    const int n = m.vertex_count();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                const std::int64_t ij = m.at(i, j), ik = m.at(i, k), jk = m.at(j, k);
                if (ij > ik + jk + 1) report.violations.push_back({{i, j, k}, {i, j}});
                if (ik > ij + jk + 1) report.violations.push_back({{i, j, k}, {i, k}});
                if (jk > ij + ik + 1) report.violations.push_back({{i, j, k}, {j, k}});
            }
        }
    }
    report.balanced = report.violations.empty();
    return report;
}

MultiBraid restrict_to(const MultiBraid& m, const VertexSubset& u) {
    const auto members = u.members();
    if (members.size() < 2) {
        raise(errc::subset_too_small, "restriction needs at least 2 vertices");
    }
    std::vector<EdgeEntry> entries;
    const int k = static_cast<int>(members.size());
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            entries.push_back({a, b, m.at(members[static_cast<std::size_t>(a)],
                                          members[static_cast<std::size_t>(b)])});
        }
    }
    return MultiBraid::from_edges(k, entries);
}

std::int64_t triangle_sum(const MultiBraid& m, int i, int j, int k) {
    if (i == j || i == k || j == k) {
        raise(errc::index_out_of_range, "triangle vertices must be distinct");
    }
    return m.at(i, j) + m.at(i, k) + m.at(j, k);
}

std::int64_t odd_triangle_count(const MultiBraid& m, const VertexSubset& u) {
    const auto members = u.members();
    if (members.size() < 3) {
        raise(errc::subset_too_small, "odd triple count needs at least 3 vertices");
    }
    std::int64_t count = 0;
    const int k = static_cast<int>(members.size());
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            for (int c = b + 1; c < k; ++c) {
                const std::int64_t sum =
                    triangle_sum(m, members[static_cast<std::size_t>(a)],
                                 members[static_cast<std::size_t>(b)],
                                 members[static_cast<std::size_t>(c)]);
                count += sum & 1;
            }
        }
    }
    return count;
}

std::int64_t four_cycle_value(const MultiBraid& m, int i, int j, int s, int t) {
    if (i == j || i == s || i == t || j == s || j == t || s == t) {
        raise(errc::index_out_of_range, "four-cycle vertices must be distinct");
    }
    const std::int64_t v = m.at(i, j) - m.at(j, s) + m.at(s, t) - m.at(i, t);
    return v < 0 ? -v : v;
}

std::int64_t deviation(const MultiBraid& m, std::span<const int> members) {
    // Each 4-subset carries exactly three four-cycles: fix the smallest
    // vertex first and pair it with each choice of opposite vertex.
    const int k = static_cast<int>(members.size());
    std::int64_t total = 0;
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            for (int c = b + 1; c < k; ++c) {
                for (int d = c + 1; d < k; ++d) {
                    const int va = members[static_cast<std::size_t>(a)];
                    const int vb = members[static_cast<std::size_t>(b)];
                    const int vc = members[static_cast<std::size_t>(c)];
                    const int vd = members[static_cast<std::size_t>(d)];
                    const std::int64_t c1 = four_cycle_value(m, va, vb, vc, vd);
                    const std::int64_t c2 = four_cycle_value(m, va, vb, vd, vc);
                    const std::int64_t c3 = four_cycle_value(m, va, vc, vb, vd);
                    total += c1 * c1 + c2 * c2 + c3 * c3;
                }
            }
        }
    }
    return total;
}

std::int64_t deviation(const MultiBraid& m, const VertexSubset& u) {
    return deviation(m, u.members());
}

std::int64_t deviation(const MultiBraid& m) {
    return deviation(m, VertexSubset::full(m.vertex_count()));
}

std::int64_t deviation_closed_form(const MultiBraid& m) {
    const int n = m.vertex_count();
    const std::int64_t ell = n - 1;
    std::int64_t square_sum = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const std::int64_t v = m.at(i, j);
            square_sum += v * v;
        }
    }
    std::int64_t disjoint_sum = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int s = i; s < n; ++s) {
                for (int t = s + 1; t < n; ++t) {
                    if (std::make_pair(s, t) <= std::make_pair(i, j)) continue;
                    if (s == i || s == j || t == i || t == j) continue;
                    disjoint_sum += m.at(i, j) * m.at(s, t);
                }
            }
        }
    }
    std::int64_t adjacent_sum = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                const std::int64_t ij = m.at(i, j), ik = m.at(i, k), jk = m.at(j, k);
                adjacent_sum += ij * ik + ij * jk + ik * jk;
            }
        }
    }
    return 2 * binomial(ell - 1, 2) * square_sum + 4 * disjoint_sum - 2 * (ell - 2) * adjacent_sum;
}

std::int64_t total_multiplicity(const MultiBraid& m) {
    std::int64_t total = 0;
    for (const EdgeEntry& e : m.edges()) total += e.m;
    return total;
}

std::pair<std::int64_t, std::int64_t> a2_exponents(const MultiBraid& m) {
    if (m.vertex_count() != 3) {
        raise(errc::size_mismatch, "rank-2 exponents need exactly 3 vertices, got " +
                                       std::to_string(m.vertex_count()));
    }
    if (!is_balanced(m).balanced) {
        raise(errc::not_balanced, "rank-2 exponent formula requires the balanced cone");
    }
    const std::int64_t total = triangle_sum(m, 0, 1, 2);
    return {total / 2, (total + 1) / 2};
}

} // namespace braidfree
