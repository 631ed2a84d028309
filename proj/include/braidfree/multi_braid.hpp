#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "braidfree/error.hpp"

namespace braidfree {

// Supported range. Every derived statistic (deviations grow like l^4 * max^2)
// stays far inside int64 within these bounds, so all arithmetic is exact.
inline constexpr int kMaxVertices = 21;
inline constexpr std::int64_t kMaxMultiplicity = 10'000;

struct EdgeEntry {
    int i = 0;
    int j = 0;
    std::int64_t m = 0;
};

/// An edge-labeled complete graph: positive integer multiplicities m_ij on
/// every unordered vertex pair. Immutable after construction.
class MultiBraid {
public:
    static MultiBraid from_edges(int vertex_count, std::span<const EdgeEntry> entries);
    static MultiBraid constant(int vertex_count, std::int64_t value);

    int vertex_count() const { return n_; }
    int rank() const { return n_ - 1; }

    std::int64_t at(int i, int j) const;

    /// All entries as (i, j, m) with i < j in lexicographic order.
    std::vector<EdgeEntry> edges() const;

    bool operator==(const MultiBraid&) const = default;

private:
    MultiBraid(int n, std::vector<std::int64_t> table) : n_(n), m_(std::move(table)) {}

    std::size_t index(int i, int j) const;

    int n_ = 0;
    std::vector<std::int64_t> m_; // upper triangle, pairs in lexicographic order
};

/// A strictly increasing list of vertices of an ambient MultiBraid.
class VertexSubset {
public:
    static VertexSubset of(std::vector<int> members, int ambient_vertex_count);
    static VertexSubset full(int vertex_count);

    std::span<const int> members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }

private:
    explicit VertexSubset(std::vector<int> members) : members_(std::move(members)) {}

    std::vector<int> members_;
};

struct TripleViolation {
    std::array<int, 3> triple;          // i < j < k
    std::pair<int, int> long_edge;      // the pair whose multiplicity exceeds the other two + 1
};

struct BalanceReport {
    bool balanced = true;
    std::vector<TripleViolation> violations;
};

/// Checks the three triangle inequalities m_xy <= m_xz + m_yz + 1 on every
/// triple, reporting each violated inequality.
BalanceReport is_balanced(const MultiBraid& m);

/// Induced multiplicity on the subset, vertices relabeled 0..|U|-1 in U-order.
MultiBraid restrict_to(const MultiBraid& m, const VertexSubset& u);

/// m_ij + m_ik + m_jk.
std::int64_t triangle_sum(const MultiBraid& m, int i, int j, int k);

/// Number of triples inside U whose triangle sum is odd.
std::int64_t odd_triangle_count(const MultiBraid& m, const VertexSubset& u);

/// |m_ij - m_js + m_st - m_it| for the four-cycle traversing i, j, s, t in
/// order. Invariant under rotation and reflection of the traversal.
std::int64_t four_cycle_value(const MultiBraid& m, int i, int j, int s, int t);

/// Sum of squared four-cycle values over the 3 * C(|U|, 4) four-cycles inside
/// U; zero when |U| < 4.
std::int64_t deviation(const MultiBraid& m, const VertexSubset& u);
std::int64_t deviation(const MultiBraid& m);
std::int64_t deviation(const MultiBraid& m, std::span<const int> members);

/// Closed form of the full-set deviation in terms of edge power sums; always
/// equal to deviation(m).
std::int64_t deviation_closed_form(const MultiBraid& m);

/// Sum of all entries.
std::int64_t total_multiplicity(const MultiBraid& m);

/// Exponents (floor(T/2), ceil(T/2)) of a balanced 3-vertex multiplicity with
/// triangle sum T. Throws not_balanced outside the balanced cone, where this
/// formula does not apply.
std::pair<std::int64_t, std::int64_t> a2_exponents(const MultiBraid& m);

} // namespace braidfree
