#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "braidfree/multi_braid.hpp"

namespace braidfree {

/// A graph whose edges are partitioned into plus and minus sets; sign(i, j)
/// is +1, -1 or 0 (no edge). Immutable after construction.
class SignedGraph {
public:
    static SignedGraph create(int vertex_count,
                              std::span<const std::pair<int, int>> plus,
                              std::span<const std::pair<int, int>> minus);
    static SignedGraph from_signs(int vertex_count, std::vector<std::int8_t> upper_triangle);
    static SignedGraph empty(int vertex_count);

    int vertex_count() const { return n_; }
    int sign(int i, int j) const;

    std::vector<std::pair<int, int>> plus_edges() const;
    std::vector<std::pair<int, int>> minus_edges() const;
    int edge_count() const;

    SignedGraph induced(std::span<const int> vertices) const;
    SignedGraph sign_swapped() const;

    std::span<const std::int8_t> signs() const { return signs_; }

    bool operator==(const SignedGraph&) const = default;

private:
    SignedGraph(int n, std::vector<std::int8_t> signs) : n_(n), signs_(std::move(signs)) {}

    std::size_t index(int i, int j) const;

    int n_ = 0;
    std::vector<std::int8_t> signs_; // upper triangle, pairs in lexicographic order
};

enum class ObstructionKind {
    sigma_cycle,        // induced one-sign cycle of length > 3
    forbidden_four,     // non-eliminable induced subgraph on four vertices
    mountain,           // induced sigma-mountain
    hill,               // induced sigma-hill
    ordering_exhausted, // brute-force search found no ordering
};

const char* obstruction_kind_name(ObstructionKind kind);

struct Obstruction {
    ObstructionKind kind = ObstructionKind::ordering_exhausted;
    std::vector<int> vertices; // in pattern order (v_0 .. v_l / cycle order)
    int sigma = +1;            // sign of the structure's single-sign edges
};

struct EliminationCertificate {
    std::optional<std::vector<int>> ordering; // vertices listed by increasing nu
    std::optional<Obstruction> obstruction;

    bool eliminable() const { return ordering.has_value(); }
};

/// True iff the two local sign-closure conditions hold for every vertex triple
/// whose maximum (under the ordering) is the triple's third vertex.
/// `ordering` lists vertices by increasing nu. Throws not_a_permutation.
bool check_ordering(const SignedGraph& g, std::span<const int> ordering);

/// Internal predicate of the ordering definition: conditions on the induced
/// triple {i, j, k} given nu(i), nu(j) < nu(k).
bool triple_conditions_hold(const SignedGraph& g, int i, int j, int k);

/// Exhaustive ordering search, extending partial orderings largest-nu-first
/// so each placement is checked against all pairs of not-yet-placed vertices.
/// Throws too_large above 10 vertices.
EliminationCertificate is_eliminable_bruteforce(const SignedGraph& g);

/// Decision via the forbidden-structure characterization: every induced
/// four-vertex subgraph eliminable, no induced one-sign cycle of length > 3,
/// no induced sigma-mountain or sigma-hill. On success the ordering is found
/// by brute force (it exists whenever the three conditions hold).
EliminationCertificate is_eliminable_characterization(const SignedGraph& g);

/// Size-dispatched front end: brute force up to 10 vertices, characterization
/// beyond.
EliminationCertificate is_eliminable(const SignedGraph& g);

/// No induced cycle of length >= 4, decided by simplicial-vertex elimination.
bool is_chordal(int vertex_count, std::span<const std::pair<int, int>> edges);

/// Searches all vertex subsets for an induced sigma-cycle of length > 3,
/// sigma-mountain (>= 4 vertices) or sigma-hill (>= 5 vertices), smallest
/// subsets first.
std::optional<Obstruction> find_sigma_structure(const SignedGraph& g);

/// The three obstruction families on ell + 1 vertices. sigma is +1 or -1.
/// Cycle needs ell >= 2, mountain ell >= 3, hill ell >= 4 (the 4-vertex hill
/// pattern degenerates and is not constructed). Throws too_small.
SignedGraph make_sigma_cycle(int ell, int sigma);
SignedGraph make_mountain(int ell, int sigma);
SignedGraph make_hill(int ell, int sigma);

struct SignedStats {
    std::int64_t q = 0;  // triples with odd sign sum
    std::int64_t dv = 0; // sum of squared four-cycle alternating sign sums
};

/// Deviation statistics of the sign function itself (offsets drop out of both
/// quantities, so they are determined by the signed graph alone).
SignedStats signed_stats(const SignedGraph& g);

/// The multiplicity m_ij = n_i + n_j + sign(i, j). Throws non_positive_result
/// if any entry would drop below 1, size_mismatch on length mismatch.
MultiBraid multiplicity_from_signed_graph(const SignedGraph& g, std::span<const std::int64_t> n);

/// The twelve non-eliminable signed graphs on four vertices, one
/// representative per class up to isomorphism and sign swap.
const std::vector<SignedGraph>& non_eliminable_four_catalog();

/// Lexicographically minimal upper-triangle sign vector over all vertex
/// permutations (and optionally the sign swap). Intended for small graphs.
std::vector<std::int8_t> canonical_form(const SignedGraph& g, bool allow_sign_swap);

bool signed_isomorphic(const SignedGraph& a, const SignedGraph& b, bool allow_sign_swap);

} // namespace braidfree
