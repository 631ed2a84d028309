#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "braidfree/ann.hpp"
#include "braidfree/multi_braid.hpp"
#include "braidfree/signed_graph.hpp"

namespace braidfree {

enum class Status { Free, NotFree, Unknown };

const char* status_name(Status s);

struct WitnessSubset {
    std::vector<int> u;      // vertex labels, ascending
    std::int64_t dv = 0;     // deviation of the restriction
    std::int64_t q = 0;      // odd triple count of the restriction
    std::int64_t bound = 0;  // the bound dv exceeds (or meets, on pass)
};

struct Criterion2Result {
    bool pass = true;
    std::optional<WitnessSubset> witness; // first failing subset, smallest then lexicographic
};

/// Deviation bound on every subset of size >= 4: DV(m_U) <= q_U (|U|-1), or
/// with `strengthened`, DV(m_U) <= q_U (|U|-1) - 2p(|U|-1-p) where p is the
/// remainder of |m_U| modulo |U|-1. Throws not_balanced.
Criterion2Result criterion2(const MultiBraid& m, bool strengthened = false);

enum class Criterion3Failure { none, not_decomposable, not_eliminable };

struct Criterion3Result {
    bool pass = false;
    Criterion3Failure failure = Criterion3Failure::none;
    std::optional<AnnDecomposition> decomposition;
    std::optional<EliminationCertificate> elimination;
    std::string note;
};

/// Decomposability plus signed-eliminability of the residual graph
/// (plus = {eps = +1}, minus = {eps = -1}). Throws not_balanced.
Criterion3Result criterion3(const MultiBraid& m);

// Certificate kinds attached to a verdict.
struct CertNone {};
struct CertRankAtMostTwo {};
struct CertBalancedPass {
    bool strengthened = false;
};
struct CertAnnEliminable {
    AnnDecomposition decomposition; // on the core, n[i] belongs to core_labels[i]
    std::vector<int> ordering;      // original labels, increasing nu
};
struct CertWitness {
    WitnessSubset witness; // original labels
};
struct CertObstruction {
    Obstruction obstruction; // original labels
};

using Certificate = std::variant<CertNone, CertRankAtMostTwo, CertBalancedPass,
                                 CertAnnEliminable, CertWitness, CertObstruction>;

struct FreenessVerdict {
    Status status = Status::Unknown;
    std::vector<int> reduction_chain; // eliminated vertices (original labels) in order
    std::vector<int> core_labels;     // original labels of the remaining core, ascending
    Certificate certificate = CertNone{};
    std::string note;
};

enum class CrossCheckPolicy { throw_on_disagreement, warn };

/// Verdict for a balanced multiplicity: Free iff criterion2 passes. The
/// decomposition route (criterion3) always runs as a cross-check; a
/// disagreement either throws internal_inconsistency or is recorded in the
/// verdict note, per policy. Throws not_balanced.
FreenessVerdict decide_balanced(const MultiBraid& m, bool strengthened = false,
                                CrossCheckPolicy policy = CrossCheckPolicy::throw_on_disagreement);

/// All vertices v with m_vi + m_vj <= m_ij + 1 for every pair {i, j} of other
/// vertices (every vertex of a complete graph is simplicial).
std::vector<int> find_free_vertices(const MultiBraid& m);

/// Restriction to the complement of v; preserves the freeness status when v
/// is a free vertex. Throws not_a_free_vertex otherwise.
MultiBraid eliminate_free_vertex(const MultiBraid& m, int v);

/// Full decision pipeline: rank <= 2 cores are Free; free vertices are
/// eliminated greedily (lowest index first); a balanced core is decided by
/// criterion2 with the decomposition route as cross-check; an unbalanced core
/// is searched for a balanced restriction that fails the deviation bound
/// (which propagates non-freeness); otherwise Unknown.
FreenessVerdict decide(const MultiBraid& m, bool strengthened = false);

struct Cor65Construction {
    std::vector<int> ordering; // prefix (ascending) then the peeled vertices
    int k = 0;                 // prefix is ordering[0..k]
};

/// Searches for an ordering and split index such that the prefix multiplicity
/// is decomposable with eliminable residual graph and every later vertex is a
/// free vertex of its prefix.
std::optional<Cor65Construction> free_construction(const MultiBraid& m);

/// Re-verifies a verdict's certificate from scratch against m using the
/// primitive predicates only. Unknown verdicts re-verify trivially.
bool reverify(const MultiBraid& m, const FreenessVerdict& verdict);

} // namespace braidfree
