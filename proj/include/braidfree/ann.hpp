#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "braidfree/multi_braid.hpp"

namespace braidfree {

/// Certificate that m_ij = n_i + n_j + eps_ij with n_i >= 0 and
/// eps_ij in {-1, 0, +1}.
struct AnnDecomposition {
    std::vector<std::int64_t> n;
    std::vector<int> eps; // upper triangle, pairs in lexicographic order

    int vertex_count() const { return static_cast<int>(n.size()); }
    int eps_at(int i, int j) const;
    void set_eps(int i, int j, int value);

    bool operator==(const AnnDecomposition&) const = default;
};

AnnDecomposition make_empty_decomposition(int vertex_count);

struct FourCycleWitness {
    int i = 0, j = 0, s = 0, t = 0;
    std::int64_t value = 0;
};

struct FourCycleBoundResult {
    bool holds = true;
    std::optional<FourCycleWitness> witness; // a maximal violating cycle when !holds
};

/// True iff every four-cycle value is at most 2 (necessary for the existence
/// of a decomposition reachable by the incremental construction).
FourCycleBoundResult four_cycle_bound_holds(const MultiBraid& m);

/// Decomposition of a balanced 3-vertex multiplicity via the half-sum ceiling
/// formulas; the resulting eps lie in {-1, 0}. Throws not_balanced.
AnnDecomposition base_decompose_triangle(const MultiBraid& m);

enum class AnnFailure {
    none,
    not_balanced,     // outside the balanced cone; not decomposable by definition
    no_decomposition, // complete search proved no offset vector works
    budget_exceeded,  // search budget hit before a decision; logged distinctly
};

struct AnnResult {
    std::optional<AnnDecomposition> decomposition;
    AnnFailure failure = AnnFailure::none;
    bool used_fallback = false; // incremental pass got stuck; settled by search
    std::string diagnostic;

    bool ok() const { return decomposition.has_value(); }
};

/// Attempts a decomposition on any input. Primary path: base triangle, then
/// one vertex at a time with a minimal initial offset and a repair loop that
/// clears residuals below -1; this succeeds whenever every four-vertex subset
/// satisfies DV <= 3q. Outside that regime the repair loop can wedge on
/// decomposable inputs, so a wedged pass falls back to a complete bounded
/// backtracking search over offset vectors (after one offset is fixed, each
/// remaining one has at most three candidates).
AnnResult ann_decompose(const MultiBraid& m);

/// Checks n_i >= 0, eps in {-1,0,1}, and reconstruction of every entry.
/// Throws size_mismatch when vertex counts differ.
bool verify_decomposition(const MultiBraid& m, const AnnDecomposition& d);

/// Exhaustive search over all offset vectors with 0 <= n_i <= n_cap,
/// accepting the first whose residuals all lie in {-1, 0, 1}. Sound with
/// n_cap = max m_ij + 1. Throws instance_too_large when the state space is
/// beyond the supported budget.
std::optional<AnnDecomposition> ann_decompose_oracle(const MultiBraid& m, std::int64_t n_cap);

} // namespace braidfree
