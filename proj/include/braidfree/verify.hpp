#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braidfree/freeness.hpp"
#include "braidfree/multi_braid.hpp"

namespace braidfree {

struct SweepConfig {
    int ell = 3;
    std::int64_t max_mult = 3;
    std::optional<std::int64_t> sample_count; // absent = exhaustive
    std::uint64_t seed = 1;
    std::int64_t budget = 200'000'000; // exhaustive instance-count ceiling
    int threads = 0;                   // 0 = BRAIDFREE_THREADS or hardware
};

struct Violation {
    std::string kind;
    nlohmann::json data;
};

struct SweepReport {
    std::string suite;
    std::int64_t instances = 0;
    std::vector<Violation> violations;
    double elapsed_seconds = 0.0;
    std::vector<std::string> notes;

    bool ok() const { return violations.empty(); }
    nlohmann::json summary() const;
};

/// Visits multiplicities with entries in [1, max_mult] on ell + 1 vertices,
/// edge by edge with incremental triangle-inequality pruning when
/// balanced_only is set. Returns false iff the visitor stopped early.
bool for_each_multiplicity(int ell, std::int64_t max_mult, bool balanced_only,
                           const std::function<bool(const MultiBraid&)>& visit);

/// Balanced-cone sampler: a decomposed starting point followed by a
/// single-entry random walk that stays inside the cone and the entry range.
class BalancedSampler {
public:
    BalancedSampler(int ell, std::int64_t max_mult, std::uint64_t seed);
    MultiBraid next();

private:
    int ell_;
    std::int64_t max_mult_;
    std::uint64_t state_;
};

/// Canonical key of a multiplicity under vertex permutations.
std::vector<std::int64_t> canonical_multiplicity_key(const MultiBraid& m);

/// sos_residual == 0 over the configured universe (exhaustive over the
/// balanced cone, or sampled when sample_count is set).
SweepReport verify_sos_identity(const SweepConfig& cfg);

/// Regenerates the induced four-subset classification of sigma-cycles,
/// mountains and hills for each ell in range: per-class counts and (q, DV)
/// values against the catalog rows (rows apply from ell >= 4; at ell = 3 the
/// graph itself is the only four-subset and only the totals are defined),
/// plus the closed-form totals q = l^2-2l-3, DV = l^3-2l^2-l+2, the identity
/// DV = q l + 2(l+1), and the subset-sum recompositions of both totals.
SweepReport verify_structure_tables(int ell_min, int ell_max);

/// Brute-forces all 729 signed graphs on four vertices and matches the
/// non-eliminable set against the twelve-class catalog (closed under sign
/// swap and isomorphism); checks DV > 3q for each member.
SweepReport verify_table1_catalog();

/// criterion2 <=> criterion3 over the configured balanced universe. Any
/// disagreement is recorded and the first is dumped to counterexample_path
/// when non-empty.
SweepReport verify_equivalence(const SweepConfig& cfg, const std::string& counterexample_path = "");

struct ConjectureEntry {
    MultiBraid instance;
    std::int64_t orbit_size = 0; // enumerated instances with this canonical form
    std::string diagnostics;
};

struct ConjectureReport {
    SweepReport sweep;
    std::vector<ConjectureEntry> unknown; // deduped by vertex-permutation isomorphism
    std::int64_t counts[3] = {0, 0, 0};   // Free / NotFree / Unknown instance counts
};

/// Classifies every multiplicity up to the bounds through the decision
/// pipeline, re-verifying certificates, and catalogs the Unknown instances.
ConjectureReport conjecture_scan(const SweepConfig& cfg);

} // namespace braidfree
