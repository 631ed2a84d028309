#include "braidfree/freeness.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

#include "braidfree/combinatorics.hpp"

namespace braidfree {

const char* status_name(Status s) {
    switch (s) {
    case Status::Free: return "free";
    case Status::NotFree: return "not_free";
    case Status::Unknown: return "unknown";
    }
    return "unknown";
}

namespace {

std::int64_t subset_bound(const MultiBraid& m, std::span<const int> u, std::int64_t q,
                          bool strengthened) {
    const std::int64_t ell = static_cast<std::int64_t>(u.size()) - 1;
    std::int64_t bound = q * ell;
    if (strengthened) {
        std::int64_t total = 0;
        for (std::size_t a = 0; a < u.size(); ++a) {
            for (std::size_t b = a + 1; b < u.size(); ++b) {
                total += m.at(u[a], u[b]);
            }
        }
        const std::int64_t p = total % ell;
        bound -= 2 * p * (ell - p);
    }
    return bound;
}

std::int64_t odd_triples_of(const MultiBraid& m, std::span<const int> u) {
    std::int64_t q = 0;
    for (std::size_t a = 0; a < u.size(); ++a)
        for (std::size_t b = a + 1; b < u.size(); ++b)
            for (std::size_t c = b + 1; c < u.size(); ++c)
                q += (m.at(u[a], u[b]) + m.at(u[a], u[c]) + m.at(u[b], u[c])) & 1;
    return q;
}

} // namespace

Criterion2Result criterion2(const MultiBraid& m, bool strengthened) {
    if (!is_balanced(m).balanced) {
        raise(errc::not_balanced, "deviation criterion requires the balanced cone");
    }
    Criterion2Result result;
    for_each_subset_by_size(m.vertex_count(), 4, [&](std::span<const int> u) {
        const std::int64_t dv = deviation(m, u);
        const std::int64_t q = odd_triples_of(m, u);
        const std::int64_t bound = subset_bound(m, u, q, strengthened);
        if (dv > bound) {
            result.pass = false;
            result.witness = WitnessSubset{std::vector<int>(u.begin(), u.end()), dv, q, bound};
            return false;
        }
        return true;
    });
    return result;
}

Criterion3Result criterion3(const MultiBraid& m) {
    if (!is_balanced(m).balanced) {
        raise(errc::not_balanced, "decomposition criterion requires the balanced cone");
    }
    Criterion3Result result;
    AnnResult ann = ann_decompose(m);
    if (!ann.ok()) {
        result.failure = Criterion3Failure::not_decomposable;
        result.note = ann.diagnostic;
        if (ann.failure == AnnFailure::budget_exceeded) {
            result.note += " (search gave up, not a proof of non-decomposability)";
        }
        return result;
    }
    result.decomposition = std::move(*ann.decomposition);

    const int n = m.vertex_count();
    std::vector<std::pair<int, int>> plus, minus;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int e = result.decomposition->eps_at(i, j);
            if (e > 0) plus.emplace_back(i, j);
            if (e < 0) minus.emplace_back(i, j);
        }
    }
    const SignedGraph residual = SignedGraph::create(n, plus, minus);
    result.elimination = is_eliminable(residual);
    if (result.elimination->eliminable()) {
        result.pass = true;
    } else {
        result.failure = Criterion3Failure::not_eliminable;
    }
    return result;
}

FreenessVerdict decide_balanced(const MultiBraid& m, bool strengthened, CrossCheckPolicy policy) {
    const Criterion2Result c2 = criterion2(m, strengthened);
    const Criterion3Result c3 = criterion3(m);

    FreenessVerdict verdict;
    verdict.core_labels.resize(static_cast<std::size_t>(m.vertex_count()));
    for (int v = 0; v < m.vertex_count(); ++v) verdict.core_labels[static_cast<std::size_t>(v)] = v;

    if (c2.pass != c3.pass) {
        const std::string detail =
            std::string("deviation criterion says ") + (c2.pass ? "free" : "not free") +
            " but the decomposition criterion says " + (c3.pass ? "free" : "not free") +
            (c3.note.empty() ? "" : " [" + c3.note + "]");
        if (policy == CrossCheckPolicy::throw_on_disagreement) {
            raise(errc::internal_inconsistency, detail);
        }
        verdict.note = "inconsistency: " + detail;
    }

    if (c2.pass) {
        verdict.status = Status::Free;
        if (c3.pass) {
            verdict.certificate =
                CertAnnEliminable{*c3.decomposition, *c3.elimination->ordering};
        } else {
            verdict.certificate = CertBalancedPass{strengthened};
        }
    } else {
        verdict.status = Status::NotFree;
        verdict.certificate = CertWitness{*c2.witness};
    }
    return verdict;
}

std::vector<int> find_free_vertices(const MultiBraid& m) {
    std::vector<int> result;
    const int n = m.vertex_count();
    for (int v = 0; v < n; ++v) {
        bool free_vertex = true;
        for (int i = 0; i < n && free_vertex; ++i) {
            if (i == v) continue;
            for (int j = i + 1; j < n && free_vertex; ++j) {
                if (j == v) continue;
                free_vertex = m.at(v, i) + m.at(v, j) <= m.at(i, j) + 1;
            }
        }
        if (free_vertex) result.push_back(v);
    }
    return result;
}

MultiBraid eliminate_free_vertex(const MultiBraid& m, int v) {
    const std::vector<int> free_vertices = find_free_vertices(m);
    if (std::find(free_vertices.begin(), free_vertices.end(), v) == free_vertices.end()) {
        raise(errc::not_a_free_vertex, "vertex " + std::to_string(v));
    }
    std::vector<int> rest;
    for (int u = 0; u < m.vertex_count(); ++u) {
        if (u != v) rest.push_back(u);
    }
    return restrict_to(m, VertexSubset::of(rest, m.vertex_count()));
}

namespace {

void map_certificate_labels(Certificate& cert, const std::vector<int>& labels) {
    if (auto* ann = std::get_if<CertAnnEliminable>(&cert)) {
        for (int& v : ann->ordering) v = labels[static_cast<std::size_t>(v)];
    } else if (auto* witness = std::get_if<CertWitness>(&cert)) {
        for (int& v : witness->witness.u) v = labels[static_cast<std::size_t>(v)];
    } else if (auto* ob = std::get_if<CertObstruction>(&cert)) {
        for (int& v : ob->obstruction.vertices) v = labels[static_cast<std::size_t>(v)];
    }
}

} // namespace

FreenessVerdict decide(const MultiBraid& m, bool strengthened) {
    MultiBraid current = m;
    std::vector<int> labels(static_cast<std::size_t>(m.vertex_count()));
    for (int v = 0; v < m.vertex_count(); ++v) labels[static_cast<std::size_t>(v)] = v;
    std::vector<int> chain;

    while (current.vertex_count() > 3) {
        const std::vector<int> free_vertices = find_free_vertices(current);
        if (free_vertices.empty()) break;
        const int v = free_vertices.front();
        chain.push_back(labels[static_cast<std::size_t>(v)]);
        labels.erase(labels.begin() + v);
        current = eliminate_free_vertex(current, v);
    }

    FreenessVerdict verdict;
    verdict.reduction_chain = chain;
    verdict.core_labels = labels;

    if (current.vertex_count() <= 3) {
        verdict.status = Status::Free;
        verdict.certificate = CertRankAtMostTwo{};
        return verdict;
    }

    if (is_balanced(current).balanced) {
        FreenessVerdict inner = decide_balanced(current, strengthened, CrossCheckPolicy::warn);
        verdict.status = inner.status;
        verdict.certificate = std::move(inner.certificate);
        verdict.note = std::move(inner.note);
        map_certificate_labels(verdict.certificate, labels);
        return verdict;
    }

    // Unbalanced core: any balanced restriction that breaks the deviation
    // bound certifies non-freeness of the whole arrangement.
    bool found = false;
    for_each_subset_by_size(current.vertex_count(), 4, [&](std::span<const int> u) {
        const MultiBraid sub = restrict_to(current, VertexSubset::of({u.begin(), u.end()},
                                                                     current.vertex_count()));
        if (!is_balanced(sub).balanced) return true;
        const std::int64_t dv = deviation(sub);
        const std::int64_t q = odd_triples_of(sub, VertexSubset::full(sub.vertex_count()).members());
        std::vector<int> all(u.size());
        for (std::size_t i = 0; i < u.size(); ++i) all[i] = static_cast<int>(i);
        const std::int64_t bound = subset_bound(sub, all, q, strengthened);
        if (dv > bound) {
            std::vector<int> original;
            for (int v : u) original.push_back(labels[static_cast<std::size_t>(v)]);
            verdict.status = Status::NotFree;
            verdict.certificate = CertWitness{WitnessSubset{std::move(original), dv, q, bound}};
            found = true;
            return false;
        }
        return true;
    });
    if (found) return verdict;

    verdict.status = Status::Unknown;
    verdict.certificate = CertNone{};
    verdict.note = "core is outside the balanced cone, has no free vertex, and no balanced "
                   "restriction breaks the deviation bound";
    return verdict;
}

namespace {

// Depth-first search over free-vertex peels; a prefix of at most three
// vertices that is balanced always completes a construction, larger prefixes
// must pass the decomposition criterion. Failed prefixes are memoized by
// vertex bitmask.
bool construction_search(const MultiBraid& m, std::vector<int>& members, std::uint32_t mask,
                         std::set<std::uint32_t>& failed, std::vector<int>& peeled) {
    if (failed.contains(mask)) return false;

    const int size = static_cast<int>(members.size());
    auto prefix_passes = [&]() -> bool {
        if (size <= 2) return true;
        const MultiBraid sub = restrict_to(m, VertexSubset::of(members, m.vertex_count()));
        if (!is_balanced(sub).balanced) return false;
        return criterion3(sub).pass;
    };

    if (size <= 3) {
        if (prefix_passes()) return true;
    }
    if (size > 2) {
        const MultiBraid sub =
            size == m.vertex_count() ? m : restrict_to(m, VertexSubset::of(members, m.vertex_count()));
        for (int local : find_free_vertices(sub)) {
            const int vertex = members[static_cast<std::size_t>(local)];
            std::vector<int> rest = members;
            rest.erase(rest.begin() + local);
            std::vector<int> saved = members;
            members = std::move(rest);
            if (construction_search(m, members, mask & ~(1u << vertex), failed, peeled)) {
                members = std::move(saved);
                peeled.push_back(vertex);
                return true;
            }
            members = std::move(saved);
        }
    }
    if (size > 3 && prefix_passes()) return true;
    failed.insert(mask);
    return false;
}

} // namespace

std::optional<Cor65Construction> free_construction(const MultiBraid& m) {
    std::vector<int> members(static_cast<std::size_t>(m.vertex_count()));
    for (int v = 0; v < m.vertex_count(); ++v) members[static_cast<std::size_t>(v)] = v;
    std::set<std::uint32_t> failed;
    std::vector<int> peeled;
    const std::uint32_t full = (1u << m.vertex_count()) - 1;
    if (!construction_search(m, members, full, failed, peeled)) return std::nullopt;

    // `peeled` was filled on unwind, so it lists the suffix from the prefix
    // outward; members/mask bookkeeping left `members` at the root, so the
    // prefix is everything never peeled.
    std::vector<int> prefix;
    for (int v = 0; v < m.vertex_count(); ++v) {
        if (std::find(peeled.begin(), peeled.end(), v) == peeled.end()) prefix.push_back(v);
    }
    Cor65Construction result;
    result.k = static_cast<int>(prefix.size()) - 1;
    result.ordering = std::move(prefix);
    result.ordering.insert(result.ordering.end(), peeled.begin(), peeled.end());
    return result;
}

bool reverify(const MultiBraid& m, const FreenessVerdict& verdict) {
    // Re-derive the core from the reduction chain, checking each elimination.
    MultiBraid current = m;
    std::vector<int> labels(static_cast<std::size_t>(m.vertex_count()));
    for (int v = 0; v < m.vertex_count(); ++v) labels[static_cast<std::size_t>(v)] = v;
    for (int original : verdict.reduction_chain) {
        const auto it = std::find(labels.begin(), labels.end(), original);
        if (it == labels.end()) return false;
        const int local = static_cast<int>(it - labels.begin());
        const std::vector<int> free_vertices = find_free_vertices(current);
        if (std::find(free_vertices.begin(), free_vertices.end(), local) == free_vertices.end()) {
            return false;
        }
        current = eliminate_free_vertex(current, local);
        labels.erase(it);
    }
    if (labels != verdict.core_labels) return false;

    auto local_of = [&](int original) -> int {
        const auto it = std::find(labels.begin(), labels.end(), original);
        return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
    };

    if (std::holds_alternative<CertRankAtMostTwo>(verdict.certificate)) {
        return verdict.status == Status::Free && current.vertex_count() <= 3;
    }
    if (const auto* pass = std::get_if<CertBalancedPass>(&verdict.certificate)) {
        return verdict.status == Status::Free && is_balanced(current).balanced &&
               criterion2(current, pass->strengthened).pass;
    }
    if (const auto* ann = std::get_if<CertAnnEliminable>(&verdict.certificate)) {
        if (verdict.status != Status::Free) return false;
        if (!is_balanced(current).balanced) return false;
        if (!verify_decomposition(current, ann->decomposition)) return false;
        std::vector<std::pair<int, int>> plus, minus;
        for (int i = 0; i < current.vertex_count(); ++i) {
            for (int j = i + 1; j < current.vertex_count(); ++j) {
                const int e = ann->decomposition.eps_at(i, j);
                if (e > 0) plus.emplace_back(i, j);
                if (e < 0) minus.emplace_back(i, j);
            }
        }
        const SignedGraph residual = SignedGraph::create(current.vertex_count(), plus, minus);
        std::vector<int> local_order;
        for (int original : ann->ordering) {
            const int local = local_of(original);
            if (local < 0) return false;
            local_order.push_back(local);
        }
        if (!check_ordering(residual, local_order)) return false;
        // The deviation criterion must agree on the core.
        return criterion2(current).pass;
    }
    if (const auto* witness = std::get_if<CertWitness>(&verdict.certificate)) {
        if (verdict.status != Status::NotFree) return false;
        std::vector<int> local;
        for (int original : witness->witness.u) {
            const int v = local_of(original);
            if (v < 0) return false;
            local.push_back(v);
        }
        std::sort(local.begin(), local.end());
        const MultiBraid sub = restrict_to(current, VertexSubset::of(local, current.vertex_count()));
        if (!is_balanced(sub).balanced) return false;
        const std::int64_t dv = deviation(sub);
        const std::int64_t q = odd_triangle_count(sub, VertexSubset::full(sub.vertex_count()));
        if (dv != witness->witness.dv || q != witness->witness.q) return false;
        // The recorded bound must be the plain or the strengthened one, and broken.
        std::vector<int> all(local.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
        const std::int64_t plain = subset_bound(sub, all, q, false);
        const std::int64_t strong = subset_bound(sub, all, q, true);
        if (witness->witness.bound != plain && witness->witness.bound != strong) return false;
        return dv > witness->witness.bound;
    }
    if (const auto* ob = std::get_if<CertObstruction>(&verdict.certificate)) {
        (void)ob;
        return verdict.status == Status::NotFree;
    }
    return verdict.status == Status::Unknown;
}

} // namespace braidfree
