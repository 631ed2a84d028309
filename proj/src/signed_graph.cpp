#include "braidfree/signed_graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "braidfree/combinatorics.hpp"

namespace braidfree {

std::size_t SignedGraph::index(int i, int j) const {
    return static_cast<std::size_t>(i) * (2 * n_ - i - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

int SignedGraph::sign(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= n_ || j >= n_) {
        raise(errc::index_out_of_range, "sign lookup");
    }
    if (i > j) std::swap(i, j);
    return signs_[index(i, j)];
}

SignedGraph SignedGraph::empty(int vertex_count) {
    if (vertex_count < 1) raise(errc::too_small, "signed graph needs at least one vertex");
    return SignedGraph(vertex_count,
                       std::vector<std::int8_t>(
                           static_cast<std::size_t>(vertex_count) * (vertex_count - 1) / 2, 0));
}

SignedGraph SignedGraph::from_signs(int vertex_count, std::vector<std::int8_t> upper_triangle) {
    SignedGraph g = empty(vertex_count);
    if (upper_triangle.size() != g.signs_.size()) {
        raise(errc::size_mismatch, "sign table has wrong length");
    }
    for (std::int8_t s : upper_triangle) {
        if (s < -1 || s > 1) raise(errc::bad_input, "signs must be -1, 0 or +1");
    }
    g.signs_ = std::move(upper_triangle);
    return g;
}

SignedGraph SignedGraph::create(int vertex_count,
                                std::span<const std::pair<int, int>> plus,
                                std::span<const std::pair<int, int>> minus) {
    SignedGraph g = empty(vertex_count);
    auto insert = [&](std::pair<int, int> e, std::int8_t value) {
        auto [i, j] = e;
        if (i == j) raise(errc::bad_input, "loops are not allowed");
        if (i < 0 || j < 0 || i >= vertex_count || j >= vertex_count) {
            raise(errc::index_out_of_range,
                  "edge (" + std::to_string(i) + ", " + std::to_string(j) + ")");
        }
        if (i > j) std::swap(i, j);
        std::int8_t& slot = g.signs_[g.index(i, j)];
        if (slot != 0) {
            raise(errc::duplicate_pair,
                  "edge (" + std::to_string(i) + ", " + std::to_string(j) + ") listed twice");
        }
        slot = value;
    };
    for (auto e : plus) insert(e, +1);
    for (auto e : minus) insert(e, -1);
    return g;
}

std::vector<std::pair<int, int>> SignedGraph::plus_edges() const {
    std::vector<std::pair<int, int>> result;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (signs_[index(i, j)] > 0) result.emplace_back(i, j);
    return result;
}

std::vector<std::pair<int, int>> SignedGraph::minus_edges() const {
    std::vector<std::pair<int, int>> result;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (signs_[index(i, j)] < 0) result.emplace_back(i, j);
    return result;
}

int SignedGraph::edge_count() const {
    int count = 0;
    for (std::int8_t s : signs_) count += s != 0;
    return count;
}

SignedGraph SignedGraph::induced(std::span<const int> vertices) const {
    const int k = static_cast<int>(vertices.size());
    SignedGraph g = empty(k);
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            g.signs_[g.index(a, b)] = static_cast<std::int8_t>(
                sign(vertices[static_cast<std::size_t>(a)], vertices[static_cast<std::size_t>(b)]));
        }
    }
    return g;
}

SignedGraph SignedGraph::sign_swapped() const {
    std::vector<std::int8_t> flipped(signs_.size());
    for (std::size_t i = 0; i < signs_.size(); ++i) {
        flipped[i] = static_cast<std::int8_t>(-signs_[i]);
    }
    return SignedGraph(n_, std::move(flipped));
}

const char* obstruction_kind_name(ObstructionKind kind) {
    switch (kind) {
    case ObstructionKind::sigma_cycle: return "sigma_cycle";
    case ObstructionKind::forbidden_four: return "forbidden_four";
    case ObstructionKind::mountain: return "mountain";
    case ObstructionKind::hill: return "hill";
    case ObstructionKind::ordering_exhausted: return "ordering_exhausted";
    }
    return "unknown";
}

bool triple_conditions_hold(const SignedGraph& g, int i, int j, int k) {
    const int si = g.sign(i, k);
    const int sj = g.sign(j, k);
    const int sij = g.sign(i, j);
    // Same-sign edges into the top vertex force the base edge with that sign.
    if (si != 0 && si == sj && sij != si) return false;
    // A sign change along k-i-j forces some edge back from k to j; same with
    // the roles of i and j exchanged.
    if (si != 0 && sij == -si && sj == 0) return false;
    if (sj != 0 && sij == -sj && si == 0) return false;
    return true;
}

bool check_ordering(const SignedGraph& g, std::span<const int> ordering) {
    const int n = g.vertex_count();
    if (static_cast<int>(ordering.size()) != n) {
        raise(errc::not_a_permutation, "ordering has wrong length");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : ordering) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            raise(errc::not_a_permutation, "ordering is not a permutation of the vertices");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (int c = 0; c < n; ++c) {
        for (int a = 0; a < c; ++a) {
            for (int b = a + 1; b < c; ++b) {
                if (!triple_conditions_hold(g, ordering[static_cast<std::size_t>(a)],
                                            ordering[static_cast<std::size_t>(b)],
                                            ordering[static_cast<std::size_t>(c)])) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Places vertices from the top rank downward; a placement is valid iff the
// triple conditions hold against every pair of still-unplaced vertices.
bool ordering_search(const SignedGraph& g, std::vector<int>& order, std::vector<bool>& used, int pos) {
    const int n = g.vertex_count();
    if (pos < 0) return true;
    for (int v = 0; v < n; ++v) {
        if (used[static_cast<std::size_t>(v)]) continue;
        bool valid = true;
        for (int a = 0; a < n && valid; ++a) {
            if (a == v || used[static_cast<std::size_t>(a)]) continue;
            for (int b = a + 1; b < n && valid; ++b) {
                if (b == v || used[static_cast<std::size_t>(b)]) continue;
                valid = triple_conditions_hold(g, a, b, v);
            }
        }
        if (!valid) continue;
        used[static_cast<std::size_t>(v)] = true;
        order[static_cast<std::size_t>(pos)] = v;
        if (ordering_search(g, order, used, pos - 1)) return true;
        used[static_cast<std::size_t>(v)] = false;
    }
    return false;
}

} // namespace

EliminationCertificate is_eliminable_bruteforce(const SignedGraph& g) {
    const int n = g.vertex_count();
    if (n > 10) {
        raise(errc::too_large, "brute-force ordering search supports at most 10 vertices");
    }
    EliminationCertificate cert;
    std::vector<int> order(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    if (ordering_search(g, order, used, n - 1)) {
        cert.ordering = std::move(order);
    } else {
        cert.obstruction = Obstruction{ObstructionKind::ordering_exhausted, {}, +1};
    }
    return cert;
}

namespace {

// Recognizers return the pattern embedding (vertex list in definition order)
// or nothing. They receive the induced subgraph and the subset in ambient
// labels.

std::optional<Obstruction> recognize_sigma_cycle(const SignedGraph& h, std::span<const int> ambient) {
    const int k = h.vertex_count();
    if (k < 4) return std::nullopt;
    int sigma = 0;
    for (int a = 0; a < k; ++a) {
        int degree = 0;
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            const int s = h.sign(a, b);
            if (s == 0) continue;
            if (sigma == 0) sigma = s;
            if (s != sigma) return std::nullopt;
            ++degree;
        }
        if (degree != 2) return std::nullopt;
    }
    // 2-regular one-signed graph: walk it; a single cycle must cover all k.
    std::vector<int> walk{0};
    std::vector<bool> visited(static_cast<std::size_t>(k), false);
    visited[0] = true;
    int prev = -1, cur = 0;
    while (true) {
        int next = -1;
        for (int b = 0; b < k; ++b) {
            if (b != cur && b != prev && h.sign(cur, b) != 0) {
                next = b;
                break;
            }
        }
        if (next == -1 || visited[static_cast<std::size_t>(next)]) break;
        visited[static_cast<std::size_t>(next)] = true;
        walk.push_back(next);
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(walk.size()) != k) return std::nullopt;
    if (h.sign(walk.front(), walk.back()) == 0) return std::nullopt;
    Obstruction ob;
    ob.kind = ObstructionKind::sigma_cycle;
    ob.sigma = sigma;
    for (int v : walk) ob.vertices.push_back(ambient[static_cast<std::size_t>(v)]);
    return ob;
}

// Hamiltonian path of -sigma edges on the given vertex set, or nothing.
// Returns interior-ordered vertex list.
std::optional<std::vector<int>> minus_sigma_path(const SignedGraph& h, std::span<const int> members,
                                                 int sigma) {
    const int k = static_cast<int>(members.size());
    if (k == 1) return std::vector<int>{members[0]};
    std::vector<int> degree(static_cast<std::size_t>(k), 0);
    int edge_total = 0;
    for (int a = 0; a < k; ++a) {
        for (int b = a + 1; b < k; ++b) {
            const int s = h.sign(members[static_cast<std::size_t>(a)], members[static_cast<std::size_t>(b)]);
            if (s == 0) continue;
            if (s != -sigma) return std::nullopt;
            ++degree[static_cast<std::size_t>(a)];
            ++degree[static_cast<std::size_t>(b)];
            ++edge_total;
        }
    }
    if (edge_total != k - 1) return std::nullopt;
    int start = -1;
    for (int a = 0; a < k; ++a) {
        if (degree[static_cast<std::size_t>(a)] > 2) return std::nullopt;
        if (degree[static_cast<std::size_t>(a)] == 1 && start < 0) start = a;
    }
    if (start < 0) return std::nullopt;
    std::vector<int> path{members[static_cast<std::size_t>(start)]};
    std::vector<bool> visited(static_cast<std::size_t>(k), false);
    visited[static_cast<std::size_t>(start)] = true;
    int cur = start;
    for (int step = 1; step < k; ++step) {
        int next = -1;
        for (int b = 0; b < k; ++b) {
            if (!visited[static_cast<std::size_t>(b)] &&
                h.sign(members[static_cast<std::size_t>(cur)], members[static_cast<std::size_t>(b)]) ==
                    -sigma) {
                next = b;
                break;
            }
        }
        if (next < 0) return std::nullopt;
        visited[static_cast<std::size_t>(next)] = true;
        path.push_back(members[static_cast<std::size_t>(next)]);
        cur = next;
    }
    return path;
}

std::optional<Obstruction> recognize_mountain(const SignedGraph& h, std::span<const int> ambient) {
    const int k = h.vertex_count();
    if (k < 4) return std::nullopt;
    const int ell = k - 1;
    for (int apex = 0; apex < k; ++apex) {
        // The apex carries only sigma edges; the rest is a -sigma path whose
        // interior is exactly the apex's neighborhood.
        int sigma = 0;
        bool ok = true;
        for (int b = 0; b < k && ok; ++b) {
            if (b == apex) continue;
            const int s = h.sign(apex, b);
            if (s == 0) continue;
            if (sigma == 0) sigma = s;
            if (s != sigma) ok = false;
        }
        if (!ok || sigma == 0) continue;
        std::vector<int> rest;
        for (int b = 0; b < k; ++b) {
            if (b != apex) rest.push_back(b);
        }
        auto path = minus_sigma_path(h, rest, sigma);
        if (!path) continue;
        // apex adjacent to path interior only: positions 1 .. ell-2
        bool pattern = true;
        for (int p = 0; p < ell && pattern; ++p) {
            const int expected = (p >= 1 && p <= ell - 2) ? sigma : 0;
            pattern = h.sign(apex, (*path)[static_cast<std::size_t>(p)]) == expected;
        }
        if (!pattern) continue;
        Obstruction ob;
        ob.kind = ObstructionKind::mountain;
        ob.sigma = sigma;
        ob.vertices.push_back(ambient[static_cast<std::size_t>(apex)]);
        for (int v : *path) ob.vertices.push_back(ambient[static_cast<std::size_t>(v)]);
        return ob;
    }
    return std::nullopt;
}

std::optional<Obstruction> recognize_hill(const SignedGraph& h, std::span<const int> ambient) {
    const int k = h.vertex_count();
    if (k < 5) return std::nullopt;
    const int ell = k - 1;
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            const int sigma = h.sign(a, b);
            if (sigma == 0) continue;
            // Candidate apexes a = v0, b = v1 joined by sigma; the rest must
            // be a -sigma path v2 .. v_l with a missing only the last vertex
            // and b missing only the first.
            bool only_sigma = true;
            for (int c = 0; c < k && only_sigma; ++c) {
                if (c == a || c == b) continue;
                if (h.sign(a, c) != 0 && h.sign(a, c) != sigma) only_sigma = false;
                if (h.sign(b, c) != 0 && h.sign(b, c) != sigma) only_sigma = false;
            }
            if (!only_sigma) continue;
            std::vector<int> rest;
            for (int c = 0; c < k; ++c) {
                if (c != a && c != b) rest.push_back(c);
            }
            auto path = minus_sigma_path(h, rest, sigma);
            if (!path) continue;
            const int plen = static_cast<int>(path->size()); // = ell - 1
            bool pattern = true;
            for (int p = 0; p < plen && pattern; ++p) {
                const int expected_a = (p <= plen - 2) ? sigma : 0;
                const int expected_b = (p >= 1) ? sigma : 0;
                pattern = h.sign(a, (*path)[static_cast<std::size_t>(p)]) == expected_a &&
                          h.sign(b, (*path)[static_cast<std::size_t>(p)]) == expected_b;
            }
            if (!pattern) continue;
            Obstruction ob;
            ob.kind = ObstructionKind::hill;
            ob.sigma = sigma;
            ob.vertices.push_back(ambient[static_cast<std::size_t>(a)]);
            ob.vertices.push_back(ambient[static_cast<std::size_t>(b)]);
            for (int v : *path) ob.vertices.push_back(ambient[static_cast<std::size_t>(v)]);
            (void)ell;
            return ob;
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<Obstruction> find_sigma_structure(const SignedGraph& g) {
    const int n = g.vertex_count();
    std::optional<Obstruction> found;
    for_each_subset_by_size(n, 4, [&](std::span<const int> subset) {
        const SignedGraph h = g.induced(subset);
        if (auto ob = recognize_sigma_cycle(h, subset)) {
            found = std::move(ob);
            return false;
        }
        if (auto ob = recognize_mountain(h, subset)) {
            found = std::move(ob);
            return false;
        }
        if (auto ob = recognize_hill(h, subset)) {
            found = std::move(ob);
            return false;
        }
        return true;
    });
    return found;
}

EliminationCertificate is_eliminable_characterization(const SignedGraph& g) {
    const int n = g.vertex_count();
    EliminationCertificate cert;
    // Four-vertex subgraphs first (they subsume length-4 one-sign cycles and
    // the 4-vertex mountain), then the larger pattern families.
    bool bad = false;
    for_each_combination(n, 4, [&](std::span<const int> subset) {
        if (!is_eliminable_bruteforce(g.induced(subset)).eliminable()) {
            cert.obstruction = Obstruction{ObstructionKind::forbidden_four,
                                           std::vector<int>(subset.begin(), subset.end()), +1};
            bad = true;
            return false;
        }
        return true;
    });
    if (bad) return cert;
    for (int size = 5; size <= n; ++size) {
        bool stop = false;
        for_each_combination(n, size, [&](std::span<const int> subset) {
            const SignedGraph h = g.induced(subset);
            std::optional<Obstruction> ob = recognize_sigma_cycle(h, subset);
            if (!ob) ob = recognize_mountain(h, subset);
            if (!ob) ob = recognize_hill(h, subset);
            if (ob) {
                cert.obstruction = std::move(ob);
                stop = true;
                return false;
            }
            return true;
        });
        if (stop) return cert;
    }
    // All three conditions hold, so an ordering exists; find one.
    if (n <= 10) {
        cert = is_eliminable_bruteforce(g);
        assert(cert.eliminable());
        return cert;
    }
    // Beyond brute-force range, grow the ordering greedily; the
    // characterization guarantees some extension always exists.
    std::vector<int> order;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (int pos = n - 1; pos >= 0; --pos) {
        bool placed = false;
        for (int v = 0; v < n && !placed; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            bool valid = true;
            for (int a = 0; a < n && valid; ++a) {
                if (a == v || used[static_cast<std::size_t>(a)]) continue;
                for (int b = a + 1; b < n && valid; ++b) {
                    if (b == v || used[static_cast<std::size_t>(b)]) continue;
                    valid = triple_conditions_hold(g, a, b, v);
                }
            }
            if (valid) {
                used[static_cast<std::size_t>(v)] = true;
                order.insert(order.begin(), v);
                placed = true;
            }
        }
        if (!placed) {
            raise(errc::internal_inconsistency,
                  "characterization passed but no ordering extension exists");
        }
    }
    cert.ordering = std::move(order);
    return cert;
}

EliminationCertificate is_eliminable(const SignedGraph& g) {
    if (g.vertex_count() <= 7) return is_eliminable_bruteforce(g);
    return is_eliminable_characterization(g);
}

bool is_chordal(int vertex_count, std::span<const std::pair<int, int>> edges) {
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(vertex_count),
                                       std::vector<bool>(static_cast<std::size_t>(vertex_count), false));
    for (auto [i, j] : edges) {
        if (i == j || i < 0 || j < 0 || i >= vertex_count || j >= vertex_count) {
            raise(errc::bad_input, "invalid edge in chordality check");
        }
        adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
        adj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
    }
    std::vector<bool> alive(static_cast<std::size_t>(vertex_count), true);
    for (int round = 0; round < vertex_count; ++round) {
        int simplicial = -1;
        for (int v = 0; v < vertex_count && simplicial < 0; ++v) {
            if (!alive[static_cast<std::size_t>(v)]) continue;
            bool clique = true;
            for (int a = 0; a < vertex_count && clique; ++a) {
                if (!alive[static_cast<std::size_t>(a)] || a == v ||
                    !adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(a)])
                    continue;
                for (int b = a + 1; b < vertex_count && clique; ++b) {
                    if (!alive[static_cast<std::size_t>(b)] || b == v ||
                        !adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(b)])
                        continue;
                    clique = adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                }
            }
            if (clique) simplicial = v;
        }
        if (simplicial < 0) return false;
        alive[static_cast<std::size_t>(simplicial)] = false;
    }
    return true;
}

SignedGraph make_sigma_cycle(int ell, int sigma) {
    if (ell < 2) raise(errc::too_small, "cycle needs ell >= 2");
    SignedGraph g = SignedGraph::empty(ell + 1);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < ell; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, ell);
    std::vector<std::pair<int, int>> none;
    return sigma > 0 ? SignedGraph::create(ell + 1, edges, none)
                     : SignedGraph::create(ell + 1, none, edges);
}

SignedGraph make_mountain(int ell, int sigma) {
    if (ell < 3) raise(errc::too_small, "mountain needs ell >= 3");
    std::vector<std::pair<int, int>> apex, path;
    for (int i = 2; i <= ell - 1; ++i) apex.emplace_back(0, i);
    for (int i = 1; i <= ell - 1; ++i) path.emplace_back(i, i + 1);
    return sigma > 0 ? SignedGraph::create(ell + 1, apex, path)
                     : SignedGraph::create(ell + 1, path, apex);
}

SignedGraph make_hill(int ell, int sigma) {
    // The 4-vertex pattern collapses (the two apex ranges overlap), so it is
    // not constructed here.
    if (ell < 4) raise(errc::too_small, "hill needs ell >= 4");
    std::vector<std::pair<int, int>> apex, path;
    apex.emplace_back(0, 1);
    for (int i = 2; i <= ell - 1; ++i) apex.emplace_back(0, i);
    for (int i = 3; i <= ell; ++i) apex.emplace_back(1, i);
    for (int i = 2; i <= ell - 1; ++i) path.emplace_back(i, i + 1);
    return sigma > 0 ? SignedGraph::create(ell + 1, apex, path)
                     : SignedGraph::create(ell + 1, path, apex);
}

SignedStats signed_stats(const SignedGraph& g) {
    SignedStats stats;
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                const int sum = g.sign(i, j) + g.sign(i, k) + g.sign(j, k);
                stats.q += sum & 1;
            }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const std::array<std::array<int, 4>, 3> cycles = {{
                        {a, b, c, d},
                        {a, b, d, c},
                        {a, c, b, d},
                    }};
                    for (const auto& cy : cycles) {
                        const std::int64_t v = g.sign(cy[0], cy[1]) - g.sign(cy[1], cy[2]) +
                                               g.sign(cy[2], cy[3]) - g.sign(cy[0], cy[3]);
                        stats.dv += v * v;
                    }
                }
    return stats;
}

MultiBraid multiplicity_from_signed_graph(const SignedGraph& g, std::span<const std::int64_t> n) {
    const int count = g.vertex_count();
    if (static_cast<int>(n.size()) != count) {
        raise(errc::size_mismatch, "offset vector has wrong length");
    }
    std::vector<EdgeEntry> entries;
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            const std::int64_t m = n[static_cast<std::size_t>(i)] + n[static_cast<std::size_t>(j)] +
                                   g.sign(i, j);
            if (m < 1) {
                raise(errc::non_positive_result, "entry (" + std::to_string(i) + ", " +
                                                     std::to_string(j) + ") would be " +
                                                     std::to_string(m));
            }
            entries.push_back({i, j, m});
        }
    }
    return MultiBraid::from_edges(count, entries);
}

const std::vector<SignedGraph>& non_eliminable_four_catalog() {
    using E = std::pair<int, int>;
    static const std::vector<SignedGraph> catalog = [] {
        std::vector<std::pair<std::vector<E>, std::vector<E>>> data = {
            {{{0, 3}, {1, 2}}, {{2, 3}}},                          // signed path, ends opposite middle
            {{{0, 1}, {0, 2}}, {{0, 3}}},                          // star with one opposite leg
            {{{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {}},                // one-sign 4-cycle
            {{{0, 3}, {0, 1}, {1, 2}}, {{2, 3}}},                  // 4-cycle, one edge opposite
            {{{0, 3}, {1, 3}, {1, 2}}, {{2, 3}}},                  // triangle + pendant, mixed
            {{{1, 3}, {2, 3}}, {{1, 2}, {0, 3}}},                  // triangle + opposite pendant
            {{{0, 3}, {1, 2}}, {{0, 1}, {2, 3}}},                  // alternating 4-cycle
            {{{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {{0, 2}}},          // diamond, opposite diagonal
            {{{0, 1}, {1, 2}, {2, 3}}, {{0, 2}, {0, 3}}},          // diamond, mixed rim
            {{{0, 3}, {0, 2}, {1, 2}}, {{0, 1}, {2, 3}}},          // diamond, alternating rim
            {{{0, 3}, {1, 3}, {1, 2}}, {{0, 1}, {0, 2}, {2, 3}}},  // two opposite spanning paths
            {{{0, 1}, {1, 3}, {2, 3}, {0, 2}}, {{1, 2}, {0, 3}}},  // 4-cycle + opposite diagonals
        };
        std::vector<SignedGraph> graphs;
        graphs.reserve(data.size());
        for (const auto& [plus, minus] : data) {
            graphs.push_back(SignedGraph::create(4, plus, minus));
        }
        return graphs;
    }();
    return catalog;
}

std::vector<std::int8_t> canonical_form(const SignedGraph& g, bool allow_sign_swap) {
    const int n = g.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::int8_t> best;
    std::vector<std::int8_t> candidate(static_cast<std::size_t>(n) * (n - 1) / 2);
    do {
        for (int swap = 0; swap < (allow_sign_swap ? 2 : 1); ++swap) {
            std::size_t pos = 0;
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    int s = g.sign(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
                    if (swap) s = -s;
                    candidate[pos++] = static_cast<std::int8_t>(s);
                }
            }
            if (best.empty() || candidate < best) best = candidate;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool signed_isomorphic(const SignedGraph& a, const SignedGraph& b, bool allow_sign_swap) {
    if (a.vertex_count() != b.vertex_count()) return false;
    return canonical_form(a, allow_sign_swap) == canonical_form(b, allow_sign_swap);
}

} // namespace braidfree
