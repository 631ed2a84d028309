#include "braidfree/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <thread>

#include "braidfree/combinatorics.hpp"
#include "braidfree/json_io.hpp"
#include "braidfree/mixed_products.hpp"

namespace braidfree {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("BRAIDFREE_THREADS")) {
        const int parsed = std::atoi(env);
        if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, count) into contiguous chunks, runs them on `threads` workers,
// and hands each chunk's results back in chunk order so the aggregate is
// schedule-independent.
void parallel_chunks(std::int64_t count, int threads,
                     const std::function<void(std::int64_t, std::int64_t, std::size_t)>& work,
                     std::size_t chunk_count) {
    if (count <= 0) return;
    chunk_count = std::max<std::size_t>(1, std::min<std::size_t>(chunk_count,
                                                                 static_cast<std::size_t>(count)));
    const std::int64_t chunk_size = (count + static_cast<std::int64_t>(chunk_count) - 1) /
                                    static_cast<std::int64_t>(chunk_count);
    std::atomic<std::size_t> next{0};
    auto runner = [&] {
        while (true) {
            const std::size_t chunk = next.fetch_add(1);
            if (chunk >= chunk_count) return;
            const std::int64_t begin = static_cast<std::int64_t>(chunk) * chunk_size;
            const std::int64_t end = std::min(count, begin + chunk_size);
            if (begin < end) work(begin, end, chunk);
        }
    };
    const int worker_count = std::max(1, std::min<int>(threads, static_cast<int>(chunk_count)));
    if (worker_count == 1) {
        runner();
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(worker_count));
    for (int t = 0; t < worker_count; ++t) workers.emplace_back(runner);
    for (auto& w : workers) w.join();
}

struct EdgeOrder {
    std::vector<std::pair<int, int>> pairs; // lexicographic (i, j)
};

EdgeOrder edge_order(int vertex_count) {
    EdgeOrder order;
    for (int i = 0; i < vertex_count; ++i)
        for (int j = i + 1; j < vertex_count; ++j) order.pairs.emplace_back(i, j);
    return order;
}

} // namespace

nlohmann::json SweepReport::summary() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["instances"] = instances;
    j["violations"] = violations.size();
    j["elapsed_seconds"] = elapsed_seconds;
    j["ok"] = ok();
    if (!notes.empty()) j["notes"] = notes;
    return j;
}

bool for_each_multiplicity(int ell, std::int64_t max_mult, bool balanced_only,
                           const std::function<bool(const MultiBraid&)>& visit) {
    const int n = ell + 1;
    const EdgeOrder order = edge_order(n);
    const std::size_t edge_count = order.pairs.size();
    std::vector<std::int64_t> values(edge_count, 1);
    // Triangle checks become available once the lexicographically last edge
    // of the triangle is assigned: for edge (i, j) these are the triples
    // {a, i, j} with a < i.
    std::vector<EdgeEntry> entries(edge_count);
    auto value_at = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        return values[static_cast<std::size_t>(a) * (2 * n - a - 1) / 2 +
                      static_cast<std::size_t>(b - a - 1)];
    };
    std::function<bool(std::size_t)> assign = [&](std::size_t depth) -> bool {
        if (depth == edge_count) {
            for (std::size_t e = 0; e < edge_count; ++e) {
                entries[e] = {order.pairs[e].first, order.pairs[e].second, values[e]};
            }
            return visit(MultiBraid::from_edges(n, entries));
        }
        const auto [i, j] = order.pairs[depth];
        for (std::int64_t v = 1; v <= max_mult; ++v) {
            values[depth] = v;
            bool feasible = true;
            if (balanced_only) {
                for (int a = 0; a < i && feasible; ++a) {
                    const std::int64_t ai = value_at(a, i);
                    const std::int64_t aj = value_at(a, j);
                    feasible = aj <= ai + v + 1 && ai <= aj + v + 1 && v <= ai + aj + 1;
                }
            }
            if (!feasible) continue;
            if (!assign(depth + 1)) return false;
        }
        return true;
    };
    return assign(0);
}

BalancedSampler::BalancedSampler(int ell, std::int64_t max_mult, std::uint64_t seed)
    : ell_(ell), max_mult_(max_mult), state_(seed) {
    if (max_mult_ < 1) raise(errc::bad_input, "sampler needs max_mult >= 1");
}

MultiBraid BalancedSampler::next() {
    std::mt19937_64 rng(state_);
    state_ = rng(); // advance the stream deterministically per draw
    const int n = ell_ + 1;

    // Start from an offsets-plus-signs point (always balanced), then walk.
    const std::int64_t cap = std::max<std::int64_t>(1, max_mult_ / 2 - 1);
    std::uniform_int_distribution<std::int64_t> offset_dist(1, cap);
    std::uniform_int_distribution<int> sign_dist(-1, 1);
    std::vector<std::int64_t> offsets(static_cast<std::size_t>(n));
    for (auto& v : offsets) v = offset_dist(rng);
    std::vector<EdgeEntry> entries;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::int64_t m = offsets[static_cast<std::size_t>(i)] +
                             offsets[static_cast<std::size_t>(j)] + sign_dist(rng);
            m = std::clamp<std::int64_t>(m, 1, max_mult_);
            entries.push_back({i, j, m});
        }
    }

    std::uniform_int_distribution<std::size_t> edge_dist(0, entries.size() - 1);
    std::uniform_int_distribution<int> step_dist(0, 1);
    const int steps = 8 * n * n;
    for (int s = 0; s < steps; ++s) {
        const std::size_t e = edge_dist(rng);
        const std::int64_t delta = step_dist(rng) ? 1 : -1;
        const std::int64_t proposed = entries[e].m + delta;
        if (proposed < 1 || proposed > max_mult_) continue;
        const std::int64_t saved = entries[e].m;
        entries[e].m = proposed;
        // Stay inside the cone: only triangles through this edge can break.
        const int i = entries[e].i, j = entries[e].j;
        auto lookup = [&](int a, int b) {
            if (a > b) std::swap(a, b);
            for (const auto& entry : entries) {
                if (entry.i == a && entry.j == b) return entry.m;
            }
            return std::int64_t{0};
        };
        bool balanced = true;
        for (int k = 0; k < n && balanced; ++k) {
            if (k == i || k == j) continue;
            const std::int64_t ik = lookup(i, k), jk = lookup(j, k);
            balanced = proposed <= ik + jk + 1 && ik <= proposed + jk + 1 && jk <= proposed + ik + 1;
        }
        if (!balanced) entries[e].m = saved;
    }
    return MultiBraid::from_edges(n, entries);
}

std::vector<std::int64_t> canonical_multiplicity_key(const MultiBraid& m) {
    const int n = m.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::int64_t> best;
    std::vector<std::int64_t> candidate(static_cast<std::size_t>(n) * (n - 1) / 2);
    do {
        std::size_t pos = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                candidate[pos++] =
                    m.at(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
            }
        }
        if (best.empty() || candidate < best) best = candidate;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

namespace {

double box_size(int ell, std::int64_t max_mult) {
    const int n = ell + 1;
    double total = 1.0;
    for (int e = 0; e < n * (n - 1) / 2; ++e) total *= static_cast<double>(max_mult);
    return total;
}

void check_budget(const SweepConfig& cfg) {
    if (!cfg.sample_count && box_size(cfg.ell, cfg.max_mult) > static_cast<double>(cfg.budget)) {
        raise(errc::budget_exceeded, "exhaustive enumeration box exceeds the configured budget; "
                                     "set a sample count");
    }
}

} // namespace

SweepReport verify_sos_identity(const SweepConfig& cfg) {
    const auto start = clock_type::now();
    SweepReport report;
    report.suite = "sos";
    auto check = [&](const MultiBraid& m) {
        ++report.instances;
        const MixedProductReport mp = mixed_products(m);
        if (mp.sos_residual != 0 || sos_residual(m) != 0) {
            report.violations.push_back(
                {"sos_residual_nonzero",
                 {{"multiplicity", multiplicity_to_json(m)}, {"residual", mp.sos_residual}}});
        }
        if (mp.most_balanced_gmp2 > mp.gmp2_bound) {
            report.violations.push_back(
                {"balanced_bound_order", {{"multiplicity", multiplicity_to_json(m)}}});
        }
        return report.violations.size() < 32;
    };
    if (cfg.sample_count) {
        BalancedSampler sampler(cfg.ell, cfg.max_mult, cfg.seed);
        for (std::int64_t i = 0; i < *cfg.sample_count; ++i) {
            if (!check(sampler.next())) break;
        }
    } else {
        check_budget(cfg);
        for_each_multiplicity(cfg.ell, cfg.max_mult, /*balanced_only=*/true, check);
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

namespace {

struct TableRow {
    const char* name;
    std::vector<std::pair<std::pair<int, int>, int>> edges; // ((i, j), sign)
    std::function<std::int64_t(std::int64_t)> count;        // of ell, before clamping
    std::int64_t q;
    std::int64_t dv;
};

SignedGraph row_graph(const TableRow& row) {
    std::vector<std::pair<int, int>> plus, minus;
    for (const auto& [edge, sign] : row.edges) {
        (sign > 0 ? plus : minus).push_back(edge);
    }
    return SignedGraph::create(4, plus, minus);
}

std::vector<TableRow> cycle_rows() {
    using P = std::pair<int, int>;
    return {
        // The published count for this row does not sum with the others to
        // C(l+1, 4); the independent-set count below does and matches the
        // enumeration at every rank.
        {"empty", {}, [](std::int64_t l) { return binomial(l - 3, 4) + binomial(l - 4, 3); }, 0, 0},
        {"edge", {{P{0, 1}, 1}}, [](std::int64_t l) { return (l + 1) * binomial(l - 4, 2); }, 2, 2},
        {"two disjoint edges",
         {{P{0, 1}, 1}, {P{2, 3}, 1}},
         [](std::int64_t l) { return (l + 1) * (l - 4) / 2; },
         4,
         8},
        {"path of two", {{P{0, 1}, 1}, {P{1, 2}, 1}},
         [](std::int64_t l) { return (l + 1) * (l - 4); }, 2, 2},
        {"path of three", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{2, 3}, 1}},
         [](std::int64_t l) { return l + 1; }, 2, 6},
    };
}

std::vector<TableRow> mountain_rows() {
    using P = std::pair<int, int>;
    return {
        {"empty", {}, [](std::int64_t l) { return binomial(l - 3, 4); }, 0, 0},
        {"path edge", {{P{0, 1}, -1}}, [](std::int64_t l) { return 3 * binomial(l - 3, 3); }, 2, 2},
        {"path of two", {{P{0, 1}, -1}, {P{1, 2}, -1}},
         [](std::int64_t l) { return 2 * binomial(l - 3, 2); }, 2, 2},
        {"two disjoint path edges", {{P{0, 1}, -1}, {P{2, 3}, -1}},
         [](std::int64_t l) { return 2 * l - 9 + binomial(l - 5, 2); }, 4, 8},
        {"path of three", {{P{0, 1}, -1}, {P{1, 2}, -1}, {P{2, 3}, -1}},
         [](std::int64_t l) { return l - 3; }, 2, 6},
        {"apex edge", {{P{0, 1}, 1}}, [](std::int64_t l) { return l - 4; }, 2, 2},
        {"mixed path of two", {{P{0, 1}, 1}, {P{1, 2}, -1}}, [](std::int64_t) { return 2; }, 2, 6},
        {"apex path of two", {{P{0, 1}, 1}, {P{1, 2}, 1}},
         [](std::int64_t l) { return 2 * binomial(l - 4, 2); }, 2, 2},
        {"mixed triangle", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{0, 2}, -1}},
         [](std::int64_t l) { return 2 * (l - 4); }, 4, 8},
        {"apex path plus tail", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{2, 3}, -1}},
         [](std::int64_t l) { return 2 * (l - 4); }, 2, 2},
        {"mixed triangle plus tail", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{0, 2}, -1}, {P{2, 3}, -1}},
         [](std::int64_t) { return 2; }, 2, 6},
        {"apex star", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{1, 3}, 1}},
         [](std::int64_t l) { return binomial(l - 4, 3); }, 0, 0},
        {"apex star plus edge", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{1, 3}, 1}, {P{2, 3}, -1}},
         [](std::int64_t l) { return 2 * binomial(l - 4, 2); }, 2, 2},
        {"apex star plus path", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{1, 3}, 1}, {P{2, 3}, -1}, {P{0, 3}, -1}},
         [](std::int64_t l) { return l - 4; }, 2, 2},
    };
}

std::vector<TableRow> hill_rows() {
    using P = std::pair<int, int>;
    return {
        {"empty", {}, [](std::int64_t l) { return binomial(l - 4, 4); }, 0, 0},
        {"path edge", {{P{0, 1}, -1}}, [](std::int64_t l) { return 3 * binomial(l - 4, 3); }, 2, 2},
        {"path of two", {{P{0, 1}, -1}, {P{1, 2}, -1}},
         [](std::int64_t l) { return 2 * binomial(l - 4, 2); }, 2, 2},
        {"two disjoint path edges", {{P{0, 1}, -1}, {P{2, 3}, -1}},
         [](std::int64_t l) { return 2 * l - 11 + binomial(l - 6, 2); }, 4, 8},
        {"path of three", {{P{0, 1}, -1}, {P{1, 2}, -1}, {P{2, 3}, -1}},
         [](std::int64_t l) { return l - 4; }, 2, 6},
        {"apex path of two", {{P{0, 1}, 1}, {P{1, 2}, 1}},
         [](std::int64_t l) { return 2 * binomial(l - 4, 2); }, 2, 2},
        {"mixed triangle", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{0, 2}, -1}},
         [](std::int64_t l) { return 2 * (l - 4); }, 4, 8},
        {"apex path plus tail", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{2, 3}, -1}},
         [](std::int64_t l) { return 2 * (l - 4); }, 2, 2},
        {"mixed triangle plus tail", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{0, 2}, -1}, {P{2, 3}, -1}},
         [](std::int64_t) { return 2; }, 2, 6},
        {"apex star", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{1, 3}, 1}},
         [](std::int64_t l) { return 2 * binomial(l - 4, 3); }, 0, 0},
        {"apex star plus edge", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{1, 3}, 1}, {P{2, 3}, -1}},
         [](std::int64_t l) { return 4 * binomial(l - 4, 2); }, 2, 2},
        {"apex star plus path", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{1, 3}, 1}, {P{2, 3}, -1}, {P{0, 3}, -1}},
         [](std::int64_t l) { return 2 * (l - 4); }, 2, 2},
        {"apex path of three", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{2, 3}, 1}},
         [](std::int64_t) { return 1; }, 2, 6},
        {"triangle plus pendant", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{0, 2}, 1}, {P{1, 3}, 1}},
         [](std::int64_t l) { return 2 * (l - 4); }, 2, 2},
        {"triangle plus pendant plus edge",
         {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{0, 2}, 1}, {P{1, 3}, 1}, {P{2, 3}, -1}},
         [](std::int64_t) { return 2; }, 2, 6},
        {"diamond", {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{0, 2}, 1}, {P{1, 3}, 1}, {P{2, 3}, 1}},
         [](std::int64_t l) { return binomial(l - 4, 2); }, 2, 2},
        {"full four with one path edge",
         {{P{0, 1}, 1}, {P{1, 2}, 1}, {P{0, 2}, 1}, {P{1, 3}, 1}, {P{2, 3}, 1}, {P{0, 3}, -1}},
         [](std::int64_t l) { return l - 4; }, 4, 8},
    };
}

struct StructureSpec {
    const char* name;
    int min_ell;
    SignedGraph (*make)(int, int);
    std::vector<TableRow> (*rows)();
};

void check_structure(SweepReport& report, const StructureSpec& spec, int ell) {
    const SignedGraph g = spec.make(ell, +1);
    auto fail = [&](const std::string& kind, nlohmann::json data) {
        data["structure"] = spec.name;
        data["ell"] = ell;
        report.violations.push_back({kind, std::move(data)});
    };

    // Closed-form totals and the slack identity.
    const SignedStats stats = signed_stats(g);
    const std::int64_t l = ell;
    const std::int64_t expect_q = l * l - 2 * l - 3;
    const std::int64_t expect_dv = l * l * l - 2 * l * l - l + 2;
    if (stats.q != expect_q || stats.dv != expect_dv) {
        fail("structure_totals", {{"q", stats.q}, {"dv", stats.dv}});
        return;
    }
    if (stats.dv != stats.q * l + 2 * (l + 1)) {
        fail("slack_identity", {{"q", stats.q}, {"dv", stats.dv}});
    }

    // Recompose both totals from four-vertex subsets: the deviation adds up
    // directly, the odd-triple count once per containing subset, i.e. l - 2
    // times per triple.
    std::int64_t dv_sum = 0, q_sum = 0;
    std::map<std::vector<std::int8_t>, std::pair<std::int64_t, SignedGraph>> classes;
    for_each_combination(ell + 1, 4, [&](std::span<const int> subset) {
        const SignedGraph h = g.induced(subset);
        const SignedStats hs = signed_stats(h);
        dv_sum += hs.dv;
        q_sum += hs.q;
        auto key = canonical_form(h, /*allow_sign_swap=*/false);
        auto [it, inserted] = classes.try_emplace(std::move(key), std::pair{std::int64_t{0}, h});
        ++it->second.first;
        return true;
    });
    if (dv_sum != stats.dv) fail("subset_dv_sum", {{"sum", dv_sum}});
    if (q_sum % (l - 2) != 0) fail("subset_q_divisibility", {{"sum", q_sum}});
    if (q_sum / (l - 2) != stats.q) fail("subset_q_sum", {{"sum", q_sum}});

    // Row-by-row comparison. At ell = 3 the one four-subset is the structure
    // itself, a type outside the row lists, so only the totals apply there.
    if (ell < 4) {
        report.notes.push_back(std::string(spec.name) +
                               " ell=3: totals verified; rows apply from ell=4");
        return;
    }
    std::int64_t count_sum = 0;
    const std::vector<TableRow> rows = spec.rows();
    std::map<std::vector<std::int8_t>, std::pair<std::int64_t, const TableRow*>> expected;
    for (const TableRow& row : rows) {
        const SignedGraph pattern = row_graph(row);
        const SignedStats ps = signed_stats(pattern);
        if (ps.q != row.q || ps.dv != row.dv) {
            fail("row_statistics", {{"row", row.name}, {"q", ps.q}, {"dv", ps.dv}});
        }
        const std::int64_t count = std::max<std::int64_t>(0, row.count(ell));
        count_sum += count;
        if (count > 0) {
            expected.emplace(canonical_form(pattern, false), std::pair{count, &row});
        }
    }
    if (count_sum != binomial(ell + 1, 4)) {
        fail("row_count_total", {{"sum", count_sum}});
    }
    for (const auto& [key, found] : classes) {
        const auto it = expected.find(key);
        if (it == expected.end()) {
            fail("unexpected_subgraph_class",
                 {{"count", found.first},
                  {"graph", signed_graph_to_json(found.second)}});
        } else if (it->second.first != found.first) {
            fail("row_count_mismatch", {{"row", it->second.second->name},
                                        {"expected", it->second.first},
                                        {"actual", found.first}});
        }
    }
    for (const auto& [key, row] : expected) {
        if (!classes.contains(key)) {
            fail("missing_subgraph_class", {{"row", row.second->name}, {"expected", row.first}});
        }
    }
}

} // namespace

SweepReport verify_structure_tables(int ell_min, int ell_max) {
    const auto start = clock_type::now();
    SweepReport report;
    report.suite = "tables";
    const StructureSpec specs[] = {
        {"cycle", 3, &make_sigma_cycle, &cycle_rows},
        {"mountain", 3, &make_mountain, &mountain_rows},
        {"hill", 4, &make_hill, &hill_rows},
    };
    for (const StructureSpec& spec : specs) {
        for (int ell = std::max(ell_min, spec.min_ell); ell <= ell_max; ++ell) {
            check_structure(report, spec, ell);
            ++report.instances;
        }
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

SweepReport verify_table1_catalog() {
    const auto start = clock_type::now();
    SweepReport report;
    report.suite = "catalog";

    std::map<std::vector<std::int8_t>, SignedGraph> non_eliminable;
    std::vector<std::int8_t> signs(6);
    for (int code = 0; code < 729; ++code) {
        int rest = code;
        for (int e = 0; e < 6; ++e) {
            signs[static_cast<std::size_t>(e)] = static_cast<std::int8_t>(rest % 3 - 1);
            rest /= 3;
        }
        const SignedGraph g = SignedGraph::from_signs(4, signs);
        ++report.instances;
        if (!is_eliminable_bruteforce(g).eliminable()) {
            non_eliminable.try_emplace(canonical_form(g, true), g);
        }
    }

    std::map<std::vector<std::int8_t>, SignedGraph> catalog_classes;
    for (const SignedGraph& g : non_eliminable_four_catalog()) {
        const auto [it, inserted] = catalog_classes.try_emplace(canonical_form(g, true), g);
        if (!inserted) {
            report.violations.push_back(
                {"catalog_duplicate_class", {{"graph", signed_graph_to_json(g)}}});
        }
        if (is_eliminable_bruteforce(g).eliminable()) {
            report.violations.push_back(
                {"catalog_member_eliminable", {{"graph", signed_graph_to_json(g)}}});
        }
        const SignedStats stats = signed_stats(g);
        if (stats.dv <= 3 * stats.q) {
            report.violations.push_back({"catalog_member_deviation_bound",
                                         {{"graph", signed_graph_to_json(g)},
                                          {"q", stats.q},
                                          {"dv", stats.dv}}});
        }
    }
    if (non_eliminable.size() != 12 || catalog_classes.size() != 12) {
        report.violations.push_back({"class_count",
                                     {{"brute_force", non_eliminable.size()},
                                      {"catalog", catalog_classes.size()}}});
    }
    for (const auto& [key, g] : non_eliminable) {
        if (!catalog_classes.contains(key)) {
            report.violations.push_back(
                {"class_missing_from_catalog", {{"graph", signed_graph_to_json(g)}}});
        }
    }
    for (const auto& [key, g] : catalog_classes) {
        if (!non_eliminable.contains(key)) {
            report.violations.push_back(
                {"catalog_class_eliminable", {{"graph", signed_graph_to_json(g)}}});
        }
    }
    if (report.ok()) {
        report.notes.push_back(std::to_string(non_eliminable.size()) +
                               " non-eliminable classes confirmed");
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

SweepReport verify_equivalence(const SweepConfig& cfg, const std::string& counterexample_path) {
    const auto start = clock_type::now();
    SweepReport report;
    report.suite = "equivalence";
    check_budget(cfg);

    std::vector<MultiBraid> instances;
    for_each_multiplicity(cfg.ell, cfg.max_mult, /*balanced_only=*/true,
                          [&](const MultiBraid& m) {
                              instances.push_back(m);
                              return true;
                          });
    report.instances = static_cast<std::int64_t>(instances.size());

    const int threads = resolve_threads(cfg.threads);
    const std::size_t chunk_count = static_cast<std::size_t>(threads) * 8;
    std::vector<std::vector<Violation>> per_chunk(chunk_count);
    parallel_chunks(
        static_cast<std::int64_t>(instances.size()), threads,
        [&](std::int64_t begin, std::int64_t end, std::size_t chunk) {
            for (std::int64_t idx = begin; idx < end; ++idx) {
                const MultiBraid& m = instances[static_cast<std::size_t>(idx)];
                const bool c2 = criterion2(m).pass;
                const bool c3 = criterion3(m).pass;
                if (c2 != c3) {
                    per_chunk[chunk].push_back({"criterion_disagreement",
                                                {{"multiplicity", multiplicity_to_json(m)},
                                                 {"criterion2", c2},
                                                 {"criterion3", c3}}});
                }
            }
        },
        chunk_count);
    for (auto& chunk : per_chunk) {
        report.violations.insert(report.violations.end(), chunk.begin(), chunk.end());
    }
    if (!report.violations.empty() && !counterexample_path.empty()) {
        std::ofstream out(counterexample_path);
        out << report.violations.front().data.dump(2) << "\n";
        report.notes.push_back("first counterexample written to " + counterexample_path);
    }
    report.elapsed_seconds = seconds_since(start);
    return report;
}

ConjectureReport conjecture_scan(const SweepConfig& cfg) {
    const auto start = clock_type::now();
    ConjectureReport result;
    result.sweep.suite = "conjecture";
    check_budget(cfg);

    std::map<std::vector<std::int64_t>, Status> orbit_status;
    std::map<std::vector<std::int64_t>, std::size_t> unknown_index;
    for_each_multiplicity(cfg.ell, cfg.max_mult, /*balanced_only=*/false, [&](const MultiBraid& m) {
        ++result.sweep.instances;
        const FreenessVerdict verdict = decide(m);
        result.counts[static_cast<int>(verdict.status)] += 1;
        if (!reverify(m, verdict)) {
            result.sweep.violations.push_back(
                {"certificate_reverification", {{"multiplicity", multiplicity_to_json(m)}}});
        }
        auto key = canonical_multiplicity_key(m);
        const auto [it, inserted] = orbit_status.try_emplace(key, verdict.status);
        if (!inserted && it->second != verdict.status) {
            result.sweep.violations.push_back(
                {"orbit_status_divergence", {{"multiplicity", multiplicity_to_json(m)}}});
        }
        if (verdict.status == Status::Unknown) {
            const auto found = unknown_index.find(key);
            if (found == unknown_index.end()) {
                unknown_index.emplace(std::move(key), result.unknown.size());
                result.unknown.push_back({m, 1, verdict.note});
            } else {
                ++result.unknown[found->second].orbit_size;
            }
        }
        return true;
    });
    result.sweep.elapsed_seconds = seconds_since(start);
    return result;
}

} // namespace braidfree
