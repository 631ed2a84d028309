#include "braidfree/json_io.hpp"

#include <fstream>

namespace braidfree {

namespace {

using nlohmann::json;

std::int64_t require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) {
        raise(errc::bad_input, where + " must be an integer");
    }
    return j.get<std::int64_t>();
}

const json& require_field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        raise(errc::bad_input, std::string("missing field \"") + name + "\"");
    }
    return j.at(name);
}

std::vector<std::pair<int, int>> read_edge_list(const json& j, const std::string& where) {
    if (!j.is_array()) raise(errc::bad_input, where + " must be an array");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const json& e = j[k];
        const std::string slot = where + "[" + std::to_string(k) + "]";
        if (!e.is_array() || e.size() != 2) {
            raise(errc::bad_input, slot + " must be a pair [i, j]");
        }
        edges.emplace_back(static_cast<int>(require_int(e[0], slot + "[0]")),
                           static_cast<int>(require_int(e[1], slot + "[1]")));
    }
    return edges;
}

} // namespace

MultiBraid multiplicity_from_json(const json& j) {
    const std::int64_t vertices = require_int(require_field(j, "vertices"), "\"vertices\"");
    const json& edges = require_field(j, "edges");
    if (!edges.is_array()) raise(errc::bad_input, "\"edges\" must be an array");
    std::vector<EdgeEntry> entries;
    entries.reserve(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const json& e = edges[k];
        const std::string slot = "edges[" + std::to_string(k) + "]";
        if (!e.is_array() || e.size() != 3) {
            raise(errc::bad_input, slot + " must be a triple [i, j, m]");
        }
        EdgeEntry entry{static_cast<int>(require_int(e[0], slot + "[0]")),
                        static_cast<int>(require_int(e[1], slot + "[1]")),
                        require_int(e[2], slot + "[2]")};
        if (entry.i >= entry.j) {
            raise(errc::bad_input, slot + " must satisfy i < j");
        }
        entries.push_back(entry);
    }
    return MultiBraid::from_edges(static_cast<int>(vertices), entries);
}

json multiplicity_to_json(const MultiBraid& m) {
    json edges = json::array();
    for (const EdgeEntry& e : m.edges()) {
        edges.push_back({e.i, e.j, e.m});
    }
    return {{"vertices", m.vertex_count()}, {"edges", std::move(edges)}};
}

SignedGraph signed_graph_from_json(const json& j) {
    const std::int64_t vertices = require_int(require_field(j, "vertices"), "\"vertices\"");
    const auto plus = read_edge_list(require_field(j, "plus"), "plus");
    const auto minus = read_edge_list(require_field(j, "minus"), "minus");
    return SignedGraph::create(static_cast<int>(vertices), plus, minus);
}

json signed_graph_to_json(const SignedGraph& g) {
    json plus = json::array(), minus = json::array();
    for (auto [i, j] : g.plus_edges()) plus.push_back({i, j});
    for (auto [i, j] : g.minus_edges()) minus.push_back({i, j});
    return {{"vertices", g.vertex_count()}, {"plus", std::move(plus)}, {"minus", std::move(minus)}};
}

AnnDecomposition decomposition_from_json(const json& j) {
    const json& offsets = require_field(j, "n");
    if (!offsets.is_array() || offsets.empty()) {
        raise(errc::bad_input, "\"n\" must be a non-empty array");
    }
    AnnDecomposition d = make_empty_decomposition(static_cast<int>(offsets.size()));
    for (std::size_t k = 0; k < offsets.size(); ++k) {
        d.n[k] = require_int(offsets[k], "n[" + std::to_string(k) + "]");
    }
    const json& eps = require_field(j, "eps");
    if (!eps.is_array()) raise(errc::bad_input, "\"eps\" must be an array");
    for (std::size_t k = 0; k < eps.size(); ++k) {
        const json& e = eps[k];
        const std::string slot = "eps[" + std::to_string(k) + "]";
        if (!e.is_array() || e.size() != 3) {
            raise(errc::bad_input, slot + " must be a triple [i, j, e]");
        }
        const int i = static_cast<int>(require_int(e[0], slot + "[0]"));
        const int jj = static_cast<int>(require_int(e[1], slot + "[1]"));
        const std::int64_t value = require_int(e[2], slot + "[2]");
        if (value < -1 || value > 1) {
            raise(errc::bad_input, slot + " must lie in {-1, 0, 1}");
        }
        if (i < 0 || jj < 0 || i >= d.vertex_count() || jj >= d.vertex_count() || i == jj) {
            raise(errc::index_out_of_range, slot);
        }
        d.set_eps(i, jj, static_cast<int>(value));
    }
    return d;
}

json decomposition_to_json(const AnnDecomposition& d) {
    json eps = json::array();
    for (int i = 0; i < d.vertex_count(); ++i) {
        for (int j = i + 1; j < d.vertex_count(); ++j) {
            const int e = d.eps_at(i, j);
            if (e != 0) eps.push_back({i, j, e});
        }
    }
    return {{"n", d.n}, {"eps", std::move(eps)}};
}

json elimination_certificate_to_json(const EliminationCertificate& c) {
    json j;
    j["eliminable"] = c.eliminable();
    if (c.ordering) j["ordering"] = *c.ordering;
    if (c.obstruction) {
        j["obstruction"] = {{"kind", obstruction_kind_name(c.obstruction->kind)},
                            {"vertices", c.obstruction->vertices},
                            {"sigma", c.obstruction->sigma}};
    }
    return j;
}

json certificate_to_json(const Certificate& c) {
    json j;
    if (std::holds_alternative<CertNone>(c)) {
        j["kind"] = "none";
    } else if (std::holds_alternative<CertRankAtMostTwo>(c)) {
        j["kind"] = "rank_at_most_two";
    } else if (const auto* pass = std::get_if<CertBalancedPass>(&c)) {
        j["kind"] = "balanced_criterion_pass";
        j["strengthened"] = pass->strengthened;
    } else if (const auto* ann = std::get_if<CertAnnEliminable>(&c)) {
        j["kind"] = "ann_eliminable";
        j["decomposition"] = decomposition_to_json(ann->decomposition);
        j["ordering"] = ann->ordering;
    } else if (const auto* witness = std::get_if<CertWitness>(&c)) {
        j["kind"] = "witness_subset";
        j["subset"] = witness->witness.u;
        j["dv"] = witness->witness.dv;
        j["q"] = witness->witness.q;
        j["bound"] = witness->witness.bound;
    } else if (const auto* ob = std::get_if<CertObstruction>(&c)) {
        j["kind"] = "obstruction";
        j["obstruction"] = {{"kind", obstruction_kind_name(ob->obstruction.kind)},
                            {"vertices", ob->obstruction.vertices},
                            {"sigma", ob->obstruction.sigma}};
    }
    return j;
}

json verdict_to_json(const FreenessVerdict& v) {
    json j;
    j["status"] = status_name(v.status);
    j["reduction"] = v.reduction_chain;
    j["core"] = v.core_labels;
    j["certificate"] = certificate_to_json(v.certificate);
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        raise(errc::bad_input, "cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        raise(errc::bad_input, path + ": " + e.what());
    }
}

} // namespace braidfree
