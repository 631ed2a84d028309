#pragma once

#include <string>

#include <json.hpp>

#include "braidfree/ann.hpp"
#include "braidfree/freeness.hpp"
#include "braidfree/multi_braid.hpp"
#include "braidfree/signed_graph.hpp"

namespace braidfree {

// Multiplicity files: {"vertices": n, "edges": [[i, j, m], ...]} with all
// C(n,2) pairs exactly once, i < j, integer m >= 1. Anything else is rejected
// with a bad_input error naming the offending field.
MultiBraid multiplicity_from_json(const nlohmann::json& j);
nlohmann::json multiplicity_to_json(const MultiBraid& m);

// Signed graphs: {"vertices": n, "plus": [[i, j], ...], "minus": [[i, j], ...]}.
SignedGraph signed_graph_from_json(const nlohmann::json& j);
nlohmann::json signed_graph_to_json(const SignedGraph& g);

// Decompositions: {"n": [...], "eps": [[i, j, e], ...]} listing the nonzero
// eps entries; absent pairs read back as 0.
AnnDecomposition decomposition_from_json(const nlohmann::json& j);
nlohmann::json decomposition_to_json(const AnnDecomposition& d);

nlohmann::json verdict_to_json(const FreenessVerdict& v);
nlohmann::json certificate_to_json(const Certificate& c);
nlohmann::json elimination_certificate_to_json(const EliminationCertificate& c);

/// Parses a whole file, wrapping JSON syntax errors in bad_input with
/// location diagnostics.
nlohmann::json load_json_file(const std::string& path);

} // namespace braidfree
