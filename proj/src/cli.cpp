#include "braidfree/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "braidfree/json_io.hpp"
#include "braidfree/verify.hpp"

namespace braidfree::cli {

namespace {

std::string subset_text(const std::vector<int>& vs) {
    std::string text = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) text += ",";
        text += std::to_string(vs[i]);
    }
    return text + "}";
}

void print_verdict(const FreenessVerdict& v, std::ostream& out) {
    out << "status: " << status_name(v.status) << "\n";
    if (!v.reduction_chain.empty()) {
        out << "eliminated free vertices: " << subset_text(v.reduction_chain)
            << " (core " << subset_text(v.core_labels) << ")\n";
    }
    if (std::holds_alternative<CertRankAtMostTwo>(v.certificate)) {
        out << "certificate: core has rank at most two\n";
    } else if (const auto* pass = std::get_if<CertBalancedPass>(&v.certificate)) {
        out << "certificate: every subset satisfies the deviation bound"
            << (pass->strengthened ? " (strengthened)" : "") << "\n";
    } else if (const auto* ann = std::get_if<CertAnnEliminable>(&v.certificate)) {
        out << "certificate: decomposition with eliminable residual graph\n";
        out << "  n =";
        for (std::int64_t x : ann->decomposition.n) out << " " << x;
        out << "\n  ordering =";
        for (int x : ann->ordering) out << " " << x;
        out << "\n";
    } else if (const auto* w = std::get_if<CertWitness>(&v.certificate)) {
        out << "witness: U=" << subset_text(w->witness.u) << ": DV=" << w->witness.dv << " > "
            << "bound=" << w->witness.bound << " (q=" << w->witness.q << ")\n";
    }
    if (!v.note.empty()) out << "note: " << v.note << "\n";
}

int exit_code_for(Status s) {
    switch (s) {
    case Status::Free: return kExitPass;
    case Status::NotFree: return kExitFail;
    case Status::Unknown: return kExitUnknown;
    }
    return kExitInternal;
}

void print_report(const SweepReport& report, bool as_json, std::ostream& out) {
    if (as_json) {
        for (const Violation& v : report.violations) {
            nlohmann::json line = v.data;
            line["violation"] = v.kind;
            out << line.dump() << "\n";
        }
        out << report.summary().dump() << "\n";
        return;
    }
    for (const Violation& v : report.violations) {
        out << "violation: " << v.kind << " " << v.data.dump() << "\n";
    }
    for (const std::string& note : report.notes) {
        out << "note: " << note << "\n";
    }
    out << report.suite << ": " << (report.ok() ? "pass" : "FAIL") << " (" << report.instances
        << " instances, " << report.violations.size() << " violations, " << report.elapsed_seconds
        << "s)\n";
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact freeness decision engine for multi-braid arrangements"};
    app.require_subcommand(1);

    std::string file;
    bool strengthened = false;
    bool as_json = false;

    auto* check = app.add_subcommand("check", "Decide freeness of a multiplicity file");
    check->add_option("file", file, "multiplicity JSON")->required();
    check->add_flag("--strengthened", strengthened, "use the sharper remainder bound");
    check->add_flag("--json", as_json, "machine-readable output");

    auto* decompose = app.add_subcommand("decompose", "Find an offsets-plus-signs decomposition");
    decompose->add_option("file", file, "multiplicity JSON")->required();
    decompose->add_flag("--json", as_json);

    auto* eliminable = app.add_subcommand("eliminable", "Test signed-eliminability of a signed graph");
    eliminable->add_option("file", file, "signed graph JSON")->required();
    eliminable->add_flag("--json", as_json);

    auto* reduce = app.add_subcommand("reduce", "Eliminate free vertices down to a core");
    reduce->add_option("file", file, "multiplicity JSON")->required();
    reduce->add_flag("--json", as_json);

    int ell = 3;
    std::int64_t max_m = 3;
    auto* enumerate = app.add_subcommand("enumerate", "Stream the balanced cone up to bounds");
    enumerate->add_option("--ell", ell, "rank (vertices minus one)")->required();
    enumerate->add_option("--max-m", max_m, "largest entry")->required();

    std::string suite;
    std::int64_t samples = -1;
    std::uint64_t seed = 1;
    int ell_min = 3, ell_max = 10;
    std::string dump_path;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "sos | tables | catalog | equivalence")
        ->required()
        ->check(CLI::IsMember({"sos", "tables", "catalog", "equivalence"}));
    verify->add_option("--ell", ell, "rank for sos/equivalence");
    verify->add_option("--max-m", max_m, "largest entry for sos/equivalence");
    verify->add_option("--samples", samples, "sample count (sos); exhaustive when omitted");
    verify->add_option("--seed", seed, "sampler seed");
    verify->add_option("--ell-min", ell_min, "smallest rank for tables");
    verify->add_option("--ell-max", ell_max, "largest rank for tables");
    verify->add_option("--dump", dump_path, "counterexample dump path (equivalence)");
    verify->add_flag("--json", as_json);

    std::string out_path;
    auto* conjecture = app.add_subcommand("conjecture", "Catalog pipeline-Unknown instances");
    conjecture->add_option("--ell", ell, "rank")->required();
    conjecture->add_option("--max-m", max_m, "largest entry")->required();
    conjecture->add_option("--out", out_path, "output JSONL path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream message;
        const int code = app.exit(e, message, message);
        (code == 0 ? out : err) << message.str();
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (check->parsed()) {
            const MultiBraid m = multiplicity_from_json(load_json_file(file));
            const FreenessVerdict verdict = decide(m, strengthened);
            if (as_json) {
                out << verdict_to_json(verdict).dump() << "\n";
            } else {
                print_verdict(verdict, out);
            }
            return exit_code_for(verdict.status);
        }
        if (decompose->parsed()) {
            const MultiBraid m = multiplicity_from_json(load_json_file(file));
            const AnnResult result = ann_decompose(m);
            if (result.ok()) {
                if (as_json) {
                    out << decomposition_to_json(*result.decomposition).dump() << "\n";
                } else {
                    out << "decomposable\n" << decomposition_to_json(*result.decomposition).dump(2)
                        << "\n";
                }
                return kExitPass;
            }
            if (as_json) {
                out << nlohmann::json{{"decomposable", false}, {"reason", result.diagnostic}}.dump()
                    << "\n";
            } else {
                out << "not decomposable: " << result.diagnostic << "\n";
            }
            return kExitFail;
        }
        if (eliminable->parsed()) {
            const SignedGraph g = signed_graph_from_json(load_json_file(file));
            const EliminationCertificate cert = is_eliminable(g);
            if (as_json) {
                out << elimination_certificate_to_json(cert).dump() << "\n";
            } else if (cert.eliminable()) {
                out << "eliminable, ordering:";
                for (int v : *cert.ordering) out << " " << v;
                out << "\n";
            } else {
                out << "not eliminable: " << obstruction_kind_name(cert.obstruction->kind)
                    << " on " << subset_text(cert.obstruction->vertices) << "\n";
            }
            return cert.eliminable() ? kExitPass : kExitFail;
        }
        if (reduce->parsed()) {
            const MultiBraid m = multiplicity_from_json(load_json_file(file));
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
            if (as_json) {
                out << nlohmann::json{{"chain", chain},
                                      {"core_labels", labels},
                                      {"core", multiplicity_to_json(current)}}
                           .dump()
                    << "\n";
            } else {
                out << "eliminated: " << subset_text(chain) << "\n";
                out << "core " << subset_text(labels) << ": " << multiplicity_to_json(current).dump()
                    << "\n";
            }
            return kExitPass;
        }
        if (enumerate->parsed()) {
            for_each_multiplicity(ell, max_m, /*balanced_only=*/true, [&](const MultiBraid& m) {
                out << multiplicity_to_json(m).dump() << "\n";
                return true;
            });
            return kExitPass;
        }
        if (verify->parsed()) {
            SweepConfig cfg;
            cfg.ell = ell;
            cfg.max_mult = max_m;
            cfg.seed = seed;
            if (samples >= 0) cfg.sample_count = samples;
            SweepReport report;
            if (suite == "sos") {
                report = verify_sos_identity(cfg);
            } else if (suite == "tables") {
                report = verify_structure_tables(ell_min, ell_max);
            } else if (suite == "catalog") {
                report = verify_table1_catalog();
            } else {
                report = verify_equivalence(cfg, dump_path);
            }
            print_report(report, as_json, out);
            return report.ok() ? kExitPass : kExitFail;
        }
        if (conjecture->parsed()) {
            SweepConfig cfg;
            cfg.ell = ell;
            cfg.max_mult = max_m;
            const ConjectureReport report = conjecture_scan(cfg);
            std::ofstream sink(out_path);
            if (!sink) {
                err << "cannot open " << out_path << "\n";
                return kExitBadInput;
            }
            for (const ConjectureEntry& entry : report.unknown) {
                sink << nlohmann::json{{"multiplicity", multiplicity_to_json(entry.instance)},
                                       {"orbit_size", entry.orbit_size},
                                       {"diagnostics", entry.diagnostics}}
                            .dump()
                     << "\n";
            }
            nlohmann::json summary = report.sweep.summary();
            summary["free"] = report.counts[0];
            summary["not_free"] = report.counts[1];
            summary["unknown"] = report.counts[2];
            summary["unknown_classes"] = report.unknown.size();
            out << summary.dump() << "\n";
            return report.sweep.ok() ? kExitPass : kExitFail;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        switch (e.code()) {
        case errc::bad_input:
        case errc::missing_pair:
        case errc::duplicate_pair:
        case errc::non_positive_multiplicity:
        case errc::index_out_of_range:
            return kExitBadInput;
        default:
            return kExitInternal;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

} // namespace braidfree::cli
