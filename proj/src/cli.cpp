#include "surfwit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "surfwit/arrangement.hpp"
#include "surfwit/faces.hpp"
#include "surfwit/graph_io.hpp"
#include "surfwit/homology.hpp"
#include "surfwit/witness.hpp"

namespace surfwit {

namespace {

using Record = nlohmann::ordered_json;

std::string render(const Record& v) {
    if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) {
            if (!s.empty()) s += ' ';
            s += render(x);
        }
        return s.empty() ? "-" : s;
    }
    return v.dump();
}

// Text form "key value key value ..."; JSON form one object per line.
class Reporter {
public:
    Reporter(std::ostream& out, bool json) : out_(out), json_(json) {}

    void emit(const Record& r) {
        if (json_) {
            out_ << r.dump() << '\n';
            return;
        }
        std::string line;
        for (const auto& [k, v] : r.items()) {
            if (!line.empty()) line += ' ';
            line += k + ' ' + render(v);
        }
        out_ << line << '\n';
    }

private:
    std::ostream& out_;
    bool json_;
};

Record steps_record(const ProofStep& s) {
    return Record{{"step", s.rule},
                  {"colors", s.colors},
                  {"gen", std::to_string(s.genus_before) + "->" + std::to_string(s.genus_after)}};
}

std::vector<std::string> dart_names(const Circuit& c) {
    std::vector<std::string> out;
    for (const Dart d : c.darts) out.push_back(to_string(d));
    return out;
}

int cmd_validate(const RunConfig& cfg, Reporter& rep) {
    const GraphFile f = read_graph_file(cfg.input);
    if (!f.anchor) {
        rep.emit({{"valid", "graph"}, {"vertices", f.graph.vertex_count()}, {"edges", f.graph.edge_count()}});
        return kOk;
    }
    const Cluster c = f.cluster();
    if (auto r = validate_cluster(c); !r) {
        rep.emit({{"invalid", r.message}});
        return kNegative;
    }
    if (validate_arrangement(c)) {
        const Arrangement a(c);
        rep.emit({{"valid", "arrangement"}, {"circles", a.size()}, {"strong", is_strong(a)}});
    } else {
        rep.emit({{"valid", "cluster"}, {"members", c.member_colors().size()}});
    }
    return kOk;
}

int cmd_genus(const RunConfig& cfg, Reporter& rep) {
    const GraphFile f = read_graph_file(cfg.input);
    rep.emit({{"genus", genus_sum(f.graph)}});
    return kOk;
}

int cmd_faces(const RunConfig& cfg, Reporter& rep) {
    const GraphFile f = read_graph_file(cfg.input);
    std::vector<int> keep;
    for (int e = 0; e < f.graph.edge_count(); ++e) {
        if (std::find(cfg.keep.begin(), cfg.keep.end(), f.edge_color[static_cast<std::size_t>(e)]) != cfg.keep.end()) {
            keep.push_back(e);
        }
    }
    if (keep.empty() && !cfg.vertex) throw Error("kept colours have no edges; give --vertex");
    const FaceAnalysis fa = analyze_faces(f.graph, keep, keep.empty() ? cfg.vertex : std::nullopt);
    rep.emit({{"host-genus", fa.host_genus}, {"subgraph-genus", fa.subgraph_genus}, {"faces", fa.faces.size()}});
    for (std::size_t i = 0; i < fa.faces.size(); ++i) {
        const Face& face = fa.faces[i];
        rep.emit({{"face", i},
                  {"genus", face.genus},
                  {"degeneracy", face.degeneracy},
                  {"walks", face.walks.size()},
                  {"hostfaces", face.host_faces}});
    }
    const EulerCheck check = euler_identity_check(f.graph, keep, keep.empty() ? cfg.vertex : std::nullopt);
    rep.emit({{"euler", check.ok}, {"face-sum", check.face_sum}});
    return kOk;
}

int cmd_witness(const RunConfig& cfg, Reporter& rep) {
    const Cluster c = read_graph_file(cfg.input).cluster();
    if (c.union_genus() <= cfg.genus) {
        rep.emit({{"embeddable", true}, {"genus", c.union_genus()}});
        return kNegative;
    }
    const WitnessResult w = main_theorem_witness(c, cfg.genus, WitnessOptions{cfg.strong});
    rep.emit({{"witness", w.colors}});
    rep.emit({{"size", w.size}, {"genus", w.achieved_genus}, {"bound", 4 * cfg.genus + (cfg.strong ? 4 : 5)}});
    if (cfg.trace) {
        for (const auto& s : w.trace) rep.emit(steps_record(s));
    }
    return kOk;
}

int cmd_oracle(const RunConfig& cfg, Reporter& rep) {
    const Cluster c = read_graph_file(cfg.input).cluster();
    const auto r = brute_force_witness(c, cfg.genus, cfg.max_size, BruteForceOptions{!cfg.anchor_free, 0});
    if (!r) {
        rep.emit({{"witness", "none"}});
        return kNegative;
    }
    rep.emit({{"witness", r->colors}});
    rep.emit({{"size", r->size}});
    return kOk;
}

// Without -o the file itself is the report.
bool write_or_print(const RunConfig& cfg, const std::string& text, std::ostream& out) {
    if (cfg.output.empty()) {
        out << text;
        return false;
    }
    write_graph_file(cfg.output, text);
    return true;
}

int cmd_gen_random(const RunConfig& cfg, Reporter& rep, std::ostream& out) {
    const Arrangement a = generate_random(cfg.circles, cfg.genus, cfg.seed, GenerateOptions{cfg.strong});
    if (write_or_print(cfg, serialize_arrangement(a), out)) {
        rep.emit({{"circles", a.size()}, {"genus", a.genus()}, {"strong", is_strong(a)}});
    }
    return kOk;
}

int cmd_find_tight(const RunConfig& cfg, Reporter& rep, std::ostream& out) {
    const SearchResult r = cfg.strong ? search_strong_tight_example(cfg.seed, cfg.budget)
                                      : search_tight_example(cfg.seed, cfg.budget);
    if (!r.found) {
        rep.emit({{"found", false}, {"attempts", r.attempts}, {"best-score", r.best_score}});
        return kNegative;
    }
    const Arrangement& a = *r.arrangement;
    if (write_or_print(cfg, serialize_arrangement(a), out)) {
        rep.emit({{"found", true},
                  {"attempts", r.attempts},
                  {"circles", a.size()},
                  {"genus", a.genus()},
                  {"strong", is_strong(a)}});
    }
    return kOk;
}

int cmd_ns_cycle(const RunConfig& cfg, Reporter& rep) {
    const GraphFile f = read_graph_file(cfg.input);
    if (graph_genus(f.graph) == 0) {
        rep.emit({{"cycle", "none"}});
        return kNegative;
    }
    const Circuit c = find_ns_cycle(f.graph);
    rep.emit({{"cycle", dart_names(c)}, {"length", c.length()}});
    return kOk;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Reporter rep(out, cfg.json);
    try {
        if (cfg.genus < 0) throw Error("genus must be non-negative");
        if (cfg.command == "validate") return cmd_validate(cfg, rep);
        if (cfg.command == "genus") return cmd_genus(cfg, rep);
        if (cfg.command == "faces") return cmd_faces(cfg, rep);
        if (cfg.command == "witness") return cmd_witness(cfg, rep);
        if (cfg.command == "oracle") return cmd_oracle(cfg, rep);
        if (cfg.command == "gen-random") return cmd_gen_random(cfg, rep, out);
        if (cfg.command == "find-tight") return cmd_find_tight(cfg, rep, out);
        if (cfg.command == "ns-cycle") return cmd_ns_cycle(cfg, rep);
        throw Error("unknown command '" + cfg.command + "'");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Genus, faces and small non-embeddability witnesses for embedded graph clusters"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    auto file_cmd = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", cfg.input, "Graph file")->required();
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
        return sub;
    };
    file_cmd("validate", "Check file syntax and cluster or arrangement conditions");
    file_cmd("genus", "Genus of the embedded graph");
    file_cmd("ns-cycle", "A non-separating cycle");
    CLI::App* faces = file_cmd("faces", "Faces of a subgraph drawn in the host");
    faces->add_option("--keep", cfg.keep, "Colours kept")->delimiter(',');
    faces->add_option("--vertex", cfg.vertex, "Vertex kept when no edges are");
    CLI::App* witness = file_cmd("witness", "Constructive witness of genus > g");
    witness->add_option("--genus", cfg.genus, "Target genus g")->required();
    witness->add_flag("--strong", cfg.strong, "Use the strong base case (bound 4g+4)");
    witness->add_flag("--trace", cfg.trace, "Print the proof steps");
    CLI::App* oracle = file_cmd("oracle", "Minimum witness by exhaustive search");
    oracle->add_option("--genus", cfg.genus, "Target genus g")->required();
    oracle->add_option("--max-size", cfg.max_size, "Largest subset size tried");
    oracle->add_flag("--anchor-free", cfg.anchor_free, "Allow subsets without the anchor");

    CLI::App* gen = app.add_subcommand("gen-random", "Random arrangement");
    gen->add_option("--circles", cfg.circles, "Number of circles")->required();
    gen->add_option("--genus", cfg.genus, "Largest genus drawn")->required();
    gen->add_option("--seed", cfg.seed, "Random seed")->required();
    gen->add_flag("--strong", cfg.strong, "Strong arrangement");
    gen->add_option("-o,--output", cfg.output, "Output file (default stdout)");
    gen->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    CLI::App* tight = app.add_subcommand("find-tight", "Search for a tight example at genus 0");
    tight->add_flag("--strong", cfg.strong, "Four strong circles with planar 3-subsets");
    tight->add_option("--seed", cfg.seed, "Random seed");
    tight->add_option("--budget", cfg.budget, "Search steps");
    tight->add_option("-o,--output", cfg.output, "Output file (default stdout)");
    tight->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kFailure;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.json = format == "json";
    return run(cfg, out, err);
}

}  // namespace surfwit
