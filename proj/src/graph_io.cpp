#include "surfwit/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace surfwit {

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string w;
    while (ss >> w) {
        out.push_back(w);
    }
    return out;
}

int parse_int(const std::string& s, int line, const char* what) {
    int value = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError(line, std::string("bad ") + what + " '" + s + "'");
    }
    return value;
}

Dart parse_dart(const std::string& s, int line) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) {
        throw ParseError(line, "bad dart '" + s + "'");
    }
    const int edge = parse_int(s.substr(0, dot), line, "dart");
    const int end = parse_int(s.substr(dot + 1), line, "dart");
    if (edge < 0 || (end != 0 && end != 1)) {
        throw ParseError(line, "bad dart '" + s + "'");
    }
    return Dart::of(edge, end);
}

}  // namespace

Cluster GraphFile::cluster() const {
    if (!anchor) {
        throw Error("file declares no anchor");
    }
    return Cluster(graph, edge_color, *anchor);
}

GraphFile parse_graph(std::istream& in) {
    std::optional<int> n;
    std::optional<int> m;
    std::optional<AnchorSpec> anchor;
    std::vector<std::optional<Edge>> edges;
    std::vector<int> colors;
    std::vector<std::optional<std::vector<Dart>>> rot;

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        const auto w = split_words(raw);
        if (w.empty()) {
            continue;
        }
        const std::string& key = w[0];
        if (key == "V" || key == "E") {
            if (w.size() != 2) {
                throw ParseError(line, "expected '" + key + " <count>'");
            }
            auto& slot = key == "V" ? n : m;
            if (slot) {
                throw ParseError(line, "duplicate " + key + " line");
            }
            slot = parse_int(w[1], line, "count");
            if (*slot < 0) {
                throw ParseError(line, "negative count");
            }
            if (key == "V") {
                rot.assign(static_cast<std::size_t>(*n), std::nullopt);
            } else {
                edges.assign(static_cast<std::size_t>(*m), std::nullopt);
                colors.assign(static_cast<std::size_t>(*m), 0);
            }
        } else if (key == "anchor") {
            if (anchor) {
                throw ParseError(line, "duplicate anchor line");
            }
            AnchorSpec spec;
            if (w.size() == 3 && w[1] == "vertex") {
                spec.vertex = parse_int(w[2], line, "anchor vertex");
            } else if (w.size() >= 2) {
                for (std::size_t i = 1; i < w.size(); ++i) {
                    spec.colors.push_back(parse_int(w[i], line, "anchor colour"));
                }
            } else {
                throw ParseError(line, "expected 'anchor <color>...' or 'anchor vertex <v>'");
            }
            anchor = std::move(spec);
        } else if (key == "edge") {
            if (!n || !m) {
                throw ParseError(line, "edge before V and E");
            }
            if (w.size() != 4 && w.size() != 5) {
                throw ParseError(line, "expected 'edge <id> <u> <v> [<color>]'");
            }
            const int id = parse_int(w[1], line, "edge id");
            if (id < 0 || id >= *m) {
                throw ParseError(line, "edge id " + w[1] + " out of range");
            }
            if (edges[static_cast<std::size_t>(id)]) {
                throw ParseError(line, "duplicate edge " + w[1]);
            }
            const int u = parse_int(w[2], line, "vertex");
            const int v = parse_int(w[3], line, "vertex");
            if (u < 0 || u >= *n || v < 0 || v >= *n) {
                throw ParseError(line, "edge " + w[1] + " has an endpoint out of range");
            }
            edges[static_cast<std::size_t>(id)] = Edge{u, v};
            if (w.size() == 5) {
                colors[static_cast<std::size_t>(id)] = parse_int(w[4], line, "colour");
            }
        } else if (key == "rot") {
            if (!n) {
                throw ParseError(line, "rot before V");
            }
            if (w.size() < 2) {
                throw ParseError(line, "expected 'rot <v> <darts>'");
            }
            const int v = parse_int(w[1], line, "vertex");
            if (v < 0 || v >= *n) {
                throw ParseError(line, "rot vertex " + w[1] + " out of range");
            }
            if (rot[static_cast<std::size_t>(v)]) {
                throw ParseError(line, "duplicate rot line for vertex " + w[1]);
            }
            std::vector<Dart> darts;
            for (std::size_t i = 2; i < w.size(); ++i) {
                darts.push_back(parse_dart(w[i], line));
            }
            rot[static_cast<std::size_t>(v)] = std::move(darts);
        } else {
            throw ParseError(line, "unknown directive '" + key + "'");
        }
    }
    if (!n || !m) {
        throw ParseError(0, "missing V or E line");
    }
    std::vector<Edge> final_edges;
    for (int e = 0; e < *m; ++e) {
        if (!edges[static_cast<std::size_t>(e)]) {
            throw ParseError(0, "edge " + std::to_string(e) + " not declared");
        }
        final_edges.push_back(*edges[static_cast<std::size_t>(e)]);
    }
    std::vector<std::vector<Dart>> rotation;
    for (auto& r : rot) {
        rotation.push_back(r ? std::move(*r) : std::vector<Dart>{});
    }
    GraphFile out;
    try {
        out.graph = EmbeddedGraph(*n, std::move(final_edges), std::move(rotation));
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
    out.edge_color = std::move(colors);
    out.anchor = std::move(anchor);
    return out;
}

GraphFile parse_graph_string(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open " + path);
    }
    return parse_graph(in);
}

std::string serialize_graph(const GraphFile& f) {
    const EmbeddedGraph& g = f.graph;
    std::ostringstream out;
    out << "V " << g.vertex_count() << "\nE " << g.edge_count() << '\n';
    if (f.anchor) {
        if (f.anchor->colors.empty() && f.anchor->vertex) {
            out << "anchor vertex " << *f.anchor->vertex << '\n';
        } else {
            out << "anchor";
            for (int c : f.anchor->colors) {
                out << ' ' << c;
            }
            out << '\n';
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const int color = f.edge_color.empty() ? 0 : f.edge_color[static_cast<std::size_t>(e)];
        out << "edge " << e << ' ' << g.edge(e).u << ' ' << g.edge(e).v << ' ' << color << '\n';
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "rot " << v;
        const auto r = g.rotation(v);
        if (!r.empty()) {
            const auto least = std::min_element(r.begin(), r.end()) - r.begin();
            for (std::size_t k = 0; k < r.size(); ++k) {
                out << ' ' << to_string(r[(static_cast<std::size_t>(least) + k) % r.size()]);
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string serialize_cluster(const Cluster& c) {
    GraphFile f;
    f.graph = c.host();
    f.edge_color.assign(c.edge_color().begin(), c.edge_color().end());
    f.anchor = c.anchor();
    return serialize_graph(f);
}

void write_graph_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("cannot write " + path);
    }
    out << text;
    if (!out) {
        throw Error("write failed for " + path);
    }
}

}  // namespace surfwit
