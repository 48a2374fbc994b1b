#include "surfwit/faces.hpp"

#include <algorithm>
#include <numeric>

namespace surfwit {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            auto& p = parent_[static_cast<std::size_t>(x)];
            p = parent_[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            // smaller root wins so roots are least members
            if (b < a) std::swap(a, b);
            parent_[static_cast<std::size_t>(b)] = a;
        }
    }

private:
    std::vector<int> parent_;
};

}  // namespace

int FaceAnalysis::corner_walk(const EmbeddedGraph& host, Dart d) const {
    if (walks.size() == 1 && walks[0].darts.empty()) {
        return 0;
    }
    for (Dart r = host.next_around(d);; r = host.next_around(r)) {
        const int w = walk_of_dart[static_cast<std::size_t>(r.index)];
        if (w != -1) {
            return w;
        }
        if (r == d) {
            throw Error("dart " + to_string(d) + " does not leave a subgraph vertex");
        }
    }
}

FaceAnalysis analyze_faces(const EmbeddedGraph& host, std::span<const int> keep_edges,
                           std::optional<int> lone_vertex) {
    if (!is_connected(host)) {
        throw Error("face structure requires a connected host");
    }
    FaceAnalysis out;
    out.in_subgraph_edge.assign(static_cast<std::size_t>(host.edge_count()), 0);
    out.in_subgraph_vertex.assign(static_cast<std::size_t>(host.vertex_count()), 0);
    for (int e : keep_edges) {
        out.in_subgraph_edge.at(static_cast<std::size_t>(e)) = 1;
        out.in_subgraph_vertex[static_cast<std::size_t>(host.edge(e).u)] = 1;
        out.in_subgraph_vertex[static_cast<std::size_t>(host.edge(e).v)] = 1;
    }
    if (lone_vertex) {
        out.in_subgraph_vertex.at(static_cast<std::size_t>(*lone_vertex)) = 1;
    }
    if (std::none_of(out.in_subgraph_vertex.begin(), out.in_subgraph_vertex.end(),
                     [](char c) { return c != 0; })) {
        throw Error("empty subgraph has no face structure");
    }

    const SubEmbedding sub = induced_by_edges(host, keep_edges, lone_vertex);
    if (!is_connected(sub.graph)) {
        throw Error("face structure requires a connected subgraph");
    }
    out.subgraph_genus = graph_genus(sub.graph);
    out.host_genus = graph_genus(host);

    const auto host_walks = trace_facial_walks(host);
    const auto host_face_of_dart = walk_index_of_darts(host, host_walks);
    const int host_faces = static_cast<int>(host_walks.size());

    DisjointSets regions(static_cast<std::size_t>(host_faces));
    for (int e = 0; e < host.edge_count(); ++e) {
        if (!out.in_subgraph_edge[static_cast<std::size_t>(e)]) {
            regions.unite(host_face_of_dart[static_cast<std::size_t>(2 * e)],
                          host_face_of_dart[static_cast<std::size_t>(2 * e + 1)]);
        }
    }
    for (int v = 0; v < host.vertex_count(); ++v) {
        if (out.in_subgraph_vertex[static_cast<std::size_t>(v)] || host.degree(v) == 0) {
            continue;
        }
        const int first = host_face_of_dart[static_cast<std::size_t>(host.rotation(v)[0].index)];
        for (Dart d : host.rotation(v)) {
            regions.unite(first, host_face_of_dart[static_cast<std::size_t>(d.index)]);
        }
    }

    // Roots are least host-face indices, so root order is the face order.
    std::vector<int> face_of_root(static_cast<std::size_t>(host_faces), -1);
    out.face_of_host_face.assign(static_cast<std::size_t>(host_faces), -1);
    for (int f = 0; f < host_faces; ++f) {
        const int root = regions.find(f);
        auto& idx = face_of_root[static_cast<std::size_t>(root)];
        if (idx == -1) {
            idx = static_cast<int>(out.faces.size());
            out.faces.emplace_back();
        }
        out.face_of_host_face[static_cast<std::size_t>(f)] = idx;
        out.faces[static_cast<std::size_t>(idx)].host_faces.push_back(f);
    }

    // Open-cell Euler characteristic of each region.
    std::vector<int> chi(out.faces.size(), 0);
    for (std::size_t i = 0; i < out.faces.size(); ++i) {
        chi[i] = static_cast<int>(out.faces[i].host_faces.size());
    }
    out.face_of_edge.assign(static_cast<std::size_t>(host.edge_count()), -1);
    for (int e = 0; e < host.edge_count(); ++e) {
        if (!out.in_subgraph_edge[static_cast<std::size_t>(e)]) {
            const int face = out.face_of_host_face[static_cast<std::size_t>(
                host_face_of_dart[static_cast<std::size_t>(2 * e)])];
            out.face_of_edge[static_cast<std::size_t>(e)] = face;
            --chi[static_cast<std::size_t>(face)];
        }
    }
    out.face_of_vertex.assign(static_cast<std::size_t>(host.vertex_count()), -1);
    for (int v = 0; v < host.vertex_count(); ++v) {
        if (out.in_subgraph_vertex[static_cast<std::size_t>(v)] || host.degree(v) == 0) {
            continue;
        }
        const int face = out.face_of_host_face[static_cast<std::size_t>(
            host_face_of_dart[static_cast<std::size_t>(host.rotation(v)[0].index)])];
        out.face_of_vertex[static_cast<std::size_t>(v)] = face;
        ++chi[static_cast<std::size_t>(face)];
    }

    // Walks of S, lifted to host darts. An edgeless S has one conceptual
    // (empty) walk bounding its single face.
    out.walk_of_dart.assign(static_cast<std::size_t>(host.dart_count()), -1);
    if (sub.graph.edge_count() == 0) {
        out.walks.push_back(FacialWalk{});
        out.face_of_walk.push_back(0);
    } else {
        for (const FacialWalk& w : trace_facial_walks(sub.graph)) {
            FacialWalk lifted;
            for (Dart d : w.darts) {
                lifted.darts.push_back(sub.to_host(d));
            }
            const int id = static_cast<int>(out.walks.size());
            for (Dart d : lifted.darts) {
                out.walk_of_dart[static_cast<std::size_t>(d.index)] = id;
            }
            out.face_of_walk.push_back(out.face_of_host_face[static_cast<std::size_t>(
                host_face_of_dart[static_cast<std::size_t>(lifted.darts[0].index)])]);
            out.walks.push_back(std::move(lifted));
        }
    }
    for (std::size_t w = 0; w < out.walks.size(); ++w) {
        Face& face = out.faces[static_cast<std::size_t>(out.face_of_walk[w])];
        face.walk_ids.push_back(static_cast<int>(w));
        face.walks.push_back(out.walks[w]);
    }

    for (std::size_t i = 0; i < out.faces.size(); ++i) {
        Face& face = out.faces[i];
        const int m = static_cast<int>(face.walks.size());
        if (m < 1) {
            throw std::logic_error("face without boundary walk");
        }
        const int twice = 2 - m - chi[i];
        if (twice < 0 || twice % 2 != 0) {
            throw std::logic_error("face Euler characteristic inconsistent (host not cellular?)");
        }
        face.genus = twice / 2;
        face.degeneracy = m - 1;
    }
    return out;
}

std::vector<Face> face_structure(const EmbeddedGraph& host, std::span<const int> keep_edges,
                                 std::optional<int> lone_vertex) {
    return analyze_faces(host, keep_edges, lone_vertex).faces;
}

std::string EulerCheck::describe() const {
    return "host genus " + std::to_string(host_genus) + " vs subgraph genus " +
           std::to_string(subgraph_genus) + " + face sum " + std::to_string(face_sum);
}

EulerCheck euler_identity_check(const EmbeddedGraph& host, std::span<const int> keep_edges,
                                std::optional<int> lone_vertex) {
    const FaceAnalysis analysis = analyze_faces(host, keep_edges, lone_vertex);
    EulerCheck check;
    check.host_genus = analysis.host_genus;
    check.subgraph_genus = analysis.subgraph_genus;
    for (const Face& f : analysis.faces) {
        check.face_sum += f.genus + f.degeneracy;
    }
    check.ok = check.host_genus == check.subgraph_genus + check.face_sum;
    return check;
}

std::optional<Face> find_degenerate_face(std::span<const Face> faces) {
    for (const Face& f : faces) {
        if (f.degeneracy >= 1) {
            return f;
        }
    }
    return std::nullopt;
}

std::optional<Face> find_positive_genus_face(std::span<const Face> faces) {
    for (const Face& f : faces) {
        if (f.genus >= 1) {
            return f;
        }
    }
    return std::nullopt;
}

bool has_degenerate_face(const EmbeddedGraph& host, std::span<const int> keep_edges) {
    const auto faces = face_structure(host, keep_edges);
    return find_degenerate_face(faces).has_value();
}

}  // namespace surfwit
