// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "whgeo/errors.hpp"
#include "whgeo/rational.hpp"

namespace whgeo {

enum class VertexKind { Artificial, LoopVertex, Regular };

// Finite multigraph with rational edge exponents beta >= 1. Loops on a
// single vertex are forbidden; a topological circle is a pair of parallel
// edges between two loop vertices.
class HolderComplex {
public:
    struct Edge {
        std::string id;
        std::string u, v;
        Rational beta;
    };

    HolderComplex() = default;

    HolderComplex(std::vector<std::string> vertices, std::vector<Edge> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        validate();
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(const std::string& id) const {
        return std::find(vertices_.begin(), vertices_.end(), id) != vertices_.end();
    }

    std::vector<size_t> incident_edges(const std::string& v) const {
        std::vector<size_t> out;
        for (size_t i = 0; i < edges_.size(); ++i)
            if (edges_[i].u == v || edges_[i].v == v) out.push_back(i);
        return out;
    }

    std::optional<Rational> min_beta() const {
        std::optional<Rational> m;
        for (const auto& e : edges_)
            if (!m || e.beta < *m) m = e.beta;
        return m;
    }

private:
    void validate() const {
        std::set<std::string> vset(vertices_.begin(), vertices_.end());
        if (vset.size() != vertices_.size())
            raise(ErrorKind::Internal, "duplicate vertex id");
        std::set<std::string> eset;
        for (const auto& e : edges_) {
            if (!eset.insert(e.id).second) raise(ErrorKind::Internal, "duplicate edge id " + e.id);
            if (!vset.count(e.u) || !vset.count(e.v))
                raise(ErrorKind::UnknownVertex, "edge " + e.id + " references a missing vertex");
            if (e.u == e.v)
                raise(ErrorKind::Internal, "self-loop on " + e.u + " (use a loop-vertex pair)");
            if (e.beta < Rational(1))
                raise(ErrorKind::Internal, "edge " + e.id + " has beta < 1");
        }
    }

    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
};

inline VertexKind classify_vertex(const HolderComplex& c, const std::string& v) {
    if (!c.has_vertex(v)) raise(ErrorKind::UnknownVertex, "no vertex " + v);
    auto inc = c.incident_edges(v);
    if (inc.size() != 2) return VertexKind::Regular;
    auto other = [&](size_t ei) {
        const auto& e = c.edges()[ei];
        return e.u == v ? e.v : e.u;
    };
    return other(inc[0]) == other(inc[1]) ? VertexKind::LoopVertex : VertexKind::Artificial;
}

inline bool is_canonical(const HolderComplex& c) {
    for (const auto& v : c.vertices()) {
        VertexKind k = classify_vertex(c, v);
        if (k == VertexKind::Artificial) return false;
        if (k == VertexKind::LoopVertex) {
            auto inc = c.incident_edges(v);
            if (c.edges()[inc[0]].beta != c.edges()[inc[1]].beta) return false;
        }
    }
    return true;
}

// Simplification: contract artificial vertices with beta = min of the two
// merged edges, then equalize loop-vertex pairs to their min. The result is
// independent of removal order (a tested property, not an assumption).
inline HolderComplex canonicalize(const HolderComplex& c) {
    std::vector<std::string> verts = c.vertices();
    std::vector<HolderComplex::Edge> edges = c.edges();
    std::set<std::string> edge_ids;
    for (const auto& e : edges) edge_ids.insert(e.id);
    size_t merge_counter = 0;
    auto fresh_edge_id = [&]() {
        std::string id;
        do {
            id = "m" + std::to_string(merge_counter++);
        } while (edge_ids.count(id));
        edge_ids.insert(id);
        return id;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(verts.begin(), verts.end());
        for (const auto& v : verts) {
            std::vector<size_t> inc;
            for (size_t i = 0; i < edges.size(); ++i)
                if (edges[i].u == v || edges[i].v == v) inc.push_back(i);
            if (inc.size() != 2) continue;
            std::string a = edges[inc[0]].u == v ? edges[inc[0]].v : edges[inc[0]].u;
            std::string b = edges[inc[1]].u == v ? edges[inc[1]].v : edges[inc[1]].u;
            if (a == b) continue;  // loop vertex
            Rational merged = std::min(edges[inc[0]].beta, edges[inc[1]].beta);
            HolderComplex::Edge e{fresh_edge_id(), a, b, merged};
            edges.erase(edges.begin() + inc[1]);
            edges.erase(edges.begin() + inc[0]);
            edges.push_back(e);
            verts.erase(std::find(verts.begin(), verts.end(), v));
            changed = true;
            break;
        }
    }

    // loop-vertex pairs carry equal exponents in canonical form
    for (const auto& v : verts) {
        std::vector<size_t> inc;
        for (size_t i = 0; i < edges.size(); ++i)
            if (edges[i].u == v || edges[i].v == v) inc.push_back(i);
        if (inc.size() != 2) continue;
        std::string a = edges[inc[0]].u == v ? edges[inc[0]].v : edges[inc[0]].u;
        std::string b = edges[inc[1]].u == v ? edges[inc[1]].v : edges[inc[1]].u;
        if (a != b) continue;
        Rational m = std::min(edges[inc[0]].beta, edges[inc[1]].beta);
        edges[inc[0]].beta = m;
        edges[inc[1]].beta = m;
    }

    return HolderComplex(verts, edges);
}

namespace detail {

struct IsoState {
    const HolderComplex* a;
    const HolderComplex* b;
    std::vector<std::string> averts, bverts;
    std::map<std::string, std::string> fwd;
    std::vector<bool> used;

    // multiset of betas on edges between two vertices
    static std::multiset<std::string> betas_between(const HolderComplex& c, const std::string& u,
                                                    const std::string& v) {
        std::multiset<std::string> out;
        for (const auto& e : c.edges())
            if ((e.u == u && e.v == v) || (e.u == v && e.v == u))
                out.insert(e.beta.fraction_string());
        return out;
    }

    static std::multiset<std::string> incident_betas(const HolderComplex& c,
                                                     const std::string& v) {
        std::multiset<std::string> out;
        for (const auto& e : c.edges())
            if (e.u == v || e.v == v) out.insert(e.beta.fraction_string());
        return out;
    }

    bool extend(size_t idx) {
        if (idx == averts.size()) return true;
        const std::string& u = averts[idx];
        auto u_sig = incident_betas(*a, u);
        for (size_t j = 0; j < bverts.size(); ++j) {
            if (used[j]) continue;
            const std::string& v = bverts[j];
            if (incident_betas(*b, v) != u_sig) continue;
            bool ok = true;
            for (const auto& [au, bu] : fwd) {
                if (betas_between(*a, u, au) != betas_between(*b, v, bu)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            fwd[u] = v;
            used[j] = true;
            if (extend(idx + 1)) return true;
            fwd.erase(u);
            used[j] = false;
        }
        return false;
    }
};

}  // namespace detail

// Beta-preserving multigraph isomorphism by backtracking; intended for the
// small complexes this library produces.
inline bool complexes_isomorphic(const HolderComplex& a, const HolderComplex& b,
                                 size_t max_vertices = 20) {
    if (a.vertices().size() > max_vertices || b.vertices().size() > max_vertices)
        raise(ErrorKind::TooLarge, "isomorphism search capped at " + std::to_string(max_vertices) +
                                       " vertices");
    if (a.vertices().size() != b.vertices().size() || a.edges().size() != b.edges().size())
        return false;
    std::multiset<std::string> ba, bb;
    for (const auto& e : a.edges()) ba.insert(e.beta.fraction_string());
    for (const auto& e : b.edges()) bb.insert(e.beta.fraction_string());
    if (ba != bb) return false;

    detail::IsoState st;
    st.a = &a;
    st.b = &b;
    st.averts = a.vertices();
    st.bverts = b.vertices();
    // high-degree vertices first: fail early
    auto deg = [](const HolderComplex& c, const std::string& v) {
        return c.incident_edges(v).size();
    };
    std::sort(st.averts.begin(), st.averts.end(), [&](const auto& x, const auto& y) {
        size_t dx = deg(a, x), dy = deg(a, y);
        return dx != dy ? dx > dy : x < y;
    });
    st.used.assign(st.bverts.size(), false);
    return st.extend(0);
}

inline std::string export_json(const HolderComplex& c) {
    nlohmann::ordered_json j;
    j["vertices"] = nlohmann::ordered_json::array();
    std::vector<std::string> verts = c.vertices();
    std::sort(verts.begin(), verts.end());
    for (const auto& v : verts) j["vertices"].push_back({{"id", v}});
    j["edges"] = nlohmann::ordered_json::array();
    std::vector<HolderComplex::Edge> edges = c.edges();
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& e : edges) {
        std::string u = e.u, v = e.v;
        if (v < u) std::swap(u, v);
        j["edges"].push_back(
            {{"id", e.id}, {"ends", {u, v}}, {"beta", e.beta.fraction_string()}});
    }
    return j.dump();
}

inline std::string export_dot(const HolderComplex& c) {
    std::string out = "graph holder_complex {\n";
    std::vector<std::string> verts = c.vertices();
    std::sort(verts.begin(), verts.end());
    for (const auto& v : verts) out += "  \"" + v + "\";\n";
    std::vector<HolderComplex::Edge> edges = c.edges();
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    for (const auto& e : edges) {
        std::string u = e.u, v = e.v;
        if (v < u) std::swap(u, v);
        out += "  \"" + u + "\" -- \"" + v + "\" [label=\"" + e.beta.fraction_string() + "\"];\n";
    }
    out += "}\n";
    return out;
}

inline std::string export_complex(const HolderComplex& c, const std::string& format) {
    if (format == "json") return export_json(c);
    if (format == "dot") return export_dot(c);
    raise(ErrorKind::Usage, "unknown export format " + format);
}

inline HolderComplex import_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        raise(ErrorKind::SyntaxError, std::string("complex JSON: ") + e.what());
    }
    std::vector<std::string> verts;
    for (const auto& v : j.at("vertices")) verts.push_back(v.at("id").get<std::string>());
    std::vector<HolderComplex::Edge> edges;
    for (const auto& e : j.at("edges")) {
        edges.push_back(HolderComplex::Edge{e.at("id").get<std::string>(),
                                            e.at("ends").at(0).get<std::string>(),
                                            e.at("ends").at(1).get<std::string>(),
                                            Rational::from_string(e.at("beta").get<std::string>())});
    }
    return HolderComplex(verts, edges);
}

}  // namespace whgeo
