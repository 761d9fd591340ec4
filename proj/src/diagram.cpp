#include "graphvol/diagram.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace graphvol {

AmbientSpace AmbientSpace::thickened(int genus, int boundary_components) {
    if (genus < 0 || boundary_components < 0)
        throw Error("invalid-diagram", "thickened surface needs genus >= 0 and boundary >= 0");
    return {Kind::ThickenedSurface, genus, boundary_components};
}

int AmbientSpace::euler_characteristic() const {
    if (kind != Kind::ThickenedSurface)
        throw Error("wrong-ambient", "Euler characteristic applies to thickened surfaces only");
    return 2 - 2 * genus - boundary_components;
}

bool AmbientSpace::is_annulus_or_torus() const {
    if (kind != Kind::ThickenedSurface) return false;
    return (genus == 0 && boundary_components == 2) || (genus == 1 && boundary_components == 0);
}

std::string AmbientSpace::str() const {
    if (kind == Kind::S3) return "s3";
    return "thickened genus=" + std::to_string(genus) +
           " boundary=" + std::to_string(boundary_components);
}

const DiagramVertex& GraphDiagram::vertex(const std::string& id) const {
    for (const auto& v : vertices_)
        if (v.id == id) return v;
    throw Error("dangling-reference", "unknown vertex '" + id + "'");
}

const DiagramEdge& GraphDiagram::edge(const std::string& id) const {
    for (const auto& e : edges_)
        if (e.id == id) return e;
    throw Error("dangling-reference", "unknown edge '" + id + "'");
}

int GraphDiagram::vertex_degree(const std::string& id) const {
    return static_cast<int>(vertex(id).halfedges.size());
}

namespace {

bool valid_id(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                        (c >= '0' && c <= '9') || c == '_' || c == '-';
        if (!ok) return false;
    }
    return true;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

// "key=value" -> value, else error
std::string keyed_value(const std::string& tok, const std::string& key, int line_no) {
    const std::string prefix = key + "=";
    if (tok.rfind(prefix, 0) != 0)
        throw ParseError("expected '" + key + "=<value>', got '" + tok + "'", line_no);
    return tok.substr(prefix.size());
}

int parse_nonneg(const std::string& s, const std::string& what, int line_no) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(what + " must be a nonnegative integer, got '" + s + "'", line_no);
    return std::stoi(s);
}

// "vertex.halfedge"
EdgeEndpoint parse_endpoint(const std::string& tok, int line_no) {
    const auto dotpos = tok.find('.');
    if (dotpos == std::string::npos || dotpos == 0 || dotpos + 1 == tok.size())
        throw ParseError("expected '<vertex>.<halfedge>', got '" + tok + "'", line_no);
    EdgeEndpoint ep{tok.substr(0, dotpos), tok.substr(dotpos + 1)};
    if (!valid_id(ep.vertex) || !valid_id(ep.halfedge))
        throw ParseError("invalid endpoint reference '" + tok + "'", line_no);
    return ep;
}

} // namespace

GraphDiagram parse_diagram(std::string_view text) {
    GraphDiagram d;
    bool have_ambient = false;
    std::map<std::string, DiagramVertex> vertices;
    std::map<std::string, DiagramEdge> edges;
    std::set<std::string> crossings;
    std::vector<std::pair<std::string, int>> passage_lines_pending; // edge id, line no

    std::istringstream input{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        const auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];

        if (kw == "ambient") {
            if (have_ambient) throw ParseError("duplicate ambient declaration", line_no);
            if (toks.size() == 2 && toks[1] == "s3") {
                d.ambient_ = AmbientSpace::s3();
            } else if (toks.size() == 4 && toks[1] == "thickened") {
                const int g = parse_nonneg(keyed_value(toks[2], "genus", line_no), "genus", line_no);
                const int b =
                    parse_nonneg(keyed_value(toks[3], "boundary", line_no), "boundary", line_no);
                d.ambient_ = AmbientSpace::thickened(g, b);
            } else {
                throw ParseError("expected 'ambient s3' or 'ambient thickened genus=<g> "
                                 "boundary=<b>'",
                                 line_no);
            }
            have_ambient = true;
        } else if (kw == "vertex") {
            if (toks.size() < 2) throw ParseError("vertex needs an id", line_no);
            DiagramVertex v;
            v.id = toks[1];
            if (!valid_id(v.id)) throw ParseError("invalid vertex id '" + v.id + "'", line_no);
            if (vertices.count(v.id)) throw ParseError("duplicate vertex '" + v.id + "'", line_no);
            for (std::size_t i = 2; i < toks.size(); ++i) {
                if (!valid_id(toks[i]))
                    throw ParseError("invalid half-edge id '" + toks[i] + "'", line_no);
                v.halfedges.push_back(toks[i]);
            }
            vertices[v.id] = std::move(v);
        } else if (kw == "edge") {
            if (toks.size() < 3) throw ParseError("incomplete edge declaration", line_no);
            const std::string& id = toks[1];
            if (!valid_id(id)) throw ParseError("invalid edge id '" + id + "'", line_no);
            if (toks[2] == "loop") {
                if (toks.size() != 3) throw ParseError("unexpected tokens after 'loop'", line_no);
                if (edges.count(id)) throw ParseError("duplicate edge '" + id + "'", line_no);
                DiagramEdge e;
                e.id = id;
                e.is_loop = true;
                edges[id] = std::move(e);
            } else if (toks[2] == "from") {
                if (toks.size() != 6 || toks[4] != "to")
                    throw ParseError("expected 'edge <id> from <v>.<h> to <v>.<h>'", line_no);
                if (edges.count(id)) throw ParseError("duplicate edge '" + id + "'", line_no);
                DiagramEdge e;
                e.id = id;
                e.from = parse_endpoint(toks[3], line_no);
                e.to = parse_endpoint(toks[5], line_no);
                edges[id] = std::move(e);
            } else if (toks[2] == "passes") {
                auto it = edges.find(id);
                if (it == edges.end())
                    throw ParseError("passage list for undeclared edge '" + id + "'", line_no);
                if (!it->second.passages.empty())
                    throw ParseError("duplicate passage list for edge '" + id + "'", line_no);
                if (toks.size() < 4)
                    throw ParseError("'passes' needs at least one '<crossing>:<over|under>'",
                                     line_no);
                for (std::size_t i = 3; i < toks.size(); ++i) {
                    const auto colon = toks[i].find(':');
                    if (colon == std::string::npos)
                        throw ParseError("expected '<crossing>:<over|under>', got '" + toks[i] +
                                             "'",
                                         line_no);
                    Passage p;
                    p.crossing = toks[i].substr(0, colon);
                    const std::string role = toks[i].substr(colon + 1);
                    if (!valid_id(p.crossing))
                        throw ParseError("invalid crossing id '" + p.crossing + "'", line_no);
                    if (role == "over")
                        p.role = PassageRole::Over;
                    else if (role == "under")
                        p.role = PassageRole::Under;
                    else
                        throw ParseError("passage role must be 'over' or 'under', got '" + role +
                                             "'",
                                         line_no);
                    it->second.passages.push_back(std::move(p));
                }
                passage_lines_pending.push_back({id, line_no});
            } else {
                throw ParseError("expected 'from', 'to', 'loop' or 'passes' after edge id",
                                 line_no);
            }
        } else if (kw == "crossing") {
            if (toks.size() != 2) throw ParseError("expected 'crossing <id>'", line_no);
            if (!valid_id(toks[1]))
                throw ParseError("invalid crossing id '" + toks[1] + "'", line_no);
            if (!crossings.insert(toks[1]).second)
                throw ParseError("duplicate crossing '" + toks[1] + "'", line_no);
        } else {
            throw ParseError("unknown directive '" + kw + "'", line_no);
        }
    }

    if (!have_ambient) throw Error("invalid-diagram", "missing ambient declaration");

    // Cross-reference checks.
    std::map<std::string, int> over_count, under_count;
    std::map<std::string, std::string> halfedge_owner; // halfedge -> vertex
    for (const auto& [vid, v] : vertices) {
        for (const auto& h : v.halfedges) {
            if (!halfedge_owner.emplace(h, vid).second)
                throw Error("invalid-diagram", "half-edge '" + h + "' declared at two vertices");
        }
    }
    std::map<std::string, int> halfedge_uses;
    for (const auto& [eid, e] : edges) {
        if (!e.is_loop) {
            for (const EdgeEndpoint* ep : {&e.from, &e.to}) {
                auto it = halfedge_owner.find(ep->halfedge);
                if (it == halfedge_owner.end() || it->second != ep->vertex)
                    throw Error("dangling-reference",
                                "edge '" + eid + "' endpoint " + ep->vertex + "." + ep->halfedge +
                                    " does not match any declared rotation slot");
                ++halfedge_uses[ep->halfedge];
            }
        }
        for (const Passage& p : e.passages) {
            if (!crossings.count(p.crossing))
                throw Error("dangling-reference",
                            "edge '" + eid + "' passes undeclared crossing '" + p.crossing + "'");
            (p.role == PassageRole::Over ? over_count : under_count)[p.crossing] += 1;
        }
    }
    for (const auto& [h, owner] : halfedge_owner) {
        if (halfedge_uses[h] != 1)
            throw Error("invalid-diagram", "half-edge '" + h + "' of vertex '" + owner +
                                               "' must be used by exactly one edge endpoint");
    }
    for (const auto& c : crossings) {
        if (over_count[c] != 1 || under_count[c] != 1)
            throw Error("invalid-diagram",
                        "crossing '" + c + "' needs exactly one over and one under passage, got " +
                            std::to_string(over_count[c]) + " over / " +
                            std::to_string(under_count[c]) + " under");
    }
    for (const auto& [vid, v] : vertices) {
        if (static_cast<int>(v.halfedges.size()) < 3)
            throw Error("invalid-diagram", "vertex '" + vid + "' has degree " +
                                               std::to_string(v.halfedges.size()) +
                                               " but spatial-graph vertices need degree >= 3");
    }

    for (auto& [vid, v] : vertices) d.vertices_.push_back(std::move(v));
    for (auto& [eid, e] : edges) d.edges_.push_back(std::move(e));
    for (const auto& c : crossings) d.crossings_.push_back({c});
    return d;
}

GraphDiagram load_diagram(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("io", "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_diagram(buf.str());
}

std::string serialize(const GraphDiagram& d) {
    std::ostringstream os;
    os << "ambient " << d.ambient().str() << "\n";
    for (const auto& v : d.vertices()) {
        os << "vertex " << v.id;
        for (const auto& h : v.halfedges) os << " " << h;
        os << "\n";
    }
    for (const auto& c : d.crossings()) os << "crossing " << c.id << "\n";
    for (const auto& e : d.edges()) {
        if (e.is_loop)
            os << "edge " << e.id << " loop\n";
        else
            os << "edge " << e.id << " from " << e.from.vertex << "." << e.from.halfedge << " to "
               << e.to.vertex << "." << e.to.halfedge << "\n";
        if (!e.passages.empty()) {
            os << "edge " << e.id << " passes";
            for (const auto& p : e.passages)
                os << " " << p.crossing << ":" << (p.role == PassageRole::Over ? "over" : "under");
            os << "\n";
        }
    }
    return os.str();
}

int crossing_count(const GraphDiagram& d) { return static_cast<int>(d.crossings().size()); }

std::optional<CycleWitness> find_crossing_free_cycle(const GraphDiagram& d) {
    // A passage-free loop edge is itself a cycle.
    for (const auto& e : d.edges())
        if (e.is_loop && e.passages.empty()) return CycleWitness{{e.id}, {}};

    // DFS over the subgraph of passage-free non-loop edges; any repeated
    // vertex closes a cycle. Parallel edges count.
    std::map<std::string, std::vector<const DiagramEdge*>> adj;
    for (const auto& e : d.edges()) {
        if (e.is_loop || !e.passages.empty()) continue;
        adj[e.from.vertex].push_back(&e);
        adj[e.to.vertex].push_back(&e);
    }

    std::set<std::string> visited;
    for (const auto& [start, unused] : adj) {
        if (visited.count(start)) continue;
        // parent edge per vertex in the DFS tree
        std::map<std::string, const DiagramEdge*> tree_edge;
        std::map<std::string, std::string> tree_parent;
        std::vector<std::string> stack{start};
        visited.insert(start);
        while (!stack.empty()) {
            const std::string v = stack.back();
            stack.pop_back();
            for (const DiagramEdge* e : adj[v]) {
                const std::string w = (e->from.vertex == v) ? e->to.vertex : e->from.vertex;
                if (e->from.vertex == e->to.vertex) {
                    // self-loop through two rotation slots of one vertex
                    return CycleWitness{{e->id}, {v}};
                }
                if (!visited.count(w)) {
                    visited.insert(w);
                    tree_edge[w] = e;
                    tree_parent[w] = v;
                    stack.push_back(w);
                } else if ((!tree_edge.count(v) || tree_edge[v] != e) &&
                           (!tree_edge.count(w) || tree_edge[w] != e)) {
                    // Non-tree edge closes a cycle: walk tree paths from v
                    // and w to their meeting point.
                    auto path_to_root = [&](std::string a) {
                        std::vector<std::string> path{a};
                        while (tree_parent.count(a)) {
                            a = tree_parent[a];
                            path.push_back(a);
                        }
                        return path;
                    };
                    const auto pv = path_to_root(v);
                    const auto pw = path_to_root(w);
                    std::set<std::string> on_pv(pv.begin(), pv.end());
                    std::string meet;
                    for (const auto& a : pw)
                        if (on_pv.count(a)) {
                            meet = a;
                            break;
                        }
                    CycleWitness cw;
                    cw.edge_ids.push_back(e->id);
                    cw.vertex_ids.push_back(v);
                    for (std::string a = v; a != meet; a = tree_parent[a]) {
                        cw.edge_ids.push_back(tree_edge[a]->id);
                        cw.vertex_ids.push_back(tree_parent[a]);
                    }
                    std::vector<std::string> back_edges, back_vertices;
                    for (std::string a = w; a != meet; a = tree_parent[a]) {
                        back_edges.push_back(tree_edge[a]->id);
                        back_vertices.push_back(a);
                    }
                    std::reverse(back_edges.begin(), back_edges.end());
                    std::reverse(back_vertices.begin(), back_vertices.end());
                    for (const auto& id : back_edges) cw.edge_ids.push_back(id);
                    for (const auto& id : back_vertices) cw.vertex_ids.push_back(id);
                    return cw;
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<GraphComponent> graph_components(const GraphDiagram& d) {
    std::map<std::string, std::vector<const DiagramEdge*>> adj;
    for (const auto& e : d.edges()) {
        if (e.is_loop) continue;
        adj[e.from.vertex].push_back(&e);
        adj[e.to.vertex].push_back(&e);
    }

    std::vector<GraphComponent> out;
    std::set<std::string> seen;
    for (const auto& v : d.vertices()) {
        if (seen.count(v.id)) continue;
        GraphComponent comp;
        std::vector<std::string> stack{v.id};
        seen.insert(v.id);
        std::set<std::string> edge_ids;
        while (!stack.empty()) {
            const std::string cur = stack.back();
            stack.pop_back();
            comp.vertex_ids.push_back(cur);
            for (const DiagramEdge* e : adj[cur]) {
                edge_ids.insert(e->id);
                const std::string other =
                    (e->from.vertex == cur) ? e->to.vertex : e->from.vertex;
                if (!seen.count(other)) {
                    seen.insert(other);
                    stack.push_back(other);
                }
            }
        }
        std::sort(comp.vertex_ids.begin(), comp.vertex_ids.end());
        comp.edge_ids.assign(edge_ids.begin(), edge_ids.end());
        comp.key = "v:" + comp.vertex_ids.front();
        out.push_back(std::move(comp));
    }
    for (const auto& e : d.edges()) {
        if (!e.is_loop) continue;
        GraphComponent comp;
        comp.vertex_free_link = true;
        comp.edge_ids.push_back(e.id);
        comp.key = "loop:" + e.id;
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(),
              [](const GraphComponent& a, const GraphComponent& b) { return a.key < b.key; });
    return out;
}

std::string to_string(VertexType t) {
    switch (t) {
    case VertexType::Finite: return "finite";
    case VertexType::Ideal: return "ideal";
    case VertexType::Hyperideal: return "hyperideal";
    }
    return "?";
}

VertexType vertex_type_from_string(std::string_view s) {
    if (s == "finite") return VertexType::Finite;
    if (s == "ideal") return VertexType::Ideal;
    if (s == "hyperideal") return VertexType::Hyperideal;
    throw Error("parse", "unknown vertex type '" + std::string(s) + "'");
}

VertexClassification classify_vertices(const GraphDiagram& d) {
    VertexClassification c;
    const AmbientSpace& amb = d.ambient();

    // A thickened sphere or disk is the 3-sphere case in disguise (spheres
    // get capped off when passing to the hyperbolic metric).
    const bool s3_like =
        amb.kind == AmbientSpace::Kind::S3 ||
        (amb.kind == AmbientSpace::Kind::ThickenedSurface && amb.euler_characteristic() >= 1);

    if (s3_like) {
        c.u_pole = VertexType::Finite;
        c.d_pole = VertexType::Finite;
    } else if (amb.is_annulus_or_torus()) {
        // F x I boundary tori: poles become ideal.
        c.u_pole = VertexType::Ideal;
        c.d_pole = VertexType::Ideal;
    } else {
        // chi(F) < 0: genus >= 2 boundaries, poles truncated.
        c.u_pole = VertexType::Hyperideal;
        c.d_pole = VertexType::Hyperideal;
    }

    for (const GraphComponent& comp : graph_components(d)) {
        // Vertex-free link components give torus boundary, hence ideal
        // apexes; components with vertices give genus >= 2 boundary.
        c.component_types[comp.key] =
            comp.vertex_free_link ? VertexType::Ideal : VertexType::Hyperideal;
    }
    return c;
}

DiagramReport check_diagram(const GraphDiagram& d) {
    DiagramReport r;
    r.crossing_count = crossing_count(d);

    if (auto cycle = find_crossing_free_cycle(d)) {
        r.valid = false;
        std::string witness = "crossing-free cycle through edges [";
        for (std::size_t i = 0; i < cycle->edge_ids.size(); ++i) {
            if (i) witness += " ";
            witness += cycle->edge_ids[i];
        }
        witness += "]: the graph exterior is not hyperbolic";
        r.obstructions.push_back(std::move(witness));
    }

    for (const GraphComponent& comp : graph_components(d)) {
        std::string line = comp.key + ": ";
        if (comp.vertex_free_link)
            line += "vertex-free link";
        else
            line += std::to_string(comp.vertex_ids.size()) + " vertices, " +
                    std::to_string(comp.edge_ids.size()) + " edges";
        r.component_summary.push_back(std::move(line));
    }
    return r;
}

} // namespace graphvol
