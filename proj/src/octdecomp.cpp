#include "graphvol/octdecomp.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace graphvol {

std::string OctFaceLabel::str() const {
    std::string s(side == Side::U ? "U" : "D");
    s += over_out ? "-oo" : "-oi";
    s += under_out ? "-uo" : "-ui";
    return s;
}

OctFaceLabel OctFaceLabel::from_string(std::string_view s) {
    if (s.size() != 7 || s[1] != '-' || s[4] != '-')
        throw Error("parse", "bad octahedron face label '" + std::string(s) + "'");
    OctFaceLabel l;
    if (s[0] == 'U')
        l.side = Side::U;
    else if (s[0] == 'D')
        l.side = Side::D;
    else
        throw Error("parse", "bad octahedron face label '" + std::string(s) + "'");
    if (s.substr(2, 2) != "oi" && s.substr(2, 2) != "oo")
        throw Error("parse", "bad octahedron face label '" + std::string(s) + "'");
    if (s.substr(5, 2) != "ui" && s.substr(5, 2) != "uo")
        throw Error("parse", "bad octahedron face label '" + std::string(s) + "'");
    l.over_out = s[3] == 'o';
    l.under_out = s[6] == 'o';
    return l;
}

std::string FaceRef::str() const {
    return std::string(kind == CellKind::Oct ? "oct:" : "fin:") + cell + "." + label;
}

FaceRef FaceRef::from_string(std::string_view s) {
    FaceRef f;
    if (s.rfind("oct:", 0) == 0)
        f.kind = CellKind::Oct;
    else if (s.rfind("fin:", 0) == 0)
        f.kind = CellKind::Fin;
    else
        throw Error("parse", "bad face reference '" + std::string(s) + "'");
    const auto rest = s.substr(4);
    const auto dot = rest.find('.');
    if (dot == std::string_view::npos || dot == 0 || dot + 1 == rest.size())
        throw Error("parse", "bad face reference '" + std::string(s) + "'");
    f.cell = std::string(rest.substr(0, dot));
    f.label = std::string(rest.substr(dot + 1));
    if (f.kind == CellKind::Oct) OctFaceLabel::from_string(f.label); // validate
    return f;
}

std::vector<std::pair<std::string, std::string>> OctCell::identified_edge_pairs() {
    // Pulling the equatorials to the poles identifies these octahedron
    // edges pairwise.
    return {{"deq1-under", "deq2-under"}, {"ueq1-over", "ueq2-over"}};
}

namespace {

// The faces an arc picks up when entering or leaving an octahedron through
// a strand end. Each of the four strand ends owns one U face and one D
// face, and every face is owned exactly once; this is the labeling
// convention the pairing is built on.
OctFaceLabel oct_arc_face(PassageRole role, bool outgoing, Side side) {
    const bool over_strand = role == PassageRole::Over;
    OctFaceLabel l;
    l.side = side;
    if (side == Side::U) {
        // U faces by octant: (oi,ui)->over-in, (oo,uo)->over-out,
        //                    (oo,ui)->under-in, (oi,uo)->under-out
        if (over_strand) {
            l.over_out = outgoing;
            l.under_out = outgoing;
        } else {
            l.under_out = outgoing;
            l.over_out = !outgoing;
        }
    } else {
        // D faces by octant: (oi,uo)->over-in, (oo,ui)->over-out,
        //                    (oi,ui)->under-in, (oo,uo)->under-out
        if (over_strand) {
            l.over_out = outgoing;
            l.under_out = !outgoing;
        } else {
            l.under_out = outgoing;
            l.over_out = outgoing;
        }
    }
    return l;
}

struct Site {
    FaceRef::CellKind kind;
    std::string cell;      // crossing id or vertex id
    PassageRole role;      // Oct only
    std::string halfedge;  // Fin only

    FaceRef face(bool outgoing, Side side) const {
        if (kind == FaceRef::CellKind::Oct)
            return {kind, cell, oct_arc_face(role, outgoing, side).str()};
        return {kind, cell, halfedge + (side == Side::U ? "-U" : "-D")};
    }
};

void add_pair(std::map<FaceRef, FaceRef>& pairing, const FaceRef& a, const FaceRef& b) {
    if (pairing.count(a) || pairing.count(b))
        throw Error("invalid-decomposition", "face paired twice: " + a.str() + " / " + b.str());
    pairing[a] = b;
    pairing[b] = a;
}

void glue_consecutive(std::map<FaceRef, FaceRef>& pairing, const Site& from, const Site& to) {
    for (Side side : {Side::U, Side::D})
        add_pair(pairing, from.face(/*outgoing=*/true, side), to.face(/*outgoing=*/false, side));
}

} // namespace

OctComplex decompose(const GraphDiagram& d) {
    if (d.edges().empty())
        throw Error("invalid-diagram", "empty diagram: nothing to decompose");
    for (const auto& e : d.edges()) {
        if (e.is_loop && e.passages.empty())
            throw Error("degenerate-unknot",
                        "vertex-free link component '" + e.id +
                            "' has no crossings; the decomposition needs every component to "
                            "meet a crossing");
    }
    if (auto cycle = find_crossing_free_cycle(d)) {
        std::string edges;
        for (std::size_t i = 0; i < cycle->edge_ids.size(); ++i) {
            if (i) edges += " ";
            edges += cycle->edge_ids[i];
        }
        throw Error("crossing-free-cycle",
                    "cycle through edges [" + edges +
                        "] is involved in no crossings, so the graph exterior is not "
                        "hyperbolic and has no octahedral decomposition");
    }

    const VertexClassification classes = classify_vertices(d);

    // Component type per edge, for the strand apexes.
    std::map<std::string, VertexType> edge_component_type;
    for (const GraphComponent& comp : graph_components(d)) {
        for (const std::string& eid : comp.edge_ids)
            edge_component_type[eid] = classes.component_types.at(comp.key);
    }

    OctComplex complex;

    // Apex types: each crossing has one over and one under passage; the
    // apex carries the boundary class of the strand's graph component.
    std::map<std::string, VertexType> over_apex, under_apex;
    for (const auto& e : d.edges()) {
        for (const Passage& p : e.passages) {
            auto& slot = (p.role == PassageRole::Over) ? over_apex : under_apex;
            slot[p.crossing] = edge_component_type.at(e.id);
        }
    }
    for (const auto& c : d.crossings()) {
        OctCell cell;
        cell.crossing_id = c.id;
        cell.slot_types = {over_apex.at(c.id),   under_apex.at(c.id), classes.u_pole,
                           classes.u_pole,       classes.d_pole,      classes.d_pole};
        complex.mutable_octahedra().push_back(std::move(cell));
    }

    for (const auto& v : d.vertices()) {
        Starfruit s;
        s.vertex_id = v.id;
        s.fin_halfedges = v.halfedges;
        complex.mutable_starfruits().push_back(std::move(s));
    }

    // Walk each edge and glue consecutive sites, above and below.
    for (const auto& e : d.edges()) {
        std::vector<Site> sites;
        if (!e.is_loop)
            sites.push_back({FaceRef::CellKind::Fin, e.from.vertex, PassageRole::Over,
                             e.from.halfedge});
        for (const Passage& p : e.passages)
            sites.push_back({FaceRef::CellKind::Oct, p.crossing, p.role, {}});
        if (!e.is_loop)
            sites.push_back({FaceRef::CellKind::Fin, e.to.vertex, PassageRole::Over,
                             e.to.halfedge});

        if (e.is_loop) {
            for (std::size_t i = 0; i < sites.size(); ++i)
                glue_consecutive(complex.mutable_pairing(), sites[i],
                                 sites[(i + 1) % sites.size()]);
        } else {
            for (std::size_t i = 0; i + 1 < sites.size(); ++i)
                glue_consecutive(complex.mutable_pairing(), sites[i], sites[i + 1]);
        }
    }
    return complex;
}

namespace {

// A fin presents exactly two sides; gluing both to the same opposite fin is
// one chain link, not two. Collect one adjacency per unordered fin pair.
std::vector<std::pair<std::string, std::string>> fin_adjacencies(const OctComplex& c) {
    std::set<std::pair<FaceRef, FaceRef>> seen;
    std::vector<std::pair<std::string, std::string>> adj;
    for (const auto& [a, b] : c.pairing()) {
        if (a.kind != FaceRef::CellKind::Fin || b.kind != FaceRef::CellKind::Fin) continue;
        // strip the trailing "-U"/"-D" to identify the fin
        auto fin_of = [](const FaceRef& f) {
            FaceRef g = f;
            if (g.label.size() > 2) g.label = g.label.substr(0, g.label.size() - 2);
            return g;
        };
        FaceRef fa = fin_of(a), fb = fin_of(b);
        auto key = std::minmax(fa, fb);
        if (seen.insert({key.first, key.second}).second)
            adj.push_back({key.first.cell, key.second.cell});
    }
    return adj;
}

} // namespace

ValidationReport validate(const OctComplex& c) {
    ValidationReport r;
    auto fail = [&](std::string msg) {
        r.ok = false;
        r.findings.push_back(std::move(msg));
    };

    // Expected glueable faces.
    std::set<FaceRef> expected;
    std::set<std::string> oct_ids;
    for (const OctCell& cell : c.octahedra()) {
        if (!oct_ids.insert(cell.crossing_id).second)
            fail("duplicate octahedron '" + cell.crossing_id + "'");
        for (Side side : {Side::U, Side::D})
            for (bool oo : {false, true})
                for (bool uo : {false, true})
                    expected.insert({FaceRef::CellKind::Oct, cell.crossing_id,
                                     OctFaceLabel{side, oo, uo}.str()});
    }
    std::set<std::string> star_ids;
    for (const Starfruit& s : c.starfruits()) {
        if (!star_ids.insert(s.vertex_id).second)
            fail("duplicate starfruit '" + s.vertex_id + "'");
        std::set<std::string> fins(s.fin_halfedges.begin(), s.fin_halfedges.end());
        if (fins.size() != s.fin_halfedges.size())
            fail("starfruit '" + s.vertex_id + "' repeats a fin half-edge");
        for (const std::string& h : s.fin_halfedges)
            for (const char* side : {"-U", "-D"})
                expected.insert({FaceRef::CellKind::Fin, s.vertex_id, h + side});
    }

    // Involution without fixed points, covering exactly the expected faces.
    std::set<FaceRef> covered;
    for (const auto& [a, b] : c.pairing()) {
        if (a == b) fail("pairing fixes face " + a.str());
        auto it = c.pairing().find(b);
        if (it == c.pairing().end() || !(it->second == a))
            fail("pairing is not an involution at " + a.str());
        if (!expected.count(a)) fail("pairing references unknown face " + a.str());
        covered.insert(a);
    }
    for (const FaceRef& f : expected)
        if (!covered.count(f)) fail("unpaired face " + f.str());
    for (const FaceRef& f : covered)
        if (!expected.count(f)) fail("pairing covers unexpected face " + f.str());

    // Equatorial tags must agree with a single global U class and D class.
    std::set<VertexType> u_types, d_types;
    for (const OctCell& cell : c.octahedra()) {
        if (cell.slot_types[2] != cell.slot_types[3])
            fail("octahedron '" + cell.crossing_id + "' has mismatched U-equatorial tags");
        if (cell.slot_types[4] != cell.slot_types[5])
            fail("octahedron '" + cell.crossing_id + "' has mismatched D-equatorial tags");
        u_types.insert(cell.slot_types[2]);
        d_types.insert(cell.slot_types[4]);
    }
    if (u_types.size() > 1) fail("U-equatorial tags differ between octahedra");
    if (d_types.size() > 1) fail("D-equatorial tags differ between octahedra");

    // No closed chain of fin-to-fin gluings without an intervening
    // octahedron: the fin adjacency multigraph on starfruits must be a
    // forest.
    {
        const auto adj = fin_adjacencies(c);
        std::map<std::string, int> index;
        for (const auto& [a, b] : adj) {
            index.emplace(a, static_cast<int>(index.size()));
            index.emplace(b, static_cast<int>(index.size()));
        }
        std::vector<int> parent(index.size());
        for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& [a, b] : adj) {
            int ra = find(index[a]), rb = find(index[b]);
            if (ra == rb) {
                fail("pure fin cycle: fin-to-fin gluings close up through starfruits '" + a +
                     "' and '" + b + "' with no octahedra involved");
            } else {
                parent[ra] = rb;
            }
        }
    }

    return r;
}

std::string export_complex(const OctComplex& c) {
    std::vector<const OctCell*> octs;
    for (const auto& o : c.octahedra()) octs.push_back(&o);
    std::sort(octs.begin(), octs.end(),
              [](auto* a, auto* b) { return a->crossing_id < b->crossing_id; });
    std::vector<const Starfruit*> stars;
    for (const auto& s : c.starfruits()) stars.push_back(&s);
    std::sort(stars.begin(), stars.end(),
              [](auto* a, auto* b) { return a->vertex_id < b->vertex_id; });

    std::ostringstream os;
    for (const OctCell* o : octs) {
        os << "oct " << o->crossing_id << " types=";
        for (std::size_t i = 0; i < o->slot_types.size(); ++i) {
            if (i) os << ",";
            os << to_string(o->slot_types[i]);
        }
        os << "\n";
    }
    for (const Starfruit* s : stars) {
        os << "starfruit " << s->vertex_id << " fins=" << s->fin_halfedges.size() << " order=";
        for (std::size_t i = 0; i < s->fin_halfedges.size(); ++i) {
            if (i) os << ",";
            os << s->fin_halfedges[i];
        }
        os << "\n";
    }
    std::set<std::pair<FaceRef, FaceRef>> pairs;
    for (const auto& [a, b] : c.pairing()) pairs.insert(std::minmax(a, b));
    for (const auto& [a, b] : pairs) os << "pair " << a.str() << " " << b.str() << "\n";
    return os.str();
}

OctComplex parse_complex(std::string_view text) {
    OctComplex c;
    std::istringstream input{std::string(text)};
    std::string line;
    int line_no = 0;

    auto split_commas = [](const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        for (char ch : s) {
            if (ch == ',') {
                out.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        out.push_back(cur);
        return out;
    };

    while (std::getline(input, line)) {
        ++line_no;
        std::istringstream is(line);
        std::string kw;
        if (!(is >> kw)) continue;
        if (kw[0] == '#') continue;
        if (kw == "oct") {
            std::string id, types;
            if (!(is >> id >> types) || types.rfind("types=", 0) != 0)
                throw ParseError("expected 'oct <id> types=<t1,...,t6>'", line_no);
            const auto parts = split_commas(types.substr(6));
            if (parts.size() != 6) throw ParseError("octahedron needs 6 slot types", line_no);
            OctCell cell;
            cell.crossing_id = id;
            for (int i = 0; i < 6; ++i) cell.slot_types[i] = vertex_type_from_string(parts[i]);
            c.mutable_octahedra().push_back(std::move(cell));
        } else if (kw == "starfruit") {
            std::string id, fins, order;
            if (!(is >> id >> fins >> order) || fins.rfind("fins=", 0) != 0 ||
                order.rfind("order=", 0) != 0)
                throw ParseError("expected 'starfruit <id> fins=<r> order=<h1,...>'", line_no);
            Starfruit s;
            s.vertex_id = id;
            s.fin_halfedges = split_commas(order.substr(6));
            if (std::to_string(s.fin_halfedges.size()) != fins.substr(5))
                throw ParseError("fin count does not match the fin order list", line_no);
            c.mutable_starfruits().push_back(std::move(s));
        } else if (kw == "pair") {
            std::string a, b;
            if (!(is >> a >> b)) throw ParseError("expected 'pair <face> <face>'", line_no);
            const FaceRef fa = FaceRef::from_string(a);
            const FaceRef fb = FaceRef::from_string(b);
            if (c.mutable_pairing().count(fa) || c.mutable_pairing().count(fb))
                throw ParseError("face paired twice", line_no);
            c.mutable_pairing()[fa] = fb;
            c.mutable_pairing()[fb] = fa;
        } else {
            throw ParseError("unknown directive '" + kw + "'", line_no);
        }
    }
    return c;
}

} // namespace graphvol
