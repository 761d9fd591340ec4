#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "graphvol/octdecomp.hpp"
#include "support.hpp"

using namespace graphvol;
using testsupport::fixture;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("trefoil decomposition counts") {
    const OctComplex c = decompose(load_diagram(fixture("trefoil.graph")));
    CHECK(c.octahedra().size() == 3);
    CHECK(c.starfruits().empty());
    CHECK(c.pairing().size() == 24); // 24 faces in 12 pairs

    const ValidationReport v = validate(c);
    CAPTURE(v.findings);
    CHECK(v.ok);

    for (const OctCell& cell : c.octahedra()) {
        CHECK(cell.slot_types[0] == VertexType::Ideal); // apexes on a link component
        CHECK(cell.slot_types[1] == VertexType::Ideal);
        CHECK(cell.slot_types[2] == VertexType::Finite); // poles in S^3
        CHECK(cell.slot_types[4] == VertexType::Finite);
    }
}

TEST_CASE("theta decomposition counts and fin bookkeeping") {
    const GraphDiagram d = load_diagram(fixture("theta_crossed.graph"));
    const OctComplex c = decompose(d);
    CHECK(c.octahedra().size() == 3);
    REQUIRE(c.starfruits().size() == 2);
    std::size_t fins = 0;
    for (const Starfruit& s : c.starfruits()) {
        CHECK(s.fin_halfedges.size() == 3); // valency of each theta vertex
        fins += s.fin_halfedges.size();
    }
    CHECK(fins == 6);
    // total glueable faces: 8 per octahedron + 2 per fin
    CHECK(c.pairing().size() == 8 * 3 + 2 * 6);
    CHECK(validate(c).ok);
}

TEST_CASE("gluing walks follow the passage order along each edge") {
    const GraphDiagram d = load_diagram(fixture("theta_crossed.graph"));
    const OctComplex c = decompose(d);
    // walk edge e1: fin(v1.a1) -> c1(over) -> c3(under) -> fin(v2.b1)
    const auto& pairing = c.pairing();
    auto expect_pair = [&](const std::string& a, const std::string& b) {
        const FaceRef fa = FaceRef::from_string(a);
        REQUIRE(pairing.count(fa));
        CHECK(pairing.at(fa).str() == b);
    };
    expect_pair("fin:v1.a1-U", "oct:c1.U-oi-ui");  // entering c1 along its overstrand
    expect_pair("oct:c1.U-oo-uo", "oct:c3.U-oo-ui"); // c1 over-out to c3 under-in, above
    expect_pair("oct:c1.D-oo-ui", "oct:c3.D-oi-ui"); // same hop, below
    expect_pair("oct:c3.U-oi-uo", "fin:v2.b1-U");  // leaving c3 along its understrand
}

TEST_CASE("decompose rejects crossing-free cycles with the non-hyperbolicity obstruction") {
    try {
        decompose(load_diagram(fixture("flat_theta.graph")));
        FAIL("expected crossing-free-cycle error");
    } catch (const Error& e) {
        CHECK(e.code() == "crossing-free-cycle");
        CHECK(std::string(e.what()).find("not hyperbolic") != std::string::npos);
    }
}

TEST_CASE("decompose rejects a crossingless unknot component") {
    const char* unknot = "ambient s3\nedge e1 loop\n";
    try {
        decompose(parse_diagram(unknot));
        FAIL("expected degenerate-unknot error");
    } catch (const Error& e) {
        CHECK(e.code() == "degenerate-unknot");
    }
}

TEST_CASE("decompose rejects an empty diagram, so exports list at least one cell") {
    CHECK_THROWS_AS(decompose(parse_diagram("ambient s3\n")), Error);
    // any complex that reaches export has a cell
    const OctComplex c = decompose(load_diagram(fixture("annulus_link.graph")));
    CHECK(!c.octahedra().empty());
    CHECK(!export_complex(c).empty());
}

TEST_CASE("validation catches an unpaired face") {
    OctComplex c = decompose(load_diagram(fixture("trefoil.graph")));
    auto& pairing = c.mutable_pairing();
    const FaceRef a = pairing.begin()->first;
    const FaceRef b = pairing.begin()->second;
    pairing.erase(a);
    pairing.erase(b);
    const ValidationReport v = validate(c);
    CHECK_FALSE(v.ok);
    bool mentions_unpaired = false;
    for (const auto& f : v.findings)
        mentions_unpaired = mentions_unpaired || f.find("unpaired") != std::string::npos;
    CHECK(mentions_unpaired);
}

TEST_CASE("validation catches a non-involutive pairing") {
    OctComplex c = decompose(load_diagram(fixture("trefoil.graph")));
    auto& pairing = c.mutable_pairing();
    auto it = pairing.begin();
    const FaceRef a = it->first;
    ++it;
    pairing[a] = it->first; // break the involution
    CHECK_FALSE(validate(c).ok);
}

TEST_CASE("validation catches a pure fin cycle") {
    // Hand-built complex: two starfruits whose fins glue to each other along
    // two parallel crossing-free edges, closing a fin cycle with no
    // octahedra.
    OctComplex c;
    c.mutable_starfruits().push_back({"v1", {"h1", "h2"}});
    c.mutable_starfruits().push_back({"v2", {"k1", "k2"}});
    auto pair = [&](const std::string& a, const std::string& b) {
        const FaceRef fa = FaceRef::from_string(a);
        const FaceRef fb = FaceRef::from_string(b);
        c.mutable_pairing()[fa] = fb;
        c.mutable_pairing()[fb] = fa;
    };
    pair("fin:v1.h1-U", "fin:v2.k1-U");
    pair("fin:v1.h1-D", "fin:v2.k1-D");
    pair("fin:v1.h2-U", "fin:v2.k2-U");
    pair("fin:v1.h2-D", "fin:v2.k2-D");

    const ValidationReport v = validate(c);
    CHECK_FALSE(v.ok);
    bool mentions_fin_cycle = false;
    for (const auto& f : v.findings)
        mentions_fin_cycle = mentions_fin_cycle || f.find("fin cycle") != std::string::npos;
    CHECK(mentions_fin_cycle);
}

TEST_CASE("a single fin-to-fin bridge is not a fin cycle") {
    // One crossing-free edge between two vertices is allowed; only closed
    // chains are obstructions.
    OctComplex c;
    c.mutable_starfruits().push_back({"v1", {"h1"}});
    c.mutable_starfruits().push_back({"v2", {"k1"}});
    const FaceRef a = FaceRef::from_string("fin:v1.h1-U");
    const FaceRef b = FaceRef::from_string("fin:v2.k1-U");
    const FaceRef a2 = FaceRef::from_string("fin:v1.h1-D");
    const FaceRef b2 = FaceRef::from_string("fin:v2.k1-D");
    c.mutable_pairing()[a] = b;
    c.mutable_pairing()[b] = a;
    c.mutable_pairing()[a2] = b2;
    c.mutable_pairing()[b2] = a2;
    const ValidationReport v = validate(c);
    CAPTURE(v.findings);
    CHECK(v.ok);
}

TEST_CASE("export matches the audited golden file and parses back") {
    const OctComplex c = decompose(load_diagram(fixture("trefoil.graph")));
    const std::string exported = export_complex(c);
    CHECK(exported == read_file(std::string(GRAPHVOL_TEST_DATA) + "/golden/trefoil_complex.txt"));

    const OctComplex re = parse_complex(exported);
    CHECK(re == c);
    CHECK(export_complex(re) == exported);
}

TEST_CASE("export is deterministic across runs") {
    const std::string path = fixture("mixed_genus2.graph");
    const std::string a = export_complex(decompose(load_diagram(path)));
    const std::string b = export_complex(decompose(load_diagram(path)));
    CHECK(a == b);
    CHECK(!a.empty());
}

TEST_CASE("mixed ambient decomposition carries per-component apex types") {
    const OctComplex c = decompose(load_diagram(fixture("mixed_genus2.graph")));
    std::map<std::string, const OctCell*> by_id;
    for (const OctCell& cell : c.octahedra()) by_id[cell.crossing_id] = &cell;
    // c1..c3 lie on the theta component (hyperideal); d1..d3 on the link
    // component (ideal); poles are hyperideal in a thickened genus-2 surface
    CHECK(by_id.at("c1")->slot_types[0] == VertexType::Hyperideal);
    CHECK(by_id.at("d1")->slot_types[0] == VertexType::Ideal);
    CHECK(by_id.at("d1")->slot_types[2] == VertexType::Hyperideal);
    CHECK(validate(c).ok);
}

TEST_CASE("octahedron cell counts match the diagram") {
    for (const char* name :
         {"trefoil.graph", "theta_crossed.graph", "two_trefoils.graph", "genus2_seven.graph",
          "four_valent_six.graph", "mixed_genus2.graph", "annulus_link.graph"}) {
        CAPTURE(name);
        const GraphDiagram d = load_diagram(fixture(name));
        const OctComplex c = decompose(d);
        CHECK(c.octahedra().size() == static_cast<std::size_t>(crossing_count(d)));
        CHECK(c.starfruits().size() == d.vertices().size());
        std::size_t fins = 0;
        for (const Starfruit& s : c.starfruits()) fins += s.fin_halfedges.size();
        std::size_t valencies = 0;
        for (const auto& v : d.vertices()) valencies += v.halfedges.size();
        CHECK(fins == valencies);
        CHECK(validate(c).ok);
        // every glueable face paired exactly once, and evenly many of them
        CHECK(c.pairing().size() == 8 * c.octahedra().size() + 2 * fins);
        CHECK(c.pairing().size() % 2 == 0);
    }
}

namespace {

// Decode of the face-ownership convention, used to walk the pairing: which
// (role, direction) arc end owns a given U-side octahedron face.
std::pair<PassageRole, bool> arc_end_of_u_face(const OctFaceLabel& l) {
    REQUIRE(l.side == Side::U);
    if (!l.over_out && !l.under_out) return {PassageRole::Over, false};  // (oi,ui) over-in
    if (l.over_out && l.under_out) return {PassageRole::Over, true};    // (oo,uo) over-out
    if (l.over_out && !l.under_out) return {PassageRole::Under, false}; // (oo,ui) under-in
    return {PassageRole::Under, true};                                  // (oi,uo) under-out
}

std::string u_face_of_arc_end(PassageRole role, bool outgoing) {
    OctFaceLabel l;
    l.side = Side::U;
    if (role == PassageRole::Over) {
        l.over_out = outgoing;
        l.under_out = outgoing;
    } else {
        l.under_out = outgoing;
        l.over_out = !outgoing;
    }
    return l.str();
}

// Follow the U-side pairing along one edge and collect the (crossing, role)
// passages it traverses.
std::vector<Passage> walk_edge_u_side(const OctComplex& c, const DiagramEdge& e) {
    const auto& pairing = c.pairing();
    std::vector<Passage> seen;
    FaceRef cursor;
    if (e.is_loop) {
        if (e.passages.empty()) return seen;
        // start just after the first passage's entry
        seen.push_back(e.passages.front());
        cursor = {FaceRef::CellKind::Oct, e.passages.front().crossing,
                  u_face_of_arc_end(e.passages.front().role, true)};
        for (std::size_t hops = 1; hops < e.passages.size(); ++hops) {
            const FaceRef next = pairing.at(cursor);
            REQUIRE(next.kind == FaceRef::CellKind::Oct);
            const auto [role, outgoing] = arc_end_of_u_face(OctFaceLabel::from_string(next.label));
            REQUIRE_FALSE(outgoing);
            seen.push_back({next.cell, role});
            cursor = {FaceRef::CellKind::Oct, next.cell, u_face_of_arc_end(role, true)};
        }
        // closing hop returns to the first passage's entry face
        const FaceRef wrap = pairing.at(cursor);
        CHECK(wrap.str() == "oct:" + e.passages.front().crossing + "." +
                                u_face_of_arc_end(e.passages.front().role, false));
        return seen;
    }

    cursor = {FaceRef::CellKind::Fin, e.from.vertex, e.from.halfedge + "-U"};
    for (;;) {
        const FaceRef next = pairing.at(cursor);
        if (next.kind == FaceRef::CellKind::Fin) {
            CHECK(next.cell == e.to.vertex);
            CHECK(next.label == e.to.halfedge + "-U");
            break;
        }
        const auto [role, outgoing] = arc_end_of_u_face(OctFaceLabel::from_string(next.label));
        REQUIRE_FALSE(outgoing); // arcs enter octahedra through in-ends
        seen.push_back({next.cell, role});
        cursor = {FaceRef::CellKind::Oct, next.cell, u_face_of_arc_end(role, true)};
    }
    return seen;
}

} // namespace

TEST_CASE("walking the pairing along every edge reproduces its passage sequence") {
    for (const char* name :
         {"trefoil.graph", "theta_crossed.graph", "two_trefoils.graph", "genus2_seven.graph",
          "four_valent_six.graph", "mixed_genus2.graph", "annulus_link.graph",
          "theta_crossed_genus2.graph"}) {
        CAPTURE(name);
        const GraphDiagram d = load_diagram(fixture(name));
        const OctComplex c = decompose(d);
        for (const DiagramEdge& e : d.edges()) {
            CAPTURE(e.id);
            const std::vector<Passage> walked = walk_edge_u_side(c, e);
            CHECK(walked == e.passages);
        }
    }
}

TEST_CASE("cell vertex tags agree with classify_vertices on every fixture") {
    for (const char* name :
         {"trefoil.graph", "theta_crossed.graph", "two_trefoils.graph", "genus2_seven.graph",
          "four_valent_six.graph", "mixed_genus2.graph", "annulus_link.graph",
          "theta_crossed_genus2.graph"}) {
        CAPTURE(name);
        const GraphDiagram d = load_diagram(fixture(name));
        const VertexClassification cls = classify_vertices(d);
        std::map<std::string, std::string> edge_component;
        for (const GraphComponent& comp : graph_components(d))
            for (const std::string& eid : comp.edge_ids) edge_component[eid] = comp.key;
        std::map<std::string, VertexType> over_type, under_type;
        for (const DiagramEdge& e : d.edges())
            for (const Passage& p : e.passages) {
                auto& slot = p.role == PassageRole::Over ? over_type : under_type;
                slot[p.crossing] = cls.component_types.at(edge_component.at(e.id));
            }
        const OctComplex c = decompose(d);
        for (const OctCell& cell : c.octahedra()) {
            CAPTURE(cell.crossing_id);
            CHECK(cell.slot_types[0] == over_type.at(cell.crossing_id));
            CHECK(cell.slot_types[1] == under_type.at(cell.crossing_id));
            CHECK(cell.slot_types[2] == cls.u_pole);
            CHECK(cell.slot_types[3] == cls.u_pole);
            CHECK(cell.slot_types[4] == cls.d_pole);
            CHECK(cell.slot_types[5] == cls.d_pole);
        }
    }
}

TEST_CASE("face labels and refs round-trip") {
    for (const char* label : {"U-oi-ui", "U-oo-uo", "D-oi-uo", "D-oo-ui"})
        CHECK(OctFaceLabel::from_string(label).str() == label);
    CHECK_THROWS_AS(OctFaceLabel::from_string("U-xx-yy"), Error);

    const FaceRef f = FaceRef::from_string("oct:c1.U-oi-ui");
    CHECK(f.kind == FaceRef::CellKind::Oct);
    CHECK(f.cell == "c1");
    CHECK(f.str() == "oct:c1.U-oi-ui");
    CHECK_THROWS_AS(FaceRef::from_string("nope:c1.U-oi-ui"), Error);

    const std::vector<std::pair<std::string, std::string>> ids =
        OctCell::identified_edge_pairs();
    CHECK(ids.size() == 2);
}
