#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphvol/errors.hpp"

namespace graphvol {

// Where the spatial graph lives: the 3-sphere or a thickened compact
// orientable surface F x I.
struct AmbientSpace {
    enum class Kind { S3, ThickenedSurface };

    Kind kind = Kind::S3;
    int genus = 0;
    int boundary_components = 0;

    static AmbientSpace s3() { return {Kind::S3, 0, 0}; }
    static AmbientSpace thickened(int genus, int boundary_components);

    // chi(F) = 2 - 2g - b for the thickened surface.
    int euler_characteristic() const;
    bool is_annulus_or_torus() const;
    std::string str() const;

    friend bool operator==(const AmbientSpace&, const AmbientSpace&) = default;
};

enum class PassageRole { Over, Under };

struct Passage {
    std::string crossing;
    PassageRole role;
    friend bool operator==(const Passage&, const Passage&) = default;
};

struct DiagramVertex {
    std::string id;
    std::vector<std::string> halfedges; // rotation system, cyclic order as listed
};

struct EdgeEndpoint {
    std::string vertex;
    std::string halfedge;
};

struct DiagramEdge {
    std::string id;
    bool is_loop = false;            // closed link component with no endpoints
    EdgeEndpoint from;               // unused when is_loop
    EdgeEndpoint to;
    std::vector<Passage> passages;   // ordered along the edge
};

struct DiagramCrossing {
    std::string id;
};

// A spatial-graph diagram. Immutable once parsed; parse() validates the
// structural invariants (crossings carry exactly one over and one under
// passage, rotation slots match edge endpoints, non-loop vertices have
// degree >= 3).
class GraphDiagram {
public:
    const AmbientSpace& ambient() const { return ambient_; }
    const std::vector<DiagramVertex>& vertices() const { return vertices_; }
    const std::vector<DiagramEdge>& edges() const { return edges_; }
    const std::vector<DiagramCrossing>& crossings() const { return crossings_; }

    const DiagramVertex& vertex(const std::string& id) const;
    const DiagramEdge& edge(const std::string& id) const;
    int vertex_degree(const std::string& id) const;

    friend GraphDiagram parse_diagram(std::string_view text);

private:
    AmbientSpace ambient_;
    std::vector<DiagramVertex> vertices_;   // sorted by id
    std::vector<DiagramEdge> edges_;        // sorted by id
    std::vector<DiagramCrossing> crossings_; // sorted by id
};

GraphDiagram parse_diagram(std::string_view text);
GraphDiagram load_diagram(const std::string& path);

// Deterministic re-serialization; parse(serialize(d)) == d.
std::string serialize(const GraphDiagram& d);

// Number of crossings in this diagram. An upper bound for the minimal
// crossing number of the underlying spatial graph.
int crossing_count(const GraphDiagram& d);

// A cycle in the underlying multigraph all of whose edges carry no
// passages. Oriented edge list; single loop or parallel-edge cycles are
// reported with the corresponding one or two edges.
struct CycleWitness {
    std::vector<std::string> edge_ids;
    std::vector<std::string> vertex_ids; // visited vertices (empty for a loop edge)
};

std::optional<CycleWitness> find_crossing_free_cycle(const GraphDiagram& d);

// Connected component of the underlying graph. A vertex-free link component
// is a single closed loop edge.
struct GraphComponent {
    std::string key; // smallest member id, prefixed "v:" or "loop:"
    bool vertex_free_link = false;
    std::vector<std::string> vertex_ids;
    std::vector<std::string> edge_ids;
};

std::vector<GraphComponent> graph_components(const GraphDiagram& d);

enum class VertexType { Finite, Ideal, Hyperideal };

std::string to_string(VertexType t);
VertexType vertex_type_from_string(std::string_view s);

// Types of the decomposition vertex classes: the two projection poles U and
// D, plus one class per graph component (carried by the octahedron apexes on
// that component's strands).
struct VertexClassification {
    VertexType u_pole;
    VertexType d_pole;
    std::map<std::string, VertexType> component_types; // by component key
};

VertexClassification classify_vertices(const GraphDiagram& d);

// Validity/obstruction summary for CLI `check`.
struct DiagramReport {
    bool valid = true;
    int crossing_count = 0;
    std::vector<std::string> obstructions;
    std::vector<std::string> component_summary;
};

DiagramReport check_diagram(const GraphDiagram& d);

} // namespace graphvol
