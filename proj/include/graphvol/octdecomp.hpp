#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "graphvol/diagram.hpp"

namespace graphvol {

// Generalized octahedral decomposition of a spatial-graph exterior: one
// octahedron per crossing, one starfruit (a cycle of fins) per graph vertex,
// with a face pairing built by walking the diagram edges.
//
// Octahedron anatomy: one apex on the overstrand, one on the understrand,
// two equatorial vertices pulled up to the pole U, two pulled down to the
// pole D. The two edges from the D-equatorials to the under apex are
// identified, as are the two from the U-equatorials to the over apex. The
// eight faces are labeled by (U|D side, over-strand in|out, under-strand
// in|out) octants; which faces a strand arc picks up is a convention fixed
// here, chosen so the pairing is a perfect matching that follows passage
// order along every edge.

enum class Side { U, D };

struct OctFaceLabel {
    Side side;
    bool over_out;  // octant along the overstrand: in (false) or out (true)
    bool under_out; // octant along the understrand

    std::string str() const; // e.g. "U-oi-uo"
    static OctFaceLabel from_string(std::string_view s);
    friend auto operator<=>(const OctFaceLabel&, const OctFaceLabel&) = default;
};

// One glueable triangle: an octahedron face or a fin side.
struct FaceRef {
    enum class CellKind { Oct, Fin };

    CellKind kind;
    std::string cell;  // crossing id (Oct) or vertex id (Fin)
    std::string label; // OctFaceLabel text, or "<halfedge>-U|D" for fins

    std::string str() const; // "oct:<cell>.<label>" / "fin:<cell>.<label>"
    static FaceRef from_string(std::string_view s);
    friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

struct OctCell {
    std::string crossing_id;
    // Slot order: over apex, under apex, two U-equatorials, two D-equatorials.
    std::array<VertexType, 6> slot_types;

    // The identified edge pairs required by the construction, as stable
    // edge labels within this cell.
    static std::vector<std::pair<std::string, std::string>> identified_edge_pairs();

    friend bool operator==(const OctCell&, const OctCell&) = default;
};

struct Starfruit {
    std::string vertex_id;
    std::vector<std::string> fin_halfedges; // rotation order; one fin per half-edge

    friend bool operator==(const Starfruit&, const Starfruit&) = default;
};

class OctComplex {
public:
    const std::vector<OctCell>& octahedra() const { return octahedra_; }
    const std::vector<Starfruit>& starfruits() const { return starfruits_; }
    const std::map<FaceRef, FaceRef>& pairing() const { return pairing_; }

    friend bool operator==(const OctComplex&, const OctComplex&) = default;

    // Construction intentionally open: validate() audits arbitrary
    // hand-built complexes, not only decompose() output.
    std::vector<OctCell>& mutable_octahedra() { return octahedra_; }
    std::vector<Starfruit>& mutable_starfruits() { return starfruits_; }
    std::map<FaceRef, FaceRef>& mutable_pairing() { return pairing_; }

private:
    std::vector<OctCell> octahedra_;
    std::vector<Starfruit> starfruits_;
    std::map<FaceRef, FaceRef> pairing_;
};

// Builds the decomposition. Requires a valid diagram whose every cycle
// carries a crossing; throws Error("crossing-free-cycle") otherwise (such
// exteriors are not hyperbolic) and Error("degenerate-unknot") for a
// vertex-free link component with no crossings.
OctComplex decompose(const GraphDiagram& d);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> findings;
};

// Structural audit: the pairing must be a fixed-point-free involution
// covering every glueable face exactly once, equatorial type tags must be
// uniform, and no closed chain of fin-to-fin gluings may avoid the
// octahedra.
ValidationReport validate(const OctComplex& c);

// Deterministic text form; parse_complex(export_complex(c)) == c.
std::string export_complex(const OctComplex& c);
OctComplex parse_complex(std::string_view text);

} // namespace graphvol
