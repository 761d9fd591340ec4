#pragma once

#include <span>
#include <string>
#include <vector>

#include "graphvol/word.hpp"

namespace graphvol {

// Folded core graph of a finitely generated subgroup of a free group
// (Stallings graph). Vertex 0 is the base vertex. Edges are directed and
// labeled: src --generator--> dst. The graph is connected, folded (no vertex
// has two outgoing or two incoming edges with the same label) and core
// (every non-base vertex has degree >= 2), and vertices are relabeled by a
// breadth-first traversal from the base so equal subgroup inputs produce
// identical graphs.
class SubgroupGraph {
public:
    struct Edge {
        int src;
        int dst;
        char generator;
        friend bool operator==(const Edge&, const Edge&) = default;
        friend auto operator<=>(const Edge&, const Edge&) = default;
    };

    int vertex_count() const { return vertex_count_; }
    static constexpr int base() { return 0; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Alphabet& alphabet() const { return alphabet_; }

    // First Betti number E - V + 1; equals the rank of the subgroup.
    int rank() const;

    bool is_folded() const;
    bool is_connected() const;
    bool is_core() const;

    std::string str() const;

    friend bool operator==(const SubgroupGraph&, const SubgroupGraph&) = default;

private:
    friend SubgroupGraph fold(std::span<const Word>, const Alphabet&);

    explicit SubgroupGraph(const Alphabet& alphabet) : alphabet_(alphabet) {}

    int vertex_count_ = 1;
    std::vector<Edge> edges_;
    Alphabet alphabet_;
};

// Stallings folding: wedge the generating loops at the base vertex, fold to
// a fixed point, trim to the core, canonicalize. Deterministic for a fixed
// input order.
SubgroupGraph fold(std::span<const Word> generators, const Alphabet& alphabet);

inline int rank(const SubgroupGraph& g) { return g.rank(); }

// True iff the homomorphism from the rank-k free group sending the i-th
// basis element to images[i] is injective. Free groups are Hopfian, so this
// holds exactly when the images generate a subgroup of rank k.
bool verify_injectivity(std::span<const Word> images, const Alphabet& alphabet);

} // namespace graphvol
