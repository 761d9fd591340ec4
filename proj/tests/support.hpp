#pragma once

// Shared helpers for the test binaries. Header-only, framework-free.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "graphvol/diagram.hpp"

namespace testsupport {

inline std::string fixture(const std::string& name) {
    return std::string(GRAPHVOL_TEST_DATA) + "/fixtures/" + name;
}

// Exhaustive reference for find_crossing_free_cycle: checks passage-free
// loop edges and self-loops directly, then enumerates all subsets of the
// remaining passage-free edges looking for a connected 2-regular subgraph.
// Intended for diagrams with at most ~6 edges.
inline bool brute_force_has_crossing_free_cycle(const graphvol::GraphDiagram& d) {
    using graphvol::DiagramEdge;
    std::vector<const DiagramEdge*> free_edges;
    for (const auto& e : d.edges()) {
        if (!e.passages.empty()) continue;
        if (e.is_loop) return true;
        if (e.from.vertex == e.to.vertex) return true;
        free_edges.push_back(&e);
    }
    const std::size_t n = free_edges.size();
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
        std::map<std::string, int> degree;
        std::vector<const DiagramEdge*> chosen;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) {
                chosen.push_back(free_edges[i]);
                ++degree[free_edges[i]->from.vertex];
                ++degree[free_edges[i]->to.vertex];
            }
        bool all_two = true;
        for (const auto& [v, deg] : degree) all_two = all_two && deg == 2;
        if (!all_two || chosen.empty()) continue;
        std::set<std::string> seen{chosen[0]->from.vertex};
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto* e : chosen) {
                const bool f = seen.count(e->from.vertex) > 0;
                const bool t = seen.count(e->to.vertex) > 0;
                if (f != t) {
                    seen.insert(f ? e->to.vertex : e->from.vertex);
                    grew = true;
                }
            }
        }
        bool connected = true;
        for (const auto& [v, deg] : degree) connected = connected && seen.count(v) > 0;
        if (connected) return true;
    }
    return false;
}

} // namespace testsupport
