#include "graphvol/subgroup_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace graphvol {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    }

    // Keeps the smaller representative so the base vertex 0 survives merges.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[b] = a;
        return true;
    }
};

struct RawEdge {
    int src;
    int dst;
    char gen;
};

} // namespace

int SubgroupGraph::rank() const {
    return static_cast<int>(edges_.size()) - vertex_count_ + 1;
}

bool SubgroupGraph::is_folded() const {
    std::set<std::pair<int, char>> out, in;
    for (const Edge& e : edges_) {
        if (!out.insert({e.src, e.generator}).second) return false;
        if (!in.insert({e.dst, e.generator}).second) return false;
    }
    return true;
}

bool SubgroupGraph::is_connected() const {
    std::vector<std::vector<int>> adj(vertex_count_);
    for (const Edge& e : edges_) {
        adj[e.src].push_back(e.dst);
        adj[e.dst].push_back(e.src);
    }
    std::vector<bool> seen(vertex_count_, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int visited = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++visited;
                q.push(w);
            }
    }
    return visited == vertex_count_;
}

bool SubgroupGraph::is_core() const {
    std::vector<int> degree(vertex_count_, 0);
    for (const Edge& e : edges_) {
        ++degree[e.src];
        ++degree[e.dst];
    }
    for (int v = 1; v < vertex_count_; ++v)
        if (degree[v] < 2) return false;
    return true;
}

std::string SubgroupGraph::str() const {
    std::ostringstream os;
    os << "vertices " << vertex_count_ << "\n";
    for (const Edge& e : edges_)
        os << e.src << " -" << e.generator << "-> " << e.dst << "\n";
    return os.str();
}

SubgroupGraph fold(std::span<const Word> generators, const Alphabet& alphabet) {
    // Bouquet of loops at the base vertex, one loop per generator word.
    std::vector<RawEdge> edges;
    int next_vertex = 1;
    for (const Word& w : generators) {
        for (Letter l : w.letters())
            if (!alphabet.contains(l.generator))
                throw Error("unknown-generator",
                            std::string("generator '") + l.generator + "' is not in the alphabet");
        if (w.empty()) continue;
        int prev = 0;
        const auto& ls = w.letters();
        for (std::size_t i = 0; i < ls.size(); ++i) {
            int next = (i + 1 == ls.size()) ? 0 : next_vertex++;
            if (ls[i].sign > 0)
                edges.push_back({prev, next, ls[i].generator});
            else
                edges.push_back({next, prev, ls[i].generator});
            prev = next;
        }
    }

    UnionFind uf(next_vertex);

    // Fold to a fixed point: merge targets of equal-labeled edges leaving a
    // common vertex, and sources of equal-labeled edges entering one.
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::pair<int, char>, int> out, in;
        for (const RawEdge& e : edges) {
            int s = uf.find(e.src);
            int d = uf.find(e.dst);
            auto [oit, onew] = out.try_emplace({s, e.gen}, d);
            if (!onew && uf.find(oit->second) != d) {
                uf.unite(oit->second, d);
                changed = true;
                break;
            }
            auto [iit, inew] = in.try_emplace({d, e.gen}, s);
            if (!inew && uf.find(iit->second) != s) {
                uf.unite(iit->second, s);
                changed = true;
                break;
            }
        }
    }

    // Quotient graph with parallel duplicates collapsed.
    std::set<std::tuple<int, int, char>> quotient;
    for (const RawEdge& e : edges)
        quotient.insert({uf.find(e.src), uf.find(e.dst), e.gen});

    std::set<int> vertices{uf.find(0)};
    for (const auto& [s, d, g] : quotient) {
        vertices.insert(s);
        vertices.insert(d);
    }

    // Trim to the core: drop non-base vertices of degree <= 1. The wedge of
    // reduced loops rarely produces any, but hand-crafted inputs can.
    const int base = uf.find(0);
    for (;;) {
        std::map<int, int> degree;
        for (int v : vertices) degree[v] = 0;
        for (const auto& [s, d, g] : quotient) {
            ++degree[s];
            ++degree[d];
        }
        std::vector<int> cut;
        for (int v : vertices)
            if (v != base && degree[v] <= 1) cut.push_back(v);
        if (cut.empty()) break;
        for (int v : cut) {
            vertices.erase(v);
            for (auto it = quotient.begin(); it != quotient.end();) {
                if (std::get<0>(*it) == v || std::get<1>(*it) == v)
                    it = quotient.erase(it);
                else
                    ++it;
            }
        }
    }

    // Canonicalize: BFS from the base, exploring outgoing then incoming
    // edges per generator in alphabet order.
    std::map<std::pair<int, char>, int> out_map, in_map;
    for (const auto& [s, d, g] : quotient) {
        out_map[{s, g}] = d;
        in_map[{d, g}] = s;
    }
    std::map<int, int> relabel{{base, 0}};
    std::queue<int> q;
    q.push(base);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (char g : alphabet.symbols()) {
            for (auto* m : {&out_map, &in_map}) {
                auto it = m->find({v, g});
                if (it != m->end() && !relabel.count(it->second)) {
                    relabel[it->second] = static_cast<int>(relabel.size());
                    q.push(it->second);
                }
            }
        }
    }
    if (relabel.size() != vertices.size())
        throw Error("fold", "folded graph is not connected"); // unreachable by construction

    SubgroupGraph g(alphabet);
    g.vertex_count_ = static_cast<int>(vertices.size());
    for (const auto& [s, d, gen] : quotient)
        g.edges_.push_back({relabel.at(s), relabel.at(d), gen});
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

bool verify_injectivity(std::span<const Word> images, const Alphabet& alphabet) {
    if (images.empty())
        throw Error("fold", "verify_injectivity requires at least one image word");
    return fold(images, alphabet).rank() == static_cast<int>(images.size());
}

} // namespace graphvol
