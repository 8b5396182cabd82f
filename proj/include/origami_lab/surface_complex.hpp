#ifndef ORIGAMI_LAB_SURFACE_COMPLEX_HPP
#define ORIGAMI_LAB_SURFACE_COMPLEX_HPP

#include <algorithm>
#include <map>
#include <queue>
#include <vector>

#include "origami_lab/curve.hpp"

namespace origami_lab {

// Derived cell structure of an origami.  Geometric edge s (vertical, the left
// edge of square s) is oriented upward; edge n+s (horizontal, the bottom edge
// of square s) is oriented rightward.  Fundamental cycles of the 1-skeleton
// come from a BFS spanning tree and generate first homology.
struct SurfaceComplex {
    Origami origami;
    int vertex_count = 0;
    int genus = 0;
    std::vector<int> corner_class;                    // 4n corners -> vertex class
    std::vector<std::pair<int, int>> edge_endpoints;  // per edge: (from, to) classes
    std::vector<std::map<int, int>> fundamental_cycles;  // edge id -> coefficient
};

inline SurfaceComplex build_surface_complex(const Origami& o) {
    require_valid(o);
    SurfaceComplex sc;
    sc.origami = o;
    sc.corner_class = corner_vertex_classes(o);
    sc.vertex_count = vertex_count(o);
    sc.genus = genus(o);

    int n = o.n;
    int E = 2 * n;
    sc.edge_endpoints.resize(E);
    for (int s = 0; s < n; ++s) {
        // vertical edge s: bottom corner BL(s), top corner TL(s)
        sc.edge_endpoints[s] = {sc.corner_class[4 * s + 0], sc.corner_class[4 * s + 2]};
        // horizontal edge n+s: left corner BL(s), right corner BR(s)
        sc.edge_endpoints[n + s] = {sc.corner_class[4 * s + 0], sc.corner_class[4 * s + 1]};
    }

    // BFS spanning tree over vertex classes, edges scanned in id order
    int V = sc.vertex_count;
    std::vector<std::vector<std::pair<int, int>>> incident(V);  // (edge, other end)
    for (int e = 0; e < E; ++e) {
        auto [u, w] = sc.edge_endpoints[e];
        incident[u].emplace_back(e, w);
        if (w != u) incident[w].emplace_back(e, u);
    }
    for (auto& v : incident) std::sort(v.begin(), v.end());

    std::vector<int> parent_edge(V, -1), parent_vertex(V, -1), depth(V, -1);
    std::vector<char> tree_edge(E, 0);
    std::queue<int> q;
    depth[0] = 0;
    q.push(0);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (auto [e, w] : incident[u]) {
            if (depth[w] >= 0) continue;
            depth[w] = depth[u] + 1;
            parent_edge[w] = e;
            parent_vertex[w] = u;
            tree_edge[e] = 1;
            q.push(w);
        }
    }

    // traveling along tree edge e from child to parent contributes +1 when the
    // edge is oriented child -> parent, else -1
    auto climb = [&](int vtx, int target_depth, int factor, std::map<int, int>& coeff) {
        while (depth[vtx] > target_depth) {
            int e = parent_edge[vtx];
            int sign = sc.edge_endpoints[e].first == vtx ? 1 : -1;
            coeff[e] += factor * sign;
            vtx = parent_vertex[vtx];
        }
        return vtx;
    };

    for (int e = 0; e < E; ++e) {
        if (tree_edge[e]) continue;
        auto [u, w] = sc.edge_endpoints[e];
        std::map<int, int> coeff;
        coeff[e] += 1;  // e runs u -> w; return from w to u through the tree
        int x = w, y = u;
        int d = std::min(depth[x], depth[y]);
        x = climb(x, d, +1, coeff);
        y = climb(y, d, -1, coeff);
        while (x != y) {
            x = climb(x, depth[x] - 1, +1, coeff);
            y = climb(y, depth[y] - 1, -1, coeff);
        }
        for (auto it = coeff.begin(); it != coeff.end();)
            it = it->second == 0 ? coeff.erase(it) : std::next(it);
        sc.fundamental_cycles.push_back(std::move(coeff));
    }
    if ((int)sc.fundamental_cycles.size() != 2 * n - sc.vertex_count + 1)
        throw OrigamiError("fundamental cycle count mismatch");
    return sc;
}

// Sign of the crossing of a curve through a geometric edge, by entry side:
// det(curve tangent, edge direction) with vertical edges pointing up and
// horizontal edges pointing right.
inline int edge_crossing_sign(Side entry_side) {
    switch (entry_side) {
        case Side::L: return +1;
        case Side::R: return -1;
        case Side::B: return -1;
        case Side::T: return +1;
    }
    throw OrigamiError("bad side");
}

// Algebraic intersection of a curve with a 1-skeleton cycle: signed sum over
// the curve's edge crossings weighted by the cycle coefficients.
inline int pairing_with_cycle(const PLCurve& c, const std::map<int, int>& cycle,
                              const SurfaceComplex& sc) {
    if (c.origami != sc.origami)
        throw OrigamiError("curve does not live on this complex");
    int sum = 0;
    for (const EdgePoint& p : c.points) {
        auto it = cycle.find(geometric_edge_id(c.origami, p));
        if (it == cycle.end()) continue;
        sum += edge_crossing_sign(p.side) * it->second;
    }
    return sum;
}

// Non-separating iff the homology class is nonzero, i.e. the curve pairs
// nontrivially with some fundamental cycle.
inline bool is_nonseparating(const PLCurve& c, const SurfaceComplex& sc) {
    require_valid_curve(c);
    for (const auto& z : sc.fundamental_cycles)
        if (pairing_with_cycle(c, z, sc) != 0) return true;
    return false;
}

inline bool is_nonseparating(const PLCurve& c) {
    return is_nonseparating(c, build_surface_complex(c.origami));
}

}  // namespace origami_lab

#endif
