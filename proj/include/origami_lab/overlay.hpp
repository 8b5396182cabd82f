#ifndef ORIGAMI_LAB_OVERLAY_HPP
#define ORIGAMI_LAB_OVERLAY_HPP

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "origami_lab/curve.hpp"

namespace origami_lab {

// A transversal crossing of two curves inside a square.  Parameters ua/ub
// locate the crossing along the respective chords; ranks give the cyclic
// position along each curve.
struct Crossing {
    int square;
    Vec2 point;
    int sign;  // sign of det(tangent_a, tangent_b)
    int a_chord;
    Rational ua;
    int b_chord;
    Rational ub;
    int a_rank = -1;
    int b_rank = -1;
};

struct IntersectionData {
    std::vector<Crossing> crossings;
    std::vector<int> a_order;  // a_order[k] = crossing index with a_rank k
    std::vector<int> b_order;

    int count() const { return (int)crossings.size(); }
    int signed_sum() const {
        int s = 0;
        for (const Crossing& c : crossings) s += c.sign;
        return s;
    }
};

inline void require_same_complex(const PLCurve& a, const PLCurve& b) {
    if (a.origami != b.origami)
        throw OrigamiError("curves live on different origamis");
}

// ---------------------------------------------------------------------------
// General position: perturb B so that no point of B shares a geometric edge
// point with A.  Clashing points are pushed to the left of B by half the
// minimal gap on their edge, one at a time in point order.
// ---------------------------------------------------------------------------

inline int left_of_curve_sign(Side entry_side) {
    // The t-direction that points to the left of the curve as it crosses in.
    switch (entry_side) {
        case Side::L: return +1;
        case Side::R: return -1;
        case Side::B: return -1;
        case Side::T: return +1;
    }
    throw OrigamiError("bad side");
}

inline std::pair<PLCurve, PLCurve> general_position(const PLCurve& a, PLCurve b) {
    require_same_complex(a, b);
    auto table = edge_point_table({&a, &b});
    std::map<int, std::vector<Rational>> a_points;
    for (const EdgePoint& p : a.points)
        a_points[geometric_edge_id(a.origami, p)].push_back(p.t);
    for (auto& kv : a_points) std::sort(kv.second.begin(), kv.second.end());

    for (EdgePoint& p : b.points) {
        int e = geometric_edge_id(b.origami, p);
        auto it = a_points.find(e);
        if (it == a_points.end()) continue;
        if (!std::binary_search(it->second.begin(), it->second.end(), p.t)) continue;
        std::vector<Rational>& occupied = table[e];
        Rational delta = half_min_gap(occupied, p.t);
        Rational shifted = p.t + Rational(left_of_curve_sign(p.side)) * delta;
        occupied.insert(std::lower_bound(occupied.begin(), occupied.end(), shifted),
                        shifted);
        p.t = shifted;
    }
    return {a, std::move(b)};
}

inline bool in_general_position(const PLCurve& a, const PLCurve& b) {
    std::vector<std::pair<int, Rational>> pts;
    for (const EdgePoint& p : a.points)
        pts.emplace_back(geometric_edge_id(a.origami, p), p.t);
    for (const EdgePoint& p : b.points)
        pts.emplace_back(geometric_edge_id(b.origami, p), p.t);
    std::sort(pts.begin(), pts.end());
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i] == pts[i + 1]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Overlay: all chord/chord crossings, exact.
// ---------------------------------------------------------------------------

// Chords of a convex square cross iff their endpoints interleave around the
// boundary.  Assumes all four endpoints distinct.
inline bool chords_interleave(const Rational& a1, const Rational& a2,
                              const Rational& b1, const Rational& b2) {
    Rational lo = a1 < a2 ? a1 : a2, hi = a1 < a2 ? a2 : a1;
    bool in1 = b1 > lo && b1 < hi;
    bool in2 = b2 > lo && b2 < hi;
    return in1 != in2;
}

inline IntersectionData overlay(const PLCurve& a, const PLCurve& b) {
    require_same_complex(a, b);
    if (!in_general_position(a, b))
        throw OrigamiError("curves are not in general position");

    struct ChordRef {
        int index;
        Vec2 p, q;
        Rational bp, bq;  // boundary positions
    };
    std::map<int, std::pair<std::vector<ChordRef>, std::vector<ChordRef>>> per_square;
    auto add = [&](const PLCurve& c, bool is_a) {
        auto chords = curve_chords(c);
        for (int i = 0; i < (int)chords.size(); ++i) {
            ChordRef ref{i, local_coords(chords[i].entry), local_coords(chords[i].exit),
                         boundary_position(chords[i].entry.side, chords[i].entry.t),
                         boundary_position(chords[i].exit.side, chords[i].exit.t)};
            auto& slot = per_square[chords[i].square];
            (is_a ? slot.first : slot.second).push_back(std::move(ref));
        }
    };
    add(a, true);
    add(b, false);

    IntersectionData data;
    for (auto& kv : per_square) {
        for (const ChordRef& ca : kv.second.first) {
            for (const ChordRef& cb : kv.second.second) {
                if (!chords_interleave(ca.bp, ca.bq, cb.bp, cb.bq)) continue;
                Vec2 ta = ca.q - ca.p, tb = cb.q - cb.p;
                Rational denom = cross(ta, tb);
                if (denom == 0)
                    throw OrigamiError("degenerate chord crossing");
                Vec2 diff = cb.p - ca.p;
                Rational ua = cross(diff, tb) / denom;
                Rational ub = cross(diff, ta) / denom;
                Crossing x;
                x.square = kv.first;
                x.point = Vec2(ca.p.x + ua * ta.x, ca.p.y + ua * ta.y);
                x.sign = denom > 0 ? 1 : -1;
                x.a_chord = ca.index;
                x.ua = ua;
                x.b_chord = cb.index;
                x.ub = ub;
                data.crossings.push_back(std::move(x));
            }
        }
    }

    int c = data.count();
    data.a_order.resize(c);
    data.b_order.resize(c);
    std::iota(data.a_order.begin(), data.a_order.end(), 0);
    std::iota(data.b_order.begin(), data.b_order.end(), 0);
    std::sort(data.a_order.begin(), data.a_order.end(), [&](int i, int j) {
        return std::tie(data.crossings[i].a_chord, data.crossings[i].ua) <
               std::tie(data.crossings[j].a_chord, data.crossings[j].ua);
    });
    std::sort(data.b_order.begin(), data.b_order.end(), [&](int i, int j) {
        return std::tie(data.crossings[i].b_chord, data.crossings[i].ub) <
               std::tie(data.crossings[j].b_chord, data.crossings[j].ub);
    });
    for (int k = 0; k < c; ++k) {
        data.crossings[data.a_order[k]].a_rank = k;
        data.crossings[data.b_order[k]].b_rank = k;
    }
    return data;
}

// ---------------------------------------------------------------------------
// Complement analysis.  Each square is cut into planar fragments by the
// chords of both curves; fragments are glued across geometric-edge pieces.
// The resulting components are the complement components of a ∪ b, with
//   chi = #fragments - #edge pieces + #complex vertices.
// A component is an open disc iff chi = 1.  A bigon is a disc component
// bordered by exactly one a-arc side and one b-arc side with distinct end
// crossings.
// ---------------------------------------------------------------------------

struct OverlayArc {
    int rank;            // position along the curve (arc rank k runs from
                         // crossing order[k] to order[k+1])
    int from_crossing;   // crossing index at the start
    int to_crossing;     // crossing index at the end
    int left_fragment;   // any fragment on the left of the arc
    int right_fragment;  // any fragment on the right
};

struct ComponentInfo {
    int root;           // union-find representative fragment
    long long chi;
    int fragments;
    int frontier_pieces;                        // chord pieces on the boundary
    std::vector<std::pair<int, int>> arc_sides;  // (curve 0/1, arc rank)
    bool disc() const { return chi == 1; }
};

struct BigonInfo {
    int a_arc;
    int b_arc;
    int crossing_p;  // endpoints of the a-arc, equal to those of the b-arc
    int crossing_q;
    bool bigon_left_of_b;  // the bigon component sits on the left of the b-arc
    int size;              // frontier length in chord pieces
    int min_crossing;
};

struct OverlayAnalysis {
    IntersectionData data;
    std::vector<OverlayArc> a_arcs, b_arcs;
    std::vector<ComponentInfo> components;
    std::vector<int> fragment_component;  // fragment id -> index into components
    std::vector<BigonInfo> bigons;
    int disc_components = 0;
    bool all_discs = false;
};

namespace detail {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Planar arrangement of the chords inside one square, with face tracing.
struct SquareGraph {
    std::vector<Vec2> pos;
    // nodes: 0..3 corners (BL, BR, TR, TL), then boundary points, then crossings
    std::vector<std::pair<int, int>> edge_nodes;      // u, v per edge
    std::vector<std::array<int, 2>> edge_faces;       // face left of dart 2e, 2e+1
    std::vector<int> face_of_dart;                    // dart -> face id
    int num_faces = 0;
    std::vector<bool> face_interior;                  // positive signed area

    int dart_u(int d) const { return d & 1 ? edge_nodes[d >> 1].second : edge_nodes[d >> 1].first; }
    int dart_v(int d) const { return d & 1 ? edge_nodes[d >> 1].first : edge_nodes[d >> 1].second; }

    void trace() {
        int n_nodes = (int)pos.size();
        int n_darts = 2 * (int)edge_nodes.size();
        std::vector<std::vector<int>> at(n_nodes);
        for (int d = 0; d < n_darts; ++d) at[dart_u(d)].push_back(d);
        auto dir = [&](int d) { return pos[dart_v(d)] - pos[dart_u(d)]; };
        auto half = [&](const Vec2& v) {
            return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0;
        };
        std::vector<int> rot_index(n_darts);
        for (int u = 0; u < n_nodes; ++u) {
            std::sort(at[u].begin(), at[u].end(), [&](int d1, int d2) {
                Vec2 v1 = dir(d1), v2 = dir(d2);
                int h1 = half(v1), h2 = half(v2);
                if (h1 != h2) return h1 < h2;
                return cross(v1, v2) > 0;
            });
            for (int i = 0; i < (int)at[u].size(); ++i) rot_index[at[u][i]] = i;
        }
        face_of_dart.assign(n_darts, -1);
        std::vector<Rational> area;
        for (int d0 = 0; d0 < n_darts; ++d0) {
            if (face_of_dart[d0] >= 0) continue;
            int f = num_faces++;
            area.push_back(Rational(0));
            int d = d0;
            do {
                face_of_dart[d] = f;
                area[f] += cross(pos[dart_u(d)], pos[dart_v(d)]);
                int r = d ^ 1;
                int u = dart_u(r);
                const auto& ring = at[u];
                int idx = rot_index[r];
                d = ring[(idx - 1 + (int)ring.size()) % ring.size()];
            } while (d != d0);
        }
        face_interior.resize(num_faces);
        for (int f = 0; f < num_faces; ++f) face_interior[f] = area[f] > 0;
    }
};

}  // namespace detail

inline OverlayAnalysis analyze_overlay(const PLCurve& a, const PLCurve& b) {
    require_same_complex(a, b);
    const Origami& o = a.origami;
    OverlayAnalysis out;
    out.data = overlay(a, b);
    IntersectionData& data = out.data;
    int C = data.count();

    auto a_chords = curve_chords(a);
    auto b_chords = curve_chords(b);
    int ma = (int)a_chords.size(), mb = (int)b_chords.size();

    // crossings per chord, sorted along the chord
    std::vector<std::vector<int>> on_a_chord(ma), on_b_chord(mb);
    for (int k = 0; k < C; ++k) {
        on_a_chord[data.crossings[k].a_chord].push_back(k);
        on_b_chord[data.crossings[k].b_chord].push_back(k);
    }
    for (auto& v : on_a_chord)
        std::sort(v.begin(), v.end(),
                  [&](int i, int j) { return data.crossings[i].ua < data.crossings[j].ua; });
    for (auto& v : on_b_chord)
        std::sort(v.begin(), v.end(),
                  [&](int i, int j) { return data.crossings[i].ub < data.crossings[j].ub; });

    // -------- per-square planar graphs --------
    std::vector<detail::SquareGraph> graphs(o.n);
    std::vector<std::map<Rational, int>> boundary_nodes(o.n);  // boundary pos -> node
    std::vector<int> crossing_node(C);
    // (curve, chord, piece) -> global left/right fragment, filled after tracing
    struct ChordPiece {
        int square;
        int dart_fwd;  // dart pointing in chord direction
    };
    std::vector<std::vector<std::vector<ChordPiece>>> pieces(2);
    pieces[0].resize(ma);
    pieces[1].resize(mb);

    for (int s = 0; s < o.n; ++s) {
        auto& g = graphs[s];
        g.pos = {Vec2(Rational(0), Rational(0)), Vec2(Rational(1), Rational(0)),
                 Vec2(Rational(1), Rational(1)), Vec2(Rational(0), Rational(1))};
        boundary_nodes[s][Rational(0)] = 0;
        boundary_nodes[s][Rational(1)] = 1;
        boundary_nodes[s][Rational(2)] = 2;
        boundary_nodes[s][Rational(3)] = 3;
    }
    auto boundary_node = [&](int s, Side side, const Rational& t) {
        Rational bp = boundary_position(side, t);
        auto it = boundary_nodes[s].find(bp);
        if (it != boundary_nodes[s].end()) return it->second;
        int id = (int)graphs[s].pos.size();
        graphs[s].pos.push_back(local_coords(EdgePoint(s, side, t)));
        boundary_nodes[s].emplace(bp, id);
        return id;
    };

    // chord nodes and chord-piece edges
    auto add_chord_edges = [&](int cu, const std::vector<CurveChord>& chords,
                               const std::vector<std::vector<int>>& on_chord,
                               bool is_a) {
        for (int i = 0; i < (int)chords.size(); ++i) {
            int s = chords[i].square;
            auto& g = graphs[s];
            std::vector<int> seq;
            seq.push_back(boundary_node(s, chords[i].entry.side, chords[i].entry.t));
            for (int k : on_chord[i]) {
                if (crossing_node[k] < 0) {
                    crossing_node[k] = (int)g.pos.size();
                    g.pos.push_back(data.crossings[k].point);
                }
                seq.push_back(crossing_node[k]);
            }
            seq.push_back(boundary_node(s, chords[i].exit.side, chords[i].exit.t));
            for (size_t j = 0; j + 1 < seq.size(); ++j) {
                int e = (int)g.edge_nodes.size();
                g.edge_nodes.emplace_back(seq[j], seq[j + 1]);
                pieces[cu][i].push_back(ChordPiece{s, 2 * e});
            }
            (void)is_a;
        }
    };
    std::fill(crossing_node.begin(), crossing_node.end(), -1);
    add_chord_edges(0, a_chords, on_a_chord, true);
    add_chord_edges(1, b_chords, on_b_chord, false);

    // boundary-piece edges; remember interior darts for gluing and corners
    struct BoundaryPiece {
        int square;
        Side side;
        Rational t_lo, t_hi;
        int dart_ccw;
    };
    std::vector<std::vector<BoundaryPiece>> bpieces(o.n);
    std::vector<std::array<int, 4>> corner_dart(o.n);  // CCW dart leaving corner c
    for (int s = 0; s < o.n; ++s) {
        auto& g = graphs[s];
        std::vector<std::pair<Rational, int>> ring(boundary_nodes[s].begin(),
                                                   boundary_nodes[s].end());
        for (size_t j = 0; j < ring.size(); ++j) {
            size_t j2 = (j + 1) % ring.size();
            int e = (int)g.edge_nodes.size();
            g.edge_nodes.emplace_back(ring[j].second, ring[j2].second);
            int dart = 2 * e;
            Rational p = ring[j].first;
            Rational p2 = j2 == 0 ? Rational(4) : ring[j2].first;
            // side: the unit interval [k, k+1] containing (p, p2)
            Integer k = numerator(p) / denominator(p);
            static const Side kSide[4] = {Side::B, Side::R, Side::T, Side::L};
            Side side = kSide[(int)k];
            Rational ta, tb;
            switch (side) {
                case Side::B: ta = p; tb = p2; break;
                case Side::R: ta = p - 1; tb = p2 - 1; break;
                case Side::T: ta = Rational(3) - p2; tb = Rational(3) - p; break;
                case Side::L: ta = Rational(4) - p2; tb = Rational(4) - p; break;
            }
            bpieces[s].push_back(BoundaryPiece{s, side, ta, tb, dart});
            if (denominator(p) == 1) corner_dart[s][(int)numerator(p)] = dart;
        }
    }

    for (int s = 0; s < o.n; ++s) graphs[s].trace();

    // global fragment ids
    std::vector<int> face_offset(o.n + 1, 0);
    for (int s = 0; s < o.n; ++s)
        face_offset[s + 1] = face_offset[s] + graphs[s].num_faces;
    int total_faces = face_offset[o.n];
    auto global_face = [&](int s, int dart) {
        return face_offset[s] + graphs[s].face_of_dart[dart];
    };

    detail::Dsu dsu(total_faces);
    // glue fragments across geometric-edge pieces
    // key: (geometric edge id, t_lo) -> faces on the two sides
    std::map<std::pair<int, Rational>, std::vector<int>> glue;
    for (int s = 0; s < o.n; ++s) {
        for (const BoundaryPiece& bp : bpieces[s]) {
            int ge = geometric_edge_id(o, EdgePoint(s, bp.side, (bp.t_lo + bp.t_hi) / 2));
            glue[{ge, bp.t_lo}].push_back(global_face(s, bp.dart_ccw));
        }
    }
    long long n_edge_pieces = 0;
    for (auto& kv : glue) {
        if (kv.second.size() != 2)
            throw OrigamiError("edge piece does not have exactly two sides");
        dsu.unite(kv.second[0], kv.second[1]);
        ++n_edge_pieces;
    }

    // components and Euler characteristics
    std::map<int, int> comp_index;
    auto comp_of = [&](int fragment) {
        int r = dsu.find(fragment);
        auto it = comp_index.find(r);
        if (it != comp_index.end()) return it->second;
        int id = (int)out.components.size();
        comp_index.emplace(r, id);
        ComponentInfo ci;
        ci.root = r;
        ci.chi = 0;
        ci.fragments = 0;
        ci.frontier_pieces = 0;
        out.components.push_back(ci);
        return id;
    };
    out.fragment_component.assign(total_faces, -1);
    for (int s = 0; s < o.n; ++s) {
        for (int f = 0; f < graphs[s].num_faces; ++f) {
            if (!graphs[s].face_interior[f]) continue;
            int ci = comp_of(face_offset[s] + f);
            out.fragment_component[face_offset[s] + f] = ci;
            out.components[ci].chi += 1;
            out.components[ci].fragments += 1;
        }
    }
    for (auto& kv : glue) out.components[comp_of(kv.second[0])].chi -= 1;
    (void)n_edge_pieces;
    // complex vertices: one per corner class, interior to its component
    {
        std::vector<int> cls = corner_vertex_classes(o);
        int V = 0;
        for (int c : cls) V = std::max(V, c + 1);
        std::vector<int> seen(V, 0);
        for (int s = 0; s < o.n; ++s) {
            for (int c = 0; c < 4; ++c) {
                int vc = cls[4 * s + c];
                if (seen[vc]) continue;
                seen[vc] = 1;
                out.components[comp_of(global_face(s, corner_dart[s][c]))].chi += 1;
            }
        }
    }

    // -------- arcs --------
    auto build_arcs = [&](int cu, const std::vector<std::vector<int>>& on_chord,
                          const std::vector<int>& order, int m,
                          std::vector<OverlayArc>& arcs) {
        if (C == 0) return;
        auto rank_of = [&](int k) {
            return cu == 0 ? data.crossings[k].a_rank : data.crossings[k].b_rank;
        };
        arcs.resize(C);
        for (int r = 0; r < C; ++r) {
            arcs[r].rank = r;
            arcs[r].from_crossing = order[r];
            arcs[r].to_crossing = order[(r + 1) % C];
            arcs[r].left_fragment = -1;
            arcs[r].right_fragment = -1;
        }
        int current = rank_of(order[C - 1]);
        for (int i = 0; i < m; ++i) {
            size_t xi = 0;
            for (const ChordPiece& cp : pieces[cu][i]) {
                int lf = global_face(cp.square, cp.dart_fwd);
                int rf = global_face(cp.square, cp.dart_fwd ^ 1);
                if (arcs[current].left_fragment < 0) {
                    arcs[current].left_fragment = lf;
                    arcs[current].right_fragment = rf;
                }
                if (xi < on_chord[i].size()) {
                    current = rank_of(on_chord[i][xi]);
                    ++xi;
                }
            }
        }
    };
    build_arcs(0, on_a_chord, data.a_order, ma, out.a_arcs);
    build_arcs(1, on_b_chord, data.b_order, mb, out.b_arcs);

    // arc-side incidences per component
    auto note_sides = [&](int cu, std::vector<OverlayArc>& arcs) {
        for (OverlayArc& arc : arcs) {
            out.components[out.fragment_component[arc.left_fragment]]
                .arc_sides.emplace_back(cu, arc.rank);
            out.components[out.fragment_component[arc.right_fragment]]
                .arc_sides.emplace_back(cu, arc.rank);
        }
    };
    if (C > 0) {
        note_sides(0, out.a_arcs);
        note_sides(1, out.b_arcs);
    }
    for (int cu = 0; cu < 2; ++cu) {
        int m = cu == 0 ? ma : mb;
        for (int i = 0; i < m; ++i)
            for (const ChordPiece& cp : pieces[cu][i]) {
                int f1 = out.fragment_component[global_face(cp.square, cp.dart_fwd)];
                int f2 = out.fragment_component[global_face(cp.square, cp.dart_fwd ^ 1)];
                out.components[f1].frontier_pieces += 1;
                if (f2 != f1) out.components[f2].frontier_pieces += 1;
            }
    }

    out.disc_components = 0;
    out.all_discs = !out.components.empty() && C > 0;
    for (const ComponentInfo& ci : out.components) {
        if (ci.disc()) ++out.disc_components;
        else out.all_discs = false;
    }

    // -------- bigons --------
    for (int ciIdx = 0; ciIdx < (int)out.components.size(); ++ciIdx) {
        const ComponentInfo& ci = out.components[ciIdx];
        if (!ci.disc() || ci.arc_sides.size() != 2) continue;
        auto s1 = ci.arc_sides[0], s2 = ci.arc_sides[1];
        if (s1.first == s2.first) continue;  // need one a-arc and one b-arc
        int ar = s1.first == 0 ? s1.second : s2.second;
        int br = s1.first == 1 ? s1.second : s2.second;
        const OverlayArc& aa = out.a_arcs[ar];
        const OverlayArc& bb = out.b_arcs[br];
        if (aa.from_crossing == aa.to_crossing) continue;  // corners must differ
        if (std::minmax(aa.from_crossing, aa.to_crossing) !=
            std::minmax(bb.from_crossing, bb.to_crossing))
            continue;
        BigonInfo big;
        big.a_arc = ar;
        big.b_arc = br;
        big.crossing_p = aa.from_crossing;
        big.crossing_q = aa.to_crossing;
        big.bigon_left_of_b = out.fragment_component[bb.left_fragment] == ciIdx;
        big.size = ci.frontier_pieces;
        big.min_crossing = std::min(big.crossing_p, big.crossing_q);
        out.bigons.push_back(big);
    }
    std::sort(out.bigons.begin(), out.bigons.end(), [](const BigonInfo& x, const BigonInfo& y) {
        return std::tie(x.size, x.min_crossing) < std::tie(y.size, y.min_crossing);
    });
    return out;
}

// ---------------------------------------------------------------------------
// Bigon removal: push the a-arc of the innermost bigon across the b-arc,
// rerouting it parallel to b at half-gap offsets on the far side.
// ---------------------------------------------------------------------------

namespace detail {

// Stored points strictly inside the arc from crossing P to crossing Q along a
// curve, as indices into the curve's point list.
inline std::vector<int> arc_interior_indices(int m, int chord_p, const Rational& up,
                                             int chord_q, const Rational& uq) {
    std::vector<int> out;
    if (chord_p == chord_q && up < uq) return out;  // stays inside one chord
    if (chord_p == chord_q) {
        for (int j = 0; j < m; ++j) out.push_back((chord_p + 1 + j) % m);
        return out;
    }
    for (int j = (chord_p + 1) % m;; j = (j + 1) % m) {
        out.push_back(j);
        if (j == chord_q) break;
    }
    return out;
}

}  // namespace detail

inline PLCurve remove_bigon(const PLCurve& a, const PLCurve& b, const BigonInfo& big,
                            const IntersectionData& data) {
    const Origami& o = a.origami;
    const Crossing& P = data.crossings[data.a_order[big.a_arc]];
    const Crossing& Q = data.crossings[data.a_order[(big.a_arc + 1) % data.count()]];
    int m = a.size();

    std::vector<int> interior =
        detail::arc_interior_indices(m, P.a_chord, P.ua, Q.a_chord, Q.ua);
    std::vector<char> drop(m, 0);
    for (int j : interior) drop[j] = 1;

    // b-arc interior points from P to Q; reversed when the arc runs backward
    const Crossing& Bs = data.crossings[data.b_order[big.b_arc]];
    bool forward = data.b_order[big.b_arc] == data.a_order[big.a_arc];
    int mb = b.size();
    std::vector<int> binterior = detail::arc_interior_indices(
        mb, Bs.b_chord, Bs.ub,
        data.crossings[data.b_order[(big.b_arc + 1) % data.count()]].b_chord,
        data.crossings[data.b_order[(big.b_arc + 1) % data.count()]].ub);

    auto table = edge_point_table({&a, &b});
    int dir = big.bigon_left_of_b ? -1 : +1;  // push away from the bigon
    std::vector<EdgePoint> detour;
    detour.reserve(binterior.size());
    if (forward) {
        for (int j : binterior) detour.push_back(b.points[j]);
    } else {
        for (auto it = binterior.rbegin(); it != binterior.rend(); ++it)
            detour.push_back(mate(o, b.points[*it]));
    }
    for (EdgePoint& p : detour) {
        // the offset side is fixed relative to b's own orientation
        EdgePoint as_b = forward ? p : mate(o, p);
        int s = left_of_curve_sign(as_b.side);
        std::vector<Rational>& occupied = table[geometric_edge_id(o, p)];
        Rational delta = half_min_gap(occupied, p.t);
        Rational shifted = p.t + Rational(dir * s) * delta;
        occupied.insert(std::lower_bound(occupied.begin(), occupied.end(), shifted),
                        shifted);
        p.t = shifted;
    }

    std::vector<EdgePoint> pts;
    // keep the rest of a, starting just past Q and ending at chord P's entry,
    // then run the detour
    if (!(P.a_chord == Q.a_chord && P.ua > Q.ua)) {
        for (int j = (Q.a_chord + 1) % m;; j = (j + 1) % m) {
            if (!drop[j]) pts.push_back(a.points[j]);
            if (j == P.a_chord) break;
        }
    }
    pts.insert(pts.end(), detour.begin(), detour.end());
    if (pts.empty()) throw OrigamiError("bigon removal emptied the curve");
    return normalized(PLCurve(o, std::move(pts)));
}

struct MinimalPair {
    PLCurve a, b;
    IntersectionData data;
};

// Removes bigons until none remain.  The returned crossing count is the
// geometric intersection number.
inline MinimalPair reduce_to_minimal(const PLCurve& a_in, const PLCurve& b_in) {
    auto [a, b] = general_position(a_in, b_in);
    for (;;) {
        OverlayAnalysis an = analyze_overlay(a, b);
        if (an.bigons.empty())
            return MinimalPair{std::move(a), std::move(b), std::move(an.data)};
        int before = an.data.count();
        a = remove_bigon(a, b, an.bigons.front(), an.data);
        auto gp = general_position(a, b);
        a = std::move(gp.first);
        b = std::move(gp.second);
        int after = overlay(a, b).count();
        if (after > before - 2)
            throw OrigamiError("bigon removal failed to reduce crossings");
    }
}

inline int algebraic_intersection(const PLCurve& a, const PLCurve& b) {
    auto [ga, gb] = general_position(a, b);
    return overlay(ga, gb).signed_sum();
}

inline int geometric_intersection(const PLCurve& a, const PLCurve& b) {
    return reduce_to_minimal(a, b).data.count();
}

// Coherent: geometric intersection equals |algebraic| — equivalently all
// crossing signs agree in minimal position.
inline bool is_coherent(const PLCurve& a, const PLCurve& b) {
    MinimalPair mp = reduce_to_minimal(a, b);
    int alg = mp.data.signed_sum();
    int geo = mp.data.count();
    if (geo == std::abs(alg)) {
        for (const Crossing& c : mp.data.crossings)
            if (geo > 0 && c.sign != (alg > 0 ? 1 : -1))
                throw OrigamiError("coherent pair with mixed crossing signs");
        return true;
    }
    return false;
}

struct FillingReport {
    bool filling = false;
    int components = 0;
    int disc_components = 0;
    int crossings = 0;
};

inline FillingReport filling_report(const PLCurve& a, const PLCurve& b) {
    MinimalPair mp = reduce_to_minimal(a, b);
    OverlayAnalysis an = analyze_overlay(mp.a, mp.b);
    FillingReport rep;
    rep.components = (int)an.components.size();
    rep.disc_components = an.disc_components;
    rep.crossings = an.data.count();
    rep.filling = an.data.count() > 0 && an.all_discs;
    if (rep.filling) {
        int g = genus(a.origami);
        if (rep.components != rep.crossings + 2 - 2 * g)
            throw OrigamiError("filling pair violates the Euler count of complement discs");
    }
    return rep;
}

inline bool is_filling(const PLCurve& a, const PLCurve& b) {
    return filling_report(a, b).filling;
}

}  // namespace origami_lab

#endif
