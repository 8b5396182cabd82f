#ifndef ORIGAMI_LAB_CURVE_HPP
#define ORIGAMI_LAB_CURVE_HPP

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "origami_lab/origami.hpp"

namespace origami_lab {

enum class Side : char { L = 'L', R = 'R', T = 'T', B = 'B' };

inline char side_char(Side s) { return (char)s; }
inline Side side_from_char(char c) {
    switch (c) {
        case 'L': return Side::L;
        case 'R': return Side::R;
        case 'T': return Side::T;
        case 'B': return Side::B;
    }
    throw OrigamiError(std::string("unknown side '") + c + "'");
}

// A point on a geometric edge of the square complex, written in the local
// coordinates of one of the two incident squares.  Sides L/R are
// parameterized bottom-to-top by t, sides B/T left-to-right.
struct EdgePoint {
    int square = 0;
    Side side = Side::L;
    Rational t;

    EdgePoint() = default;
    EdgePoint(int sq, Side sd, Rational tt) : square(sq), side(sd), t(std::move(tt)) {}

    bool operator==(const EdgePoint& o) const {
        return square == o.square && side == o.side && t == o.t;
    }
};

// The same geometric point seen from the square on the other side of the edge.
inline EdgePoint mate(const Origami& o, const EdgePoint& p) {
    switch (p.side) {
        case Side::R: return EdgePoint(o.h[p.square], Side::L, p.t);
        case Side::L: return EdgePoint(o.h.inverse()[p.square], Side::R, p.t);
        case Side::T: return EdgePoint(o.v[p.square], Side::B, p.t);
        case Side::B: return EdgePoint(o.v.inverse()[p.square], Side::T, p.t);
    }
    throw OrigamiError("bad side");
}

// Geometric edges: id s in [0,n) is the left edge of square s, id n+s the
// bottom edge of square s.
inline int geometric_edge_id(const Origami& o, const EdgePoint& p) {
    switch (p.side) {
        case Side::L: return p.square;
        case Side::R: return o.h[p.square];
        case Side::B: return o.n + p.square;
        case Side::T: return o.n + o.v[p.square];
    }
    throw OrigamiError("bad side");
}

// Canonical representative: the L or B copy.
inline EdgePoint canonical_point(const Origami& o, const EdgePoint& p) {
    if (p.side == Side::R || p.side == Side::T) return mate(o, p);
    return p;
}

struct Vec2 {
    Rational x, y;
    Vec2() = default;
    Vec2(Rational xx, Rational yy) : x(std::move(xx)), y(std::move(yy)) {}
    Vec2 operator-(const Vec2& o) const { return Vec2(x - o.x, y - o.y); }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline Vec2 local_coords(const EdgePoint& p) {
    switch (p.side) {
        case Side::L: return Vec2(Rational(0), p.t);
        case Side::R: return Vec2(Rational(1), p.t);
        case Side::B: return Vec2(p.t, Rational(0));
        case Side::T: return Vec2(p.t, Rational(1));
    }
    throw OrigamiError("bad side");
}

// Position along the square boundary, counterclockwise from the BL corner.
// B maps to (0,1), R to (1,2), T to (2,3), L to (3,4).
inline Rational boundary_position(Side side, const Rational& t) {
    switch (side) {
        case Side::B: return t;
        case Side::R: return Rational(1) + t;
        case Side::T: return Rational(3) - t;
        case Side::L: return Rational(4) - t;
    }
    throw OrigamiError("bad side");
}

// An embedded oriented closed PL curve.  points[i] is the point where the
// curve enters the square it crosses next, so chord i lies in
// points[i].square and runs from points[i] to the mate of points[i+1].
struct PLCurve {
    Origami origami;
    std::vector<EdgePoint> points;

    PLCurve() = default;
    PLCurve(Origami o, std::vector<EdgePoint> pts)
        : origami(std::move(o)), points(std::move(pts)) {}

    int size() const { return (int)points.size(); }
};

struct CurveChord {
    int square;
    EdgePoint entry;  // stored point i
    EdgePoint exit;   // mate of stored point i+1, in the same square
};

inline std::vector<CurveChord> curve_chords(const PLCurve& c) {
    std::vector<CurveChord> out;
    int m = c.size();
    out.reserve(m);
    for (int i = 0; i < m; ++i) {
        EdgePoint exit = mate(c.origami, c.points[(i + 1) % m]);
        out.push_back(CurveChord{c.points[i].square, c.points[i], exit});
    }
    return out;
}

inline ValidationReport validate_curve(const PLCurve& c) {
    ValidationReport rep;
    const Origami& o = c.origami;
    {
        ValidationReport orep = validate(o);
        if (!orep.ok()) {
            rep.violations.push_back("curve carries an invalid origami");
            return rep;
        }
    }
    int m = c.size();
    if (m < 1) {
        rep.violations.push_back("curve has no points");
        return rep;
    }
    for (const EdgePoint& p : c.points) {
        if (p.square < 0 || p.square >= o.n)
            rep.violations.push_back("point square index out of range");
        else if (!(p.t > 0 && p.t < 1))
            rep.violations.push_back("point parameter not in (0,1)");
    }
    if (!rep.ok()) return rep;

    // Chord chain: consecutive points must bound a chord of one square
    // joining two distinct sides.
    for (int i = 0; i < m; ++i) {
        EdgePoint exit = mate(o, c.points[(i + 1) % m]);
        if (exit.square != c.points[i].square) {
            rep.violations.push_back("consecutive points do not lie on a common square");
            return rep;
        }
        if (exit.side == c.points[i].side)
            rep.violations.push_back("chord joins a side to itself");
    }

    // Embeddedness on edges: all geometric points distinct.
    {
        std::vector<std::pair<int, Rational>> canon;
        canon.reserve(m);
        for (const EdgePoint& p : c.points)
            canon.emplace_back(geometric_edge_id(o, p), p.t);
        std::sort(canon.begin(), canon.end());
        for (int i = 0; i + 1 < m; ++i)
            if (canon[i] == canon[i + 1]) {
                rep.violations.push_back("two points occupy one geometric edge point");
                break;
            }
    }
    if (!rep.ok()) return rep;

    // Embeddedness inside squares: chord endpoints around each square
    // boundary must form a non-crossing matching.
    std::map<int, std::vector<std::pair<Rational, int>>> events;  // square -> (pos, chord)
    auto chs = curve_chords(c);
    for (int i = 0; i < m; ++i) {
        events[chs[i].square].emplace_back(
            boundary_position(chs[i].entry.side, chs[i].entry.t), i);
        events[chs[i].square].emplace_back(
            boundary_position(chs[i].exit.side, chs[i].exit.t), i);
    }
    for (auto& kv : events) {
        auto& ev = kv.second;
        std::sort(ev.begin(), ev.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (size_t i = 0; i + 1 < ev.size(); ++i)
            if (ev[i].first == ev[i + 1].first) {
                rep.violations.push_back("two chords share a boundary point");
                return rep;
            }
        std::vector<int> stack;
        std::vector<char> open((size_t)m, 0);
        for (auto& e : ev) {
            if (!open[e.second]) {
                open[e.second] = 1;
                stack.push_back(e.second);
            } else if (!stack.empty() && stack.back() == e.second) {
                stack.pop_back();
            } else {
                rep.violations.push_back("chords cross inside a square (curve not embedded)");
                return rep;
            }
        }
        if (!stack.empty()) {
            rep.violations.push_back("chords cross inside a square (curve not embedded)");
            return rep;
        }
    }
    return rep;
}

inline void require_valid_curve(const PLCurve& c, const char* what = "curve") {
    ValidationReport rep = validate_curve(c);
    if (!rep.ok())
        throw OrigamiError(std::string(what) + " invalid: " + rep.violations.front());
}

inline PLCurve reverse(const PLCurve& c) {
    int m = c.size();
    std::vector<EdgePoint> pts;
    pts.reserve(m);
    for (int i = 0; i < m; ++i)
        pts.push_back(mate(c.origami, c.points[((-i) % m + m) % m]));
    return PLCurve(c.origami, std::move(pts));
}

// Removes chords that enter and leave a square through one geometric edge
// ("fingers").  Innermost fingers are retracted first: a finger whose mouth
// interval contains no other point of the curve can be replaced by a straight
// chord in the adjacent square without breaking embeddedness.  Isotopy class
// is preserved; intersections with other curves may change.
inline PLCurve normalized(PLCurve c) {
    const Origami& o = c.origami;
    for (;;) {
        int m = c.size();
        if (m == 0) throw OrigamiError("curve normalized to nothing (null-homotopic around an edge)");
        // Locate same-side chords together with their mouth intervals.
        struct Finger {
            int chord;
            int edge;
            Rational lo, hi;
        };
        std::vector<Finger> fingers;
        for (int i = 0; i < m; ++i) {
            EdgePoint exit = mate(o, c.points[(i + 1) % m]);
            if (exit.side == c.points[i].side) {
                Rational a = c.points[i].t, b = exit.t;
                if (a > b) std::swap(a, b);
                fingers.push_back(Finger{i, geometric_edge_id(o, c.points[i]), a, b});
            }
        }
        if (fingers.empty()) return c;

        int pick = -1;
        for (const Finger& f : fingers) {
            bool clean = true;
            for (int j = 0; j < m && clean; ++j) {
                if (j == f.chord || j == (f.chord + 1) % m) continue;
                const EdgePoint& p = c.points[j];
                if (geometric_edge_id(o, p) == f.edge && p.t > f.lo && p.t < f.hi)
                    clean = false;
            }
            if (clean) {
                pick = f.chord;
                break;
            }
        }
        if (pick < 0) throw OrigamiError("no clean finger found during normalization");
        if (m <= 2) throw OrigamiError("curve normalized to nothing (null-homotopic around an edge)");
        std::vector<EdgePoint> pts;
        pts.reserve(m - 2);
        for (int j = 0; j < m; ++j)
            if (j != pick && j != (pick + 1) % m) pts.push_back(c.points[j]);
        c.points = std::move(pts);
    }
}

// Mid-line cores of the horizontal and vertical cylinders: one rightward
// curve per h-cycle at height 1/2, one upward curve per v-cycle at width 1/2.
struct CoreCurves {
    std::vector<PLCurve> horizontal;
    std::vector<PLCurve> vertical;
};

inline CoreCurves core_curves(const Origami& o) {
    require_valid(o);
    CoreCurves out;
    Rational half(1, 2);
    for (const auto& cyc : o.h.cycles()) {
        std::vector<EdgePoint> pts;
        for (int s : cyc) pts.emplace_back(s, Side::L, half);
        out.horizontal.emplace_back(o, std::move(pts));
    }
    for (const auto& cyc : o.v.cycles()) {
        std::vector<EdgePoint> pts;
        for (int s : cyc) pts.emplace_back(s, Side::B, half);
        out.vertical.emplace_back(o, std::move(pts));
    }
    return out;
}

// Sorted t-values of all points of the given curves on each geometric edge.
inline std::map<int, std::vector<Rational>> edge_point_table(
    const std::vector<const PLCurve*>& curves) {
    std::map<int, std::vector<Rational>> table;
    for (const PLCurve* c : curves)
        for (const EdgePoint& p : c->points)
            table[geometric_edge_id(c->origami, p)].push_back(p.t);
    for (auto& kv : table) std::sort(kv.second.begin(), kv.second.end());
    return table;
}

// Half the gap from t to the nearest other point (or edge endpoint) on the
// given edge.  `taken` must be sorted.
inline Rational half_min_gap(const std::vector<Rational>& taken, const Rational& t) {
    Rational best = t < Rational(1) - t ? t : Rational(1) - t;  // distance to 0/1
    auto it = std::lower_bound(taken.begin(), taken.end(), t);
    if (it != taken.end()) {
        Rational d = *it - t;
        if (d > 0 && d < best) best = d;
        if (*it == t && it + 1 != taken.end()) {
            Rational d2 = *(it + 1) - t;
            if (d2 < best) best = d2;
        }
    }
    if (it != taken.begin()) {
        Rational d = t - *(it - 1);
        if (d > 0 && d < best) best = d;
    }
    return best / 2;
}

}  // namespace origami_lab

#endif
