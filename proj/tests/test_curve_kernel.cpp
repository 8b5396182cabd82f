#include <catch2/catch_amalgamated.hpp>

#include "origami_lab/overlay.hpp"
#include "origami_lab/surface_complex.hpp"

using namespace origami_lab;

namespace {

Origami torus() { return Origami(1, Permutation::identity(1), Permutation::identity(1)); }

// Deterministic genus-2 four-square fixture: first enumerated [1,1] origami.
Origami four_square() {
    auto list = enumerate_one_one(4, 2);
    REQUIRE(!list.empty());
    return list.front();
}

PLCurve h_core(const Origami& o) { return core_curves(o).horizontal.at(0); }
PLCurve v_core(const Origami& o) { return core_curves(o).vertical.at(0); }

// Parallel copy of a curve on its left, used as a disjoint pushoff oracle.
PLCurve left_pushoff(const PLCurve& c, const Rational& eps) {
    PLCurve out = c;
    for (EdgePoint& p : out.points)
        p.t += Rational(left_of_curve_sign(p.side)) * eps;
    return out;
}

}  // namespace

TEST_CASE("curve validation") {
    Origami t = torus();
    CHECK(validate_curve(h_core(t)).ok());
    CHECK(validate_curve(v_core(t)).ok());

    // chord joining a side to itself
    PLCurve bad1(t, {EdgePoint(0, Side::L, Rational(1, 3)), EdgePoint(0, Side::R, Rational(2, 3))});
    CHECK_FALSE(validate_curve(bad1).ok());

    // two chords crossing inside one square
    PLCurve bad2(t, {EdgePoint(0, Side::L, Rational(1, 3)), EdgePoint(0, Side::L, Rational(2, 3))});
    CHECK_FALSE(validate_curve(bad2).ok());
}

TEST_CASE("reverse round-trips and stays valid") {
    Origami o = four_square();
    PLCurve h = h_core(o);
    PLCurve r = reverse(h);
    CHECK(validate_curve(r).ok());
    PLCurve rr = reverse(r);
    CHECK(rr.points == h.points);
}

TEST_CASE("general position") {
    Origami t = torus();
    PLCurve h = h_core(t), v = v_core(t);
    SECTION("already transverse pair is unchanged") {
        auto [a, b] = general_position(h, v);
        CHECK(a.points == h.points);
        CHECK(b.points == v.points);
    }
    SECTION("a copy is pushed off with zero crossings") {
        auto [a, b] = general_position(h, h);
        CHECK(in_general_position(a, b));
        CHECK(validate_curve(b).ok());
        CHECK(overlay(a, b).count() == 0);
    }
    SECTION("single shared point moves by the half-gap rule") {
        Origami o = four_square();
        PLCurve h1 = h_core(o);
        PLCurve v1 = v_core(o);
        v1.points[0].t = Rational(1, 2);  // already 1/2: v core clashes with nothing on its own edge
        auto [a, b] = general_position(h1, v1);
        CHECK(in_general_position(a, b));
    }
}

TEST_CASE("torus cores cross once with sign +1") {
    Origami t = torus();
    IntersectionData d = overlay(h_core(t), v_core(t));
    REQUIRE(d.count() == 1);
    CHECK(d.crossings[0].sign == 1);
    CHECK(d.crossings[0].point == Vec2(Rational(1, 2), Rational(1, 2)));
}

TEST_CASE("one-one cores cross n times, all signs equal") {
    for (int n : {1, 4, 5}) {
        for (const Origami& o : enumerate_one_one(n)) {
            IntersectionData d = overlay(h_core(o), v_core(o));
            REQUIRE(d.count() == o.n);
            for (const Crossing& c : d.crossings) CHECK(c.sign == d.crossings[0].sign);
            CHECK(std::abs(d.signed_sum()) == o.n);
        }
    }
}

TEST_CASE("algebraic intersection basics") {
    Origami o = four_square();
    PLCurve h = h_core(o), v = v_core(o);
    CHECK(std::abs(algebraic_intersection(h, v)) == 4);
    CHECK(algebraic_intersection(h, reverse(v)) == -algebraic_intersection(h, v));
    CHECK(algebraic_intersection(h, left_pushoff(h, Rational(1, 8))) == 0);
    // antisymmetry
    CHECK(algebraic_intersection(v, h) == -algebraic_intersection(h, v));
}

TEST_CASE("torus (p,q) pairing oracle") {
    // On the torus the algebraic intersection of slope curves is a 2x2
    // determinant; check a (1,1) diagonal against both cores.
    Origami t = torus();
    PLCurve diag(t, {EdgePoint(0, Side::L, Rational(1, 2)), EdgePoint(0, Side::B, Rational(1, 2))});
    REQUIRE(validate_curve(diag).ok());
    // <(1,0),(1,1)> = 1, <(0,1),(1,1)> = -1
    CHECK(std::abs(algebraic_intersection(h_core(t), diag)) == 1);
    CHECK(std::abs(algebraic_intersection(v_core(t), diag)) == 1);
    CHECK(algebraic_intersection(h_core(t), diag) == -algebraic_intersection(diag, h_core(t)));
}

TEST_CASE("complement analysis of one-one cores") {
    for (int n : {1, 4, 5, 6}) {
        auto list = enumerate_one_one(n);
        for (const Origami& o : list) {
            OverlayAnalysis an = analyze_overlay(h_core(o), v_core(o));
            int V = vertex_count(o);
            CHECK(an.bigons.empty());
            CHECK((int)an.components.size() == V);
            CHECK(an.all_discs);
            for (const ComponentInfo& ci : an.components) CHECK(ci.chi == 1);
        }
    }
}

TEST_CASE("filling detection") {
    Origami t = torus();
    CHECK(is_filling(h_core(t), v_core(t)));
    CHECK_FALSE(is_filling(h_core(t), left_pushoff(h_core(t), Rational(1, 8))));

    Origami o = four_square();
    FillingReport rep = filling_report(h_core(o), v_core(o));
    CHECK(rep.filling);
    CHECK(rep.crossings == 4);
    CHECK(rep.components == rep.crossings + 2 - 2 * genus(o));
}

TEST_CASE("a constructed bigon is removed, dropping crossings by two") {
    // b is a pushoff of the horizontal core with one chord replaced by a
    // finger that dips across the core and back through the square below.
    Origami o = four_square();
    PLCurve a = h_core(o);
    PLCurve b = left_pushoff(a, Rational(1, 8));  // runs at height 5/8

    int s = 0;
    int below = o.v.inverse()[s];
    // replace b's entry into square s by a detour: down across the core,
    // into the square below, and back up
    std::vector<EdgePoint> pts;
    for (const EdgePoint& p : b.points) {
        if (p.square == s) {
            //  enters s at (L,5/8), dives to the bottom edge, crosses into the
            //  square below, comes back up, then continues rightwards
            pts.push_back(p);                                      // (s, L, 5/8)
            pts.push_back(EdgePoint(below, Side::T, Rational(1, 3)));  // down
            pts.push_back(EdgePoint(s, Side::B, Rational(2, 3)));      // back up
        } else {
            pts.push_back(p);
        }
    }
    PLCurve bf(o, pts);
    REQUIRE(validate_curve(bf).ok());

    IntersectionData raw = overlay(a, bf);
    CHECK(raw.count() == 2);
    CHECK(raw.signed_sum() == 0);

    MinimalPair mp = reduce_to_minimal(a, bf);
    CHECK(mp.data.count() == 0);
    CHECK(validate_curve(mp.a).ok());
    CHECK(validate_curve(mp.b).ok());
}

TEST_CASE("geometric intersection on fixtures") {
    Origami o = four_square();
    PLCurve h = h_core(o), v = v_core(o);
    CHECK(geometric_intersection(h, v) == 4);
    CHECK(geometric_intersection(v, h) == 4);  // symmetry
    CHECK(geometric_intersection(h, left_pushoff(h, Rational(1, 16))) == 0);

    // reduction is a no-op on core pairs
    MinimalPair mp = reduce_to_minimal(h, v);
    CHECK(mp.a.points == h.points);
    CHECK(mp.data.count() == 4);
    // idempotent
    MinimalPair mp2 = reduce_to_minimal(mp.a, mp.b);
    CHECK(mp2.data.count() == 4);
}

TEST_CASE("coherence") {
    Origami o = four_square();
    CHECK(is_coherent(h_core(o), v_core(o)));
    CHECK(is_coherent(h_core(o), left_pushoff(h_core(o), Rational(1, 8))));  // 0 == 0

    // explicit 2-crossing opposite-sign fixture: geometric 2, algebraic 0
    PLCurve a = h_core(o);
    int s = 0;
    int above = o.v[s];
    // a curve that crosses the mid-height line of square s going up, wanders
    // over the top edge, and comes back down through the same square
    std::vector<EdgePoint> pts{
        EdgePoint(s, Side::B, Rational(1, 3)),
        EdgePoint(above, Side::B, Rational(1, 4)),   // continues upward
        EdgePoint(above, Side::L, Rational(1, 4)),   // re-enter from the left, low
        EdgePoint(s, Side::T, Rational(2, 3)),       // drop back down across a
    };
    PLCurve w(o, pts);
    if (validate_curve(w).ok()) {
        int geo = geometric_intersection(a, w);
        int alg = algebraic_intersection(a, w);
        CHECK(geo == 2);
        CHECK(alg == 0);
        CHECK_FALSE(is_coherent(a, w));
    } else {
        FAIL("incoherent fixture is not embedded");
    }
}
