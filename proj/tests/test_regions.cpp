#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "cfdyn/diamond.hpp"
#include "cfdyn/region.hpp"

using namespace cfdyn;

namespace {

RationalComplex rc(long nr, long dr, long ni, long di) {
    return {Rational(nr, dr), Rational(ni, di)};
}

// Rational points on the unit circle via the tangent half-angle map.
std::vector<RationalComplex> unit_circle_points(int n) {
    std::vector<RationalComplex> pts;
    for (int t = 1; t <= n; ++t) {
        Rational tt(t, n + 1);
        Rational den = 1 + tt * tt;
        pts.push_back({(1 - tt * tt) / den, 2 * tt / den});
    }
    return pts;
}

} // namespace

TEST_CASE("half-space membership matches hand distance checks") {
    HalfSpace re_le_half = HalfSpace::line_le(1, 0, Rational(1, 2));
    CHECK(re_le_half.contains(RationalComplex(0)));
    CHECK_FALSE(re_le_half.contains(RationalComplex(1)));
    CHECK(re_le_half.contains(RationalComplex(Rational(1, 2), 7))); // boundary closed

    // |w - (1/2 - 1/2 i)| <= 1/sqrt(2) at 0.3 + 0.1i: distance^2 = 0.4 <= 0.5.
    HalfSpace disk = HalfSpace::inside_disk(rc(1, 2, -1, 2), Rational(1, 2));
    CHECK(disk.contains(rc(3, 10, 1, 10)));

    // |w - (1/2 + 1/2 i)| >= 1/sqrt(2) at 0.9 + 0.5i: distance 0.4, inside.
    HalfSpace codisk = HalfSpace::outside_disk(rc(1, 2, 1, 2), Rational(1, 2));
    CHECK_FALSE(codisk.contains(rc(9, 10, 1, 2)));
}

TEST_CASE("float membership with tolerance and strict classification") {
    HalfSpace h = HalfSpace::line_le(1, 0, Rational(1, 2));
    CHECK(h.contains(FloatComplex{0.4999999999, 0.0}, 1e-9));
    CHECK(h.contains(FloatComplex{0.5000000001, 0.0}, 1e-9)); // within eps of boundary
    CHECK_FALSE(h.contains(FloatComplex{0.51, 0.0}, 1e-9));
    CHECK_THROWS_AS(h.contains_strict(FloatComplex{0.5 + 1e-13, 0.0}, 1e-9),
                    BoundaryAmbiguous);
    CHECK(h.contains_strict(FloatComplex{0.3, 2.0}, 1e-9));
}

TEST_CASE("circline pushforward: unit circle is S-invariant") {
    Circline unit = Circline::circle(RationalComplex(0), 1);
    auto [img, flipped] = unit.moebius_image(MoebiusMap::S());
    CHECK(img == unit);
    (void)flipped;
}

TEST_CASE("circline pushforward: circle |z+1|=1 under S is the line Re w = 1/2") {
    Circline c = Circline::circle(RationalComplex(-1), 1);
    auto [img, flipped] = c.moebius_image(MoebiusMap::S());
    CHECK(img == Circline::line(1, 0, Rational(1, 2)));
    (void)flipped;
}

TEST_CASE("circline pushforward: diamond edge x+y=1 under S") {
    Circline edge = Circline::line(1, 1, 1);
    auto [img, flipped] = edge.moebius_image(MoebiusMap::S());
    CHECK(img == Circline::circle(rc(-1, 2, 1, 2), Rational(1, 2)));
    (void)flipped;
}

TEST_CASE("half-space pushforward tracks sides") {
    // {Re z <= -1/2} under T is {Re z <= 1/2}.
    HalfSpace h = HalfSpace::line_le(1, 0, Rational(-1, 2));
    CHECK(h.moebius_image(MoebiusMap::T()) == HalfSpace::line_le(1, 0, Rational(1, 2)));

    // Closed disk around -1 under S is the half-plane {Re w >= 1/2}.
    HalfSpace disk = HalfSpace::inside_disk(RationalComplex(-1), 1);
    HalfSpace img = disk.moebius_image(MoebiusMap::S());
    CHECK(img == HalfSpace::line_ge(1, 0, Rational(1, 2)));

    // {|z| >= 1} under S is {|w| <= 1}: witness z = 2 maps to -1/2.
    HalfSpace codisk = HalfSpace::outside_disk(RationalComplex(0), 1);
    CHECK(codisk.moebius_image(MoebiusMap::S()) ==
          HalfSpace::inside_disk(RationalComplex(0), 1));
}

TEST_CASE("pushforward sends circle points to image circle points exactly") {
    std::vector<MoebiusMap> gens = {MoebiusMap::T(), MoebiusMap::U(), MoebiusMap::S(),
                                    MoebiusMap::T_inv(), MoebiusMap::U_inv()};
    Circline unit = Circline::circle(RationalComplex(0), 1);
    auto pts = unit_circle_points(25);
    for (const auto& g1 : gens)
        for (const auto& g2 : gens) {
            MoebiusMap m = g1.compose(g2);
            auto [img, flipped] = unit.moebius_image(m);
            (void)flipped;
            for (const auto& z : pts) {
                RationalComplex w;
                try {
                    w = m.apply(z);
                } catch (const PoleError&) {
                    continue;
                }
                CHECK(img.evaluate(w) == 0);
            }
        }
}

TEST_CASE("side consistency via interior witnesses") {
    std::vector<HalfSpace> hs = {
        HalfSpace::inside_disk(RationalComplex(-1), 1),
        HalfSpace::outside_disk(RationalComplex(0), 1),
        HalfSpace::line_le(1, 0, Rational(1, 2)),
        HalfSpace::line_ge(0, 1, Rational(-3, 2)),
        HalfSpace::inside_disk(rc(1, 2, 1, 2), Rational(1, 2)),
    };
    std::vector<MoebiusMap> gens = {MoebiusMap::T(), MoebiusMap::U(), MoebiusMap::S(),
                                    MoebiusMap::T_inv(), MoebiusMap::U_inv()};
    for (const auto& h : hs) {
        RationalComplex w = h.interior_witness();
        CHECK(h.contains(w));
        CHECK(h.boundary.evaluate(w) != 0);
        for (const auto& m : gens) {
            RationalComplex mw;
            try {
                mw = m.apply(w);
            } catch (const PoleError&) {
                continue;
            }
            CHECK(h.moebius_image(m).contains(mw));
        }
    }
}

TEST_CASE("exact subset decisions") {
    HalfSpace d1 = HalfSpace::inside_disk(RationalComplex(0), 1);
    HalfSpace d4 = HalfSpace::inside_disk(RationalComplex(0), 4);
    CHECK(d1.subset_of(d4));
    CHECK_FALSE(d4.subset_of(d1));

    // Unit disk at -3 fits in {Re z <= -2} (tangent) and {Re z <= -1}.
    HalfSpace far_disk = HalfSpace::inside_disk(RationalComplex(-3), 1);
    CHECK(far_disk.subset_of(HalfSpace::line_le(1, 0, -2)));
    CHECK(far_disk.subset_of(HalfSpace::line_le(1, 0, -1)));
    CHECK_FALSE(far_disk.subset_of(HalfSpace::line_le(1, 0, -3)));

    CHECK(HalfSpace::line_le(1, 0, -2).subset_of(HalfSpace::line_le(1, 0, -1)));
    CHECK_FALSE(HalfSpace::line_le(1, 0, -1).subset_of(HalfSpace::line_le(1, 0, -2)));
    CHECK(HalfSpace::outside_disk(RationalComplex(0), 4)
              .subset_of(HalfSpace::outside_disk(RationalComplex(0), 1)));
}

TEST_CASE("region boolean algebra is membership-exact") {
    Region r1 = Region::single(HalfSpace::line_le(1, 0, 0));   // Re <= 0
    Region r2 = Region::single(HalfSpace::line_le(0, 1, 0));   // Im <= 0
    Region uni = r1.unite(r2);
    Region inter = r1.intersect(r2);

    std::vector<RationalComplex> pts = {rc(-1, 2, 1, 3),  rc(1, 3, -1, 2),
                                        rc(-1, 5, -1, 7), rc(2, 3, 3, 4),
                                        RationalComplex(0)};
    for (const auto& z : pts) {
        CHECK(uni.contains(z) == (r1.contains(z) || r2.contains(z)));
        CHECK(inter.contains(z) == (r1.contains(z) && r2.contains(z)));
    }

    CHECK(Region::empty().unite(r1).contains(rc(-1, 2, 1, 3)));
    CHECK_FALSE(Region::empty().contains(RationalComplex(0)));
}

TEST_CASE("S is an involution on regions at sample points") {
    Region r = Region::single(HalfSpace::inside_disk(RationalComplex(-1), 1));
    Region back = r.moebius_image(MoebiusMap::S()).moebius_image(MoebiusMap::S());
    for (const auto& z : {rc(-1, 1, 0, 1), rc(-3, 2, 1, 4), rc(1, 2, 1, 2), rc(-9, 4, 0, 1)})
        CHECK(back.contains(z) == r.contains(z));
}

TEST_CASE("region equality verdicts") {
    const auto& ds = DiamondSets::instance();
    EqualityOptions opts;
    opts.grid = 200;
    opts.random_samples = 2000;

    CHECK(region_equal(ds.W(3), ds.W(3), opts).verdict == Verd::Equal);

    EqualityVerdict v = region_equal(ds.W(4), ds.W(5), opts);
    REQUIRE(v.verdict == Verd::Differ);
    // The witness must genuinely separate the regions.
    CHECK(ds.W(4).contains(v.witness) != ds.W(5).contains(v.witness));

    // 1/4 + 1/8 i lies in W5 but not W4.
    CHECK(ds.W(5).contains(rc(1, 4, 1, 8)));
    CHECK_FALSE(ds.W(4).contains(rc(1, 4, 1, 8)));
}

TEST_CASE("region JSON round-trip") {
    Region r = Region::cell_of({HalfSpace::inside_disk(rc(1, 2, -1, 2), Rational(1, 2)),
                                HalfSpace::line_ge(1, 1, Rational(-3, 7))})
                   .unite(Region::single(HalfSpace::outside_disk(RationalComplex(0), 1)));
    std::string j = region_to_json(r);
    Region back = region_from_json(j);
    CHECK(region_to_json(back) == j);
    for (const auto& z : {rc(1, 2, -1, 2), rc(5, 1, 0, 1), RationalComplex(0)})
        CHECK(back.contains(z) == r.contains(z));
}

TEST_CASE("seeded interior sampling") {
    const auto& ds = DiamondSets::instance();

    Box box{-1, 1, -1, 1};
    auto one = region_sample(ds.phi(), box, 1, 1);
    REQUIRE(one.size() == 1);
    CHECK(std::abs(one[0].real()) + std::abs(one[0].imag()) < 1);

    Box big{-4, 4, -4, 4};
    auto pts = region_sample(ds.W(1), big, 100, 7);
    REQUIRE(pts.size() == 100);
    for (FloatComplex z : pts) {
        CHECK(z.imag() <= z.real() - 1 + 1e-9);
        CHECK(in_wedge(z));
    }

    // Determinism: same seed, same points.
    auto again = region_sample(ds.W(1), big, 100, 7);
    CHECK(pts == again);

    CHECK_THROWS_AS(region_sample(Region::empty(), box, 1, 1), EmptyRegionInBox);
}
