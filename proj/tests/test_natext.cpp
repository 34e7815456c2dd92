#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cfdyn/natext.hpp"

using namespace cfdyn;

namespace {

bool close(FloatComplex a, FloatComplex b, double tol = 1e-12) {
    return std::abs(a - b) <= tol;
}

EqualityOptions fast_opts() {
    EqualityOptions opts;
    opts.grid = 200;
    opts.random_samples = 2000;
    return opts;
}

} // namespace

TEST_CASE("natural extension moves both coordinates by the w-branch") {
    auto [z1, w1] = F_diamond({2, 0}, {3, 0.5});
    CHECK(close(z1, {1, 0}));
    CHECK(close(w1, {2, 0.5}));

    auto [z2, w2] = F_diamond({2, 0}, {0.3, 0});
    CHECK(close(z2, {-0.5, 0}));
    CHECK(close(w2, {-10.0 / 3.0, 0}, 1e-12));

    auto [z3, w3] = F_diamond({0, 1}, {-2, -2.5});
    CHECK(close(z3, {0, 2}));
    CHECK(close(w3, {-2, -1.5}));

    CHECK_THROWS_AS(F_diamond({1.5, 0.5}, {1.5, 0.5}), DiagonalError);
    CHECK_THROWS_AS(F_diamond({2, 0}, {0, 0}), PoleError);
    CHECK_THROWS_AS(F_diamond({0, 0}, {0.3, 0}), PoleError); // S branch, z pole
}

TEST_CASE("bijectivity domain membership") {
    CHECK(D_contains({-2, 0}, {3, 0.2}));
    CHECK_FALSE(D_contains({3, 0}, {3.5, 0.2}));
    CHECK(D_contains({0, 0}, {3, 0.2})); // boundary-closed: |0 - 1| = 1
}

TEST_CASE("hat-Z regions reproduce the Z regions") {
    const auto& ne = NatExtSets::instance();
    EqualityOptions opts = fast_opts();
    for (int k = 1; k <= 5; ++k) {
        EqualityVerdict v = region_equal(hatZ_compute(k), ne.Z(k), opts);
        INFO("k = ", k, " witness ", v.witness.to_string());
        CHECK(v.verdict == Verd::Equal);
    }
    // hat-Z5 assembles from three pieces, two of them copies of T^-1 Z3.
    CHECK(hatZ_pieces(5).size() == 3);
}

TEST_CASE("explicit recipe for hat-Z1: T^-1 Z1 union eta S Z5") {
    const auto& ne = NatExtSets::instance();
    Region lhs = ne.Z(1)
                     .moebius_image(MoebiusMap::T_inv())
                     .unite(ne.Z(5)
                                .moebius_image(MoebiusMap::S())
                                .dihedral_image(DihedralElement::eta()));
    CHECK(region_equal(lhs, ne.Z(1), fast_opts()).verdict == Verd::Equal);
}

TEST_CASE("bijectivity report passes at reduced density") {
    BijectivityReport rep = verify_bijectivity(fast_opts(), 1000, 2);
    REQUIRE(rep.equalities.size() == 5);
    for (const auto& r : rep.equalities) {
        INFO(r.name, ": witness ", r.witness);
        CHECK(r.passed());
    }
    for (const auto& r : rep.piece_overlaps)
        CHECK(r.verdict != Verd::Differ);
    CHECK(rep.invariance_failures == 0);
    CHECK(rep.all_passed());
}

TEST_CASE("V membership: unit disk times S(diamond)") {
    CHECK(V_contains({-0.5, 0}, {1.2, 0.3}));
    CHECK_FALSE(V_contains({2, 0}, {1.2, 0.3}));
    CHECK(V_contains({0.3, 0}, {1.01, 0}));
    CHECK_FALSE(V_contains({0.3, 0}, {0.5, 0})); // S(0.5) = -2 outside the diamond
}

TEST_CASE("orbits reach V and report the entry index") {
    OrbitResult r0 = orbit_until_V({-0.5, 0}, {1.2, 0.3}, 10);
    CHECK(r0.entry_index == 0);

    OrbitResult r = orbit_until_V({10, 10}, {std::sqrt(2.0), std::sqrt(3.0)}, 200);
    CHECK(r.entry_index >= 0);
    CHECK(r.entry_index <= 200);
    REQUIRE(!r.full_trace.empty());
    CHECK(r.full_trace.back().in_V);

    CHECK_THROWS_AS(orbit_until_V({10, 10}, {std::sqrt(2.0), std::sqrt(3.0)}, 1),
                    BudgetExhausted);
}

TEST_CASE("psi construction stabilizes with the expected early atoms") {
    PsiBuild build = build_psi();
    CHECK(build.stabilized_at == 4);

    // Round 1 adds the closed unit disk at -1 to the W1 Z-part.
    HalfSpace b_minus1 = HalfSpace::inside_disk(RationalComplex(-1), 1);
    bool found1 = false;
    for (const auto& h : build.atoms[0])
        if (h == b_minus1) found1 = true;
    CHECK(found1);

    // Round 2 adds the half-planes Re <= -1/2 and Im <= -1/2 to the W2 Z-part.
    bool found_re = false, found_im = false;
    for (const auto& h : build.atoms[1]) {
        if (h == HalfSpace::line_le(1, 0, Rational(-1, 2))) found_re = true;
        if (h == HalfSpace::line_le(0, 1, Rational(-1, 2))) found_im = true;
    }
    CHECK(found_re);
    CHECK(found_im);

    // Every atom is a unit disk or a half-plane.
    for (const auto& cell_atoms : build.atoms)
        for (const auto& h : cell_atoms) {
            if (h.boundary.is_line()) continue;
            Rational r2 = (Rational(h.boundary.B.norm()) -
                           Rational(h.boundary.A * h.boundary.C)) /
                          Rational(h.boundary.A * h.boundary.A);
            CHECK(r2 == 1);
        }
}

TEST_CASE("psi report: closed forms, containment, invariance") {
    PsiBuild build = build_psi();
    PsiReport rep = verify_psi(build, fast_opts(), 1000, 3);
    REQUIRE(rep.closed_form_equalities.size() == 5);
    for (const auto& r : rep.closed_form_equalities) {
        INFO(r.name, ": witness ", r.witness);
        CHECK(r.passed());
    }
    for (const auto& r : rep.z_subset_checks)
        CHECK(r.passed());
    CHECK(rep.stabilized_at == 4);
    CHECK(rep.invariance_failures == 0);
    CHECK(rep.v_subset_psi);
    CHECK(rep.all_passed());
}

TEST_CASE("Z_k is contained in the trapping part A_k") {
    const auto& ne = NatExtSets::instance();
    EqualityOptions opts = fast_opts();
    for (int k = 1; k <= 5; ++k) {
        EqualityVerdict v = region_subset(ne.Z(k), ne.A(k), opts);
        INFO("k = ", k, " witness ", v.witness.to_string());
        CHECK(v.verdict == Verd::Equal);
    }
}

TEST_CASE("orbits that enter V stay trapped in psi") {
    PsiBuild build = build_psi();
    ProductSet psi = build.product();
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> coord(-5, 5);
    int traced = 0;
    while (traced < 20) {
        FloatComplex z{coord(rng), coord(rng)};
        FloatComplex w{coord(rng), coord(rng)};
        if (std::abs(z - w) <= 0.1) continue;
        OrbitResult r;
        try {
            r = orbit_until_V(z, w, 200);
        } catch (const Error&) {
            continue; // measure-zero pole/diagonal encounters
        }
        FloatComplex cz = r.full_trace.back().z, cw = r.full_trace.back().w;
        bool stayed = true;
        try {
            for (int s = 0; s < 100; ++s) {
                std::tie(cz, cw) = F_diamond(cz, cw);
                if (!psi.contains(cz, cw, 1e-6)) stayed = false;
            }
        } catch (const Error&) {
            continue;
        }
        CHECK(stayed);
        ++traced;
    }
}
