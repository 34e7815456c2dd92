#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cfdyn/diamond.hpp"

using namespace cfdyn;

namespace {

bool close(FloatComplex a, FloatComplex b, double tol = 1e-12) {
    return std::abs(a - b) <= tol;
}

RationalComplex rc(long nr, long dr, long ni, long di) {
    return {Rational(nr, dr), Rational(ni, di)};
}

} // namespace

TEST_CASE("diamond membership by 1-norm") {
    CHECK(phi_contains(RationalComplex(0)));
    CHECK(phi_contains(rc(3, 5, 1, 5)));        // 1-norm 0.8
    CHECK_FALSE(phi_contains(rc(4, 5, 3, 10))); // 1-norm 1.1
    CHECK(phi_contains(rc(1, 2, -1, 2)));       // boundary closed
    CHECK(phi_contains(FloatComplex{0.6, 0.2}));
    CHECK_FALSE(phi_contains(FloatComplex{0.8, 0.3}));
}

TEST_CASE("f_diamond applies S inside the diamond, translations outside") {
    CHECK(f_diamond(RationalComplex(Rational(3, 10))) ==
          RationalComplex(Rational(-10, 3)));
    CHECK(close(f_diamond(FloatComplex{3.0, 0.5}), {2.0, 0.5}));
    CHECK(close(f_diamond(FloatComplex{-0.5, 2.0}), {-0.5, 1.0}));
    CHECK_THROWS_AS(f_diamond(RationalComplex(0)), PoleError);

    // Priority: inside the diamond the S branch wins over the arg table.
    CHECK(branch_of(RationalComplex(Rational(1, 2))) == Branch::S);
    CHECK(f_diamond(RationalComplex(Rational(1, 2))) == RationalComplex(-2));
}

TEST_CASE("f_diamond agrees with f_empty outside the diamond") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<long> num(-4 * 16, 4 * 16);
    int tested = 0;
    while (tested < 300) {
        RationalComplex z(Rational(num(rng), 16), Rational(num(rng), 16));
        if (phi_contains(z)) continue;
        CHECK(f_diamond(z) == f_empty(z));
        ++tested;
    }
}

TEST_CASE("branch map matches the applied branch") {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> coord(-4, 4);
    for (int i = 0; i < 300; ++i) {
        FloatComplex z{coord(rng), coord(rng)};
        if (std::abs(z) < 0.05) continue;
        Branch b = branch_of(z);
        CHECK(close(f_diamond(z), branch_map(b).apply(z), 1e-9));
    }
}

TEST_CASE("cell classification folds and matches the inequality tables") {
    PartitionCell c1 = classify_cell(FloatComplex{3.0, 0.5});
    CHECK(c1.g == DihedralElement::identity());
    CHECK(c1.k == 1);

    PartitionCell c3 = classify_cell(FloatComplex{0.9, 0.5});
    CHECK(c3.g == DihedralElement::identity());
    CHECK(c3.k == 3);

    PartitionCell cr = classify_cell(FloatComplex{0.2, 1.0});
    CHECK(cr.g == DihedralElement::rho());
    CHECK(cr.k == 3);

    CHECK_THROWS_AS(classify_cell(RationalComplex(0)), OriginError);
}

TEST_CASE("classification is Dih4-equivariant on interior points") {
    const auto& ds = DiamondSets::instance();
    Box box{-4, 4, -4, 4};
    for (int k = 1; k <= 5; ++k) {
        auto pts = region_sample(ds.W(k), box, 40, 13 + k, 1e-6);
        for (FloatComplex w : pts) {
            PartitionCell base = classify_cell(w);
            CHECK(base.g == DihedralElement::identity());
            CHECK(base.k == k);
            for (const auto& g : DihedralElement::all()) {
                PartitionCell moved = classify_cell(g.apply(w));
                CHECK(moved.g == g);
                CHECK(moved.k == k);
            }
        }
    }
}

TEST_CASE("partition image table rows") {
    const auto& rows = partition_image_rows();
    REQUIRE(rows.size() == 5);

    CHECK(rows[0].k == 1);
    CHECK(rows[0].branch == Branch::Tinv);
    REQUIRE(rows[0].images.size() == 5);
    for (int j = 0; j < 5; ++j) {
        CHECK(rows[0].images[j].first == DihedralElement::identity());
        CHECK(rows[0].images[j].second == j + 1);
    }

    CHECK(rows[1].k == 2);
    CHECK(rows[1].branch == Branch::Tinv);
    REQUIRE(rows[1].images.size() == 3);
    for (int j = 0; j < 3; ++j) {
        CHECK(rows[1].images[j].first == DihedralElement::rho());
        CHECK(rows[1].images[j].second == j + 2);
    }

    CHECK(rows[2].k == 3);
    CHECK(rows[2].branch == Branch::Tinv);
    REQUIRE(rows[2].images.size() == 3);
    CHECK(rows[2].images[0] == std::pair{DihedralElement::rho(), 5});
    CHECK(rows[2].images[1] == std::pair{DihedralElement::iota(), 5});
    CHECK(rows[2].images[2] == std::pair{DihedralElement::iota(), 4});

    CHECK(rows[3].k == 4);
    CHECK(rows[3].branch == Branch::S);
    REQUIRE(rows[3].images.size() == 1);
    CHECK(rows[3].images[0] == std::pair{DihedralElement::eta(), 2});

    CHECK(rows[4].k == 5);
    CHECK(rows[4].branch == Branch::S);
    REQUIRE(rows[4].images.size() == 1);
    CHECK(rows[4].images[0] == std::pair{DihedralElement::eta(), 1});
}

TEST_CASE("partition lemma rows verify mechanically") {
    EqualityOptions opts;
    opts.grid = 200;
    opts.random_samples = 2000;
    PartitionReport rep = verify_partition_lemma(opts);
    REQUIRE(rep.rows.size() == 6); // five image rows + the diamond cover identity
    for (const auto& r : rep.rows) {
        INFO(r.name, ": witness ", r.witness);
        CHECK(r.passed());
    }
}

TEST_CASE("sampled images of W2 land in the predicted cells") {
    const auto& ds = DiamondSets::instance();
    Box box{-4, 4, -4, 4};
    auto pts = region_sample(ds.W(2), box, 200, 17, 1e-6);
    for (FloatComplex w : pts) {
        FloatComplex img = MoebiusMap::T_inv().apply(w);
        PartitionCell c = classify_cell(img);
        CHECK(c.g == DihedralElement::rho());
        CHECK(c.k >= 2);
        CHECK(c.k <= 4);
    }
}
