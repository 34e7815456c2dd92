#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "cfdyn/cf.hpp"

using namespace cfdyn;

namespace {

bool close(FloatComplex a, FloatComplex b, double tol = 1e-12) {
    return std::abs(a - b) <= tol;
}

} // namespace

TEST_CASE("hurwitz choice rounds to the nearest lattice point") {
    CHECK(choice_hurwitz(FloatComplex{0, 0}) == GaussianInt(0));
    CHECK(choice_hurwitz(FloatComplex{0.6, 0.7}) == GaussianInt(1, 1));
    // Ties round half toward -inf in each coordinate.
    CHECK(choice_hurwitz(FloatComplex{0.5, 0.5}) == GaussianInt(0, 0));
    CHECK(choice_hurwitz(RationalComplex(Rational(-1, 2), Rational(3, 2))) ==
          GaussianInt(-1, 1));
}

TEST_CASE("f_empty translates one unit toward the origin by the arg table") {
    CHECK(close(f_empty(FloatComplex{2.3, 0.1}), {1.3, 0.1}));
    CHECK(close(f_empty(FloatComplex{1.0, 1.5}), {1.0, 0.5}));
    CHECK(f_empty(RationalComplex(-3)) == RationalComplex(-2)); // arg = pi adds 1
    CHECK(f_empty(RationalComplex(0, -3)) == RationalComplex(0, -2));
    CHECK_THROWS_AS(f_empty(RationalComplex(0)), OriginError);
}

TEST_CASE("diamond choice walks into the diamond") {
    CHECK(choice_diamond(FloatComplex{0.3, -0.2}) == GaussianInt(0));
    CHECK(choice_diamond(FloatComplex{2.3, 0.1}) == GaussianInt(2));
    CHECK(choice_diamond(FloatComplex{1.0, 1.5}) == GaussianInt(1, 1));
    // Gaussian integers are fixed, including the diamond vertices.
    CHECK(choice_diamond(RationalComplex(5)) == GaussianInt(5));
    CHECK(choice_diamond(RationalComplex(1)) == GaussianInt(1));
    CHECK(choice_diamond(RationalComplex(0, -1)) == GaussianInt(0, -1));
    CHECK(choice_diamond(RationalComplex(0)) == GaussianInt(0));
}

TEST_CASE("choice validity: z - c(z) stays within reach") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-6 * 64, 6 * 64);
    for (int i = 0; i < 500; ++i) {
        RationalComplex z(Rational(num(rng), 64), Rational(num(rng), 64));
        RationalComplex rd = z - RationalComplex(choice_diamond(z));
        CHECK(phi_diamond_contains(rd)); // exact: |x| + |y| <= 1
        RationalComplex rh = z - RationalComplex(choice_hurwitz(z));
        CHECK(rh.norm() <= 1);
    }
}

TEST_CASE("expansion of exact rationals terminates with exact reconstruction") {
    Expansion e5 = expand(RationalComplex(5), ChoiceFunction::diamond(), 10);
    REQUIRE(e5.digits.size() == 1);
    CHECK(e5.digits[0] == GaussianInt(5));
    CHECK(e5.terminated);

    Expansion e0 = expand(RationalComplex(0), ChoiceFunction::diamond(), 3);
    REQUIRE(e0.digits.size() == 1);
    CHECK(e0.digits[0] == GaussianInt(0));
    CHECK(e0.terminated);

    Expansion e = expand(RationalComplex(2, 1), ChoiceFunction::diamond(), 10);
    CHECK(e.terminated);
    CHECK(evaluate_cf_exact(e.digits) == RationalComplex(2, 1));

    Expansion eq = expand(RationalComplex(Rational(7, 3), Rational(-2, 5)),
                          ChoiceFunction::diamond(), 64);
    CHECK(eq.terminated);
    CHECK(evaluate_cf_exact(eq.digits) ==
          RationalComplex(Rational(7, 3), Rational(-2, 5)));
}

TEST_CASE("float expansion keeps remainders outside the unit disk") {
    FloatComplex z{std::sqrt(2.0), std::sqrt(3.0)};
    Expansion e = expand(z, ChoiceFunction::diamond(), 40);
    REQUIRE(e.digits.size() == 40);
    CHECK_FALSE(e.terminated);
    for (std::size_t n = 1; n < e.remainders.size(); ++n)
        CHECK(std::abs(e.remainders[n]) >= 1 - 1e-12);
    // z_{n+1} = -1/(z_n - a_n) holds along the recorded orbit.
    for (std::size_t n = 0; n + 1 < e.remainders.size(); ++n)
        CHECK(close(e.remainders[n + 1],
                    -1.0 / (e.remainders[n] - e.digits[n].to_complex()), 1e-6));
}

TEST_CASE("convergent recurrence from the seeded initial values") {
    auto one = convergents({GaussianInt(2, 1)});
    REQUIRE(one.size() == 1);
    CHECK(one[0].p == GaussianInt(2, 1));
    CHECK(one[0].q == GaussianInt(1));

    auto two = convergents({GaussianInt(2, 1), GaussianInt(-1, 2)});
    REQUIRE(two.size() == 2);
    CHECK(two[1].p == GaussianInt(-5, 3));
    CHECK(two[1].q == GaussianInt(-1, 2));

    // p_1 q_0 - p_0 q_1 equals the seed determinant -1.
    GaussianInt det = two[1].p * two[0].q - two[0].p * two[1].q;
    CHECK(det == GaussianInt(-1));
}

TEST_CASE("cross determinant is constant for random digit sequences") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> coeff(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<GaussianInt> digits;
        while (digits.size() < 20) {
            GaussianInt a(coeff(rng), coeff(rng));
            if (boost::multiprecision::abs(a.re) + boost::multiprecision::abs(a.im) >= 2)
                digits.push_back(a);
        }
        auto cs = convergents(digits);
        GaussianInt prev_p(1), prev_q(0); // p_{-1}, q_{-1}
        for (const auto& c : cs) {
            CHECK(c.p * prev_q - prev_p * c.q == GaussianInt(-1));
            prev_p = c.p;
            prev_q = c.q;
        }
    }
}

TEST_CASE("backward evaluation of finite minus continued fractions") {
    CHECK(evaluate_cf({GaussianInt(3)}) == FloatComplex{3, 0});
    CHECK(evaluate_cf_exact({GaussianInt(2, 1), GaussianInt(2)}) ==
          RationalComplex(Rational(3, 2), 1));
    CHECK_THROWS_AS(evaluate_cf_exact({GaussianInt(2), GaussianInt(0)}), DivisionByZero);
}

TEST_CASE("evaluate_cf agrees with the convergent quotient") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> coeff(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<GaussianInt> digits;
        std::size_t len = 1 + trial % 8;
        while (digits.size() < len) {
            GaussianInt a(coeff(rng), coeff(rng));
            if (boost::multiprecision::abs(a.re) + boost::multiprecision::abs(a.im) >= 2)
                digits.push_back(a);
        }
        auto cs = convergents(digits);
        RationalComplex pq =
            RationalComplex(cs.back().p) / RationalComplex(cs.back().q);
        CHECK(evaluate_cf_exact(digits) == pq);
        CHECK(close(evaluate_cf(digits), pq.to_complex(), 1e-9));
    }
}

TEST_CASE("remainder identity residual vanishes numerically") {
    FloatComplex z{M_PI / 3, std::exp(1.0) / 4};
    Expansion e = expand(z, ChoiceFunction::diamond(), 17);
    CHECK(check_identity_residual(z, e, 0) < 1e-12);
    CHECK(check_identity_residual(z, e, 10) < 1e-9);
    for (int n = 1; n <= 15; ++n)
        CHECK(check_identity_residual(z, e, n) <= 1.0);
}

TEST_CASE("convergents approach the target and denominators blow up") {
    FloatComplex z{std::sqrt(2.0), std::sqrt(3.0)};
    ConvergenceReport r = convergence_report(z, ChoiceFunction::diamond(), 60);
    CHECK(r.q_never_zero);
    double best_err = 1e300, best_q = 0;
    for (double e : r.errors) best_err = std::min(best_err, e);
    for (double q : r.q_norms) best_q = std::max(best_q, q);
    CHECK(best_err < 1e-8);
    CHECK(best_q > 1e6);
}

TEST_CASE("product of remainders is eventually monotone past large bounds") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> coord(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        FloatComplex z{coord(rng), coord(rng)};
        Expansion e = expand(z, ChoiceFunction::diamond(), 80);
        double logprod = 0;
        bool passed10 = false, passed1e6 = false;
        for (std::size_t n = 1; n < e.remainders.size(); ++n) {
            logprod += std::log(std::abs(e.remainders[n]));
            if (logprod > std::log(10.0)) passed10 = true;
            if (logprod > 6 * std::log(10.0)) passed1e6 = true;
        }
        CHECK(passed10);
        CHECK(passed1e6);
    }
}
