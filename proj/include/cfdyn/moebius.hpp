#pragma once

#include <string>

#include "cfdyn/numeric.hpp"

namespace cfdyn {

/// 2x2 matrix over Z[i] with unit-norm determinant, acting as
/// z -> (az + b)/(cz + d). Matrices are kept unreduced; equality is up to
/// multiplication by a unit in {1, -1, i, -i} (S^2 = -I as a matrix but
/// the identity as a map).
struct MoebiusMap {
    GaussianInt a, b, c, d;

    MoebiusMap() : a(1), b(0), c(0), d(1) {}
    MoebiusMap(GaussianInt a_, GaussianInt b_, GaussianInt c_, GaussianInt d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (!det().is_unit())
            throw Error("Moebius matrix determinant must have norm 1");
    }

    static MoebiusMap identity() { return {}; }
    static MoebiusMap T() { return {{1}, {1}, {0}, {1}}; }     // z + 1
    static MoebiusMap U() { return {{1}, {0, 1}, {0}, {1}}; }  // z + i
    static MoebiusMap S() { return {{0}, {-1}, {1}, {0}}; }    // -1/z
    static MoebiusMap T_inv() { return T().inverse(); }
    static MoebiusMap U_inv() { return U().inverse(); }

    GaussianInt det() const { return a * d - b * c; }

    MoebiusMap compose(const MoebiusMap& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    MoebiusMap operator*(const MoebiusMap& o) const { return compose(o); }

    // Adjugate: exact inverse as a map (differs from the matrix inverse by
    // the unit determinant).
    MoebiusMap inverse() const { return {d, -b, -c, a}; }

    bool same_map(const MoebiusMap& o) const {
        static const GaussianInt units[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        for (const auto& u : units)
            if (a == o.a * u && b == o.b * u && c == o.c * u && d == o.d * u) return true;
        return false;
    }

    RationalComplex apply(const RationalComplex& z) const {
        RationalComplex den = RationalComplex(c) * z + RationalComplex(d);
        if (den.is_zero()) throw PoleError();
        return (RationalComplex(a) * z + RationalComplex(b)) / den;
    }

    FloatComplex apply(FloatComplex z) const {
        FloatComplex den = c.to_complex() * z + d.to_complex();
        if (den == FloatComplex{}) throw PoleError();
        return (a.to_complex() * z + b.to_complex()) / den;
    }

    std::string to_string() const {
        return "[[" + format_gaussian(a) + ", " + format_gaussian(b) + "], [" +
               format_gaussian(c) + ", " + format_gaussian(d) + "]]";
    }
};

} // namespace cfdyn
