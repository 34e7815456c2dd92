#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cfdyn/dihedral.hpp"
#include "cfdyn/moebius.hpp"
#include "cfdyn/numeric.hpp"

namespace cfdyn {

/// Rational point a/den + (b/den)i on a shared-denominator lattice.
/// Circline signs at such points are evaluated in pure integer arithmetic,
/// which is what makes dense exact sampling affordable.
struct LatticePoint {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t den = 1;

    RationalComplex to_rational() const {
        return {Rational(a, den), Rational(b, den)};
    }
    FloatComplex to_complex() const {
        return {double(a) / double(den), double(b) / double(den)};
    }
};

/// Line or circle as the locus A|z|^2 + 2 Re(conj(B) z) + C = 0 with
/// A, C integers and B a Gaussian integer, normalized: gcd 1 and the first
/// nonzero of (A, Re B, Im B, C) positive. A = 0 gives a line; A != 0 a
/// circle with center -B/A and radius^2 = (|B|^2 - AC)/A^2.
struct Circline {
    Integer A;
    GaussianInt B;
    Integer C;

    // int64 mirrors for the fast lattice path; valid iff fits64.
    bool fits64 = false;
    std::int64_t iA = 0, iBre = 0, iBim = 0, iC = 0;

    Circline() = default;

    /// Normalizes; returns true if the sign was flipped (callers tracking a
    /// half-space side must flip it too).
    static std::pair<Circline, bool> make(const Rational& A, const RationalComplex& B,
                                          const Rational& C);

    static Circline circle(const RationalComplex& center, const Rational& radius_sq);
    /// Locus nx*x + ny*y = rhs.
    static Circline line(const Rational& nx, const Rational& ny, const Rational& rhs);

    bool is_line() const { return A == 0; }
    bool operator==(const Circline& o) const {
        return A == o.A && B == o.B && C == o.C;
    }

    Rational evaluate(const RationalComplex& z) const {
        return Rational(A) * z.norm() + 2 * (Rational(B.re) * z.re + Rational(B.im) * z.im) +
               Rational(C);
    }
    double evaluate(FloatComplex z) const {
        return to_double(A) * std::norm(z) +
               2.0 * (to_double(B.re) * z.real() + to_double(B.im) * z.imag()) + to_double(C);
    }
    /// Exact sign at a lattice point: -1, 0, +1.
    int sign_at(const LatticePoint& p) const;

    /// Gradient magnitude |2Az + 2B|; scales form values to distances.
    double gradient_norm(FloatComplex z) const {
        FloatComplex g = 2.0 * to_double(A) * z + 2.0 * B.to_complex();
        return std::abs(g);
    }

    /// Image circline under z -> m(z) (substitutes z = m^{-1}(w); the form
    /// sign is preserved pointwise up to the returned flip flag).
    std::pair<Circline, bool> moebius_image(const MoebiusMap& m) const;
    std::pair<Circline, bool> dihedral_image(const DihedralElement& g) const;

    std::string to_string() const;

private:
    void fill_fast();
};

enum class Side : int { LE = -1, GE = +1 };

/// One circline inequality: form <= 0 or form >= 0. Membership is closed
/// (boundary included) and exact on rational points.
struct HalfSpace {
    Circline boundary;
    Side side = Side::LE;

    HalfSpace() = default;
    HalfSpace(Circline c, Side s) : boundary(std::move(c)), side(s) {}

    static HalfSpace make(const Rational& A, const RationalComplex& B, const Rational& C,
                          Side side) {
        auto [circ, flipped] = Circline::make(A, B, C);
        return {circ, flipped ? opposite(side) : side};
    }
    static HalfSpace inside_disk(const RationalComplex& center, const Rational& radius_sq);
    static HalfSpace outside_disk(const RationalComplex& center, const Rational& radius_sq);
    /// nx*x + ny*y <= rhs.
    static HalfSpace line_le(const Rational& nx, const Rational& ny, const Rational& rhs);
    static HalfSpace line_ge(const Rational& nx, const Rational& ny, const Rational& rhs);

    static Side opposite(Side s) { return s == Side::LE ? Side::GE : Side::LE; }

    HalfSpace complement() const { return {boundary, opposite(side)}; }

    bool operator==(const HalfSpace& o) const = default;

    bool contains(const RationalComplex& z) const {
        int s = boost::multiprecision::sign(boundary.evaluate(z));
        return s == 0 || s == static_cast<int>(side);
    }
    bool contains(const LatticePoint& p) const {
        int s = boundary.sign_at(p);
        return s == 0 || s == static_cast<int>(side);
    }
    bool on_boundary(const LatticePoint& p) const { return boundary.sign_at(p) == 0; }

    /// Approximate signed distance into the half-space (positive inside).
    double signed_margin(FloatComplex z) const {
        double f = static_cast<int>(side) * boundary.evaluate(z);
        double g = boundary.gradient_norm(z);
        return f / std::max(g, 1e-300);
    }
    bool contains(FloatComplex z, double eps) const { return signed_margin(z) >= -eps; }
    /// Strict classification; throws when z is within eps of the boundary.
    bool contains_strict(FloatComplex z, double eps) const {
        double m = signed_margin(z);
        if (std::abs(m) < eps)
            throw BoundaryAmbiguous("point within eps of circline boundary");
        return m > 0;
    }

    HalfSpace moebius_image(const MoebiusMap& m) const {
        auto [circ, flipped] = boundary.moebius_image(m);
        return {circ, flipped ? opposite(side) : side};
    }
    HalfSpace dihedral_image(const DihedralElement& g) const {
        auto [circ, flipped] = boundary.dihedral_image(g);
        return {circ, flipped ? opposite(side) : side};
    }

    /// Exact test: is this half-space a subset of `other`? Decides disk/disk,
    /// disk/half-plane, half-plane/half-plane and complement cases; returns
    /// false when containment cannot be certified.
    bool subset_of(const HalfSpace& other) const;

    /// Deterministic rational interior witness (strictly off the boundary),
    /// found on a lattice spiral. Used as a test oracle for side tracking.
    RationalComplex interior_witness() const;

    std::string to_string() const;
};

} // namespace cfdyn
