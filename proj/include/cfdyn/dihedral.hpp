#pragma once

#include <array>
#include <string>

#include "cfdyn/numeric.hpp"

namespace cfdyn {

/// Element of Dih4 acting on C. Encoded as w -> i^rot * w (refl = false)
/// or w -> i^rot * conj(w) (refl = true). The eight elements are
/// iota^j and eta.iota^j with iota: w -> iw and eta: w -> -conj(w);
/// rho := eta.iota is w -> i*conj(w).
struct DihedralElement {
    int rot = 0; // power of i, 0..3
    bool refl = false;

    static DihedralElement identity() { return {}; }
    static DihedralElement iota(int j = 1) { return {((j % 4) + 4) % 4, false}; }
    // eta.iota^m == (rot = 2 - m mod 4, refl)
    static DihedralElement eta_iota(int m = 0) { return {((2 - m) % 4 + 4) % 4, true}; }
    static DihedralElement eta() { return eta_iota(0); }
    static DihedralElement rho() { return eta_iota(1); }

    bool operator==(const DihedralElement& o) const = default;

    // Composition g1 * g2 means "apply g2 first".
    DihedralElement operator*(const DihedralElement& o) const {
        DihedralElement r;
        r.refl = refl != o.refl;
        r.rot = ((refl ? rot - o.rot : rot + o.rot) % 4 + 4) % 4;
        return r;
    }

    DihedralElement inverse() const {
        if (refl) return *this; // every reflection here is an involution
        return {(4 - rot) % 4, false};
    }

    FloatComplex apply(FloatComplex z) const {
        if (refl) z = std::conj(z);
        switch (rot) {
            case 1: return {-z.imag(), z.real()};
            case 2: return -z;
            case 3: return {z.imag(), -z.real()};
            default: return z;
        }
    }

    RationalComplex apply(const RationalComplex& z) const {
        RationalComplex w = refl ? z.conj() : z;
        switch (rot) {
            case 1: return {-w.im, w.re};
            case 2: return -w;
            case 3: return {w.im, -w.re};
            default: return w;
        }
    }

    GaussianInt apply(const GaussianInt& z) const {
        GaussianInt w = refl ? z.conj() : z;
        switch (rot) {
            case 1: return {-w.im, w.re};
            case 2: return -w;
            case 3: return {w.im, -w.re};
            default: return w;
        }
    }

    // The multiplier u in w -> u*w or w -> u*conj(w).
    GaussianInt unit() const {
        switch (rot) {
            case 1: return {0, 1};
            case 2: return {-1, 0};
            case 3: return {0, -1};
            default: return {1, 0};
        }
    }

    std::string name() const {
        if (!refl) {
            static const char* names[] = {"id", "iota", "iota^2", "iota^3"};
            return names[rot];
        }
        int m = ((2 - rot) % 4 + 4) % 4;
        static const char* names[] = {"eta", "eta*iota", "eta*iota^2", "eta*iota^3"};
        return names[m];
    }

    /// Canonical enumeration order: iota^0..iota^3, eta*iota^0..eta*iota^3.
    static std::array<DihedralElement, 8> all() {
        return {iota(0), iota(1), iota(2), iota(3),
                eta_iota(0), eta_iota(1), eta_iota(2), eta_iota(3)};
    }
};

/// True iff z lies in the wedge C* = {0 <= arg z < pi/4}.
inline bool in_wedge(const RationalComplex& z) {
    return z.re > 0 && z.im >= 0 && z.im < z.re;
}

inline bool in_wedge(FloatComplex z) {
    return z.real() > 0 && z.imag() >= 0 && z.imag() < z.real();
}

/// Folds z into C*: returns (g, rep) with g(rep) == z and rep in the wedge.
/// Ties on wedge boundaries resolve by first match in canonical order.
template <typename C>
std::pair<DihedralElement, C> fold_to_wedge(const C& z) {
    bool zero;
    if constexpr (std::is_same_v<C, FloatComplex>) zero = (z == FloatComplex{});
    else zero = z.is_zero();
    if (zero) throw OriginError("fold_to_wedge undefined at z = 0");
    for (const auto& g : DihedralElement::all()) {
        C rep = g.inverse().apply(z);
        if (in_wedge(rep)) return {g, rep};
    }
    // Rays with arg an odd multiple of pi/4 have no half-open representative.
    // Re-imposing lower-closed boundaries on the orientation-reversed image
    // sectors assigns each such ray to a reflection; its representative sits
    // on the closed edge im == re.
    for (const auto& g : DihedralElement::all()) {
        if (!g.refl) continue;
        C rep = g.inverse().apply(z);
        bool on_edge;
        if constexpr (std::is_same_v<C, FloatComplex>)
            on_edge = rep.real() > 0 && rep.imag() == rep.real();
        else
            on_edge = rep.re > 0 && rep.im == rep.re;
        if (on_edge) return {g, rep};
    }
    throw Error("fold_to_wedge: no wedge representative found"); // unreachable
}

} // namespace cfdyn
