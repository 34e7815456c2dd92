#include "cfdyn/circline.hpp"

#include <boost/multiprecision/integer.hpp>

namespace cfdyn {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

bool fits_int64(const Integer& x) {
    return x >= std::numeric_limits<std::int64_t>::min() &&
           x <= std::numeric_limits<std::int64_t>::max();
}

} // namespace

void Circline::fill_fast() {
    fits64 = fits_int64(A) && fits_int64(B.re) && fits_int64(B.im) && fits_int64(C);
    if (fits64) {
        iA = A.convert_to<std::int64_t>();
        iBre = B.re.convert_to<std::int64_t>();
        iBim = B.im.convert_to<std::int64_t>();
        iC = C.convert_to<std::int64_t>();
    }
}

std::pair<Circline, bool> Circline::make(const Rational& Ar, const RationalComplex& Br,
                                         const Rational& Cr) {
    Integer L = lcm(lcm(rat_den(Ar), rat_den(Cr)), lcm(rat_den(Br.re), rat_den(Br.im)));
    Integer a = rat_num(Ar) * (L / rat_den(Ar));
    Integer bre = rat_num(Br.re) * (L / rat_den(Br.re));
    Integer bim = rat_num(Br.im) * (L / rat_den(Br.im));
    Integer c = rat_num(Cr) * (L / rat_den(Cr));
    if (a == 0 && bre == 0 && bim == 0 && c == 0)
        throw Error("degenerate circline: all coefficients zero");

    Integer g = gcd(gcd(abs(a), abs(c)), gcd(abs(bre), abs(bim)));
    a /= g;
    bre /= g;
    bim /= g;
    c /= g;

    bool flip = false;
    for (const Integer* lead : {&a, &bre, &bim, &c}) {
        if (*lead != 0) {
            flip = (*lead < 0);
            break;
        }
    }
    if (flip) {
        a = -a;
        bre = -bre;
        bim = -bim;
        c = -c;
    }
    Circline out;
    out.A = a;
    out.B = {bre, bim};
    out.C = c;
    out.fill_fast();
    return {out, flip};
}

Circline Circline::circle(const RationalComplex& center, const Rational& radius_sq) {
    // |z - c|^2 - r^2 = |z|^2 + 2 Re(conj(-c) z) + |c|^2 - r^2
    auto [circ, flip] = make(Rational(1), -center, center.norm() - radius_sq);
    (void)flip; // leading coefficient already positive
    return circ;
}

Circline Circline::line(const Rational& nx, const Rational& ny, const Rational& rhs) {
    auto [circ, flip] = make(Rational(0), RationalComplex(nx / 2, ny / 2), -rhs);
    (void)flip;
    return circ;
}

int Circline::sign_at(const LatticePoint& p) const {
    if (fits64) {
        using I = __int128;
        I a = p.a, b = p.b, d = p.den;
        I v = I(iA) * (a * a + b * b) + 2 * (I(iBre) * a + I(iBim) * b) * d + I(iC) * d * d;
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    }
    Integer a(p.a), b(p.b), d(p.den);
    Integer v = A * (a * a + b * b) + 2 * (Integer(B.re) * a + Integer(B.im) * b) * d + C * d * d;
    return boost::multiprecision::sign(v);
}

std::pair<Circline, bool> Circline::moebius_image(const MoebiusMap& m) const {
    // Substitute z = m^{-1}(w) = (dw - b)/(-cw + a) and clear |.|^2
    // denominators; the form sign is preserved pointwise.
    const GaussianInt p = m.d, q = -m.b, r = -m.c, s = m.a;
    GaussianInt gB = B;

    auto re2 = [](const GaussianInt& x) -> Integer { return 2 * x.re; }; // 2 Re(x)

    GaussianInt BparPr = gB.conj() * p * r.conj(); // conj(B) p conj(r)
    GaussianInt BparQs = gB.conj() * q * s.conj();
    Integer A2 = A * p.norm() + re2(BparPr) + C * r.norm();
    Integer C2 = A * q.norm() + re2(BparQs) + C * s.norm();
    // conj(B2) = A p conj(q) + conj(B) p conj(s) + B r conj(q) + C r conj(s)
    GaussianInt B2bar = GaussianInt(A) * p * q.conj() + gB.conj() * p * s.conj() +
                        gB * r * q.conj() + GaussianInt(C) * r * s.conj();
    GaussianInt B2 = B2bar.conj();
    return make(Rational(A2), RationalComplex(B2), Rational(C2));
}

std::pair<Circline, bool> Circline::dihedral_image(const DihedralElement& g) const {
    // Substitute z = g^{-1}(w). With g^{-1}: w -> u*w we get B' = B conj(u);
    // with g^{-1}: w -> u*conj(w) we get B' = conj(B) u. A and C are fixed
    // and the form value is preserved exactly, so no flip beyond
    // normalization can occur.
    DihedralElement inv = g.inverse();
    GaussianInt u = inv.unit();
    GaussianInt B2 = inv.refl ? B.conj() * u : B * u.conj();
    return make(Rational(A), RationalComplex(B2), Rational(C));
}

std::string Circline::to_string() const {
    return A.str() + "|z|^2 + 2Re((" + format_gaussian(B.conj()) + ")z) + " + C.str();
}

HalfSpace HalfSpace::inside_disk(const RationalComplex& center, const Rational& radius_sq) {
    return {Circline::circle(center, radius_sq), Side::LE};
}

HalfSpace HalfSpace::outside_disk(const RationalComplex& center, const Rational& radius_sq) {
    return {Circline::circle(center, radius_sq), Side::GE};
}

HalfSpace HalfSpace::line_le(const Rational& nx, const Rational& ny, const Rational& rhs) {
    auto [circ, flip] = Circline::make(Rational(0), RationalComplex(nx / 2, ny / 2), -rhs);
    return {circ, flip ? Side::GE : Side::LE};
}

HalfSpace HalfSpace::line_ge(const Rational& nx, const Rational& ny, const Rational& rhs) {
    return line_le(nx, ny, rhs).complement();
}

namespace {

// Geometric view of a half-space: disk, disk complement, or half-plane.
struct HalfSpaceGeom {
    enum Kind { Disk, CoDisk, Plane } kind;
    RationalComplex center;  // disk / codisk
    Rational radius_sq;
    Rational nx, ny, rhs;    // plane: nx*x + ny*y <= rhs
};

std::optional<HalfSpaceGeom> geom_of(const HalfSpace& h) {
    const Circline& c = h.boundary;
    HalfSpaceGeom g{};
    if (c.is_line()) {
        // form = 2(Bre x + Bim y) + C; side LE means form <= 0, i.e.
        // 2Bre x + 2Bim y <= -C, so the normal keeps B's sign for LE.
        Rational s(-static_cast<int>(h.side));
        g.kind = HalfSpaceGeom::Plane;
        g.nx = s * 2 * Rational(c.B.re);
        g.ny = s * 2 * Rational(c.B.im);
        g.rhs = -s * Rational(c.C);
        return g;
    }
    // A > 0 after normalization.
    Rational A(c.A);
    g.center = RationalComplex(-Rational(c.B.re) / A, -Rational(c.B.im) / A);
    g.radius_sq = (Rational(c.B.norm()) - A * Rational(c.C)) / (A * A);
    if (g.radius_sq < 0) return std::nullopt; // empty or single point
    g.kind = (h.side == Side::LE) ? HalfSpaceGeom::Disk : HalfSpaceGeom::CoDisk;
    return g;
}

// sqrt(x) <= sqrt(y) - sqrt(z) over nonnegative rationals, decided exactly.
bool sqrt_le_sqrt_diff(const Rational& x, const Rational& y, const Rational& z) {
    if (z > y) return false;
    // sqrt(x) + sqrt(z) <= sqrt(y)  <=>  x + z + 2 sqrt(xz) <= y
    //                              <=>  2 sqrt(xz) <= y - x - z  (needs rhs >= 0)
    Rational t = y - x - z;
    if (t < 0) return false;
    return 4 * x * z <= t * t;
}

} // namespace

bool HalfSpace::subset_of(const HalfSpace& other) const {
    if (*this == other) return true;
    auto g1 = geom_of(*this);
    auto g2 = geom_of(other);
    if (!g1 || !g2) return false;
    using K = HalfSpaceGeom::Kind;

    if (g1->kind == K::Disk && g2->kind == K::Disk) {
        Rational d2 = (g1->center - g2->center).norm();
        return sqrt_le_sqrt_diff(d2, g2->radius_sq, g1->radius_sq);
    }
    if (g1->kind == K::Disk && g2->kind == K::Plane) {
        // n.c + r|n| <= rhs
        Rational m = g2->rhs - (g2->nx * g1->center.re + g2->ny * g1->center.im);
        if (m < 0) return false;
        return g1->radius_sq * (g2->nx * g2->nx + g2->ny * g2->ny) <= m * m;
    }
    if (g1->kind == K::CoDisk && g2->kind == K::CoDisk) {
        // complement(D1) subset complement(D2) <=> D2 subset D1
        Rational d2 = (g1->center - g2->center).norm();
        return sqrt_le_sqrt_diff(d2, g1->radius_sq, g2->radius_sq);
    }
    if (g1->kind == K::Plane && g2->kind == K::Plane) {
        // Positively parallel normals with a weaker bound.
        Rational cross = g1->nx * g2->ny - g1->ny * g2->nx;
        Rational dot = g1->nx * g2->nx + g1->ny * g2->ny;
        if (cross != 0 || dot <= 0) return false;
        // lambda with n2 = lambda n1: compare rhs2/|n2| >= rhs1/|n1| via
        // rhs2 * |n1|^2-scaled form: rhs1 * lambda <= rhs2 where
        // lambda = dot / |n1|^2.
        Rational n1sq = g1->nx * g1->nx + g1->ny * g1->ny;
        return g1->rhs * dot <= g2->rhs * n1sq;
    }
    return false;
}

RationalComplex HalfSpace::interior_witness() const {
    // Lattice spiral around the natural reference point of the boundary.
    RationalComplex ref(0, 0);
    if (!boundary.is_line())
        ref = RationalComplex(-Rational(boundary.B.re) / Rational(boundary.A),
                              -Rational(boundary.B.im) / Rational(boundary.A));
    for (long den : {1L, 2L, 4L, 8L, 16L}) {
        for (long ring = 0; ring <= 24; ++ring) {
            for (long x = -ring; x <= ring; ++x) {
                for (long y = -ring; y <= ring; ++y) {
                    if (std::max(std::abs(x), std::abs(y)) != ring) continue;
                    RationalComplex p = ref + RationalComplex(Rational(x, den), Rational(y, den));
                    int s = boost::multiprecision::sign(boundary.evaluate(p));
                    if (s != 0 && s == static_cast<int>(side)) return p;
                }
            }
        }
    }
    throw WitnessOnBoundary("no interior witness found for " + to_string());
}

std::string HalfSpace::to_string() const {
    return boundary.to_string() + (side == Side::LE ? " <= 0" : " >= 0");
}

} // namespace cfdyn
