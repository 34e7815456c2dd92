#include "cfdyn/region.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

namespace cfdyn {

double Cell::signed_margin(FloatComplex z) const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& h : constraints) m = std::min(m, h.signed_margin(z));
    return m;
}

double Region::signed_margin(FloatComplex z) const {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& c : cells) m = std::max(m, c.signed_margin(z));
    return m;
}

Region Region::whole_plane() {
    // |z|^2 + 1 >= 0 holds everywhere.
    return single(HalfSpace::make(Rational(1), RationalComplex(0, 0), Rational(1), Side::GE));
}

bool Region::on_any_boundary(const LatticePoint& p) const {
    for (const auto& c : cells)
        for (const auto& h : c.constraints)
            if (h.on_boundary(p)) return true;
    return false;
}

Region Region::unite(const Region& o) const {
    Region r = *this;
    r.cells.insert(r.cells.end(), o.cells.begin(), o.cells.end());
    return r;
}

Region Region::intersect(const Region& o) const {
    Region r;
    for (const auto& c1 : cells)
        for (const auto& c2 : o.cells) {
            Cell c = c1;
            c.constraints.insert(c.constraints.end(), c2.constraints.begin(),
                                 c2.constraints.end());
            r.cells.push_back(std::move(c));
        }
    return r;
}

Region Region::moebius_image(const MoebiusMap& m) const {
    Region r;
    for (const auto& c : cells) {
        Cell out;
        for (const auto& h : c.constraints) out.constraints.push_back(h.moebius_image(m));
        r.cells.push_back(std::move(out));
    }
    return r;
}

Region Region::dihedral_image(const DihedralElement& g) const {
    Region r;
    for (const auto& c : cells) {
        Cell out;
        for (const auto& h : c.constraints) out.constraints.push_back(h.dihedral_image(g));
        r.cells.push_back(std::move(out));
    }
    return r;
}

std::size_t Region::constraint_count() const {
    std::size_t n = 0;
    for (const auto& c : cells) n += c.constraints.size();
    return n;
}

namespace {

// Visits the comparison points of the two-region sampling scheme:
// grid cell centers, seeded random lattice points, and exact rational
// points snapped near every boundary circline. Points exactly on any
// boundary of either region are skipped by the caller.
template <typename Fn>
void for_each_sample_point(const Region& r1, const Region& r2, const EqualityOptions& opts,
                           Fn&& visit) {
    const Box& b = opts.box;
    // Grid of cell centers: x_j = xlo + (2j+1)(xhi-xlo)/(2n).
    {
        const std::int64_t n = opts.grid;
        // common denominator 2n * D where D clears the box endpoints
        const std::int64_t D = 16; // box endpoints assumed multiples of 1/16
        auto scaled = [&](double v) { return std::llround(v * double(D)); };
        std::int64_t den = 2 * n * D;
        std::int64_t xlo = scaled(b.xlo) * 2 * n, xw = scaled(b.xhi) - scaled(b.xlo);
        std::int64_t ylo = scaled(b.ylo) * 2 * n, yw = scaled(b.yhi) - scaled(b.ylo);
        for (std::int64_t j = 0; j < n; ++j) {
            for (std::int64_t k = 0; k < n; ++k) {
                LatticePoint p{xlo + (2 * j + 1) * xw, ylo + (2 * k + 1) * yw, den};
                if (!visit(p)) return;
            }
        }
    }
    std::mt19937_64 rng(opts.seed);
    {
        const std::int64_t den = std::int64_t(1) << 20;
        auto lo_a = std::int64_t(std::llround(b.xlo * double(den)));
        auto hi_a = std::int64_t(std::llround(b.xhi * double(den)));
        auto lo_b = std::int64_t(std::llround(b.ylo * double(den)));
        auto hi_b = std::int64_t(std::llround(b.yhi * double(den)));
        std::uniform_int_distribution<std::int64_t> dx(lo_a, hi_a), dy(lo_b, hi_b);
        for (int i = 0; i < opts.random_samples; ++i) {
            LatticePoint p{dx(rng), dy(rng), den};
            if (!visit(p)) return;
        }
    }
    // Near-boundary probes: walk each circline in float, snap to the
    // lattice; snapped points are exact and (generically) just off the
    // boundary, which is where region disagreements hide.
    {
        const std::int64_t den = std::int64_t(1) << 24;
        std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
        std::uniform_real_distribution<double> wobble(-1e-5, 1e-5);
        auto probe_circline = [&](const Circline& c) {
            for (int i = 0; i < opts.boundary_samples; ++i) {
                double t = angle(rng);
                FloatComplex z;
                if (c.is_line()) {
                    // point = foot of perpendicular + t * direction
                    double bx = to_double(c.B.re), by = to_double(c.B.im), cc = to_double(c.C);
                    double n2 = bx * bx + by * by;
                    FloatComplex foot{-cc * bx / (2 * n2), -cc * by / (2 * n2)};
                    double span = std::max(std::abs(opts.box.xhi - opts.box.xlo),
                                           std::abs(opts.box.yhi - opts.box.ylo));
                    z = foot + FloatComplex{-by, bx} / std::sqrt(n2) *
                                   ((t / 6.28 - 0.5) * 2.0 * span);
                } else {
                    double a = to_double(c.A);
                    FloatComplex center{-to_double(c.B.re) / a, -to_double(c.B.im) / a};
                    double r2 = (to_double(c.B.norm()) - a * to_double(c.C)) / (a * a);
                    if (r2 <= 0) continue;
                    z = center + std::sqrt(r2) * FloatComplex{std::cos(t), std::sin(t)};
                }
                z += FloatComplex{wobble(rng), wobble(rng)};
                if (z.real() < b.xlo || z.real() > b.xhi || z.imag() < b.ylo || z.imag() > b.yhi)
                    continue;
                LatticePoint p{std::int64_t(std::llround(z.real() * double(den))),
                               std::int64_t(std::llround(z.imag() * double(den))), den};
                if (!visit(p)) return;
            }
        };
        for (const Region* r : {&r1, &r2})
            for (const auto& cell : r->cells)
                for (const auto& h : cell.constraints)
                    probe_circline(h.boundary);
    }
}

EqualityVerdict compare_regions(const Region& r1, const Region& r2, const EqualityOptions& opts,
                                bool subset_only) {
    EqualityVerdict v;
    bool differ = false;
    for_each_sample_point(r1, r2, opts, [&](const LatticePoint& p) {
        if (r1.on_any_boundary(p) || r2.on_any_boundary(p)) return true;
        ++v.points_tested;
        bool in1 = r1.contains(p);
        bool in2 = r2.contains(p);
        bool bad = subset_only ? (in1 && !in2) : (in1 != in2);
        if (bad) {
            differ = true;
            v.witness = p.to_rational();
            v.witness_in_first = in1;
            return false; // stop
        }
        return true;
    });
    if (differ) {
        v.verdict = Verd::Differ;
    } else if (v.points_tested == 0) {
        v.verdict = Verd::Inconclusive;
    } else {
        v.verdict = Verd::Equal;
    }
    return v;
}

} // namespace

EqualityVerdict region_equal(const Region& r1, const Region& r2, const EqualityOptions& opts) {
    return compare_regions(r1, r2, opts, false);
}

EqualityVerdict region_subset(const Region& r1, const Region& r2, const EqualityOptions& opts) {
    return compare_regions(r1, r2, opts, true);
}

std::vector<FloatComplex> region_sample(const Region& r, const Box& box, int n,
                                        std::uint64_t seed, double eps) {
    if (n < 1) throw Error("region_sample: n must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dx(box.xlo, box.xhi), dy(box.ylo, box.yhi);
    std::vector<FloatComplex> out;
    out.reserve(n);
    const long budget = 4096L * n;
    long tries = 0;
    while (static_cast<int>(out.size()) < n) {
        if (++tries > budget)
            throw EmptyRegionInBox("region_sample: retry budget exhausted (" +
                                   std::to_string(budget) + " tries)");
        FloatComplex z{dx(rng), dy(rng)};
        if (r.signed_margin(z) > eps) out.push_back(z);
    }
    return out;
}

std::string region_to_json(const Region& r) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : r.cells) {
        nlohmann::json constraints = nlohmann::json::array();
        for (const auto& h : c.constraints) {
            constraints.push_back({{"A", h.boundary.A.str()},
                                   {"B_re", h.boundary.B.re.str()},
                                   {"B_im", h.boundary.B.im.str()},
                                   {"C", h.boundary.C.str()},
                                   {"side", h.side == Side::LE ? "<=" : ">="}});
        }
        cells.push_back({{"constraints", constraints}});
    }
    return nlohmann::json{{"cells", cells}}.dump(2);
}

Region region_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Region r;
    for (const auto& jc : j.at("cells")) {
        Cell cell;
        for (const auto& jh : jc.at("constraints")) {
            auto rat = [](const nlohmann::json& v) { return Rational(v.get<std::string>()); };
            Side side = jh.at("side").get<std::string>() == "<=" ? Side::LE : Side::GE;
            cell.constraints.push_back(HalfSpace::make(
                rat(jh.at("A")), RationalComplex(rat(jh.at("B_re")), rat(jh.at("B_im"))),
                rat(jh.at("C")), side));
        }
        r.cells.push_back(std::move(cell));
    }
    return r;
}

} // namespace cfdyn
