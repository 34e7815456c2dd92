#include "cfdyn/natext.hpp"

#include <algorithm>
#include <random>

namespace cfdyn {

namespace {

const Rational kHalf(1, 2);

HalfSpace unit_disk(long cx_num, long cy_num, long den = 1) {
    return HalfSpace::inside_disk(RationalComplex(Rational(cx_num, den), Rational(cy_num, den)),
                                  Rational(1));
}

} // namespace

ProductSet ProductSet::symmetrized(const std::array<Region, 5>& zparts) {
    ProductSet p;
    for (int k = 1; k <= 5; ++k)
        for (const auto& xi : DihedralElement::all())
            p.terms.push_back({xi, zparts[k - 1], k});
    return p;
}

double ProductSet::signed_margin(FloatComplex z, FloatComplex w) const {
    const auto& sets = DiamondSets::instance();
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& t : terms) {
        DihedralElement inv = t.g.inverse();
        FloatComplex wr = inv.apply(w);
        double mw = sets.W(t.k).signed_margin(wr);
        if (mw <= best) continue;
        double mz = t.zpart.signed_margin(inv.apply(z));
        best = std::max(best, std::min(mw, mz));
    }
    return best;
}

bool ProductSet::contains(FloatComplex z, FloatComplex w, double eps) const {
    return signed_margin(z, w) >= -eps;
}

NatExtSets::NatExtSets() {
    auto re_le_half = HalfSpace::line_le(1, 0, kHalf);
    auto im_le_half = HalfSpace::line_le(0, 1, kHalf);
    auto im_ge_neg_half = HalfSpace::line_ge(0, 1, -kHalf);
    auto out0 = HalfSpace::outside_disk(RationalComplex(0, 0), 1);
    auto out1 = HalfSpace::outside_disk(RationalComplex(1, 0), 1);
    auto outI = HalfSpace::outside_disk(RationalComplex(0, 1), 1);
    auto outMinusI = HalfSpace::outside_disk(RationalComplex(0, -1), 1);

    Z_[0] = Region::cell_of({re_le_half, im_le_half, im_ge_neg_half, out1});
    Z_[1] = Region::cell_of({re_le_half, im_le_half, out1});
    Z_[2] = Region::cell_of({re_le_half, im_le_half, out0});
    Z_[3] = Region::cell_of({re_le_half, out0, outI});
    Z_[4] = Region::cell_of({re_le_half, out0, outI, outMinusI});

    auto re_le_neg_half = HalfSpace::line_le(1, 0, -kHalf);
    auto im_le_neg_half = HalfSpace::line_le(0, 1, -kHalf);
    auto im_le_neg_3half = HalfSpace::line_le(0, 1, Rational(-3, 2));
    auto im_ge_3half = HalfSpace::line_ge(0, 1, Rational(3, 2));

    auto atoms = [](std::initializer_list<HalfSpace> hs) {
        Region r;
        for (const auto& h : hs) r.cells.push_back(Cell{{h}});
        return r;
    };

    A_[0] = atoms({unit_disk(0, 0), unit_disk(-1, 1), unit_disk(-1, -1), re_le_neg_half});
    A_[1] = atoms({unit_disk(0, 0), unit_disk(-1, 1), re_le_neg_half, im_le_neg_half});
    A_[2] = atoms({unit_disk(-1, 0), unit_disk(0, -1), unit_disk(1, -2), re_le_neg_half,
                   im_le_neg_3half});
    A_[3] = atoms({unit_disk(0, 2), unit_disk(-1, 1), unit_disk(-1, 0), unit_disk(0, -1),
                   unit_disk(1, -2), re_le_neg_half, im_le_neg_3half, im_ge_3half});
    A_[4] = atoms({unit_disk(0, 2), unit_disk(0, -2), unit_disk(-1, 1), unit_disk(-1, -1),
                   unit_disk(-1, 0), re_le_neg_half, im_le_neg_3half, im_ge_3half});

    D_ = ProductSet::symmetrized(Z_);
}

const NatExtSets& NatExtSets::instance() {
    static const NatExtSets sets;
    return sets;
}

std::pair<FloatComplex, FloatComplex> F_diamond(FloatComplex z, FloatComplex w, double eps) {
    if (z == w) throw DiagonalError();
    Branch b = branch_of(w, eps);
    if (b == Branch::S) {
        if (w == FloatComplex{}) throw PoleError("F_diamond: w = 0 in S branch");
        if (z == FloatComplex{}) throw PoleError("F_diamond: z = 0 in S branch");
        return {FloatComplex{-1, 0} / z, FloatComplex{-1, 0} / w};
    }
    MoebiusMap m = branch_map(b);
    return {m.apply(z), m.apply(w)};
}

bool D_contains(FloatComplex z, FloatComplex w, double eps) {
    return NatExtSets::instance().D().contains(z, w, eps);
}

std::vector<Region> hatZ_pieces(int k) {
    const auto& nat = NatExtSets::instance();
    std::vector<Region> pieces;
    for (const auto& row : partition_image_rows()) {
        for (const auto& [xi, j] : row.images) {
            if (j != k) continue;
            Region moved = nat.Z(row.k).moebius_image(branch_map(row.branch));
            pieces.push_back(moved.dihedral_image(xi.inverse()));
        }
    }
    return pieces;
}

Region hatZ_compute(int k) {
    Region r = Region::empty();
    for (auto& p : hatZ_pieces(k)) r = r.unite(p);
    return r;
}

bool BijectivityReport::all_passed() const {
    for (const auto& r : equalities)
        if (!r.passed()) return false;
    for (const auto& r : piece_overlaps)
        if (!r.passed()) return false;
    return invariance_failures == 0 && invariance_samples > 0;
}

namespace {

// Samples interior points of the symmetrized product set: picks a term,
// samples the Z and W factors separately, and applies the Dih4 tag.
std::vector<std::pair<FloatComplex, FloatComplex>> sample_product_points(
    const std::array<Region, 5>& zparts, int n, std::uint64_t seed, double margin) {
    const auto& dia = DiamondSets::instance();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_k(1, 5), pick_xi(0, 7);
    Box box; // [-4,4]^2
    std::vector<std::pair<FloatComplex, FloatComplex>> out;
    out.reserve(n);
    std::uniform_real_distribution<double> dx(box.xlo, box.xhi), dy(box.ylo, box.yhi);
    long guard = 0;
    while (static_cast<int>(out.size()) < n) {
        if (++guard > 4096L * n) throw EmptyRegionInBox("product sampling budget exhausted");
        int k = pick_k(rng);
        DihedralElement xi = DihedralElement::all()[pick_xi(rng)];
        FloatComplex z{dx(rng), dy(rng)}, w{dx(rng), dy(rng)};
        if (zparts[k - 1].signed_margin(z) <= margin) continue;
        if (dia.W(k).signed_margin(w) <= margin) continue;
        out.emplace_back(xi.apply(z), xi.apply(w));
    }
    return out;
}

CheckResult equality_check(const std::string& name, const Region& lhs, const Region& rhs,
                           const EqualityOptions& opts) {
    EqualityVerdict v = region_equal(lhs, rhs, opts);
    CheckResult r;
    r.name = name;
    r.verdict = v.verdict;
    r.points_tested = v.points_tested;
    if (v.verdict == Verd::Differ)
        r.witness = v.witness.to_string() + (v.witness_in_first ? " in lhs only" : " in rhs only");
    return r;
}

} // namespace

BijectivityReport verify_bijectivity(const EqualityOptions& opts, int invariance_samples,
                                     std::uint64_t seed) {
    const auto& nat = NatExtSets::instance();
    BijectivityReport report;

    for (int k = 1; k <= 5; ++k) {
        report.equalities.push_back(
            equality_check("hatZ" + std::to_string(k) + " = Z" + std::to_string(k),
                           hatZ_compute(k), nat.Z(k), opts));
    }

    // The union pieces of each hatZ_k must be essentially disjoint: their
    // pairwise intersections may not contain interior sample points.
    for (int k = 1; k <= 5; ++k) {
        auto pieces = hatZ_pieces(k);
        for (size_t i = 0; i < pieces.size(); ++i) {
            for (size_t j = i + 1; j < pieces.size(); ++j) {
                Region overlap = pieces[i].intersect(pieces[j]);
                CheckResult r;
                r.name = "hatZ" + std::to_string(k) + " pieces " + std::to_string(i) + "," +
                         std::to_string(j) + " interior-disjoint";
                EqualityVerdict v = region_subset(overlap, Region::empty(), opts);
                r.points_tested = v.points_tested;
                // Differ witness here would be an interior point of the overlap;
                // points on either piece's boundary are excluded by the sampler.
                r.verdict = v.verdict == Verd::Differ ? Verd::Differ : Verd::Equal;
                if (v.verdict == Verd::Differ) r.witness = v.witness.to_string();
                report.piece_overlaps.push_back(std::move(r));
            }
        }
    }

    report.invariance_samples = invariance_samples;
    auto points = sample_product_points(nat.Z_parts(), invariance_samples, seed, 1e-6);
    for (auto& [z, w] : points) {
        auto [z2, w2] = F_diamond(z, w);
        if (!D_contains(z2, w2)) ++report.invariance_failures;
    }
    return report;
}

bool V_contains(FloatComplex z, FloatComplex w, double eps) {
    if (z == w) throw DiagonalError();
    if (std::abs(z) > 1.0 + eps) return false;
    if (w == FloatComplex{}) return false;
    return phi_contains(FloatComplex{-1, 0} / w, eps);
}

OrbitResult orbit_until_V(FloatComplex z, FloatComplex w, int budget) {
    OrbitResult result;
    FloatComplex cz = z, cw = w;
    Branch last = Branch::S;
    for (int n = 0; n <= budget; ++n) {
        OrbitPoint pt;
        pt.step = n;
        pt.branch = last; // branch that produced this state (step 0: unset)
        pt.z = cz;
        pt.w = cw;
        pt.in_V = V_contains(cz, cw);
        result.full_trace.push_back(pt);
        if (n > 0 && last == Branch::S) result.s_steps.push_back(pt);
        if (pt.in_V) {
            result.entry_index = n;
            return result;
        }
        last = branch_of(cw);
        auto [nz, nw] = F_diamond(cz, cw);
        cz = nz;
        cw = nw;
    }
    throw BudgetExhausted("orbit did not enter V within " + std::to_string(budget) +
                          " steps; last state z=" + format_float_complex(cz) +
                          " w=" + format_float_complex(cw));
}

std::array<Region, 5> PsiBuild::regions() const {
    std::array<Region, 5> out;
    for (int k = 0; k < 5; ++k) {
        for (const auto& h : atoms[k]) out[k].cells.push_back(Cell{{h}});
    }
    return out;
}

ProductSet PsiBuild::product() const { return ProductSet::symmetrized(regions()); }

namespace {

bool covered(const HalfSpace& atom, const std::vector<HalfSpace>& acc) {
    return std::any_of(acc.begin(), acc.end(),
                       [&](const HalfSpace& a) { return atom.subset_of(a); });
}

} // namespace

PsiBuild build_psi() {
    PsiBuild psi;
    // V = closed unit disk x (W_1 u W_2), mod Dih4.
    HalfSpace disk0 = unit_disk(0, 0);
    psi.atoms[0] = {disk0};
    psi.atoms[1] = {disk0};

    // Frontier: atoms added in the previous round, per cell. Images of
    // covered atoms are covered by images of their covering atoms, so only
    // the frontier needs to propagate.
    std::array<std::vector<HalfSpace>, 5> frontier = psi.atoms;

    const int kMaxRounds = 10;
    for (int round = 1; round <= kMaxRounds; ++round) {
        std::array<std::vector<HalfSpace>, 5> next;
        for (const auto& row : partition_image_rows()) {
            const auto& source = frontier[row.k - 1];
            if (source.empty()) continue;
            MoebiusMap h = branch_map(row.branch);
            for (const auto& atom : source) {
                HalfSpace moved = atom.moebius_image(h);
                for (const auto& [xi, j] : row.images) {
                    HalfSpace img = moved.dihedral_image(xi.inverse());
                    if (covered(img, psi.atoms[j - 1]) || covered(img, next[j - 1])) continue;
                    next[j - 1].push_back(img);
                }
            }
        }
        bool added = false;
        for (int k = 0; k < 5; ++k) {
            for (const auto& atom : next[k]) {
                psi.atoms[k].push_back(atom);
                added = true;
            }
        }
        if (!added) {
            psi.stabilized_at = round - 1;
            return psi;
        }
        frontier = next;
    }
    throw NoStabilization("Psi construction did not stabilize within " +
                          std::to_string(kMaxRounds) + " rounds");
}

bool PsiReport::all_passed() const {
    for (const auto& r : closed_form_equalities)
        if (!r.passed()) return false;
    for (const auto& r : z_subset_checks)
        if (!r.passed()) return false;
    return stabilized_at == 4 && invariance_failures == 0 && invariance_samples > 0 &&
           v_subset_psi;
}

PsiReport verify_psi(const PsiBuild& build, const EqualityOptions& opts, int invariance_samples,
                     std::uint64_t seed) {
    const auto& nat = NatExtSets::instance();
    PsiReport report;
    report.stabilized_at = build.stabilized_at;

    auto computed = build.regions();
    for (int k = 1; k <= 5; ++k) {
        report.closed_form_equalities.push_back(equality_check(
            "psi part " + std::to_string(k) + " = A" + std::to_string(k), computed[k - 1],
            nat.A(k), opts));
    }

    for (int k = 1; k <= 5; ++k) {
        EqualityVerdict v = region_subset(nat.Z(k), nat.A(k), opts);
        CheckResult r;
        r.name = "Z" + std::to_string(k) + " subset A" + std::to_string(k);
        r.verdict = v.verdict == Verd::Differ ? Verd::Differ : Verd::Equal;
        r.points_tested = v.points_tested;
        if (v.verdict == Verd::Differ) r.witness = v.witness.to_string();
        report.z_subset_checks.push_back(std::move(r));
    }

    // V subset Psi, atom against atom (exact).
    HalfSpace disk0 = unit_disk(0, 0);
    report.v_subset_psi =
        covered(disk0, build.atoms[0]) && covered(disk0, build.atoms[1]);

    report.invariance_samples = invariance_samples;
    auto points = sample_product_points(computed, invariance_samples, seed, 1e-6);
    ProductSet psi_set = build.product();
    for (auto& [z, w] : points) {
        if (z == w) continue;
        try {
            auto [z2, w2] = F_diamond(z, w);
            if (!psi_set.contains(z2, w2)) ++report.invariance_failures;
        } catch (const PoleError&) {
            // measure-zero pole hit by a float sample; not a containment failure
        }
    }
    return report;
}

} // namespace cfdyn
