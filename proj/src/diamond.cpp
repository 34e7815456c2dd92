#include "cfdyn/diamond.hpp"

namespace cfdyn {

namespace {

const Rational kHalf(1, 2);

Region make_phi() {
    // |x| + |y| <= 1 as four line constraints.
    return Region::cell_of({
        HalfSpace::line_le(1, 1, 1),   //  x + y <= 1
        HalfSpace::line_le(1, -1, 1),  //  x - y <= 1
        HalfSpace::line_le(-1, 1, 1),  // -x + y <= 1
        HalfSpace::line_le(-1, -1, 1), // -x - y <= 1
    });
}

std::vector<HalfSpace> wedge_constraints() {
    return {
        HalfSpace::line_ge(0, 1, 0), // Im >= 0
        HalfSpace::line_le(-1, 1, 0) // Im <= Re
    };
}

} // namespace

DiamondSets::DiamondSets() : phi_(make_phi()), wedge_(Region::cell_of(wedge_constraints())) {
    const RationalComplex c_up(kHalf, kHalf);    // 1/2 + i/2
    const RationalComplex c_down(kHalf, -kHalf); // 1/2 - i/2

    auto cell = [](std::initializer_list<HalfSpace> extra) {
        std::vector<HalfSpace> hs = wedge_constraints();
        hs.insert(hs.end(), extra);
        return Region::cell_of(std::move(hs));
    };

    W_[0] = cell({HalfSpace::line_le(-1, 1, -1)});                       // Im <= Re - 1
    W_[1] = cell({HalfSpace::line_ge(-1, 1, -1),                        // Im >= Re - 1
                  HalfSpace::outside_disk(c_up, kHalf)});               // |w-c| >= 1/sqrt2
    W_[2] = cell({HalfSpace::line_ge(1, 1, 1),                          // Im >= 1 - Re
                  HalfSpace::inside_disk(c_up, kHalf)});
    W_[3] = cell({HalfSpace::line_le(1, 1, 1),                          // Im <= 1 - Re
                  HalfSpace::outside_disk(c_down, kHalf)});
    W_[4] = cell({HalfSpace::inside_disk(c_down, kHalf)});
}

const DiamondSets& DiamondSets::instance() {
    static const DiamondSets sets;
    return sets;
}

Region DiamondSets::W_all() const {
    Region r = W_[0];
    for (int k = 1; k < 5; ++k) r = r.unite(W_[k]);
    return r;
}

bool phi_contains(FloatComplex z, double eps) { return phi_diamond_contains(z, eps); }
bool phi_contains(const RationalComplex& z) { return phi_diamond_contains(z); }

const char* branch_name(Branch b) {
    switch (b) {
        case Branch::S: return "S";
        case Branch::Tinv: return "T^-1";
        case Branch::Uinv: return "U^-1";
        case Branch::T: return "T";
        case Branch::U: return "U";
    }
    return "?";
}

MoebiusMap branch_map(Branch b) {
    switch (b) {
        case Branch::S: return MoebiusMap::S();
        case Branch::Tinv: return MoebiusMap::T_inv();
        case Branch::Uinv: return MoebiusMap::U_inv();
        case Branch::T: return MoebiusMap::T();
        case Branch::U: return MoebiusMap::U();
    }
    throw Error("unreachable");
}

namespace {

// The diamond case has priority over the arg cases.
template <typename C, typename InPhi>
Branch branch_impl(const C& z, InPhi in_phi) {
    if (in_phi(z)) return Branch::S;
    C shifted = f_empty(z);
    C d = z - shifted;
    if constexpr (std::is_same_v<C, RationalComplex>) {
        if (d.re > 0) return Branch::Tinv;
        if (d.re < 0) return Branch::T;
        if (d.im > 0) return Branch::Uinv;
        return Branch::U;
    } else {
        if (d.real() > 0) return Branch::Tinv;
        if (d.real() < 0) return Branch::T;
        if (d.imag() > 0) return Branch::Uinv;
        return Branch::U;
    }
}

} // namespace

Branch branch_of(FloatComplex z, double eps) {
    return branch_impl(z, [eps](FloatComplex w) { return phi_contains(w, eps); });
}

Branch branch_of(const RationalComplex& z) {
    return branch_impl(z, [](const RationalComplex& w) { return phi_contains(w); });
}

FloatComplex f_diamond(FloatComplex z, double eps) {
    if (phi_contains(z, eps)) {
        if (z == FloatComplex{}) throw PoleError("f_diamond pole at z = 0");
        return FloatComplex{-1, 0} / z;
    }
    return f_empty(z);
}

RationalComplex f_diamond(const RationalComplex& z) {
    if (phi_contains(z)) {
        if (z.is_zero()) throw PoleError("f_diamond pole at z = 0");
        return RationalComplex(-1) / z;
    }
    return f_empty(z);
}

namespace {

template <typename C, typename Member>
PartitionCell classify_impl(const C& w, Member member) {
    auto [g, rep] = fold_to_wedge(w);
    for (int k = 5; k >= 1; --k)
        if (member(DiamondSets::instance().W(k), rep)) return {g, k};
    throw Error("classify_cell: wedge representative matched no W_k"); // unreachable
}

} // namespace

PartitionCell classify_cell(FloatComplex w, double eps) {
    return classify_impl(w, [eps](const Region& r, FloatComplex z) { return r.contains(z, eps); });
}

PartitionCell classify_cell(const RationalComplex& w) {
    return classify_impl(w, [](const Region& r, const RationalComplex& z) { return r.contains(z); });
}

const std::array<PartitionImageRow, 5>& partition_image_rows() {
    using D = DihedralElement;
    static const std::array<PartitionImageRow, 5> rows = {{
        {1, Branch::Tinv, {{D::identity(), 1}, {D::identity(), 2}, {D::identity(), 3},
                           {D::identity(), 4}, {D::identity(), 5}}},
        {2, Branch::Tinv, {{D::rho(), 2}, {D::rho(), 3}, {D::rho(), 4}}},
        {3, Branch::Tinv, {{D::rho(), 5}, {D::iota(), 5}, {D::iota(), 4}}},
        {4, Branch::S, {{D::eta(), 2}}},
        {5, Branch::S, {{D::eta(), 1}}},
    }};
    return rows;
}

PartitionReport verify_partition_lemma(const EqualityOptions& opts) {
    const auto& sets = DiamondSets::instance();
    PartitionReport report;

    auto run = [&](const std::string& name, const Region& lhs, const Region& rhs) {
        EqualityVerdict v = region_equal(lhs, rhs, opts);
        CheckResult r;
        r.name = name;
        r.verdict = v.verdict;
        r.points_tested = v.points_tested;
        if (v.verdict == Verd::Differ)
            r.witness = v.witness.to_string() + (v.witness_in_first ? " in lhs only" : " in rhs only");
        report.rows.push_back(std::move(r));
    };

    for (const auto& row : partition_image_rows()) {
        Region lhs = sets.W(row.k).moebius_image(branch_map(row.branch));
        Region rhs = Region::empty();
        for (const auto& [xi, j] : row.images) rhs = rhs.unite(sets.W(j).dihedral_image(xi));
        run("f(W" + std::to_string(row.k) + ") = " + std::string(branch_name(row.branch)) +
                "W" + std::to_string(row.k),
            lhs, rhs);
    }

    // Phi = union over Dih4 of xi(W_4 u W_5)
    Region rhs = Region::empty();
    for (const auto& xi : DihedralElement::all())
        rhs = rhs.unite(sets.W(4).dihedral_image(xi)).unite(sets.W(5).dihedral_image(xi));
    run("Phi = U xi(W4 u W5)", sets.phi(), rhs);

    return report;
}

} // namespace cfdyn
