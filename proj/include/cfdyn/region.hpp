#pragma once

#include <cstdint>
#include <vector>

#include "cfdyn/circline.hpp"

namespace cfdyn {

struct Box {
    double xlo = -4, xhi = 4, ylo = -4, yhi = 4;
};

/// Finite intersection of circline half-spaces.
struct Cell {
    std::vector<HalfSpace> constraints;

    bool contains(const RationalComplex& z) const {
        for (const auto& h : constraints)
            if (!h.contains(z)) return false;
        return true;
    }
    bool contains(const LatticePoint& p) const {
        for (const auto& h : constraints)
            if (!h.contains(p)) return false;
        return true;
    }
    bool contains(FloatComplex z, double eps) const {
        for (const auto& h : constraints)
            if (!h.contains(z, eps)) return false;
        return true;
    }
    /// min over constraints of the signed margin (positive inside).
    double signed_margin(FloatComplex z) const;
};

struct EqualityOptions {
    Box box{};
    int grid = 600;            // grid x grid lattice over box
    int random_samples = 10000;
    int boundary_samples = 64; // near-boundary probes per circline
    std::uint64_t seed = 1;
};

enum class Verd { Equal, Differ, Inconclusive };

struct EqualityVerdict {
    Verd verdict = Verd::Inconclusive;
    RationalComplex witness;       // in the symmetric (resp. set) difference
    bool witness_in_first = false; // Differ: witness lies in r1 \ r2
    long points_tested = 0;
};

/// Finite union of cells. Membership closed; all operations exact on
/// rational points. Equality is a semi-decision: Equal is supported by
/// dense exact sampling, Differ carries an exact rational witness.
struct Region {
    std::vector<Cell> cells;

    static Region empty() { return {}; }
    static Region whole_plane();
    static Region single(HalfSpace h) { return {{Cell{{std::move(h)}}}}; }
    static Region cell_of(std::vector<HalfSpace> hs) { return {{Cell{std::move(hs)}}}; }

    bool is_empty_syntactic() const { return cells.empty(); }

    bool contains(const RationalComplex& z) const {
        for (const auto& c : cells)
            if (c.contains(z)) return true;
        return false;
    }
    bool contains(const LatticePoint& p) const {
        for (const auto& c : cells)
            if (c.contains(p)) return true;
        return false;
    }
    bool contains(FloatComplex z, double eps) const {
        for (const auto& c : cells)
            if (c.contains(z, eps)) return true;
        return false;
    }
    /// max over cells of cell margin; > 0 strictly inside, < 0 outside.
    double signed_margin(FloatComplex z) const;

    /// Exactly on some boundary circline of this region.
    bool on_any_boundary(const LatticePoint& p) const;

    Region unite(const Region& o) const;
    Region intersect(const Region& o) const;

    Region moebius_image(const MoebiusMap& m) const;
    Region dihedral_image(const DihedralElement& g) const;

    std::size_t constraint_count() const;
};

EqualityVerdict region_equal(const Region& r1, const Region& r2, const EqualityOptions& opts);
/// Same sampling scheme, but tests r1 subset-of r2; Differ witness in r1 \ r2.
EqualityVerdict region_subset(const Region& r1, const Region& r2, const EqualityOptions& opts);

/// Deterministic seeded interior points of r within box, each at estimated
/// float distance > eps from every boundary. Throws EmptyRegionInBox after
/// the retry budget (4096 rejections per requested point).
std::vector<FloatComplex> region_sample(const Region& r, const Box& box, int n,
                                        std::uint64_t seed, double eps = 1e-9);

std::string region_to_json(const Region& r);
Region region_from_json(const std::string& text);

} // namespace cfdyn
