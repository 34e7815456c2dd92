#pragma once

#include <array>
#include <string>
#include <vector>

#include "cfdyn/cf.hpp"
#include "cfdyn/dihedral.hpp"
#include "cfdyn/region.hpp"

namespace cfdyn {

/// One of the 40 sets g(W_k) partitioning C (boundaries overlap).
struct PartitionCell {
    DihedralElement g;
    int k = 0; // 1..5
    bool operator==(const PartitionCell& o) const = default;
};

/// Static registry of the diamond-algorithm sets: the fundamental diamond
/// Phi, the wedge C*, and the standard partition cells W_1..W_5.
class DiamondSets {
public:
    static const DiamondSets& instance();

    const Region& phi() const { return phi_; }
    const Region& wedge() const { return wedge_; }
    const Region& W(int k) const { return W_.at(k - 1); }
    /// W_1 u ... u W_5 (covers the wedge).
    Region W_all() const;

private:
    DiamondSets();
    Region phi_;
    Region wedge_;
    std::array<Region, 5> W_;
};

bool phi_contains(FloatComplex z, double eps = 1e-12);
bool phi_contains(const RationalComplex& z);

/// The piecewise map: S on the diamond (priority case), otherwise the
/// translation chosen by the arg table. Pole at z = 0.
FloatComplex f_diamond(FloatComplex z, double eps = 1e-12);
RationalComplex f_diamond(const RationalComplex& z);

/// The branch f_diamond takes at z, as a Moebius word label.
enum class Branch { S, Tinv, Uinv, T, U };
const char* branch_name(Branch b);
MoebiusMap branch_map(Branch b);
Branch branch_of(FloatComplex z, double eps = 1e-12);
Branch branch_of(const RationalComplex& z);

/// Folds w into the wedge and assigns the partition cell, testing
/// W_5, W_4, W_3, W_2, W_1 in that order (first match wins on boundaries).
PartitionCell classify_cell(FloatComplex w, double eps = 1e-12);
PartitionCell classify_cell(const RationalComplex& w);

/// Row k of the partition image table: f_diamond(W_k) = h(W_k) =
/// union of xi_j W_{k_j}.
struct PartitionImageRow {
    int k;
    Branch branch;
    std::vector<std::pair<DihedralElement, int>> images; // (xi, j)
};
const std::array<PartitionImageRow, 5>& partition_image_rows();

struct CheckResult {
    std::string name;
    Verd verdict = Verd::Inconclusive;
    std::string witness; // Differ only
    long points_tested = 0;
    bool passed() const { return verdict == Verd::Equal; }
};

struct PartitionReport {
    std::vector<CheckResult> rows;
    bool all_passed() const {
        for (const auto& r : rows)
            if (!r.passed()) return false;
        return true;
    }
};

/// Mechanically verifies the five image rows and the identity
/// Phi = union of xi(W_4 u W_5) over Dih4, via region_equal.
PartitionReport verify_partition_lemma(const EqualityOptions& opts);

} // namespace cfdyn
