#pragma once

#include <array>
#include <string>
#include <vector>

#include "cfdyn/diamond.hpp"

namespace cfdyn {

/// Finite union of Dih4-tagged products g(Zpart x W_k) in C^2.
struct ProductSet {
    struct Term {
        DihedralElement g;
        Region zpart;
        int k = 0; // 1..5
    };
    std::vector<Term> terms;

    /// All eight Dih4 copies of (zparts[k-1] x W_k) for k = 1..5.
    static ProductSet symmetrized(const std::array<Region, 5>& zparts);

    bool contains(FloatComplex z, FloatComplex w, double eps = 1e-9) const;
    /// Margin of the best matching term (positive inside); -inf if no
    /// term's W-factor admits w.
    double signed_margin(FloatComplex z, FloatComplex w) const;
};

/// Static registry of the bijectivity/trapping sets: Z_k, the closed-form
/// trapping parts A_k, D = U xi(Z_k x W_k), and V = closed unit disk x S(Phi).
class NatExtSets {
public:
    static const NatExtSets& instance();

    const Region& Z(int k) const { return Z_.at(k - 1); }
    const Region& A(int k) const { return A_.at(k - 1); }
    const ProductSet& D() const { return D_; }
    const std::array<Region, 5>& Z_parts() const { return Z_; }
    const std::array<Region, 5>& A_parts() const { return A_; }

private:
    NatExtSets();
    std::array<Region, 5> Z_;
    std::array<Region, 5> A_;
    ProductSet D_;
};

/// Natural extension step: both coordinates move by the branch selected by
/// w alone. Throws PoleError (w = 0, or z = 0 in the S branch) and
/// DiagonalError (z = w).
std::pair<FloatComplex, FloatComplex> F_diamond(FloatComplex z, FloatComplex w,
                                                double eps = 1e-12);

bool D_contains(FloatComplex z, FloatComplex w, double eps = 1e-9);

/// Mechanical construction of hat-Z_k: every row of the partition image
/// table whose image contains a copy xi W_k contributes xi^{-1}(h_j Z_j).
Region hatZ_compute(int k);
/// The same union kept as separate pieces (for disjointness checks).
std::vector<Region> hatZ_pieces(int k);

struct BijectivityReport {
    std::vector<CheckResult> equalities;       // hatZ_k = Z_k
    std::vector<CheckResult> piece_overlaps;   // interior overlap must be empty
    long invariance_samples = 0;
    long invariance_failures = 0;
    bool all_passed() const;
};

BijectivityReport verify_bijectivity(const EqualityOptions& opts, int invariance_samples,
                                     std::uint64_t seed);

/// V = closed unit disk x S(Phi); w in S(Phi) iff S(w) in Phi.
bool V_contains(FloatComplex z, FloatComplex w, double eps = 1e-12);

struct OrbitPoint {
    int step = 0;
    Branch branch;       // branch taken to REACH this state (step >= 1)
    FloatComplex z, w;
    bool in_V = false;
};

struct OrbitResult {
    int entry_index = -1; // first n with F^n(z,w) in V
    std::vector<OrbitPoint> s_steps; // post-inversion states of the orbit
    std::vector<OrbitPoint> full_trace;
};

/// Iterates F until the state enters V; BudgetExhausted past `budget`.
OrbitResult orbit_until_V(FloatComplex z, FloatComplex w, int budget);

/// Union-of-atoms Z-part per cell: each atom is one half-space (a disk or
/// half-plane in practice).
struct PsiBuild {
    std::array<std::vector<HalfSpace>, 5> atoms; // index k-1
    int stabilized_at = -1;
    std::array<Region, 5> regions() const;
    ProductSet product() const;
};

/// Iterates Psi = U_n F^n(V) over the finite product structure until a
/// fixed point, pruning atoms contained in an already-accumulated atom of
/// the same cell. Throws NoStabilization after 10 rounds.
PsiBuild build_psi();

struct PsiReport {
    std::vector<CheckResult> closed_form_equalities; // computed part vs A_k
    std::vector<CheckResult> z_subset_checks;        // Z_k subset A_k
    int stabilized_at = -1;
    long invariance_samples = 0;
    long invariance_failures = 0;
    bool v_subset_psi = false;
    bool all_passed() const;
};

PsiReport verify_psi(const PsiBuild& build, const EqualityOptions& opts, int invariance_samples,
                     std::uint64_t seed);

} // namespace cfdyn
