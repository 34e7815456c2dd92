#pragma once

#include <optional>
#include <vector>

#include "cfdyn/numeric.hpp"
#include "cfdyn/region.hpp"

namespace cfdyn {

/// Nearest Gaussian integer; half-integer coordinates round toward -inf.
GaussianInt choice_hurwitz(FloatComplex z);
GaussianInt choice_hurwitz(const RationalComplex& z);

/// |x| + |y| <= 1, the diamond fundamental set.
bool phi_diamond_contains(const RationalComplex& z);
bool phi_diamond_contains(FloatComplex z, double eps = 1e-12);

/// One unit translation toward the origin, chosen by the quadrant-diagonal
/// arg table (lower boundary included, upper excluded). Throws OriginError
/// at z = 0.
FloatComplex f_empty(FloatComplex z);
RationalComplex f_empty(const RationalComplex& z);

GaussianInt choice_diamond(FloatComplex z);
GaussianInt choice_diamond(const RationalComplex& z);

struct ChoiceFunction {
    enum class Kind { Hurwitz, Diamond, CustomRegion };
    Kind kind = Kind::Diamond;
    Region phi; // CustomRegion only

    static ChoiceFunction hurwitz() { return {Kind::Hurwitz, {}}; }
    static ChoiceFunction diamond() { return {Kind::Diamond, {}}; }
    static ChoiceFunction custom(Region r) { return {Kind::CustomRegion, std::move(r)}; }

    GaussianInt operator()(FloatComplex z) const;
    GaussianInt operator()(const RationalComplex& z) const;
};

struct Expansion {
    std::vector<GaussianInt> digits;                     // a_0, a_1, ...
    std::vector<FloatComplex> remainders;                // z_0, z_1, ...
    std::vector<RationalComplex> exact_remainders;       // exact carrier only
    bool exact = false;
    bool terminated = false; // some z_n == a_n exactly (rational input)
};

Expansion expand(FloatComplex z, const ChoiceFunction& c, int max_steps);
Expansion expand(const RationalComplex& z, const ChoiceFunction& c, int max_steps);

struct ConvergentPair {
    GaussianInt p;
    GaussianInt q;
    int index = 0; // n >= -2
};

/// Exact three-term recurrence p_n = a_n p_{n-1} - p_{n-2} (likewise q)
/// from seeds p_{-2}=0, p_{-1}=1, q_{-2}=-1, q_{-1}=0. Returns pairs for
/// n = 0..size-1.
std::vector<ConvergentPair> convergents(const std::vector<GaussianInt>& digits);

/// Backward evaluation of [[a_0, a_1, ..., a_n]] = a_0 - 1/(a_1 - ...),
/// with an optional non-integer tail replacing the innermost a_n.
FloatComplex evaluate_cf(const std::vector<GaussianInt>& digits,
                         std::optional<FloatComplex> tail = std::nullopt);
RationalComplex evaluate_cf_exact(const std::vector<GaussianInt>& digits);

/// |p_n - q_n z - (z_1 ... z_{n+1})^{-1}|, which should vanish numerically.
double check_identity_residual(FloatComplex z, const Expansion& e, int n);

struct ConvergenceReport {
    std::vector<double> errors;  // |p_n/q_n - z|
    std::vector<double> q_norms; // |q_n|
    bool q_never_zero = true;
};

ConvergenceReport convergence_report(FloatComplex z, const ChoiceFunction& c, int steps);

} // namespace cfdyn
