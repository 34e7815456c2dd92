#include "cfdyn/cf.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace cfdyn {

GaussianInt choice_hurwitz(FloatComplex z) {
    // nearest integer with half rounded toward -inf: ceil(x - 1/2)
    return {Integer(std::llround(std::ceil(z.real() - 0.5))),
            Integer(std::llround(std::ceil(z.imag() - 0.5)))};
}

GaussianInt choice_hurwitz(const RationalComplex& z) {
    return {rat_ceil(z.re - Rational(1, 2)), rat_ceil(z.im - Rational(1, 2))};
}

bool phi_diamond_contains(const RationalComplex& z) {
    return abs(z.re) + abs(z.im) <= 1;
}

bool phi_diamond_contains(FloatComplex z, double eps) {
    return std::abs(z.real()) + std::abs(z.imag()) <= 1.0 + eps;
}

namespace {

// Branch selector shared by f_empty on both carriers. The four cases of the
// arg table, written as sign comparisons so boundary conventions are exact:
//   0: [-pi/4,  pi/4)  -> z - 1
//   1: [ pi/4, 3pi/4)  -> z - i
//   2: [3pi/4,  pi] u (-pi, -3pi/4) -> z + 1
//   3: [-3pi/4, -pi/4) -> z + i
template <typename Re>
int arg_branch(const Re& x, const Re& y) {
    if (x > 0 && -x <= y && y < x) return 0;
    if (y > 0 && -y < x && x <= y) return 1;
    if (x < 0 && x < y && y <= -x) return 2;
    if (y < 0 && y <= x && x < -y) return 3;
    throw OriginError("arg branch undefined at z = 0");
}

} // namespace

FloatComplex f_empty(FloatComplex z) {
    switch (arg_branch(z.real(), z.imag())) {
        case 0: return z - FloatComplex{1, 0};
        case 1: return z - FloatComplex{0, 1};
        case 2: return z + FloatComplex{1, 0};
        default: return z + FloatComplex{0, 1};
    }
}

RationalComplex f_empty(const RationalComplex& z) {
    switch (arg_branch(z.re, z.im)) {
        case 0: return z - RationalComplex(1, 0);
        case 1: return z - RationalComplex(0, 1);
        case 2: return z + RationalComplex(1, 0);
        default: return z + RationalComplex(0, 1);
    }
}

namespace {

// c_Phi: 0 inside Phi, else z minus the first f_empty iterate landing in
// Phi. Each step lowers the 1-norm by 1 while outside the diamond, so the
// budget ceil|Re| + ceil|Im| + 2 is only exceeded on an implementation bug.
template <typename C, typename InPhi>
GaussianInt choice_by_iteration(const C& z, InPhi in_phi, long budget) {
    if (in_phi(z)) return {};
    C cur = z;
    for (long i = 0; i < budget; ++i) {
        cur = f_empty(cur);
        if (in_phi(cur)) {
            C diff = z - cur;
            if constexpr (std::is_same_v<C, RationalComplex>) {
                return diff.to_gaussian();
            } else {
                return {Integer(std::llround(diff.real())), Integer(std::llround(diff.imag()))};
            }
        }
    }
    throw NonTermination("choice iteration exceeded its budget of " + std::to_string(budget));
}

long diamond_budget(FloatComplex z) {
    return std::lround(std::ceil(std::abs(z.real())) + std::ceil(std::abs(z.imag()))) + 2;
}

long diamond_budget(const RationalComplex& z) {
    return (rat_ceil(abs(z.re)) + rat_ceil(abs(z.im))).convert_to<long>() + 2;
}

// The diamond's vertices are not rest points of the reduction walk: f_empty
// maps each of +-1, +-i to 0, and treating them as stops would leave integer
// inputs with the wrong digit (c(5) must be 5, not 4).
bool diamond_rest_point(FloatComplex w) {
    if (!phi_diamond_contains(w)) return false;
    return !((std::abs(w.real()) == 1.0 && w.imag() == 0.0) ||
             (w.real() == 0.0 && std::abs(w.imag()) == 1.0));
}

bool diamond_rest_point(const RationalComplex& w) {
    if (!phi_diamond_contains(w)) return false;
    return !((abs(w.re) == 1 && w.im == 0) || (w.re == 0 && abs(w.im) == 1));
}

} // namespace

GaussianInt choice_diamond(FloatComplex z) {
    return choice_by_iteration(z, [](FloatComplex w) { return diamond_rest_point(w); },
                               diamond_budget(z));
}

GaussianInt choice_diamond(const RationalComplex& z) {
    return choice_by_iteration(z, [](const RationalComplex& w) { return diamond_rest_point(w); },
                               diamond_budget(z));
}

GaussianInt ChoiceFunction::operator()(FloatComplex z) const {
    switch (kind) {
        case Kind::Hurwitz: return choice_hurwitz(z);
        case Kind::Diamond: return choice_diamond(z);
        case Kind::CustomRegion:
            return choice_by_iteration(
                z, [this](FloatComplex w) { return phi.contains(w, 1e-12); }, diamond_budget(z));
    }
    throw Error("unreachable");
}

GaussianInt ChoiceFunction::operator()(const RationalComplex& z) const {
    switch (kind) {
        case Kind::Hurwitz: return choice_hurwitz(z);
        case Kind::Diamond: return choice_diamond(z);
        case Kind::CustomRegion:
            return choice_by_iteration(
                z, [this](const RationalComplex& w) { return phi.contains(w); },
                diamond_budget(z));
    }
    throw Error("unreachable");
}

Expansion expand(FloatComplex z, const ChoiceFunction& c, int max_steps) {
    if (max_steps < 1) throw Error("expand: max_steps must be >= 1");
    Expansion e;
    FloatComplex cur = z;
    for (int n = 0; n < max_steps; ++n) {
        e.remainders.push_back(cur);
        GaussianInt a = c(cur);
        e.digits.push_back(a);
        FloatComplex diff = cur - a.to_complex();
        if (diff == FloatComplex{}) {
            e.terminated = true;
            break;
        }
        cur = FloatComplex{-1, 0} / diff;
    }
    return e;
}

Expansion expand(const RationalComplex& z, const ChoiceFunction& c, int max_steps) {
    if (max_steps < 1) throw Error("expand: max_steps must be >= 1");
    Expansion e;
    e.exact = true;
    RationalComplex cur = z;
    for (int n = 0; n < max_steps; ++n) {
        e.exact_remainders.push_back(cur);
        e.remainders.push_back(cur.to_complex());
        GaussianInt a = c(cur);
        e.digits.push_back(a);
        RationalComplex diff = cur - RationalComplex(a);
        if (diff.is_zero()) {
            e.terminated = true;
            break;
        }
        cur = RationalComplex(-1) / diff;
    }
    return e;
}

std::vector<ConvergentPair> convergents(const std::vector<GaussianInt>& digits) {
    std::vector<ConvergentPair> out;
    out.reserve(digits.size());
    GaussianInt p2{0}, p1{1}; // p_{n-2}, p_{n-1}
    GaussianInt q2{-1}, q1{0};
    int n = 0;
    for (const auto& a : digits) {
        GaussianInt p = a * p1 - p2;
        GaussianInt q = a * q1 - q2;
        out.push_back({p, q, n++});
        p2 = p1;
        p1 = p;
        q2 = q1;
        q1 = q;
    }
    return out;
}

FloatComplex evaluate_cf(const std::vector<GaussianInt>& digits,
                         std::optional<FloatComplex> tail) {
    if (digits.empty() && !tail) throw Error("evaluate_cf: empty continued fraction");
    FloatComplex acc;
    int depth = static_cast<int>(digits.size()) - 1;
    if (tail) {
        acc = *tail;
    } else {
        acc = digits.back().to_complex();
        --depth;
    }
    for (; depth >= 0; --depth) {
        if (acc == FloatComplex{}) throw DivisionByZero(depth + 1);
        acc = digits[depth].to_complex() - FloatComplex{1, 0} / acc;
    }
    return acc;
}

RationalComplex evaluate_cf_exact(const std::vector<GaussianInt>& digits) {
    if (digits.empty()) throw Error("evaluate_cf: empty continued fraction");
    RationalComplex acc{digits.back()};
    for (int depth = static_cast<int>(digits.size()) - 2; depth >= 0; --depth) {
        if (acc.is_zero()) throw DivisionByZero(depth + 1);
        acc = RationalComplex(digits[depth]) - RationalComplex(1) / acc;
    }
    return acc;
}

double check_identity_residual(FloatComplex z, const Expansion& e, int n) {
    if (n < 0 || n + 1 >= static_cast<int>(e.remainders.size()))
        throw Error("check_identity_residual: index out of range");
    auto pq = convergents(e.digits);
    // Binary64 is too coarse on both sides: p_n - q_n z cancels ~|q_n| ulps
    // and the remainder product drifts past 1e-9 by n = 15. The left side is
    // exact in Q(i) (a double is a rational); the remainders are recomputed
    // from the digits at 50 decimal digits.
    using BF = boost::multiprecision::cpp_bin_float_50;
    BF wr(z.real()), wi(z.imag()); // z_k
    BF pr(1), pi(0);               // z_1 ... z_k
    for (int k = 0; k <= n; ++k) {
        wr -= BF(to_double(e.digits[k].re));
        wi -= BF(to_double(e.digits[k].im));
        BF nrm = wr * wr + wi * wi; // z_{k+1} = -1/(z_k - a_k)
        wr = -wr / nrm;
        wi = wi / nrm;
        BF nr = pr * wr - pi * wi, ni = pr * wi + pi * wr;
        pr = nr;
        pi = ni;
    }
    BF pnorm = pr * pr + pi * pi;
    BF rhs_r = pr / pnorm, rhs_i = -pi / pnorm;
    RationalComplex z_rat{Rational(z.real()), Rational(z.imag())};
    RationalComplex lhs = RationalComplex(pq[n].p) - RationalComplex(pq[n].q) * z_rat;
    BF dr = BF(to_double(lhs.re)) - rhs_r, di = BF(to_double(lhs.im)) - rhs_i;
    return std::sqrt(double(dr * dr + di * di));
}

ConvergenceReport convergence_report(FloatComplex z, const ChoiceFunction& c, int steps) {
    Expansion e = expand(z, c, steps);
    auto pq = convergents(e.digits);
    ConvergenceReport r;
    for (const auto& cp : pq) {
        double qn = std::sqrt(to_double(cp.q.norm()));
        r.q_norms.push_back(qn);
        if (cp.q.is_zero()) {
            r.q_never_zero = false;
            r.errors.push_back(std::numeric_limits<double>::infinity());
        } else {
            r.errors.push_back(std::abs(cp.p.to_complex() / cp.q.to_complex() - z));
        }
    }
    return r;
}

} // namespace cfdyn
