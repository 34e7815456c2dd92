#include "cfdyn/verify.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include <json.hpp>

#include "cfdyn/natext.hpp"

namespace cfdyn {

namespace {

using nlohmann::json;

std::string verdict_status(Verd v) {
    switch (v) {
        case Verd::Equal: return "pass";
        case Verd::Differ: return "fail";
        default: return "inconclusive";
    }
}

SuiteCheck from_check_result(const CheckResult& r, std::uint64_t seed) {
    SuiteCheck c;
    c.check = r.name;
    c.status = verdict_status(r.verdict);
    if (!r.witness.empty()) c.witnesses.push_back(r.witness);
    c.samples = r.points_tested;
    c.seed = seed;
    return c;
}

EqualityOptions equality_options(const VerifyConfig& cfg) {
    EqualityOptions opts;
    opts.grid = cfg.grid;
    opts.random_samples = cfg.samples;
    opts.seed = cfg.seed;
    return opts;
}

// ---- identities suite -------------------------------------------------

SuiteCheck check_determinant(const VerifyConfig& cfg) {
    const int kSequences = 1000, kLength = 30;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<int> part(-6, 6);
    SuiteCheck c;
    c.check = "determinant constancy";
    c.status = "pass";
    c.samples = kSequences;
    c.seed = cfg.seed;

    GaussianInt constant;
    bool have_constant = false;
    for (int s = 0; s < kSequences && c.status == "pass"; ++s) {
        std::vector<GaussianInt> digits;
        while (static_cast<int>(digits.size()) < kLength) {
            GaussianInt a(part(rng), part(rng));
            if (boost::multiprecision::abs(a.re) + boost::multiprecision::abs(a.im) < 2) continue;
            digits.push_back(a);
        }
        auto pairs = convergents(digits);
        // delta_{-1} = p_{-1} q_{-2} - p_{-2} q_{-1} = -1 from the seeds
        GaussianInt prev_p(1), prev_q(0);
        if (!have_constant) {
            constant = GaussianInt(-1);
            have_constant = true;
        }
        for (const auto& pr : pairs) {
            GaussianInt d = pr.p * prev_q - prev_p * pr.q;
            if (d != constant) {
                c.status = "fail";
                c.witnesses.push_back("delta at n=" + std::to_string(pr.index) + " is " +
                                      format_gaussian(d) + ", expected " +
                                      format_gaussian(constant));
                break;
            }
            prev_p = pr.p;
            prev_q = pr.q;
        }
    }
    if (c.status == "pass") {
        c.witnesses.push_back("constant = " + format_gaussian(constant) +
                              " for every n >= -1; the source text states +1, a sign "
                              "discrepancy against these seeds (p_{-2}=0, p_{-1}=1, "
                              "q_{-2}=-1, q_{-1}=0)");
    }
    return c;
}

std::vector<FloatComplex> seeded_plane_points(int n, std::uint64_t seed, double half_span) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(-half_span, half_span);
    std::vector<FloatComplex> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) {
        double x = d(rng), y = d(rng);
        out.emplace_back(x, y);
    }
    return out;
}

SuiteCheck check_remainder_identity(const VerifyConfig& cfg) {
    const int kSeeds = 200, kDepth = 15;
    SuiteCheck c;
    c.check = "remainder product identity";
    c.status = "pass";
    c.samples = kSeeds;
    c.seed = cfg.seed;
    auto choice = ChoiceFunction::diamond();
    for (FloatComplex z : seeded_plane_points(kSeeds, cfg.seed, 5.0)) {
        Expansion e = expand(z, choice, kDepth + 2);
        for (int n = 0; n <= kDepth; ++n) {
            double r = check_identity_residual(z, e, n);
            if (!(r < cfg.epsilon)) {
                c.status = "fail";
                c.witnesses.push_back("z = " + format_float_complex(z) + ", n = " +
                                      std::to_string(n) + ", residual = " + std::to_string(r));
                return c;
            }
        }
    }
    return c;
}

SuiteCheck check_convergence(const VerifyConfig& cfg) {
    const int kSeeds = 200, kSteps = 60;
    SuiteCheck c;
    c.check = "convergent convergence";
    c.status = "pass";
    c.samples = kSeeds;
    c.seed = cfg.seed;
    auto choice = ChoiceFunction::diamond();
    int converged = 0;
    for (FloatComplex z : seeded_plane_points(kSeeds, cfg.seed, 5.0)) {
        ConvergenceReport r = convergence_report(z, choice, kSteps);
        if (!r.q_never_zero) {
            c.status = "fail";
            c.witnesses.push_back("q_n = 0 for z = " + format_float_complex(z));
            return c;
        }
        for (std::size_t n = 0; n < r.errors.size(); ++n) {
            if (r.errors[n] < 1e-8 && r.q_norms[n] > 1e6) {
                ++converged;
                break;
            }
        }
    }
    double rate = double(converged) / kSeeds;
    if (rate < 0.99) {
        c.status = "fail";
        c.witnesses.push_back("convergence rate " + std::to_string(rate) + " < 0.99");
    } else {
        c.witnesses.push_back("convergence rate " + std::to_string(rate));
    }
    return c;
}

SuiteCheck check_choice_sanity(const VerifyConfig& cfg) {
    SuiteCheck c;
    c.check = "diamond choice sanity";
    c.status = "pass";
    c.seed = cfg.seed;

    const int kRational = 100000;
    const long kDen = 4096;
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long> coord(-8 * kDen, 8 * kDen);
    for (int i = 0; i < kRational; ++i) {
        RationalComplex z(Rational(coord(rng), kDen), Rational(coord(rng), kDen));
        GaussianInt a = choice_diamond(z);
        if (!phi_diamond_contains(z - RationalComplex(a))) {
            c.status = "fail";
            c.witnesses.push_back("z - c(z) outside the diamond at z = " + z.to_string());
            return c;
        }
        // independent re-run of the translation walk, counting steps
        Integer bound = rat_ceil(boost::multiprecision::abs(z.re)) +
                        rat_ceil(boost::multiprecision::abs(z.im));
        RationalComplex w = z;
        Integer steps = 0;
        while (!phi_diamond_contains(w)) {
            w = f_empty(w);
            if (++steps > bound) {
                c.status = "fail";
                c.witnesses.push_back("reduction walk exceeded ceil|Re| + ceil|Im| = " +
                                      bound.str() + " steps at z = " + z.to_string());
                return c;
            }
        }
    }
    c.samples = kRational;

    // theorem hypothesis |z - c(z)| < 1 on the unit circle off the vertices
    const int kCircle = 1000;
    for (int j = 0; j < kCircle; ++j) {
        double theta = 2.0 * M_PI * (j + 0.37) / kCircle;
        FloatComplex z{std::cos(theta), std::sin(theta)};
        GaussianInt a = choice_diamond(z);
        if (!(std::abs(z - a.to_complex()) < 1.0)) {
            c.status = "fail";
            c.witnesses.push_back("|z - c(z)| >= 1 at z = " + format_float_complex(z));
            return c;
        }
    }
    return c;
}

SuiteReport suite_identities(const VerifyConfig& cfg) {
    SuiteReport r;
    r.suite = "identities";
    r.checks.push_back(check_determinant(cfg));
    r.checks.push_back(check_remainder_identity(cfg));
    r.checks.push_back(check_convergence(cfg));
    r.checks.push_back(check_choice_sanity(cfg));
    return r;
}

// ---- geometry suites --------------------------------------------------

SuiteReport suite_partition(const VerifyConfig& cfg) {
    SuiteReport r;
    r.suite = "partition";
    PartitionReport rep = verify_partition_lemma(equality_options(cfg));
    for (const auto& row : rep.rows) r.checks.push_back(from_check_result(row, cfg.seed));
    return r;
}

SuiteReport suite_bijectivity(const VerifyConfig& cfg) {
    SuiteReport r;
    r.suite = "bijectivity";
    BijectivityReport rep = verify_bijectivity(equality_options(cfg), cfg.samples, cfg.seed);
    for (const auto& e : rep.equalities) r.checks.push_back(from_check_result(e, cfg.seed));
    for (const auto& o : rep.piece_overlaps) r.checks.push_back(from_check_result(o, cfg.seed));

    SuiteCheck inv;
    inv.check = "D invariance under F";
    inv.status = rep.invariance_failures == 0 ? "pass" : "fail";
    inv.samples = rep.invariance_samples;
    inv.seed = cfg.seed;
    if (rep.invariance_failures > 0)
        inv.witnesses.push_back(std::to_string(rep.invariance_failures) + " escapes");
    r.checks.push_back(std::move(inv));

    // branch-preimage uniqueness on image points of D
    const auto& nat = NatExtSets::instance();
    std::mt19937_64 rng(cfg.seed + 1);
    std::uniform_real_distribution<double> d(-4.0, 4.0);
    std::uniform_int_distribution<int> pick_k(1, 5);
    int tested = 0, bad = 0;
    const auto& dia = DiamondSets::instance();
    while (tested < cfg.samples) {
        int k = pick_k(rng);
        FloatComplex z{d(rng), d(rng)}, w{d(rng), d(rng)};
        if (nat.Z(k).signed_margin(z) <= cfg.epsilon) continue;
        if (dia.W(k).signed_margin(w) <= cfg.epsilon) continue;
        FloatComplex iz, iw;
        try {
            auto img = F_diamond(z, w);
            iz = img.first;
            iw = img.second;
        } catch (const Error&) {
            continue;
        }
        ++tested;
        int preimages = 0;
        for (Branch b : {Branch::S, Branch::Tinv, Branch::Uinv, Branch::T, Branch::U}) {
            MoebiusMap inv_map = branch_map(b).inverse();
            try {
                FloatComplex pz = inv_map.apply(iz), pw = inv_map.apply(iw);
                if (branch_of(pw) != b) continue; // wrong branch region: not a true preimage
                if (D_contains(pz, pw, -cfg.epsilon)) ++preimages;
            } catch (const Error&) {
                continue;
            }
        }
        if (preimages != 1) ++bad;
    }
    SuiteCheck uniq;
    uniq.check = "branch-preimage uniqueness";
    uniq.status = bad == 0 ? "pass" : "fail";
    uniq.samples = tested;
    uniq.seed = cfg.seed + 1;
    if (bad > 0) uniq.witnesses.push_back(std::to_string(bad) + " points with != 1 preimage");
    r.checks.push_back(std::move(uniq));
    return r;
}

SuiteReport suite_psi(const VerifyConfig& cfg) {
    SuiteReport r;
    r.suite = "psi";
    PsiBuild build = build_psi();
    PsiReport rep = verify_psi(build, equality_options(cfg), cfg.samples, cfg.seed);

    SuiteCheck stab;
    stab.check = "stabilization round";
    stab.status = rep.stabilized_at == 4 ? "pass" : "fail";
    stab.samples = rep.stabilized_at;
    stab.seed = cfg.seed;
    stab.witnesses.push_back("stabilized_at = " + std::to_string(rep.stabilized_at));
    r.checks.push_back(std::move(stab));

    for (const auto& e : rep.closed_form_equalities)
        r.checks.push_back(from_check_result(e, cfg.seed));
    for (const auto& s : rep.z_subset_checks) r.checks.push_back(from_check_result(s, cfg.seed));

    SuiteCheck vsub;
    vsub.check = "V subset Psi";
    vsub.status = rep.v_subset_psi ? "pass" : "fail";
    vsub.seed = cfg.seed;
    r.checks.push_back(std::move(vsub));

    SuiteCheck inv;
    inv.check = "Psi invariance under F";
    inv.status = rep.invariance_failures == 0 ? "pass" : "fail";
    inv.samples = rep.invariance_samples;
    inv.seed = cfg.seed;
    if (rep.invariance_failures > 0)
        inv.witnesses.push_back(std::to_string(rep.invariance_failures) + " escapes");
    r.checks.push_back(std::move(inv));
    return r;
}

SuiteReport suite_trapping(const VerifyConfig& cfg) {
    const int kPairs = 1000, kEnterBudget = 200, kFollow = 500;
    SuiteReport r;
    r.suite = "trapping";
    SuiteCheck enter, stay;
    enter.check = "orbits enter V within budget";
    enter.status = "pass";
    enter.samples = kPairs;
    enter.seed = cfg.seed;
    stay.check = "orbits stay in Psi after V entry";
    stay.status = "pass";
    stay.samples = kPairs;
    stay.seed = cfg.seed;

    ProductSet psi = build_psi().product();
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> d(-5.0, 5.0);
    for (int i = 0; i < kPairs; ++i) {
        FloatComplex z, w;
        do {
            z = {d(rng), d(rng)};
            w = {d(rng), d(rng)};
        } while (std::abs(z - w) <= 0.1);
        OrbitResult orbit;
        try {
            orbit = orbit_until_V(z, w, kEnterBudget);
        } catch (const BudgetExhausted&) {
            enter.status = "fail";
            enter.witnesses.push_back("no V entry: z = " + format_float_complex(z) +
                                      ", w = " + format_float_complex(w));
            continue;
        }
        FloatComplex cz = orbit.full_trace.back().z, cw = orbit.full_trace.back().w;
        for (int n = 0; n < kFollow; ++n) {
            try {
                auto [nz, nw] = F_diamond(cz, cw);
                cz = nz;
                cw = nw;
            } catch (const Error&) {
                break; // pole or diagonal: float orbit left the generic set
            }
            if (!psi.contains(cz, cw, 1e-6)) {
                stay.status = "fail";
                stay.witnesses.push_back("escape at follow step " + std::to_string(n) +
                                         " from z = " + format_float_complex(z) +
                                         ", w = " + format_float_complex(w));
                break;
            }
        }
    }
    r.checks.push_back(std::move(enter));
    r.checks.push_back(std::move(stay));
    return r;
}

} // namespace

bool SuiteReport::all_passed() const {
    for (const auto& c : checks)
        if (c.status != "pass") return false;
    return true;
}

int SuiteReport::exit_code() const {
    bool inconclusive = false;
    for (const auto& c : checks) {
        if (c.status == "fail") return 1;
        if (c.status == "inconclusive") inconclusive = true;
    }
    return inconclusive ? 3 : 0;
}

std::string SuiteReport::to_json() const {
    json checks_json = json::array();
    for (const auto& c : checks) {
        checks_json.push_back({{"check", c.check},
                               {"status", c.status},
                               {"witnesses", c.witnesses},
                               {"samples", c.samples},
                               {"seed", c.seed}});
    }
    json j = {{"suite", suite}, {"checks", checks_json}, {"elapsed_ms", elapsed_ms}};
    return j.dump(2);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"identities", "partition", "bijectivity",
                                                   "psi", "trapping"};
    return names;
}

SuiteReport run_suite(const std::string& suite, const VerifyConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    SuiteReport r;
    if (suite == "identities") r = suite_identities(cfg);
    else if (suite == "partition") r = suite_partition(cfg);
    else if (suite == "bijectivity") r = suite_bijectivity(cfg);
    else if (suite == "psi") r = suite_psi(cfg);
    else if (suite == "trapping") r = suite_trapping(cfg);
    else throw ParseError("unknown verification suite: " + suite);
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
}

} // namespace cfdyn
