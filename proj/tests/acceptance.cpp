// Acceptance suite: one line per criterion, exit 0 iff all pass.
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "wco/expr.hpp"
#include "wco/theorems.hpp"

using wco::AntilinearOperator;
using wco::Complex;
using wco::ComplexMatrix;
using wco::ConjugationSpec;
using wco::LinearFractionalMap;
using wco::OperatorMatrix;
using wco::SymbolPair;
using wco::TruncatedSeries;

namespace {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Sampler {
    std::mt19937_64 rng;
    std::uniform_real_distribution<double> unit{0.0, 1.0};
    explicit Sampler(std::uint64_t seed) : rng(seed) {}
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(rng); }
    Complex disk(double radius) {
        const double r = radius * std::sqrt(unit(rng));
        const double t = 2.0 * M_PI * unit(rng);
        return Complex(r * std::cos(t), r * std::sin(t));
    }
    Complex phase() {
        const double t = 2.0 * M_PI * unit(rng);
        return Complex(std::cos(t), std::sin(t));
    }
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

// Shared evaluation order for an operator/conjugation pair.
int shared_eval_order(int order, const SymbolPair& sp, const ConjugationSpec& spec) {
    return std::max(wco::recommended_eval_order(order, sp.phi.spread_factor()),
                    wco::recommended_eval_order(order, spec.spread_factor()));
}

// Plain square-truncation CS residual; unlike the rectangular compression it
// carries genuine truncation error and therefore must decay in the order.
double square_cs_residual(const SymbolPair& sp, const ConjugationSpec& spec, int n) {
    const ComplexMatrix t = wco::build_wco_square(sp.psi_series(n), sp.phi_series(n));
    const ComplexMatrix u = wco::build_wco_square(
        spec.weight_series(n), wco::lft_to_series(spec.sigma_map(), n));
    const ComplexMatrix left = wco::mat_conj(wco::mat_mul(u, t));
    const ComplexMatrix right = wco::mat_mul(wco::mat_adjoint(t), wco::mat_conj(u));
    return wco::spectral_norm_estimate(wco::mat_sub(left, right));
}

// Isometry deviation of the conjugation's linear part on the order-N section.
double isometry_deviation(const AntilinearOperator& c) {
    const ComplexMatrix g = wco::mat_mul(wco::mat_adjoint(c.u.tall), c.u.tall);
    return wco::spectral_norm_estimate(
        wco::mat_sub(g, ComplexMatrix::identity(c.u.order + 1)));
}

wco::CsFamilyParams draw_cs_params(Sampler& s, double radius) {
    const Complex p = s.disk(radius);
    return {p, wco::solve_conjugation_lambda(p), s.disk(radius), s.disk(radius),
            Complex(s.uniform(0.2, 1.0)) * s.phase()};
}

// Shared state for the cross-pathway criterion (collected during 2/4/5/6).
struct CrossPathway {
    int draws = 0;
    int agreements = 0;
    double worstBilinear = 0.0;
};

void cross_pathway_probe(CrossPathway& cp, Sampler& s, const AntilinearOperator& c,
                         const SymbolPair& sp, bool csVerdict) {
    bool bilinearVerdict = true;
    for (int k = 0; k < 20; ++k) {
        const auto rep = wco::bilinear_cs_check(c, sp, s.disk(0.5), s.disk(0.5));
        bilinearVerdict = bilinearVerdict && rep.pass;
        cp.worstBilinear = std::max(cp.worstBilinear, rep.value);
    }
    cp.draws += 1;
    cp.agreements += (bilinearVerdict == csVerdict) ? 1 : 0;
}

// ---------------------------------------------------------------------------

CriterionResult criterion1() {
    CriterionResult out{"conjugation axioms (involution + isometry, and the only-if direction)",
                        false, ""};
    Sampler s(1001);
    const int n = 96;
    double worstInv = 0.0, worstIso = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Complex p = s.disk(0.6);
        const ConjugationSpec spec(p, wco::solve_conjugation_lambda(p));
        const AntilinearOperator c = wco::build_conjugation(spec, n);
        worstInv = std::max(worstInv, wco::involution_residual(c).value);
        worstIso = std::max(worstIso, isometry_deviation(c));
    }
    double minPerturbed = 1e300;
    for (int t = 0; t < 100; ++t) {
        const double r = s.uniform(0.2, 0.6);
        const Complex p = r * s.phase();
        const double eps = (s.unit(s.rng) < 0.5 ? -1.0 : 1.0) * s.uniform(0.1, 0.6);
        const Complex lambda =
            wco::solve_conjugation_lambda(p) * std::exp(Complex(0.0, eps));
        const AntilinearOperator c = wco::build_conjugation(ConjugationSpec(p, lambda), n);
        minPerturbed = std::min(minPerturbed, wco::involution_residual(c).value);
    }
    out.pass = worstInv <= 1e-10 && worstIso <= 1e-10 && minPerturbed >= 1e-3;
    out.detail = "worst involution " + fmt(worstInv) + ", worst isometry " + fmt(worstIso) +
                 ", min perturbed involution " + fmt(minPerturbed);
    return out;
}

CriterionResult criterion2(CrossPathway& cp, Sampler& cpRng) {
    CriterionResult out{"complex-symmetric family: CS residual and decay", false, ""};
    Sampler s(1002);
    const int n = 128;
    double worstCs = 0.0, worstDecay = 0.0;
    bool all = true;
    int made = 0, attempts = 0;
    while (made < 100 && attempts < 4000) {
        ++attempts;
        const wco::CsFamilyParams params = draw_cs_params(s, 0.5);
        SymbolPair sp{wco::RationalWeight{}, LinearFractionalMap::identity()};
        try {
            sp = wco::make_cs_family(params);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++made;
        const ConjugationSpec spec(params.p, params.lambda);
        const int ne = shared_eval_order(n, sp, spec);
        const OperatorMatrix t = wco::build_wco_matrix(sp, n, ne);
        const AntilinearOperator c = wco::build_conjugation(spec, n, ne);
        const auto rep = wco::cs_residual(t, c);
        worstCs = std::max(worstCs, rep.value);
        all = all && rep.pass;
        // Decay in the truncation order, observed on plain square sections
        // (the rectangular compression is already exact up to rounding, so it
        // cannot show decay); a rounding floor guards the ratio.
        const double r64 = square_cs_residual(sp, spec, 64);
        const double r128 = square_cs_residual(sp, spec, 128);
        if (r128 > std::max(0.5 * r64, 1e-13)) {
            all = false;
            worstDecay = std::max(worstDecay, r128 / std::max(r64, 1e-300));
        }
        cross_pathway_probe(cp, cpRng, c, sp, rep.pass);
    }
    if (made < 100) all = false;
    out.pass = all;
    out.detail = std::to_string(made) + " draws, worst cs " + fmt(worstCs) +
                 (worstDecay > 0.0 ? ", decay violated with ratio " + fmt(worstDecay)
                                   : ", decay holds");
    return out;
}

CriterionResult criterion3() {
    CriterionResult out{"parameter recovery round trip and non-family rejection", false, ""};
    Sampler s(1003);
    int made = 0, attempts = 0, rejectedPerturbed = 0;
    double worstGap = 0.0;
    bool all = true;
    while (made < 100 && attempts < 4000) {
        ++attempts;
        const wco::CsFamilyParams params = draw_cs_params(s, 0.5);
        SymbolPair sp{wco::RationalWeight{}, LinearFractionalMap::identity()};
        try {
            sp = wco::make_cs_family(params);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++made;
        const ConjugationSpec spec(params.p, params.lambda);
        TruncatedSeries psi = sp.psi.series(64);
        const wco::CsMatch m = wco::match_cs_parameters(psi, sp.phi, spec);
        if (!m.matched) {
            all = false;
            continue;
        }
        const double gap = std::max({std::abs(m.params.a0 - params.a0),
                                     std::abs(m.params.a1 - params.a1),
                                     std::abs(m.params.cWeight - params.cWeight)});
        worstGap = std::max(worstGap, gap);
        all = all && gap <= 1e-9;

        // Perturbed weight: a single bumped coefficient breaks the geometric
        // ratio, so the weight is no longer reciprocal-linear.
        psi.set_coeff(2, psi.coeff(2) + Complex(0.01));
        const wco::CsMatch bad = wco::match_cs_parameters(psi, sp.phi, spec);
        if (!bad.matched) ++rejectedPerturbed;
    }
    if (made < 100 || rejectedPerturbed != made) all = false;
    out.pass = all;
    out.detail = std::to_string(made) + " round trips, worst parameter gap " + fmt(worstGap) +
                 ", perturbed rejected " + std::to_string(rejectedPerturbed) + "/" +
                 std::to_string(made);
    return out;
}

CriterionResult criterion4(CrossPathway& cp, Sampler& cpRng) {
    CriterionResult out{"unitary family: unitarity and CS residuals", false, ""};
    Sampler s(1004);
    const int n = 128;
    double worstUnitary = 0.0, worstCs = 0.0;
    bool all = true;
    for (int t = 0; t < 50; ++t) {
        const auto fam = wco::make_unitary_family(s.disk(0.6), s.phase(), s.phase());
        const int ne = shared_eval_order(n, fam.symbols, fam.conjugation);
        const OperatorMatrix op = wco::build_wco_matrix(fam.symbols, n, ne);
        const AntilinearOperator c = wco::build_conjugation(fam.conjugation, n, ne);
        const double u = wco::structure_residuals(op).unitary.value;
        const auto rep = wco::cs_residual(op, c);
        worstUnitary = std::max(worstUnitary, u);
        worstCs = std::max(worstCs, rep.value);
        all = all && u <= 1e-9 && rep.value <= 1e-8;
        cross_pathway_probe(cp, cpRng, c, fam.symbols, rep.value <= 1e-8);
    }
    out.pass = all;
    out.detail = "worst unitary " + fmt(worstUnitary) + ", worst cs " + fmt(worstCs);
    return out;
}

CriterionResult criterion5(CrossPathway& cp, Sampler& cpRng) {
    CriterionResult out{"hermitian family: symmetry and CS residuals", false, ""};
    Sampler s(1005);
    const int n = 128;
    double worstHerm = 0.0, worstCs = 0.0;
    bool all = true;
    int made = 0, attempts = 0;
    while (made < 50 && attempts < 2000) {
        ++attempts;
        try {
            const auto fam = wco::make_hermitian_family(s.disk(0.6), s.uniform(-0.5, 0.5),
                                                        s.uniform(-0.5, 0.5));
            ++made;
            const int ne = shared_eval_order(n, fam.symbols, fam.conjugation);
            const OperatorMatrix op = wco::build_wco_matrix(fam.symbols, n, ne);
            const AntilinearOperator c = wco::build_conjugation(fam.conjugation, n, ne);
            const double h = wco::structure_residuals(op).hermitian.value;
            const auto rep = wco::cs_residual(op, c);
            worstHerm = std::max(worstHerm, h);
            worstCs = std::max(worstCs, rep.value);
            all = all && h <= 1e-9 && rep.value <= 1e-8;
            cross_pathway_probe(cp, cpRng, c, fam.symbols, rep.value <= 1e-8);
        } catch (const std::invalid_argument&) {
            // non-self-map draws are rejected by the constructor
        }
    }
    if (made < 50) all = false;
    out.pass = all;
    out.detail = std::to_string(made) + " draws, worst ||T-T^H|| " + fmt(worstHerm) +
                 ", worst cs " + fmt(worstCs);
    return out;
}

CriterionResult criterion6(CrossPathway& cp, Sampler& cpRng) {
    CriterionResult out{"normal family (interior fixed point): normality and CS residuals",
                        false, ""};
    Sampler s(1006);
    const int n = 128;
    double worstNormal = 0.0, worstCs = 0.0;
    bool all = true, qInside = true;
    for (int t = 0; t < 50; ++t) {
        const auto fam =
            wco::make_normal_interior_family(s.disk(0.5), s.phase(), s.disk(0.8));
        qInside = qInside && std::abs(fam.q) < 1.0;
        const int ne = shared_eval_order(n, fam.symbols, fam.conjugation);
        const OperatorMatrix op = wco::build_wco_matrix(fam.symbols, n, ne);
        const AntilinearOperator c = wco::build_conjugation(fam.conjugation, n, ne);
        const double nr = wco::structure_residuals(op).normal.value;
        const auto rep = wco::cs_residual(op, c);
        worstNormal = std::max(worstNormal, nr);
        worstCs = std::max(worstCs, rep.value);
        all = all && nr <= 1e-8 && rep.value <= 1e-8;
        cross_pathway_probe(cp, cpRng, c, fam.symbols, rep.value <= 1e-8);
    }
    out.pass = all && qInside;
    out.detail = std::string("worst normal ") + fmt(worstNormal) + ", worst cs " +
                 fmt(worstCs) + (qInside ? ", |q| < 1 on all draws" : ", |q| >= 1 observed");
    return out;
}

// Boundary-fixed-point maps reused by criteria 7 and 8.
std::vector<LinearFractionalMap> boundary_positive_maps(int count) {
    Sampler s(1007);
    std::vector<LinearFractionalMap> maps;
    while (static_cast<int>(maps.size()) < count) {
        try {
            maps.push_back(wco::make_boundary_selfmap(
                s.phase(), Complex(s.uniform(0.08, 0.3)) * s.phase()));
        } catch (const std::invalid_argument&) {
            // infeasible phase alignment; redraw
        }
    }
    return maps;
}

CriterionResult criterion7() {
    CriterionResult out{"boundary dichotomy: |b| = |c| versus |b| != |c|", false, ""};
    const int n = 128;
    bool all = true;
    double worstPos14 = 0.0, worstPosNormal = 0.0;
    double minNeg14 = 1e300, minNegNormal = 1e300;
    const auto maps = boundary_positive_maps(25);
    for (const LinearFractionalMap& m : maps) {
        const auto fam =
            wco::make_boundary_normal_family(m.a(), m.b(), m.c(), m.d());
        const double e14 = wco::verify_eq14(m.a(), m.b(), m.c(), m.d(), n).value;
        const double nr =
            wco::structure_residuals(wco::build_wco_matrix(fam.symbols, n)).normal.value;
        worstPos14 = std::max(worstPos14, e14);
        worstPosNormal = std::max(worstPosNormal, nr);
        all = all && e14 <= 1e-8 && nr <= 1e-8;
    }
    // Negative set: shrink (a, b) by a factor; the image contracts strictly
    // into the disk (still a self-map) while ||b| - |c|| becomes >= 0.05.
    Sampler s(2007);
    int negatives = 0;
    while (negatives < 25) {
        try {
            const LinearFractionalMap m = wco::make_boundary_selfmap(
                s.phase(), Complex(s.uniform(0.18, 0.3)) * s.phase());
            const double shrink = s.uniform(0.5, 0.7);
            const Complex a = shrink * m.a(), b = shrink * m.b();
            if (std::abs(std::abs(b) - std::abs(m.c())) < 0.05) continue;
            ++negatives;
            const double e14 = wco::verify_eq14(a, b, m.c(), m.d(), n).value;
            const SymbolPair sp{wco::RationalWeight{1.0, 1.0, m.c() / m.d()},
                                LinearFractionalMap(a, b, m.c(), m.d())};
            const double nr =
                wco::structure_residuals(wco::build_wco_matrix(sp, n)).normal.value;
            minNeg14 = std::min(minNeg14, e14);
            minNegNormal = std::min(minNegNormal, nr);
            all = all && e14 >= 1e-4 && nr >= 1e-4;
        } catch (const std::invalid_argument&) {
            // redraw
        }
    }
    out.pass = all;
    out.detail = "positive worst eq14 " + fmt(worstPos14) + " / normal " + fmt(worstPosNormal) +
                 "; negative min eq14 " + fmt(minNeg14) + " / normal " + fmt(minNegNormal);
    return out;
}

CriterionResult criterion8() {
    CriterionResult out{"boundary CS conjugation: base-point equation and CS residual", false,
                        ""};
    const int n = 160;
    bool all = true;
    double worstEq = 0.0, worstCs = 0.0;
    const auto maps = boundary_positive_maps(10);
    for (const LinearFractionalMap& m : maps) {
        const auto fam = wco::make_boundary_normal_family(m.a(), m.b(), m.c(), m.d());
        // Base-point equation for the eta-normalized map, b1 = b conj(eta)^2 / c:
        // b1 p (conj(p) - 1) + conj(p) (1 - p) = 0.
        const Complex b1 = m.b() * std::conj(fam.eta) * std::conj(fam.eta) / m.c();
        const Complex p = fam.p1;
        const double eqResid =
            std::abs(b1 * p * (std::conj(p) - 1.0) + std::conj(p) * (1.0 - p));
        worstEq = std::max(worstEq, eqResid);
        const int ne = shared_eval_order(n, fam.symbols, fam.conjugation);
        const OperatorMatrix op = wco::build_wco_matrix(fam.symbols, n, ne);
        const AntilinearOperator c = wco::build_conjugation(fam.conjugation, n, ne);
        const double cs = wco::cs_residual(op, c).value;
        worstCs = std::max(worstCs, cs);
        all = all && eqResid <= 1e-10 && cs <= 1e-7;
    }
    out.pass = all;
    out.detail = "worst base-point equation residual " + fmt(worstEq) + ", worst cs " +
                 fmt(worstCs);
    return out;
}

CriterionResult criterion9() {
    CriterionResult out{"algebraic degree <= 2 classification suite", false, ""};
    const int ne = 256, n = 96;
    bool all = true;
    std::string note;

    // Degree 1: constant weight with identity composition.
    {
        const auto cert = wco::classify_algebraic(wco::parse_symbol_series("5", ne),
                                                  wco::parse_symbol_series("z", ne), n);
        all = all && cert.algebraic && cert.degree == 1 && cert.annihilator.value <= 1e-10 &&
              wco::verify_case3_identity(wco::parse_symbol_series("5", ne),
                                         wco::parse_symbol_series("z", ne), cert, 8)
                      .value <= 1e-10;
    }
    // Idempotent: psi = 1, phi = 0 gives W^2 = W.
    {
        const auto cert = wco::classify_algebraic(wco::parse_symbol_series("1", ne),
                                                  TruncatedSeries(ne, 0.0), n);
        all = all && cert.algebraic && cert.degree == 2 && cert.annihilator.value <= 1e-10 &&
              wco::verify_case3_identity(wco::parse_symbol_series("1", ne),
                                         TruncatedSeries(ne, 0.0), cert, 8)
                      .value <= 1e-10;
    }
    // Case 3: odd log-weights with phi = -z give ||W^2 - I|| small.
    double worstSq = 0.0, worstEq17 = 0.0;
    for (const char* w : {"exp(sin(z))", "exp(z)"}) {
        const TruncatedSeries psi = wco::parse_symbol_series(w, ne);
        const TruncatedSeries phi = wco::parse_symbol_series("-z", ne);
        const auto cert = wco::classify_algebraic(psi, phi, n);
        const double eq17 = wco::verify_case3_identity(psi, phi, cert, 8).value;
        worstSq = std::max(worstSq, cert.annihilator.value);
        worstEq17 = std::max(worstEq17, eq17);
        all = all && cert.algebraic &&
              cert.caseTag == wco::AlgebraicCase::InvolutionOddWeight &&
              cert.annihilator.value <= 1e-8 && eq17 <= 1e-10;
    }
    // Non-members.
    {
        const auto even = wco::classify_algebraic(wco::parse_symbol_series("exp(z^2)", ne),
                                                  wco::parse_symbol_series("-z", ne), n);
        const auto root5 = wco::classify_algebraic(
            wco::parse_symbol_series("1+z", ne),
            wco::parse_symbol_series("exp(2*pi*i/5)*z", ne), n);
        all = all && !even.algebraic && !root5.algebraic;
    }
    out.pass = all;
    out.detail = "worst ||W^2 - I|| " + fmt(worstSq) + ", worst eq17 deviation " +
                 fmt(worstEq17);
    return out;
}

CriterionResult criterion10(const CrossPathway& cp) {
    CriterionResult out{"matrix and kernel-bilinear CS pathways agree", false, ""};
    out.pass = cp.draws > 0 && cp.agreements == cp.draws;
    out.detail = std::to_string(cp.agreements) + "/" + std::to_string(cp.draws) +
                 " verdict agreements at 20 kernel pairs each, worst bilinear gap " +
                 fmt(cp.worstBilinear);
    return out;
}

CriterionResult criterion11() {
    CriterionResult out{"kernel adjoint identity W* K_w = conj(psi(w)) K_phi(w)", false, ""};
    Sampler s(1011);
    const int n = 128;
    double worst = 0.0;
    bool all = true;
    int made = 0, attempts = 0;
    while (made < 50 && attempts < 2000) {
        ++attempts;
        try {
            const SymbolPair sp = wco::make_cs_family(draw_cs_params(s, 0.5));
            const Complex w = s.disk(0.5);
            ++made;
            const double v = wco::kernel_adjoint_check(sp, w, n).value;
            worst = std::max(worst, v);
            all = all && v <= 1e-9;
        } catch (const std::invalid_argument&) {
            // constructor rejection; redraw
        }
    }
    if (made < 50) all = false;
    out.pass = all;
    out.detail = std::to_string(made) + " draws, worst residual " + fmt(worst);
    return out;
}

} // namespace

int main() {
    std::vector<CriterionResult> results;
    CrossPathway cp;
    Sampler cpRng(1010);

    results.push_back(criterion1());
    results.push_back(criterion2(cp, cpRng));
    results.push_back(criterion3());
    results.push_back(criterion4(cp, cpRng));
    results.push_back(criterion5(cp, cpRng));
    results.push_back(criterion6(cp, cpRng));
    results.push_back(criterion7());
    results.push_back(criterion8());
    results.push_back(criterion9());
    results.push_back(criterion10(cp));
    results.push_back(criterion11());

    bool all = true;
    for (size_t i = 0; i < results.size(); ++i) {
        const CriterionResult& r = results[i];
        all = all && r.pass;
        std::printf("%2zu. %s: %s (%s)\n", i + 1, r.name.c_str(), r.pass ? "PASS" : "FAIL",
                    r.detail.c_str());
    }
    std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
    return all ? 0 : 1;
}
