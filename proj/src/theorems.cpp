#include "wco/theorems.hpp"

#include <cmath>
#include <stdexcept>

namespace wco {

namespace {

constexpr double kMatchTol = 1e-9;
constexpr double kFlatTol = 1e-10;
constexpr double kParityTol = 1e-9;

CsMatch match_failure(const std::string& reason) {
    CsMatch out;
    out.failureReason = reason;
    return out;
}

double lft_pointwise_distance(const LinearFractionalMap& m1, const LinearFractionalMap& m2) {
    double worst = 0.0;
    for (int k = 0; k < 16; ++k) {
        const double t = 2.0 * M_PI * k / 16.0;
        const Complex z = 0.5 * Complex(std::cos(t), std::sin(t));
        worst = std::max(worst, std::abs(m1.apply(z) - m2.apply(z)));
    }
    return worst;
}

Complex find_interior_fixed_point(const TruncatedSeries& phi) {
    auto damped = [&](Complex z) {
        for (int it = 0; it < 500; ++it) {
            const Complex next = 0.5 * (z + series_evaluate(phi, z));
            if (std::abs(next - z) <= 1e-15) return next;
            z = next;
        }
        return z;
    };
    Complex z = damped(Complex(0.0));
    if (std::abs(series_evaluate(phi, z) - z) > 1e-10 || std::abs(z) >= 1.0 - 1e-9) {
        // grid fallback over the disk, then refine
        double best = 1e300;
        Complex cand(0.0);
        for (int i = -20; i <= 20; ++i) {
            for (int j = -20; j <= 20; ++j) {
                const Complex w(0.0475 * i, 0.0475 * j);
                if (std::abs(w) >= 0.97) continue;
                const double gap = std::abs(series_evaluate(phi, w) - w);
                if (gap < best) {
                    best = gap;
                    cand = w;
                }
            }
        }
        z = damped(cand);
    }
    if (std::abs(series_evaluate(phi, z) - z) > 1e-10 || std::abs(z) >= 1.0 - 1e-9)
        throw std::invalid_argument("classify: interior fixed point not found");
    return z;
}

Complex require_param(const ParamMap& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("certify: missing parameter " + key);
    return it->second;
}

Complex param_or(const ParamMap& params, const std::string& key, Complex fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

double real_param(const ParamMap& params, const std::string& key) {
    const Complex v = require_param(params, key);
    if (std::abs(v.imag()) > 1e-12)
        throw std::invalid_argument("certify: parameter " + key + " must be real");
    return v.real();
}

void finish(CertificateReport& report) {
    report.pass = true;
    for (const ResidualReport& r : report.checks) report.pass = report.pass && r.pass;
}

} // namespace

CsMatch match_cs_parameters(const TruncatedSeries& psi, const LinearFractionalMap& phi,
                            const ConjugationSpec& spec) {
    const int n = psi.order();
    if (n < 4) return match_failure("weight series too short for ratio test");
    const Complex psi0 = psi.coeff(0);
    const double scale = std::max(1.0, psi.max_coeff_abs());
    if (std::abs(psi0) <= 1e-12) return match_failure("non-reciprocal-linear weight");
    const Complex beta = psi.coeff(1) / psi0;
    for (int k = 1; k < n; ++k) {
        if (std::abs(psi.coeff(k + 1) - beta * psi.coeff(k)) > kMatchTol * scale)
            return match_failure("non-reciprocal-linear weight");
    }
    if (std::abs(beta) >= 1.0) return match_failure("weight pole inside the closed disk");

    const Complex p = spec.p;
    const Complex lb = std::conj(spec.lambda);
    const Complex a0Denom = lb - beta * p;
    if (std::abs(a0Denom) <= 1e-12) return match_failure("degenerate template denominator");
    const Complex a0 = (p - beta) / a0Denom;
    const Complex cWeight = psi0 * (1.0 - a0 * p);

    Complex a1(0.0);
    bool solved = false;
    for (Complex z0 : {Complex(0.37), Complex(0.0, 0.61), Complex(-0.45)}) {
        const Complex frac = p - lb * z0;
        if (std::abs(frac) <= 1e-6) continue;
        a1 = (phi.apply(z0) - a0) * (1.0 - a0 * p - (p - lb * a0) * z0) / frac;
        solved = true;
        break;
    }
    if (!solved) return match_failure("degenerate template denominator");

    CsMatch out;
    out.params = {p, spec.lambda, a0, a1, cWeight};
    SymbolPair rebuilt{RationalWeight{}, LinearFractionalMap::identity()};
    try {
        rebuilt = make_cs_family(out.params);
    } catch (const std::invalid_argument& e) {
        return match_failure(e.what());
    }
    if (lft_pointwise_distance(rebuilt.phi, phi) > kMatchTol)
        return match_failure("composition symbol incompatible with template");
    const TruncatedSeries rebuiltPsi = rebuilt.psi.series(n);
    for (int k = 0; k <= n; ++k) {
        if (std::abs(rebuiltPsi.coeff(k) - psi.coeff(k)) > kMatchTol * scale)
            return match_failure("weight incompatible with template");
    }
    out.matched = true;
    return out;
}

ResidualReport verify_eq14(Complex a, Complex b, Complex c, Complex d, int order,
                           double tolerance) {
    LinearFractionalMap phi(a, b, c, d);
    if (!lft_is_disk_selfmap(phi))
        throw std::invalid_argument("eq14: phi is not a selfmap of the disk");
    const LinearFractionalMap phiStar = cross_adjoint(phi);
    const RationalWeight leftWeight{std::norm(d), std::norm(d) - std::norm(b),
                                    -(std::conj(b) * a - std::conj(d) * c)};
    const RationalWeight rightWeight{std::norm(d), std::norm(d) - std::norm(c),
                                     -(std::conj(b) * d - c * std::conj(a))};
    TruncatedSeries lw(0, Complex(0.0)), ls(0, Complex(0.0));
    TruncatedSeries rw(0, Complex(0.0)), rs(0, Complex(0.0));
    try {
        lw = leftWeight.series(order);
        ls = lft_to_series(lft_compose(phiStar, phi), order);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("eq14: left-side pole on or inside the closed disk");
    }
    try {
        rw = rightWeight.series(order);
        rs = lft_to_series(lft_compose(phi, phiStar), order);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("eq14: right-side pole on or inside the closed disk");
    }
    const ComplexMatrix diff =
        mat_sub(build_wco_square(lw, ls), build_wco_square(rw, rs));
    const double tol = tolerance > 0.0 ? tolerance : default_tolerance(0.0);
    return make_report("eq14", spectral_norm_estimate(diff), order, 0.0, tol);
}

const char* algebraic_case_name(AlgebraicCase c) {
    switch (c) {
        case AlgebraicCase::ConstantPhi: return "constant-phi";
        case AlgebraicCase::IdentityPair: return "identity-pair";
        case AlgebraicCase::InvolutionOddWeight: return "involution-odd-weight";
    }
    return "unknown";
}

AlgebraicCertificate classify_algebraic(const TruncatedSeries& psiExt,
                                        const TruncatedSeries& phiExt, int order,
                                        double tolerance) {
    if (psiExt.order() != phiExt.order())
        throw std::invalid_argument("classify: symbol order mismatch");
    if (psiExt.max_coeff_abs() <= 1e-12)
        throw std::invalid_argument("classify: weight identically zero");
    const TruncatedSeries psiN = psiExt.resized(order);
    const TruncatedSeries phiN = phiExt.resized(order);

    AlgebraicCertificate cert;

    double phiNonConstant = 0.0;
    for (int k = 1; k <= phiExt.order(); ++k)
        phiNonConstant = std::max(phiNonConstant, std::abs(phiExt.coeff(k)));
    double psiNonConstant = 0.0;
    for (int k = 1; k <= psiExt.order(); ++k)
        psiNonConstant = std::max(psiNonConstant, std::abs(psiExt.coeff(k)));
    double identityGap = std::abs(phiExt.coeff(1) - 1.0);
    for (int k = 0; k <= phiExt.order(); ++k)
        if (k != 1) identityGap = std::max(identityGap, std::abs(phiExt.coeff(k)));

    if (phiNonConstant <= kFlatTol) {
        const Complex phi0 = phiExt.coeff(0);
        cert.algebraic = true;
        cert.degree = 2;
        cert.caseTag = AlgebraicCase::ConstantPhi;
        cert.A = 1.0;
        cert.B = series_evaluate(psiExt, phi0);
        cert.C = 0.0;
    } else if (identityGap <= kFlatTol) {
        if (psiNonConstant > kFlatTol) {
            cert.failureReason = "identity composition symbol with nonconstant weight";
            return cert;
        }
        cert.algebraic = true;
        cert.degree = 1;
        cert.caseTag = AlgebraicCase::IdentityPair;
        cert.A = 0.0;
        cert.B = psiExt.coeff(0);
        cert.C = 0.0;
    } else {
        const TruncatedSeries twice = series_compose(phiN, phiN);
        double involutionGap = 0.0;
        for (int k = 0; k <= order; ++k) {
            const Complex want = (k == 1) ? Complex(1.0) : Complex(0.0);
            involutionGap = std::max(involutionGap, std::abs(twice.coeff(k) - want));
        }
        if (involutionGap > kParityTol) {
            cert.failureReason =
                "composition symbol is not constant, the identity, or an involution";
            return cert;
        }
        const Complex p = find_interior_fixed_point(phiN);
        const TruncatedSeries alpha =
            lft_to_series(LinearFractionalMap::alpha(p), order);
        const TruncatedSeries pulled = series_compose(psiN, alpha);
        if (std::abs(pulled.coeff(0)) <= 1e-12) {
            cert.failureReason = "weight vanishes at the fixed point";
            return cert;
        }
        const TruncatedSeries g = series_log(pulled);
        double evenGap = 0.0;
        for (int k = 2; k <= order; k += 2) evenGap = std::max(evenGap, std::abs(g.coeff(k)));
        cert.fixedPoint = p;
        cert.logWeight = g;
        if (evenGap > kParityTol) {
            cert.failureReason = "even coefficient in the log-weight";
            return cert;
        }
        const TruncatedSeries product = series_mul(psiN, series_compose(psiN, phiN));
        double productGap = 0.0;
        for (int k = 1; k <= order; ++k)
            productGap = std::max(productGap, std::abs(product.coeff(k)));
        if (productGap > kParityTol * std::max(1.0, std::abs(product.coeff(0)))) {
            cert.failureReason = "weight self-product is not constant";
            return cert;
        }
        cert.algebraic = true;
        cert.degree = 2;
        cert.caseTag = AlgebraicCase::InvolutionOddWeight;
        cert.A = 1.0;
        cert.B = 0.0;
        cert.C = product.coeff(0);
        cert.oddConstant = std::exp(g.coeff(0));
    }

    // Re-verify the annihilating polynomial against the matrix section.
    const OperatorMatrix t = build_wco_matrix(psiExt, phiExt, order);
    const ComplexMatrix sq = t.square();
    const ComplexMatrix eye = ComplexMatrix::identity(order + 1);
    ComplexMatrix defect(1, 1);
    if (cert.degree == 1) {
        defect = mat_sub(sq, mat_scale(cert.B, eye));
    } else {
        defect = mat_sub(mat_sub(mat_mul(t.wide, t.tall), mat_scale(cert.B, sq)),
                         mat_scale(cert.C, eye));
    }
    const double tail = tail_estimate(t);
    const double tol = tolerance > 0.0 ? tolerance : default_tolerance(tail);
    cert.annihilator =
        make_report("annihilator", spectral_norm_estimate(defect), order, tail, tol);
    return cert;
}

ResidualReport verify_case3_identity(const TruncatedSeries& psi, const TruncatedSeries& phi,
                                     const AlgebraicCertificate& cert, int maxMonomial,
                                     double tolerance) {
    if (!cert.algebraic)
        throw std::invalid_argument("eq17: certificate is not algebraic");
    const int n = std::min(psi.order(), 192);
    if (maxMonomial > n)
        throw std::invalid_argument("eq17: monomial degree exceeds working order");
    const TruncatedSeries psiN = psi.resized(n);
    const TruncatedSeries phiN = phi.resized(n);
    const TruncatedSeries twice = series_compose(phiN, phiN);
    const TruncatedSeries base = series_mul(psiN, series_compose(psiN, phiN));
    TruncatedSeries twicePow = TruncatedSeries::constant(1.0, n);
    TruncatedSeries phiPow = TruncatedSeries::constant(1.0, n);
    double worst = 0.0;
    for (int m = 0; m <= maxMonomial; ++m) {
        const TruncatedSeries left = series_mul(base, twicePow);
        TruncatedSeries right = series_scale(cert.B, series_mul(psiN, phiPow));
        right.set_coeff(m, right.coeff(m) + cert.C);
        worst = std::max(worst, series_sub(left, right).max_coeff_abs());
        if (m < maxMonomial) {
            twicePow = series_mul(twicePow, twice);
            phiPow = series_mul(phiPow, phiN);
        }
    }
    return make_report("eq17", worst, n, 0.0, tolerance);
}

CertificateReport certify_theorem(const std::string& familyTag, const ParamMap& params,
                                  int order, double tolerance) {
    CertificateReport report;
    report.family = familyTag;

    auto add_cs_suite = [&](const SymbolPair& symbols, const ConjugationSpec& spec) {
        const int ne = std::max(recommended_eval_order(order, symbols.phi.spread_factor()),
                                recommended_eval_order(order, spec.spread_factor()));
        const OperatorMatrix t = build_wco_matrix(symbols, order, ne);
        const AntilinearOperator c = build_conjugation(spec, order, ne);
        report.checks.push_back(involution_residual(c, tolerance));
        report.checks.push_back(cs_residual(t, c, tolerance));
        return t;
    };

    if (familyTag == "cs-2.3") {
        const Complex p = require_param(params, "p");
        const Complex lambda = param_or(params, "lambda", solve_conjugation_lambda(p));
        const CsFamilyParams fp{p, lambda, require_param(params, "a0"),
                                require_param(params, "a1"), param_or(params, "c", 1.0)};
        const SymbolPair symbols = make_cs_family(fp);
        const ConjugationSpec spec(p, lambda);
        const OperatorMatrix t = add_cs_suite(symbols, spec);
        report.checks.push_back(
            kernel_adjoint_check(t, symbols, Complex(0.2, 0.1), tolerance));
        report.checks.push_back(bilinear_cs_check(build_conjugation(spec, order, t.evalOrder),
                                                  symbols, Complex(0.2), Complex(0.0, 0.3),
                                                  tolerance));
    } else if (familyTag == "unitary") {
        const UnitaryFamily fam =
            make_unitary_family(require_param(params, "q"), param_or(params, "mu1", 1.0),
                                param_or(params, "mu2", 1.0));
        const OperatorMatrix t = add_cs_suite(fam.symbols, fam.conjugation);
        const StructureResiduals s = structure_residuals(t, tolerance);
        report.checks.push_back(s.unitary);
        report.checks.push_back(s.normal);
    } else if (familyTag == "hermitian") {
        const HermitianFamily fam = make_hermitian_family(
            require_param(params, "b0"), real_param(params, "b1"), real_param(params, "b2"));
        const OperatorMatrix t = add_cs_suite(fam.symbols, fam.conjugation);
        const StructureResiduals s = structure_residuals(t, tolerance);
        report.checks.push_back(s.hermitian);
        report.checks.push_back(s.normal);
    } else if (familyTag == "normal-interior") {
        const NormalInteriorFamily fam = make_normal_interior_family(
            require_param(params, "p"), param_or(params, "gamma", 1.0),
            require_param(params, "delta"));
        const OperatorMatrix t = add_cs_suite(fam.symbols, fam.conjugation);
        report.checks.push_back(structure_residuals(t, tolerance).normal);
    } else if (familyTag == "boundary-normal") {
        const Complex a = require_param(params, "a");
        const Complex b = require_param(params, "b");
        const Complex c = require_param(params, "c");
        const Complex d = require_param(params, "d");
        const double r = param_or(params, "r", 0.5).real();
        const BoundaryNormalFamily fam = make_boundary_normal_family(a, b, c, d, r);
        const OperatorMatrix t = add_cs_suite(fam.symbols, fam.conjugation);
        report.checks.push_back(structure_residuals(t, tolerance).normal);
        report.checks.push_back(verify_eq14(a, b, c, d, order, tolerance));
    } else if (familyTag == "algebraic") {
        const Complex p = param_or(params, "p", 0.0);
        const Complex cWeight = param_or(params, "c", 1.0);
        const Complex a1 = require_param(params, "a1");
        const Complex a3 = param_or(params, "a3", 0.0);
        const LinearFractionalMap alpha = LinearFractionalMap::alpha(p);
        const LinearFractionalMap phi =
            lft_compose(alpha, LinearFractionalMap(1.0, -p, -std::conj(p), 1.0));
        const int ne = recommended_eval_order(order, phi.spread_factor());
        TruncatedSeries odd(ne, Complex(0.0));
        odd.set_coeff(1, a1);
        if (ne >= 3) odd.set_coeff(3, a3);
        const TruncatedSeries pulled = series_scale(cWeight, series_exp(odd));
        const TruncatedSeries psi = series_compose(pulled, lft_to_series(alpha, ne));
        const AlgebraicCertificate cert =
            classify_algebraic(psi, lft_to_series(phi, ne), order, tolerance);
        report.checks.push_back(make_report("classified", cert.algebraic ? 0.0 : 1.0, order,
                                            0.0, 0.5));
        if (cert.algebraic) {
            report.checks.push_back(cert.annihilator);
            report.checks.push_back(
                verify_case3_identity(psi, lft_to_series(phi, ne), cert, 8));
        }
    } else {
        throw std::invalid_argument("certify: unknown family tag " + familyTag);
    }

    finish(report);
    return report;
}

} // namespace wco
