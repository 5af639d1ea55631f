#pragma once

#include <map>
#include <string>
#include <vector>

#include "wco/operators.hpp"

namespace wco {

/// Recovered parameters for the complex-symmetric family, or the reason the
/// symbols do not fit the template.
struct CsMatch {
    bool matched = false;
    CsFamilyParams params{};
    std::string failureReason;
};

/// Solve (a0, a1, c) from (p, lambda) and the symbols; matched only when
/// rebuilding the family from the recovered parameters reproduces both
/// symbols to 1e-9 after normalization.
CsMatch match_cs_parameters(const TruncatedSeries& psi, const LinearFractionalMap& phi,
                            const ConjugationSpec& spec);

/// Residual of the two-sided normality identity for phi = (az+b)/(cz+d):
/// weight |d|^2/(|d|^2-|b|^2-(conj(b)a-conj(d)c)z) with symbol phi*∘phi
/// against weight |d|^2/(|d|^2-|c|^2-(conj(b)d-c*conj(a))z) with phi∘phi*.
/// Both sides are exact square sections, so no extended products are needed.
ResidualReport verify_eq14(Complex a, Complex b, Complex c, Complex d, int order,
                           double tolerance = 0.0);

enum class AlgebraicCase { ConstantPhi, IdentityPair, InvolutionOddWeight };

const char* algebraic_case_name(AlgebraicCase c);

/// Witness that W_{psi,phi} satisfies A W^2 - B W - C = 0 (A = 1 for degree
/// 2, A = 0 and W = B for degree 1), with the structural data of the case
/// that produced it.
struct AlgebraicCertificate {
    bool algebraic = false;
    int degree = 0;
    Complex A{0.0};
    Complex B{0.0};
    Complex C{0.0};
    AlgebraicCase caseTag = AlgebraicCase::ConstantPhi;
    Complex fixedPoint{0.0};   // interior fixed point p (involution case)
    Complex oddConstant{0.0};  // c with psi∘alpha_p = c * exp(odd series)
    TruncatedSeries logWeight; // log(psi∘alpha_p); even coefficients vanish
    std::string failureReason; // set when not algebraic of degree <= 2
    ResidualReport annihilator; // numeric re-verification of the polynomial
};

/// Decision procedure over (constant phi | identity pair | involutive phi
/// with odd log-weight); symbols must be supplied at an extended order,
/// the certificate is issued at the given section order and always
/// re-verified through the matrix annihilator residual.
AlgebraicCertificate classify_algebraic(const TruncatedSeries& psiExt,
                                        const TruncatedSeries& phiExt, int order,
                                        double tolerance = 0.0);

/// Coefficientwise check of psi*(psi∘phi)*(phi∘phi)^n = B*psi*phi^n + C z^n
/// for n = 0..maxMonomial; value is the max coefficient deviation.
ResidualReport verify_case3_identity(const TruncatedSeries& psi, const TruncatedSeries& phi,
                                     const AlgebraicCertificate& cert, int maxMonomial,
                                     double tolerance = 1e-10);

struct CertificateReport {
    std::string family;
    std::vector<ResidualReport> checks;
    bool pass = false;
};

using ParamMap = std::map<std::string, Complex>;

/// Family tags: cs-2.3 (p, lambda?, a0, a1, c), unitary (q, mu1?, mu2?),
/// hermitian (b0, b1, b2), normal-interior (p, gamma?, delta),
/// boundary-normal (a, b, c, d, r?), algebraic (p, c?, a1, a3?).
/// Runs every residual applicable to the family; deterministic.
CertificateReport certify_theorem(const std::string& familyTag, const ParamMap& params,
                                  int order, double tolerance = 0.0);

} // namespace wco
