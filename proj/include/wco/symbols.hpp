#pragma once

#include <vector>

#include "wco/lft.hpp"
#include "wco/series.hpp"

namespace wco {

/// Base point p and unimodular lambda with lambda * p = conj(p); compiles to
/// the antilinear conjugation J W_{k_p, sigma}.
struct ConjugationSpec {
    Complex p;
    Complex lambda;

    ConjugationSpec(Complex p_, Complex lambda_);

    /// Whether lambda p = conj(p) holds; construction does not require it so
    /// that the "only if" direction can be probed with violating lambdas.
    bool lemma_condition(double tol = 1e-12) const;

    LinearFractionalMap sigma_map() const { return LinearFractionalMap::sigma(p, lambda); }
    /// k_p = sqrt(1-|p|^2) / (1 - conj(p) z).
    TruncatedSeries weight_series(int order) const;
    double spread_factor() const { return (1.0 + std::abs(p)) / (1.0 - std::abs(p)); }
};

/// lambda = conj(p)/p for p != 0; 1 for p = 0 (documented free choice).
Complex solve_conjugation_lambda(Complex p);

/// All p = r e^{i theta} with b1 p (conj(p) - 1) + conj(p)(1 - p) = 0,
/// found by bracketing the wrapped phase defect over theta in [0, 2pi).
std::vector<Complex> solve_boundary_basepoint(Complex b1, double r);

/// Reciprocal-linear weight s / (d0 + d1 z). Unlike a composition symbol it
/// may legitimately be constant (d1 = 0), which a nondegenerate
/// LinearFractionalMap cannot represent.
struct RationalWeight {
    Complex s{1.0};
    Complex d0{1.0};
    Complex d1{0.0};

    Complex apply(Complex z) const { return s / (d0 + d1 * z); }
    /// Geometric expansion; requires the pole strictly outside the closed disk.
    TruncatedSeries series(int order) const;
};

/// Symbol pair of a weighted composition operator W_{psi, phi} whose weight
/// is reciprocal-linear; both symbols kept in closed form.
struct SymbolPair {
    RationalWeight psi;
    LinearFractionalMap phi;

    TruncatedSeries psi_series(int order) const { return psi.series(order); }
    TruncatedSeries phi_series(int order) const { return lft_to_series(phi, order); }
};

/// Parameters of the complex-symmetric family for conjugation J W_{k_p, sigma}.
struct CsFamilyParams {
    Complex p;
    Complex lambda;
    Complex a0;
    Complex a1;
    Complex cWeight;
};

/// psi = c / (1 - a0 p - (p - conj(lambda) a0) z),
/// phi = a0 + a1 (p - conj(lambda) z) / (1 - a0 p - (p - conj(lambda) a0) z).
SymbolPair make_cs_family(const CsFamilyParams& params);

struct UnitaryFamily {
    SymbolPair symbols;
    ConjugationSpec conjugation;
};
/// phi = mu1 (q - z)/(1 - conj(q) z), psi = mu2 k_q; conjugation base conj(q).
UnitaryFamily make_unitary_family(Complex q, Complex mu1, Complex mu2);

struct HermitianFamily {
    SymbolPair symbols;
    ConjugationSpec conjugation; // realizes J C_{rot z} with rot conj(b0) + b0 = 0
    Complex rotation;            // the rot above
};
HermitianFamily make_hermitian_family(Complex b0, double b1, double b2);

struct NormalInteriorFamily {
    SymbolPair symbols;
    ConjugationSpec conjugation;
    Complex q; // conjugation base point (p - conj(p)) / (p^2 - 1)
};
NormalInteriorFamily make_normal_interior_family(Complex p, Complex gamma, Complex delta);

struct BoundaryNormalFamily {
    SymbolPair symbols;
    ConjugationSpec conjugation;
    Complex eta;       // boundary fixed point
    Complex basepoint; // p1 * conj(eta) with p1 from solve_boundary_basepoint
    Complex p1;        // solution for the eta-normalized map
};
/// phi = (az+b)/(cz+d) with a boundary fixed point and |b| = |c|;
/// psi = K_{phi*(0)}. basepointRadius is the |p1| used for the conjugation.
BoundaryNormalFamily make_boundary_normal_family(Complex a, Complex b, Complex c, Complex d,
                                                 double basepointRadius = 0.5);

/// Disk self-map (az+b)/(cz+1) with |b| = |c| that fixes the boundary point
/// eta. The fixed point must be a tangency of |phi| with the unit circle, so
/// only the modulus of c is free: given eta and c, arg(b) is solved from the
/// alignment condition a conj(b) - c = t conj(eta), t >= 0, and
/// a = c eta + 1 - b conj(eta) pins the fixed point. Throws when no aligned
/// phase with nonnegative t exists for the given c.
LinearFractionalMap make_boundary_selfmap(Complex eta, Complex c);

} // namespace wco
