#pragma once

#include <string>
#include <vector>

#include "wco/matrix.hpp"
#include "wco/series.hpp"
#include "wco/symbols.hpp"

namespace wco {

/// Finite section of W_{psi,phi} in the monomial basis, kept in two exact
/// rectangular compressions rather than a single square block. Column j of
/// the infinite matrix is the coefficient sequence of psi * phi^j, and a
/// square truncation silently drops the mass that a non-rotation symbol
/// pushes past row N, which ruins product identities near the corner. The
/// pair below keeps every product we form an exact compression up to the
/// geometric tail beyond evalOrder:
///   tall: rows 0..evalOrder of columns 0..order      ((Ne+1) x (N+1))
///   wide: rows 0..order of columns 0..evalOrder      ((N+1) x (Ne+1))
/// Identities are then evaluated as, e.g., wide_a * tall_b for rows/columns
/// 0..order of the operator product A*B.
struct OperatorMatrix {
    int order;     // N: the certified section size
    int evalOrder; // Ne: internal extension absorbing coefficient spread
    ComplexMatrix tall;
    ComplexMatrix wide;

    /// The plain square section P_N W P_N (top block of tall).
    ComplexMatrix square() const { return tall.top_left(order + 1); }
};

/// Ne = ceil(spread * (N+1)) + margin; the spread factor bounds how far the
/// symbol pushes Taylor mass per column index.
int recommended_eval_order(int order, double spread);

/// psi/phi series must be given at the evaluation order; exactness of each
/// entry follows from the truncated Cauchy product's triangular dependency.
OperatorMatrix build_wco_matrix(const TruncatedSeries& psi, const TruncatedSeries& phi,
                                int order);
OperatorMatrix build_wco_matrix(const SymbolPair& symbols, int order, int evalOrder = -1);

/// Square section only; columns exact to order N. Used where both sides of
/// an identity are built directly from symbols (no matrix products).
ComplexMatrix build_wco_square(const TruncatedSeries& psi, const TruncatedSeries& phi);

/// The antilinear conjugation C = (coefficientwise conjugation) after the
/// unitary W_{k_p,sigma}; never materialized as one matrix.
struct AntilinearOperator {
    ConjugationSpec spec;
    OperatorMatrix u;
};

AntilinearOperator build_conjugation(const ConjugationSpec& spec, int order,
                                     int evalOrder = -1);

/// v of length order+1 -> exact coefficients 0..evalOrder of C v;
/// v of length evalOrder+1 -> coefficients 0..order (tail beyond evalOrder
/// neglected). Any other length is a dimension mismatch.
std::vector<Complex> apply_conjugation(const AntilinearOperator& c,
                                       const std::vector<Complex>& v);

struct ResidualReport {
    std::string name;
    double value = 0.0;
    int order = 0;
    double tailBound = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Pass threshold policy: max(1e-8, 10 * tailBound) unless the caller pins
/// an explicit tolerance (> 0).
double default_tolerance(double tailBound);

ResidualReport make_report(const std::string& name, double value, int order, double tailBound,
                           double tolerance);

/// Evaluation-edge diagnostic: largest l2 mass in the last rows of tall and
/// last columns of wide; the neglected tails of all products are of this
/// size times bounded factors.
double tail_estimate(const OperatorMatrix& op);

/// ||conj(u) u - I|| on the order-N section (C^2 = I).
ResidualReport involution_residual(const AntilinearOperator& c, double tolerance = 0.0);

/// ||conj(u t) - t^H conj(u)|| (CT = T*C rewritten in linear-matrix form).
ResidualReport cs_residual(const OperatorMatrix& t, const AntilinearOperator& c,
                           double tolerance = 0.0);

struct StructureResiduals {
    ResidualReport normal;
    ResidualReport hermitian;
    ResidualReport unitary;
};
StructureResiduals structure_residuals(const OperatorMatrix& t, double tolerance = 0.0);

/// ||t^H k_w - conj(psi(w)) k_{phi(w)}|| / ||k_w|| (W* K_w identity).
ResidualReport kernel_adjoint_check(const OperatorMatrix& t, const SymbolPair& symbols,
                                    Complex w, double tolerance = 0.0);
ResidualReport kernel_adjoint_check(const SymbolPair& symbols, Complex w, int order,
                                    double tolerance = 0.0);

/// |(C T K_a)(b) - <C K_a, T K_b>|: left side in closed scalar form, right
/// side through the truncated conjugation and a series inner product.
ResidualReport bilinear_cs_check(const AntilinearOperator& c, const SymbolPair& symbols,
                                 Complex a, Complex b, double tolerance = 0.0);
ResidualReport bilinear_cs_check(const SymbolPair& symbols, const ConjugationSpec& spec,
                                 Complex a, Complex b, int order, double tolerance = 0.0);

} // namespace wco
