#include "wco/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wco {

namespace {

constexpr int kEvalMargin = 128;
constexpr double kSpreadCap = 12.0;
constexpr int kEdgeRows = 32;
constexpr double kKernelPointLimit = 0.6;

double resolve_tolerance(double requested, double tailBound) {
    return requested > 0.0 ? requested : default_tolerance(tailBound);
}

} // namespace

int recommended_eval_order(int order, double spread) {
    if (order < 0)
        throw std::invalid_argument("operators: negative order");
    const double s = std::clamp(spread, 1.0, kSpreadCap);
    return static_cast<int>(std::ceil(s * (order + 1))) + kEvalMargin;
}

OperatorMatrix build_wco_matrix(const TruncatedSeries& psi, const TruncatedSeries& phi,
                                int order) {
    const int ne = psi.order();
    if (phi.order() != ne)
        throw std::invalid_argument("operators: symbol order mismatch");
    if (order < 0 || ne < order + kEvalMargin / 2)
        throw std::invalid_argument("operators: evaluation order too small for section size");
    OperatorMatrix op{order, ne, ComplexMatrix(ne + 1, order + 1),
                      ComplexMatrix(order + 1, ne + 1)};
    // tall: full-depth columns for j <= N.
    TruncatedSeries col = psi;
    for (int j = 0; j <= order; ++j) {
        for (int i = 0; i <= ne; ++i) op.tall.at(i, j) = col.coeff(i);
        if (j < order) col = series_mul(col, phi);
    }
    // wide: rows <= N of columns j <= Ne; the truncated product's triangular
    // dependency keeps these entries exact at working order N.
    TruncatedSeries colN = psi.resized(order);
    const TruncatedSeries phiN = phi.resized(order);
    for (int j = 0; j <= ne; ++j) {
        for (int i = 0; i <= order; ++i) op.wide.at(i, j) = colN.coeff(i);
        if (j < ne) colN = series_mul(colN, phiN);
    }
    return op;
}

OperatorMatrix build_wco_matrix(const SymbolPair& symbols, int order, int evalOrder) {
    const int ne =
        evalOrder >= 0 ? evalOrder : recommended_eval_order(order, symbols.phi.spread_factor());
    return build_wco_matrix(symbols.psi_series(ne), symbols.phi_series(ne), order);
}

ComplexMatrix build_wco_square(const TruncatedSeries& psi, const TruncatedSeries& phi) {
    if (psi.order() != phi.order())
        throw std::invalid_argument("operators: symbol order mismatch");
    const int n = psi.order();
    ComplexMatrix m(n + 1, n + 1);
    TruncatedSeries col = psi;
    for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= n; ++i) m.at(i, j) = col.coeff(i);
        if (j < n) col = series_mul(col, phi);
    }
    return m;
}

AntilinearOperator build_conjugation(const ConjugationSpec& spec, int order, int evalOrder) {
    const int ne =
        evalOrder >= 0 ? evalOrder : recommended_eval_order(order, spec.spread_factor());
    const TruncatedSeries psi = spec.weight_series(ne);
    const TruncatedSeries phi = lft_to_series(spec.sigma_map(), ne);
    return {spec, build_wco_matrix(psi, phi, order)};
}

std::vector<Complex> apply_conjugation(const AntilinearOperator& c,
                                       const std::vector<Complex>& v) {
    const int n = static_cast<int>(v.size()) - 1;
    if (n == c.u.order) return vec_conj(mat_vec(c.u.tall, v));
    if (n == c.u.evalOrder) return vec_conj(mat_vec(c.u.wide, v));
    throw std::invalid_argument("operators: conjugation dimension mismatch");
}

double default_tolerance(double tailBound) { return std::max(1e-8, 10.0 * tailBound); }

ResidualReport make_report(const std::string& name, double value, int order, double tailBound,
                           double tolerance) {
    return {name, value, order, tailBound, tolerance, value <= tolerance};
}

double tail_estimate(const OperatorMatrix& op) {
    const int ne = op.evalOrder;
    const int lo = std::max(0, ne - kEdgeRows + 1);
    double worst = 0.0;
    for (int j = 0; j <= op.order; ++j) {
        double s = 0.0;
        for (int i = lo; i <= ne; ++i) s += std::norm(op.tall.at(i, j));
        worst = std::max(worst, s);
    }
    for (int i = 0; i <= op.order; ++i) {
        double s = 0.0;
        for (int j = lo; j <= ne; ++j) s += std::norm(op.wide.at(i, j));
        worst = std::max(worst, s);
    }
    return std::sqrt(worst);
}

ResidualReport involution_residual(const AntilinearOperator& c, double tolerance) {
    const ComplexMatrix d = mat_sub(mat_mul(mat_conj(c.u.wide), c.u.tall),
                                    ComplexMatrix::identity(c.u.order + 1));
    const double tail = tail_estimate(c.u);
    const double tol = resolve_tolerance(tolerance, tail);
    return make_report("involution", spectral_norm_estimate(d), c.u.order, tail, tol);
}

ResidualReport cs_residual(const OperatorMatrix& t, const AntilinearOperator& c,
                           double tolerance) {
    if (t.order != c.u.order || t.evalOrder != c.u.evalOrder)
        throw std::invalid_argument("operators: cs residual order mismatch");
    const ComplexMatrix left = mat_conj(mat_mul(c.u.wide, t.tall));
    const ComplexMatrix right = mat_mul(mat_adjoint(t.tall), mat_conj(c.u.tall));
    const double tail = std::max(tail_estimate(t), tail_estimate(c.u));
    const double tol = resolve_tolerance(tolerance, tail);
    return make_report("cs", spectral_norm_estimate(mat_sub(left, right)), t.order, tail, tol);
}

StructureResiduals structure_residuals(const OperatorMatrix& t, double tolerance) {
    const double tail = tail_estimate(t);
    const double tol = resolve_tolerance(tolerance, tail);
    const ComplexMatrix tht = mat_mul(mat_adjoint(t.tall), t.tall);
    const ComplexMatrix tth = mat_mul(t.wide, mat_adjoint(t.wide));
    const ComplexMatrix sq = t.square();
    const ComplexMatrix eye = ComplexMatrix::identity(t.order + 1);
    StructureResiduals out{
        make_report("normal", spectral_norm_estimate(mat_sub(tht, tth)), t.order, tail, tol),
        make_report("hermitian", spectral_norm_estimate(mat_sub(sq, mat_adjoint(sq))), t.order,
                    tail, tol),
        make_report("unitary", spectral_norm_estimate(mat_sub(tht, eye)), t.order, tail, tol)};
    return out;
}

ResidualReport kernel_adjoint_check(const OperatorMatrix& t, const SymbolPair& symbols,
                                    Complex w, double tolerance) {
    if (std::abs(w) > kKernelPointLimit + 1e-12)
        throw std::invalid_argument("operators: kernel point too large for configured order");
    const TruncatedSeries kw = TruncatedSeries::geometric(1.0, std::conj(w), t.evalOrder);
    std::vector<Complex> lhs = mat_vec(mat_adjoint(t.tall), kw.coeffs());
    const Complex scale = std::conj(symbols.psi.apply(w));
    const Complex fw = symbols.phi.apply(w);
    Complex geo = scale;
    for (int n = 0; n <= t.order; ++n) {
        lhs[static_cast<size_t>(n)] -= geo;
        geo *= std::conj(fw);
    }
    const double tail =
        std::pow(std::abs(w), t.evalOrder + 1) / (1.0 - std::abs(w)) + tail_estimate(t);
    const double tol = resolve_tolerance(tolerance, tail);
    return make_report("kernel-adjoint", vec_norm(lhs) / kw.l2_norm(), t.order, tail, tol);
}

ResidualReport kernel_adjoint_check(const SymbolPair& symbols, Complex w, int order,
                                    double tolerance) {
    return kernel_adjoint_check(build_wco_matrix(symbols, order), symbols, w, tolerance);
}

ResidualReport bilinear_cs_check(const AntilinearOperator& c, const SymbolPair& symbols,
                                 Complex a, Complex b, double tolerance) {
    if (std::abs(a) > kKernelPointLimit + 1e-12 || std::abs(b) > kKernelPointLimit + 1e-12)
        throw std::invalid_argument("operators: kernel point too large for configured order");
    const int n = c.u.order;
    const int ne = c.u.evalOrder;
    const Complex p = c.spec.p;
    const Complex bb = std::conj(b);
    const Complex s = c.spec.sigma_map().apply(bb);
    const Complex fs = symbols.phi.apply(s);
    if (std::abs(s) > 1.0 + 1e-10 || std::abs(fs) > 1.0 + 1e-10)
        throw std::invalid_argument("operators: evaluation point left the closed disk");
    const Complex kp = std::sqrt(1.0 - std::norm(p)) / (1.0 - std::conj(p) * bb);
    const Complex left = std::conj(kp * symbols.psi.apply(s) / (1.0 - std::conj(a) * fs));

    const TruncatedSeries ka = TruncatedSeries::geometric(1.0, std::conj(a), n);
    const TruncatedSeries cka(apply_conjugation(c, ka.coeffs()));
    // K_b o phi = 1 / (1 - conj(b) phi), coefficient-exact by the inverse
    // recurrence even when it degenerates to a constant (b = 0).
    TruncatedSeries kbDen = series_scale(-std::conj(b), symbols.phi_series(ne));
    kbDen.set_coeff(0, kbDen.coeff(0) + 1.0);
    const TruncatedSeries tkb = series_mul(symbols.psi_series(ne), series_inv(kbDen));
    const Complex right = series_inner(cka, tkb);

    const double tail = tail_estimate(c.u) + std::pow(kKernelPointLimit, n);
    const double tol = resolve_tolerance(tolerance, tail);
    return make_report("bilinear-cs", std::abs(left - right), n, tail, tol);
}

ResidualReport bilinear_cs_check(const SymbolPair& symbols, const ConjugationSpec& spec,
                                 Complex a, Complex b, int order, double tolerance) {
    return bilinear_cs_check(build_conjugation(spec, order), symbols, a, b, tolerance);
}

} // namespace wco
