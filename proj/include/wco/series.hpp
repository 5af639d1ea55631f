#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace wco {

using Complex = std::complex<double>;

/// Degree-N truncated Taylor series; coeffs[n] holds the z^n coefficient.
/// All arithmetic keeps the exactness ladder: output coefficient n depends
/// only on input coefficients 0..n.
class TruncatedSeries {
  public:
    TruncatedSeries() : coeffs_(1, Complex(0.0)) {}
    explicit TruncatedSeries(std::vector<Complex> coeffs);
    TruncatedSeries(int order, Complex fill);

    static TruncatedSeries constant(Complex value, int order);
    static TruncatedSeries monomial(int degree, int order);
    /// Geometric series sum_n (ratio^n) z^n scaled by `scale`.
    static TruncatedSeries geometric(Complex scale, Complex ratio, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(int n) const { return coeffs_[static_cast<size_t>(n)]; }
    void set_coeff(int n, Complex v) { coeffs_[static_cast<size_t>(n)] = v; }

    /// Truncate or zero-pad to a new order.
    TruncatedSeries resized(int order) const;

    double l2_norm() const;
    double max_coeff_abs() const;

  private:
    std::vector<Complex> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_scale(Complex a, const TruncatedSeries& f);

/// Cauchy product truncated to the shared order.
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// Reciprocal 1/f; requires |f(0)| above tolerance.
TruncatedSeries series_inv(const TruncatedSeries& f);
TruncatedSeries series_div(const TruncatedSeries& f, const TruncatedSeries& g);

/// f(phi(z)) truncated; phi(0) need not vanish, the caller owns the
/// self-map assertion and the associated tail error.
TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& phi);

/// Integer power by repeated multiplication.
TruncatedSeries series_pow(const TruncatedSeries& f, int n);

/// Horner evaluation of the truncated polynomial; rejects |z| > 1.
Complex series_evaluate(const TruncatedSeries& f, Complex z);

/// Coefficient inner product sum_n f_n * conj(g_n).
Complex series_inner(const TruncatedSeries& f, const TruncatedSeries& g);

/// exp by the differential recurrence g' = f' g, g_0 = exp(f_0).
TruncatedSeries series_exp(const TruncatedSeries& f);

/// Principal-branch log; inverse of the exp recurrence. Requires f(0) != 0.
TruncatedSeries series_log(const TruncatedSeries& f);

/// The coefficientwise conjugation (Jf)(z) = conj(f(conj(z))).
TruncatedSeries series_conj_coeffs(const TruncatedSeries& f);

TruncatedSeries series_sin(const TruncatedSeries& f);
TruncatedSeries series_cos(const TruncatedSeries& f);

} // namespace wco
