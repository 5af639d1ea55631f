#include "wco/series.hpp"

#include <cmath>
#include <stdexcept>

namespace wco {

namespace {

constexpr double kZeroConstantTol = 1e-12;

void check_finite(const std::vector<Complex>& coeffs) {
    for (const Complex& c : coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("series: non-finite coefficient");
    }
}

void check_same_order(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (f.order() != g.order())
        throw std::invalid_argument("series: order mismatch");
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("series: empty coefficient list");
    check_finite(coeffs_);
}

TruncatedSeries::TruncatedSeries(int order, Complex fill) {
    if (order < 0)
        throw std::invalid_argument("series: negative order");
    coeffs_.assign(static_cast<size_t>(order) + 1, fill);
    check_finite(coeffs_);
}

TruncatedSeries TruncatedSeries::constant(Complex value, int order) {
    TruncatedSeries s(order, Complex(0.0));
    s.coeffs_[0] = value;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int degree, int order) {
    if (degree < 0 || degree > order)
        throw std::invalid_argument("series: monomial degree out of range");
    TruncatedSeries s(order, Complex(0.0));
    s.coeffs_[static_cast<size_t>(degree)] = 1.0;
    return s;
}

TruncatedSeries TruncatedSeries::geometric(Complex scale, Complex ratio, int order) {
    TruncatedSeries s(order, Complex(0.0));
    Complex cur = scale;
    for (int n = 0; n <= order; ++n) {
        s.coeffs_[static_cast<size_t>(n)] = cur;
        cur *= ratio;
    }
    check_finite(s.coeffs_);
    return s;
}

TruncatedSeries TruncatedSeries::resized(int order) const {
    if (order < 0)
        throw std::invalid_argument("series: negative order");
    std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0.0));
    const size_t keep = std::min(c.size(), coeffs_.size());
    for (size_t i = 0; i < keep; ++i) c[i] = coeffs_[i];
    return TruncatedSeries(std::move(c));
}

double TruncatedSeries::l2_norm() const {
    double s = 0.0;
    for (const Complex& c : coeffs_) s += std::norm(c);
    return std::sqrt(s);
}

double TruncatedSeries::max_coeff_abs() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g) {
    check_same_order(f, g);
    std::vector<Complex> out(f.coeffs());
    for (size_t i = 0; i < out.size(); ++i) out[i] += g.coeffs()[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_sub(const TruncatedSeries& f, const TruncatedSeries& g) {
    check_same_order(f, g);
    std::vector<Complex> out(f.coeffs());
    for (size_t i = 0; i < out.size(); ++i) out[i] -= g.coeffs()[i];
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_scale(Complex a, const TruncatedSeries& f) {
    std::vector<Complex> out(f.coeffs());
    for (Complex& c : out) c *= a;
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    check_same_order(f, g);
    const int n = f.order();
    const Complex* a = f.coeffs().data();
    const Complex* b = g.coeffs().data();
    std::vector<Complex> out(static_cast<size_t>(n) + 1, Complex(0.0));
    for (int i = 0; i <= n; ++i) {
        const Complex ai = a[i];
        if (ai == Complex(0.0)) continue;
        Complex* dst = out.data() + i;
        for (int j = 0; j + i <= n; ++j) dst[j] += ai * b[j];
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_inv(const TruncatedSeries& f) {
    const int n = f.order();
    const Complex f0 = f.coeff(0);
    if (std::abs(f0) <= kZeroConstantTol)
        throw std::invalid_argument("series: reciprocal of series with vanishing constant term");
    std::vector<Complex> out(static_cast<size_t>(n) + 1, Complex(0.0));
    out[0] = 1.0 / f0;
    for (int k = 1; k <= n; ++k) {
        Complex acc(0.0);
        for (int j = 1; j <= k; ++j) acc += f.coeff(j) * out[static_cast<size_t>(k - j)];
        out[static_cast<size_t>(k)] = -acc / f0;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_div(const TruncatedSeries& f, const TruncatedSeries& g) {
    return series_mul(f, series_inv(g));
}

TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& phi) {
    check_same_order(f, phi);
    const int n = f.order();
    // Horner over the outer coefficients.
    TruncatedSeries acc = TruncatedSeries::constant(f.coeff(n), n);
    for (int k = n - 1; k >= 0; --k) {
        acc = series_mul(acc, phi);
        acc.set_coeff(0, acc.coeff(0) + f.coeff(k));
    }
    return acc;
}

TruncatedSeries series_pow(const TruncatedSeries& f, int n) {
    if (n < 0)
        throw std::invalid_argument("series: negative power");
    TruncatedSeries acc = TruncatedSeries::constant(1.0, f.order());
    for (int k = 0; k < n; ++k) acc = series_mul(acc, f);
    return acc;
}

Complex series_evaluate(const TruncatedSeries& f, Complex z) {
    if (std::abs(z) > 1.0 + 1e-12)
        throw std::invalid_argument("series: evaluation point outside the closed disk");
    Complex acc = f.coeff(f.order());
    for (int k = f.order() - 1; k >= 0; --k) acc = acc * z + f.coeff(k);
    return acc;
}

Complex series_inner(const TruncatedSeries& f, const TruncatedSeries& g) {
    check_same_order(f, g);
    Complex acc(0.0);
    for (int n = 0; n <= f.order(); ++n) acc += f.coeff(n) * std::conj(g.coeff(n));
    return acc;
}

TruncatedSeries series_exp(const TruncatedSeries& f) {
    const int n = f.order();
    std::vector<Complex> out(static_cast<size_t>(n) + 1, Complex(0.0));
    out[0] = std::exp(f.coeff(0));
    for (int k = 1; k <= n; ++k) {
        Complex acc(0.0);
        for (int j = 1; j <= k; ++j)
            acc += static_cast<double>(j) * f.coeff(j) * out[static_cast<size_t>(k - j)];
        out[static_cast<size_t>(k)] = acc / static_cast<double>(k);
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_log(const TruncatedSeries& f) {
    const int n = f.order();
    const Complex f0 = f.coeff(0);
    if (std::abs(f0) <= kZeroConstantTol)
        throw std::invalid_argument("series: log of series with vanishing constant term");
    std::vector<Complex> out(static_cast<size_t>(n) + 1, Complex(0.0));
    out[0] = std::log(f0);
    for (int k = 1; k <= n; ++k) {
        Complex acc(0.0);
        for (int j = 1; j < k; ++j)
            acc += static_cast<double>(j) * out[static_cast<size_t>(j)] * f.coeff(k - j);
        out[static_cast<size_t>(k)] = (f.coeff(k) - acc / static_cast<double>(k)) / f0;
    }
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_conj_coeffs(const TruncatedSeries& f) {
    std::vector<Complex> out(f.coeffs());
    for (Complex& c : out) c = std::conj(c);
    return TruncatedSeries(std::move(out));
}

TruncatedSeries series_sin(const TruncatedSeries& f) {
    const Complex i(0.0, 1.0);
    TruncatedSeries a = series_exp(series_scale(i, f));
    TruncatedSeries b = series_exp(series_scale(-i, f));
    return series_scale(1.0 / (2.0 * i), series_sub(a, b));
}

TruncatedSeries series_cos(const TruncatedSeries& f) {
    const Complex i(0.0, 1.0);
    TruncatedSeries a = series_exp(series_scale(i, f));
    TruncatedSeries b = series_exp(series_scale(-i, f));
    return series_scale(0.5, series_add(a, b));
}

} // namespace wco
