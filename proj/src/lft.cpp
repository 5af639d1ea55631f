#include "wco/lft.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wco {

namespace {

constexpr double kDegenerateTol = 1e-12;
// Quadratic fixed-point roots are accurate only to ~sqrt(eps) when the two
// roots nearly coalesce on the circle (near-parabolic maps), so the
// boundary classification band must sit well above that.
constexpr double kBoundaryBand = 1e-6;
constexpr int kBoundarySamples = 1024;

} // namespace

LinearFractionalMap::LinearFractionalMap(Complex a, Complex b, Complex c, Complex d)
    : a_(a), b_(b), c_(c), d_(d) {
    const double m = std::max(std::max(std::abs(a_), std::abs(b_)),
                              std::max(std::abs(c_), std::abs(d_)));
    if (!(m > 0.0) || !std::isfinite(m))
        throw std::invalid_argument("lft: invalid coefficients");
    Complex pivot = a_;
    double best = std::abs(a_);
    for (Complex cand : {b_, c_, d_}) {
        if (std::abs(cand) > best) {
            best = std::abs(cand);
            pivot = cand;
        }
    }
    a_ /= pivot;
    b_ /= pivot;
    c_ /= pivot;
    d_ /= pivot;
    if (std::abs(det()) <= kDegenerateTol)
        throw std::invalid_argument("lft: degenerate map (ad - bc ~ 0)");
}

LinearFractionalMap LinearFractionalMap::identity() { return {1.0, 0.0, 0.0, 1.0}; }

LinearFractionalMap LinearFractionalMap::alpha(Complex p) {
    if (std::abs(p) >= 1.0)
        throw std::invalid_argument("lft: alpha_p requires |p| < 1");
    return {-1.0, p, -std::conj(p), 1.0};
}

LinearFractionalMap LinearFractionalMap::sigma(Complex p, Complex lambda) {
    if (std::abs(p) >= 1.0)
        throw std::invalid_argument("lft: sigma requires |p| < 1");
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12)
        throw std::invalid_argument("lft: sigma requires |lambda| = 1");
    return {-lambda, lambda * p, -std::conj(p), 1.0};
}

LinearFractionalMap LinearFractionalMap::dilation(Complex w) { return {w, 0.0, 0.0, 1.0}; }

LinearFractionalMap LinearFractionalMap::kernel(Complex w) {
    if (std::abs(w) >= 1.0)
        throw std::invalid_argument("lft: kernel K_w requires |w| < 1");
    return {0.0, 1.0, -std::conj(w), 1.0};
}

LinearFractionalMap LinearFractionalMap::reciprocal_linear(Complex s, Complex d0, Complex d1) {
    return {0.0, s, d1, d0};
}

Complex LinearFractionalMap::apply(Complex z) const { return (a_ * z + b_) / (c_ * z + d_); }

bool LinearFractionalMap::is_identity(double tol) const {
    return std::abs(b_) <= tol && std::abs(c_) <= tol && std::abs(a_ - d_) <= tol;
}

double LinearFractionalMap::spread_factor() const {
    const double margin = std::abs(d_) - std::abs(c_);
    if (margin <= 1e-9) return 64.0;
    return std::max(1.0, std::abs(det()) / (margin * margin));
}

LinearFractionalMap lft_compose(const LinearFractionalMap& m1, const LinearFractionalMap& m2) {
    // 2x2 coefficient-matrix product.
    return {m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(),
            m1.c() * m2.a() + m1.d() * m2.c(), m1.c() * m2.b() + m1.d() * m2.d()};
}

bool lft_is_disk_selfmap(const LinearFractionalMap& m) {
    const double lhs =
        std::abs(m.b() * std::conj(m.d()) - m.a() * std::conj(m.c())) + std::abs(m.det());
    const double rhs = std::norm(m.d()) - std::norm(m.c());
    if (!(lhs <= rhs + 1e-10)) return false;
    for (int k = 0; k < kBoundarySamples; ++k) {
        const double t = 2.0 * M_PI * k / kBoundarySamples;
        if (std::abs(m.apply(Complex(std::cos(t), std::sin(t)))) > 1.0 + 1e-8) return false;
    }
    return true;
}

std::vector<FixedPoint> lft_fixed_points(const LinearFractionalMap& m) {
    if (m.is_identity())
        throw std::invalid_argument("lft: fixed points of the identity map");
    const Complex qa = m.c();
    const Complex qb = m.d() - m.a();
    const Complex qc = -m.b();
    std::vector<Complex> roots;
    if (std::abs(qa) <= kDegenerateTol) {
        if (std::abs(qb) > kDegenerateTol) roots.push_back(-qc / qb);
    } else {
        // Numerically stable quadratic roots.
        const Complex disc = std::sqrt(qb * qb - 4.0 * qa * qc);
        const Complex q = (std::real(std::conj(qb) * disc) >= 0.0) ? -0.5 * (qb + disc)
                                                                   : -0.5 * (qb - disc);
        if (std::abs(q) > kDegenerateTol) {
            roots.push_back(q / qa);
            if (std::abs(qc) > 0.0) roots.push_back(qc / q);
            else roots.push_back(Complex(0.0));
        } else {
            roots.push_back(Complex(0.0));
            roots.push_back(-qb / qa);
        }
        if (roots.size() == 2 && std::abs(roots[0] - roots[1]) <= 1e-14) roots.pop_back();
    }
    std::vector<FixedPoint> out;
    for (Complex r : roots) {
        const double mod = std::abs(r);
        PointLocation loc = PointLocation::Boundary;
        if (mod < 1.0 - kBoundaryBand) loc = PointLocation::Interior;
        else if (mod > 1.0 + kBoundaryBand) loc = PointLocation::Exterior;
        out.push_back({r, loc});
    }
    return out;
}

TruncatedSeries lft_to_series(const LinearFractionalMap& m, int order) {
    if (std::abs(m.c()) <= 1e-14) {
        TruncatedSeries s(order, Complex(0.0));
        s.set_coeff(0, m.b() / m.d());
        if (order >= 1) s.set_coeff(1, m.a() / m.d());
        return s;
    }
    if (!(std::abs(m.d() / m.c()) >= 1.0 + 1e-9))
        throw std::invalid_argument("lft: pole on or inside the closed disk");
    // (az + b)/(cz + d) = (az + b)/d * sum_n (-c/d)^n z^n
    const Complex r = -m.c() / m.d();
    TruncatedSeries s(order, Complex(0.0));
    Complex geo = 1.0 / m.d();
    Complex prev(0.0);
    for (int n = 0; n <= order; ++n) {
        s.set_coeff(n, m.b() * geo + m.a() * prev);
        prev = geo;
        geo *= r;
    }
    return s;
}

LinearFractionalMap cross_adjoint(const LinearFractionalMap& m) {
    return {std::conj(m.a()), -std::conj(m.c()), -std::conj(m.b()), std::conj(m.d())};
}

bool lft_approx_equal(const LinearFractionalMap& m1, const LinearFractionalMap& m2, double tol) {
    // Coefficients are only defined up to a common scalar; the stored
    // normalization can still tie-break differently (e.g. |a| = |d| for
    // automorphisms), so align by the unimodular ratio at the largest entry.
    const Complex v1[4] = {m1.a(), m1.b(), m1.c(), m1.d()};
    const Complex v2[4] = {m2.a(), m2.b(), m2.c(), m2.d()};
    int k = 0;
    for (int i = 1; i < 4; ++i)
        if (std::abs(v1[i]) > std::abs(v1[k])) k = i;
    if (std::abs(v2[k]) <= tol) return false;
    Complex mu = v1[k] / v2[k];
    if (std::abs(std::abs(mu) - 1.0) > tol) return false;
    for (int i = 0; i < 4; ++i)
        if (std::abs(v1[i] - mu * v2[i]) > tol) return false;
    return true;
}

} // namespace wco
