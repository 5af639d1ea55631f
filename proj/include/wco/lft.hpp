#pragma once

#include <vector>

#include "wco/series.hpp"

namespace wco {

enum class PointLocation { Interior, Boundary, Exterior };

struct FixedPoint {
    Complex value;
    PointLocation location;
};

/// z -> (a z + b) / (c z + d), ad - bc != 0. Stored normalized so the
/// largest-modulus coefficient equals exactly 1 (division by that complex
/// coefficient), making coefficientwise comparison meaningful.
class LinearFractionalMap {
  public:
    LinearFractionalMap(Complex a, Complex b, Complex c, Complex d);

    static LinearFractionalMap identity();
    /// The involutive disk automorphism (p - z) / (1 - conj(p) z).
    static LinearFractionalMap alpha(Complex p);
    /// lambda * (p - z) / (1 - conj(p) z).
    static LinearFractionalMap sigma(Complex p, Complex lambda);
    /// z -> w * z.
    static LinearFractionalMap dilation(Complex w);
    /// The kernel K_w = 1 / (1 - conj(w) z) as a map.
    static LinearFractionalMap kernel(Complex w);
    /// Reciprocal-linear map s / (d0 + d1 z); requires the pole outside the
    /// closed disk only when serialized.
    static LinearFractionalMap reciprocal_linear(Complex s, Complex d0, Complex d1);

    Complex a() const { return a_; }
    Complex b() const { return b_; }
    Complex c() const { return c_; }
    Complex d() const { return d_; }
    Complex det() const { return a_ * d_ - b_ * c_; }

    Complex apply(Complex z) const;
    bool is_identity(double tol = 1e-12) const;

    /// Upper bound on the boundary angular stretch sup_{|z|=1}|phi'|,
    /// |det| / (|d|-|c|)^2; drives the internal evaluation-order margin.
    double spread_factor() const;

  private:
    Complex a_, b_, c_, d_;
};

LinearFractionalMap lft_compose(const LinearFractionalMap& m1, const LinearFractionalMap& m2);

/// Closed self-map criterion |b conj(d) - a conj(c)| + |ad - bc| <= |d|^2 - |c|^2,
/// cross-checked by dense boundary sampling.
bool lft_is_disk_selfmap(const LinearFractionalMap& m);

/// Roots of c z^2 + (d - a) z - b = 0 tagged by location; a root at infinity
/// is omitted. Throws for the identity map.
std::vector<FixedPoint> lft_fixed_points(const LinearFractionalMap& m);

/// Geometric expansion; requires the pole -d/c strictly outside the closed disk.
TruncatedSeries lft_to_series(const LinearFractionalMap& m, int order);

/// The Cowen adjoint map (conj(a) z - conj(c)) / (-conj(b) z + conj(d)).
LinearFractionalMap cross_adjoint(const LinearFractionalMap& m);

/// Coefficientwise equality of normalized forms.
bool lft_approx_equal(const LinearFractionalMap& m1, const LinearFractionalMap& m2,
                      double tol = 1e-9);

} // namespace wco
