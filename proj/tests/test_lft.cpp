#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "wco/lft.hpp"

using wco::Complex;
using wco::LinearFractionalMap;

namespace {

Complex random_disk(std::mt19937_64& rng, double radius) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (;;) {
        const Complex z(u(rng), u(rng));
        if (std::abs(z) <= 1.0) return radius * z;
    }
}

} // namespace

TEST_CASE("construction and normalization") {
    const LinearFractionalMap m(2.0, 4.0, 0.0, 2.0); // z + 2 scaled
    CHECK(std::abs(m.b() - Complex(1.0)) <= 1e-15);  // largest coefficient is b = 4
    CHECK_THROWS(LinearFractionalMap(1.0, 2.0, 2.0, 4.0)); // ad - bc = 0
}

TEST_CASE("composition") {
    std::mt19937_64 rng(21);
    const LinearFractionalMap id = LinearFractionalMap::identity();
    for (int t = 0; t < 10; ++t) {
        const Complex p = random_disk(rng, 0.7);
        const LinearFractionalMap a = LinearFractionalMap::alpha(p);
        CHECK(wco::lft_approx_equal(wco::lft_compose(id, a), a));
        // alpha_p is an involution.
        CHECK(wco::lft_compose(a, a).is_identity(1e-11));
    }

    // Pointwise agreement with nested evaluation, plus associativity.
    const LinearFractionalMap m1 = LinearFractionalMap::alpha(Complex(0.3, 0.1));
    const LinearFractionalMap m2(0.5, 0.2, 0.1, 1.0);
    const LinearFractionalMap m3 = LinearFractionalMap::dilation(Complex(0.0, 0.8));
    const LinearFractionalMap c12 = wco::lft_compose(m1, m2);
    for (int t = 0; t < 20; ++t) {
        const Complex z = random_disk(rng, 1.0);
        CHECK(std::abs(c12.apply(z) - m1.apply(m2.apply(z))) <= 1e-11);
    }
    CHECK(wco::lft_approx_equal(wco::lft_compose(c12, m3),
                                wco::lft_compose(m1, wco::lft_compose(m2, m3)), 1e-11));
}

TEST_CASE("cross-adjoint composition formula for a=d=1, b=c=0.2") {
    // phi*∘phi = ((|a|^2-|c|^2) z + b conj(a) - d conj(c)) /
    //            ((conj(d) c - conj(b) a) z + |d|^2 - |b|^2); here it is
    // (0.96 z + 0) / (0 z + 0.96) = z.
    const LinearFractionalMap phi(1.0, 0.2, 0.2, 1.0);
    const LinearFractionalMap comp = wco::lft_compose(wco::cross_adjoint(phi), phi);
    CHECK(comp.is_identity(1e-12));
}

TEST_CASE("disk self-map criterion") {
    CHECK(wco::lft_is_disk_selfmap(LinearFractionalMap(1.0, 0.0, 0.0, 2.0))); // z/2
    CHECK_FALSE(wco::lft_is_disk_selfmap(LinearFractionalMap(2.0, 0.0, 0.0, 1.0))); // 2z
    CHECK(wco::lft_is_disk_selfmap(LinearFractionalMap::alpha(Complex(0.5))));
    CHECK_FALSE(wco::lft_is_disk_selfmap(LinearFractionalMap(1.0, 2.0, 0.0, 1.0))); // z + 2
}

TEST_CASE("fixed points") {
    // z -> -z: single finite fixed point 0.
    const auto fp1 = wco::lft_fixed_points(LinearFractionalMap::dilation(Complex(-1.0)));
    REQUIRE(fp1.size() == 1);
    CHECK(std::abs(fp1[0].value) <= 1e-12);
    CHECK(fp1[0].location == wco::PointLocation::Interior);

    // z -> z/(2-z): roots of z^2 - z = 0.
    const auto fp2 = wco::lft_fixed_points(LinearFractionalMap(1.0, 0.0, -1.0, 2.0));
    REQUIRE(fp2.size() == 2);
    bool saw0 = false, saw1 = false;
    for (const auto& f : fp2) {
        if (std::abs(f.value) <= 1e-12) {
            saw0 = true;
            CHECK(f.location == wco::PointLocation::Interior);
        }
        if (std::abs(f.value - 1.0) <= 1e-12) {
            saw1 = true;
            CHECK(f.location == wco::PointLocation::Boundary);
        }
    }
    CHECK(saw0);
    CHECK(saw1);

    // alpha_p ∘ (delta alpha_p) fixes p.
    const Complex p(0.4, 0.0);
    const LinearFractionalMap alpha = LinearFractionalMap::alpha(p);
    const LinearFractionalMap inner(-0.5, 0.5 * p, -std::conj(p), 1.0);
    const LinearFractionalMap phi = wco::lft_compose(alpha, inner);
    bool sawP = false;
    for (const auto& f : wco::lft_fixed_points(phi)) sawP = sawP || std::abs(f.value - p) <= 1e-10;
    CHECK(sawP);
    CHECK(std::abs(phi.apply(p) - p) <= 1e-12);

    CHECK_THROWS(wco::lft_fixed_points(LinearFractionalMap::identity()));
}

TEST_CASE("series expansion") {
    const wco::TruncatedSeries id = wco::lft_to_series(LinearFractionalMap::identity(), 6);
    for (int n = 0; n <= 6; ++n) CHECK(id.coeff(n) == (n == 1 ? Complex(1.0) : Complex(0.0)));

    const wco::TruncatedSeries kw = wco::lft_to_series(LinearFractionalMap::kernel(0.5), 16);
    for (int n = 0; n <= 16; ++n) CHECK(std::abs(kw.coeff(n) - std::pow(0.5, n)) <= 1e-14);

    // sigma for p = 0.3+0.3i, lambda = conj(p)/p against long division of
    // lambda (p - z) by (1 - conj(p) z): quotient coefficients
    // q_0 = lambda p, q_n = lambda (p conj(p) - 1) conj(p)^{n-1} for n >= 1.
    const Complex p(0.3, 0.3);
    const Complex lambda = std::conj(p) / p / std::abs(std::conj(p) / p);
    const int n = 32;
    const wco::TruncatedSeries sig =
        wco::lft_to_series(LinearFractionalMap::sigma(p, lambda), n);
    CHECK(std::abs(sig.coeff(0) - lambda * p) <= 1e-14);
    Complex pw(1.0);
    for (int k = 1; k <= n; ++k) {
        CHECK(std::abs(sig.coeff(k) - lambda * (std::norm(p) - 1.0) * pw) <= 1e-14);
        pw *= std::conj(p);
    }

    // Pole inside the closed disk is rejected.
    CHECK_THROWS(wco::lft_to_series(LinearFractionalMap(0.1, 0.2, 1.0, 0.5), 8));
}

TEST_CASE("cross-adjoint coefficients and double application") {
    CHECK(wco::cross_adjoint(LinearFractionalMap::identity()).is_identity(1e-13));

    // a=d=1, b=c=0.2: phi* = (z - 0.2)/(-0.2 z + 1).
    const LinearFractionalMap star = wco::cross_adjoint(LinearFractionalMap(1.0, 0.2, 0.2, 1.0));
    CHECK(wco::lft_approx_equal(star, LinearFractionalMap(1.0, -0.2, -0.2, 1.0), 1e-12));

    std::mt19937_64 rng(22);
    for (int t = 0; t < 20; ++t) {
        const Complex p = random_disk(rng, 0.6);
        const Complex q = random_disk(rng, 0.4);
        const LinearFractionalMap m =
            wco::lft_compose(LinearFractionalMap::alpha(p), LinearFractionalMap::alpha(q));
        CHECK(wco::lft_approx_equal(wco::cross_adjoint(wco::cross_adjoint(m)), m, 1e-11));
    }
}

TEST_CASE("spread factor") {
    CHECK(LinearFractionalMap::dilation(Complex(0.0, 1.0)).spread_factor() ==
          doctest::Approx(1.0));
    // alpha_p: |det| = 1-|p|^2, (|d|-|c|)^2 = (1-|p|)^2, ratio (1+|p|)/(1-|p|).
    CHECK(LinearFractionalMap::alpha(Complex(0.5)).spread_factor() == doctest::Approx(3.0));
}
