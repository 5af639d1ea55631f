#include "wco/symbols.hpp"

#include <cmath>
#include <stdexcept>

namespace wco {

namespace {

double wrap_angle(double t) {
    while (t > M_PI) t -= 2.0 * M_PI;
    while (t <= -M_PI) t += 2.0 * M_PI;
    return t;
}

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

} // namespace

ConjugationSpec::ConjugationSpec(Complex p_, Complex lambda_) : p(p_), lambda(lambda_) {
    require(std::abs(p) < 1.0, "conjugation: base point must satisfy |p| < 1");
    require(std::abs(std::abs(lambda) - 1.0) <= 1e-12, "conjugation: |lambda| = 1 required");
    // lambda p = conj(p) is deliberately not enforced here: it is the
    // certified property (the involution residual detects its failure), and
    // negative controls need to build the operator with a violating lambda.
}

bool ConjugationSpec::lemma_condition(double tol) const {
    return std::abs(lambda * p - std::conj(p)) <= tol;
}

TruncatedSeries RationalWeight::series(int order) const {
    if (std::abs(d0) <= 1e-12)
        throw std::invalid_argument("weight: vanishing constant denominator");
    if (std::abs(d1) > 1e-14 && std::abs(d0 / d1) < 1.0 + 1e-9)
        throw std::invalid_argument("weight: pole on or inside the closed disk");
    return TruncatedSeries::geometric(s / d0, -d1 / d0, order);
}

TruncatedSeries ConjugationSpec::weight_series(int order) const {
    const double scale = std::sqrt(1.0 - std::norm(p));
    return TruncatedSeries::geometric(scale, std::conj(p), order);
}

Complex solve_conjugation_lambda(Complex p) {
    require(std::abs(p) < 1.0, "conjugation: |p| < 1 required");
    if (std::abs(p) <= 1e-14) return Complex(1.0);
    Complex lambda = std::conj(p) / p;
    return lambda / std::abs(lambda);
}

std::vector<Complex> solve_boundary_basepoint(Complex b1, double r) {
    require(std::abs(std::abs(b1) - 1.0) <= 1e-10, "basepoint: |b1| = 1 required");
    require(r > 0.0 && r < 1.0, "basepoint: radius in (0,1) required");
    const double target = std::arg(b1);
    auto defect = [&](double theta) {
        // b1 = exp(2i arg(r - e^{-i theta})) at a solution.
        return wrap_angle(target - 2.0 * std::arg(r - std::exp(Complex(0.0, -theta))));
    };
    auto residual = [&](Complex p) {
        return std::abs(b1 * p * (std::conj(p) - 1.0) + std::conj(p) * (1.0 - p));
    };
    const int grid = 4096;
    std::vector<Complex> out;
    double prevTheta = 0.0;
    double prevVal = defect(0.0);
    for (int k = 1; k <= grid; ++k) {
        const double theta = 2.0 * M_PI * k / grid;
        const double val = defect(theta);
        const bool crossing = (prevVal == 0.0) || (prevVal * val < 0.0);
        if (crossing && std::abs(val - prevVal) < M_PI) {
            double lo = prevTheta, hi = theta, flo = prevVal;
            for (int it = 0; it < 80; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = defect(mid);
                if (flo * fm <= 0.0) hi = mid;
                else { lo = mid; flo = fm; }
            }
            const Complex p = r * std::exp(Complex(0.0, 0.5 * (lo + hi)));
            if (residual(p) <= 1e-10) {
                bool dup = false;
                for (Complex q : out) dup = dup || std::abs(q - p) <= 1e-8;
                if (!dup) out.push_back(p);
            }
        }
        prevTheta = theta;
        prevVal = val;
    }
    require(!out.empty(), "basepoint: no solution found within tolerance");
    return out;
}

SymbolPair make_cs_family(const CsFamilyParams& params) {
    const Complex p = params.p, lambda = params.lambda, a0 = params.a0, a1 = params.a1;
    require(std::abs(p) < 1.0, "cs-family: |p| < 1 required");
    require(std::abs(std::abs(lambda) - 1.0) <= 1e-12, "cs-family: |lambda| = 1 required");
    require(std::abs(lambda * p - std::conj(p)) <= 1e-12, "cs-family: lambda p = conj(p) required");
    require(std::abs(params.cWeight) > 0.0, "cs-family: c != 0 required");
    const Complex lb = std::conj(lambda);
    const Complex den0 = 1.0 - a0 * p;  // constant denominator term
    const Complex den1 = p - lb * a0;   // z-coefficient (with minus sign in front)
    require(std::abs(den0) > 1e-12, "cs-family: degenerate denominator");
    RationalWeight psi{params.cWeight, den0, -den1};
    if (std::abs(den1) > 1e-14)
        require(std::abs(den0 / den1) >= 1.0 + 1e-9, "cs-family: weight pole inside the closed disk");
    // phi over the common denominator den0 - den1 z.
    LinearFractionalMap phi(-a0 * den1 - a1 * lb, a0 * den0 + a1 * p, -den1, den0);
    require(lft_is_disk_selfmap(phi), "cs-family: phi is not a selfmap of the disk");
    return {psi, phi};
}

UnitaryFamily make_unitary_family(Complex q, Complex mu1, Complex mu2) {
    require(std::abs(q) < 1.0, "unitary-family: |q| < 1 required");
    require(std::abs(std::abs(mu1) - 1.0) <= 1e-12, "unitary-family: |mu1| = 1 required");
    require(std::abs(std::abs(mu2) - 1.0) <= 1e-12, "unitary-family: |mu2| = 1 required");
    const double scale = std::sqrt(1.0 - std::norm(q));
    RationalWeight psi{mu2 * scale, 1.0, -std::conj(q)};
    LinearFractionalMap phi(-mu1, mu1 * q, -std::conj(q), 1.0);
    ConjugationSpec spec(std::conj(q), solve_conjugation_lambda(std::conj(q)));
    return {{psi, phi}, spec};
}

HermitianFamily make_hermitian_family(Complex b0, double b1, double b2) {
    require(std::abs(b0) < 1.0, "hermitian-family: |b0| < 1 required");
    require(std::isfinite(b1) && std::isfinite(b2), "hermitian-family: real b1, b2 required");
    const Complex cb0 = std::conj(b0);
    // phi = b0 + b1 z / (1 - conj(b0) z) = ((b1 - b0 conj(b0)) z + b0) / (1 - conj(b0) z)
    LinearFractionalMap phi(b1 - b0 * cb0, b0, -cb0, 1.0);
    require(lft_is_disk_selfmap(phi), "hermitian-family: phi is not a selfmap of the disk");
    RationalWeight psi{b2, 1.0, -cb0};
    // Rotation parameter rot with rot conj(b0) + b0 = 0; free at b0 = 0,
    // fixed to 1. The conjugation carries rot directly as the sigma factor,
    // so sigma(z) = rot (0 - z) = (b0/conj(b0)) z.
    const Complex rot = (std::abs(b0) <= 1e-14) ? Complex(1.0) : -b0 / cb0;
    ConjugationSpec spec(Complex(0.0), rot);
    return {{psi, phi}, spec, rot};
}

NormalInteriorFamily make_normal_interior_family(Complex p, Complex gamma, Complex delta) {
    require(std::abs(p) < 1.0, "normal-interior: |p| < 1 required");
    require(std::abs(delta) <= 1.0, "normal-interior: |delta| <= 1 required");
    require(std::abs(gamma) > 0.0, "normal-interior: gamma != 0 required");
    LinearFractionalMap alpha = LinearFractionalMap::alpha(p);
    LinearFractionalMap inner(-delta, delta * p, -std::conj(p), 1.0); // delta * alpha_p
    LinearFractionalMap phi = lft_compose(alpha, inner);
    // psi = gamma K_p / (K_p o phi) = gamma (1-|p|^2) / (1 - delta|p|^2 + (delta-1) conj(p) z)
    const Complex pc = std::conj(p);
    RationalWeight psi{gamma * (1.0 - std::norm(p)), 1.0 - delta * std::norm(p),
                       (delta - 1.0) * pc};
    const Complex q = (p - pc) / (p * p - 1.0);
    require(std::abs(q) < 1.0, "normal-interior: conjugation base point |q| >= 1");
    ConjugationSpec spec(q, solve_conjugation_lambda(q));
    return {{psi, phi}, spec, q};
}

BoundaryNormalFamily make_boundary_normal_family(Complex a, Complex b, Complex c, Complex d,
                                                 double basepointRadius) {
    require(std::abs(d) > 1e-12, "boundary-normal: d != 0 required");
    LinearFractionalMap phi(a, b, c, d);
    require(std::abs(std::abs(b) - std::abs(c)) <= 1e-10 * std::abs(d),
            "boundary-normal: lemma-bc-|b|=|c| violated");
    require(lft_is_disk_selfmap(phi), "boundary-normal: phi is not a selfmap of the disk");
    require(std::abs(c) > 1e-12, "boundary-normal: degenerate b = c = 0 subcase rejected");
    Complex eta(0.0);
    bool found = false;
    for (const FixedPoint& fp : lft_fixed_points(phi)) {
        if (fp.location == PointLocation::Boundary) {
            eta = fp.value / std::abs(fp.value);
            found = true;
            break;
        }
    }
    require(found, "boundary-normal: no boundary fixed point");
    // psi = K_{phi*(0)}, phi*(0) = -conj(c)/conj(d), so conj(w) = -c/d.
    const Complex w = -std::conj(c) / std::conj(d);
    require(std::abs(w) < 1.0, "boundary-normal: weight kernel point outside the disk");
    RationalWeight psi{1.0, 1.0, c / d};
    // Base point for the eta-normalized map phi1(z) = conj(eta) phi(eta z).
    const Complex b1 = b * std::conj(eta) * std::conj(eta) / c;
    std::vector<Complex> sols = solve_boundary_basepoint(b1 / std::abs(b1), basepointRadius);
    const Complex p1 = sols.front();
    const Complex base = p1 * std::conj(eta);
    ConjugationSpec spec(base, solve_conjugation_lambda(base));
    return {{psi, phi}, spec, eta, base, p1};
}

LinearFractionalMap make_boundary_selfmap(Complex eta, Complex c) {
    require(std::abs(std::abs(eta) - 1.0) <= 1e-12, "boundary-selfmap: |eta| = 1 required");
    require(std::abs(c) > 1e-12 && std::abs(c) < 1.0, "boundary-selfmap: 0 < |c| < 1 required");
    eta /= std::abs(eta);
    const double r = std::abs(c);
    // With a = c eta + 1 - b conj(eta) and d = 1, multiplying the alignment
    // condition (a conj(b) - c) eta = t by eta gives
    //   conj(b) (c eta^2 + eta) - |b|^2 - c eta = t in [0, inf).
    const Complex w = c * eta * eta + eta;
    const double bigR = std::abs(w);
    const double rho = std::arg(w);
    const double sine = (c * eta).imag() / (r * bigR);
    require(std::abs(sine) <= 1.0, "boundary-selfmap: no aligned weight phase exists");
    const double beta = rho - std::asin(sine); // cos(rho - beta) >= 0 branch
    const Complex b = r * std::exp(Complex(0.0, beta));
    const Complex a = c * eta + 1.0 - b * std::conj(eta);
    const double t = r * bigR * std::cos(rho - beta) - r * r - (c * eta).real();
    require(t >= -1e-12, "boundary-selfmap: tangency defect is negative");
    return LinearFractionalMap(a, b, c, 1.0);
}

} // namespace wco
