#include "wco/matrix.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace wco {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0)
        throw std::invalid_argument("matrix: non-positive dimension");
    data_.assign(static_cast<size_t>(rows) * cols, Complex(0.0));
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::top_left(int n) const {
    if (n > rows_ || n > cols_)
        throw std::invalid_argument("matrix: block exceeds dimensions");
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = at(i, j);
    return m;
}

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix: product dimension mismatch");
    ComplexMatrix out(a.rows(), b.cols());
    // ikj order keeps the inner loop contiguous in both b and out.
    for (int i = 0; i < a.rows(); ++i) {
        Complex* dst = out.row(i);
        for (int k = 0; k < a.cols(); ++k) {
            const Complex aik = a.at(i, k);
            if (aik == Complex(0.0)) continue;
            const Complex* src = b.row(k);
            for (int j = 0; j < b.cols(); ++j) dst[j] += aik * src[j];
        }
    }
    return out;
}

ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix: sum dimension mismatch");
    ComplexMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

ComplexMatrix mat_sub(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix: difference dimension mismatch");
    ComplexMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

ComplexMatrix mat_scale(Complex s, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = s * a.at(i, j);
    return out;
}

ComplexMatrix mat_adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(j, i) = std::conj(a.at(i, j));
    return out;
}

ComplexMatrix mat_conj(const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = std::conj(a.at(i, j));
    return out;
}

std::vector<Complex> mat_vec(const ComplexMatrix& a, const std::vector<Complex>& v) {
    if (static_cast<int>(v.size()) != a.cols())
        throw std::invalid_argument("matrix: matrix-vector dimension mismatch");
    std::vector<Complex> out(static_cast<size_t>(a.rows()), Complex(0.0));
    for (int i = 0; i < a.rows(); ++i) {
        const Complex* src = a.row(i);
        Complex acc(0.0);
        for (int j = 0; j < a.cols(); ++j) acc += src[j] * v[static_cast<size_t>(j)];
        out[static_cast<size_t>(i)] = acc;
    }
    return out;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
}

double spectral_norm_estimate(const ComplexMatrix& a, std::uint64_t seed, int iterations) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::vector<Complex> v(static_cast<size_t>(a.cols()));
    for (Complex& c : v) c = Complex(unit(rng), unit(rng));
    const double n0 = vec_norm(v);
    if (n0 == 0.0) v[0] = 1.0;
    else
        for (Complex& c : v) c /= n0;
    const ComplexMatrix ah = mat_adjoint(a);
    double sigma = 0.0;
    for (int it = 0; it < iterations; ++it) {
        std::vector<Complex> w = mat_vec(a, v);
        sigma = vec_norm(w);
        if (sigma == 0.0) return 0.0;
        std::vector<Complex> u = mat_vec(ah, w);
        const double nu = vec_norm(u);
        if (nu == 0.0) return sigma;
        for (size_t i = 0; i < v.size(); ++i) v[i] = u[i] / nu;
    }
    return sigma;
}

double vec_norm(const std::vector<Complex>& v) {
    double s = 0.0;
    for (const Complex& c : v) s += std::norm(c);
    return std::sqrt(s);
}

std::vector<Complex> vec_conj(const std::vector<Complex>& v) {
    std::vector<Complex> out(v);
    for (Complex& c : out) c = std::conj(c);
    return out;
}

} // namespace wco
