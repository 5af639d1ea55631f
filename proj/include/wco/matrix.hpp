#pragma once

#include <cstdint>
#include <vector>

#include "wco/series.hpp"

namespace wco {

/// Dense row-major complex matrix; sized for truncation orders <= a few
/// thousand, so quadratic storage and cubic products are acceptable.
class ComplexMatrix {
  public:
    ComplexMatrix(int rows, int cols);

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Complex& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    const Complex* row(int i) const { return data_.data() + static_cast<size_t>(i) * cols_; }
    Complex* row(int i) { return data_.data() + static_cast<size_t>(i) * cols_; }

    /// Top-left n x n block.
    ComplexMatrix top_left(int n) const;

  private:
    int rows_, cols_;
    std::vector<Complex> data_;
};

ComplexMatrix mat_mul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_sub(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix mat_scale(Complex s, const ComplexMatrix& a);
ComplexMatrix mat_adjoint(const ComplexMatrix& a);
ComplexMatrix mat_conj(const ComplexMatrix& a);

std::vector<Complex> mat_vec(const ComplexMatrix& a, const std::vector<Complex>& v);

double frobenius_norm(const ComplexMatrix& a);

/// Largest singular value by power iteration on a^H a, fixed seed and
/// iteration count so reports are deterministic.
double spectral_norm_estimate(const ComplexMatrix& a, std::uint64_t seed = 0x5eed5eedULL,
                              int iterations = 100);

double vec_norm(const std::vector<Complex>& v);
std::vector<Complex> vec_conj(const std::vector<Complex>& v);

} // namespace wco
