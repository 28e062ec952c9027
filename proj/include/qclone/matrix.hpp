// Copyright 2026 The qclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qclone {

using Complex = std::complex<double>;

/// Thrown when a matrix does not describe a physical quantum state
/// (non-Hermitian, wrong trace, or a significantly negative eigenvalue).
class UnphysicalStateError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Dense complex matrix, row-major.
///
/// Sizes in this library never exceed 64x64, so there is no attempt at
/// blocking or sparse storage.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> diag);
    static ComplexMatrix diagonal(std::initializer_list<double> diag);
    static ComplexMatrix column(std::span<const Complex> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const Complex> entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix transpose() const;
    Complex trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    /// Largest |a_ij - b_ij|. Shapes must agree.
    double max_abs_diff(const ComplexMatrix &other) const;
    bool approx_equal(const ComplexMatrix &other, double tol = 1e-12) const;
    bool is_hermitian(double tol = 1e-10) const;

    std::string to_string(int precision = 6) const;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scale);

/// Kronecker product; entry (i*b.rows + j, k*b.cols + l) = a(i,k) * b(j,l).
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// Pauli matrix: 0 = identity, 1 = X, 2 = Y, 3 = Z.
const ComplexMatrix &pauli(int index);

/// Normalized state vector.
class PureState {
   public:
    /// Rejects vectors whose squared norm differs from 1 by more than 1e-12.
    explicit PureState(std::vector<Complex> amplitudes);

    /// Computational basis vector |index> of dimension dim.
    static PureState basis(std::size_t dim, std::size_t index);

    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    const Complex &operator[](std::size_t i) const { return amplitudes_[i]; }

    ComplexMatrix projector() const;

   private:
    std::vector<Complex> amplitudes_;
};

PureState tensor(const PureState &a, const PureState &b);

/// Hermitian, unit-trace, positive semidefinite matrix.
///
/// Construction validates all three properties; a DensityOperator that
/// exists is always physical.
class DensityOperator {
   public:
    static constexpr double kHermitianTol = 1e-10;
    static constexpr double kTraceTol = 1e-10;
    static constexpr double kEigenTol = 1e-10;

    explicit DensityOperator(ComplexMatrix m);
    explicit DensityOperator(const PureState &psi);

    static DensityOperator maximally_mixed(std::size_t dim);

    std::size_t dim() const { return m_.rows(); }
    const ComplexMatrix &matrix() const { return m_; }
    const Complex &operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

   private:
    ComplexMatrix m_;
};

struct HermitianEigen {
    /// Sorted descending.
    std::vector<double> values;
    /// Column k is the eigenvector of values[k].
    ComplexMatrix vectors;
};

/// Eigen-decomposition of a Hermitian matrix. Throws std::invalid_argument
/// if the input is not square or not Hermitian within 1e-10.
HermitianEigen eig_hermitian(const ComplexMatrix &m);

/// Principal square root of a Hermitian positive semidefinite matrix;
/// eigenvalues below zero (roundoff) are treated as zero.
ComplexMatrix sqrt_psd(const ComplexMatrix &m);

/// Reduced matrix over the subsystems listed in `keep` (ascending, unique,
/// nonempty). Kept subsystems appear in ascending order in the result.
ComplexMatrix partial_trace(const ComplexMatrix &m, std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> keep);
DensityOperator partial_trace(const DensityOperator &rho, std::span<const std::size_t> subsystem_dims,
                              std::span<const std::size_t> keep);

/// Shannon entropy (bits) of a probability vector; entries in [-1e-10, 0)
/// are treated as zero, anything more negative throws UnphysicalStateError.
double entropy_bits(std::span<const double> probabilities);

/// -sum lambda log2 lambda over the spectrum of rho.
double von_neumann_entropy(const DensityOperator &rho);

/// <psi|rho|psi>, clamped to [0, 1].
double fidelity_pure(const PureState &psi, const DensityOperator &rho);

}  // namespace qclone
