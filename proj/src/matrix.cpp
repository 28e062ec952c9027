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

#include "qclone/matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace qclone {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Complex{0.0, 0.0}) {
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument(
            "ComplexMatrix: " + std::to_string(entries_.size()) + " entries do not fill a " +
            std::to_string(rows_) + "x" + std::to_string(cols_) + " matrix");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged initializer list");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<double> diag) {
    return diagonal(std::span<const double>(diag.begin(), diag.size()));
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> entries) {
    return ComplexMatrix(entries.size(), 1, std::vector<Complex>(entries.begin(), entries.end()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out = *this;
    for (auto &z : out.entries_) {
        z = std::conj(z);
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw std::invalid_argument("trace of a non-square matrix");
    }
    Complex sum{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) {
        sum += (*this)(i, i);
    }
    return sum;
}

static void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream msg;
        msg << what << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
            << b.cols();
        throw std::invalid_argument(msg.str());
    }
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+=");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-=");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : entries_) {
        z *= scale;
    }
    return *this;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    require_same_shape(*this, other, "max_abs_diff");
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    }
    return worst;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix &other, double tol) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        return false;
    }
    return max_abs_diff(other) <= tol;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = r; c < cols_; ++c) {
            if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

std::string ComplexMatrix::to_string(int precision) const {
    std::ostringstream out;
    out << std::setprecision(precision);
    for (std::size_t r = 0; r < rows_; ++r) {
        out << "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            const Complex z = (*this)(r, c);
            out << (c ? ", " : "") << z.real();
            if (z.imag() != 0.0) {
                out << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
            }
        }
        out << "]\n";
    }
    return out.str();
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        std::ostringstream msg;
        msg << "matrix product: inner dimensions " << a.cols() << " and " << b.rows() << " differ";
        throw std::invalid_argument(msg.str());
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(Complex scale, ComplexMatrix m) {
    m *= scale;
    return m;
}

ComplexMatrix operator*(ComplexMatrix m, Complex scale) {
    m *= scale;
    return m;
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < b.rows(); ++j) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out(i * b.rows() + j, k * b.cols() + l) = aik * b(j, l);
                }
            }
        }
    }
    return out;
}

const ComplexMatrix &pauli(int index) {
    static const ComplexMatrix kPaulis[4] = {
        ComplexMatrix{{1.0, 0.0}, {0.0, 1.0}},
        ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}},
        ComplexMatrix{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}},
        ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}},
    };
    if (index < 0 || index > 3) {
        throw std::out_of_range("pauli index must be in [0, 3], got " + std::to_string(index));
    }
    return kPaulis[index];
}

// ---------------------------------------------------------------------------
// PureState

PureState::PureState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw std::invalid_argument("PureState: empty amplitude vector");
    }
    double norm2 = 0.0;
    for (const auto &z : amplitudes_) {
        norm2 += std::norm(z);
    }
    if (std::abs(norm2 - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << std::setprecision(17) << "PureState: squared norm " << norm2 << " is not 1";
        throw std::invalid_argument(msg.str());
    }
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw std::out_of_range("PureState::basis: index out of range");
    }
    std::vector<Complex> amps(dim, Complex{0.0, 0.0});
    amps[index] = 1.0;
    return PureState(std::move(amps));
}

ComplexMatrix PureState::projector() const {
    const std::size_t n = dim();
    ComplexMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out(r, c) = amplitudes_[r] * std::conj(amplitudes_[c]);
        }
    }
    return out;
}

PureState tensor(const PureState &a, const PureState &b) {
    std::vector<Complex> amps;
    amps.reserve(a.dim() * b.dim());
    for (const auto &x : a.amplitudes()) {
        for (const auto &y : b.amplitudes()) {
            amps.push_back(x * y);
        }
    }
    return PureState(std::move(amps));
}

// ---------------------------------------------------------------------------
// DensityOperator

DensityOperator::DensityOperator(ComplexMatrix m) : m_(std::move(m)) {
    if (!m_.is_square() || m_.rows() == 0) {
        throw UnphysicalStateError("density operator must be a nonempty square matrix");
    }
    if (!m_.is_hermitian(kHermitianTol)) {
        throw UnphysicalStateError("density operator is not Hermitian");
    }
    const Complex tr = m_.trace();
    if (std::abs(tr - Complex{1.0, 0.0}) > kTraceTol) {
        std::ostringstream msg;
        msg << std::setprecision(17) << "density operator trace " << tr.real() << " is not 1";
        throw UnphysicalStateError(msg.str());
    }
    const double smallest = eig_hermitian(m_).values.back();
    if (smallest < -kEigenTol) {
        std::ostringstream msg;
        msg << std::setprecision(17) << "density operator has negative eigenvalue " << smallest;
        throw UnphysicalStateError(msg.str());
    }
}

DensityOperator::DensityOperator(const PureState &psi) : DensityOperator(psi.projector()) {
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
    return DensityOperator(ComplexMatrix::identity(dim) * Complex{1.0 / static_cast<double>(dim), 0.0});
}

// ---------------------------------------------------------------------------
// Spectral routines

HermitianEigen eig_hermitian(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument("eig_hermitian: matrix is not square");
    }
    if (!m.is_hermitian(1e-10)) {
        throw std::invalid_argument("eig_hermitian: matrix is not Hermitian within 1e-10");
    }
    const auto n = static_cast<Eigen::Index>(m.rows());
    Eigen::MatrixXcd e(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            e(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(e);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eig_hermitian: eigensolver did not converge");
    }

    // Eigen returns ascending order.
    HermitianEigen out{std::vector<double>(static_cast<std::size_t>(n)), ComplexMatrix(m.rows(), m.cols())};
    for (Eigen::Index k = 0; k < n; ++k) {
        const Eigen::Index src = n - 1 - k;
        out.values[static_cast<std::size_t>(k)] = solver.eigenvalues()(src);
        for (Eigen::Index r = 0; r < n; ++r) {
            out.vectors(static_cast<std::size_t>(r), static_cast<std::size_t>(k)) = solver.eigenvectors()(r, src);
        }
    }
    return out;
}

ComplexMatrix sqrt_psd(const ComplexMatrix &m) {
    const HermitianEigen e = eig_hermitian(m);
    const std::size_t n = m.rows();
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double root = std::sqrt(std::max(e.values[k], 0.0));
        if (root == 0.0) {
            continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += root * e.vectors(r, k) * std::conj(e.vectors(c, k));
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, std::span<const std::size_t> subsystem_dims,
                            std::span<const std::size_t> keep) {
    if (subsystem_dims.empty() || keep.empty()) {
        throw std::invalid_argument("partial_trace: subsystem list and keep set must be nonempty");
    }
    std::size_t total = 1;
    for (std::size_t d : subsystem_dims) {
        if (d == 0) {
            throw std::invalid_argument("partial_trace: zero subsystem dimension");
        }
        total *= d;
    }
    if (!m.is_square() || m.rows() != total) {
        throw std::invalid_argument("partial_trace: subsystem dimensions multiply to " + std::to_string(total) +
                                    " but the matrix is " + std::to_string(m.rows()) + "x" +
                                    std::to_string(m.cols()));
    }
    std::vector<bool> kept(subsystem_dims.size(), false);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] >= subsystem_dims.size()) {
            throw std::invalid_argument("partial_trace: keep index " + std::to_string(keep[i]) + " out of range");
        }
        if (i > 0 && keep[i] <= keep[i - 1]) {
            throw std::invalid_argument("partial_trace: keep indices must be strictly ascending");
        }
        kept[keep[i]] = true;
    }

    // Split each full index into (kept index, traced index).
    std::vector<std::size_t> kept_of(total), traced_of(total);
    std::size_t kept_dim = 1;
    for (std::size_t s = 0; s < subsystem_dims.size(); ++s) {
        if (kept[s]) {
            kept_dim *= subsystem_dims[s];
        }
    }
    for (std::size_t full = 0; full < total; ++full) {
        std::size_t rem = full;
        std::size_t k = 0, t = 0, k_scale = 1, t_scale = 1;
        for (std::size_t s = subsystem_dims.size(); s-- > 0;) {
            const std::size_t digit = rem % subsystem_dims[s];
            rem /= subsystem_dims[s];
            if (kept[s]) {
                k += digit * k_scale;
                k_scale *= subsystem_dims[s];
            } else {
                t += digit * t_scale;
                t_scale *= subsystem_dims[s];
            }
        }
        kept_of[full] = k;
        traced_of[full] = t;
    }

    ComplexMatrix out(kept_dim, kept_dim);
    for (std::size_t i = 0; i < total; ++i) {
        for (std::size_t j = 0; j < total; ++j) {
            if (traced_of[i] == traced_of[j]) {
                out(kept_of[i], kept_of[j]) += m(i, j);
            }
        }
    }
    return out;
}

DensityOperator partial_trace(const DensityOperator &rho, std::span<const std::size_t> subsystem_dims,
                              std::span<const std::size_t> keep) {
    return DensityOperator(partial_trace(rho.matrix(), subsystem_dims, keep));
}

double entropy_bits(std::span<const double> probabilities) {
    double s = 0.0;
    for (double p : probabilities) {
        if (p < -1e-10) {
            std::ostringstream msg;
            msg << std::setprecision(17) << "entropy of a distribution with negative weight " << p;
            throw UnphysicalStateError(msg.str());
        }
        if (p > 0.0) {
            s -= p * std::log2(p);
        }
    }
    return std::max(s, 0.0);
}

double von_neumann_entropy(const DensityOperator &rho) {
    return entropy_bits(eig_hermitian(rho.matrix()).values);
}

double fidelity_pure(const PureState &psi, const DensityOperator &rho) {
    if (psi.dim() != rho.dim()) {
        throw std::invalid_argument("fidelity_pure: state dimension " + std::to_string(psi.dim()) +
                                    " does not match operator dimension " + std::to_string(rho.dim()));
    }
    Complex acc{0.0, 0.0};
    for (std::size_t r = 0; r < psi.dim(); ++r) {
        for (std::size_t c = 0; c < psi.dim(); ++c) {
            acc += std::conj(psi[r]) * rho(r, c) * psi[c];
        }
    }
    return std::clamp(acc.real(), 0.0, 1.0);
}

}  // namespace qclone
