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

#include "qclone/states.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace qclone {

namespace {

constexpr double kXPatternTol = 1e-10;

const ComplexMatrix &pauli_pair(int i, int j) {
    static const auto kTable = [] {
        std::array<std::array<ComplexMatrix, 4>, 4> table;
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                table[a][b] = tensor(pauli(a), pauli(b));
            }
        }
        return table;
    }();
    return kTable[i][j];
}

double trace_product_real(const ComplexMatrix &rho, const ComplexMatrix &op) {
    // Tr(rho op) without forming the product.
    Complex acc{0.0, 0.0};
    for (std::size_t r = 0; r < rho.rows(); ++r) {
        for (std::size_t c = 0; c < rho.cols(); ++c) {
            acc += rho(r, c) * op(c, r);
        }
    }
    return acc.real();
}

}  // namespace

PureSchmidtState::PureSchmidtState(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0)) {
        throw std::invalid_argument("PureSchmidtState: alpha and beta must lie in [0, 1]");
    }
    if (std::abs(alpha * alpha + beta * beta - 1.0) > 1e-12) {
        throw std::invalid_argument("PureSchmidtState: alpha^2 + beta^2 must equal 1");
    }
}

PureSchmidtState PureSchmidtState::from_alpha_squared(double alpha2) {
    if (!(alpha2 >= 0.0 && alpha2 <= 1.0)) {
        throw std::invalid_argument("PureSchmidtState: alpha^2 must lie in [0, 1]");
    }
    return PureSchmidtState(std::sqrt(alpha2), std::sqrt(1.0 - alpha2));
}

PureState PureSchmidtState::ket() const {
    // Renormalize so the unit-norm check in PureState sees exact roundoff only.
    const double norm = std::hypot(alpha_, beta_);
    return PureState({alpha_ / norm, 0.0, 0.0, beta_ / norm});
}

WernerState::WernerState(double x) : x_(x) {
    if (!(x >= -1.0 && x <= 1.0)) {
        throw std::invalid_argument("WernerState: x must lie in [-1, 1]");
    }
}

double BlochForm::max_abs_diff(const BlochForm &other) const {
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
        worst = std::max({worst, std::abs(x[i] - other.x[i]), std::abs(y[i] - other.y[i])});
        for (int j = 0; j < 3; ++j) {
            worst = std::max(worst, std::abs(t[i][j] - other.t[i][j]));
        }
    }
    return worst;
}

XState::XState(double r11, double r22, double r33, double r44, double r14, double r23)
    : r11_(r11), r22_(r22), r33_(r33), r44_(r44), r14_(r14), r23_(r23) {
    if (std::min({r11, r22, r33, r44}) < -1e-12) {
        throw UnphysicalStateError("XState: negative diagonal entry");
    }
    if (std::abs(r11 + r22 + r33 + r44 - 1.0) > 1e-10) {
        throw UnphysicalStateError("XState: diagonal does not sum to 1");
    }
    if (r14 * r14 > r11 * r44 + 1e-12 || r23 * r23 > r22 * r33 + 1e-12) {
        throw UnphysicalStateError("XState: anti-diagonal exceeds positivity bound");
    }
}

DensityOperator XState::to_density() const {
    ComplexMatrix m(4, 4);
    m(0, 0) = r11_;
    m(1, 1) = r22_;
    m(2, 2) = r33_;
    m(3, 3) = r44_;
    m(0, 3) = m(3, 0) = r14_;
    m(1, 2) = m(2, 1) = r23_;
    return DensityOperator(std::move(m));
}

DensityOperator pure_to_density(const PureSchmidtState &s) {
    return DensityOperator(s.ket());
}

const ComplexMatrix &swap_operator() {
    static const ComplexMatrix kSwap = [] {
        ComplexMatrix m(4, 4);
        for (std::size_t k = 0; k < 2; ++k) {
            for (std::size_t l = 0; l < 2; ++l) {
                m(2 * k + l, 2 * l + k) = 1.0;
            }
        }
        return m;
    }();
    return kSwap;
}

DensityOperator werner_to_density(const WernerState &w) {
    const double x = w.x();
    return DensityOperator(ComplexMatrix::identity(4) * Complex{(2.0 - x) / 6.0, 0.0} +
                           swap_operator() * Complex{(2.0 * x - 1.0) / 6.0, 0.0});
}

BlochForm bloch_decompose(const DensityOperator &rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("bloch_decompose: expected a two-qubit (4x4) operator");
    }
    BlochForm b;
    for (int i = 1; i <= 3; ++i) {
        b.x[i - 1] = trace_product_real(rho.matrix(), pauli_pair(i, 0));
        b.y[i - 1] = trace_product_real(rho.matrix(), pauli_pair(0, i));
        for (int j = 1; j <= 3; ++j) {
            b.t[i - 1][j - 1] = trace_product_real(rho.matrix(), pauli_pair(i, j));
        }
    }
    return b;
}

DensityOperator bloch_compose(const BlochForm &b) {
    ComplexMatrix m = ComplexMatrix::identity(4);
    for (int i = 1; i <= 3; ++i) {
        m += pauli_pair(i, 0) * Complex{b.x[i - 1], 0.0};
        m += pauli_pair(0, i) * Complex{b.y[i - 1], 0.0};
        for (int j = 1; j <= 3; ++j) {
            m += pauli_pair(i, j) * Complex{b.t[i - 1][j - 1], 0.0};
        }
    }
    m *= 0.25;
    try {
        return DensityOperator(std::move(m));
    } catch (const UnphysicalStateError &e) {
        throw UnphysicalStateError(std::string("unphysical Bloch form: ") + e.what());
    }
}

XState as_x_state(const DensityOperator &rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("as_x_state: expected a two-qubit (4x4) operator");
    }
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            const bool on_pattern = (r == c) || (r + c == 3);
            if (!on_pattern && std::abs(rho(r, c)) > kXPatternTol) {
                std::ostringstream msg;
                msg << std::setprecision(6) << "not an X-state: entry (" << r + 1 << "," << c + 1
                    << ") = " << std::abs(rho(r, c)) << " lies off the X pattern";
                throw NotXStateError(msg.str());
            }
        }
    }
    if (std::abs(rho(0, 3).imag()) > kXPatternTol) {
        throw NotXStateError("not a real X-state: entry (1,4) has an imaginary part");
    }
    if (std::abs(rho(1, 2).imag()) > kXPatternTol) {
        throw NotXStateError("not a real X-state: entry (2,3) has an imaginary part");
    }
    return XState(rho(0, 0).real(), rho(1, 1).real(), rho(2, 2).real(), rho(3, 3).real(), rho(0, 3).real(),
                  rho(1, 2).real());
}

}  // namespace qclone
