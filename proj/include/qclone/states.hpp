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

#include <array>
#include <stdexcept>

#include "qclone/matrix.hpp"

namespace qclone {

/// Raised by as_x_state when an entry outside the X pattern is nonzero.
class NotXStateError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// alpha|00> + beta|11> with real, nonnegative alpha and beta.
class PureSchmidtState {
   public:
    /// Requires alpha, beta in [0, 1] and alpha^2 + beta^2 = 1 within 1e-12.
    PureSchmidtState(double alpha, double beta);

    /// beta = +sqrt(1 - alpha^2). The usual way to build sweep points.
    static PureSchmidtState from_alpha_squared(double alpha2);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    double alpha_squared() const { return alpha_ * alpha_; }

    PureState ket() const;

   private:
    double alpha_;
    double beta_;
};

/// ((2 - x)/6) I + ((2x - 1)/6) SWAP, x in [-1, 1].
class WernerState {
   public:
    explicit WernerState(double x);
    double x() const { return x_; }
    /// Common value of the three diagonal correlation entries, (2x - 1)/3.
    double correlation() const { return (2.0 * x_ - 1.0) / 3.0; }

   private:
    double x_;
};

/// rho = (I⊗I + sum x_i σ_i⊗I + sum y_i I⊗σ_i + sum t_ij σ_i⊗σ_j) / 4.
struct BlochForm {
    std::array<double, 3> x{};
    std::array<double, 3> y{};
    std::array<std::array<double, 3>, 3> t{};

    double max_abs_diff(const BlochForm &other) const;
};

/// Real X-shaped two-qubit state (only the diagonal and anti-diagonal are
/// populated, with rho14 = rho41 and rho23 = rho32 real).
class XState {
   public:
    XState(double r11, double r22, double r33, double r44, double r14, double r23);

    double r11() const { return r11_; }
    double r22() const { return r22_; }
    double r33() const { return r33_; }
    double r44() const { return r44_; }
    double r14() const { return r14_; }
    double r23() const { return r23_; }

    DensityOperator to_density() const;

   private:
    double r11_, r22_, r33_, r44_, r14_, r23_;
};

DensityOperator pure_to_density(const PureSchmidtState &s);
DensityOperator werner_to_density(const WernerState &w);

/// The two-qubit SWAP operator sum_{k,l} |kl><lk|.
const ComplexMatrix &swap_operator();

BlochForm bloch_decompose(const DensityOperator &rho);

/// Inverse of bloch_decompose. Throws UnphysicalStateError when the
/// assembled matrix is not positive semidefinite.
DensityOperator bloch_compose(const BlochForm &b);

/// Extracts the X entries; throws NotXStateError naming the first entry
/// outside the pattern (or imaginary anti-diagonal part) above 1e-10.
XState as_x_state(const DensityOperator &rho);

}  // namespace qclone
