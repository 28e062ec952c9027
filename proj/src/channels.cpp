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

#include "qclone/channels.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

namespace qclone {

namespace {

void require_unit_interval(double s, const char *who) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw std::invalid_argument(std::string(who) + ": s must lie in [0, 1]");
    }
}

}  // namespace

PauliChannelParams::PauliChannelParams(const Table &weights) : w_(weights) {
    double sum = 0.0;
    for (const auto &row : w_) {
        for (double w : row) {
            if (!(w >= 0.0)) {
                throw std::invalid_argument("PauliChannelParams: weights must be nonnegative");
            }
            sum += w;
        }
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << std::setprecision(17) << "PauliChannelParams: weights sum to " << sum << ", not 1";
        throw std::invalid_argument(msg.str());
    }
}

static PauliChannelParams::Table assemble(double s, const std::array<double, 3> &p, const std::array<double, 3> &q,
                                          const std::array<std::array<double, 3>, 3> &t) {
    PauliChannelParams::Table w{};
    w[0][0] = s;
    for (int i = 0; i < 3; ++i) {
        w[i + 1][0] = p[i];
        w[0][i + 1] = q[i];
        for (int j = 0; j < 3; ++j) {
            w[i + 1][j + 1] = t[i][j];
        }
    }
    return w;
}

PauliChannelParams::PauliChannelParams(double s, const std::array<double, 3> &p, const std::array<double, 3> &q,
                                       const std::array<std::array<double, 3>, 3> &t)
    : PauliChannelParams(assemble(s, p, q, t)) {
}

DensityOperator apply_pauli_channel(const PauliChannelParams &params, const DensityOperator &rho) {
    if (rho.dim() != 4) {
        throw std::invalid_argument("apply_pauli_channel: expected a two-qubit (4x4) operator");
    }
    ComplexMatrix out(4, 4);
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const double w = params.weights()[a][b];
            if (w == 0.0) {
                continue;
            }
            const ComplexMatrix k = tensor(pauli(a), pauli(b));
            out += (k * rho.matrix() * k) * Complex{w, 0.0};
        }
    }
    return DensityOperator(std::move(out));
}

PauliChannelParams one_pauli(double s) {
    require_unit_interval(s, "one_pauli");
    PauliChannelParams::Table w{};
    const double rest = (1.0 - s) / 3.0;
    w[0][0] = s;
    w[3][0] = w[0][3] = w[3][3] = rest;
    return PauliChannelParams(w);
}

PauliChannelParams two_pauli(double s) {
    require_unit_interval(s, "two_pauli");
    PauliChannelParams::Table w{};
    const double rest = (1.0 - s) / 8.0;
    for (int a : {0, 1, 3}) {
        for (int b : {0, 1, 3}) {
            w[a][b] = rest;
        }
    }
    w[0][0] = s;
    return PauliChannelParams(w);
}

double channel_fidelity(const PauliChannelParams &params, const PureSchmidtState &state) {
    return fidelity_pure(state.ket(), apply_pauli_channel(params, pure_to_density(state)));
}

double one_pauli_fidelity_closed(double s, const PureSchmidtState &state) {
    const double a2b2 = state.alpha_squared() * state.beta() * state.beta();
    return 1.0 + (8.0 / 3.0) * (s - 1.0) * a2b2;
}

double two_pauli_fidelity_closed(double s, const PureSchmidtState &state) {
    const double a2b2 = state.alpha_squared() * state.beta() * state.beta();
    return (3.0 + 5.0 * s - 4.0 * (1.0 - s) * a2b2) / 8.0;
}

}  // namespace qclone
