// Copyright 2026 The AQEC Authors
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

#include "aqec/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "aqec/errors.hpp"
#include "aqec/tolerances.hpp"

namespace aqec {

RecoveryChannel::RecoveryChannel(std::vector<ReversalOp> ops, CMatrix error_projector)
    : ops_(std::move(ops)), error_projector_(std::move(error_projector)) {
  if (!error_projector_.is_square()) throw DimMismatch("error projector must be square");
  for (const auto& op : ops_) {
    if (op.R.cols() != error_projector_.rows()) throw DimMismatch("reversal operator has the wrong input dimension");
    if (op.R.rows() != ops_.front().R.rows()) throw DimMismatch("reversal operators disagree on logical dimension");
  }
}

double RecoveryChannel::completeness_defect() const {
  CMatrix total = error_projector_.adjoint() * error_projector_;
  for (const auto& op : ops_) total += op.R.adjoint() * op.R;
  return operator_norm(total - CMatrix::identity(physical_dim()));
}

RecoveryChannel canonical_recovery(std::span<const EffectAnalysis> analyses, const CodeSpace& code) {
  std::vector<const EffectAnalysis*> used;
  for (const auto& a : analyses)
    if (a.p > tolerances().rank) used.push_back(&a);

  for (std::size_t m = 0; m < used.size(); ++m)
    for (std::size_t n = m + 1; n < used.size(); ++n) {
      const double overlap = operator_norm(used[m]->W.adjoint() * used[n]->W);
      if (overlap > tolerances().eig) {
        std::ostringstream msg;
        msg << "effects " << used[m]->index << " and " << used[n]->index
            << " have overlapping recovery subspaces (||W_m^dagger W_n|| = " << overlap << ")";
        throw OrthogonalityViolation(msg.str());
      }
    }

  const std::size_t dim = code.physical_dim();
  CMatrix error_projector = CMatrix::identity(dim);
  std::vector<ReversalOp> ops;
  for (const auto* a : used) {
    error_projector -= a->W * a->W.adjoint();
    ops.push_back({a->index, a->W.adjoint()});
  }
  return RecoveryChannel(std::move(ops), std::move(error_projector));
}

RecoveryChannel build_canonical_recovery(const KrausChannel& channel, const CodeSpace& code, double gamma, int t) {
  const ReversibleSubset subset = select_reversible_subset(channel, code, gamma, t);
  std::vector<EffectAnalysis> analyses;
  for (const auto& index : subset.indices) analyses.push_back(analyze_effect(*channel.find(index), code));
  return canonical_recovery(analyses, code);
}

RecoveryOutput apply_recovery(const RecoveryChannel& rec, const DensityMatrix& rho) {
  if (rho.dim() != rec.physical_dim()) throw DimMismatch("state does not live on the recovery's physical space");
  const std::size_t d = rec.logical_dim();
  CMatrix logical(d, d);
  for (const auto& op : rec.reversal_ops()) logical += op.R * rho.matrix() * op.R.adjoint();
  const CMatrix& pe = rec.error_projector();
  const double failure = (pe * rho.matrix() * pe.adjoint()).trace().real();
  return {DensityMatrix(std::move(logical)), std::max(failure, 0.0)};
}

namespace {

// Logical-to-logical blocks R_k A_n V; the recovered fidelity is
// sum_{k,n} |<psi|M_kn|psi>|^2.
std::vector<CMatrix> recovery_blocks(const CodeSpace& code, const KrausChannel& channel, const RecoveryChannel& rec) {
  if (channel.dim() != code.physical_dim() || rec.physical_dim() != code.physical_dim()) {
    throw DimMismatch("code, channel and recovery dimensions differ");
  }
  std::vector<CMatrix> blocks;
  for (const auto& e : channel.effects()) {
    const CMatrix image = e.matrix * code.isometry();
    for (const auto& op : rec.reversal_ops()) blocks.push_back(op.R * image);
  }
  return blocks;
}

double blocks_fidelity(const std::vector<CMatrix>& blocks, const CVector& psi) {
  double total = 0.0;
  for (const auto& m : blocks) total += std::norm(inner(psi, m * psi));
  return total;
}

}  // namespace

double recovery_fidelity(const CodeSpace& code, const KrausChannel& channel, const RecoveryChannel& rec,
                         std::span<const Complex> amplitudes) {
  CVector psi(std::vector<Complex>(amplitudes.begin(), amplitudes.end()));
  if (psi.dim() != code.logical_dim()) throw DimMismatch("wrong number of logical amplitudes");
  if (std::abs(psi.squared_norm() - 1.0) > tolerances().tp) throw NotNormalized("logical input is not normalized");
  return blocks_fidelity(recovery_blocks(code, channel, rec), psi);
}

// ---------------------------------------------------------------------------
// Minimizers

WorstCase minimize_over_bloch_sphere(const std::function<double(Complex, Complex)>& fidelity) {
  constexpr int kPolar = 32;
  constexpr int kAzimuthal = 64;
  constexpr double kResolution = 1e-10;
  const double pi = std::numbers::pi;

  auto evaluate = [&](double theta, double phi) {
    return fidelity(std::cos(theta / 2), std::polar(std::sin(theta / 2), phi));
  };

  double best_theta = 0.0;
  double best_phi = 0.0;
  double best = evaluate(0.0, 0.0);
  for (int i = 0; i < kPolar; ++i) {
    const double theta = pi * i / (kPolar - 1);
    // At the poles the azimuth is irrelevant.
    const int azimuths = (i == 0 || i == kPolar - 1) ? 1 : kAzimuthal;
    for (int j = 0; j < azimuths; ++j) {
      const double phi = 2 * pi * j / kAzimuthal;
      const double f = evaluate(theta, phi);
      if (f < best) {
        best = f;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  double step_theta = pi / (kPolar - 1);
  double step_phi = 2 * pi / kAzimuthal;
  while (step_theta > kResolution || step_phi > kResolution) {
    bool moved = false;
    const double candidates[4][2] = {{best_theta + step_theta, best_phi},
                                     {best_theta - step_theta, best_phi},
                                     {best_theta, best_phi + step_phi},
                                     {best_theta, best_phi - step_phi}};
    for (const auto& c : candidates) {
      const double theta = std::clamp(c[0], 0.0, pi);
      const double f = evaluate(theta, c[1]);
      if (f < best) {
        best = f;
        best_theta = theta;
        best_phi = c[1];
        moved = true;
      }
    }
    if (!moved) {
      step_theta /= 2;
      step_phi /= 2;
    }
  }
  return {best, {std::cos(best_theta / 2), std::polar(std::sin(best_theta / 2), best_phi)}};
}

WorstCase minimize_over_unit_sphere(const std::function<double(const CVector&)>& fidelity, std::size_t dim,
                                    std::uint64_t seed) {
  if (dim == 0) throw DimMismatch("empty logical space");
  constexpr int kRestarts = 256;
  constexpr double kResolution = 1e-10;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  auto to_state = [dim](const std::vector<double>& x) {
    CVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = Complex(x[2 * i], x[2 * i + 1]);
    return v.normalized();
  };

  std::vector<double> best_x;
  double best = 2.0;
  for (int r = 0; r < kRestarts; ++r) {
    std::vector<double> x(2 * dim);
    for (double& xi : x) xi = normal(rng);
    const double f = fidelity(to_state(x));
    if (f < best) {
      best = f;
      best_x = x;
    }
  }

  // Coordinate pattern search in the unnormalized parametrization.
  double step = 0.1;
  while (step > kResolution) {
    bool moved = false;
    for (std::size_t i = 0; i < best_x.size(); ++i) {
      for (double sign : {1.0, -1.0}) {
        std::vector<double> x = best_x;
        x[i] += sign * step;
        const double f = fidelity(to_state(x));
        if (f < best) {
          best = f;
          best_x = std::move(x);
          moved = true;
        }
      }
    }
    if (!moved) step /= 2;
  }
  const CVector state = to_state(best_x);
  return {best, std::vector<Complex>(state.entries().begin(), state.entries().end())};
}

WorstCase worst_case_fidelity(const CodeSpace& code, const KrausChannel& channel, const RecoveryChannel& rec,
                              const WorstCaseOptions& options) {
  const std::vector<CMatrix> blocks = recovery_blocks(code, channel, rec);
  if (code.logical_dim() == 2) {
    return minimize_over_bloch_sphere([&](Complex a, Complex b) { return blocks_fidelity(blocks, CVector{a, b}); });
  }
  if (!options.allow_random_restart) {
    throw UnsupportedDim("worst-case search over a " + std::to_string(code.logical_dim()) +
                         "-dimensional logical space needs the random-restart fallback");
  }
  return minimize_over_unit_sphere([&](const CVector& psi) { return blocks_fidelity(blocks, psi); },
                                   code.logical_dim());
}

}  // namespace aqec
