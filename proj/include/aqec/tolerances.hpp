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

#ifndef AQEC_TOLERANCES_HPP
#define AQEC_TOLERANCES_HPP

namespace aqec {

/// Numerical tolerances shared by every module.
///
/// `eig` may be overridden process-wide through the AQEC_TOL environment
/// variable; the others are fixed.
struct Tolerances {
  double herm = 1e-10;  // Hermiticity defect accepted by eigensolvers
  double psd = 1e-10;   // most negative eigenvalue clamped to zero
  double eig = 1e-9;    // eigen/SVD reconstruction and isometry checks
  double rank = 1e-8;   // relative singular-value cutoff
  double tp = 1e-10;    // trace-preservation defect
  double bal = 1e-12;   // relative tolerance of the balance sums
};

/// Returns the active tolerances (reads AQEC_TOL once on first use).
const Tolerances& tolerances();

}  // namespace aqec

#endif  // AQEC_TOLERANCES_HPP
