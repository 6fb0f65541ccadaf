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

#include "aqec/tolerances.hpp"

#include <cmath>
#include <cstdlib>

namespace aqec {

namespace {

Tolerances load() {
  Tolerances tol;
  if (const char* raw = std::getenv("AQEC_TOL")) {
    char* end = nullptr;
    const double value = std::strtod(raw, &end);
    if (end != raw && *end == '\0' && std::isfinite(value) && value > 0.0) tol.eig = value;
  }
  return tol;
}

}  // namespace

const Tolerances& tolerances() {
  static const Tolerances tol = load();
  return tol;
}

}  // namespace aqec
