/* Copyright 2026 The ptmathieu authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <optional>

#include "ptmathieu/params.hpp"

namespace ptmathieu {

/// Sign selector for the pair of edges that open at a = 1/4.
enum class Sign { Plus, Minus };

/// Small-eps stability edge emanating from a = 0:
///
///     a(eps) = -2 (1 - beta^2) eps^2.
///
/// Valid for 0 <= beta <= 1; beta outside that range is rejected because
/// the closed form loses meaning past the symmetry-breaking point.
double boundary_a0(double eps, double beta);

/// Small-eps stability edges emanating from a = 1/4:
///
///     a(eps) = 1/4 +- sqrt(1 - beta^2) eps - (1 - beta^2)/2 eps^2.
double boundary_quarter(double eps, double beta, Sign sign);

/// Convenience dispatch of the two closed forms above by branch id.
double perturbative_boundary(BranchId branch, double eps, double beta);

/// |d^2 a / d eps^2| at eps = 0 for the a = 0 edge: 4 (1 - beta^2).
double curvature_kappa1(double beta);

/// Same curvature for the a = 1/4 edges: 1 - beta^2 = kappa1 / 4.
double curvature_kappa2(double beta);

enum class Stability { Stable, Unstable, NearBoundary };

/// Default half-width of the NearBoundary band. The closed forms are
/// truncated at eps^2, so the band grows like the cubic remainder.
double default_boundary_tolerance(double eps) noexcept;

/// Classify a parameter point with the closed-form edges alone.
///
/// Points with a < 1/8 are judged against the a = 0 edge (stable above it),
/// the rest against the pair of a = 1/4 edges (unstable strictly between
/// them). That midpoint split between the two anchors is a heuristic; only
/// trust the answer for small eps. `tol` overrides the NearBoundary band.
Stability predict_stability_perturbative(const MathieuParams& p,
                                         std::optional<double> tol = std::nullopt);

}  // namespace ptmathieu
