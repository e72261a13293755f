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

#include <complex>
#include <string_view>

namespace ptmathieu {

/// One instance of the complex Mathieu equation
///
///     psi''(x) + [a + 2 eps (cos x + i beta sin x)] psi(x) = 0.
///
/// eps >= 0 (the sign of eps is absorbed by x -> x + pi) and beta >= 0
/// (beta -> -beta is equivalent under x -> -x). Both are enforced at
/// construction; a is unrestricted.
struct MathieuParams {
  double a;
  double eps;
  double beta;

  MathieuParams(double a_, double eps_, double beta_);
};

/// V(x) = cos x + i beta sin x. Satisfies V(x) = conj(V(-x)) for real beta.
std::complex<double> potential_value(double x, double beta) noexcept;

/// Exponential-basis couplings of the modulation: 2 eps V(x) =
/// g_plus e^{ix} + g_minus e^{-ix} with g_pm = eps (1 +- beta).
struct CouplingCoefficients {
  double g_plus;
  double g_minus;
};

CouplingCoefficients coupling_coefficients(double eps, double beta);

/// Boundary-curve identity: the unperturbed anchor (a = 0 or a = 1/4) plus
/// the sign branch for the tongue that opens at 1/4.
enum class BranchId { Zero, QuarterPlus, QuarterMinus };

/// a value the branch emanates from at eps = 0.
double anchor_value(BranchId branch) noexcept;

/// Discriminant value on the branch: +2 for the periodic edge at a = 0,
/// -2 for the antiperiodic edges at a = 1/4.
double branch_target_discriminant(BranchId branch) noexcept;

std::string_view branch_name(BranchId branch) noexcept;

}  // namespace ptmathieu
