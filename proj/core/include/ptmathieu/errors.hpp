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

#include <stdexcept>
#include <string>

namespace ptmathieu {

/// Integration state overflowed or turned non-finite. Carries the position x
/// inside the period at which the blow-up was detected.
class NonFiniteError : public std::runtime_error {
 public:
  NonFiniteError(const std::string& what, double x)
      : std::runtime_error(what + " (at x = " + std::to_string(x) + ")"), x_(x) {}

  double where() const noexcept { return x_; }

 private:
  double x_;
};

/// The discriminant residual has no sign change inside the search window.
class NoBracketError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The tridiagonal operator cannot be scaled to a real symmetric one
/// (off-diagonal product is not positive, i.e. beta >= 1 with coupling on).
class NotSymmetrizableError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A curve fit was requested with fewer samples than the model needs.
class InsufficientSamplesError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ptmathieu
