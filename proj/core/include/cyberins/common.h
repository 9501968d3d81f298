// Copyright 2026 The cyberins Authors
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

#ifndef CYBERINS_COMMON_H_
#define CYBERINS_COMMON_H_

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cyberins {

// Raised when an argument lies outside the domain of the model (for example a
// noise variance of zero, which would need infinite investment).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when a numerical routine reaches a state the model rules out.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class Regime { kSharing, kNonSharing };

std::string_view RegimeName(Regime regime);
// Accepts "sharing" and "nonsharing" (also "non-sharing"); throws DomainError.
Regime ParseRegime(std::string_view name);

// Relative tolerance used for threshold comparisons throughout the library.
inline constexpr double kRelTol = 1e-9;

// Smallest admissible noise variance as a fraction of the baseline m0. Below
// this the log investment cost is treated as infinite.
inline constexpr double kPoleGuard = 1e-12;

bool NearlyEqual(double x, double y, double rel_tol = kRelTol);

// Thread count for data-parallel loops. Reads CYBERINS_THREADS once; falls
// back to std::thread::hardware_concurrency().
int DefaultThreadCount();

// Runs body(i) for i in [0, n) over at most `threads` workers. Each index is
// visited exactly once; callers write results by index so the outcome does not
// depend on scheduling.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& body,
                 int threads = 0);

}  // namespace cyberins

#endif  // CYBERINS_COMMON_H_
