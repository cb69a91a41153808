// Copyright 2026 The tcseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "tcseq/arith.hpp"
#include "tcseq/report.hpp"

// Closed-form growth bounds for topological complexity sequences, the Davis
// non-immersion family they come from, and sweep verifiers for the
// inequality chains relating them. Everything here is exact integer
// arithmetic; square-root and log comparisons are restated in integer form.
namespace tcseq::growth {

// One member of the Davis non-immersion family: the real projective space
// of dimension dim = 2(k + digit_sum(k) - 1) does not immerse into
// euclidean space of dimension strict_lower = 4k - 2 digit_sum(k), so the
// classical topological complexity at index dim strictly exceeds
// strict_lower.
struct DavisPair {
  Nat k = 0;
  Nat dim = 0;
  Nat strict_lower = 0;
};

// Pointwise bound value
//   f(n) = 2(floor(n/4) + a(floor(n/2)) + a(floor(n/4) + a(floor(n/2)))) - 3
// with a = digit_sum. Only defined for n >= 2; f(1) = -3 is meaningless for
// every use of f, so smaller arguments are rejected.
Int f_value(Nat n);

// Window minimum beta(n) = min{ f(k) : n+1 <= k <= 2n }, n >= 1.
Int beta(Nat n);

// beta(1..n_max) in one pass (sliding-window minima); index 0 is unused.
std::vector<Int> beta_range(Nat n_max);

// Dyadic plateau bound: gamma(1) = gamma(2) = 1, and gamma(n) = 2^k + 1 on
// the window 2^k + 1 < n <= 2^{k+1} + 1.
Nat gamma(Nat n);

// The Davis pairs for k = 1..k_max. Distinct k may share a dim; callers
// keep the largest strict_lower per dim.
std::vector<DavisPair> davis_pairs(Nat k_max);

// k(n) = (n - parity(n))/2 + digit_sum(n). Checks the defining property
// 2k - digit_sum(k) >= n and throws if it ever failed (it is a theorem).
Nat k_choice(Nat n);

// Exact decision of the real inequality
//   4 log2(n/2) + 1 <= 2 sqrt(n) - 3,
// equivalently n^2 <= 2^sqrt(n). Decided with integer arithmetic only
// (repeated squaring against integer square roots; big integers via GMP
// when 64-bit words run out). n >= 2.
bool log_sqrt_step_holds(Nat n);

// Sweep over 2 <= n <= n_max:
//   (a) 2 f(n) <= n + 8 digit_sum(floor(n/2)) - 6   (exact rational form)
//   (b) beta(n) <= f(n+1)
//   (c) floor(n/2) <= beta(n)
//   (d) beta weakly increasing on [1, n_max]
// plus a note reporting the least N such that the log/sqrt step holds for
// every n in [N, n_max] (that step fails for small n, so it is reported,
// not asserted).
Report verify_growth_chain(Nat n_max, unsigned workers = 1);

// Sweep over 1 <= n <= n_max of the k_choice property 2k - digit_sum(k) >= n.
Report verify_k_choice(Nat n_max, unsigned workers = 1);

// For k = 0..k_max checks the plateau claims
//   (i)   f(2^{k+1}+2) = f(2^{k+1}+3)
//   (ii)  f(2^{k+1}+2) < f(n) for n in (2^{k+1}+3, 2^{k+2}]
//   (iii) f(2^{k+1}+2) > 2^k + 1
// and for k = 1..k_max
//   (iv)  beta(2^{k+1}+1) > gamma(2^{k+1}+1).
// Also re-derives the beta/gamma comparison rows for n <= 13 and lists the
// witnesses n <= 2^k_max with beta(n) < f(n+1) in the notes.
Report verify_section4_claims(Nat k_max);

// For n = 2^j, j = 4..exponent_max, reports (n, floor(n/2), beta(n)) with
// the exact rational deviations beta(n)/n - 1/2 and floor(n/2)/n - 1/2, and
// asserts |2 beta(n) - n| <= 10 j.
Report asymptotic_report(Nat exponent_max);

namespace rel {
inline constexpr const char* kChainPointwise =
    "2*f(n) <= n + 8*digit_sum(floor(n/2)) - 6";
inline constexpr const char* kBetaWindow = "beta(n) <= f(n+1)";
inline constexpr const char* kBetaFloor = "floor(n/2) <= beta(n)";
inline constexpr const char* kBetaMonotone = "beta(n-1) <= beta(n)";
inline constexpr const char* kKChoice =
    "2*k_choice(n) - digit_sum(k_choice(n)) >= n";
inline constexpr const char* kPlateauEqual = "f(2^{k+1}+2) = f(2^{k+1}+3)";
inline constexpr const char* kPlateauMin =
    "f(2^{k+1}+2) < f(n) for n in (2^{k+1}+3, 2^{k+2}]";
inline constexpr const char* kPlateauExceeds = "f(2^{k+1}+2) > 2^k + 1";
inline constexpr const char* kBetaGtGamma =
    "beta(2^{k+1}+1) > gamma(2^{k+1}+1)";
inline constexpr const char* kDeviation = "|2*beta(2^j) - 2^j| <= 10*j";
}  // namespace rel

}  // namespace tcseq::growth
