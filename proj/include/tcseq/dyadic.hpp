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

#include <optional>

#include "tcseq/arith.hpp"
#include "tcseq/report.hpp"

// Exact 2-adic combinatorics: binary digit sums, Legendre and Kummer
// valuations, and mod-2 binomial coefficients, each with at least one
// independent route so they can be cross-checked.
namespace tcseq::dyadic {

// Number of ones in the binary expansion of n (digit_sum(0) = 0).
Nat digit_sum(Nat n);

// n mod 2.
Nat parity(Nat n);

// 2-adic valuation of n!, via the closed form n - digit_sum(n).
Nat nu2_factorial(Nat n);

// Same valuation via the divisor sum floor(n/2) + floor(n/4) + ...;
// an independent route kept for cross-checking.
Nat nu2_factorial_by_sum(Nat n);

// 2-adic valuation of C(n, k) via digit sums; rejects k > n.
Nat nu2_binomial(Nat n, Nat k);

// Number of carries when adding a and b in base 2, by direct simulation.
Nat carry_count(Nat a, Nat b);

// 2-adic valuation of the exactly multiplied binomial coefficient.
// Only defined for n <= 64 (the largest row whose entries fit a 64-bit word).
Nat nu2_binomial_exact(Nat n, Nat k);

// C(n, k) mod 2: 1 iff the bits of k form a submask of the bits of n.
// Rejects k > n.
Nat binom_mod2(Nat n, Nat k);

// Checks the four digit-sum identities for all a, b <= n_max:
//   digit_sum(a) <= a
//   digit_sum(2a) = digit_sum(a)
//   digit_sum(2a+1) = digit_sum(2a) + 1
//   digit_sum(a+b) <= digit_sum(a) + digit_sum(b)
// The subadditivity grid is quadratic, so it runs in full only when the
// chosen strategy says so; the strategy used is recorded in the report.
Report verify_digit_identities(
    Nat n_max, std::optional<SweepStrategy> subadditivity_strategy = {},
    unsigned workers = 1);

// Relation strings used in counterexamples, for callers that partition
// report failures by sub-claim.
namespace rel {
inline constexpr const char* kDigitLeSelf = "digit_sum(a) <= a";
inline constexpr const char* kDouble = "digit_sum(2a) = digit_sum(a)";
inline constexpr const char* kDoublePlusOne =
    "digit_sum(2a+1) = digit_sum(2a) + 1";
inline constexpr const char* kSubadditive =
    "digit_sum(a+b) <= digit_sum(a) + digit_sum(b)";
}  // namespace rel

}  // namespace tcseq::dyadic
