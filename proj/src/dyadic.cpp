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

#include "tcseq/dyadic.hpp"

#include <bit>
#include <random>
#include <vector>

namespace tcseq::dyadic {

Nat digit_sum(Nat n) { return static_cast<Nat>(std::popcount(n)); }

Nat parity(Nat n) { return n & 1; }

Nat nu2_factorial(Nat n) { return n - digit_sum(n); }

Nat nu2_factorial_by_sum(Nat n) {
  Nat total = 0;
  for (Nat q = n >> 1; q != 0; q >>= 1) total += q;
  return total;
}

Nat nu2_binomial(Nat n, Nat k) {
  if (k > n)
    throw std::invalid_argument("nu2_binomial: k = " + std::to_string(k) +
                                " exceeds n = " + std::to_string(n));
  return digit_sum(k) + digit_sum(n - k) - digit_sum(n);
}

Nat carry_count(Nat a, Nat b) {
  if (b > ~a)
    throw std::overflow_error("carry_count: a + b does not fit 64 bits");
  Nat carries = 0;
  Nat carry = 0;
  while (a != 0 || b != 0 || carry != 0) {
    const Nat s = (a & 1) + (b & 1) + carry;
    carry = s >> 1;
    carries += carry;
    a >>= 1;
    b >>= 1;
  }
  return carries;
}

Nat nu2_binomial_exact(Nat n, Nat k) {
  if (k > n)
    throw std::invalid_argument("nu2_binomial_exact: k exceeds n");
  if (n > 64)
    throw std::invalid_argument(
        "nu2_binomial_exact: n > 64 does not fit a 64-bit word");
  // Pascal's triangle row by row; row 64 tops out below 2^61.
  std::vector<Nat> row{1};
  for (Nat i = 1; i <= n; ++i) {
    std::vector<Nat> next(i + 1, 1);
    for (Nat j = 1; j < i; ++j) next[j] = checked_add(row[j - 1], row[j]);
    row = std::move(next);
  }
  return static_cast<Nat>(std::countr_zero(row[k]));
}

Nat binom_mod2(Nat n, Nat k) {
  if (k > n)
    throw std::invalid_argument("binom_mod2: k = " + std::to_string(k) +
                                " exceeds n = " + std::to_string(n));
  return (k & ~n) == 0 ? 1 : 0;
}

namespace {

void check_unary_identities(Nat lo, Nat hi, Report& report) {
  for (Nat a = lo; a <= hi; ++a) {
    report.record_checked(3);
    if (digit_sum(a) > a)
      report.add_counterexample({"a=" + std::to_string(a), rel::kDigitLeSelf,
                                 "digit_sum=" + std::to_string(digit_sum(a))});
    const Nat twice = checked_mul(a, 2);
    if (digit_sum(twice) != digit_sum(a))
      report.add_counterexample(
          {"a=" + std::to_string(a), rel::kDouble,
           "digit_sum(2a)=" + std::to_string(digit_sum(twice))});
    if (digit_sum(twice + 1) != digit_sum(twice) + 1)
      report.add_counterexample(
          {"a=" + std::to_string(a), rel::kDoublePlusOne,
           "digit_sum(2a+1)=" + std::to_string(digit_sum(twice + 1))});
  }
}

void check_subadditive(Nat a, Nat b, Report& report) {
  report.record_checked();
  if (digit_sum(checked_add(a, b)) > digit_sum(a) + digit_sum(b))
    report.add_counterexample(
        {"a=" + std::to_string(a) + ",b=" + std::to_string(b),
         rel::kSubadditive,
         "digit_sum(a+b)=" + std::to_string(digit_sum(a + b)) +
             ", digit_sum(a)+digit_sum(b)=" +
             std::to_string(digit_sum(a) + digit_sum(b))});
}

}  // namespace

Report verify_digit_identities(Nat n_max,
                               std::optional<SweepStrategy> subadd,
                               unsigned workers) {
  if (n_max < 1)
    throw std::invalid_argument("verify_digit_identities: n_max must be >= 1");
  // Full quadratic grid by default only while it is cheap.
  const SweepStrategy strategy =
      subadd.value_or(n_max <= 4096 ? SweepStrategy::full()
                                    : SweepStrategy::sampled(0x5eed, 200000));

  Report report = parallel_sweep(
      "dyadic.digit-identities", 0, n_max, workers,
      [](Nat lo, Nat hi, Report& part) { check_unary_identities(lo, hi, part); },
      strategy);
  report.set_checked_range("a,b <= " + std::to_string(n_max));

  if (strategy.kind == SweepStrategy::Kind::Full) {
    Report grid = parallel_sweep(
        "dyadic.digit-identities", 0, n_max, workers,
        [n_max](Nat lo, Nat hi, Report& part) {
          for (Nat a = lo; a <= hi; ++a)
            for (Nat b = 0; b <= n_max; ++b) check_subadditive(a, b, part);
        },
        strategy);
    report.merge(grid);
  } else {
    // Draw the sample list up front so the result does not depend on the
    // worker count.
    std::mt19937_64 rng(strategy.seed);
    std::vector<std::pair<Nat, Nat>> pairs;
    pairs.reserve(strategy.count);
    for (Nat i = 0; i < strategy.count; ++i)
      pairs.emplace_back(rng() % (n_max + 1), rng() % (n_max + 1));
    Report sample = parallel_sweep(
        "dyadic.digit-identities", 0, pairs.size() - 1, workers,
        [&pairs](Nat lo, Nat hi, Report& part) {
          for (Nat i = lo; i <= hi; ++i)
            check_subadditive(pairs[i].first, pairs[i].second, part);
        },
        strategy);
    report.merge(sample);
  }
  report.add_note("subadditivity strategy: " + strategy.str());
  return report;
}

}  // namespace tcseq::dyadic
