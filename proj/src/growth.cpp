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

#include "tcseq/growth.hpp"

#include <gmp.h>

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <string>

#include "tcseq/dyadic.hpp"

namespace tcseq::growth {

using dyadic::digit_sum;
using dyadic::parity;

Int f_value(Nat n) {
  if (n < 2)
    throw std::invalid_argument("f_value: n must be >= 2, got " +
                                std::to_string(n));
  const Nat quarter = n / 4;
  const Nat a_half = digit_sum(n / 2);
  const Nat inner = digit_sum(checked_add(quarter, a_half));
  return 2 * to_int(quarter + a_half + inner) - 3;
}

Int beta(Nat n) {
  if (n < 1) throw std::invalid_argument("beta: n must be >= 1");
  Int best = f_value(n + 1);
  for (Nat k = n + 2; k <= checked_mul(n, 2); ++k)
    best = std::min(best, f_value(k));
  return best;
}

std::vector<Int> beta_range(Nat n_max) {
  if (n_max < 1) throw std::invalid_argument("beta_range: n_max must be >= 1");
  const Nat top = checked_mul(n_max, 2);
  std::vector<Int> f(top + 1, 0);
  for (Nat i = 2; i <= top; ++i) f[i] = f_value(i);

  std::vector<Int> out(n_max + 1, 0);
  std::deque<Nat> window;  // indices with increasing f values
  Nat next = 2;
  for (Nat n = 1; n <= n_max; ++n) {
    for (; next <= 2 * n; ++next) {
      while (!window.empty() && f[window.back()] >= f[next]) window.pop_back();
      window.push_back(next);
    }
    while (window.front() < n + 1) window.pop_front();
    out[n] = f[window.front()];
  }
  return out;
}

Nat gamma(Nat n) {
  if (n < 1) throw std::invalid_argument("gamma: n must be >= 1");
  if (n <= 2) return 1;
  // 2^k + 1 < n <= 2^{k+1} + 1  <=>  k + 1 = bit width of n - 2.
  const Nat k = static_cast<Nat>(std::bit_width(n - 2)) - 1;
  return pow2(k) + 1;
}

std::vector<DavisPair> davis_pairs(Nat k_max) {
  if (k_max < 1) throw std::invalid_argument("davis_pairs: k_max must be >= 1");
  std::vector<DavisPair> pairs;
  pairs.reserve(k_max);
  for (Nat k = 1; k <= k_max; ++k) {
    const Nat a = digit_sum(k);
    pairs.push_back({k, checked_mul(2, k + a - 1),
                     checked_sub(checked_mul(4, k), 2 * a)});
  }
  return pairs;
}

Nat k_choice(Nat n) {
  if (n < 1) throw std::invalid_argument("k_choice: n must be >= 1");
  const Nat k = (n - parity(n)) / 2 + digit_sum(n);
  if (checked_mul(2, k) - digit_sum(k) < n)
    throw std::logic_error("k_choice: 2k - digit_sum(k) < n at n = " +
                           std::to_string(n));
  return k;
}

namespace {

// RAII for a GMP integer.
class Mpz {
 public:
  Mpz() { mpz_init(z_); }
  explicit Mpz(Nat v) { mpz_init_set_ui(z_, v); }
  ~Mpz() { mpz_clear(z_); }
  Mpz(const Mpz&) = delete;
  Mpz& operator=(const Mpz&) = delete;
  mpz_t& get() { return z_; }

 private:
  mpz_t z_;
};

// Compares n^2 against 2^sqrt(n) exactly. With s_j = isqrt(4^j n) we have
// s_j <= 2^j sqrt(n) < s_j + 1, so
//   (n^2)^{2^j} <= 2^{s_j}      forces n^2 <= 2^sqrt(n), and
//   (n^2)^{2^j} >= 2^{s_j + 1}  forces n^2 >  2^sqrt(n).
// Squaring doubles the resolution, so the loop terminates unless the two
// sides are exactly equal, which happens only when sqrt(n) is an integer
// and is then decided at j = 0.
bool square_le_pow2_sqrt(Nat n) {
  // 64-bit fast path: most n are decided immediately.
  const Nat s = isqrt(n);
  const Nat sq = checked_mul(n, n);
  if (s >= 64) return true;  // sq < 2^64 <= 2^s
  if (sq <= (Nat{1} << s)) return true;
  if (s + 1 < 64 && sq >= (Nat{1} << (s + 1))) return false;

  // Ambiguous band 2^s < n^2 < 2^{s+1}: resolve by repeated squaring.
  Mpz acc(n);
  mpz_mul(acc.get(), acc.get(), acc.get());  // n^2
  Mpz scaled(n);                             // 4^j n
  Mpz root;
  Mpz power;
  for (int j = 0; j < 128; ++j) {
    mpz_sqrt(root.get(), scaled.get());
    const Nat sj = mpz_get_ui(root.get());
    mpz_set_ui(power.get(), 0);
    mpz_setbit(power.get(), sj);
    if (mpz_cmp(acc.get(), power.get()) <= 0) return true;
    mpz_setbit(power.get(), sj + 1);
    mpz_clrbit(power.get(), sj);
    if (mpz_cmp(acc.get(), power.get()) >= 0) return false;
    mpz_mul(acc.get(), acc.get(), acc.get());
    mpz_mul_ui(scaled.get(), scaled.get(), 4);
  }
  throw std::logic_error("square_le_pow2_sqrt did not resolve");
}

}  // namespace

bool log_sqrt_step_holds(Nat n) {
  if (n < 2) throw std::invalid_argument("log_sqrt_step_holds: n must be >= 2");
  // 4 log2(n/2) + 1 <= 2 sqrt(n) - 3  <=>  4 log2 n <= 2 sqrt(n)
  //                                   <=>  n^2 <= 2^sqrt(n).
  return square_le_pow2_sqrt(n);
}

Report verify_growth_chain(Nat n_max, unsigned workers) {
  if (n_max < 4)
    throw std::invalid_argument("verify_growth_chain: n_max must be >= 4");

  const std::vector<Int> betas = beta_range(n_max);
  const Nat top = checked_mul(n_max, 2);
  std::vector<Int> f(top + 2, 0);
  for (Nat i = 2; i <= top + 1; ++i) f[i] = f_value(i);

  Report report = parallel_sweep(
      "growth.chain", 2, n_max, workers,
      [&](Nat lo, Nat hi, Report& part) {
        for (Nat n = lo; n <= hi; ++n) {
          part.record_checked(4);
          const Int two_f = 2 * f[n];
          const Int rhs = to_int(n) + 8 * to_int(digit_sum(n / 2)) - 6;
          if (two_f > rhs)
            part.add_counterexample({"n=" + std::to_string(n),
                                     rel::kChainPointwise,
                                     "2*f(n)=" + std::to_string(two_f) +
                                         ", rhs=" + std::to_string(rhs)});
          if (betas[n] > f[n + 1])
            part.add_counterexample({"n=" + std::to_string(n), rel::kBetaWindow,
                                     "beta=" + std::to_string(betas[n]) +
                                         ", f(n+1)=" + std::to_string(f[n + 1])});
          if (to_int(n / 2) > betas[n])
            part.add_counterexample({"n=" + std::to_string(n), rel::kBetaFloor,
                                     "beta=" + std::to_string(betas[n])});
          if (betas[n - 1] > betas[n])
            part.add_counterexample(
                {"n=" + std::to_string(n), rel::kBetaMonotone,
                 "beta(n-1)=" + std::to_string(betas[n - 1]) +
                     ", beta(n)=" + std::to_string(betas[n])});
        }
      });
  report.set_checked_range("2 <= n <= " + std::to_string(n_max));

  // The log/sqrt step of the chain fails for small n; report where it
  // starts holding instead of asserting it everywhere.
  Nat last_failure = 0;
  for (Nat n = 2; n <= n_max; ++n)
    if (!log_sqrt_step_holds(n)) last_failure = n;
  const Nat threshold = last_failure == 0 ? 2 : last_failure + 1;
  report.add_note(
      "log/sqrt step 4*log2(n/2)+1 <= 2*sqrt(n)-3 holds for all n >= " +
      std::to_string(threshold) + " up to " + std::to_string(n_max) +
      (last_failure ? " (last failure at n=" + std::to_string(last_failure) + ")"
                    : " (no failures)"));
  return report;
}

Report verify_k_choice(Nat n_max, unsigned workers) {
  if (n_max < 1)
    throw std::invalid_argument("verify_k_choice: n_max must be >= 1");
  Report report = parallel_sweep(
      "growth.k-choice", 1, n_max, workers,
      [](Nat lo, Nat hi, Report& part) {
        for (Nat n = lo; n <= hi; ++n) {
          part.record_checked();
          const Nat k = (n - parity(n)) / 2 + digit_sum(n);
          if (2 * k - digit_sum(k) < n)
            part.add_counterexample({"n=" + std::to_string(n), rel::kKChoice,
                                     "k=" + std::to_string(k)});
        }
      });
  report.set_checked_range("1 <= n <= " + std::to_string(n_max));
  return report;
}

Report verify_section4_claims(Nat k_max) {
  if (k_max < 1)
    throw std::invalid_argument("verify_section4_claims: k_max must be >= 1");
  Report report("section4.plateau");
  report.set_checked_range("k <= " + std::to_string(k_max));

  for (Nat k = 0; k <= k_max; ++k) {
    const Nat base = pow2(k + 1) + 2;
    const Int fb = f_value(base);
    report.record_checked();
    if (fb != f_value(base + 1))
      report.add_counterexample(
          {"k=" + std::to_string(k), rel::kPlateauEqual,
           "f(" + std::to_string(base) + ")=" + std::to_string(fb) + ", f(" +
               std::to_string(base + 1) +
               ")=" + std::to_string(f_value(base + 1))});
    for (Nat n = base + 2; n <= pow2(k + 2); ++n) {
      report.record_checked();
      if (fb >= f_value(n))
        report.add_counterexample(
            {"k=" + std::to_string(k) + ",n=" + std::to_string(n),
             rel::kPlateauMin,
             "f(" + std::to_string(base) + ")=" + std::to_string(fb) + ", f(" +
                 std::to_string(n) + ")=" + std::to_string(f_value(n))});
    }
    report.record_checked();
    if (fb <= to_int(pow2(k) + 1))
      report.add_counterexample({"k=" + std::to_string(k), rel::kPlateauExceeds,
                                 "f=" + std::to_string(fb) + ", 2^k+1=" +
                                     std::to_string(pow2(k) + 1)});
    if (k >= 1) {
      const Nat m = pow2(k + 1) + 1;
      report.record_checked();
      if (beta(m) <= to_int(gamma(m)))
        report.add_counterexample(
            {"k=" + std::to_string(k), rel::kBetaGtGamma,
             "beta(" + std::to_string(m) + ")=" + std::to_string(beta(m)) +
                 ", gamma=" + std::to_string(gamma(m))});
    }
  }

  // Re-derive the beta/gamma comparison for n <= 13.
  std::string beta_row = "beta(1..13):";
  std::string gamma_row = "gamma(1..13):";
  for (Nat n = 1; n <= 13; ++n) {
    beta_row += " " + std::to_string(beta(n));
    gamma_row += " " + std::to_string(gamma(n));
  }
  report.add_note(beta_row);
  report.add_note(gamma_row);

  // Witnesses of strictness beta(n) < f(n+1), capped at n <= 2^k_max.
  const Nat witness_cap = k_max >= 62 ? Nat{1} << 62 : pow2(k_max);
  const std::vector<Int> betas = beta_range(witness_cap);
  Nat count = 0;
  std::string first_witnesses;
  for (Nat n = 1; n <= witness_cap; ++n) {
    if (betas[n] < f_value(n + 1)) {
      ++count;
      if (count <= 20) first_witnesses += " " + std::to_string(n);
    }
  }
  report.add_note("beta(n) < f(n+1) witnesses for n <= " +
                  std::to_string(witness_cap) + ": count=" +
                  std::to_string(count) + ", first:" + first_witnesses);
  return report;
}

Report asymptotic_report(Nat exponent_max) {
  if (exponent_max < 4)
    throw std::invalid_argument("asymptotic_report: exponent_max must be >= 4");
  Report report("growth.asymptotics");
  report.set_checked_range("n = 2^j, j = 4.." + std::to_string(exponent_max));
  for (Nat j = 4; j <= exponent_max; ++j) {
    const Nat n = pow2(j);
    const Int b = beta(n);
    report.record_checked();

    // beta(n)/n - 1/2 = (2 beta(n) - n) / (2n), reduced.
    const Int num = 2 * b - to_int(n);
    const Nat mag = static_cast<Nat>(num < 0 ? -num : num);
    const Nat g = std::gcd(mag, checked_mul(2, n));
    const std::string dev =
        (num < 0 ? "-" : "") + std::to_string(mag / (g ? g : 1)) + "/" +
        std::to_string(2 * n / (g ? g : 1));
    report.add_note("j=" + std::to_string(j) + " n=" + std::to_string(n) +
                    " floor(n/2)=" + std::to_string(n / 2) +
                    " beta=" + std::to_string(b) + " beta_dev=" + dev +
                    " floor_dev=" + ((n & 1) ? "-1/" + std::to_string(2 * n)
                                             : std::string("0")));
    if (mag > 10 * j)
      report.add_counterexample({"j=" + std::to_string(j), rel::kDeviation,
                                 "|2*beta-n|=" + std::to_string(mag)});
  }
  return report;
}

}  // namespace tcseq::growth
