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

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tcseq/arith.hpp"

// Exact arithmetic in the graded-commutative ring
//
//   R = F2[x, y, e] / (x^2 + xy + y^2, x^2 y + x y^2),   |x| = |y| = 1, |e| = 4,
//
// and in its tensor square R (x) R. Elements are stored as sets of
// normal-form monomials x^a y^b e^c with a <= 2, b <= 1; addition over F2 is
// symmetric difference. The rewriting system is
//
//   y^2 -> x^2 + xy,   x^3 -> 0,   x^2 y^2 -> 0,
//
// where the last two rules are consequences of the two relations.
namespace tcseq::f2ring {

// Normal-form monomial. Products of x and y live in degrees 0..3 only; the
// e exponent is unbounded.
struct Monomial {
  std::uint8_t x = 0;  // <= 2
  std::uint8_t y = 0;  // <= 1
  Nat e = 0;

  Nat degree() const { return Nat{x} + Nat{y} + 4 * e; }
  auto operator<=>(const Monomial&) const = default;
  std::string str() const;
};

// Monomial with arbitrary exponents, before rewriting.
struct RawMonomial {
  Nat x = 0;
  Nat y = 0;
  Nat e = 0;
};

// F2 polynomial in normal form: a sorted set of distinct normal monomials.
class Poly {
 public:
  Poly() = default;

  static Poly zero() { return {}; }
  static Poly one() { return monomial({0, 0, 0}); }
  static Poly x() { return monomial({1, 0, 0}); }
  static Poly y() { return monomial({0, 1, 0}); }
  static Poly e() { return monomial({0, 0, 1}); }
  static Poly monomial(Monomial m);

  bool is_zero() const { return terms_.empty(); }
  std::span<const Monomial> terms() const { return terms_; }
  bool operator==(const Poly&) const = default;
  std::string str() const;

  friend Poly operator+(const Poly& a, const Poly& b);  // XOR of term sets
  friend Poly operator*(const Poly& a, const Poly& b);

 private:
  friend Poly normal_form(std::span<const RawMonomial>);
  std::vector<Monomial> terms_;
};

// Rewrites an arbitrary F2 combination of raw monomials into normal form.
// Linear over F2, so duplicate raw monomials cancel in pairs. Idempotent on
// already-normal input.
Poly normal_form(std::span<const RawMonomial> raw);

Poly multiply(const Poly& a, const Poly& b);

// Number of normal-form basis monomials of degree d. Follows the period-4
// pattern 1, 2, 2, 1.
Nat graded_dim(Nat d);

// The normal-form basis monomials of degree d, sorted.
std::vector<Monomial> basis_of_degree(Nat d);

// F2 element of the tensor square: sorted set of ordered monomial pairs.
class TensorPoly {
 public:
  using Term = std::pair<Monomial, Monomial>;

  TensorPoly() = default;
  static TensorPoly zero() { return {}; }
  static TensorPoly monomial(Monomial left, Monomial right);
  static TensorPoly tensor(const Poly& left, const Poly& right);

  bool is_zero() const { return terms_.empty(); }
  std::span<const Term> terms() const { return terms_; }
  bool contains(const Term& t) const;
  bool operator==(const TensorPoly&) const = default;
  std::string str() const;

  friend TensorPoly operator+(const TensorPoly& a, const TensorPoly& b);
  friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b);

 private:
  static TensorPoly from_terms(std::vector<Term> terms);  // sorts and cancels
  std::vector<Term> terms_;
};

TensorPoly tensor_multiply(const TensorPoly& a, const TensorPoly& b);

// Binary exponentiation with renormalization at every step.
TensorPoly tensor_power(const TensorPoly& base, Nat exponent);

// Basis of the degree-4 part of the ideal (x(x)1, y(x)1, 1(x)x, 1(x)y) in
// the tensor square: the ten degree-4 tensor basis monomials minus the two
// pure classes e(x)1 and 1(x)e, so exactly eight elements.
std::vector<TensorPoly> ideal_degree4_basis();

struct CertificateMode {
  enum class Kind { Exhaustive, Random };
  Kind kind = Kind::Exhaustive;
  Nat seed = 0;
  Nat trials = 0;

  static CertificateMode exhaustive() { return {}; }
  static CertificateMode random(Nat seed, Nat trials) {
    return {Kind::Random, seed, trials};
  }
  std::string str() const;
};

// Machine certificate for the non-vanishing computation behind the
// quaternion lower-bound rule. For m = 2^{k-1} - 1 and every tested
// correction term w (a subset of the degree-4 ideal basis, u = e(x)1 +
// 1(x)e + w):
//   coefficient_ok:  the coefficient of e^a (x) e^b in u^m equals
//                    C(m, a) mod 2 for every a + b = m, independent of w;
//   nonvanishing_ok: (x^2 y (x) x^2 y) u^m is nonzero and its terms are
//                    exactly { x^2 y e^a (x) x^2 y e^b : C(m, a) odd }.
struct Q8Certificate {
  Nat k = 0;
  Nat m = 0;  // 2^{k-1} - 1
  CertificateMode mode;
  Nat witnesses_checked = 0;
  bool coefficient_ok = false;
  bool nonvanishing_ok = false;
  std::vector<std::string> failures;

  bool ok() const { return coefficient_ok && nonvanishing_ok; }
  std::string to_json() const;
  static Q8Certificate from_json(const std::string& line);
};

// Runs the certificate for one k >= 2 (the exponent 2^{k-2} in the checked
// coefficient is undefined below that). Exhaustive mode enumerates all 256
// correction subsets; random mode samples `trials` subsets from the given
// seed (mt19937_64, low eight bits per draw).
Q8Certificate q8_certificate(Nat k, CertificateMode mode);

}  // namespace tcseq::f2ring
