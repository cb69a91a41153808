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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tcseq {

// All core computations are exact. Nat/Int are fixed 64-bit words; any
// operation that could wrap goes through a checked helper and fails loudly.
using Nat = std::uint64_t;
using Int = std::int64_t;

inline Nat checked_add(Nat a, Nat b) {
  Nat r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("Nat overflow: " + std::to_string(a) + " + " +
                              std::to_string(b));
  return r;
}

inline Nat checked_sub(Nat a, Nat b) {
  if (b > a)
    throw std::underflow_error("Nat underflow: " + std::to_string(a) + " - " +
                               std::to_string(b));
  return a - b;
}

inline Nat checked_mul(Nat a, Nat b) {
  Nat r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("Nat overflow: " + std::to_string(a) + " * " +
                              std::to_string(b));
  return r;
}

// 2^e as Nat; rejects e >= 64 instead of shifting into the void.
inline Nat pow2(Nat e) {
  if (e >= 64) throw std::overflow_error("pow2 exponent too large: " + std::to_string(e));
  return Nat{1} << e;
}

// Floor square root, digit-by-digit; no floating point.
inline Nat isqrt(Nat n) {
  Nat root = 0;
  Nat bit = Nat{1} << 62;
  while (bit > n) bit >>= 2;
  while (bit != 0) {
    if (n >= root + bit) {
      n -= root + bit;
      root = (root >> 1) + bit;
    } else {
      root >>= 1;
    }
    bit >>= 2;
  }
  return root;
}

inline Int to_int(Nat n) {
  if (n > static_cast<Nat>(INT64_MAX))
    throw std::overflow_error("Nat does not fit Int: " + std::to_string(n));
  return static_cast<Int>(n);
}

}  // namespace tcseq
