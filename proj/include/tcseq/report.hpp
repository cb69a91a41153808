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
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "tcseq/arith.hpp"

namespace tcseq {

// How a sweep covered its index range.
struct SweepStrategy {
  enum class Kind { Full, Sampled };
  Kind kind = Kind::Full;
  Nat seed = 0;
  Nat count = 0;

  static SweepStrategy full() { return {}; }
  static SweepStrategy sampled(Nat seed, Nat count) {
    return {Kind::Sampled, seed, count};
  }
  std::string str() const {
    if (kind == Kind::Full) return "full";
    return "sampled(seed=" + std::to_string(seed) +
           ",count=" + std::to_string(count) + ")";
  }
};

struct Counterexample {
  std::string input;     // offending input, e.g. "n=8"
  std::string relation;  // the relation that was expected to hold
  std::string observed;  // what was computed instead
};

// Outcome of one verification sweep. passed() is true exactly when no
// counterexample was found. A bounded number of counterexamples is stored
// verbatim; the rest are only counted, so merging stays cheap.
class Report {
 public:
  static constexpr std::size_t kMaxStored = 32;

  explicit Report(std::string claim_id,
                  SweepStrategy strategy = SweepStrategy::full())
      : claim_id_(std::move(claim_id)), strategy_(strategy) {}

  const std::string& claim_id() const { return claim_id_; }
  const SweepStrategy& strategy() const { return strategy_; }
  const std::string& checked_range() const { return checked_range_; }
  void set_checked_range(std::string range) { checked_range_ = std::move(range); }

  void record_checked(Nat n = 1) { checked_ += n; }
  Nat checked() const { return checked_; }

  void add_counterexample(Counterexample ce) {
    ++failure_count_;
    if (counterexamples_.size() < kMaxStored)
      counterexamples_.push_back(std::move(ce));
  }
  Nat failure_count() const { return failure_count_; }
  const std::vector<Counterexample>& counterexamples() const {
    return counterexamples_;
  }

  void add_note(std::string note) { notes_.push_back(std::move(note)); }
  const std::vector<std::string>& notes() const { return notes_; }

  bool passed() const { return failure_count_ == 0; }

  // Associative merge of partial sweeps over disjoint chunks of one claim.
  void merge(const Report& other) {
    checked_ += other.checked_;
    failure_count_ += other.failure_count_;
    for (const auto& ce : other.counterexamples_) {
      if (counterexamples_.size() >= kMaxStored) break;
      counterexamples_.push_back(ce);
    }
    for (const auto& note : other.notes_) notes_.push_back(note);
  }

 private:
  std::string claim_id_;
  SweepStrategy strategy_;
  std::string checked_range_;
  Nat checked_ = 0;
  Nat failure_count_ = 0;
  std::vector<Counterexample> counterexamples_;
  std::vector<std::string> notes_;
};

// Runs body(lo, hi, part) on [lo, hi] split into contiguous chunks, one per
// worker, and merges the partial reports in index order.
template <class Body>
Report parallel_sweep(const std::string& claim_id, Nat lo, Nat hi,
                      unsigned workers, const Body& body,
                      SweepStrategy strategy = SweepStrategy::full()) {
  Report merged(claim_id, strategy);
  if (hi < lo) return merged;
  if (workers <= 1) {
    body(lo, hi, merged);
    return merged;
  }
  const Nat span = hi - lo + 1;
  const Nat chunks = std::min<Nat>(workers, span);
  std::vector<Report> parts;
  parts.reserve(chunks);
  for (Nat c = 0; c < chunks; ++c) parts.emplace_back(claim_id, strategy);
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (Nat c = 0; c < chunks; ++c) {
    const Nat a = lo + span * c / chunks;
    const Nat b = lo + span * (c + 1) / chunks - 1;
    threads.emplace_back([&, a, b, c] { body(a, b, parts[c]); });
  }
  for (auto& t : threads) t.join();
  for (const auto& part : parts) merged.merge(part);
  return merged;
}

}  // namespace tcseq
