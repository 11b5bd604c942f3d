// Copyright 2026 The coselect Authors.
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
#include <initializer_list>
#include <random>

namespace coselect {

using Engine = std::mt19937_64;

/// Base seed plus a deterministic rule for deriving independent streams. The same
/// (base seed, stream path) always yields the same engine state, independent of thread
/// scheduling.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t base_seed = 0) : base_seed_(base_seed) {}

  std::uint64_t base_seed() const noexcept { return base_seed_; }

  /// Child seed source for a labelled sub-task (e.g. stage, model).
  SeededRng derive(std::uint64_t tag) const;
  SeededRng derive(std::initializer_list<std::uint64_t> path) const;

  /// Engine for replicate `index`.
  Engine stream(std::uint64_t index) const;

  /// Engine seeded from the base seed alone.
  Engine engine() const;

 private:
  std::uint64_t base_seed_;
};

/// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Stable 64-bit tag for a string (FNV-1a), for deriving streams from names.
std::uint64_t tag_of(const char* name) noexcept;

}  // namespace coselect
