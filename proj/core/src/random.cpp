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

#include "coselect/random.hpp"

namespace coselect {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t tag_of(const char* name) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (; *name != '\0'; ++name) {
    h ^= static_cast<unsigned char>(*name);
    h *= 0x100000001b3ULL;
  }
  return h;
}

SeededRng SeededRng::derive(std::uint64_t tag) const {
  return SeededRng(mix64(base_seed_ ^ mix64(tag + 0x632be59bd9b4e019ULL)));
}

SeededRng SeededRng::derive(std::initializer_list<std::uint64_t> path) const {
  SeededRng out = *this;
  for (auto tag : path) out = out.derive(tag);
  return out;
}

Engine SeededRng::stream(std::uint64_t index) const {
  const std::uint64_t s = derive(index).base_seed();
  std::seed_seq seq{static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Engine(seq);
}

Engine SeededRng::engine() const {
  std::seed_seq seq{static_cast<std::uint32_t>(base_seed_),
                    static_cast<std::uint32_t>(base_seed_ >> 32)};
  return Engine(seq);
}

}  // namespace coselect
