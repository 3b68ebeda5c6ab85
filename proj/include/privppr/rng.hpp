// Copyright 2026 The PrivPPR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVPPR_RNG_HPP_
#define PRIVPPR_RNG_HPP_

#include <array>
#include <cstdint>
#include <string_view>

namespace privppr {

// Standard 64-bit multiply-xorshift finalizer (splitmix64). Also used as the
// node hash for embedding buckets/signs, so the constants are part of the
// on-disk format contract (see README).
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

/// Deterministic random stream addressed by (seed, stream id).
///
/// Every randomized operation takes an explicit RngStream; identical
/// (seed, stream) always replays the identical draw sequence, independent of
/// platform or standard library. Streams for independent work items are
/// derived from a master seed plus an (operation tag, source node, trial)
/// triple, so adding work items never perturbs existing ones.
///
/// Generator: xoshiro256** seeded via splitmix64.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream);

  /// Stream derivation used throughout the CLI and test harnesses.
  static RngStream derive(std::uint64_t seed, std::string_view tag,
                          std::uint64_t source = 0, std::uint64_t trial = 0);

  std::uint64_t next_u64();

  /// Uniform double in the open interval (0, 1).
  double next_unit_open();

  /// Uniform integer in [0, bound). bound must be > 0. Unbiased (rejection).
  std::uint64_t next_below(std::uint64_t bound);

  /// True with probability prob (prob clamped to [0, 1] behaviour by <).
  bool next_bernoulli(double prob);

 private:
  std::array<std::uint64_t, 4> state_;
};

}  // namespace privppr

#endif  // PRIVPPR_RNG_HPP_
