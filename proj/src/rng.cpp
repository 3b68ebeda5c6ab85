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

#include "privppr/rng.hpp"

namespace privppr {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

// FNV-1a over the tag bytes followed by the little-endian bytes of a and b.
std::uint64_t stream_id(std::string_view tag, std::uint64_t a,
                        std::uint64_t b) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto eat = [&h](std::uint64_t byte) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  };
  for (char c : tag) eat(static_cast<unsigned char>(c));
  for (int i = 0; i < 8; ++i) eat((a >> (8 * i)) & 0xff);
  for (int i = 0; i < 8; ++i) eat((b >> (8 * i)) & 0xff);
  return h;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 walk from (seed, stream); guarantees a nonzero xoshiro state.
  std::uint64_t x = mix64(seed + kGolden) ^ mix64(stream + 2 * kGolden);
  for (auto& word : state_) {
    x += kGolden;
    word = mix64(x);
  }
}

RngStream RngStream::derive(std::uint64_t seed, std::string_view tag,
                            std::uint64_t source, std::uint64_t trial) {
  return RngStream(seed, stream_id(tag, source, trial));
}

std::uint64_t RngStream::next_u64() {
  // xoshiro256**
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double RngStream::next_unit_open() {
  // 53-bit mantissa; reject the single lattice point mapping to 0.0.
  for (;;) {
    const std::uint64_t bits = next_u64() >> 11;
    if (bits != 0) return static_cast<double>(bits) * 0x1.0p-53;
  }
}

std::uint64_t RngStream::next_below(std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  for (;;) {
    const std::uint64_t x = next_u64();
    if (x < limit) return x % bound;
  }
}

bool RngStream::next_bernoulli(double prob) {
  return next_unit_open() < prob;
}

}  // namespace privppr
