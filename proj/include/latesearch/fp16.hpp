// Copyright 2026 The latesearch authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace latesearch {

// Stored embeddings use a 16-bit float layout: 1 sign bit, 5 exponent bits,
// 10 mantissa bits, little-endian on disk. Values are widened to 32-bit for
// all arithmetic; narrowing rounds to nearest, ties to even.

inline std::uint16_t fp32_to_fp16(float f) {
  const std::uint32_t x = std::bit_cast<std::uint32_t>(f);
  const std::uint32_t sign = (x >> 16) & 0x8000u;
  const std::uint32_t exp = (x >> 23) & 0xFFu;
  std::uint32_t man = x & 0x7FFFFFu;

  if (exp == 0xFFu) {  // inf / NaN, keep a quiet-bit for NaN payloads
    return static_cast<std::uint16_t>(
        sign | 0x7C00u | (man ? (0x200u | (man >> 13)) : 0u));
  }
  const int e = static_cast<int>(exp) - 127 + 15;
  if (e >= 0x1F) {  // overflow
    return static_cast<std::uint16_t>(sign | 0x7C00u);
  }
  if (e <= 0) {  // subnormal or zero
    if (e < -10) return static_cast<std::uint16_t>(sign);
    man |= 0x800000u;
    const std::uint32_t shift = static_cast<std::uint32_t>(14 - e);
    std::uint32_t half = man >> shift;
    const std::uint32_t rem = man & ((1u << shift) - 1u);
    const std::uint32_t halfway = 1u << (shift - 1u);
    if (rem > halfway || (rem == halfway && (half & 1u))) ++half;
    return static_cast<std::uint16_t>(sign | half);
  }
  std::uint16_t h = static_cast<std::uint16_t>(
      sign | (static_cast<std::uint32_t>(e) << 10) | (man >> 13));
  const std::uint32_t rem = man & 0x1FFFu;
  // Mantissa carry may roll into the exponent; that is the correct rounding.
  if (rem > 0x1000u || (rem == 0x1000u && (h & 1u))) ++h;
  return h;
}

inline float fp16_to_fp32(std::uint16_t h) {
  const std::uint32_t sign = static_cast<std::uint32_t>(h & 0x8000u) << 16;
  const std::uint32_t exp = (h >> 10) & 0x1Fu;
  std::uint32_t man = h & 0x3FFu;
  std::uint32_t bits;
  if (exp == 0) {
    if (man == 0) {
      bits = sign;
    } else {  // subnormal: value = man * 2^-24
      std::uint32_t k = 0;
      while (!(man & 0x400u)) {
        man <<= 1;
        ++k;
      }
      bits = sign | ((113u - k) << 23) | ((man & 0x3FFu) << 13);
    }
  } else if (exp == 0x1Fu) {
    bits = sign | 0x7F800000u | (man << 13);
  } else {
    bits = sign | ((exp - 15u + 127u) << 23) | (man << 13);
  }
  return std::bit_cast<float>(bits);
}

inline void fp32_to_fp16_row(const float* src, std::uint16_t* dst,
                             std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = fp32_to_fp16(src[i]);
}

inline void fp16_to_fp32_row(const std::uint16_t* src, float* dst,
                             std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = fp16_to_fp32(src[i]);
}

}  // namespace latesearch
