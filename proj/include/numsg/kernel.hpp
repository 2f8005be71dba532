#pragma once

// Byte-lane update at the heart of son construction:
//
//   dst[i] <- dst[i] - (src[i] != 0 ? 1 : 0)   for i in [0, len)
//
// The vector path is the compare / and-not / subtract sequence
// (pcmpeqb, pandn, psubb) widened to whatever the target offers.
// Loads and stores are unaligned; callers pass arbitrary offsets.

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#if defined(__AVX2__)
#include <immintrin.h>
#elif defined(__SSE2__) || defined(_M_X64)
#include <emmintrin.h>
#elif defined(__ARM_NEON)
#include <arm_neon.h>
#endif

namespace numsg::kernel {

using lane_t = std::uint8_t;

namespace detail {

inline bool disjoint(const lane_t* src, const lane_t* dst, std::size_t len) {
  return src + len <= dst || dst + len <= src;
}

inline void decrement_scalar(const lane_t* src, lane_t* dst, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (src[i] != 0) {
      assert(dst[i] != 0 && "lane would wrap below zero");
      --dst[i];
    }
  }
}

inline void decrement_vector(const lane_t* src, lane_t* dst, std::size_t len) {
  std::size_t i = 0;
#if defined(__AVX2__)
  {
    const __m256i zero = _mm256_setzero_si256();
    const __m256i ones = _mm256_set1_epi8(1);
    for (; i + 32 <= len; i += 32) {
      __m256i t = _mm256_cmpeq_epi8(
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i)), zero);
      t = _mm256_andnot_si256(t, ones);
      __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_sub_epi8(d, t));
    }
  }
#endif
#if defined(__SSE2__) || defined(_M_X64)
  {
    const __m128i zero = _mm_setzero_si128();
    const __m128i ones = _mm_set1_epi8(1);
    for (; i + 16 <= len; i += 16) {
      __m128i t = _mm_cmpeq_epi8(
          _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i)), zero);
      t = _mm_andnot_si128(t, ones);
      __m128i d = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + i));
      _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i), _mm_sub_epi8(d, t));
    }
  }
#elif defined(__ARM_NEON)
  {
    const uint8x16_t zero = vdupq_n_u8(0);
    const uint8x16_t ones = vdupq_n_u8(1);
    for (; i + 16 <= len; i += 16) {
      uint8x16_t t = vceqq_u8(vld1q_u8(src + i), zero);
      t = vbicq_u8(ones, t);
      vst1q_u8(dst + i, vsubq_u8(vld1q_u8(dst + i), t));
    }
  }
#endif
  decrement_scalar(src + i, dst + i, len - i);
}

}  // namespace detail

/// Name of the instruction set used by the vector kernel in this build.
constexpr std::string_view vector_isa() {
#if defined(__AVX2__)
  return "avx2";
#elif defined(__SSE2__) || defined(_M_X64)
  return "sse2";
#elif defined(__ARM_NEON)
  return "neon";
#else
  return "scalar";
#endif
}

/// Widest block the vector kernel processes per step (1 when it falls back to scalar).
constexpr std::size_t vector_width() {
#if defined(__AVX2__)
  return 32;
#elif defined(__SSE2__) || defined(_M_X64) || defined(__ARM_NEON)
  return 16;
#else
  return 1;
#endif
}

/// Reference kernel. Both spans must hold at least `len` lanes and must not
/// overlap. Lanes at index >= len are left untouched.
inline void decrement_where_nonzero_scalar(std::span<const lane_t> src, std::span<lane_t> dst,
                                           std::size_t len) {
  assert(src.size() >= len && dst.size() >= len);
  assert(detail::disjoint(src.data(), dst.data(), len));
  detail::decrement_scalar(src.data(), dst.data(), len);
}

/// Drop-in replacement for the scalar kernel; bit-identical results.
inline void decrement_where_nonzero_vector(std::span<const lane_t> src, std::span<lane_t> dst,
                                           std::size_t len) {
  assert(src.size() >= len && dst.size() >= len);
  assert(detail::disjoint(src.data(), dst.data(), len));
  detail::decrement_vector(src.data(), dst.data(), len);
}

// Kernel policies used to instantiate son construction and traversals.

struct ScalarKernel {
  static constexpr std::string_view name = "scalar";
  static void apply(const lane_t* src, lane_t* dst, std::size_t len) {
    detail::decrement_scalar(src, dst, len);
  }
};

struct VectorKernel {
  static constexpr std::string_view name = "vector";
  static void apply(const lane_t* src, lane_t* dst, std::size_t len) {
    detail::decrement_vector(src, dst, len);
  }
};

}  // namespace numsg::kernel
