#include "golodtight/gfp_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace golodtight::detail {

// Shoup multiplication: with cshoup = floor(c * 2^32 / p) and q = mulhi32(cshoup, x),
// c*x - q*p lies in [0, 2p) for any x < 2^32, c < p < 2^31.  One vpminud folds
// the surplus p; everything stays in 32-bit lanes.

namespace {

__attribute__((target("avx2"))) inline __m256i mulhi_u32(__m256i a, __m256i b) {
  __m256i even = _mm256_mul_epu32(a, b);
  __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
  return _mm256_blend_epi32(_mm256_srli_epi64(even, 32), odd, 0xAA);
}

__attribute__((target("avx2"))) inline __m256i shoup_mul(__m256i x, __m256i cv, __m256i cshoupv,
                                                         __m256i pv) {
  __m256i q = mulhi_u32(cshoupv, x);
  __m256i t = _mm256_sub_epi32(_mm256_mullo_epi32(cv, x), _mm256_mullo_epi32(q, pv));
  return _mm256_min_epu32(t, _mm256_sub_epi32(t, pv));
}

}  // namespace

__attribute__((target("avx2"))) void gfp_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src,
                                                   std::size_t n, std::uint32_t c, std::uint32_t p) {
  if (c == 0) return;
  const std::uint32_t cshoup =
      static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i cshoupv = _mm256_set1_epi32(static_cast<int>(cshoup));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
    __m256i t = shoup_mul(x, cv, cshoupv, pv);
    __m256i s = _mm256_add_epi32(d, t);
    s = _mm256_min_epu32(s, _mm256_sub_epi32(s, pv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), s);
  }
  for (; i < n; ++i) {
    std::uint64_t t = static_cast<std::uint64_t>(c) * src[i] + dst[i];
    dst[i] = static_cast<std::uint32_t>(t % p);
  }
}

__attribute__((target("avx2"))) void gfp_scale_avx2(std::uint32_t* dst, std::size_t n,
                                                    std::uint32_t c, std::uint32_t p) {
  const std::uint32_t cshoup =
      static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
  const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
  const __m256i cshoupv = _mm256_set1_epi32(static_cast<int>(cshoup));
  const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), shoup_mul(d, cv, cshoupv, pv));
  }
  for (; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * dst[i] % p);
}

}  // namespace golodtight::detail

#endif  // x86_64
