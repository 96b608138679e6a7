#pragma once

#include <cstddef>
#include <cstdint>

namespace golodtight {

/// Row kernels for dense elimination over F_p (p < 2^31, entries reduced).
/// The scalar variants are the reference semantics; SIMD variants must match
/// them bit for bit and are selected once at startup (overridable through
/// GOLODTIGHT_SIMD=scalar|avx2 or force_simd_level, e.g. in equivalence tests).
struct GfpKernels {
  // dst[i] = (dst[i] + c * src[i]) mod p
  void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
               std::uint32_t p);
  // dst[i] = (c * dst[i]) mod p
  void (*scale)(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p);
  const char* name;
};

enum class SimdLevel { auto_detect, scalar, avx2 };

const GfpKernels& gfp_kernels();
void force_simd_level(SimdLevel level);
const char* active_simd_name();

namespace detail {
void gfp_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                     std::uint32_t p);
void gfp_scale_scalar(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p);
#if defined(__x86_64__) || defined(_M_X64)
void gfp_axpy_avx2(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                   std::uint32_t p);
void gfp_scale_avx2(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p);
#endif
}  // namespace detail

}  // namespace golodtight
