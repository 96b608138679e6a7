#include "golodtight/gfp_kernels.hpp"

namespace golodtight::detail {

void gfp_axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                     std::uint32_t p) {
  if (c == 0) return;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t t = static_cast<std::uint64_t>(c) * src[i] + dst[i];
    dst[i] = static_cast<std::uint32_t>(t % p);
  }
}

void gfp_scale_scalar(std::uint32_t* dst, std::size_t n, std::uint32_t c, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * dst[i] % p);
}

}  // namespace golodtight::detail
