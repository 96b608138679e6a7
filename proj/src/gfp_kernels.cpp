#include "golodtight/gfp_kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "golodtight/field.hpp"

namespace golodtight {

namespace {

const GfpKernels kScalar{detail::gfp_axpy_scalar, detail::gfp_scale_scalar, "scalar"};

#if defined(__x86_64__) || defined(_M_X64)
const GfpKernels kAvx2{detail::gfp_axpy_avx2, detail::gfp_scale_avx2, "avx2"};

bool cpu_has_avx2() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}
#endif

const GfpKernels* select(SimdLevel level) {
#if defined(__x86_64__) || defined(_M_X64)
  switch (level) {
    case SimdLevel::scalar: return &kScalar;
    case SimdLevel::avx2: return cpu_has_avx2() ? &kAvx2 : &kScalar;
    case SimdLevel::auto_detect: break;
  }
  if (const char* env = std::getenv("GOLODTIGHT_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return &kScalar;
    if (std::strcmp(env, "avx2") == 0) return cpu_has_avx2() ? &kAvx2 : &kScalar;
  }
  return cpu_has_avx2() ? &kAvx2 : &kScalar;
#else
  (void)level;
  return &kScalar;
#endif
}

const GfpKernels* g_active = nullptr;

}  // namespace

const GfpKernels& gfp_kernels() {
  if (!g_active) g_active = select(SimdLevel::auto_detect);
  return *g_active;
}

void force_simd_level(SimdLevel level) { g_active = select(level); }

const char* active_simd_name() { return gfp_kernels().name; }

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n == d) return true;
    if (n % d == 0) return false;
  }
  // deterministic Miller-Rabin for 32-bit inputs
  std::uint32_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  auto mulmod = [&](std::uint64_t a, std::uint64_t b) { return a * b % n; };
  auto powmod = [&](std::uint64_t a, std::uint32_t e) {
    std::uint64_t acc = 1 % n;
    while (e) {
      if (e & 1) acc = mulmod(acc, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return acc;
  };
  for (std::uint32_t a : {2u, 7u, 61u}) {
    if (a % n == 0) continue;
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r && witness; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) witness = false;
    }
    if (witness) return false;
  }
  return true;
}

GfpOps::Elem GfpOps::inv(Elem a) const {
  if (a == 0) fail(Errc::internal, "inverse of zero in F_p");
  // extended Euclid on (a, p)
  long long t = 0, new_t = 1;
  long long r = p, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<Elem>(t);
}

}  // namespace golodtight
