#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "golodtight/errors.hpp"

namespace golodtight {

bool is_prime_u32(std::uint32_t n);

/// Coefficient field: the rationals or a prime field F_p with p < 2^31.
struct FieldSpec {
  enum class Kind { rational, prime };
  Kind kind = Kind::rational;
  std::uint32_t p = 0;

  static FieldSpec rational() { return FieldSpec{Kind::rational, 0}; }
  static FieldSpec prime(std::uint32_t p) {
    if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
      fail(Errc::parse_error, "not an odd-word prime field characteristic: " + std::to_string(p));
    return FieldSpec{Kind::prime, p};
  }

  bool is_rational() const { return kind == Kind::rational; }
  std::string name() const { return is_rational() ? "Q" : "F" + std::to_string(p); }
  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
};

/// Arithmetic in F_p on reduced uint32 values.  Row-level bulk operations go
/// through the dispatched kernels in gfp_kernels.hpp, not through these.
struct GfpOps {
  using Elem = std::uint32_t;
  std::uint32_t p;

  Elem zero() const { return 0; }
  Elem one() const { return p > 1 ? 1 : 0; }
  bool is_zero(Elem a) const { return a == 0; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;  // both < p < 2^31, no overflow
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p);
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem from_long(long long v) const {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<Elem>(r);
  }
  bool equal(Elem a, Elem b) const { return a == b; }
};

/// Exact rational arithmetic; mpq_class keeps values canonical (lowest terms).
struct RationalOps {
  using Elem = mpq_class;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return Elem(1) / a; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem from_long(long long v) const { return Elem(static_cast<long>(v)); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
};

/// Run f with the concrete ops for the given field.
template <class F>
decltype(auto) with_field(const FieldSpec& fs, F&& f) {
  if (fs.is_rational()) return std::forward<F>(f)(RationalOps{});
  return std::forward<F>(f)(GfpOps{fs.p});
}

}  // namespace golodtight
