#include "golodtight/matrix.hpp"

#include <limits>

namespace golodtight {

namespace {

struct Int64Overflow {};

// Fraction-free elimination step t = (piv*x - a*b) / prev, exact by the
// Sylvester determinant identity.  The int64 instantiation signals overflow
// instead of wrapping.
struct CheckedInt64 {
  long long v;
  static CheckedInt64 from_ll(long long x) { return {x}; }
  bool is_zero() const { return v == 0; }
  static CheckedInt64 bareiss_step(CheckedInt64 piv, CheckedInt64 x, CheckedInt64 a, CheckedInt64 b,
                                   CheckedInt64 prev) {
    __int128 num = static_cast<__int128>(piv.v) * x.v - static_cast<__int128>(a.v) * b.v;
    __int128 q = num / prev.v;
    if (q > std::numeric_limits<long long>::max() || q < std::numeric_limits<long long>::min())
      throw Int64Overflow{};
    return {static_cast<long long>(q)};
  }
};

struct BigInt {
  mpz_class v;
  static BigInt from_ll(long long x) { return {mpz_class(static_cast<long>(x))}; }
  bool is_zero() const { return sgn(v) == 0; }
  static BigInt bareiss_step(const BigInt& piv, const BigInt& x, const BigInt& a, const BigInt& b,
                             const BigInt& prev) {
    mpz_class num = piv.v * x.v - a.v * b.v;
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.v.get_mpz_t());
    return {std::move(q)};
  }
};

template <class Int>
int bareiss_rank(const IntMatrix& m) {
  std::vector<Int> a;
  a.reserve(m.a.size());
  for (long long x : m.a) a.push_back(Int::from_ll(x));
  auto at = [&](int i, int j) -> Int& { return a[static_cast<std::size_t>(i) * m.cols + j]; };

  int r = 0;
  Int prev = Int::from_ll(1);
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pr = -1;
    for (int i = r; i < m.rows; ++i)
      if (!at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols; ++j) std::swap(at(r, j), at(pr, j));
    for (int i = r + 1; i < m.rows; ++i) {
      for (int j = c + 1; j < m.cols; ++j)
        at(i, j) = Int::bareiss_step(at(r, c), at(i, j), at(i, c), at(r, j), prev);
      at(i, c) = Int::from_ll(0);
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

}  // namespace

int rank_over_rationals(const IntMatrix& m) {
  try {
    return bareiss_rank<CheckedInt64>(m);
  } catch (const Int64Overflow&) {
    return bareiss_rank<BigInt>(m);
  }
}

int rank_over(const IntMatrix& m, const FieldSpec& field) {
  if (field.is_rational()) return rank_over_rationals(m);
  return rank(to_field_matrix(m, GfpOps{field.p}));
}

}  // namespace golodtight
