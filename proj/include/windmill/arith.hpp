#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "windmill/errors.hpp"

namespace windmill {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

inline constexpr u64 kU64Max = std::numeric_limits<u64>::max();

inline u64 checked_add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("u64 addition overflow");
  return r;
}

inline u64 checked_mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("u64 multiplication overflow");
  return r;
}

inline u64 checked_narrow(u128 v) {
  if (v > kU64Max) throw overflow_error("value exceeds 64 bits");
  return static_cast<u64>(v);
}

// floor(sqrt(n)), exact.  Double seed, then integer fix-up.
inline u64 isqrt(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

// floor(sqrt(n)) for widened intermediates (n < 2^126).
inline u128 isqrt128(u128 n) {
  if (n == 0) return 0;
  u128 r = static_cast<u128>(sqrtl(static_cast<long double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// If n is a perfect square, stores sqrt(n) in root and returns true.
inline bool perfect_square(u128 n, u128& root) {
  root = isqrt128(n);
  return root * root == n;
}

namespace detail {

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Strong probable-prime test to base a; n odd, n > 2, n-1 = d * 2^s.
inline bool sprp(u64 n, u64 a, u64 d, int s) {
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace detail

// Deterministic Miller-Rabin over the full 64-bit range.  The witness set
// {2,...,37} is exact for every n < 3.3 * 10^24, so the answer is never
// probabilistic.
inline bool is_prime(u64 n) {
  constexpr u64 witnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  if (n < 2) return false;
  for (u64 w : witnesses) {
    if (n % w == 0) return n == w;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 w : witnesses) {
    if (!detail::sprp(n, w, d, s)) return false;
  }
  return true;
}

// All positive divisors of n, ascending.  Trial division up to sqrt(n);
// n is at most a desk-scale prime here, so no factor-based enumeration.
inline std::vector<u64> divisors(u64 n) {
  if (n == 0) throw std::invalid_argument("divisors: n must be >= 1");
  std::vector<u64> small, large;
  for (u64 d = 1; d <= n / d; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Inclusive range of candidate primes.
struct PrimeRange {
  u64 lo;
  u64 hi;
  PrimeRange(u64 lo_, u64 hi_) : lo(lo_), hi(hi_) {
    if (lo > hi) throw std::invalid_argument("PrimeRange: lo > hi");
  }
};

// Prime enumeration over sub-intervals of [2, hi].  When sqrt(hi) is small
// enough to sieve we run a segmented sieve; for astronomically large bounds
// the fallback tests candidates individually with is_prime (slower but still
// exact).  const and shareable across threads.
class SegmentedSieve {
 public:
  explicit SegmentedSieve(u64 hi) {
    u64 root = isqrt(hi);
    if (root <= kMaxBasePrime) {
      sieved_ = true;
      base_ = small_primes(root);
    }
  }

  void collect(u64 lo, u64 hi, std::vector<u64>& out) const {
    if (lo > hi) return;
    if (lo < 2) lo = 2;
    if (!sieved_) {
      if (lo == 2) out.push_back(2);
      for (u64 n = lo | 1; n >= lo && n <= hi; n += 2) {
        if (is_prime(n)) out.push_back(n);
        if (n > kU64Max - 2) break;
      }
      return;
    }
    std::vector<bool> composite(hi - lo + 1, false);
    for (u64 q : base_) {
      u64 start = q * q;
      if (start > hi) break;
      if (start < lo) start = ((lo + q - 1) / q) * q;
      for (u64 m = start; m <= hi; m += q) {
        composite[m - lo] = true;
        if (m > kU64Max - q) break;
      }
    }
    for (u64 n = lo; n <= hi; ++n) {
      if (!composite[n - lo]) out.push_back(n);
      if (n == kU64Max) break;
    }
  }

 private:
  static constexpr u64 kMaxBasePrime = 1ull << 26;

  static std::vector<u64> small_primes(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 m = i * i; m <= limit; m += i) composite[m] = true;
    }
    return out;
  }

  bool sieved_ = false;
  std::vector<u64> base_;
};

template <typename Fn>
void for_each_prime(u64 lo, u64 hi, Fn&& fn) {
  if (lo > hi) return;
  SegmentedSieve sieve(hi);
  constexpr u64 kSegment = 1ull << 16;
  std::vector<u64> buf;
  u64 seg_lo = lo;
  for (;;) {
    u64 seg_hi = (hi - seg_lo >= kSegment) ? seg_lo + kSegment - 1 : hi;
    buf.clear();
    sieve.collect(seg_lo, seg_hi, buf);
    for (u64 p : buf) fn(p);
    if (seg_hi >= hi) break;
    seg_lo = seg_hi + 1;
  }
}

// Exactly the primes in [r.lo, r.hi], ascending.
inline std::vector<u64> primes_in_range(const PrimeRange& r) {
  std::vector<u64> out;
  for_each_prime(r.lo, r.hi, [&](u64 p) { out.push_back(p); });
  return out;
}

}  // namespace windmill
