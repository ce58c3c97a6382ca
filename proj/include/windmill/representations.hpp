#pragma once

#include <array>
#include <optional>
#include <vector>

#include "windmill/arith.hpp"
#include "windmill/windmill.hpp"

// Representation solvers.  Two independent routes to p = a^2 + ab + b^2
// (a direct quadratic scan and the windmill fixed-point construction) plus
// brute-force oracles for x^2 + 3y^2 and x^2 + 4y^2.

namespace windmill {

// p = a^2 + ab + b^2 with 0 < a <= b.
struct Representation {
  u64 p = 0;
  u64 a = 0;
  u64 b = 0;

  friend constexpr bool operator==(const Representation&, const Representation&) = default;
};

// p = x^2 + coefficient * y^2 with x, y >= 1; coefficient is 3 or 4.
struct TwoSquareForm {
  u64 p = 0;
  u64 x = 0;
  u64 y = 0;
  int coefficient = 0;

  friend constexpr bool operator==(const TwoSquareForm&, const TwoSquareForm&) = default;
};

// True iff p = 3 or p = 1 (mod 3).  Only defined for primes.
inline bool residue_admissible(u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("residue_admissible: p must be prime");
  return p == 3 || p % 3 == 1;
}

struct ResidueEntry {
  int a_mod3 = 0;
  int b_mod3 = 0;
  int value_mod3 = 0;  // (a^2 + ab + b^2) mod 3
};

// a^2 + ab + b^2 mod 3 for all nine residue pairs.  The value is never 2,
// and is 0 exactly when a = b (mod 3); that settles the only-if direction.
inline std::array<ResidueEntry, 9> residue_exhaustion() {
  std::array<ResidueEntry, 9> table{};
  int i = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) table[static_cast<size_t>(i++)] = {a, b, (a * a + a * b + b * b) % 3};
  return table;
}

// Every (a,b) with 0 < a <= b and a^2 + ab + b^2 = p, by scanning a and
// solving the quadratic in b exactly.  Independent of the windmill route;
// an empty list is a valid answer.
inline std::vector<Representation> brute_force_hexagonal(u64 p) {
  if (p < 2) throw std::invalid_argument("brute_force_hexagonal: p must be >= 2");
  std::vector<Representation> out;
  for (u64 a = 1; static_cast<u128>(3) * a * a <= p; ++a) {
    // b = (-a + sqrt(4p - 3a^2)) / 2; b >= a  <=>  s >= 3a.
    u128 disc = static_cast<u128>(4) * p - static_cast<u128>(3) * a * a;
    u128 s;
    if (!perfect_square(disc, s)) continue;
    if (s < 3 * static_cast<u128>(a)) continue;
    if ((s - a) % 2 != 0) continue;
    u64 b = checked_narrow((s - a) / 2);
    out.push_back(Representation{p, a, b});
  }
  return out;
}

// The direct solver: scan x, solve z^2 + 3xz + (3x^2 - p) = 0 for a positive
// integer z, and return (a, b) = (x, x + z).  Minimal-a solution.  p = 3 is
// the one prime with a = b and short-circuits to (1, 1).
inline Representation represent_fast(u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("represent_fast: p must be prime");
  if (p == 3) return Representation{3, 1, 1};
  if (p % 3 != 1) throw not_admissible("represent_fast: p = 2 (mod 3) has no representation");
  for (u64 x = 1; static_cast<u128>(3) * x * x < p; ++x) {
    u128 disc = static_cast<u128>(4) * p - static_cast<u128>(3) * x * x;
    u128 s;
    if (!perfect_square(disc, s)) continue;
    if (s <= 3 * static_cast<u128>(x)) continue;  // z must be >= 1
    u64 z = checked_narrow((s - 3 * static_cast<u128>(x)) / 2);
    return Representation{p, x, checked_add(x, z)};
  }
  throw internal_check_failure("represent_fast: no representation for admissible prime " +
                               std::to_string(p));
}

struct WindmillRepresentation {
  Representation rep;
  Triple witness;        // the g-fixed point in R5 the representation came from
  u64 r5_fixed_count = 0;  // recorded because only oddness is guaranteed
};

namespace detail {

// Extract the representation from an already-enumerated S.  Every g-fixed
// point classified R5 must satisfy y = 3x + z; the canonical-order first one
// yields (a, b) = (x, x + z).
inline WindmillRepresentation windmill_from_S(u64 p, const std::vector<Triple>& s) {
  std::vector<Triple> r5;
  for (const Triple& t : s) {
    if (classify(t) == Region::R5 && apply_g(t) == t) r5.push_back(t);
  }
  if (r5.empty())
    throw internal_check_failure("represent_windmill: no g-fixed point in R5 for p = " +
                                 std::to_string(p));
  for (const Triple& t : r5) {
    if (t.y != checked_add(checked_mul(3, t.x), t.z))
      throw internal_check_failure("represent_windmill: R5 fixed point violates y = 3x + z");
  }
  const Triple& w = r5.front();
  Representation rep{p, w.x, checked_add(w.x, w.z)};
  u128 v = static_cast<u128>(rep.a) * rep.a + static_cast<u128>(rep.a) * rep.b +
           static_cast<u128>(rep.b) * rep.b;
  if (v != p)
    throw internal_check_failure("represent_windmill: extracted pair does not represent p");
  return WindmillRepresentation{rep, w, r5.size()};
}

}  // namespace detail

// The constructive route: enumerate S, take the first g-fixed point in R5.
// Requires a prime p > 3 with p = 1 (mod 3).
inline WindmillRepresentation represent_windmill(u64 p) {
  if (!is_prime(p)) throw std::invalid_argument("represent_windmill: p must be prime");
  if (p <= 3) throw std::invalid_argument("represent_windmill: requires p > 3");
  if (p % 3 != 1) throw not_admissible("represent_windmill: p = 2 (mod 3) has no representation");
  return detail::windmill_from_S(p, enumerate_S(p));
}

// All positive (x, y) with x^2 + k y^2 = p, ascending y.  k is 3 or 4.
inline std::vector<TwoSquareForm> x2_plus_ky2(u64 p, int k) {
  if (k != 3 && k != 4) throw std::invalid_argument("x2_plus_ky2: k must be 3 or 4");
  if (p < 2) throw std::invalid_argument("x2_plus_ky2: p must be >= 2");
  std::vector<TwoSquareForm> out;
  for (u64 y = 1; static_cast<u128>(k) * y * y < p; ++y) {
    u64 r = p - static_cast<u64>(k) * y * y;
    u64 x = isqrt(r);
    if (x >= 1 && x * x == r) out.push_back(TwoSquareForm{p, x, y, k});
  }
  return out;
}

}  // namespace windmill
