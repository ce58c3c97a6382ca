#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "windmill/arith.hpp"
#include "windmill/matrix.hpp"
#include "windmill/triple.hpp"

// The involution machinery: enumerate S = {(x,y,z) in N^3 : 3x^2 + yz = p},
// split it into ten regions, and act on it by the swap g0(x,y,z) = (x,z,y)
// and by the piecewise-linear involution g whose piece on region r is the
// integer matrix T_r.  Everything here is pure and value-based.

namespace windmill {

// All of S(p) in canonical order: ascending x, then ascending y.  For each
// x with 3x^2 < p, every divisor y of m = p - 3x^2 contributes (x, y, m/y).
// p does not have to be prime; composites serve as negative controls.
inline std::vector<Triple> enumerate_S(u64 p) {
  if (p < 2) throw std::invalid_argument("enumerate_S: p must be >= 2");
  std::vector<Triple> out;
  for (u64 x = 1; static_cast<u128>(3) * x * x < p; ++x) {
    u64 m = p - 3 * x * x;
    for (u64 y : divisors(m)) out.push_back(Triple{x, y, m / y});
  }
  return out;
}

// Which region a triple belongs to.  Precedence: x = y is R10 and y < x is
// R9 before the R1..R8 chain is consulted; for x < y the chain's upper
// bounds are tested in order, so each lower bound is the negation of the
// previous test and the first hit is the unique region.  All comparisons are
// signed (y - 3z and friends go negative all the time) and widened.
inline Region classify(const Triple& t) {
  if (t.x < 1 || t.y < 1 || t.z < 1)
    throw classification_error("classify: coordinates must be positive");
  if (t.x == t.y) return Region::R10;
  if (t.y < t.x) return Region::R9;
  const i128 x = t.x, y = t.y, z = t.z;
  if (6 * x <= y - 3 * z) return Region::R1;
  if (30 * x <= 6 * (y - 2 * z)) return Region::R2;
  if (60 * x <= 5 * (3 * y - 4 * z)) return Region::R3;
  if (84 * x <= 24 * (y - z)) return Region::R4;
  if (84 * x <= 7 * (4 * y - 3 * z)) return Region::R5;
  if (60 * x <= 12 * (2 * y - z)) return Region::R6;
  if (30 * x <= 5 * (3 * y - z)) return Region::R7;
  if (6 * x <= 6 * y) return Region::R8;
  throw classification_error("classify: no region matches (" + std::to_string(t.x) + "," +
                             std::to_string(t.y) + "," + std::to_string(t.z) + ")");
}

// The ten membership predicates evaluated independently, with both bounds,
// no precedence.  Test surface for the partition property: the raw R8 and
// R10 predicates deliberately overlap when x = y, nothing else may.
inline std::array<bool, kRegionCount> raw_region_memberships(const Triple& t) {
  const i128 x = t.x, y = t.y, z = t.z;
  std::array<bool, kRegionCount> in{};
  in[0] = 6 * x <= y - 3 * z;
  in[1] = 5 * (y - 3 * z) < 30 * x && 30 * x <= 6 * (y - 2 * z);
  in[2] = 12 * (y - 2 * z) < 60 * x && 60 * x <= 5 * (3 * y - 4 * z);
  in[3] = 7 * (3 * y - 4 * z) < 84 * x && 84 * x <= 24 * (y - z);
  in[4] = 24 * (y - z) < 84 * x && 84 * x <= 7 * (4 * y - 3 * z);
  in[5] = 5 * (4 * y - 3 * z) < 60 * x && 60 * x <= 12 * (2 * y - z);
  in[6] = 6 * (2 * y - z) < 30 * x && 30 * x <= 5 * (3 * y - z);
  in[7] = 3 * y - z < 6 * x && 6 * x <= 6 * y;
  in[8] = y < x;
  in[9] = y == x;
  return in;
}

// y and z swapped; fixed points encode p = 3x^2 + y^2.
inline Triple apply_g0(const Triple& t) { return Triple{t.x, t.z, t.y}; }

// The piecewise involution: T_r * t where r = classify(t).
inline Triple apply_g(const Triple& t) { return apply(transform_matrix(classify(t)), t); }

struct RegionCensus {
  std::array<u64, kRegionCount> counts{};
  u64 total = 0;

  u64& operator[](Region r) { return counts[static_cast<size_t>(region_index(r))]; }
  u64 operator[](Region r) const { return counts[static_cast<size_t>(region_index(r))]; }

  friend bool operator==(const RegionCensus&, const RegionCensus&) = default;
};

// Count triples per region.  Throws classification_error if any triple fails
// to classify, which would mean the partition itself is broken.
inline RegionCensus region_census(const std::vector<Triple>& s) {
  RegionCensus c;
  for (const Triple& t : s) {
    ++c[classify(t)];
    ++c.total;
  }
  return c;
}

enum class Involution { g, g0 };

// The fixed points of the chosen involution, canonical order preserved.
inline std::vector<Triple> fixed_points(const std::vector<Triple>& s, Involution which) {
  std::vector<Triple> out;
  for (const Triple& t : s) {
    Triple u = which == Involution::g ? apply_g(t) : apply_g0(t);
    if (u == t) out.push_back(t);
  }
  return out;
}

// Where g sends each region: R1 and R9 trade places, R3 and R7 trade
// places, everything else maps to itself.  This is the structural content
// of T1*T9 = T3*T7 = T2^2 = ... = I.
constexpr Region sigma_pair(Region r) {
  switch (r) {
    case Region::R1: return Region::R9;
    case Region::R9: return Region::R1;
    case Region::R3: return Region::R7;
    case Region::R7: return Region::R3;
    default: return r;
  }
}

struct NamedCheck {
  std::string name;
  bool ok = false;
};

struct IdentityReport {
  std::vector<NamedCheck> checks;

  bool all_ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.ok; });
  }
};

// Static facts about the transform family, by exact integer arithmetic:
// A = BX, A^6 = I, the eight composition identities that make g an
// involution, and form preservation T^T G T = G for all ten pieces.
inline IdentityReport verify_matrix_identities() {
  IdentityReport rep;
  const Mat3 id = Mat3::identity();
  auto t = [](int i) -> const Mat3& { return kTransforms[static_cast<size_t>(i - 1)]; };

  rep.checks.push_back({"A = B*X", kA == kB * kX});
  rep.checks.push_back({"A^6 = I", kA * kA * kA * kA * kA * kA == id});
  rep.checks.push_back({"T1*T9 = I", t(1) * t(9) == id});
  rep.checks.push_back({"T3*T7 = I", t(3) * t(7) == id});
  rep.checks.push_back({"T2^2 = I", t(2) * t(2) == id});
  rep.checks.push_back({"T4^2 = I", t(4) * t(4) == id});
  rep.checks.push_back({"T5^2 = I", t(5) * t(5) == id});
  rep.checks.push_back({"T6^2 = I", t(6) * t(6) == id});
  rep.checks.push_back({"T8^2 = I", t(8) * t(8) == id});
  rep.checks.push_back({"T10 = I", t(10) == id});
  for (Region r : all_regions()) {
    rep.checks.push_back({std::string(region_name(r)) + " preserves 3x^2+yz",
                          preserves_form(transform_matrix(r))});
  }
  return rep;
}

}  // namespace windmill
