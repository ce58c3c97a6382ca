#pragma once

#include <array>
#include <compare>
#include <string_view>

#include "windmill/arith.hpp"

namespace windmill {

// A windmill point: (x,y,z) with x,y,z >= 1 and 3x^2 + yz = p.  Coordinates
// are strictly positive; the fixed-point arguments break down if 0 is
// allowed in.
struct Triple {
  u64 x = 0;
  u64 y = 0;
  u64 z = 0;

  friend constexpr bool operator==(const Triple&, const Triple&) = default;
  friend constexpr auto operator<=>(const Triple&, const Triple&) = default;
};

// 3x^2 + yz, computed wide and narrowed with a check.
inline u64 form_value(const Triple& t) {
  u128 v = static_cast<u128>(3) * t.x * t.x + static_cast<u128>(t.y) * t.z;
  return checked_narrow(v);
}

// The ten pieces of the partition of S.
enum class Region : int {
  R1 = 0, R2, R3, R4, R5, R6, R7, R8, R9, R10,
};

inline constexpr int kRegionCount = 10;

constexpr int region_index(Region r) { return static_cast<int>(r); }

constexpr Region region_from_index(int i) { return static_cast<Region>(i); }

constexpr std::array<Region, kRegionCount> all_regions() {
  return {Region::R1, Region::R2, Region::R3, Region::R4, Region::R5,
          Region::R6, Region::R7, Region::R8, Region::R9, Region::R10};
}

constexpr std::string_view region_name(Region r) {
  constexpr std::string_view names[] = {"R1", "R2", "R3", "R4", "R5",
                                        "R6", "R7", "R8", "R9", "R10"};
  return names[region_index(r)];
}

}  // namespace windmill
