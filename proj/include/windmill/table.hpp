#pragma once

#include <array>
#include <vector>

#include "windmill/representations.hpp"

namespace windmill {

// The sixteen smallest primes p = 1 (mod 3) with their representations;
// the built-in expected values the `table` command must reproduce.
inline constexpr std::array<Representation, 16> kReferenceTable = {{
    {7, 1, 2},    {13, 1, 3},  {19, 2, 3},  {31, 1, 5},
    {37, 3, 4},   {43, 1, 6},  {61, 4, 5},  {67, 2, 7},
    {73, 1, 8},   {79, 3, 7},  {97, 3, 8},  {103, 2, 9},
    {109, 5, 7},  {127, 6, 7}, {139, 3, 10}, {151, 5, 9},
}};

// Recompute the table through the windmill construction (cross-checked
// against the direct solver).  Throws internal_check_failure on any
// disagreement between the two routes.
inline std::vector<Representation> compute_reference_table() {
  std::vector<Representation> out;
  out.reserve(kReferenceTable.size());
  for (const Representation& ref : kReferenceTable) {
    Representation got = represent_windmill(ref.p).rep;
    if (got != represent_fast(ref.p))
      throw internal_check_failure("table: windmill and direct solver disagree at p = " +
                                   std::to_string(ref.p));
    out.push_back(got);
  }
  return out;
}

}  // namespace windmill
