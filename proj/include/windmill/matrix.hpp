#pragma once

#include <array>
#include <cstdint>

#include "windmill/triple.hpp"

namespace windmill {

// Exact 3x3 integer matrix.  Every transform piece has |entry| <= 12, so
// matrix-matrix products stay far inside int64.
struct Mat3 {
  std::array<i64, 9> e{};

  constexpr i64 at(int r, int c) const { return e[static_cast<size_t>(r * 3 + c)]; }
  constexpr i64& at(int r, int c) { return e[static_cast<size_t>(r * 3 + c)]; }

  friend constexpr bool operator==(const Mat3&, const Mat3&) = default;

  friend constexpr Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) r.at(i, j) += a.at(i, k) * b.at(k, j);
    return r;
  }

  constexpr Mat3 operator-() const {
    Mat3 r{};
    for (size_t i = 0; i < 9; ++i) r.e[i] = -e[i];
    return r;
  }

  constexpr Mat3 transposed() const {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
    return r;
  }

  static constexpr Mat3 identity() { return Mat3{{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
};

inline constexpr Mat3 kB{{-1, 1, 0,
                           0, 1, 0,
                           6, -3, 1}};

inline constexpr Mat3 kX{{-1, 0, 0,
                           0, 0, 1,
                           0, 1, 0}};

// The generator of the whole family.
inline constexpr Mat3 kA = kB * kX;

// Gram matrix of the invariant: v^T kGram v = 2(3x^2 + yz).
inline constexpr Mat3 kGram{{6, 0, 0,
                             0, 0, 1,
                             0, 1, 0}};

namespace detail {

// T1..T10 from first principles: powers of A = BX, alternately twisted by X
// and sign-flipped.  The closed-form coordinate formulas floating around are
// cross-checks only; these products are the ground truth.
constexpr std::array<Mat3, 10> make_transforms() {
  const Mat3 a2 = kA * kA;
  const Mat3 a3 = a2 * kA;
  const Mat3 a4 = a3 * kA;
  const Mat3 a5 = a4 * kA;
  const Mat3 a6 = a5 * kA;
  return {
      kA,            // T1
      -(kX * a2),    // T2
      -a2,           // T3
      kX * a3,       // T4
      a3,            // T5
      -(kX * a4),    // T6
      -a4,           // T7
      kX * a5,       // T8
      a5,            // T9
      a6,            // T10 = A^6 = I
  };
}

}  // namespace detail

inline constexpr std::array<Mat3, 10> kTransforms = detail::make_transforms();

// T_r, the linear piece g agrees with on region r.
constexpr const Mat3& transform_matrix(Region r) {
  return kTransforms[static_cast<size_t>(region_index(r))];
}

// T^T G T == G, i.e. T preserves 3x^2 + yz.
constexpr bool preserves_form(const Mat3& t) {
  return t.transposed() * kGram * t == kGram;
}

// m * t as a column vector, with wide intermediates.  The image must stay in
// N^3; anything else means the caller applied the wrong piece.
inline Triple apply(const Mat3& m, const Triple& t) {
  i128 v[3];
  for (int r = 0; r < 3; ++r) {
    v[r] = static_cast<i128>(m.at(r, 0)) * t.x + static_cast<i128>(m.at(r, 1)) * t.y +
           static_cast<i128>(m.at(r, 2)) * t.z;
    if (v[r] < 1) throw classification_error("transform image has a non-positive coordinate");
    if (v[r] > static_cast<i128>(kU64Max)) throw overflow_error("transform image exceeds 64 bits");
  }
  return Triple{static_cast<u64>(v[0]), static_cast<u64>(v[1]), static_cast<u64>(v[2])};
}

}  // namespace windmill
