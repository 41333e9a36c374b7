// Quadratic-map invariants over W = (Z/2)[t]/(t^2): the 4x4 upper-triangular
// matrix Q attached to an epsilon vector, its bilinear matrix B = Q + Q^T,
// and the GL(4,2) search deciding when two epsilon vectors give equivalent
// quadratic maps. The sixteen epsilon vectors fall into four classes.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "pcgroup/families.hpp"

namespace pcgroup {

// a + b*t with t^2 = 0; bit 0 holds a, bit 1 holds b.
struct WElem {
  std::uint8_t bits = 0;

  static WElem zero() { return {0}; }
  static WElem one() { return {1}; }
  static WElem t() { return {2}; }

  friend WElem operator+(WElem l, WElem r) { return {static_cast<std::uint8_t>(l.bits ^ r.bits)}; }
  friend WElem operator*(WElem l, WElem r) {
    std::uint8_t a0 = l.bits & 1, a1 = (l.bits >> 1) & 1;
    std::uint8_t b0 = r.bits & 1, b1 = (r.bits >> 1) & 1;
    return {static_cast<std::uint8_t>((a0 & b0) | (((a0 & b1) ^ (a1 & b0)) << 1))};
  }
  bool operator==(const WElem&) const = default;
};

// N x N bit matrix, one row per byte (bit j of rows[i] is entry (i,j)).
template <int N>
struct Gf2Mat {
  std::array<std::uint8_t, N> rows{};

  static Gf2Mat identity() {
    Gf2Mat m;
    for (int i = 0; i < N; ++i) m.rows[i] = static_cast<std::uint8_t>(1u << i);
    return m;
  }
  int get(int i, int j) const { return (rows[i] >> j) & 1; }
  void set(int i, int j, int v) {
    rows[i] = static_cast<std::uint8_t>((rows[i] & ~(1u << j)) | ((v & 1u) << j));
  }
  bool operator==(const Gf2Mat&) const = default;

  bool invertible() const {
    std::array<std::uint8_t, N> m = rows;
    for (int col = 0; col < N; ++col) {
      int pivot = -1;
      for (int r = col; r < N; ++r)
        if ((m[r] >> col) & 1) {
          pivot = r;
          break;
        }
      if (pivot < 0) return false;
      std::swap(m[col], m[pivot]);
      for (int r = 0; r < N; ++r)
        if (r != col && ((m[r] >> col) & 1)) m[r] ^= m[col];
    }
    return true;
  }
};

using Gf2Mat4 = Gf2Mat<4>;
using Gf2Mat2 = Gf2Mat<2>;

// Upper-triangular with diagonal entries in {0, 1}; q(v) = v Q v^T over W.
struct QuadMatrix {
  std::array<std::array<WElem, 4>, 4> q{};
  bool operator==(const QuadMatrix&) const = default;
};

QuadMatrix quad_matrix(const Epsilon& eps);
WElem eval_quad(const QuadMatrix& Q, int v /* 4-bit vector, bit i = coord i */);
QuadMatrix bilinear_matrix(const QuadMatrix& Q);  // B = Q + Q^T

// Image of w under h acting on W-coordinates (1, t): row vector times matrix.
WElem apply_h(const Gf2Mat2& h, WElem w);

// Congruence transform g M g^T with g over GF(2) and M over W.
QuadMatrix congruence(const Gf2Mat4& g, const QuadMatrix& M);

// All invertible 4x4 bit matrices in ascending bit-pattern order (20160).
const std::vector<Gf2Mat4>& gl4_elements();

// The unique h in GL(2,2) with g B^delta g^T = (B^eps)^h, if one exists.
std::optional<Gf2Mat2> induced_h(const Gf2Mat4& g, const Epsilon& eps, const Epsilon& delta);

// Least g in GL(4,2) realizing a pseudo-isometry from Q^eps to Q^delta.
std::optional<Gf2Mat4> pseudo_isometry(const Epsilon& eps, const Epsilon& delta);

// Partition of the sixteen epsilon vectors into pseudo-isometry classes,
// each class sorted, classes ordered by their least member.
std::vector<std::vector<Epsilon>> classify_epsilons();

}  // namespace pcgroup
