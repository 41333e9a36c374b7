// The built-in families H(n, eps): 4-generator 2-groups of order 2^(n+5),
// class n+1 and coclass 4, one for each n >= 1 and eps in {0,1}^4, together
// with the distinguished generator map sending x4 to x4*z.
#pragma once

#include <array>
#include <vector>

#include "pcgroup/presentation.hpp"

namespace pcgroup {

using Epsilon = std::array<int, 4>;

struct FamilySpec {
  int n = 1;
  Epsilon eps = {0, 0, 0, 0};
};

// Generator layout: x1 x2 x3 x4 z y1 ... yn (0-based indices below).
constexpr int family_xgen(int j) { return j - 1; }  // j in 1..4
constexpr int family_zgen() { return 4; }
constexpr int family_ygen(int i) { return 4 + i; }  // i in 1..n

PcPresentation build_family(const FamilySpec& spec);

// x1, x2, x3 fixed; x4 -> x4*z.
GenMap theta(const FamilySpec& spec);

// All 16 epsilon vectors in lexicographic order with their presentations.
std::vector<std::pair<Epsilon, PcPresentation>> family_catalog(int n);

// Epsilon vectors representing the four pseudo-isometry classes.
const std::array<Epsilon, 4>& family_class_representatives();

}  // namespace pcgroup
