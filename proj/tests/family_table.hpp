// The expected normal forms of the generator-triple products used by the
// consistency test on the built-in families. The rows and their side
// conditions are encoded directly from the family's defining relations;
// expected vectors are written out literally rather than computed with the
// collection engine, so they can serve as a golden file for it.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "pcgroup/families.hpp"

namespace testutil {

struct TableRow {
  std::string label;
  std::array<int, 3> word;  // generator indices of the product a*b*c
  pcgroup::NormalWord expected;
};

// Rows valid for the family with parameters (n, eps). The y-rows require
// s <= n-2 and are emitted for every such s.
inline std::vector<TableRow> family_table_rows(const pcgroup::PcPresentation& pres, int n,
                                               const pcgroup::Epsilon& eps) {
  using namespace pcgroup;
  std::vector<TableRow> rows;
  const int x1 = family_xgen(1), x2 = family_xgen(2), x3 = family_xgen(3), x4 = family_xgen(4);
  const int z = family_zgen();
  auto y = [](int i) { return family_ygen(i); };

  auto expect = [&](std::initializer_list<int> support) {
    NormalWord w(static_cast<std::size_t>(pres.ngens()));
    for (int k : support) w.exps[k] ^= 1;  // exponents are all 0/1 here
    return w;
  };
  auto add = [&](std::string label, int a, int b, int c, NormalWord e) {
    rows.push_back({std::move(label), {a, b, c}, std::move(e)});
  };

  add("(x3,x2,x1)", x3, x2, x1, expect({x1, x2, x3, y(1)}));
  add("(x4,x2,x1)", x4, x2, x1, expect({x1, x2, x4}));
  add("(x4,x3,x1)", x4, x3, x1, expect({x1, x3, x4, z, y(1)}));
  add("(x4,x3,x2)", x4, x3, x2, expect({x2, x3, x4, z}));

  for (int s = 1; s <= n - 2; ++s) {
    add("(y" + std::to_string(s) + ",x2,x1)", y(s), x2, x1,
        expect({x1, x2, z, y(s), y(s + 1)}));
    if (s == 1) {
      // The generic form x1*x3*y1*ys collides at s = 1: y1^2 = y2*y3.
      add("(y1,x3,x1)", y(1), x3, x1, expect({x1, x3, y(2), y(3)}));
    } else {
      add("(y" + std::to_string(s) + ",x3,x1)", y(s), x3, x1, expect({x1, x3, y(1), y(s)}));
    }
    add("(y" + std::to_string(s) + ",x4,x1)", y(s), x4, x1,
        expect({x1, x4, z, y(s), y(s + 1)}));
    add("(y" + std::to_string(s) + ",x3,x2)", y(s), x3, x2,
        expect({x2, x3, z, y(s), y(s + 1)}));
    add("(y" + std::to_string(s) + ",x4,x2)", y(s), x4, x2, expect({x2, x4, y(s)}));
    add("(y" + std::to_string(s) + ",x4,x3)", y(s), x4, x3,
        expect({x3, x4, y(s), y(s + 1)}));
  }

  for (int j = 2; j <= 4; ++j)
    for (int i = 1; i < j; ++i) {
      NormalWord e = expect({family_xgen(i)});
      if (eps[j - 1]) e.exps[z] ^= 1;
      add("(x" + std::to_string(j) + ",x" + std::to_string(j) + ",x" + std::to_string(i) + ")",
          family_xgen(j), family_xgen(j), family_xgen(i), std::move(e));
    }

  for (int s = 1; s <= n - 2; ++s)
    for (int i : {1, 3})
      add("(y" + std::to_string(s) + ",y" + std::to_string(s) + ",x" + std::to_string(i) + ")",
          y(s), y(s), family_xgen(i), expect({family_xgen(i), y(s + 1)}));

  for (int j = 2; j <= 4; ++j)
    for (int i = 1; i < j; ++i) {
      NormalWord e = expect({family_xgen(j)});
      if (eps[i - 1]) e.exps[z] ^= 1;
      add("(x" + std::to_string(j) + ",x" + std::to_string(i) + ",x" + std::to_string(i) + ")",
          family_xgen(j), family_xgen(i), family_xgen(i), std::move(e));
    }

  for (int s = 1; s <= n - 2; ++s)
    for (int i = 1; i <= 4; ++i) {
      NormalWord e = expect({y(s)});
      if (eps[i - 1]) e.exps[z] ^= 1;
      add("(y" + std::to_string(s) + ",x" + std::to_string(i) + ",x" + std::to_string(i) + ")",
          y(s), family_xgen(i), family_xgen(i), std::move(e));
    }

  for (int i = 1; i <= 4; ++i) {
    NormalWord e = expect({family_xgen(i)});
    if (eps[i - 1]) e.exps[z] ^= 1;
    add("(x" + std::to_string(i) + ",x" + std::to_string(i) + ",x" + std::to_string(i) + ")",
        family_xgen(i), family_xgen(i), family_xgen(i), std::move(e));
  }

  return rows;
}

// Both bracketings of the row's word, inner product collected first.
inline std::pair<pcgroup::NormalWord, pcgroup::NormalWord> row_bracketings(
    const pcgroup::PcPresentation& pres, const TableRow& row) {
  pcgroup::NormalWord A = pres.generator(row.word[0]);
  pcgroup::NormalWord B = pres.generator(row.word[1]);
  pcgroup::NormalWord C = pres.generator(row.word[2]);
  return {pres.multiply(pres.multiply(A, B), C), pres.multiply(A, pres.multiply(B, C))};
}

}  // namespace testutil
