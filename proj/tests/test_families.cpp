#include "doctest.h"
#include "family_table.hpp"
#include "pcgroup/analysis.hpp"
#include "pcgroup/consistency.hpp"
#include "pcgroup/families.hpp"
#include "test_util.hpp"

using namespace pcgroup;
using testutil::make_word;

TEST_CASE("family structure for small n") {
  PcPresentation h1 = build_family({1, {0, 0, 0, 0}});
  CHECK(h1.ngens() == 6);
  CHECK(h1.min_gens() == 4);
  CHECK(h1.weights() == std::vector<int>{1, 1, 1, 1, 2, 2});
  // n = 1 keeps only y1^2 = 1; the chain relations are vacuous.
  CHECK(h1.power_rhs(family_ygen(1)).is_identity());
  CHECK(h1.power_rhs(family_zgen()).is_identity());

  PcPresentation h2 = build_family({2, {0, 0, 0, 0}});
  CHECK(h2.power_rhs(family_ygen(1)) == make_word(h2, {{family_ygen(2), 1}}));
  CHECK(h2.power_rhs(family_ygen(2)).is_identity());

  PcPresentation h4 = build_family({4, {1, 0, 1, 0}});
  CHECK(h4.power_rhs(family_xgen(1)) == make_word(h4, {{family_zgen(), 1}}));
  CHECK(h4.power_rhs(family_xgen(2)).is_identity());
  CHECK(h4.power_rhs(family_xgen(3)) == make_word(h4, {{family_zgen(), 1}}));
  CHECK(h4.power_rhs(family_xgen(4)).is_identity());
  CHECK(h4.power_rhs(family_ygen(1)) ==
        make_word(h4, {{family_ygen(2), 1}, {family_ygen(3), 1}}));
  CHECK(h4.power_rhs(family_ygen(3)) == make_word(h4, {{family_ygen(4), 1}}));
  CHECK(h4.weights() == std::vector<int>{1, 1, 1, 1, 2, 2, 3, 4, 5});

  CHECK_THROWS_AS(build_family({0, {0, 0, 0, 0}}), std::invalid_argument);
}

TEST_CASE("theta fixes x1..x3 and sends x4 to x4*z") {
  for (int n : {1, 3}) {
    FamilySpec spec{n, {1, 1, 0, 1}};
    PcPresentation pres = build_family(spec);
    GenMap gm = theta(spec);
    REQUIRE(gm.images.size() == 4);
    CHECK(gm.images[0] == pres.generator(family_xgen(1)));
    CHECK(gm.images[1] == pres.generator(family_xgen(2)));
    CHECK(gm.images[2] == pres.generator(family_xgen(3)));
    CHECK(gm.images[3] == make_word(pres, {{family_xgen(4), 1}, {family_zgen(), 1}}));
    // z is central of order 2, so applying the substitution twice fixes x4.
    NormalWord twice = pres.multiply(gm.images[3], pres.generator(family_zgen()));
    CHECK(twice == pres.generator(family_xgen(4)));
  }
}

TEST_CASE("catalog lists the 16 epsilon vectors lexicographically") {
  auto catalog = family_catalog(3);
  REQUIRE(catalog.size() == 16);
  CHECK(catalog.front().first == Epsilon{0, 0, 0, 0});
  CHECK(catalog.back().first == Epsilon{1, 1, 1, 1});
  for (std::size_t i = 1; i < catalog.size(); ++i) CHECK(catalog[i - 1].first < catalog[i].first);
  for (auto& [eps, pres] : catalog) CHECK(pres.ngens() == 8);

  // Catalog entries differ only in the power relations of x1..x4.
  const PcPresentation& a = catalog[0].second;
  const PcPresentation& b = catalog[9].second;
  for (int i = 4; i < a.ngens(); ++i) CHECK(a.power_rhs(i) == b.power_rhs(i));
  for (int i = 0; i < a.ngens(); ++i)
    for (int j = i + 1; j < a.ngens(); ++j) {
      const NormalWord* ta = a.conj_tail(i, j);
      const NormalWord* tb = b.conj_tail(i, j);
      CHECK(static_cast<bool>(ta) == static_cast<bool>(tb));
      if (ta && tb) CHECK(*ta == *tb);
    }
}

TEST_CASE("normal-form table reproduces exactly, with both bracketings") {
  for (int n : {1, 2, 3, 5}) {
    for (int mask : {0, 5, 10, 15}) {
      Epsilon eps = {(mask >> 3) & 1, (mask >> 2) & 1, (mask >> 1) & 1, mask & 1};
      PcPresentation pres = build_family({n, eps});
      for (const testutil::TableRow& row : testutil::family_table_rows(pres, n, eps)) {
        auto [left, right] = testutil::row_bracketings(pres, row);
        INFO("n=", n, " row ", row.label);
        CHECK(left == row.expected);
        CHECK(right == row.expected);
      }
    }
  }
}

TEST_CASE("lower central series matches the closed-form description") {
  for (int n : {1, 2, 4}) {
    for (int mask : {0, 6}) {
      Epsilon eps = {(mask >> 3) & 1, (mask >> 2) & 1, (mask >> 1) & 1, mask & 1};
      PcPresentation pres = build_family({n, eps});
      auto series = lower_central_series(pres);
      REQUIRE(static_cast<int>(series.size()) == n + 2);
      CHECK(series[0].size() == (1ull << (n + 5)));
      CHECK(series[1].size() == (1ull << (n + 1)));
      for (int j = 3; j <= n + 1; ++j) CHECK(series[j - 1].size() == (1ull << (n - j + 2)));
      CHECK(series.back().size() == 1);

      // gamma_2 = <z, y_1..y_n>, gamma_j = <y_{j-1}..y_n>.
      std::vector<NormalWord> gens;
      gens.push_back(pres.generator(family_zgen()));
      for (int i = 1; i <= n; ++i) gens.push_back(pres.generator(family_ygen(i)));
      CHECK(series[1] == subgroup_closure(pres, gens));
      for (int j = 3; j <= n + 1; ++j) {
        std::vector<NormalWord> ygens;
        for (int i = j - 1; i <= n; ++i) ygens.push_back(pres.generator(family_ygen(i)));
        CHECK(series[j - 1] == subgroup_closure(pres, ygens));
      }
    }
  }
}

TEST_CASE("coclass is four") {
  for (int n : {1, 3}) {
    PcPresentation pres = build_family({n, {1, 1, 1, 1}});
    int cls = nilpotency_class(pres);
    CHECK(cls == n + 1);
    CHECK(pres.ngens() - cls == 4);
  }
}
