#include <cstdio>
#include <fstream>

#include "doctest.h"
#include "pcgroup/doc_io.hpp"
#include "pcgroup/families.hpp"
#include "test_util.hpp"

using namespace pcgroup;

TEST_CASE("klein four document") {
  PcPresentation p = parse_presentation(
      R"({"p": 2, "ngens": 2, "dgens": 2, "weights": [1, 1]})");
  CHECK(p.prime() == 2);
  CHECK(p.ngens() == 2);
  CHECK(p.min_gens() == 2);
  for (int i = 0; i < 2; ++i) CHECK(p.power_rhs(i).is_identity());
  CHECK(p.conj_tail(0, 1) == nullptr);
}

TEST_CASE("family documents round-trip") {
  for (int n : {1, 3}) {
    FamilySpec spec{n, {0, 1, 1, 0}};
    PcPresentation orig = build_family(spec);
    PcPresentation back = parse_presentation(presentation_to_json(orig));
    CHECK(back.ngens() == orig.ngens());
    CHECK(back.min_gens() == 4);
    CHECK(back.weights() == orig.weights());
    for (int i = 0; i < orig.ngens(); ++i) CHECK(back.power_rhs(i) == orig.power_rhs(i));
    for (int i = 0; i < orig.ngens(); ++i)
      for (int j = i + 1; j < orig.ngens(); ++j) {
        const NormalWord* a = orig.conj_tail(i, j);
        const NormalWord* b = back.conj_tail(i, j);
        REQUIRE(static_cast<bool>(a) == static_cast<bool>(b));
        if (a) CHECK(*a == *b);
      }
    CHECK(back.has_all_definitions());
    // Serialization is stable across one round trip.
    CHECK(presentation_to_json(back) == presentation_to_json(orig));
  }
}

TEST_CASE("document validation errors") {
  // Conjugate tail must be supported above j.
  CHECK_THROWS_WITH_AS(
      parse_presentation(R"({"p": 2, "ngens": 3, "dgens": 2, "weights": [1, 1, 2],
                             "conjugates": {"1,3": [[2, 1]]}})"),
      doctest::Contains("triangularity"), std::runtime_error);

  CHECK_THROWS_WITH_AS(parse_presentation(R"({"p": 2, "ngens": 1, "dgens": 1,
                                              "weights": [1], "extra": 3})"),
                       doctest::Contains("unknown key"), std::runtime_error);

  CHECK_THROWS_WITH_AS(parse_presentation(R"({"p": 2, "ngens": 3, "dgens": 1,
                                              "weights": [1, 2, 1]})"),
                       doctest::Contains("non-decreasing"), std::runtime_error);

  // Exponents in relation words live in [1, p).
  CHECK_THROWS_WITH_AS(
      parse_presentation(R"({"p": 2, "ngens": 2, "dgens": 1, "weights": [1, 2],
                             "powers": {"1": [[2, 2]]}})"),
      doctest::Contains("exponent out of range"), std::runtime_error);

  CHECK_THROWS_WITH_AS(parse_presentation(R"({"p": 2, "ngens": 2, "dgens": 2})"),
                       doctest::Contains("weights"), std::runtime_error);

  CHECK_THROWS_WITH_AS(parse_presentation("not json"), doctest::Contains("not valid JSON"),
                       std::runtime_error);

  // Conjugate keys must name i < j.
  CHECK_THROWS_WITH_AS(
      parse_presentation(R"({"p": 2, "ngens": 2, "dgens": 2, "weights": [1, 1],
                             "conjugates": {"2,1": []}})"),
      doctest::Contains("i < j"), std::runtime_error);
}

TEST_CASE("load and save through files") {
  std::string path = "pcgroup_io_test.json";
  PcPresentation orig = build_family({2, {1, 0, 0, 1}});
  save_presentation(orig, path);
  PcPresentation back = load_presentation(path);
  CHECK(back.ngens() == orig.ngens());
  CHECK(presentation_to_json(back) == presentation_to_json(orig));
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_presentation("definitely_missing_file.json"), std::runtime_error);
}

TEST_CASE("parsed groups compute like built ones") {
  FamilySpec spec{2, {1, 1, 1, 1}};
  PcPresentation built = build_family(spec);
  PcPresentation parsed = parse_presentation(presentation_to_json(built));
  for (const NormalWord& a : testutil::all_vectors(built))
    for (const NormalWord& b : {built.generator(0), built.generator(4)})
      CHECK(built.multiply(a, b) == parsed.multiply(a, b));
}
