#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "json.hpp"
#include "pcgroup/doc_io.hpp"
#include "pcgroup/families.hpp"
#include "pcgroup/reports.hpp"

using namespace pcgroup;
using nlohmann::json;

namespace {

// Pull every integer that appears in a rendered text block.
std::vector<long long> numbers_in(const std::string& text) {
  std::vector<long long> out;
  for (std::size_t i = 0; i < text.size();) {
    if (isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back(std::stoll(text.substr(i, j - i)));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("analyze report renders the same numbers in text and json") {
  PcPresentation pres = build_family({2, {0, 1, 1, 0}});
  AnalyzeReport r = analyze_presentation(pres, "h2");
  CHECK(r.consistent);
  CHECK(r.order == 128);
  CHECK(r.group_class == 3);
  CHECK(r.coclass == 4);
  CHECK(r.center_order == 4);
  CHECK(r.class_count > 0);
  REQUIRE(r.series_orders.size() == 4);

  json j = json::parse(analyze_to_json(r));
  CHECK(j["order"] == r.order);
  CHECK(j["class"] == r.group_class);
  CHECK(j["coclass"] == r.coclass);
  CHECK(j["center_order"] == r.center_order);
  CHECK(j["class_count"] == r.class_count);
  CHECK(j["series_orders"].size() == r.series_orders.size());

  std::string text = analyze_to_text(r);
  std::vector<long long> nums = numbers_in(text);
  for (std::uint64_t v : {r.order, r.center_order, r.class_count})
    CHECK(std::count(nums.begin(), nums.end(), static_cast<long long>(v)) >= 1);
  for (std::uint64_t v : r.series_orders)
    CHECK(std::count(nums.begin(), nums.end(), static_cast<long long>(v)) >= 1);
}

TEST_CASE("survey over a mixed directory") {
  TempDir dir("pcgroup_survey_test");
  save_presentation(build_family({1, {0, 0, 0, 0}}), (dir.path / "a_h1.json").string());
  save_presentation(build_family({3, {0, 0, 0, 0}}), (dir.path / "b_big.json").string());
  {
    std::ofstream bad(dir.path / "c_bad.json");
    bad << "{ not json";
  }
  {
    // Klein four: within every cap.
    std::ofstream klein(dir.path / "d_klein.json");
    klein << R"({"p": 2, "ngens": 2, "dgens": 2, "weights": [1, 1]})";
  }

  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(dir.path))
    files.push_back(e.path().string());
  SurveyReport report = run_survey(files, /*aut_cap=*/128, /*elem_cap=*/1 << 20);

  REQUIRE(report.rows.size() == 4);
  // Rows come back sorted by file name.
  CHECK(report.rows[0].file < report.rows[1].file);
  CHECK(report.rows[1].file < report.rows[2].file);

  CHECK(report.rows[0].status == "ok");
  CHECK(report.rows[0].order == 64);
  CHECK(report.rows[0].outc >= 2);
  CHECK(report.rows[1].status == "skipped");
  CHECK(report.rows[2].status == "error");
  CHECK(report.rows[3].status == "ok");
  CHECK(report.rows[3].order == 4);
  CHECK(report.rows[3].outc == 1);

  // Identical numeric content across renderings.
  json j = json::parse(survey_to_json(report));
  REQUIRE(j["rows"].size() == 4);
  CHECK(j["rows"][0]["order"] == 64);
  CHECK(j["rows"][0]["outc"] == report.rows[0].outc);
  std::string text = survey_to_text(report);
  std::vector<long long> nums = numbers_in(text);
  CHECK(std::count(nums.begin(), nums.end(), 64) >= 1);
  CHECK(std::count(nums.begin(), nums.end(),
                   static_cast<long long>(report.rows[0].outc)) >= 1);

  // Empty input: empty report.
  CHECK(run_survey({}, 128, 1 << 20).rows.empty());
}

TEST_CASE("reproduce passes at n_max 1 and fails under fault injection") {
  ReproduceReport ok = run_reproduce(/*n_max=*/1, /*theta_n_max=*/1);
  CHECK(ok.all_pass());
  // Claims: per-n consistency/order + per-n class/center + theta + quad + outc.
  CHECK(ok.claims.size() == 5);
  for (const ClaimResult& c : ok.claims) CHECK(!c.detail.empty());

  ReproduceReport bad = run_reproduce(/*n_max=*/2, /*theta_n_max=*/1, /*threads=*/1,
                                      /*inject_fault=*/true);
  CHECK(!bad.all_pass());
  bool fault_surfaced = false;
  for (const ClaimResult& c : bad.claims)
    if (!c.pass && c.detail.find("0000") != std::string::npos) fault_surfaced = true;
  CHECK(fault_surfaced);

  json j = json::parse(reproduce_to_json(bad));
  CHECK(j["all_pass"] == false);
  std::string text = reproduce_to_text(bad);
  CHECK(text.find("FAIL") != std::string::npos);
}

TEST_CASE("parallel_for covers every index exactly once") {
  std::vector<int> hits(257, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}
