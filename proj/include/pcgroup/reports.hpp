// Report builders behind the command-line front end. Each runner produces a
// plain data structure that renders to both text and JSON with identical
// numeric content, so batch outputs stay machine-comparable.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pcgroup/presentation.hpp"

namespace pcgroup {

struct AnalyzeReport {
  std::string source;
  std::uint64_t order = 0;
  int group_class = 0;
  int coclass = 0;
  std::uint64_t center_order = 0;
  std::vector<std::string> center_elements;
  std::uint64_t class_count = 0;
  std::vector<std::uint64_t> series_orders;
  bool consistent = false;
  long triples_checked = 0;
};

AnalyzeReport analyze_presentation(const PcPresentation& pres, const std::string& source,
                                   std::uint64_t elem_cap = kDefaultElementCap);
std::string analyze_to_text(const AnalyzeReport& r);
std::string analyze_to_json(const AnalyzeReport& r);

struct SurveyRow {
  std::string file;
  std::string status;  // "ok", "skipped" or "error"
  std::string detail;  // skip reason or error message
  std::uint64_t order = 0;
  int group_class = 0;
  std::uint64_t aut = 0, autc = 0, inn = 0, outc = 0;
};

struct SurveyReport {
  std::vector<SurveyRow> rows;  // lexicographic by file name
};

SurveyReport run_survey(const std::vector<std::string>& files, std::uint64_t aut_cap,
                        std::uint64_t elem_cap, int threads = 1);
std::string survey_to_text(const SurveyReport& r);
std::string survey_to_json(const SurveyReport& r);

struct ClaimResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ReproduceReport {
  std::vector<ClaimResult> claims;
  bool all_pass() const {
    for (const ClaimResult& c : claims)
      if (!c.pass) return false;
    return true;
  }
};

// The desk-scale verification: consistency/order/class/center for every
// family member with n <= n_max, the distinguished-automorphism checks, the
// quadratic-map classification, and the class-preserving outer automorphism
// computation at order 64. `inject_fault` corrupts one relation to
// demonstrate failure reporting.
ReproduceReport run_reproduce(int n_max = 6, int theta_n_max = 6, int threads = 1,
                              bool inject_fault = false);
std::string reproduce_to_text(const ReproduceReport& r);
std::string reproduce_to_json(const ReproduceReport& r);

// Runs fn(i) for i in [0, count) on `threads` workers. Results must be
// written to pre-sized slots so assembly order never depends on scheduling.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace pcgroup
