#include "pcgroup/reports.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "pcgroup/analysis.hpp"
#include "pcgroup/automorphism.hpp"
#include "pcgroup/consistency.hpp"
#include "pcgroup/doc_io.hpp"
#include "pcgroup/families.hpp"
#include "pcgroup/quadform.hpp"

namespace pcgroup {

namespace {

using nlohmann::json;

std::string eps_label(const Epsilon& e) {
  std::string s;
  for (int b : e) s += static_cast<char>('0' + b);
  return s;
}

// The expected center {1, z, y_n, z*y_n} of a family member.
ElementSet expected_family_center(const PcPresentation& pres, int n) {
  ElementSet ctr;
  NormalWord z = pres.generator(family_zgen()), yn = pres.generator(family_ygen(n));
  ctr.elems = {pres.identity(), z, yn, pres.multiply(z, yn)};
  std::sort(ctr.elems.begin(), ctr.elems.end());
  return ctr;
}

// Test hook: the family presentation with the conjugate relation of
// (x1, x3) removed, built through the document layer.
PcPresentation corrupt_family(const FamilySpec& spec) {
  json doc = json::parse(presentation_to_json(build_family(spec)));
  doc["conjugates"].erase("1,3");
  return parse_presentation(doc.dump());
}

}  // namespace

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads < 2 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> pool;
  int nthreads = std::min<std::size_t>(threads, count);
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
}

AnalyzeReport analyze_presentation(const PcPresentation& pres, const std::string& source,
                                   std::uint64_t elem_cap) {
  AnalyzeReport r;
  r.source = source;
  ConsistencyReport cons = check_consistency(pres);
  r.consistent = cons.consistent;
  r.triples_checked = cons.triples_checked;
  if (!r.consistent) return r;

  r.order = pres.order_checked(elem_cap);
  std::vector<ElementSet> series = lower_central_series(pres, elem_cap);
  r.group_class = static_cast<int>(series.size()) - 1;
  r.coclass = pres.ngens() - r.group_class;
  for (const ElementSet& s : series) r.series_orders.push_back(s.size());
  ElementSet ctr = center(pres, elem_cap);
  r.center_order = ctr.size();
  for (const NormalWord& w : ctr.elems) r.center_elements.push_back(format_element(pres, w));
  r.class_count = conjugacy_classes(pres, elem_cap).classes.size();
  return r;
}

std::string analyze_to_text(const AnalyzeReport& r) {
  std::ostringstream out;
  out << "source:         " << r.source << "\n";
  out << "consistent:     " << (r.consistent ? "yes" : "no") << "\n";
  out << "triples:        " << r.triples_checked << "\n";
  if (!r.consistent) return out.str();
  out << "order:          " << r.order << "\n";
  out << "class:          " << r.group_class << "\n";
  out << "coclass:        " << r.coclass << "\n";
  out << "center order:   " << r.center_order << "\n";
  out << "center:         ";
  for (std::size_t i = 0; i < r.center_elements.size(); ++i)
    out << (i ? ", " : "") << r.center_elements[i];
  out << "\n";
  out << "classes:        " << r.class_count << "\n";
  out << "series orders:  ";
  for (std::size_t i = 0; i < r.series_orders.size(); ++i)
    out << (i ? " " : "") << r.series_orders[i];
  out << "\n";
  return out.str();
}

std::string analyze_to_json(const AnalyzeReport& r) {
  json j;
  j["source"] = r.source;
  j["consistent"] = r.consistent;
  j["triples_checked"] = r.triples_checked;
  if (r.consistent) {
    j["order"] = r.order;
    j["class"] = r.group_class;
    j["coclass"] = r.coclass;
    j["center_order"] = r.center_order;
    j["center"] = r.center_elements;
    j["class_count"] = r.class_count;
    j["series_orders"] = r.series_orders;
  }
  return j.dump(2) + "\n";
}

SurveyReport run_survey(const std::vector<std::string>& files, std::uint64_t aut_cap,
                        std::uint64_t elem_cap, int threads) {
  std::vector<std::string> sorted = files;
  std::sort(sorted.begin(), sorted.end());
  SurveyReport report;
  report.rows.resize(sorted.size());

  parallel_for(sorted.size(), threads, [&](std::size_t i) {
    SurveyRow& row = report.rows[i];
    row.file = sorted[i];
    try {
      PcPresentation pres = load_presentation(sorted[i]);
      std::uint64_t order;
      try {
        order = pres.order_checked(elem_cap);
      } catch (const CapExceeded& e) {
        row.status = "skipped";
        row.detail = e.what();
        return;
      }
      row.order = order;
      if (order > aut_cap) {
        row.status = "skipped";
        row.detail = "order " + std::to_string(order) + " exceeds automorphism cap " +
                     std::to_string(aut_cap);
        return;
      }
      OutcResult oc = out_c(pres, aut_cap, elem_cap);
      row.group_class = nilpotency_class(pres, elem_cap);
      row.aut = oc.aut_order;
      row.autc = oc.autc_order;
      row.inn = oc.inn_order;
      row.outc = oc.outc_order;
      row.status = "ok";
    } catch (const std::exception& e) {
      row.status = "error";
      row.detail = e.what();
    }
  });
  return report;
}

std::string survey_to_text(const SurveyReport& r) {
  std::ostringstream out;
  out << "file\t|G|\tclass\t|Aut|\t|Aut_c|\t|Inn|\t|Out_c|\n";
  for (const SurveyRow& row : r.rows) {
    if (row.status == "ok") {
      out << row.file << "\t" << row.order << "\t" << row.group_class << "\t" << row.aut
          << "\t" << row.autc << "\t" << row.inn << "\t" << row.outc << "\n";
    } else {
      out << row.file << "\t" << (row.status == "skipped" ? "SKIPPED" : "ERROR") << ": "
          << row.detail << "\n";
    }
  }
  return out.str();
}

std::string survey_to_json(const SurveyReport& r) {
  json rows = json::array();
  for (const SurveyRow& row : r.rows) {
    json j;
    j["file"] = row.file;
    j["status"] = row.status;
    if (row.status == "ok") {
      j["order"] = row.order;
      j["class"] = row.group_class;
      j["aut"] = row.aut;
      j["autc"] = row.autc;
      j["inn"] = row.inn;
      j["outc"] = row.outc;
    } else {
      j["detail"] = row.detail;
    }
    rows.push_back(j);
  }
  return json{{"rows", rows}}.dump(2) + "\n";
}

ReproduceReport run_reproduce(int n_max, int theta_n_max, int threads, bool inject_fault) {
  struct Task {
    std::string name;
    std::function<ClaimResult()> run;
  };
  std::vector<Task> tasks;

  for (int n = 1; n <= n_max; ++n) {
    tasks.push_back({"families n=" + std::to_string(n) + ": consistency, order, generation",
                     [n, inject_fault]() -> ClaimResult {
                       ClaimResult res{"", true, ""};
                       for (auto& [eps, built] : family_catalog(n)) {
                         bool corrupt = inject_fault && n == 2 && eps == Epsilon{0, 0, 0, 0};
                         PcPresentation pres =
                             corrupt ? corrupt_family({n, eps}) : std::move(built);
                         std::uint64_t expect = 1ull << (n + 5);
                         ConsistencyReport cons = check_consistency(pres, n + 1);
                         if (!cons.consistent) {
                           res.pass = false;
                           const ConsistencyTriple& t = cons.failures.front().triple;
                           res.detail = "eps=" + eps_label(eps) + ": inconsistent at triple (" +
                                        pres.name(t.a) + "," + pres.name(t.b) + "," +
                                        pres.name(t.c) + ")";
                           break;
                         }
                         if (enumerate_elements(pres).size() != expect) {
                           res.pass = false;
                           res.detail = "eps=" + eps_label(eps) + ": element count mismatch";
                           break;
                         }
                         std::vector<NormalWord> min_gens;
                         for (int i = 0; i < pres.min_gens(); ++i)
                           min_gens.push_back(pres.generator(i));
                         std::uint64_t generated = subgroup_closure(pres, min_gens).size();
                         if (generated != expect) {
                           res.pass = false;
                           res.detail = "eps=" + eps_label(eps) + ": minimal generators give " +
                                        std::to_string(generated) + " of " +
                                        std::to_string(expect) + " elements";
                           break;
                         }
                       }
                       if (res.pass) res.detail = "all 16 eps, order " + std::to_string(1ull << (n + 5));
                       return res;
                     }});
    tasks.push_back({"families n=" + std::to_string(n) + ": class and center",
                     [n]() -> ClaimResult {
                       ClaimResult res{"", true, ""};
                       for (auto& [eps, pres] : family_catalog(n)) {
                         if (nilpotency_class(pres) != n + 1) {
                           res.pass = false;
                           res.detail = "eps=" + eps_label(eps) + ": class != n+1";
                           break;
                         }
                         ElementSet ctr = center(pres);
                         if (ctr != expected_family_center(pres, n)) {
                           res.pass = false;
                           res.detail = "eps=" + eps_label(eps) + ": center mismatch";
                           break;
                         }
                       }
                       if (res.pass) res.detail = "class n+1 and center {1,z,yn,z*yn} for all 16 eps";
                       return res;
                     }});
  }

  for (int n = 1; n <= theta_n_max; ++n) {
    tasks.push_back(
        {"theta n=" + std::to_string(n) + ": outer and class-preserving", [n]() -> ClaimResult {
           ClaimResult res{"", true, ""};
           for (auto& [eps, pres] : family_catalog(n)) {
             std::string violated;
             std::optional<ElementMap> em = induce(pres, theta({n, eps}), &violated);
             if (!em) {
               res.pass = false;
               res.detail = "eps=" + eps_label(eps) + ": theta violates " + violated;
               break;
             }
             if (!is_automorphism(pres, *em)) {
               res.pass = false;
               res.detail = "eps=" + eps_label(eps) + ": theta not an automorphism";
               break;
             }
             if (inner_witness(pres, *em)) {
               res.pass = false;
               res.detail = "eps=" + eps_label(eps) + ": theta is inner";
               break;
             }
             ClassPartition classes = conjugacy_classes(pres);
             if (!is_class_preserving(pres, *em, classes).preserving) {
               res.pass = false;
               res.detail = "eps=" + eps_label(eps) + ": theta moves a class";
               break;
             }
           }
           if (res.pass) res.detail = "theta outer and class-preserving for all 16 eps";
           return res;
         }});
  }

  tasks.push_back({"quadratic maps: four classes", []() -> ClaimResult {
                     auto classes = classify_epsilons();
                     if (classes.size() != 4)
                       return {"", false,
                               "expected 4 classes, found " + std::to_string(classes.size())};
                     std::set<std::size_t> rep_classes;
                     for (const Epsilon& rep : family_class_representatives())
                       for (std::size_t c = 0; c < classes.size(); ++c)
                         for (const Epsilon& e : classes[c])
                           if (e == rep) rep_classes.insert(c);
                     if (rep_classes.size() != 4)
                       return {"", false, "representatives do not hit 4 distinct classes"};
                     return {"", true, "16 eps fall into 4 classes with distinct representatives"};
                   }});

  tasks.push_back({"Out_c at order 64", []() -> ClaimResult {
                     ClaimResult res{"", true, ""};
                     std::string values;
                     for (const Epsilon& eps : family_class_representatives()) {
                       OutcResult oc = out_c(build_family({1, eps}));
                       values += (values.empty() ? "" : ", ") + eps_label(eps) + ":" +
                                 std::to_string(oc.outc_order);
                       if (oc.outc_order < 2) {
                         res.pass = false;
                         res.detail = "eps=" + eps_label(eps) + ": |Out_c| = " +
                                      std::to_string(oc.outc_order);
                         return res;
                       }
                     }
                     res.detail = "|Out_c| " + values;
                     return res;
                   }});

  ReproduceReport report;
  report.claims.resize(tasks.size());
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    ClaimResult res;
    try {
      res = tasks[i].run();
    } catch (const std::exception& e) {
      res.pass = false;
      res.detail = std::string("exception: ") + e.what();
    }
    res.name = tasks[i].name;
    report.claims[i] = std::move(res);
  });
  return report;
}

std::string reproduce_to_text(const ReproduceReport& r) {
  std::ostringstream out;
  for (const ClaimResult& c : r.claims)
    out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << " -- " << c.detail << "\n";
  out << (r.all_pass() ? "ALL CLAIMS PASS" : "SOME CLAIMS FAILED") << "\n";
  return out.str();
}

std::string reproduce_to_json(const ReproduceReport& r) {
  json claims = json::array();
  for (const ClaimResult& c : r.claims)
    claims.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return json{{"claims", claims}, {"all_pass", r.all_pass()}}.dump(2) + "\n";
}

}  // namespace pcgroup
