// Command-line front end: family construction, consistency checking, group
// analysis, automorphism checks and batch verification workflows.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcgroup/analysis.hpp"
#include "pcgroup/automorphism.hpp"
#include "pcgroup/consistency.hpp"
#include "pcgroup/doc_io.hpp"
#include "pcgroup/families.hpp"
#include "pcgroup/quadform.hpp"
#include "pcgroup/reports.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitClaim = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

using nlohmann::json;
using namespace pcgroup;

Epsilon parse_eps(const std::string& text) {
  if (text.size() != 4) throw CLI::ValidationError("--eps", "expected 4 bits, e.g. 0100");
  Epsilon eps;
  for (int i = 0; i < 4; ++i) {
    if (text[i] != '0' && text[i] != '1')
      throw CLI::ValidationError("--eps", "expected 4 bits, e.g. 0100");
    eps[i] = text[i] - '0';
  }
  return eps;
}

std::string eps_label(const Epsilon& e) {
  std::string s;
  for (int b : e) s += static_cast<char>('0' + b);
  return s;
}

std::string matrix_label(const Gf2Mat4& g) {
  std::string s;
  for (int i = 0; i < 4; ++i) {
    if (i) s += " ";
    for (int j = 0; j < 4; ++j) s += static_cast<char>('0' + g.get(i, j));
  }
  return s;
}

std::uint64_t element_cap_from_env() {
  if (const char* env = std::getenv("PCGROUP_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring malformed PCGROUP_CAP\n";
  }
  return kDefaultElementCap;
}

int cmd_family(int n, const Epsilon& eps, const std::string& emit) {
  PcPresentation pres = build_family({n, eps});
  std::string doc = presentation_to_json(pres);
  if (emit.empty()) {
    std::cout << doc;
    return kExitOk;
  }
  std::ofstream out(emit);
  if (!out) {
    std::cerr << "error: cannot write " << emit << "\n";
    return kExitIo;
  }
  out << doc;
  return kExitOk;
}

int cmd_check_consistency(const std::string& file, std::optional<int> class_bound, bool as_json) {
  PcPresentation pres = load_presentation(file);
  ConsistencyReport report = check_consistency(pres, class_bound);
  if (as_json) {
    json j;
    j["file"] = file;
    j["consistent"] = report.consistent;
    j["triples_checked"] = report.triples_checked;
    json fails = json::array();
    for (const ConsistencyFailure& f : report.failures)
      fails.push_back({{"triple",
                        {pres.name(f.triple.a), pres.name(f.triple.b), pres.name(f.triple.c)}},
                       {"left", format_element(pres, f.left)},
                       {"right", format_element(pres, f.right)}});
    j["failures"] = fails;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "file:            " << file << "\n";
    std::cout << "consistent:      " << (report.consistent ? "yes" : "no") << "\n";
    std::cout << "triples checked: " << report.triples_checked << "\n";
    for (const ConsistencyFailure& f : report.failures)
      std::cout << "  (" << pres.name(f.triple.a) << "," << pres.name(f.triple.b) << ","
                << pres.name(f.triple.c) << "): " << format_element(pres, f.left)
                << " != " << format_element(pres, f.right) << "\n";
  }
  return report.consistent ? kExitOk : kExitClaim;
}

int cmd_analyze(const std::string& file, std::uint64_t elem_cap, bool as_json) {
  PcPresentation pres = load_presentation(file);
  AnalyzeReport report = analyze_presentation(pres, file, elem_cap);
  std::cout << (as_json ? analyze_to_json(report) : analyze_to_text(report));
  return kExitOk;
}

int cmd_theta_check(int n, const Epsilon& eps, bool as_json) {
  PcPresentation pres = build_family({n, eps});
  std::string violated;
  std::optional<ElementMap> em = induce(pres, theta({n, eps}), &violated);
  bool automorphism = false, inner = false, preserving = false;
  if (em) {
    automorphism = is_automorphism(pres, *em);
    inner = inner_witness(pres, *em).has_value();
    preserving = is_class_preserving(pres, *em, conjugacy_classes(pres)).preserving;
  }
  bool pass = em && automorphism && !inner && preserving;
  if (as_json) {
    json j;
    j["n"] = n;
    j["eps"] = eps_label(eps);
    j["induced"] = static_cast<bool>(em);
    if (!em) j["violated"] = violated;
    j["automorphism"] = automorphism;
    j["inner"] = inner;
    j["class_preserving"] = preserving;
    j["pass"] = pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "family n=" << n << " eps=" << eps_label(eps) << "\n";
    std::cout << "induce:           " << (em ? "ok" : "failed: " + violated) << "\n";
    std::cout << "automorphism:     " << (automorphism ? "yes" : "no") << "\n";
    std::cout << "inner:            " << (inner ? "yes" : "no") << "\n";
    std::cout << "class-preserving: " << (preserving ? "yes" : "no") << "\n";
  }
  return pass ? kExitOk : kExitClaim;
}

int cmd_outc(const std::string& file, std::uint64_t aut_cap, std::uint64_t elem_cap,
             bool as_json) {
  PcPresentation pres = load_presentation(file);
  OutcResult oc = out_c(pres, aut_cap, elem_cap);
  if (as_json) {
    json j;
    j["file"] = file;
    j["order"] = oc.group_order;
    j["aut"] = oc.aut_order;
    j["autc"] = oc.autc_order;
    j["inn"] = oc.inn_order;
    j["outc"] = oc.outc_order;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "file:    " << file << "\n";
    std::cout << "|G|:     " << oc.group_order << "\n";
    std::cout << "|Aut|:   " << oc.aut_order << "\n";
    std::cout << "|Aut_c|: " << oc.autc_order << "\n";
    std::cout << "|Inn|:   " << oc.inn_order << "\n";
    std::cout << "|Out_c|: " << oc.outc_order << "\n";
  }
  return kExitOk;
}

int cmd_quadclass(bool as_json) {
  auto classes = classify_epsilons();
  if (as_json) {
    json out = json::array();
    for (const auto& cls : classes) {
      json members = json::array();
      for (const Epsilon& e : cls) {
        json m;
        m["eps"] = eps_label(e);
        if (std::optional<Gf2Mat4> g = pseudo_isometry(cls.front(), e))
          m["witness"] = matrix_label(*g);
        members.push_back(m);
      }
      out.push_back({{"representative", eps_label(cls.front())}, {"members", members}});
    }
    std::cout << json{{"classes", out}}.dump(2) << "\n";
  } else {
    std::cout << classes.size() << " pseudo-isometry classes\n";
    for (const auto& cls : classes) {
      std::cout << "class of " << eps_label(cls.front()) << ":";
      for (const Epsilon& e : cls) std::cout << " " << eps_label(e);
      std::cout << "\n";
      for (const Epsilon& e : cls)
        if (std::optional<Gf2Mat4> g = pseudo_isometry(cls.front(), e))
          std::cout << "  " << eps_label(e) << " via g = " << matrix_label(*g) << "\n";
    }
  }
  return kExitOk;
}

int cmd_survey(const std::string& dir, const std::string& report_path, std::uint64_t aut_cap,
               std::uint64_t elem_cap, int threads, bool as_json) {
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path().string());
  }
  if (ec) {
    std::cerr << "error: cannot read directory " << dir << ": " << ec.message() << "\n";
    return kExitIo;
  }
  SurveyReport report = run_survey(files, aut_cap, elem_cap, threads);
  std::string rendered = as_json ? survey_to_json(report) : survey_to_text(report);
  std::cout << rendered;
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "error: cannot write report " << report_path << "\n";
      return kExitIo;
    }
    out << rendered;
  }
  return kExitOk;
}

int cmd_reproduce(int n_max, int threads, bool inject_fault, bool as_json) {
  ReproduceReport report = run_reproduce(n_max, n_max, threads, inject_fault);
  std::cout << (as_json ? reproduce_to_json(report) : reproduce_to_text(report));
  return report.all_pass() ? kExitOk : kExitClaim;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computations with finite p-groups given by power-conjugate presentations"};
  app.require_subcommand(1);

  bool as_json = false;
  int threads = 1;
  std::uint64_t aut_cap = kDefaultAutCap;
  app.add_flag("--json", as_json, "emit JSON instead of text");
  app.add_option("--threads", threads, "worker threads for batch commands")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap", aut_cap, "automorphism search cap (group order bound)")
      ->check(CLI::PositiveNumber);
  std::uint64_t elem_cap = element_cap_from_env();

  int n = 1;
  std::string eps_text = "0000";
  std::string file, emit, dir, report_path;
  std::optional<int> class_bound;
  int n_max = 6;
  bool inject_fault = false;

  CLI::App* family = app.add_subcommand("family", "emit a built-in family presentation");
  family->add_option("--n", n, "family index (>= 1)")->required()->check(CLI::PositiveNumber);
  family->add_option("--eps", eps_text, "epsilon bits, e.g. 0100")->required();
  family->add_option("--emit", emit, "output file (stdout if omitted)");

  CLI::App* consistency = app.add_subcommand("check-consistency", "run the consistency test");
  consistency->add_option("file", file, "presentation document")->required();
  int class_opt = -1;
  consistency->add_option("--class", class_opt, "nilpotency class bound")
      ->check(CLI::PositiveNumber);

  CLI::App* analyze = app.add_subcommand("analyze", "order, class, center, classes, series");
  analyze->add_option("file", file, "presentation document")->required();

  CLI::App* thetacheck = app.add_subcommand("theta-check", "distinguished automorphism checks");
  thetacheck->add_option("--n", n, "family index")->required()->check(CLI::PositiveNumber);
  thetacheck->add_option("--eps", eps_text, "epsilon bits")->required();

  CLI::App* outc = app.add_subcommand("outc", "class-preserving outer automorphisms");
  outc->add_option("file", file, "presentation document")->required();

  CLI::App* quadclass = app.add_subcommand("quadclass", "classify the 16 epsilon vectors");

  CLI::App* survey = app.add_subcommand("survey", "run outc over a directory of documents");
  survey->add_option("dir", dir, "directory of presentation documents")->required();
  survey->add_option("--report", report_path, "write the table to this file");

  CLI::App* reproduce = app.add_subcommand("reproduce", "run the full desk-scale verification");
  reproduce->add_option("--n-max", n_max, "largest family index")->check(CLI::PositiveNumber);
  reproduce->add_flag("--inject-fault", inject_fault,
                      "test hook: corrupt one relation to demonstrate failure reporting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (family->parsed()) return cmd_family(n, parse_eps(eps_text), emit);
    if (consistency->parsed()) {
      if (class_opt > 0) class_bound = class_opt;
      return cmd_check_consistency(file, class_bound, as_json);
    }
    if (analyze->parsed()) return cmd_analyze(file, elem_cap, as_json);
    if (thetacheck->parsed()) return cmd_theta_check(n, parse_eps(eps_text), as_json);
    if (outc->parsed()) return cmd_outc(file, aut_cap, elem_cap, as_json);
    if (quadclass->parsed()) return cmd_quadclass(as_json);
    if (survey->parsed())
      return cmd_survey(dir, report_path, aut_cap, elem_cap, threads, as_json);
    if (reproduce->parsed()) return cmd_reproduce(n_max, threads, inject_fault, as_json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitClaim;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
