#include "pcgroup/consistency.hpp"

#include <numeric>

namespace pcgroup {

int default_class_bound(const PcPresentation& pres) {
  return std::accumulate(pres.weights().begin(), pres.weights().end(), 0);
}

std::vector<ConsistencyTriple> consistency_triples(const PcPresentation& pres,
                                                   int class_bound) {
  const int n = pres.ngens(), d = pres.min_gens(), c = class_bound;
  const std::vector<int>& w = pres.weights();
  std::vector<ConsistencyTriple> out;

  for (int i = 0; i < n; ++i) {
    if (i >= d) break;
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (w[i] + w[j] + w[k] <= c) out.push_back({TripleKind::kji, k, j, i});
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] + w[j] < c) out.push_back({TripleKind::jji, j, j, i});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] + w[j] < c) out.push_back({TripleKind::jii, j, i, i});
  for (int i = 0; i < n; ++i)
    if (2 * w[i] < c) out.push_back({TripleKind::iii, i, i, i});

  return out;
}

std::pair<NormalWord, NormalWord> collect_both_bracketings(const PcPresentation& pres,
                                                           const ConsistencyTriple& t) {
  NormalWord A = pres.generator(t.a), B = pres.generator(t.b), C = pres.generator(t.c);
  NormalWord left = pres.multiply(pres.multiply(A, B), C);
  NormalWord right = pres.multiply(A, pres.multiply(B, C));
  return {left, right};
}

ConsistencyReport check_consistency(const PcPresentation& pres,
                                    std::optional<int> class_bound) {
  if (pres.prime() != 2)
    throw std::invalid_argument(
        "consistency test is implemented for p = 2 presentations only");

  const int c = class_bound.value_or(default_class_bound(pres));
  ConsistencyReport report;
  for (const ConsistencyTriple& t : consistency_triples(pres, c)) {
    auto [left, right] = collect_both_bracketings(pres, t);
    ++report.triples_checked;
    if (left != right) {
      report.consistent = false;
      if (report.failures.size() < 100) report.failures.push_back({t, left, right});
    }
  }
  return report;
}

}  // namespace pcgroup
