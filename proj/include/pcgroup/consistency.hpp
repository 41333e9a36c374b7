// Consistency test for weighted pc-presentations of 2-groups: collect the
// two bracketings of selected generator triples and compare normal forms.
// A presentation in which all selected pairs agree presents a group of
// order p^ngens with unique normal forms.
#pragma once

#include <optional>
#include <vector>

#include "pcgroup/presentation.hpp"

namespace pcgroup {

enum class TripleKind { kji, jji, jii, iii };

// The word a*b*c whose two bracketings (a*b)*c and a*(b*c) must agree.
struct ConsistencyTriple {
  TripleKind kind;
  int a, b, c;
};

struct ConsistencyFailure {
  ConsistencyTriple triple;
  NormalWord left;   // (a*b)*c
  NormalWord right;  // a*(b*c)
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<ConsistencyFailure> failures;  // at most 100 stored
  long triples_checked = 0;
};

// Conservative fallback class bound: the sum of all generator weights.
int default_class_bound(const PcPresentation& pres);

// The test triples for class bound c, enumerated row by row:
//   (k,j,i) for i<j<k, i minimal-gen, w_i+w_j+w_k <= c
//   (j,j,i) for i<j,   i minimal-gen, w_i+w_j < c
//   (j,i,i) for i<j,                  w_i+w_j < c
//   (i,i,i)                           2 w_i < c
std::vector<ConsistencyTriple> consistency_triples(const PcPresentation& pres, int class_bound);

// Both bracketings of a triple, inner product collected first.
std::pair<NormalWord, NormalWord> collect_both_bracketings(const PcPresentation& pres,
                                                           const ConsistencyTriple& t);

ConsistencyReport check_consistency(const PcPresentation& pres,
                                    std::optional<int> class_bound = std::nullopt);

}  // namespace pcgroup
