// Whole-group computations by exhaustive enumeration: element sets,
// centralizers, center, conjugacy classes, subgroup closure, the lower
// central series and conjugacy testing. All of these refuse to run when
// p^ngens exceeds the element cap (default 2^20).
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcgroup/presentation.hpp"

namespace pcgroup {

// Bijection between elements and dense indices; index order equals
// lexicographic order on exponent vectors.
class ElementIndexer {
 public:
  ElementIndexer(const PcPresentation& pres, std::uint64_t cap = kDefaultElementCap);

  std::uint64_t total() const { return total_; }
  std::uint64_t encode(const NormalWord& w) const;
  NormalWord decode(std::uint64_t idx) const;

 private:
  int prime_;
  int ngens_;
  std::uint64_t total_;
};

// A set of elements in canonical (lexicographic) order, no duplicates.
struct ElementSet {
  std::vector<NormalWord> elems;

  std::size_t size() const { return elems.size(); }
  bool contains(const NormalWord& w) const;
  bool operator==(const ElementSet&) const = default;
};

struct ClassPartition {
  std::vector<ElementSet> classes;        // ordered by least element
  std::vector<std::uint32_t> class_of;    // element index -> class number

  const NormalWord& representative(std::size_t c) const { return classes[c].elems.front(); }
};

ElementSet enumerate_elements(const PcPresentation& pres,
                              std::uint64_t cap = kDefaultElementCap);
ElementSet centralizer(const PcPresentation& pres, const NormalWord& a,
                       std::uint64_t cap = kDefaultElementCap);
ElementSet center(const PcPresentation& pres, std::uint64_t cap = kDefaultElementCap);
ClassPartition conjugacy_classes(const PcPresentation& pres,
                                 std::uint64_t cap = kDefaultElementCap);
ElementSet subgroup_closure(const PcPresentation& pres, const std::vector<NormalWord>& gens,
                            std::uint64_t cap = kDefaultElementCap);
std::vector<ElementSet> lower_central_series(const PcPresentation& pres,
                                             std::uint64_t cap = kDefaultElementCap);
int nilpotency_class(const PcPresentation& pres, std::uint64_t cap = kDefaultElementCap);

// Conjugacy test; returns a witness g with a^g = b when the elements are
// conjugate.
std::optional<NormalWord> conjugating_element(const PcPresentation& pres, const NormalWord& a,
                                              const NormalWord& b,
                                              std::uint64_t cap = kDefaultElementCap);

// Verification helper: closed under multiplication and inverses.
bool is_subgroup(const PcPresentation& pres, const ElementSet& set);

}  // namespace pcgroup
