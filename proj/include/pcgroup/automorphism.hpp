// Endomorphisms from generator images, automorphism/inner/class-preserving
// tests, exhaustive automorphism group enumeration for small orders, and
// the class-preserving outer automorphism pipeline.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcgroup/analysis.hpp"
#include "pcgroup/presentation.hpp"

namespace pcgroup {

// A homomorphism, held as the images of all pc-generators. Images of the
// non-minimal generators are derived from definition words, so the map is
// determined by the images of the first min_gens generators.
struct ElementMap {
  std::vector<NormalWord> images;

  NormalWord apply(const PcPresentation& pres, const NormalWord& a) const;
  // Identification key: the images of the minimal generators.
  std::string key(const PcPresentation& pres) const;
  bool is_identity(const PcPresentation& pres) const;
};

ElementMap identity_map(const PcPresentation& pres);
ElementMap conjugation_map(const PcPresentation& pres, const NormalWord& g);
// f then g, i.e. x -> g(f(x)).
ElementMap compose(const PcPresentation& pres, const ElementMap& f, const ElementMap& g);

// Extend a generator map to a homomorphism by deriving the non-minimal
// generator images from their definitions, then checking every relation.
// Returns nullopt when some relation fails; the failed relation is then
// described in *violated (e.g. "power relation of x3" or "conjugate
// relation x3^x1"). Throws std::invalid_argument when the presentation
// lacks definitions for its non-minimal generators.
std::optional<ElementMap> induce(const PcPresentation& pres, const GenMap& gm,
                                 std::string* violated = nullptr);

// True iff the images of the minimal generators generate the whole group.
bool is_automorphism(const PcPresentation& pres, const ElementMap& em,
                     std::uint64_t cap = kDefaultElementCap);

// Witness g with em = conjugation by g, if one exists. The returned witness
// is the least element of its center-coset.
std::optional<NormalWord> inner_witness(const PcPresentation& pres, const ElementMap& em,
                                        std::uint64_t cap = kDefaultElementCap);

struct ClassPreservingCheck {
  bool preserving = true;
  std::optional<NormalWord> counterexample;  // a representative moved off its class
};

ClassPreservingCheck is_class_preserving(const PcPresentation& pres, const ElementMap& em,
                                         const ClassPartition& classes);

struct AutSet {
  std::vector<ElementMap> maps;  // sorted by key, identity included
  std::size_t size() const { return maps.size(); }
};

constexpr std::uint64_t kDefaultAutCap = 1ull << 7;

// All automorphisms by backtracking over images of the minimal generators.
// Pruning: image order must equal generator order, relations are checked as
// soon as their constituent generators have images, and a final generation
// check rejects non-surjective candidates.
AutSet enumerate_automorphisms(const PcPresentation& pres, std::uint64_t cap = kDefaultAutCap);

struct OutcResult {
  std::uint64_t group_order = 0;
  std::uint64_t aut_order = 0;
  std::uint64_t autc_order = 0;
  std::uint64_t inn_order = 0;
  std::uint64_t outc_order = 0;
  std::vector<ElementMap> coset_reps;  // one per coset of Inn in Aut_c
};

OutcResult out_c(const PcPresentation& pres, std::uint64_t aut_cap = kDefaultAutCap,
                 std::uint64_t elem_cap = kDefaultElementCap);

}  // namespace pcgroup
