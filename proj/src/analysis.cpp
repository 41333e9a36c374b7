#include "pcgroup/analysis.hpp"

#include <algorithm>
#include <deque>

namespace pcgroup {

namespace {

std::vector<NormalWord> generator_inverses(const PcPresentation& pres) {
  std::vector<NormalWord> inv;
  inv.reserve(pres.ngens());
  for (int j = 0; j < pres.ngens(); ++j) inv.push_back(pres.inverse(pres.generator(j)));
  return inv;
}

ElementSet set_from_indices(const ElementIndexer& ix, std::vector<std::uint64_t> indices) {
  std::sort(indices.begin(), indices.end());
  ElementSet out;
  out.elems.reserve(indices.size());
  for (std::uint64_t idx : indices) out.elems.push_back(ix.decode(idx));
  return out;
}

// Smallest subgroup containing `seed` indices and closed under conjugation
// by all pc-generators when `normal` is set. Right multiplication by the
// seeds suffices for subgroup closure in a finite group.
std::vector<std::uint64_t> closure_indices(const PcPresentation& pres, const ElementIndexer& ix,
                                           const std::vector<NormalWord>& seed, bool normal) {
  std::vector<char> in(ix.total(), 0);
  std::vector<std::uint64_t> members;
  std::deque<NormalWord> queue;

  auto add = [&](const NormalWord& w) {
    std::uint64_t idx = ix.encode(w);
    if (in[idx]) return;
    in[idx] = 1;
    members.push_back(idx);
    queue.push_back(w);
  };

  add(pres.identity());
  std::vector<NormalWord> gens = normal ? generator_inverses(pres) : std::vector<NormalWord>{};
  while (!queue.empty()) {
    NormalWord g = queue.front();
    queue.pop_front();
    for (const NormalWord& s : seed) add(pres.multiply(g, s));
    if (normal)
      for (int j = 0; j < pres.ngens(); ++j)
        add(pres.multiply(pres.multiply(gens[j], g), pres.generator(j)));
  }
  return members;
}

}  // namespace

ElementIndexer::ElementIndexer(const PcPresentation& pres, std::uint64_t cap)
    : prime_(pres.prime()), ngens_(pres.ngens()), total_(pres.order_checked(cap)) {}

std::uint64_t ElementIndexer::encode(const NormalWord& w) const {
  std::uint64_t idx = 0;
  for (int i = 0; i < ngens_; ++i) idx = idx * prime_ + w.exps[i];
  return idx;
}

NormalWord ElementIndexer::decode(std::uint64_t idx) const {
  NormalWord w(static_cast<std::size_t>(ngens_));
  for (int i = ngens_ - 1; i >= 0; --i) {
    w.exps[i] = static_cast<Exp>(idx % prime_);
    idx /= prime_;
  }
  return w;
}

bool ElementSet::contains(const NormalWord& w) const {
  return std::binary_search(elems.begin(), elems.end(), w);
}

ElementSet enumerate_elements(const PcPresentation& pres, std::uint64_t cap) {
  ElementIndexer ix(pres, cap);
  ElementSet out;
  out.elems.reserve(ix.total());
  for (std::uint64_t idx = 0; idx < ix.total(); ++idx) out.elems.push_back(ix.decode(idx));
  return out;
}

ElementSet centralizer(const PcPresentation& pres, const NormalWord& a, std::uint64_t cap) {
  ElementIndexer ix(pres, cap);
  ElementSet out;
  for (std::uint64_t idx = 0; idx < ix.total(); ++idx) {
    NormalWord g = ix.decode(idx);
    if (pres.multiply(g, a) == pres.multiply(a, g)) out.elems.push_back(std::move(g));
  }
  return out;
}

ElementSet center(const PcPresentation& pres, std::uint64_t cap) {
  ElementIndexer ix(pres, cap);
  ElementSet out;
  for (std::uint64_t idx = 0; idx < ix.total(); ++idx) {
    NormalWord g = ix.decode(idx);
    bool central = true;
    for (int j = 0; j < pres.ngens() && central; ++j) {
      NormalWord x = pres.generator(j);
      central = pres.multiply(g, x) == pres.multiply(x, g);
    }
    if (central) out.elems.push_back(std::move(g));
  }
  return out;
}

ClassPartition conjugacy_classes(const PcPresentation& pres, std::uint64_t cap) {
  ElementIndexer ix(pres, cap);
  std::vector<NormalWord> gen_inv = generator_inverses(pres);

  ClassPartition part;
  part.class_of.assign(ix.total(), 0);
  std::vector<char> seen(ix.total(), 0);

  for (std::uint64_t start = 0; start < ix.total(); ++start) {
    if (seen[start]) continue;
    std::uint32_t cls = static_cast<std::uint32_t>(part.classes.size());
    std::vector<std::uint64_t> orbit;
    std::deque<std::uint64_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      std::uint64_t at = queue.front();
      queue.pop_front();
      orbit.push_back(at);
      part.class_of[at] = cls;
      NormalWord w = ix.decode(at);
      for (int j = 0; j < pres.ngens(); ++j) {
        NormalWord c = pres.multiply(pres.multiply(gen_inv[j], w), pres.generator(j));
        std::uint64_t idx = ix.encode(c);
        if (!seen[idx]) {
          seen[idx] = 1;
          queue.push_back(idx);
        }
      }
    }
    part.classes.push_back(set_from_indices(ix, std::move(orbit)));
  }
  return part;
}

ElementSet subgroup_closure(const PcPresentation& pres, const std::vector<NormalWord>& gens,
                            std::uint64_t cap) {
  ElementIndexer ix(pres, cap);
  return set_from_indices(ix, closure_indices(pres, ix, gens, false));
}

std::vector<ElementSet> lower_central_series(const PcPresentation& pres, std::uint64_t cap) {
  ElementIndexer ix(pres, cap);
  std::vector<ElementSet> series;
  series.push_back(enumerate_elements(pres, cap));

  while (series.back().size() > 1) {
    const ElementSet& current = series.back();
    // gamma_{i+1} = [G, gamma_i]: generated by commutators of gamma_i with
    // the pc-generators, then closed up as a normal subgroup of G.
    std::vector<char> have(ix.total(), 0);
    std::vector<NormalWord> comms;
    for (const NormalWord& g : current.elems)
      for (int j = 0; j < pres.ngens(); ++j) {
        NormalWord c = pres.commutator(g, pres.generator(j));
        std::uint64_t idx = ix.encode(c);
        if (!have[idx]) {
          have[idx] = 1;
          comms.push_back(std::move(c));
        }
      }
    ElementSet next = set_from_indices(ix, closure_indices(pres, ix, comms, true));
    if (next.size() >= current.size())
      throw std::logic_error("lower central series does not descend; presentation not nilpotent");
    series.push_back(std::move(next));
  }
  return series;
}

int nilpotency_class(const PcPresentation& pres, std::uint64_t cap) {
  return static_cast<int>(lower_central_series(pres, cap).size()) - 1;
}

std::optional<NormalWord> conjugating_element(const PcPresentation& pres, const NormalWord& a,
                                              const NormalWord& b, std::uint64_t cap) {
  ElementIndexer ix(pres, cap);
  std::vector<NormalWord> gen_inv = generator_inverses(pres);

  // BFS over the conjugation orbit of a, remembering the conjugator used to
  // reach each element.
  std::vector<char> seen(ix.total(), 0);
  std::deque<std::pair<NormalWord, NormalWord>> queue;  // (element, witness)
  queue.push_back({a, pres.identity()});
  seen[ix.encode(a)] = 1;
  while (!queue.empty()) {
    auto [w, wit] = queue.front();
    queue.pop_front();
    if (w == b) return wit;
    for (int j = 0; j < pres.ngens(); ++j) {
      NormalWord c = pres.multiply(pres.multiply(gen_inv[j], w), pres.generator(j));
      std::uint64_t idx = ix.encode(c);
      if (!seen[idx]) {
        seen[idx] = 1;
        queue.push_back({std::move(c), pres.multiply(wit, pres.generator(j))});
      }
    }
  }
  return std::nullopt;
}

bool is_subgroup(const PcPresentation& pres, const ElementSet& set) {
  if (set.size() == 0 || !set.elems.front().is_identity()) return false;
  for (const NormalWord& a : set.elems) {
    if (!set.contains(pres.inverse(a))) return false;
    for (const NormalWord& b : set.elems)
      if (!set.contains(pres.multiply(a, b))) return false;
  }
  return true;
}

}  // namespace pcgroup
