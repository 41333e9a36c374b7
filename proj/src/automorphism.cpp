#include "pcgroup/automorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace pcgroup {

namespace {

NormalWord eval_gen_word(const PcPresentation& pres, const GenWord& w,
                         const std::vector<NormalWord>& images) {
  NormalWord acc = pres.identity();
  for (auto& [g, e] : w.syls) acc = pres.multiply(acc, pres.power(images[g], e));
  return acc;
}

NormalWord eval_normal_word(const PcPresentation& pres, const NormalWord& w,
                            const std::vector<NormalWord>& images) {
  NormalWord acc = pres.identity();
  for (int i = 0; i < pres.ngens(); ++i)
    if (w.exps[i]) acc = pres.multiply(acc, pres.power(images[i], w.exps[i]));
  return acc;
}

struct Relation {
  bool is_power = false;
  int i = 0, j = 0;  // power: generator i; conjugate: pair (i, j), i < j

  std::string describe(const PcPresentation& pres) const {
    if (is_power) return "power relation of " + pres.name(i);
    return "conjugate relation " + pres.name(j) + "^" + pres.name(i);
  }
};

std::vector<Relation> all_relations(const PcPresentation& pres) {
  std::vector<Relation> rels;
  for (int i = 0; i < pres.ngens(); ++i) rels.push_back({true, i, i});
  for (int i = 0; i < pres.ngens(); ++i)
    for (int j = i + 1; j < pres.ngens(); ++j) rels.push_back({false, i, j});
  return rels;
}

// A relation holds under `images` when both sides collect to the same word.
// An omitted conjugate relation asserts that the two images commute.
bool relation_holds(const PcPresentation& pres, const Relation& r,
                    const std::vector<NormalWord>& images) {
  if (r.is_power)
    return pres.power(images[r.i], pres.prime()) ==
           eval_normal_word(pres, pres.power_rhs(r.i), images);
  const NormalWord* tail = pres.conj_tail(r.i, r.j);
  NormalWord lhs = pres.conjugate(images[r.j], images[r.i]);
  if (!tail) return lhs == images[r.j];
  return lhs == pres.multiply(images[r.j], eval_normal_word(pres, *tail, images));
}

std::vector<int> relation_support(const PcPresentation& pres, const Relation& r) {
  std::vector<int> support;
  support.push_back(r.i);
  if (!r.is_power) support.push_back(r.j);
  const NormalWord* rhs = r.is_power ? &pres.power_rhs(r.i) : pres.conj_tail(r.i, r.j);
  if (rhs)
    for (int k = 0; k < pres.ngens(); ++k)
      if (rhs->exps[k]) support.push_back(k);
  return support;
}

}  // namespace

NormalWord ElementMap::apply(const PcPresentation& pres, const NormalWord& a) const {
  return eval_normal_word(pres, a, images);
}

std::string ElementMap::key(const PcPresentation& pres) const {
  std::string k;
  k.reserve(static_cast<std::size_t>(pres.min_gens()) * pres.ngens());
  for (int i = 0; i < pres.min_gens(); ++i)
    k.append(reinterpret_cast<const char*>(images[i].exps.data()), images[i].exps.size());
  return k;
}

bool ElementMap::is_identity(const PcPresentation& pres) const {
  for (int i = 0; i < pres.min_gens(); ++i)
    if (images[i] != pres.generator(i)) return false;
  return true;
}

ElementMap identity_map(const PcPresentation& pres) {
  ElementMap em;
  for (int i = 0; i < pres.ngens(); ++i) em.images.push_back(pres.generator(i));
  return em;
}

ElementMap conjugation_map(const PcPresentation& pres, const NormalWord& g) {
  ElementMap em;
  for (int i = 0; i < pres.ngens(); ++i)
    em.images.push_back(pres.conjugate(pres.generator(i), g));
  return em;
}

ElementMap compose(const PcPresentation& pres, const ElementMap& f, const ElementMap& g) {
  ElementMap em;
  for (int i = 0; i < pres.ngens(); ++i) em.images.push_back(g.apply(pres, f.images[i]));
  return em;
}

std::optional<ElementMap> induce(const PcPresentation& pres, const GenMap& gm,
                                 std::string* violated) {
  if (static_cast<int>(gm.images.size()) != pres.min_gens())
    throw std::invalid_argument("generator map needs one image per minimal generator");
  if (!pres.has_all_definitions())
    throw std::invalid_argument(
        "presentation lacks definitions for its non-minimal generators");

  std::vector<NormalWord> images(gm.images.begin(), gm.images.end());
  images.resize(pres.ngens(), pres.identity());
  for (int k = pres.min_gens(); k < pres.ngens(); ++k)
    images[k] = eval_gen_word(pres, *pres.definition(k), images);

  for (const Relation& r : all_relations(pres)) {
    if (!relation_holds(pres, r, images)) {
      if (violated) *violated = r.describe(pres);
      return std::nullopt;
    }
  }
  ElementMap em;
  em.images = std::move(images);
  return em;
}

bool is_automorphism(const PcPresentation& pres, const ElementMap& em, std::uint64_t cap) {
  std::vector<NormalWord> gens(em.images.begin(), em.images.begin() + pres.min_gens());
  return subgroup_closure(pres, gens, cap).size() == pres.order_checked(cap);
}

std::optional<NormalWord> inner_witness(const PcPresentation& pres, const ElementMap& em,
                                        std::uint64_t cap) {
  ElementIndexer ix(pres, cap);
  for (std::uint64_t idx = 0; idx < ix.total(); ++idx) {
    NormalWord g = ix.decode(idx);
    bool match = true;
    for (int i = 0; i < pres.min_gens() && match; ++i)
      match = pres.conjugate(pres.generator(i), g) == em.images[i];
    if (match) return g;
  }
  return std::nullopt;
}

ClassPreservingCheck is_class_preserving(const PcPresentation& pres, const ElementMap& em,
                                         const ClassPartition& classes) {
  // Checking representatives suffices: conjugate elements have conjugate
  // images under any automorphism.
  ElementIndexer ix(pres);
  for (std::size_t c = 0; c < classes.classes.size(); ++c) {
    const NormalWord& rep = classes.representative(c);
    NormalWord image = em.apply(pres, rep);
    if (classes.class_of[ix.encode(image)] != c) return {false, rep};
  }
  return {true, std::nullopt};
}

AutSet enumerate_automorphisms(const PcPresentation& pres, std::uint64_t cap) {
  const std::uint64_t order = pres.order_checked(cap);
  if (!pres.has_all_definitions())
    throw std::invalid_argument(
        "automorphism search needs definitions for non-minimal generators");
  const int d = pres.min_gens();
  ElementIndexer ix(pres, cap);

  // Candidate images in fail-fast order: by element order, then weight of
  // the leading generator, then lexicographic.
  std::vector<NormalWord> elems;
  std::vector<long> orders;
  elems.reserve(order);
  for (std::uint64_t idx = 0; idx < order; ++idx) {
    elems.push_back(ix.decode(idx));
    orders.push_back(pres.element_order(elems.back()));
  }
  std::vector<std::uint32_t> cand(order);
  for (std::uint64_t i = 0; i < order; ++i) cand[i] = static_cast<std::uint32_t>(i);
  auto lead_weight = [&](const NormalWord& w) {
    for (int i = 0; i < pres.ngens(); ++i)
      if (w.exps[i]) return pres.weight(i);
    return 0;
  };
  std::stable_sort(cand.begin(), cand.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (orders[a] != orders[b]) return orders[a] < orders[b];
    return lead_weight(elems[a]) < lead_weight(elems[b]);
  });

  // Schedule: after placing the image of minimal generator k, which defined
  // generators become computable, and which relations become checkable.
  std::vector<std::vector<int>> defs_at(d);
  std::vector<std::vector<Relation>> rels_at(d);
  {
    std::vector<char> avail(pres.ngens(), 0);
    std::vector<char> def_done(pres.ngens(), 0);
    std::vector<Relation> rels = all_relations(pres);
    std::vector<char> rel_done(rels.size(), 0);
    for (int k = 0; k < d; ++k) {
      avail[k] = 1;
      bool progress = true;
      while (progress) {
        progress = false;
        for (int m = d; m < pres.ngens(); ++m) {
          if (def_done[m]) continue;
          bool ready = true;
          for (auto& [g, e] : pres.definition(m)->syls) ready = ready && avail[g];
          if (ready) {
            def_done[m] = 1;
            avail[m] = 1;
            defs_at[k].push_back(m);
            progress = true;
          }
        }
      }
      for (std::size_t r = 0; r < rels.size(); ++r) {
        if (rel_done[r]) continue;
        bool ready = true;
        for (int g : relation_support(pres, rels[r])) ready = ready && avail[g];
        if (ready) {
          rel_done[r] = 1;
          rels_at[k].push_back(rels[r]);
        }
      }
    }
    for (char done : rel_done)
      if (!done) throw std::logic_error("definitions do not reach every generator");
  }

  std::vector<long> gen_order(d);
  for (int k = 0; k < d; ++k) gen_order[k] = pres.element_order(pres.generator(k));

  AutSet out;
  std::vector<NormalWord> images(pres.ngens(), pres.identity());

  auto search = [&](auto&& self, int k) -> void {
    if (k == d) {
      std::vector<NormalWord> gens(images.begin(), images.begin() + d);
      if (subgroup_closure(pres, gens, cap).size() == order) {
        ElementMap em;
        em.images = images;
        out.maps.push_back(std::move(em));
      }
      return;
    }
    for (std::uint32_t ci : cand) {
      if (orders[ci] != gen_order[k]) continue;
      images[k] = elems[ci];
      for (int m : defs_at[k]) images[m] = eval_gen_word(pres, *pres.definition(m), images);
      bool ok = true;
      for (const Relation& r : rels_at[k])
        if (!relation_holds(pres, r, images)) {
          ok = false;
          break;
        }
      if (ok) self(self, k + 1);
    }
  };
  search(search, 0);

  std::sort(out.maps.begin(), out.maps.end(),
            [&](const ElementMap& a, const ElementMap& b) { return a.key(pres) < b.key(pres); });
  return out;
}

OutcResult out_c(const PcPresentation& pres, std::uint64_t aut_cap, std::uint64_t elem_cap) {
  OutcResult result;
  result.group_order = pres.order_checked(elem_cap);

  AutSet aut = enumerate_automorphisms(pres, aut_cap);
  result.aut_order = aut.size();

  ClassPartition classes = conjugacy_classes(pres, elem_cap);
  std::vector<const ElementMap*> autc;
  for (const ElementMap& em : aut.maps)
    if (is_class_preserving(pres, em, classes).preserving) autc.push_back(&em);
  result.autc_order = autc.size();

  // Inn(G), deduplicated by key; its order must be |G| / |Z(G)|.
  ElementIndexer ix(pres, elem_cap);
  std::map<std::string, NormalWord> inn_keys;
  for (std::uint64_t idx = 0; idx < ix.total(); ++idx) {
    NormalWord g = ix.decode(idx);
    ElementMap em = conjugation_map(pres, g);
    inn_keys.emplace(em.key(pres), g);
  }
  result.inn_order = inn_keys.size();
  std::uint64_t center_order = center(pres, elem_cap).size();
  if (result.inn_order * center_order != result.group_order)
    throw std::logic_error("inner automorphism count disagrees with |G|/|Z(G)|");
  {
    std::set<std::string> autc_keys;
    for (const ElementMap* em : autc) autc_keys.insert(em->key(pres));
    for (auto& [k, g] : inn_keys)
      if (!autc_keys.count(k))
        throw std::logic_error("an inner automorphism failed the class-preserving test");
  }

  if (result.autc_order % result.inn_order != 0)
    throw std::logic_error("class-preserving automorphisms not a union of Inn-cosets");
  result.outc_order = result.autc_order / result.inn_order;

  // Canonical coset representatives: for each class-preserving map, its
  // coset key is the least key among compositions with inner maps.
  std::map<std::string, ElementMap> reps;
  for (const ElementMap* em : autc) {
    std::string best_key;
    ElementMap best;
    for (std::uint64_t idx = 0; idx < ix.total(); ++idx) {
      ElementMap candidate = compose(pres, *em, conjugation_map(pres, ix.decode(idx)));
      std::string k = candidate.key(pres);
      if (best_key.empty() || k < best_key) {
        best_key = std::move(k);
        best = std::move(candidate);
      }
    }
    reps.emplace(best_key, std::move(best));
  }
  if (reps.size() != result.outc_order)
    throw std::logic_error("coset representative count disagrees with |Out_c|");
  for (auto& [k, em] : reps) result.coset_reps.push_back(em);
  return result;
}

}  // namespace pcgroup
