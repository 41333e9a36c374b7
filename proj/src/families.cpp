#include "pcgroup/families.hpp"

namespace pcgroup {

namespace {

// Commutator word [a, b] = a^-1 b^-1 a b with both generators given by index.
GenWord commutator_word(int a, int b) {
  GenWord w;
  w.append(a, -1).append(b, -1).append(a, 1).append(b, 1);
  return w;
}

}  // namespace

PcPresentation build_family(const FamilySpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("family index n must be >= 1");
  for (int b : spec.eps)
    if (b != 0 && b != 1) throw std::invalid_argument("epsilon entries must be 0 or 1");

  const int n = spec.n;
  const int ngens = n + 5;
  PcData d;
  d.prime = 2;
  d.min_gens = 4;

  d.weights.assign(4, 1);
  d.weights.push_back(2);                        // z
  for (int i = 1; i <= n; ++i) d.weights.push_back(i + 1);  // y_i

  d.names = {"x1", "x2", "x3", "x4"};
  d.names.push_back("z");
  for (int i = 1; i <= n; ++i) d.names.push_back("y" + std::to_string(i));

  auto word = [&](std::initializer_list<int> support) {
    NormalWord w(static_cast<std::size_t>(ngens));
    for (int k : support) w.exps[k] = 1;
    return w;
  };

  // Power relations: x_j^2 = z^{eps_j}, z^2 = 1, y_i^2 = y_{i+1} y_{i+2},
  // y_{n-1}^2 = y_n, y_n^2 = 1 (vacuous ranges at small n).
  d.powers.assign(ngens, NormalWord(static_cast<std::size_t>(ngens)));
  for (int j = 1; j <= 4; ++j)
    if (spec.eps[j - 1]) d.powers[family_xgen(j)] = word({family_zgen()});
  for (int i = 1; i <= n - 2; ++i)
    d.powers[family_ygen(i)] = word({family_ygen(i + 1), family_ygen(i + 2)});
  if (n >= 2) d.powers[family_ygen(n - 1)] = word({family_ygen(n)});

  // Commutator relations, written in pc shape [later, earlier] = tail:
  //   [x2,x1] = [x3,x2] = [x4,x1] = z,  [x3,x1] = y1,
  //   [y_i,x1] = [y_i,x3] = y_{i+1}  (i = 1..n-1).
  auto conj = [&](int i, int j, NormalWord tail) {
    d.conjugates.push_back({{i, j}, std::move(tail)});
  };
  conj(family_xgen(1), family_xgen(2), word({family_zgen()}));
  conj(family_xgen(2), family_xgen(3), word({family_zgen()}));
  conj(family_xgen(1), family_xgen(4), word({family_zgen()}));
  conj(family_xgen(1), family_xgen(3), word({family_ygen(1)}));
  for (int i = 1; i <= n - 1; ++i) {
    conj(family_xgen(1), family_ygen(i), word({family_ygen(i + 1)}));
    conj(family_xgen(3), family_ygen(i), word({family_ygen(i + 1)}));
  }

  // Definitions of the non-minimal generators, used to lift generator maps:
  //   z = [x2,x1], y1 = [x3,x1], y_{i+1} = [y_i,x1].
  d.definitions.push_back({family_zgen(), commutator_word(family_xgen(2), family_xgen(1))});
  d.definitions.push_back({family_ygen(1), commutator_word(family_xgen(3), family_xgen(1))});
  for (int i = 1; i <= n - 1; ++i)
    d.definitions.push_back({family_ygen(i + 1), commutator_word(family_ygen(i), family_xgen(1))});

  return PcPresentation(std::move(d));
}

GenMap theta(const FamilySpec& spec) {
  PcPresentation pres = build_family(spec);
  GenMap gm;
  gm.images.push_back(pres.generator(family_xgen(1)));
  gm.images.push_back(pres.generator(family_xgen(2)));
  gm.images.push_back(pres.generator(family_xgen(3)));
  NormalWord x4z = pres.generator(family_xgen(4));
  x4z.exps[family_zgen()] = 1;
  gm.images.push_back(x4z);
  return gm;
}

std::vector<std::pair<Epsilon, PcPresentation>> family_catalog(int n) {
  std::vector<std::pair<Epsilon, PcPresentation>> out;
  for (int mask = 0; mask < 16; ++mask) {
    Epsilon eps = {(mask >> 3) & 1, (mask >> 2) & 1, (mask >> 1) & 1, mask & 1};
    out.push_back({eps, build_family({n, eps})});
  }
  return out;
}

const std::array<Epsilon, 4>& family_class_representatives() {
  static const std::array<Epsilon, 4> reps = {
      Epsilon{0, 0, 0, 0}, Epsilon{0, 1, 0, 0}, Epsilon{0, 1, 1, 0}, Epsilon{0, 0, 0, 1}};
  return reps;
}

}  // namespace pcgroup
