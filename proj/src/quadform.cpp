#include "pcgroup/quadform.hpp"

#include <algorithm>

namespace pcgroup {

QuadMatrix quad_matrix(const Epsilon& eps) {
  QuadMatrix Q;
  for (int i = 0; i < 4; ++i) Q.q[i][i] = eps[i] ? WElem::one() : WElem::zero();
  Q.q[0][1] = WElem::one();
  Q.q[0][2] = WElem::t();
  Q.q[0][3] = WElem::one();
  Q.q[1][2] = WElem::one();
  return Q;
}

WElem eval_quad(const QuadMatrix& Q, int v) {
  WElem acc = WElem::zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (((v >> i) & 1) && ((v >> j) & 1)) acc = acc + Q.q[i][j];
  return acc;
}

QuadMatrix bilinear_matrix(const QuadMatrix& Q) {
  QuadMatrix B;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) B.q[i][j] = Q.q[i][j] + Q.q[j][i];
  return B;
}

WElem apply_h(const Gf2Mat2& h, WElem w) {
  int c0 = w.bits & 1, c1 = (w.bits >> 1) & 1;
  int r0 = (c0 & h.get(0, 0)) ^ (c1 & h.get(1, 0));
  int r1 = (c0 & h.get(0, 1)) ^ (c1 & h.get(1, 1));
  return {static_cast<std::uint8_t>(r0 | (r1 << 1))};
}

QuadMatrix congruence(const Gf2Mat4& g, const QuadMatrix& M) {
  QuadMatrix out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      WElem acc = WElem::zero();
      for (int k = 0; k < 4; ++k) {
        if (!g.get(i, k)) continue;
        for (int l = 0; l < 4; ++l)
          if (g.get(j, l)) acc = acc + M.q[k][l];
      }
      out.q[i][j] = acc;
    }
  return out;
}

const std::vector<Gf2Mat4>& gl4_elements() {
  static const std::vector<Gf2Mat4> all = [] {
    std::vector<Gf2Mat4> out;
    for (unsigned bits = 0; bits < 1u << 16; ++bits) {
      Gf2Mat4 g;
      for (int i = 0; i < 4; ++i) g.rows[i] = static_cast<std::uint8_t>((bits >> (4 * i)) & 0xf);
      if (g.invertible()) out.push_back(g);
    }
    return out;
  }();
  return all;
}

std::optional<Gf2Mat2> induced_h(const Gf2Mat4& g, const Epsilon& eps, const Epsilon& delta) {
  QuadMatrix Beps = bilinear_matrix(quad_matrix(eps));
  QuadMatrix tr = congruence(g, bilinear_matrix(quad_matrix(delta)));

  // The entries of B^eps span W (the value 1 occurs at (0,1), the value t at
  // (0,2)), so h is forced row by row and then verified on every entry.
  Gf2Mat2 h;
  bool row0 = false, row1 = false;
  for (int i = 0; i < 4 && !(row0 && row1); ++i)
    for (int j = 0; j < 4; ++j) {
      if (Beps.q[i][j] == WElem::one() && !row0) {
        h.rows[0] = tr.q[i][j].bits;
        row0 = true;
      } else if (Beps.q[i][j] == WElem::t() && !row1) {
        h.rows[1] = tr.q[i][j].bits;
        row1 = true;
      }
    }
  if (!row0 || !row1 || !h.invertible()) return std::nullopt;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (apply_h(h, Beps.q[i][j]) != tr.q[i][j]) return std::nullopt;
  return h;
}

std::optional<Gf2Mat4> pseudo_isometry(const Epsilon& eps, const Epsilon& delta) {
  QuadMatrix Qeps = quad_matrix(eps);
  QuadMatrix Qdelta = quad_matrix(delta);
  for (const Gf2Mat4& g : gl4_elements()) {
    std::optional<Gf2Mat2> h = induced_h(g, eps, delta);
    if (!h) continue;
    QuadMatrix tr = congruence(g, Qdelta);
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i)
      ok = tr.q[i][i] == apply_h(*h, Qeps.q[i][i]);
    if (ok) return g;
  }
  return std::nullopt;
}

std::vector<std::vector<Epsilon>> classify_epsilons() {
  auto eps_of = [](int mask) {
    return Epsilon{(mask >> 3) & 1, (mask >> 2) & 1, (mask >> 1) & 1, mask & 1};
  };

  std::array<int, 16> parent;
  for (int i = 0; i < 16; ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };

  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b) {
      if (find(a) == find(b)) continue;
      if (pseudo_isometry(eps_of(a), eps_of(b))) parent[find(b)] = find(a);
    }

  std::vector<std::vector<Epsilon>> classes;
  for (int root = 0; root < 16; ++root) {
    if (find(root) != root) continue;
    std::vector<Epsilon> cls;
    for (int m = 0; m < 16; ++m)
      if (find(m) == root) cls.push_back(eps_of(m));
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

}  // namespace pcgroup
