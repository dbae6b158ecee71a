#include <glint/jet.hpp>

#include <stdexcept>

namespace glint {

namespace {

// Sum_i a_i d/d(coord[slot][i]) applied to p, coefficients already rendered
// in slot coordinates.
Poly apply_field(const NilpotentGroup& G, const PolyVec& coeffs, int slot,
                 const Poly& p) {
  Poly out;
  for (int i = 0; i < G.dim(); ++i) {
    if (coeffs[i].is_zero()) continue;
    out += coeffs[i] * p.derivative(G.coord[slot][i]);
  }
  return out;
}

std::map<int, Poly> slot_rename(const NilpotentGroup& G, int from, int to) {
  std::map<int, Poly> sub;
  for (int i = 0; i < G.dim(); ++i)
    sub[G.coord[from][i]] = Poly::var(G.coord[to][i]);
  return sub;
}

Poly peel_with(const NilpotentGroup& G, const std::vector<PolyVec>& fields,
               const std::vector<int>& letters, Poly p, int slot) {
  for (int l : letters) {
    if (p.is_zero()) break;
    p = apply_field(G, fields[l], slot, p);
  }
  return (letters.size() % 2) ? -p : p;
}

// The coordinate monomial matching a PBW monomial letter for letter.
Poly mon_poly(const NilpotentGroup& G, const PBWMon& q, int slot) {
  Poly p{Rat(1)};
  for (int l : q) p *= Poly::var(G.coord[slot][l]);
  return p;
}

}  // namespace

Poly jet_peel(const NilpotentGroup& G, const std::vector<int>& letters,
              const Poly& p, int slot) {
  std::vector<PolyVec> fields(G.dim());
  std::map<int, Poly> ren = slot_rename(G, 0, slot);
  for (int l : letters)
    if (fields[l].empty()) {
      fields[l] = right_invariant_vf(G, SparseVec{{l, Rat(1)}});
      if (slot != 0) fields[l] = polyvec_substitute(fields[l], ren);
    }
  return peel_with(G, fields, letters, p, slot);
}

Poly JetDual::peel(const std::vector<int>& letters, const Poly& p,
                   int slot) const {
  if (slot == 0) return peel_with(G, vf, letters, p, 0);
  std::map<int, Poly> ren = slot_rename(G, 0, slot);
  std::vector<PolyVec> fields(vf.size());
  for (int l : letters)
    if (fields[l].empty()) fields[l] = polyvec_substitute(vf[l], ren);
  return peel_with(G, fields, letters, p, slot);
}

std::map<PBWMon, Rat> JetDual::to_coeffs(const Poly& p, int slot) const {
  std::map<PBWMon, Rat> out;
  for (const auto& q : mons) {
    Rat c = peel(q, p, slot).eval_at_zero();
    if (c != 0) out[q] = c;
  }
  return out;
}

Poly JetDual::from_coeffs(const std::map<PBWMon, Rat>& c) const {
  Poly out;
  for (const auto& [q, v] : c) {
    auto it = index.find(q);
    if (it == index.end())
      throw std::invalid_argument("jet from_coeffs: monomial beyond weight cap");
    out += dual[it->second] * v;
  }
  return out;
}

JetDual jet_dual(const NilpotentGroup& G, int W) {
  JetDual J;
  J.G = G;
  J.W = W;
  UEA U(G.g, W);
  J.mons = U.basis(W);
  const int n = (int)J.mons.size();
  for (int i = 0; i < n; ++i) J.index[J.mons[i]] = i;
  J.vf.resize(G.dim());
  for (int l = 0; l < G.dim(); ++l)
    J.vf[l] = right_invariant_vf(G, SparseVec{{l, Rat(1)}});

  // Pairing matrix against the coordinate monomials, then exact inversion;
  // dual[b] = Sum_c inv[c][b] x^{mons[c]}.
  std::vector<std::vector<Rat>> M(n, std::vector<Rat>(n, Rat(0)));
  for (int b = 0; b < n; ++b) {
    Poly xb = mon_poly(G, J.mons[b], 0);
    for (int a = 0; a < n; ++a)
      M[a][b] = peel_with(G, J.vf, J.mons[a], xb, 0).eval_at_zero();
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0)
      throw std::logic_error("jet_dual: degenerate jet pairing");
    std::swap(M[col], M[piv]);
    std::swap(inv[col], inv[piv]);
    Rat d = M[col][col];
    for (int j = 0; j < n; ++j) {
      M[col][j] /= d;
      inv[col][j] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      Rat f = M[r][col];
      for (int j = 0; j < n; ++j) {
        M[r][j] -= f * M[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  J.dual.resize(n);
  for (int b = 0; b < n; ++b) {
    Poly p;
    for (int c = 0; c < n; ++c)
      if (inv[c][b] != 0) p += mon_poly(G, J.mons[c], 0) * inv[c][b];
    J.dual[b] = p;
  }
  return J;
}

}  // namespace glint
