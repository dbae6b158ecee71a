#include <glint/nilgroup.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace glint {

namespace {

// Enumerate block sequences ((r_1,s_1),...,(r_n,s_n)), each block nonzero,
// total length <= kMaxBchLength; every prefix with n >= 1 blocks is one term
// of the composition formula, coefficient (-1)^{n-1}/(n * m * prod r_i! s_i!).
void gen_blocks(std::vector<int>& word, Rat fact_prod, int n,
                std::map<std::vector<int>, Rat>& acc) {
  if (n >= 1) {
    int m = (int)word.size();
    Rat c = Rat((n % 2) ? 1 : -1) / (Rat(n) * Rat(m) * fact_prod);
    Rat& slot = acc[word];
    slot += c;
    if (slot == 0) acc.erase(word);
  }
  int room = kMaxBchLength - (int)word.size();
  for (int r = 0; r <= room; ++r)
    for (int s = (r == 0) ? 1 : 0; r + s <= room; ++s) {
      word.insert(word.end(), (size_t)r, 0);
      word.insert(word.end(), (size_t)s, 1);
      gen_blocks(word, fact_prod * factorial((unsigned)r) * factorial((unsigned)s),
                 n + 1, acc);
      word.resize(word.size() - (size_t)(r + s));
    }
}

PolyVec basis_vec(int n, int i) {
  PolyVec v(n);
  v[(size_t)i] = Poly(Rat(1));
  return v;
}

// Deterministic rational point where a nonzero polynomial does not vanish:
// odometer over the value set {1,-1,2,-2,...} of size 1 + (max exponent of
// any single variable), which is enough by the combinatorial Nullstellensatz.
std::map<int, Rat> nonzero_point(const Poly& p) {
  std::vector<int> vars = p.variables();
  int dmax = 0;
  for (const auto& [m, c] : p.terms())
    for (const auto& [v, e] : m) dmax = std::max(dmax, e);
  std::vector<Rat> values;
  for (int k = 0; k <= dmax; ++k)
    values.push_back(Rat((k % 2) ? -(k / 2 + 1) : k / 2 + 1));
  std::vector<size_t> idx(vars.size(), 0);
  for (;;) {
    std::map<int, Rat> point;
    for (size_t i = 0; i < vars.size(); ++i) point[vars[i]] = values[idx[i]];
    if (p.eval(point) != 0) return point;
    size_t i = 0;
    while (i < idx.size() && ++idx[i] == values.size()) idx[i++] = 0;
    if (i == idx.size()) throw std::logic_error("no nonzero point found");
  }
}

std::string point_str(const std::map<int, Rat>& point) {
  std::string s = "(";
  bool first = true;
  for (const auto& [v, val] : point) {
    if (!first) s += ", ";
    first = false;
    s += var_name(v) + "=" + rat_str(val);
  }
  return s + ")";
}

}  // namespace

const std::vector<BchTerm>& bch_terms() {
  static const std::vector<BchTerm> terms = [] {
    std::map<std::vector<int>, Rat> acc;
    std::vector<int> word;
    gen_blocks(word, Rat(1), 0, acc);
    std::vector<BchTerm> out;
    for (auto& [w, c] : acc) out.push_back({w, c});
    std::sort(out.begin(), out.end(), [](const BchTerm& a, const BchTerm& b) {
      if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
      return a.word < b.word;
    });
    return out;
  }();
  return terms;
}

PolyVec NilpotentGroup::point(int slot) const {
  const auto& vars = coord.at((size_t)slot);
  PolyVec p(vars.size());
  for (size_t i = 0; i < vars.size(); ++i) p[i] = Poly::var(vars[i]);
  return p;
}

NilpotentGroup nilpotent_group(const DGLASpec& g0, int max_class) {
  if (!g0.degree_zero_only())
    throw std::invalid_argument("group model needs a degree-0 algebra: " + g0.name);
  if (!g0.differential.is_zero())
    throw std::invalid_argument("group model needs a zero differential: " + g0.name);
  int c = nilpotency_class(g0);
  if (c < 0)
    throw std::invalid_argument("not nilpotent: " + g0.name);
  if (c > max_class || c > kMaxBchLength)
    throw std::invalid_argument("nilpotency class " + std::to_string(c) +
                                " exceeds the supported maximum for " + g0.name);
  if (g0.declared_class > 0 && g0.declared_class != c)
    throw std::invalid_argument("declared class " + std::to_string(g0.declared_class) +
                                " but computed " + std::to_string(c) + " for " + g0.name);
  NilpotentGroup G;
  G.g = g0;
  G.cls = std::max(c, 1);
  std::string stem = g0.name.empty() ? std::string("G") : g0.name;
  for (int slot = 0; slot < 4; ++slot) {
    std::vector<int> vars;
    for (int i = 0; i < g0.basis.size(); ++i)
      vars.push_back(var_named(stem + "." + g0.basis.name(i) + "@" + std::to_string(slot)));
    G.coord.push_back(std::move(vars));
  }
  return G;
}

PolyVec poly_bracket(const DGLASpec& g, const PolyVec& a, const PolyVec& b) {
  int n = g.basis.size();
  PolyVec r(n);
  for (int i = 0; i < n; ++i) {
    if (a[(size_t)i].is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (b[(size_t)j].is_zero()) continue;
      SparseVec col = g.bracket_basis(i, j);
      if (col.empty()) continue;
      Poly ab = a[(size_t)i] * b[(size_t)j];
      for (const auto& [k, c] : col) r[(size_t)k] += ab * c;
    }
  }
  return r;
}

PolyVec vanest_series(const DGLASpec& g, const PolyVec& W, const PolyVec& v,
                      int terms) {
  PolyVec acc((size_t)g.basis.size());
  PolyVec cur = v;
  for (int k = 0; k < terms; ++k) {
    Rat inv = Rat(1) / factorial((unsigned)(k + 1));
    acc = polyvec_add(acc, polyvec_scale(cur, Poly(inv)));
    if (polyvec_zero_p(cur)) break;
    cur = poly_bracket(g, W, cur);
  }
  return acc;
}

PolyVec bch(const NilpotentGroup& G, const PolyVec& X, const PolyVec& Y) {
  if ((int)X.size() != G.dim() || (int)Y.size() != G.dim())
    throw std::invalid_argument("bch argument dimension mismatch");
  PolyVec r((size_t)G.dim());
  for (const BchTerm& t : bch_terms()) {
    int m = (int)t.word.size();
    if (m > G.cls) break;  // terms are sorted by length
    // right-nested bracket of the word; a repeated innermost letter is zero
    if (m >= 2 && t.word[(size_t)m - 1] == t.word[(size_t)m - 2]) continue;
    PolyVec b = t.word[(size_t)m - 1] ? Y : X;
    for (int k = m - 2; k >= 0; --k)
      b = poly_bracket(G.g, t.word[(size_t)k] ? Y : X, b);
    r = polyvec_add(r, polyvec_scale(b, Poly(t.coeff)));
  }
  return r;
}

PolyMat mat_identity(int n) {
  PolyMat M;
  for (int j = 0; j < n; ++j) M.push_back(basis_vec(n, j));
  return M;
}

PolyVec mat_apply(const PolyMat& M, const PolyVec& v) {
  PolyVec r(M.empty() ? v.size() : M[0].size());
  for (size_t j = 0; j < M.size(); ++j) {
    if (v[j].is_zero()) continue;
    r = polyvec_add(r, polyvec_scale(M[j], v[j]));
  }
  return r;
}

PolyMat mat_mul(const PolyMat& A, const PolyMat& B) {
  PolyMat R;
  for (const PolyVec& col : B) R.push_back(mat_apply(A, col));
  return R;
}

PolyMat ad_exp(const NilpotentGroup& G, const PolyVec& X) {
  int n = G.dim();
  PolyMat adX;
  for (int j = 0; j < n; ++j) adX.push_back(poly_bracket(G.g, X, basis_vec(n, j)));
  PolyMat M = mat_identity(n);
  PolyMat P = mat_identity(n);
  for (int k = 1; k <= G.cls; ++k) {
    P = mat_mul(adX, P);
    Rat inv = Rat(1) / factorial((unsigned)k);
    for (int j = 0; j < n; ++j)
      M[(size_t)j] = polyvec_add(M[(size_t)j], polyvec_scale(P[(size_t)j], Poly(inv)));
  }
  return M;
}

PolyVec right_invariant_vf(const NilpotentGroup& G, const SparseVec& X) {
  std::string stem = G.g.name.empty() ? std::string("G") : G.g.name;
  int t = var_named(stem + "@t");
  PolyVec tX((size_t)G.dim());
  for (const auto& [i, c] : X) tX[(size_t)i] = Poly::var(t) * c;
  PolyVec z = bch(G, tX, G.point(0));
  PolyVec coeffs((size_t)G.dim());
  for (int j = 0; j < G.dim(); ++j) coeffs[(size_t)j] = z[(size_t)j].coefficient_of(t, 1);
  return coeffs;
}

Poly vf_apply(const NilpotentGroup& G, const PolyVec& coeffs, const Poly& f) {
  Poly r;
  for (int j = 0; j < G.dim(); ++j) {
    if (coeffs[(size_t)j].is_zero()) continue;
    r += coeffs[(size_t)j] * f.derivative(G.coord[0][(size_t)j]);
  }
  return r;
}

PolyVec vf_commutator(const NilpotentGroup& G, const PolyVec& A, const PolyVec& B) {
  PolyVec r((size_t)G.dim());
  for (int j = 0; j < G.dim(); ++j)
    r[(size_t)j] = vf_apply(G, A, B[(size_t)j]) - vf_apply(G, B, A[(size_t)j]);
  return r;
}

PolyVec cochain_eval(const NilpotentGroup& G, const GroupCochain& c,
                     const std::vector<PolyVec>& args) {
  if ((int)args.size() != c.n)
    throw std::invalid_argument("cochain arity mismatch");
  std::map<int, Poly> sub;
  for (int s = 0; s < c.n; ++s)
    for (int i = 0; i < G.dim(); ++i)
      sub[G.coord[(size_t)s][(size_t)i]] = args[(size_t)s][(size_t)i];
  return polyvec_substitute(c.value, sub);
}

GroupCochain group_coboundary(const NilpotentGroup& G, const GroupCochain& c) {
  GroupCochain out;
  out.n = c.n + 1;
  if (c.n == 0) {
    // (da)(g) = Ad_g a - a
    PolyVec ad = mat_apply(ad_exp(G, G.point(0)), c.value);
    out.value = polyvec_add(ad, polyvec_scale(c.value, Poly(Rat(-1))));
  } else if (c.n == 1) {
    // (dxi)(g, h) = Ad_g xi(h) - xi(gh) + xi(g)
    PolyVec xi_h = cochain_eval(G, c, {G.point(1)});
    PolyVec xi_gh = cochain_eval(G, c, {bch(G, G.point(0), G.point(1))});
    out.value = mat_apply(ad_exp(G, G.point(0)), xi_h);
    out.value = polyvec_add(out.value, polyvec_scale(xi_gh, Poly(Rat(-1))));
    out.value = polyvec_add(out.value, c.value);
  } else {
    throw std::invalid_argument("group coboundary only defined for n <= 1");
  }
  return out;
}

bool is_group_cocycle(const NilpotentGroup& G, const GroupCochain& xi,
                      std::string* witness) {
  if (xi.n != 1) throw std::invalid_argument("cocycle check needs a 1-cochain");
  GroupCochain d = group_coboundary(G, xi);
  for (int i = 0; i < G.dim(); ++i) {
    const Poly& p = d.value[(size_t)i];
    if (p.is_zero()) continue;
    if (witness) {
      std::map<int, Rat> pt = nonzero_point(p);
      *witness = "(dxi)_" + G.g.basis.name(i) + point_str(pt) + " = " +
                 rat_str(p.eval(pt));
    }
    return false;
  }
  return true;
}

GradedLinearMap van_est_differentiate(const NilpotentGroup& G,
                                      const GroupCochain& xi) {
  if (xi.n != 1) throw std::invalid_argument("differentiation needs a 1-cochain");
  PolyVec at_e = cochain_eval(G, xi, {polyvec_zero((size_t)G.dim())});
  for (int i = 0; i < G.dim(); ++i)
    if (!at_e[(size_t)i].is_zero())
      throw std::invalid_argument("cochain does not vanish at the identity: " +
                                  G.g.basis.name(i) + "-component is " +
                                  at_e[(size_t)i].str());
  std::string w;
  if (!is_group_cocycle(G, xi, &w))
    throw std::invalid_argument("not a cocycle: " + w);
  GradedLinearMap delta;
  delta.degree = 0;
  for (int j = 0; j < G.dim(); ++j) {
    SparseVec col;
    for (int i = 0; i < G.dim(); ++i) {
      Rat c = xi.value[(size_t)i].derivative(G.coord[0][(size_t)j]).eval_at_zero();
      if (c != 0) col[i] = c;
    }
    if (!col.empty()) delta.columns[j] = std::move(col);
  }
  return delta;
}

GroupCochain van_est_integrate(const NilpotentGroup& G,
                               const GradedLinearMap& delta) {
  Report r = derivation_check(G.g, delta);
  if (!r.all_pass()) {
    const CheckLine* f = r.first_fail();
    throw std::invalid_argument("not a derivation: " + f->key +
                                (f->witness.empty() ? "" : " [" + f->witness + "]"));
  }
  PolyVec W = G.point(0);
  PolyVec dW((size_t)G.dim());
  for (const auto& [j, col] : delta.columns)
    for (const auto& [i, c] : col) dW[(size_t)i] += W[(size_t)j] * c;
  GroupCochain xi;
  xi.n = 1;
  xi.value = vanest_series(G.g, W, dW, G.cls);
  return xi;
}

}  // namespace glint
