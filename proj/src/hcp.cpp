#include <glint/hcp.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace glint {

namespace {

// --- PolyMat helpers local to this module (columns = images, as in nilgroup) ---

void mat_add_into(PolyMat& a, const PolyMat& b) {
  for (size_t j = 0; j < a.size(); ++j) a[j] = polyvec_add(a[j], b[j]);
}

PolyMat mat_scale(const PolyMat& m, const Rat& c) {
  PolyMat r;
  Poly pc{c};
  for (const PolyVec& col : m) r.push_back(polyvec_scale(col, pc));
  return r;
}

bool mat_zero(const PolyMat& m) {
  for (const PolyVec& col : m)
    if (!polyvec_zero_p(col)) return false;
  return true;
}

PolyMat mat_sub(const PolyMat& a, const PolyMat& b) {
  PolyMat r = a;
  mat_add_into(r, mat_scale(b, Rat(-1)));
  return r;
}

PolyMat mat_substitute(const PolyMat& m, const std::map<int, Poly>& sub) {
  PolyMat r;
  for (const PolyVec& col : m) r.push_back(polyvec_substitute(col, sub));
  return r;
}

std::string mat_entry_str(const HCPair& P, int j, int k, const Poly& p) {
  std::ostringstream os;
  os << "alpha[" << P.g.basis.name(j) << " -> " << P.g.basis.name(k)
     << "] = " << p.str();
  return os.str();
}

// split a PBW monomial of the reordered algebra into its fiber prefix and the
// g0 tail in g0 letter indices (PBW sorting puts the g0 letters last)
void split_mon(const HCPair& P, const PBWMon& m, PBWMon& s, PBWMon& q) {
  s.clear();
  q.clear();
  for (int l : m) {
    if (P.is_fiber(l))
      s.push_back(l);
    else
      q.push_back(l - P.fiber_count);
  }
}

PBWMon join_mon(const HCPair& P, const PBWMon& s, const PBWMon& q) {
  PBWMon m = s;
  for (int l : q) m.push_back(l + P.fiber_count);
  return m;
}

UPoly upoly_mul_env(const UEA& U, const UPoly& a, const UPoly& b) {
  UPoly out;
  for (const auto& [ma, pa] : a)
    for (const auto& [mb, pb] : b) {
      // coefficients are group-coordinate (even) polynomials: no crossing sign
      PBWMon word = ma;
      word.insert(word.end(), mb.begin(), mb.end());
      Poly pab = pa * pb;
      if (pab.is_zero()) continue;
      for (const auto& [m, c] : U.normal_form(word)) {
        auto it = out.find(m);
        Poly v = (it == out.end() ? Poly{} : it->second) + pab * c;
        if (v.is_zero()) {
          if (it != out.end()) out.erase(it);
        } else {
          out[m] = std::move(v);
        }
      }
    }
  return out;
}

// substitution map sending the slot-0 coordinates of G0 to a point vector
std::map<int, Poly> point_subst(const NilpotentGroup& G, const PolyVec& at) {
  std::map<int, Poly> sub;
  for (int i = 0; i < G.dim(); ++i) sub[G.coord[0][i]] = at[i];
  return sub;
}

void validate_del(const HCPair& P, const GradedLinearMap& del) {
  if (del.degree != 1)
    throw std::invalid_argument("differential must have degree +1");
  for (const auto& [j, col] : del.columns)
    for (const auto& [k, c] : col) {
      (void)c;
      if (P.g.basis.deg(k) != P.g.basis.deg(j) + 1)
        throw std::invalid_argument(
            "differential is not homogeneous of degree +1: " +
            P.g.basis.name(j) + " -> " + P.g.basis.name(k));
    }
  Report dr = derivation_check(P.g, del);
  if (!dr.all_pass())
    throw std::invalid_argument("differential is not a bracket derivation: " +
                                dr.first_fail()->key);
  GradedLinearMap sq = GradedLinearMap::compose(del, del);
  for (const auto& [j, col] : sq.columns)
    if (!vec_zero(col))
      throw std::invalid_argument("differential does not square to zero at " +
                                  P.g.basis.name(j));
}

}  // namespace

HCPair make_pair(const DGLASpec& g_input, int W) {
  if (W < 1) throw std::invalid_argument("make_pair: weight cap must be >= 1");
  g_input.basis.validate();
  bool pos = false, neg = false;
  for (Deg d : g_input.basis.degrees) {
    if (d > 0) pos = true;
    if (d < 0) neg = true;
  }
  if (pos && neg)
    throw std::invalid_argument(
        "make_pair: nonzero degrees must be one-sided, got both signs");

  HCPair P;
  P.W = W;
  int n = g_input.basis.size();
  for (int i = 0; i < n; ++i)
    if (g_input.basis.deg(i) != 0) P.to_input.push_back(i);
  P.fiber_count = static_cast<int>(P.to_input.size());
  for (int i = 0; i < n; ++i)
    if (g_input.basis.deg(i) == 0) P.to_input.push_back(i);
  std::vector<int> from_input(n);
  for (int i = 0; i < n; ++i) from_input[P.to_input[i]] = i;

  // the same algebra with the fiber letters first
  P.g.name = g_input.name;
  P.g.weight = W;
  P.g.declared_class = g_input.declared_class;
  for (int i = 0; i < n; ++i) {
    P.g.basis.names.push_back(g_input.basis.name(P.to_input[i]));
    P.g.basis.degrees.push_back(g_input.basis.deg(P.to_input[i]));
  }
  for (const auto& [key, val] : g_input.bracket_table) {
    SparseVec mapped;
    for (const auto& [t, c] : val) mapped[from_input[t]] = c;
    int a = from_input[key.first], b = from_input[key.second];
    if (a <= b) {
      P.g.bracket_table[{a, b}] = mapped;
    } else {
      // [e_b', e_a'] = -(-1)^{|a||b|} [e_a', e_b']
      int s = -koszul_sign(g_input.basis.deg(key.first),
                           g_input.basis.deg(key.second));
      P.g.bracket_table[{b, a}] = vec_scale(mapped, Rat(s));
    }
  }
  P.g.differential.degree = 1;
  for (const auto& [j, col] : g_input.differential.columns) {
    SparseVec mapped;
    for (const auto& [t, c] : col) mapped[from_input[t]] = c;
    if (!mapped.empty()) P.g.differential.columns[from_input[j]] = mapped;
  }

  std::vector<int> zero_idx;
  P.g0 = degree_zero_part(P.g, zero_idx);
  for (size_t i = 0; i < zero_idx.size(); ++i)
    if (zero_idx[i] != P.fiber_count + static_cast<int>(i))
      throw std::logic_error("make_pair: reorder failed to collect g0 last");
  P.G0 = nilpotent_group(P.g0);
  P.U = std::make_shared<const UEA>(P.g, W);

  // alpha = exp(N), N = sum_i x_i ad(e_{fc+i}) acting on all of g
  PolyVec pt = P.G0.point(0);
  PolyMat N;
  for (int j = 0; j < n; ++j) {
    PolyVec col = polyvec_zero(n);
    for (int i = 0; i < P.G0.dim(); ++i) {
      SparseVec br = P.g.bracket_basis(P.fiber_count + i, j);
      for (const auto& [k, c] : br) col[k] += pt[i] * c;
    }
    N.push_back(std::move(col));
  }
  P.alpha = mat_identity(n);
  PolyMat acc = mat_identity(n);
  P.ad_nilp = 1;
  for (int k = 1;; ++k) {
    acc = mat_scale(mat_mul(N, acc), Rat(1, k));
    if (mat_zero(acc)) {
      P.ad_nilp = k;
      break;
    }
    if (k > n)
      throw std::invalid_argument(
          "make_pair: ad of the degree-0 part is not nilpotent on g");
    mat_add_into(P.alpha, acc);
  }

  P.jets = jet_dual(P.G0, W);

  for (const PBWMon& m : P.U->basis(W)) {
    bool fiber = true;
    for (int l : m)
      if (!P.is_fiber(l)) {
        fiber = false;
        break;
      }
    if (fiber) P.fiber_mons.push_back(m);
  }

  // alpha on fiber monomials, multiplicatively from the letters
  std::vector<UPoly> letter_val(P.fiber_count);
  for (int l = 0; l < P.fiber_count; ++l)
    for (int k = 0; k < n; ++k)
      if (!P.alpha[l][k].is_zero()) letter_val[l][{k}] = P.alpha[l][k];
  for (const PBWMon& m : P.fiber_mons) {
    if (m.empty()) {
      P.alpha_fiber[m] = UPoly{{PBWMon{}, Poly{Rat(1)}}};
      continue;
    }
    PBWMon prefix = m;
    int last = prefix.back();
    prefix.pop_back();
    P.alpha_fiber[m] =
        upoly_mul_env(*P.U, P.alpha_fiber.at(prefix), letter_val[last]);
  }
  return P;
}

Report pair_checks(const HCPair& P, ExecMode mode) {
  Report r;
  int n = P.dim(), fc = P.fiber_count;

  {
    bool ok = true;
    std::string w;
    for (int i = 0; i < P.g0.basis.size() && ok; ++i)
      for (int j = i; j < P.g0.basis.size() && ok; ++j) {
        SparseVec lifted;
        for (const auto& [k, c] : P.g0.bracket_basis(i, j))
          lifted[fc + k] = c;
        if (lifted != P.g.bracket_basis(fc + i, fc + j)) {
          ok = false;
          w = "[" + P.g0.basis.name(i) + ", " + P.g0.basis.name(j) + "]";
        }
      }
    r.add("pair_degree0_bracket", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int j = 0; j < n && ok; ++j)
      for (int k = 0; k < n && ok; ++k) {
        if (P.alpha[j][k].is_zero()) continue;
        if (P.g.basis.deg(k) != P.g.basis.deg(j)) {
          ok = false;
          w = mat_entry_str(P, j, k, P.alpha[j][k]);
        }
      }
    r.add("pair_alpha_degree", ok, w);
  }

  {
    bool ok = true;
    std::string w;
    for (int j = 0; j < n && ok; ++j)
      for (int k = 0; k < n && ok; ++k) {
        Rat v = P.alpha[j][k].eval_at_zero();
        if (v != Rat(k == j ? 1 : 0)) {
          ok = false;
          w = mat_entry_str(P, j, k, P.alpha[j][k]);
        }
      }
    r.add("pair_alpha_identity", ok, w);
  }

  {
    // alpha[e_a, e_b] = [alpha e_a, alpha e_b], all ordered pairs incl. odd diagonal
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        if (a == b && !deg_odd(P.g.basis.deg(a))) continue;
        pairs.push_back({a, b});
      }
    std::vector<std::string> fails = sweep_failures(
        pairs.size(), mode, [&](std::size_t t) -> std::string {
          auto [a, b] = pairs[t];
          PolyVec lhs = poly_bracket(P.g, P.alpha[a], P.alpha[b]);
          SparseVec br = P.g.bracket_basis(a, b);
          PolyVec v = polyvec_zero(n);
          for (const auto& [k, c] : br) v[k] = Poly{c};
          PolyVec rhs = mat_apply(P.alpha, v);
          for (int k = 0; k < n; ++k)
            if (lhs[k] != rhs[k])
              return "[" + P.g.basis.name(a) + ", " + P.g.basis.name(b) +
                     "] component " + P.g.basis.name(k);
          return "";
        });
    r.add("pair_alpha_automorphism", fails.empty(),
          fails.empty() ? "" : fails.front());
  }

  {
    bool ok = true;
    std::string w;
    PolyVec pt = P.G0.point(0);
    for (int i = 0; i < P.G0.dim() && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        SparseVec br = P.g.bracket_basis(fc + i, j);
        for (int k = 0; k < n && ok; ++k) {
          Rat lin = P.alpha[j][k].derivative(P.G0.coord[0][i]).eval_at_zero();
          Rat expect(0);
          auto it = br.find(k);
          if (it != br.end()) expect = it->second;
          if (lin != expect) {
            ok = false;
            w = mat_entry_str(P, j, k, P.alpha[j][k]) + " at d/d" +
                var_name(P.G0.coord[0][i]);
          }
        }
      }
    r.add("pair_alpha_linear", ok, w);
  }
  return r;
}

PolyVec build_lambda(const HCPair& P, const GradedLinearMap& del) {
  validate_del(P, del);
  int n = P.dim(), fc = P.fiber_count;
  PolyVec pt = P.G0.point(0);
  PolyVec V = polyvec_zero(n);
  for (int i = 0; i < P.G0.dim(); ++i) V[fc + i] = pt[i];
  PolyVec delV = polyvec_zero(n);
  for (int i = 0; i < P.G0.dim(); ++i)
    for (const auto& [k, c] : del.column(fc + i)) delV[k] += pt[i] * c;
  PolyVec lambda = vanest_series(P.g, V, delV, P.ad_nilp);
  lambda = polyvec_scale(lambda, Poly{Rat(-1)});
  for (int k = 0; k < n; ++k)
    if (!lambda[k].is_zero() && P.g.basis.deg(k) != 1)
      throw std::logic_error("build_lambda: series left the degree-1 slice");
  Report r = lambda_checks(P, del, lambda);
  if (!r.all_pass())
    throw std::domain_error("build_lambda: pair is not integrable (" +
                            r.first_fail()->key + ": " +
                            r.first_fail()->witness + ")");
  return lambda;
}

Report lambda_checks(const HCPair& P, const GradedLinearMap& del,
                     const PolyVec& lambda) {
  Report r;
  int n = P.dim();

  {
    bool ok = true;
    std::string w;
    for (int k = 0; k < n && ok; ++k)
      if (lambda[k].eval_at_zero() != 0) {
        ok = false;
        w = "lambda(" + P.g.basis.name(k) + ") = " + lambda[k].str();
      }
    r.add("lambda_identity", ok, w);
  }

  {
    // lambda(gh) = lambda(g) + alpha(g) lambda(h)
    bool ok = true;
    std::string w;
    PolyVec E = bch(P.G0, P.G0.point(0), P.G0.point(1));
    std::map<int, Poly> to_product = point_subst(P.G0, E);
    std::map<int, Poly> to_slot1;
    for (int i = 0; i < P.G0.dim(); ++i)
      to_slot1[P.G0.coord[0][i]] = Poly::var(P.G0.coord[1][i]);
    PolyVec lam1 = polyvec_substitute(lambda, to_slot1);
    PolyVec rhs = polyvec_add(lambda, mat_apply(P.alpha, lam1));
    for (int k = 0; k < n && ok; ++k) {
      Poly lhs = lambda[k].substitute(to_product);
      if (lhs != rhs[k]) {
        ok = false;
        w = "component " + P.g.basis.name(k);
      }
    }
    r.add("lambda_cocycle", ok, w);
  }

  {
    // alpha del alpha^{-1} - del = ad(lambda)
    bool ok = true;
    std::string w;
    PolyMat D;
    for (int j = 0; j < n; ++j) {
      PolyVec col = polyvec_zero(n);
      for (const auto& [k, c] : del.column(j)) col[k] = Poly{c};
      D.push_back(std::move(col));
    }
    std::map<int, Poly> negate;
    for (int i = 0; i < P.G0.dim(); ++i)
      negate[P.G0.coord[0][i]] = -Poly::var(P.G0.coord[0][i]);
    PolyMat Ainv = mat_substitute(P.alpha, negate);
    PolyMat lhs = mat_sub(mat_mul(P.alpha, mat_mul(D, Ainv)), D);
    PolyMat I = mat_identity(n);
    for (int j = 0; j < n && ok; ++j) {
      PolyVec ad = poly_bracket(P.g, lambda, I[j]);
      for (int k = 0; k < n && ok; ++k)
        if (lhs[j][k] != ad[k]) {
          ok = false;
          w = "column " + P.g.basis.name(j) + ", component " +
              P.g.basis.name(k);
        }
    }
    r.add("lambda_compatibility", ok, w);
  }
  return r;
}

DGHCPair make_dg_pair(const DGLASpec& g_input, int W) {
  DGHCPair D;
  D.P = make_pair(g_input, W);
  D.del = D.P.g.differential;
  D.lambda = build_lambda(D.P, D.del);
  return D;
}

DGHCPair make_dg_pair(const DGLASpec& g_input, int W, const PolyVec& lambda) {
  DGHCPair D;
  D.P = make_pair(g_input, W);
  D.del = D.P.g.differential;
  validate_del(D.P, D.del);
  if (static_cast<int>(lambda.size()) != D.P.dim())
    throw std::invalid_argument("make_dg_pair: lambda has the wrong length");
  for (int k = 0; k < D.P.dim(); ++k)
    if (!lambda[k].is_zero() && D.P.g.basis.deg(k) != 1)
      throw std::invalid_argument(
          "make_dg_pair: lambda must live in the degree-1 slice");
  Report r = lambda_checks(D.P, D.del, lambda);
  if (!r.all_pass())
    throw std::domain_error("make_dg_pair: supplied lambda fails " +
                            r.first_fail()->key);
  D.lambda = lambda;
  return D;
}

// --- functions on the integrating group ---

void hfun_add(HFunction& a, const HFunction& b, const Rat& c) {
  for (const auto& [m, p] : b.values) {
    auto it = a.values.find(m);
    Poly v = (it == a.values.end() ? Poly{} : it->second) + p * c;
    if (v.is_zero()) {
      if (it != a.values.end()) a.values.erase(it);
    } else {
      a.values[m] = std::move(v);
    }
  }
}

bool hfun_zero(const HFunction& f) {
  for (const auto& [m, p] : f.values) {
    (void)m;
    if (!p.is_zero()) return false;
  }
  return true;
}

HFunction h_unit(const HCPair& P) {
  (void)P;
  HFunction f;
  f.degree = 0;
  f.values[PBWMon{}] = Poly{Rat(1)};
  return f;
}

Rat h_counit(const HCPair& P, const HFunction& f) {
  (void)P;
  auto it = f.values.find(PBWMon{});
  return it == f.values.end() ? Rat(0) : it->second.eval_at_zero();
}

UPoly upoly_of(const UElem& u) {
  UPoly out;
  for (const auto& [m, c] : u) out[m] = Poly{c};
  return out;
}

UPoly upoly_mul(const HCPair& P, const UPoly& a, const UPoly& b) {
  return upoly_mul_env(P.env(), a, b);
}

Poly reduce_evaluate(const HCPair& P, const HFunction& f, const UPoly& u,
                     const PolyVec& at) {
  std::map<int, Poly> sub = point_subst(P.G0, at);
  Poly out;
  PBWMon s, q;
  for (const auto& [m, coeff] : u) {
    if (coeff.is_zero()) continue;
    split_mon(P, m, s, q);
    auto it = f.values.find(s);
    if (it == f.values.end()) continue;
    // peel the g0 tail into invariant fields, move to the evaluation point,
    // and only then multiply the coefficient (it is a function of the
    // original argument, not of the point f ends up evaluated at)
    Poly val = P.jets.peel(q, it->second, 0);
    val = val.substitute(sub);
    out += val * coeff;
  }
  return out;
}

Poly reduce_evaluate(const HCPair& P, const HFunction& f, const UElem& u,
                     const PolyVec& at) {
  return reduce_evaluate(P, f, upoly_of(u), at);
}

HFunction h_multiply(const HCPair& P, const HFunction& f1,
                     const HFunction& f2) {
  HFunction out;
  out.degree = f1.degree + f2.degree;
  for (const PBWMon& u : P.fiber_mons) {
    UPair cp = P.env().coproduct(UElem{{u, Rat(1)}});
    Poly acc;
    for (const auto& [legs, c] : cp) {
      for (int l : legs.first)
        if (!P.is_fiber(l))
          throw std::logic_error("h_multiply: coproduct left the fiber");
      auto ia = f1.values.find(legs.first);
      if (ia == f1.values.end()) continue;
      auto ib = f2.values.find(legs.second);
      if (ib == f2.values.end()) continue;
      // (f1 (x) f2)(a (x) b) = (-1)^{|f2||a|} f1(a) f2(b)
      int sign = koszul_sign(f2.degree, P.env().mon_degree(legs.first));
      acc += ia->second * ib->second * (c * sign);
    }
    if (!acc.is_zero()) out.values[u] = std::move(acc);
  }
  return out;
}

HTensor2 h_comultiply(const HCPair& P, const HFunction& f) {
  HTensor2 t;
  t.degree = f.degree;
  PolyVec E = bch(P.G0, P.G0.point(0), P.G0.point(1));
  for (const PBWMon& u1 : P.fiber_mons)
    for (const PBWMon& u2 : P.fiber_mons) {
      if (static_cast<int>(u1.size() + u2.size()) > P.W) continue;
      UPoly arg = upoly_mul_env(P.env(), UPoly{{u1, Poly{Rat(1)}}},
                                P.alpha_fiber.at(u2));
      Poly val = reduce_evaluate(P, f, arg, E);
      if (!val.is_zero()) t.values[{u1, u2}] = std::move(val);
    }
  return t;
}

// --- the coordinate model ---

HFunction BuiltHopf::coordinate_fn(const HCPair& P, int i) const {
  const PBWMon& m = mons.at(i);
  PBWMon s, q;
  split_mon(P, m, s, q);
  HFunction f;
  f.degree = -P.env().mon_degree(m);
  f.values[s] = P.jets.from_coeffs({{q, Rat(1)}});
  return f;
}

TElem BuiltHopf::to_coords(const HCPair& P, const HFunction& f) const {
  // phi_f(s q) = [peel_q f(s)](e); components beyond the weight cap are the
  // model's defining projection and are dropped
  TElem out;
  for (const auto& [s, p] : f.values) {
    int room = P.W - static_cast<int>(s.size());
    for (const auto& [q, c] : P.jets.to_coeffs(p)) {
      if (c == 0 || static_cast<int>(q.size()) > room) continue;
      PBWMon m = join_mon(P, s, q);
      auto it = index.find(m);
      if (it == index.end())
        throw std::logic_error("to_coords: monomial missing from the basis");
      out[it->second] = c;
    }
  }
  return out;
}

HFunction BuiltHopf::from_coords(const HCPair& P, const TElem& v) const {
  HFunction f;
  f.degree = H.elem_degree(v);
  for (const auto& [i, c] : v) hfun_add(f, coordinate_fn(P, i), c);
  return f;
}

Tensor BuiltHopf::tensor_coords(const HCPair& P, const HTensor2& t) const {
  Tensor out;
  PolyVec zero1 = polyvec_zero(P.G0.dim());
  std::map<int, Poly> kill1;
  for (int i = 0; i < P.G0.dim(); ++i) kill1[P.G0.coord[1][i]] = Poly{};
  for (const auto& [key, p] : t.values) {
    const PBWMon& u1 = key.first;
    const PBWMon& u2 = key.second;
    // <f_{m1} (x) f_{m2}, .> crosses f_{m2} past the first argument
    int sign = koszul_sign(P.env().mon_degree(u2), P.env().mon_degree(u1));
    int room2 = P.W - static_cast<int>(u2.size());
    for (const PBWMon& q2 : P.jets.mons) {
      if (static_cast<int>(q2.size()) > room2) continue;
      Poly p2 = P.jets.peel(q2, p, 1).substitute(kill1);
      if (p2.is_zero()) continue;
      int i2 = index.at(join_mon(P, u2, q2));
      int room1 = P.W - static_cast<int>(u1.size());
      for (const auto& [q1, c] : P.jets.to_coeffs(p2)) {
        if (c == 0 || static_cast<int>(q1.size()) > room1) continue;
        int i1 = index.at(join_mon(P, u1, q1));
        Rat& slot = out[{i1, i2}];
        slot += c * sign;
        if (slot == 0) out.erase({i1, i2});
      }
    }
  }
  return out;
}

BuiltHopf build_hopf(const HCPair& P, ExecMode mode) {
  BuiltHopf B;
  B.mons = P.env().basis(P.W);
  for (size_t i = 0; i < B.mons.size(); ++i)
    B.index[B.mons[i]] = static_cast<int>(i);
  int dim = static_cast<int>(B.mons.size());
  if (dim == 0 || !B.mons[0].empty())
    throw std::logic_error("build_hopf: basis does not start at the unit");

  TruncatedHopf& H = B.H;
  H.name = "H(" + P.g.name + ")";
  H.W = P.W;
  H.commutative = true;
  for (int i = 0; i < dim; ++i) {
    H.labels.push_back(P.env().mon_str(B.mons[i]));
    H.degrees.push_back(-P.env().mon_degree(B.mons[i]));
    H.weights.push_back(static_cast<int>(B.mons[i].size()));
    H.index[H.labels.back()] = i;
  }
  H.unit = TElem{{0, Rat(1)}};

  std::vector<HFunction> fn(dim);
  for (int i = 0; i < dim; ++i) fn[i] = B.coordinate_fn(P, i);

  for (int i = 0; i < dim; ++i) {
    Rat e = h_counit(P, fn[i]);
    if (e != 0) H.counit_values[i] = e;
  }

  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      if (H.weights[i] + H.weights[j] > P.W) continue;
      TElem v = B.to_coords(P, h_multiply(P, fn[i], fn[j]));
      if (v.empty()) continue;
      H.mu_table[{i, j}] = v;
      if (i != j) {
        int s = koszul_sign(H.degrees[i], H.degrees[j]);
        H.mu_table[{j, i}] = s == 1 ? v : vec_scale(v, Rat(s));
      }
    }

  H.delta_table.resize(dim);
  for (int i = 0; i < dim; ++i)
    H.delta_table[i] = B.tensor_coords(P, h_comultiply(P, fn[i]));

  // antipode by the identity 1 (x) S slot of mu (S (x) id) Delta = eta eps:
  // S f_i = -sum_{(a,b) != (1, f_i)} c f_a S(f_b).  Each pass fixes one more
  // weight of the output (the unknown enters multiplied by weight >= 1), so
  // W+1 passes reach a fixpoint; one extra pass certifies it.
  std::vector<TElem> S(dim);
  S[0] = H.unit;
  bool stable = false;
  for (int pass = 0; pass <= P.W + 2 && !stable; ++pass) {
    std::vector<TElem> next(dim);
    next[0] = H.unit;
    for (int i = 1; i < dim; ++i) {
      TElem acc;
      for (const auto& [key, c] : H.delta_table[i]) {
        int a = key[0], b = key[1];
        if (a == 0 && b == i) continue;
        TElem t = H.mul(TElem{{a, c}}, S[b]);
        for (const auto& [k, ck] : t) {
          Rat& slot = acc[k];
          slot += ck;
          if (slot == 0) acc.erase(k);
        }
      }
      next[i] = vec_scale(acc, Rat(-1));
    }
    stable = next == S;
    S = std::move(next);
  }
  if (!stable)
    throw std::domain_error(
        "build_hopf: antipode recursion failed to stabilize");
  H.antipode_table = std::move(S);

  hopf_finalize(H, mode);
  return B;
}

HFunction h_antipode(const HCPair& P, const BuiltHopf& B, const HFunction& f) {
  HFunction out = B.from_coords(P, B.H.antipode_elem(B.to_coords(P, f)));
  out.degree = f.degree;
  return out;
}

HopfDerivation build_Q(const HCPair& P, const BuiltHopf& B,
                       const GradedLinearMap& del, const PolyVec& lambda) {
  int dim = static_cast<int>(B.mons.size());
  UPoly lamU;
  int gain = 0;
  for (size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k].is_zero()) continue;
    lamU[{static_cast<int>(k)}] = lambda[k];
    gain = std::max(gain, lambda[k].total_degree() - 1);
  }
  // the degree-zero columns of del are the part lambda integrates; the
  // transpose term below must see only the fiber part
  GradedLinearMap dfib;
  dfib.degree = del.degree;
  for (const auto& [j, col] : del.columns)
    if (j < P.fiber_count) dfib.columns[j] = col;
  HopfDerivation Q;
  Q.degree = 1;
  Q.gain = gain;
  Q.values.resize(dim);
  PolyVec pt = P.G0.point(0);
  std::vector<UElem> dmon(dim);
  for (int k = 0; k < dim; ++k)
    dmon[k] = P.env().apply_derivation(dfib, UElem{{B.mons[k], Rat(1)}});
  for (int i = 0; i < dim; ++i) {
    HFunction f = B.coordinate_fn(P, i);
    HFunction Qf;
    Qf.degree = f.degree + 1;
    for (const PBWMon& u : P.fiber_mons) {
      // multiplicative field of the cocycle lambda: left translation in the
      // fiber argument, with the Koszul sign of moving lambda past u
      UPoly ulam = upoly_mul_env(P.env(), lamU, UPoly{{u, Poly{Rat(1)}}});
      Poly t1 = reduce_evaluate(P, f, ulam, pt);
      Poly val = deg_odd(P.env().mon_degree(u)) ? -t1 : t1;
      if (!val.is_zero()) Qf.values[u] = std::move(val);
    }
    TElem qi = B.to_coords(P, Qf);
    // graded transpose of the fiber differential, taken monomial by
    // monomial: the coordinate at m is -(-1)^{|f|} f(del m) at the identity.
    // (jets of a per-fiber value polynomial would compose the G0 derivatives
    // in the wrong order when del produces letters that fail to commute
    // with them); crossing the degree +1 operator past f costs (-1)^{|f|},
    // without which the field fails to be a coderivation on odd rows
    Rat sg(deg_odd(f.degree) ? 1 : -1);
    for (int k = 0; k < dim; ++k) {
      if (dmon[k].empty()) continue;
      Rat c = reduce_evaluate(P, f, dmon[k], pt).eval_at_zero();
      if (c == 0) continue;
      Rat& slot = qi[k];
      slot += sg * c;
      if (slot == 0) qi.erase(k);
    }
    Q.values[i] = std::move(qi);
  }
  return Q;
}

DGLASpec dgla_of_group(const HCPair& P, const BuiltHopf& B,
                       const HopfDerivation& Q, Report* rep) {
  int n = P.dim();
  DGLASpec out;
  out.name = P.g.name + "-tangent";
  out.weight = P.W;
  out.basis = P.g.basis;

  std::vector<int> li(n);
  std::vector<PointDerivation> v(n);
  for (int l = 0; l < n; ++l) {
    li[l] = B.index.at(PBWMon{l});
    v[l].degree = P.g.basis.deg(l);
    v[l].values = SparseVec{{li[l], Rat(1)}};
  }
  std::map<int, int> letter_of;
  for (int l = 0; l < n; ++l) letter_of[li[l]] = l;

  bool closed = true;
  std::string close_w;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      if (a == b && !deg_odd(P.g.basis.deg(a))) continue;
      PointDerivation w = tangent_bracket(B.H, v[a], v[b]);
      SparseVec col;
      for (const auto& [i, c] : w.values) {
        auto it = letter_of.find(i);
        if (it == letter_of.end()) {
          if (closed) {
            closed = false;
            close_w = "[" + P.g.basis.name(a) + ", " + P.g.basis.name(b) +
                      "] hits " + B.H.labels[i];
          }
          continue;
        }
        col[it->second] = c;
      }
      if (!col.empty()) out.bracket_table[{a, b}] = col;
    }

  out.differential.degree = 1;
  for (int l = 0; l < n; ++l) {
    // delta_Q(v) = v o Q, with the Koszul sign of moving the degree-|v|
    // functional past the degree-1 field (odd letters flip; fixed by the
    // requirement delta_Q = del on both the lambda- and the del-path)
    int s = deg_odd(P.g.basis.deg(l)) ? -1 : 1;
    SparseVec dcol;
    for (int l2 = 0; l2 < n; ++l2) {
      auto it = Q.values[li[l2]].find(li[l]);
      if (it != Q.values[li[l2]].end() && it->second != 0)
        dcol[l2] = it->second * s;
    }
    if (!dcol.empty()) out.differential.columns[l] = dcol;
  }

  if (rep) {
    rep->add("tangent_brackets_close", closed, close_w);
    HopfDerivation xi = mc_right(B.H, Q);
    PointDerivation xe = value_at_unit(B.H, xi);
    PointDerivation qe = value_at_unit(B.H, Q);
    rep->add("mc_value_at_unit", xe.values == qe.values,
             xe.values == qe.values ? "" : B.H.elem_str(xe.values));
    std::string w;
    bool coc = is_group_one_cocycle(B.H, xi, &w);
    rep->add("mc_group_cocycle", coc, w);
  }
  return out;
}

Report extended_route(const DGHCPair& D, ExecMode mode) {
  const HCPair& P = D.P;
  int fc = P.fiber_count;
  HCPair Pe = make_pair(extended_dgla(P.g), P.W);
  int dl = Pe.g.basis.index_of("del");
  if (dl != fc)
    throw std::logic_error("extended_route: del landed off the fiber edge");
  int ne = Pe.dim();

  Report rep;
  GradedLinearMap addel = Pe.g.adjoint_gen(dl);
  PolyVec lt = polyvec_zero(ne);
  for (int k = 0; k < ne; ++k) {
    lt[k] = Pe.alpha[dl][k];
    if (k == dl) lt[k] -= Poly{Rat(1)};
  }
  Report lr = lambda_checks(Pe, addel, lt);
  for (const CheckLine& line : lr.lines)
    rep.add("extended_" + line.key, line.pass, line.witness);

  BuiltHopf Be = build_hopf(Pe, mode);
  HopfDerivation Qt = build_Q(Pe, Be, addel, lt);

  {
    // functions vanishing on U(g) = span of duals of del-containing
    // monomials; Q~ must not leak them into the del-free part
    bool ok = true;
    std::string w;
    for (size_t i = 0; i < Be.mons.size() && ok; ++i) {
      if (!std::binary_search(Be.mons[i].begin(), Be.mons[i].end(), dl))
        continue;
      for (const auto& [k, c] : Qt.values[i]) {
        (void)c;
        if (!std::binary_search(Be.mons[k].begin(), Be.mons[k].end(), dl)) {
          ok = false;
          w = Be.H.labels[i] + " -> " + Be.H.labels[k];
          break;
        }
      }
    }
    rep.add("extended_ideal_preserved", ok, w);
  }

  BuiltHopf Bb = build_hopf(P, mode);
  HopfDerivation Qb = build_Q(P, Bb, D.del, D.lambda);

  {
    // del-free letters lift by l -> l + (l >= fc); the map is increasing, so
    // base monomials lift sorted and the two Q tables are comparable
    auto lift = [&](const PBWMon& m) {
      PBWMon r;
      for (int l : m) r.push_back(l < fc ? l : l + 1);
      return r;
    };
    auto lower = [&](const PBWMon& m) {
      PBWMon r;
      for (int l : m) r.push_back(l < fc ? l : l - 1);
      return r;
    };
    int margin = P.W - std::max(Qb.gain, Qt.gain);
    bool ok = true;
    std::string w;
    for (size_t i = 0; i < Bb.mons.size() && ok; ++i) {
      if (static_cast<int>(Bb.mons[i].size()) > margin) continue;
      TElem restricted;
      int ie = Be.index.at(lift(Bb.mons[i]));
      for (const auto& [k, c] : Qt.values[ie]) {
        if (std::binary_search(Be.mons[k].begin(), Be.mons[k].end(), dl))
          continue;
        restricted[Bb.index.at(lower(Be.mons[k]))] = c;
      }
      if (restricted != Qb.values[i]) {
        ok = false;
        w = "Q(" + Bb.H.labels[i] + ")";
      }
    }
    rep.add("extended_restriction_matches", ok, w);
  }

  {
    std::string w;
    bool ok = is_multiplicative(Be.H, Qt, &w);
    rep.add("extended_q_multiplicative", ok, w);
  }
  return rep;
}

// --- Chevalley-Eilenberg group ---

namespace {

// componentwise product of arity-2 tensors with the middle crossing sign
Tensor tensor2_mul(const TruncatedHopf& H, const Tensor& s, const Tensor& t) {
  Tensor out;
  for (const auto& [k1, c1] : s)
    for (const auto& [k2, c2] : t) {
      int sign = koszul_sign(H.deg(k1[1]), H.deg(k2[0]));
      TElem left = H.mul(TElem{{k1[0], Rat(1)}}, TElem{{k2[0], Rat(1)}});
      TElem right = H.mul(TElem{{k1[1], Rat(1)}}, TElem{{k2[1], Rat(1)}});
      for (const auto& [ia, ca] : left)
        for (const auto& [ib, cb] : right) {
          Rat& slot = out[{ia, ib}];
          slot += c1 * c2 * ca * cb * sign;
          if (slot == 0) out.erase({ia, ib});
        }
    }
  return out;
}

void gc_mons_rec(const GCAlgebra& A, int from, int room, GCMon& cur,
                 std::vector<GCMon>& out) {
  out.push_back(cur);
  for (int i = from; i < A.gens.size(); ++i) {
    int cap = deg_odd(A.gens.deg(i)) ? 1 : room;
    for (int e = 1; e <= cap && e <= room; ++e) {
      cur.push_back({i, e});
      gc_mons_rec(A, i + 1, room - e, cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

CEGroup ce_group(const DGLASpec& g, int W, ExecMode mode) {
  bool pos = false, neg = false;
  for (Deg d : g.basis.degrees) {
    if (d > 0) pos = true;
    if (d < 0) neg = true;
  }
  if (pos && neg)
    throw std::invalid_argument(
        "ce_group: nonzero degrees must be one-sided, got both signs");

  CEGroup C;
  int n = g.basis.size();
  for (int i = 0; i < n; ++i) {
    C.A.gens.names.push_back(g.basis.name(i) + "*");
    C.A.gens.degrees.push_back(1 - g.basis.deg(i));
  }
  C.A.weight_cap = W;
  C.A.gens.validate();

  {
    GCMon cur;
    gc_mons_rec(C.A, 0, W, cur, C.mons);
    std::sort(C.mons.begin(), C.mons.end(),
              [](const GCMon& a, const GCMon& b) {
                int wa = gc_mon_weight(a), wb = gc_mon_weight(b);
                return wa != wb ? wa < wb : a < b;
              });
  }
  for (size_t i = 0; i < C.mons.size(); ++i)
    C.index[C.mons[i]] = static_cast<int>(i);
  int dim = static_cast<int>(C.mons.size());

  TruncatedHopf& H = C.H;
  H.name = "CE(" + g.name + ")";
  H.W = W;
  H.commutative = true;
  for (int i = 0; i < dim; ++i) {
    H.labels.push_back(C.A.mon_str(C.mons[i]));
    H.degrees.push_back(gc_mon_degree(C.A.gens, C.mons[i]));
    H.weights.push_back(gc_mon_weight(C.mons[i]));
    H.index[H.labels.back()] = i;
  }
  H.unit = TElem{{0, Rat(1)}};
  H.counit_values = SparseVec{{0, Rat(1)}};

  auto translate = [&](const GCElement& e) {
    TElem v;
    for (const auto& [m, c] : e.terms) v[C.index.at(m)] = c;
    return v;
  };

  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j) {
      if (H.weights[i] + H.weights[j] > W) continue;
      GCElement p = C.A.mul(GCElement{{{C.mons[i], Rat(1)}}},
                            GCElement{{{C.mons[j], Rat(1)}}});
      if (p.is_zero()) continue;
      TElem v = translate(p);
      H.mu_table[{i, j}] = v;
      if (i != j) {
        int s = koszul_sign(H.degrees[i], H.degrees[j]);
        H.mu_table[{j, i}] = s == 1 ? v : vec_scale(v, Rat(s));
      }
    }

  // Delta is multiplicative with primitive generators; peel one letter at a
  // time (monomials are sorted by weight, so the tail is already done)
  H.delta_table.resize(dim);
  H.delta_table[0] = Tensor{{{0, 0}, Rat(1)}};
  for (int i = 1; i < dim; ++i) {
    const GCMon& m = C.mons[i];
    int l = m[0].first;
    GCMon tail = m;
    if (--tail[0].second == 0) tail.erase(tail.begin());
    int il = C.index.at(GCMon{{l, 1}});
    Tensor prim{{{il, 0}, Rat(1)}, {{0, il}, Rat(1)}};
    H.delta_table[i] = tensor2_mul(H, prim, H.delta_table[C.index.at(tail)]);
  }

  // S is an algebra map (commutative) negating the primitive generators,
  // so S(theta_m) = (-1)^{letter count} theta_m with no rearrangement sign
  for (int i = 0; i < dim; ++i) {
    int count = gc_mon_weight(C.mons[i]);
    H.antipode_table.push_back(TElem{{i, Rat(count % 2 ? -1 : 1)}});
  }

  hopf_finalize(H, mode);

  // Q theta^k = -1/2 sum (-1)^{d_i} c^k_{ij} theta^i theta^j - sum B_{kj} theta^j.
  // No input validation here: a broken bracket table must surface as
  // Q^2 != 0, not as a construction failure.
  GCDerivation Dce;
  Dce.degree = 1;
  Dce.gen_images.resize(n);
  for (const auto& [key, val] : g.bracket_table) {
    int i = key.first, j = key.second;
    for (const auto& [k, c] : val) {
      Rat ci = c * Rat(-1, 2) * Rat(deg_odd(g.basis.deg(i)) ? -1 : 1);
      Dce.gen_images[k] += C.A.from_letters({i, j}, ci);
      if (i != j) {
        // c_{ji} = -koszul(d_i, d_j) c_{ij}
        Rat cj = c * Rat(-1, 2) *
                 Rat(deg_odd(g.basis.deg(j)) ? -1 : 1) *
                 Rat(-koszul_sign(g.basis.deg(i), g.basis.deg(j)));
        Dce.gen_images[k] += C.A.from_letters({j, i}, cj);
      }
    }
  }
  // the transpose of del carries the graded-transpose sign (-1)^{|theta^k|},
  // mirroring the (-1)^{|f|} on the del term of build_Q
  for (const auto& [j, col] : g.differential.columns)
    for (const auto& [k, c] : col) {
      Rat s(deg_odd(1 - g.basis.deg(k)) ? -1 : 1);
      Dce.gen_images[k] += C.A.from_letters({j}, -c * s);
    }
  Dce.validate(C.A);

  C.Q.degree = 1;
  C.Q.gain = 0;
  for (const GCElement& img : Dce.gen_images)
    for (const auto& [m, c] : img.terms) {
      (void)c;
      C.Q.gain = std::max(C.Q.gain, gc_mon_weight(m) - 1);
    }
  for (int i = 0; i < dim; ++i)
    C.Q.values.push_back(
        translate(Dce.apply(C.A, GCElement{{{C.mons[i], Rat(1)}}})));

  std::string w;
  if (!is_multiplicative(H, C.Q, &w))
    throw std::logic_error("ce_group: field is not multiplicative: " + w);
  return C;
}

}  // namespace glint
