#include <glint/dgla.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace glint {

SparseVec DGLASpec::bracket_basis(int i, int j) const {
  if (i == j && !deg_odd(basis.deg(i))) return {};
  if (i <= j) {
    auto it = bracket_table.find({i, j});
    return it == bracket_table.end() ? SparseVec{} : it->second;
  }
  SparseVec v = bracket_basis(j, i);
  return vec_scale(v, Rat(-koszul_sign(basis.deg(i), basis.deg(j))));
}

SparseVec DGLASpec::bracket(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) vec_add(out, bracket_basis(i, j), ci * cj);
  return out;
}

GradedLinearMap DGLASpec::adjoint(const SparseVec& x, Deg deg_x) const {
  GradedLinearMap m;
  m.degree = deg_x;
  for (int j = 0; j < basis.size(); ++j) {
    SparseVec col;
    for (const auto& [i, ci] : x) vec_add(col, bracket_basis(i, j), ci);
    if (!col.empty()) m.columns[j] = std::move(col);
  }
  return m;
}

GradedLinearMap DGLASpec::adjoint_gen(int i) const {
  SparseVec x{{i, Rat(1)}};
  return adjoint(x, basis.deg(i));
}

bool DGLASpec::degree_zero_only() const {
  for (Deg d : basis.degrees)
    if (d != 0) return false;
  return true;
}

bool DGLASpec::is_abelian() const {
  for (const auto& [k, v] : bracket_table)
    if (!v.empty()) return false;
  return true;
}

std::string DGLASpec::vec_str(const SparseVec& v) const {
  if (v.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : v) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1) os << rat_str(a) << "*";
    os << basis.name(i);
  }
  return os.str();
}

namespace {

// Incremental span over Q by Gaussian elimination on sparse vectors.
struct Span {
  // pivot index -> reduced vector with leading coefficient 1 at that index
  std::map<int, SparseVec> rows;

  // Reduces v; returns the residual (empty iff v was already in the span).
  SparseVec reduce(SparseVec v) const {
    while (!v.empty()) {
      int lead = v.begin()->first;
      auto it = rows.find(lead);
      if (it == rows.end()) return v;
      vec_add(v, it->second, -v.begin()->second);
    }
    return v;
  }

  bool add(const SparseVec& v) {
    SparseVec r = reduce(v);
    if (r.empty()) return false;
    Rat lead = r.begin()->second;
    rows[r.begin()->first] = vec_scale(r, Rat(1) / lead);
    return true;
  }

  size_t dim() const { return rows.size(); }
};

}  // namespace

int nilpotency_class(const DGLASpec& g) {
  int n = g.basis.size();
  std::vector<SparseVec> layer;  // spanning set of L_c
  for (int i = 0; i < n; ++i) layer.push_back(SparseVec{{i, Rat(1)}});
  size_t dim = static_cast<size_t>(n);
  for (int c = 1; c <= n + 1; ++c) {
    Span span;
    std::vector<SparseVec> next;
    for (int i = 0; i < n; ++i)
      for (const auto& v : layer) {
        SparseVec w = g.bracket(SparseVec{{i, Rat(1)}}, v);
        if (!w.empty() && span.add(w)) next.push_back(w);
      }
    if (span.dim() == 0) return c;
    // the series L_1 > L_2 > ... is descending, so a non-shrinking step
    // means it stabilized at a nonzero subspace
    if (span.dim() >= dim) return -1;
    dim = span.dim();
    layer = std::move(next);
  }
  return -1;
}

namespace {

std::string tuple_str(const DGLASpec& g, std::initializer_list<int> idx) {
  std::string s = "(";
  bool first = true;
  for (int i : idx) {
    if (!first) s += ",";
    first = false;
    s += g.basis.name(i);
  }
  s += ")";
  return s;
}

}  // namespace

Report check_gla(const DGLASpec& g, ExecMode mode) {
  Report rep;
  int n = g.basis.size();

  // basis sanity
  bool basis_ok = true;
  std::string basis_witness;
  try {
    g.basis.validate();
  } catch (const std::invalid_argument& e) {
    basis_ok = false;
    basis_witness = e.what();
  }
  rep.add("basis", basis_ok, basis_witness);
  if (!basis_ok) return rep;

  // storage convention: keys i <= j, diagonal only for odd generators
  {
    std::string w;
    for (const auto& [k, v] : g.bracket_table) {
      if (k.first < 0 || k.second < 0 || k.first >= n || k.second >= n || k.first > k.second) {
        w = "stored key (" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
        break;
      }
      if (k.first == k.second && !deg_odd(g.basis.deg(k.first))) {
        w = "diagonal bracket on even generator " + g.basis.name(k.first);
        break;
      }
    }
    rep.add("bracket_storage", w.empty(), w);
    if (!w.empty()) return rep;
  }

  // degree additivity
  {
    std::string w;
    for (const auto& [k, v] : g.bracket_table) {
      Deg want = g.basis.deg(k.first) + g.basis.deg(k.second);
      for (const auto& [t, c] : v) {
        if (g.basis.deg(t) != want) {
          w = tuple_str(g, {k.first, k.second}) + " -> " + g.basis.name(t);
          break;
        }
      }
      if (!w.empty()) break;
    }
    rep.add("bracket_degree", w.empty(), w);
    if (!w.empty()) return rep;
  }

  // graded Jacobi on every basis triple, including repeats:
  //   [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
  size_t total = static_cast<size_t>(n) * static_cast<size_t>(n) * static_cast<size_t>(n);
  std::vector<std::string> fails = sweep_failures(total, mode, [&](size_t t) -> std::string {
    int i = static_cast<int>(t / (static_cast<size_t>(n) * static_cast<size_t>(n)));
    int j = static_cast<int>((t / static_cast<size_t>(n)) % static_cast<size_t>(n));
    int k = static_cast<int>(t % static_cast<size_t>(n));
    SparseVec xi{{i, Rat(1)}}, xj{{j, Rat(1)}}, xk{{k, Rat(1)}};
    SparseVec lhs = g.bracket(xi, g.bracket(xj, xk));
    SparseVec rhs = g.bracket(g.bracket(xi, xj), xk);
    vec_add(rhs, g.bracket(xj, g.bracket(xi, xk)),
            Rat(koszul_sign(g.basis.deg(i), g.basis.deg(j))));
    vec_add(lhs, rhs, Rat(-1));
    if (lhs.empty()) return "";
    return tuple_str(g, {i, j, k}) + " residual " + g.vec_str(lhs);
  });
  std::string jw;
  for (const auto& f : fails)
    if (!f.empty()) {
      jw = f;
      break;
    }
  rep.add("jacobi", jw.empty(), jw);
  return rep;
}

Report check_dgla(const DGLASpec& g, ExecMode mode) {
  Report rep = check_gla(g, mode);
  if (!rep.all_pass()) return rep;
  int n = g.basis.size();

  // differential raises degree by exactly 1
  {
    std::string w;
    for (const auto& [i, col] : g.differential.columns) {
      for (const auto& [t, c] : col) {
        if (g.basis.deg(t) != g.basis.deg(i) + 1) {
          w = g.basis.name(i) + " -> " + g.basis.name(t);
          break;
        }
      }
      if (!w.empty()) break;
    }
    bool deg_ok = w.empty() && g.differential.degree == 1;
    if (w.empty() && g.differential.degree != 1)
      w = "declared degree " + std::to_string(g.differential.degree);
    rep.add("differential_degree", deg_ok, w);
    if (!deg_ok) return rep;
  }

  // dd = 0
  {
    GradedLinearMap dd = GradedLinearMap::compose(g.differential, g.differential);
    std::string w;
    if (!dd.is_zero()) {
      for (const auto& [i, col] : dd.columns)
        if (!col.empty()) {
          w = g.basis.name(i) + " -> " + g.vec_str(col);
          break;
        }
    }
    rep.add("differential_square", w.empty(), w);
  }

  // graded Leibniz of the differential
  {
    std::vector<std::string> fails = sweep_failures(
        static_cast<size_t>(n) * static_cast<size_t>(n), default_exec_mode(),
        [&](size_t t) -> std::string {
          int i = static_cast<int>(t / static_cast<size_t>(n));
          int j = static_cast<int>(t % static_cast<size_t>(n));
          if (i > j) return "";
          SparseVec xi{{i, Rat(1)}}, xj{{j, Rat(1)}};
          SparseVec lhs = g.differential.apply(g.bracket_basis(i, j));
          SparseVec rhs = g.bracket(g.differential.apply(xi), xj);
          vec_add(rhs, g.bracket(xi, g.differential.apply(xj)),
                  Rat(deg_odd(g.basis.deg(i)) ? -1 : 1));
          vec_add(lhs, rhs, Rat(-1));
          if (lhs.empty()) return "";
          return tuple_str(g, {i, j}) + " residual " + g.vec_str(lhs);
        });
    std::string w;
    for (const auto& f : fails)
      if (!f.empty()) {
        w = f;
        break;
      }
    rep.add("differential_leibniz", w.empty(), w);
  }
  (void)mode;
  return rep;
}

Report derivation_check(const DGLASpec& g, const GradedLinearMap& delta) {
  Report rep;
  int n = g.basis.size();
  std::string w;
  for (int i = 0; i < n && w.empty(); ++i) {
    for (int j = 0; j < n && w.empty(); ++j) {
      SparseVec xi{{i, Rat(1)}}, xj{{j, Rat(1)}};
      SparseVec lhs = delta.apply(g.bracket_basis(i, j));
      SparseVec rhs = g.bracket(delta.apply(xi), xj);
      vec_add(rhs, g.bracket(xi, delta.apply(xj)),
              Rat(koszul_sign(delta.degree, g.basis.deg(i))));
      vec_add(lhs, rhs, Rat(-1));
      if (!lhs.empty()) w = tuple_str(g, {i, j}) + " residual " + g.vec_str(lhs);
    }
  }
  rep.add("derivation", w.empty(), w);
  return rep;
}

Report representation_check(const DGLASpec& g, const LieRepresentation& rho) {
  Report rep;
  int n = g.basis.size();
  std::string w;
  if (rho.action.size() != static_cast<size_t>(n)) {
    rep.add("representation", false, "action count mismatch");
    return rep;
  }
  for (int i = 0; i < n && w.empty(); ++i) {
    for (int j = 0; j < n && w.empty(); ++j) {
      // rho([x_i, x_j])
      GradedLinearMap lhs;
      lhs.degree = rho.action[static_cast<size_t>(i)].degree +
                   rho.action[static_cast<size_t>(j)].degree;
      for (const auto& [k, c] : g.bracket_basis(i, j)) {
        const GradedLinearMap& rk = rho.action[static_cast<size_t>(k)];
        for (const auto& [s, col] : rk.columns) {
          SparseVec& slot = lhs.columns[s];
          vec_add(slot, col, c);
          if (slot.empty()) lhs.columns.erase(s);
        }
      }
      GradedLinearMap rhs = GradedLinearMap::commutator(rho.action[static_cast<size_t>(i)],
                                                        rho.action[static_cast<size_t>(j)]);
      // difference
      for (const auto& [s, col] : rhs.columns) {
        SparseVec& slot = lhs.columns[s];
        vec_add(slot, col, Rat(-1));
        if (slot.empty()) lhs.columns.erase(s);
      }
      if (!lhs.is_zero()) w = tuple_str(g, {i, j});
    }
  }
  rep.add("representation", w.empty(), w);
  return rep;
}

LieRepresentation adjoint_rep(const DGLASpec& g) {
  LieRepresentation rho;
  rho.target = g.basis;
  for (int i = 0; i < g.basis.size(); ++i) rho.action.push_back(g.adjoint_gen(i));
  return rho;
}

SparseVec Cochain::eval(std::vector<int> args) const {
  if (static_cast<int>(args.size()) != n)
    throw std::invalid_argument("cochain arity mismatch");
  // sort with sign; classical antisymmetry (degree-0 inputs)
  int sign = 1;
  for (size_t a = 0; a < args.size(); ++a)
    for (size_t b = a + 1; b < args.size(); ++b) {
      if (args[a] == args[b]) return {};
      if (args[a] > args[b]) {
        std::swap(args[a], args[b]);
        sign = -sign;
      }
    }
  auto it = values.find(args);
  if (it == values.end()) return {};
  return vec_scale(it->second, Rat(sign));
}

Cochain ce_coboundary(const DGLASpec& g, const LieRepresentation& rho, const Cochain& w) {
  if (!g.degree_zero_only())
    throw std::invalid_argument("classical coboundary needs a degree-0 algebra");
  if (w.n > kCochainCap) throw std::invalid_argument("cochain degree above cap");
  int n = g.basis.size();
  Cochain out;
  out.n = w.n + 1;

  // iterate strictly increasing tuples of length w.n+1
  std::vector<int> tuple(static_cast<size_t>(out.n));
  for (int k = 0; k < out.n; ++k) tuple[static_cast<size_t>(k)] = k;
  if (out.n > n) return out;
  while (true) {
    SparseVec val;
    // term 1: sum_i (-1)^i rho(X_i) w(..X_i..)
    for (int i = 0; i < out.n; ++i) {
      std::vector<int> rest;
      for (int k = 0; k < out.n; ++k)
        if (k != i) rest.push_back(tuple[static_cast<size_t>(k)]);
      SparseVec inner = w.eval(rest);
      if (!inner.empty())
        vec_add(val, rho.action[static_cast<size_t>(tuple[static_cast<size_t>(i)])].apply(inner),
                Rat(i % 2 ? -1 : 1));
    }
    // term 2: sum_{i<j} (-1)^{i+j} w([X_i,X_j], ..)
    for (int i = 0; i < out.n; ++i)
      for (int j = i + 1; j < out.n; ++j) {
        std::vector<int> rest;
        for (int k = 0; k < out.n; ++k)
          if (k != i && k != j) rest.push_back(tuple[static_cast<size_t>(k)]);
        SparseVec br = g.bracket_basis(tuple[static_cast<size_t>(i)], tuple[static_cast<size_t>(j)]);
        for (const auto& [t, c] : br) {
          std::vector<int> args;
          args.push_back(t);
          args.insert(args.end(), rest.begin(), rest.end());
          vec_add(val, w.eval(args), c * Rat((i + j) % 2 ? -1 : 1));
        }
      }
    if (!val.empty()) out.values[tuple] = val;

    // next increasing tuple
    int pos = out.n - 1;
    while (pos >= 0 && tuple[static_cast<size_t>(pos)] == n - out.n + pos) --pos;
    if (pos < 0) break;
    tuple[static_cast<size_t>(pos)] += 1;
    for (int k = pos + 1; k < out.n; ++k)
      tuple[static_cast<size_t>(k)] = tuple[static_cast<size_t>(k - 1)] + 1;
  }
  return out;
}

DGLASpec shifted_tangent_dgla(const DGLASpec& g0) {
  if (!g0.degree_zero_only())
    throw std::invalid_argument("shifted tangent input must be degree-0");
  int n = g0.basis.size();
  DGLASpec out;
  out.name = g0.name + "-t1";
  out.weight = g0.weight;
  // shifted copies first (PBW wants the fiber generators leftmost)
  for (int i = 0; i < n; ++i) {
    out.basis.names.push_back(g0.basis.name(i) + "[1]");
    out.basis.degrees.push_back(-1);
  }
  for (int i = 0; i < n; ++i) {
    out.basis.names.push_back(g0.basis.name(i));
    out.basis.degrees.push_back(0);
  }
  // [x,y] as in g0 at indices n+i; [x[1], y] = [x,y][1] with no extra sign
  // (check: [y, x[1]] derived by antisymmetry is [y,x][1], as required).
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SparseVec c = g0.bracket_basis(i, j);
      if (c.empty()) continue;
      if (i < j) {
        SparseVec shifted;
        for (const auto& [k, v] : c) shifted[n + k] = v;
        out.bracket_table[{n + i, n + j}] = std::move(shifted);
      }
      out.bracket_table[{i, n + j}] = c;  // image lands in the shifted block
    }
  // differential: x[1] -> x
  out.differential.degree = 1;
  for (int i = 0; i < n; ++i) out.differential.columns[i] = SparseVec{{n + i, Rat(1)}};
  return out;
}

DGLASpec ce_dual_dgla(const DGLASpec& g) {
  for (Deg d : g.basis.degrees)
    if (d > 0) throw std::invalid_argument("dual construction needs degrees <= 0");
  DGLASpec out;
  out.name = g.name + "-cedual";
  out.weight = g.weight;
  int n = g.basis.size();
  for (int i = 0; i < n; ++i) {
    out.basis.names.push_back(g.basis.name(i) + "*");
    out.basis.degrees.push_back(1 - g.basis.deg(i));
  }
  // abelian; differential = transpose of g's
  out.differential.degree = 1;
  for (const auto& [j, col] : g.differential.columns)
    for (const auto& [i, c] : col) {
      SparseVec& slot = out.differential.columns[i];
      slot[j] += c;
      if (slot[j] == 0) slot.erase(j);
    }
  return out;
}

DGLASpec extended_dgla(const DGLASpec& g) {
  DGLASpec out;
  out.name = g.name + "-ext";
  out.weight = g.weight;
  out.basis = g.basis;
  out.bracket_table = g.bracket_table;
  int del = out.basis.size();
  out.basis.names.push_back("del");
  out.basis.degrees.push_back(1);
  // [x_i, del] = -(-1)^{|x_i|} [del, x_i] = -(-1)^{|x_i|} dx_i
  for (int i = 0; i < del; ++i) {
    SparseVec dx = g.differential.apply(SparseVec{{i, Rat(1)}});
    if (dx.empty()) continue;
    out.bracket_table[{i, del}] =
        vec_scale(dx, Rat(deg_odd(g.basis.deg(i)) ? 1 : -1));
  }
  // new differential = ad_del: del -> 0, x -> dx
  out.differential.degree = 1;
  out.differential.columns = g.differential.columns;
  return out;
}

DGLASpec degree_zero_part(const DGLASpec& g, std::vector<int>& indices_out) {
  indices_out.clear();
  std::map<int, int> back;
  DGLASpec out;
  out.name = g.name + "-deg0";
  out.weight = g.weight;
  for (int i = 0; i < g.basis.size(); ++i)
    if (g.basis.deg(i) == 0) {
      back[i] = static_cast<int>(indices_out.size());
      indices_out.push_back(i);
      out.basis.names.push_back(g.basis.name(i));
      out.basis.degrees.push_back(0);
    }
  for (size_t a = 0; a < indices_out.size(); ++a)
    for (size_t b = a; b < indices_out.size(); ++b) {
      SparseVec br = g.bracket_basis(indices_out[a], indices_out[b]);
      if (br.empty()) continue;
      SparseVec mapped;
      for (const auto& [t, c] : br) {
        auto it = back.find(t);
        if (it == back.end())
          throw std::invalid_argument("degree-0 part is not a subalgebra");
        mapped[it->second] = c;
      }
      out.bracket_table[{static_cast<int>(a), static_cast<int>(b)}] = mapped;
    }
  out.differential.degree = 1;
  return out;
}

}  // namespace glint
