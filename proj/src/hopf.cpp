#include "glint/hopf.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "glint/uea.hpp"

namespace glint {

namespace {

TElem elem_basis(int i) { return TElem{{i, Rat(1)}}; }

void elem_trim(TElem& v) {
  for (auto it = v.begin(); it != v.end();)
    it = (it->second == 0) ? v.erase(it) : std::next(it);
}

void tensor_trim(Tensor& t) {
  for (auto it = t.begin(); it != t.end();)
    it = (it->second == 0) ? t.erase(it) : std::next(it);
}

// the slot-crossing rule: an operator of degree d applied at slot s picks up
// the Koszul sign against everything to its left
Rat prefix_sign(const TruncatedHopf& H, const std::vector<int>& key, int s, Deg d) {
  Deg acc = 0;
  for (int j = 0; j < s; ++j) acc += H.deg(key[j]);
  return koszul_sign(d, acc);
}

}  // namespace

void tensor_add(Tensor& a, const Tensor& b, const Rat& c) {
  for (const auto& [k, v] : b) {
    Rat& slot = a[k];
    slot += v * c;
    if (slot == 0) a.erase(k);
  }
}

Tensor tensor_scale(const Tensor& a, const Rat& c) {
  Tensor out;
  if (c == 0) return out;
  for (const auto& [k, v] : a) out[k] = v * c;
  return out;
}

bool tensor_is_zero(const Tensor& t) {
  for (const auto& [k, v] : t)
    if (v != 0) return false;
  return true;
}

Tensor tensor_of_elem(const TElem& v) {
  Tensor out;
  for (const auto& [i, c] : v)
    if (c != 0) out[{i}] = c;
  return out;
}

TElem elem_of_tensor(const Tensor& t) {
  TElem out;
  for (const auto& [k, c] : t) {
    if (k.size() != 1) throw std::invalid_argument("elem_of_tensor: arity != 1");
    out[k[0]] += c;
  }
  elem_trim(out);
  return out;
}

Deg TruncatedHopf::key_degree(const std::vector<int>& k) const {
  Deg d = 0;
  for (int i : k) d += deg(i);
  return d;
}

int TruncatedHopf::key_weight(const std::vector<int>& k) const {
  int w = 0;
  for (int i : k) w += weight(i);
  return w;
}

Deg TruncatedHopf::elem_degree(const TElem& v, bool* homogeneous) const {
  bool seen = false, homog = true;
  Deg d = 0;
  for (const auto& [i, c] : v) {
    if (c == 0) continue;
    if (!seen) {
      d = deg(i);
      seen = true;
    } else if (deg(i) != d) {
      homog = false;
    }
  }
  if (homogeneous) *homogeneous = homog;
  return seen ? d : 0;
}

TElem TruncatedHopf::mul(const TElem& a, const TElem& b) const {
  TElem out;
  for (const auto& [i, ci] : a) {
    if (ci == 0) continue;
    for (const auto& [j, cj] : b) {
      if (cj == 0) continue;
      auto it = mu_table.find({i, j});
      if (it == mu_table.end()) continue;
      for (const auto& [k, ck] : it->second) out[k] += ci * cj * ck;
    }
  }
  elem_trim(out);
  return out;
}

Tensor TruncatedHopf::delta_elem(const TElem& v) const {
  Tensor out;
  for (const auto& [i, c] : v)
    if (c != 0) tensor_add(out, delta_table.at(i), c);
  return out;
}

Rat TruncatedHopf::counit_elem(const TElem& v) const {
  Rat out(0);
  for (const auto& [i, c] : v) {
    auto it = counit_values.find(i);
    if (it != counit_values.end()) out += c * it->second;
  }
  return out;
}

TElem TruncatedHopf::antipode_elem(const TElem& v) const {
  TElem out;
  for (const auto& [i, c] : v) {
    if (c == 0) continue;
    for (const auto& [j, cj] : antipode_table.at(i)) out[j] += c * cj;
  }
  elem_trim(out);
  return out;
}

std::string TruncatedHopf::elem_str(const TElem& v) const {
  Tensor t = tensor_of_elem(v);
  return tensor_str(t);
}

std::string TruncatedHopf::tensor_str(const Tensor& t) const {
  std::vector<std::pair<std::vector<int>, Rat>> terms(t.begin(), t.end());
  terms.erase(std::remove_if(terms.begin(), terms.end(),
                             [](const auto& p) { return p.second == 0; }),
              terms.end());
  if (terms.empty()) return "0";
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    int wa = key_weight(a.first), wb = key_weight(b.first);
    if (wa != wb) return wa < wb;
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms) {
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
    std::string mon;
    if (k.empty()) {
      mon = "";
    } else {
      for (size_t s = 0; s < k.size(); ++s) {
        if (s) mon += " (x) ";
        mon += labels.at(k[s]);
      }
    }
    if (mon.empty()) {
      os << rat_str(a);
    } else if (a == 1) {
      os << mon;
    } else {
      os << rat_str(a) << "*" << mon;
    }
  }
  return os.str();
}

void hopf_validate(const TruncatedHopf& H) {
  const int n = H.dim();
  if ((int)H.degrees.size() != n || (int)H.weights.size() != n ||
      (int)H.delta_table.size() != n || (int)H.antipode_table.size() != n)
    throw std::invalid_argument("hopf_validate: table sizes disagree with basis");
  std::set<std::string> seen;
  for (int i = 0; i < n; ++i) {
    if (!seen.insert(H.labels[i]).second)
      throw std::invalid_argument("hopf_validate: duplicate label " + H.labels[i]);
    if (H.weights[i] < 0 || H.weights[i] > H.W)
      throw std::invalid_argument("hopf_validate: weight out of range at " +
                                  H.labels[i]);
  }
  if (H.unit.size() != 1 || H.unit.begin()->second != 1 ||
      H.weight(H.unit.begin()->first) != 0 ||
      H.deg(H.unit.begin()->first) != 0)
    throw std::invalid_argument(
        "hopf_validate: unit must be a single weight-0 degree-0 basis element");
  for (const auto& [ij, e] : H.mu_table) {
    Deg d = H.deg(ij.first) + H.deg(ij.second);
    for (const auto& [k, c] : e) {
      if (c == 0) continue;
      if (H.deg(k) != d)
        throw std::invalid_argument("hopf_validate: mu not degree 0 at (" +
                                    H.labels[ij.first] + ", " +
                                    H.labels[ij.second] + ")");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (const auto& [k, c] : H.delta_table[i]) {
      if (c == 0) continue;
      if (k.size() != 2)
        throw std::invalid_argument("hopf_validate: Delta arity != 2");
      if (H.key_degree(k) != H.deg(i))
        throw std::invalid_argument("hopf_validate: Delta not degree 0 at " +
                                    H.labels[i]);
    }
    for (const auto& [j, c] : H.antipode_table[i])
      if (c != 0 && H.deg(j) != H.deg(i))
        throw std::invalid_argument("hopf_validate: S not degree 0 at " +
                                    H.labels[i]);
  }
  for (const auto& [i, c] : H.counit_values)
    if (c != 0 && (H.deg(i) != 0 || H.weight(i) != 0))
      throw std::invalid_argument(
          "hopf_validate: counit supported outside weight 0");
}

Tensor flip_adjacent(const TruncatedHopf& H, const Tensor& t, int s) {
  Tensor out;
  for (const auto& [k, c] : t) {
    if (s < 0 || s + 1 >= (int)k.size())
      throw std::out_of_range("flip_adjacent: slot out of range");
    std::vector<int> nk = k;
    std::swap(nk[s], nk[s + 1]);
    out[nk] += c * koszul_sign(H.deg(k[s]), H.deg(k[s + 1]));
  }
  tensor_trim(out);
  return out;
}

Tensor apply_table_at(const TruncatedHopf& H, const Tensor& t, int s,
                      const std::vector<Tensor>& table, Deg op_degree) {
  Tensor out;
  for (const auto& [k, c] : t) {
    if (s < 0 || s >= (int)k.size())
      throw std::out_of_range("apply_table_at: slot out of range");
    Rat sgn = c * prefix_sign(H, k, s, op_degree);
    for (const auto& [ik, ic] : table.at(k[s])) {
      std::vector<int> nk(k.begin(), k.begin() + s);
      nk.insert(nk.end(), ik.begin(), ik.end());
      nk.insert(nk.end(), k.begin() + s + 1, k.end());
      out[nk] += sgn * ic;
    }
  }
  tensor_trim(out);
  return out;
}

Tensor mul_at(const TruncatedHopf& H, const Tensor& t, int s) {
  Tensor out;
  for (const auto& [k, c] : t) {
    if (s < 0 || s + 1 >= (int)k.size())
      throw std::out_of_range("mul_at: slot out of range");
    auto it = H.mu_table.find({k[s], k[s + 1]});
    if (it == H.mu_table.end()) continue;
    for (const auto& [j, cj] : it->second) {
      std::vector<int> nk(k.begin(), k.begin() + s);
      nk.push_back(j);
      nk.insert(nk.end(), k.begin() + s + 2, k.end());
      out[nk] += c * cj;
    }
  }
  tensor_trim(out);
  return out;
}

Tensor delta_at(const TruncatedHopf& H, const Tensor& t, int s) {
  return apply_table_at(H, t, s, H.delta_table, 0);
}

Tensor antipode_at(const TruncatedHopf& H, const Tensor& t, int s) {
  Tensor out;
  for (const auto& [k, c] : t) {
    if (s < 0 || s >= (int)k.size())
      throw std::out_of_range("antipode_at: slot out of range");
    for (const auto& [j, cj] : H.antipode_table.at(k[s])) {
      std::vector<int> nk = k;
      nk[s] = j;
      out[nk] += c * cj;
    }
  }
  tensor_trim(out);
  return out;
}

Tensor counit_at(const TruncatedHopf& H, const Tensor& t, int s) {
  Tensor out;
  for (const auto& [k, c] : t) {
    if (s < 0 || s >= (int)k.size())
      throw std::out_of_range("counit_at: slot out of range");
    auto it = H.counit_values.find(k[s]);
    if (it == H.counit_values.end() || it->second == 0) continue;
    std::vector<int> nk(k.begin(), k.begin() + s);
    nk.insert(nk.end(), k.begin() + s + 1, k.end());
    out[nk] += c * it->second;
  }
  tensor_trim(out);
  return out;
}

Tensor project_weight(const TruncatedHopf& H, const Tensor& t, int cap) {
  Tensor out;
  for (const auto& [k, c] : t)
    if (c != 0 && H.key_weight(k) <= cap) out[k] = c;
  return out;
}

Tensor delta_power_at(const TruncatedHopf& H, const Tensor& t, int s, int n) {
  if (n < 1) throw std::invalid_argument("delta_power_at: n < 1");
  Tensor out = t;
  for (int r = 1; r < n; ++r) out = delta_at(H, out, s);
  return out;
}

Tensor mu_power(const TruncatedHopf& H, const Tensor& t, int n) {
  // (a_1..a_n, b_1..b_n) -> (a_1 b_1, ..., a_n b_n): interleave, then contract
  Tensor out = t;
  for (int i = 0; i < n; ++i) {
    int pos = n + i;        // current slot of b_{i+1}
    int target = 2 * i + 1;
    for (; pos > target; --pos) out = flip_adjacent(H, out, pos - 1);
  }
  for (int i = 0; i < n; ++i) out = mul_at(H, out, i);
  return out;
}

namespace {

std::vector<std::vector<int>> tuples_within(const TruncatedHopf& H, int arity,
                                            int cap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int wleft) {
    if ((int)cur.size() == arity) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < H.dim(); ++i) {
      if (H.weight(i) > wleft) continue;
      cur.push_back(i);
      rec(wleft - H.weight(i));
      cur.pop_back();
    }
  };
  rec(cap);
  return out;
}

std::string diff_witness(const TruncatedHopf& H, const std::string& where,
                         const Tensor& lhs, const Tensor& rhs) {
  Tensor d = lhs;
  tensor_add(d, rhs, Rat(-1));
  return where + ": lhs - rhs = " + H.tensor_str(d);
}

}  // namespace

Report check_hopf_axioms(const TruncatedHopf& H, ExecMode mode) {
  Report rep;
  const int W = H.W;

  {  // unit: 1 * x = x = x * 1 (exact, all basis)
    auto fails = sweep_failures(H.dim(), mode, [&](int i) -> std::string {
      TElem x = elem_basis(i);
      if (H.mul(H.unit, x) != x)
        return "1*" + H.labels[i] + " != " + H.labels[i];
      if (H.mul(x, H.unit) != x)
        return H.labels[i] + "*1 != " + H.labels[i];
      return {};
    });
    rep.add("unit", fails.empty(), fails.empty() ? "" : fails.front());
  }

  {  // associativity on triples of total weight <= W
    auto triples = tuples_within(H, 3, W);
    auto fails = sweep_failures((int)triples.size(), mode, [&](int t) -> std::string {
      const auto& tr = triples[t];
      TElem a = elem_basis(tr[0]), b = elem_basis(tr[1]), c = elem_basis(tr[2]);
      TElem l = H.mul(H.mul(a, b), c), r = H.mul(a, H.mul(b, c));
      if (l != r)
        return "assoc(" + H.labels[tr[0]] + ", " + H.labels[tr[1]] + ", " +
               H.labels[tr[2]] + ")";
      return {};
    });
    rep.add("associativity", fails.empty(), fails.empty() ? "" : fails.front());
  }

  {  // counit: (eps (x) id) Delta = id = (id (x) eps) Delta
    auto fails = sweep_failures(H.dim(), mode, [&](int i) -> std::string {
      Tensor t = H.delta_table[i];
      TElem l = elem_of_tensor(counit_at(H, t, 0));
      TElem r = elem_of_tensor(counit_at(H, t, 1));
      if (l != elem_basis(i) || r != elem_basis(i)) return "counit(" + H.labels[i] + ")";
      return {};
    });
    rep.add("counit", fails.empty(), fails.empty() ? "" : fails.front());
  }

  {  // coassociativity, residual projected to total weight <= W
    auto fails = sweep_failures(H.dim(), mode, [&](int i) -> std::string {
      Tensor t = H.delta_table[i];
      Tensor l = project_weight(H, delta_at(H, t, 0), W);
      Tensor r = project_weight(H, delta_at(H, t, 1), W);
      if (l != r) return diff_witness(H, "coassoc(" + H.labels[i] + ")", l, r);
      return {};
    });
    rep.add("coassociativity", fails.empty(), fails.empty() ? "" : fails.front());
  }

  {  // bialgebra: Delta(ab) = Delta(a) Delta(b), eps(ab) = eps(a) eps(b)
    auto pairs = tuples_within(H, 2, W);
    auto fails = sweep_failures((int)pairs.size(), mode, [&](int p) -> std::string {
      int i = pairs[p][0], j = pairs[p][1];
      Tensor l = project_weight(H, H.delta_elem(H.mul(elem_basis(i), elem_basis(j))), W);
      Tensor t{{{i, j}, Rat(1)}};
      t = delta_at(H, t, 1);
      t = delta_at(H, t, 0);
      t = flip_adjacent(H, t, 1);
      t = mul_at(H, t, 0);
      t = mul_at(H, t, 1);
      Tensor r = project_weight(H, t, W);
      if (l != r)
        return diff_witness(H, "Delta(" + H.labels[i] + "*" + H.labels[j] + ")", l, r);
      Rat el = H.counit_elem(H.mul(elem_basis(i), elem_basis(j)));
      Rat er = H.counit_elem(elem_basis(i)) * H.counit_elem(elem_basis(j));
      if (el != er) return "eps(" + H.labels[i] + "*" + H.labels[j] + ")";
      return {};
    });
    rep.add("bialgebra", fails.empty(), fails.empty() ? "" : fails.front());
  }

  {  // unit is a coalgebra morphism: Delta(1) = 1 (x) 1, eps(1) = 1
    Tensor l = H.delta_elem(H.unit);
    Tensor r;
    for (const auto& [i, ci] : H.unit)
      for (const auto& [j, cj] : H.unit) r[{i, j}] += ci * cj;
    bool ok = l == r && H.counit_elem(H.unit) == 1;
    rep.add("unit_coalgebra", ok, ok ? "" : diff_witness(H, "Delta(1)", l, r));
  }

  {  // antipode: mu (S (x) id) Delta = eta eps = mu (id (x) S) Delta
    auto fails = sweep_failures(H.dim(), mode, [&](int i) -> std::string {
      Tensor t = H.delta_table[i];
      TElem l = elem_of_tensor(mul_at(H, antipode_at(H, t, 0), 0));
      TElem r = elem_of_tensor(mul_at(H, antipode_at(H, t, 1), 0));
      TElem want;
      Rat e = H.counit_elem(elem_basis(i));
      for (const auto& [j, c] : H.unit)
        if (e != 0) want[j] = e * c;
      if (l != want)
        return "antipode_left(" + H.labels[i] + ") = " + H.elem_str(l);
      if (r != want)
        return "antipode_right(" + H.labels[i] + ") = " + H.elem_str(r);
      return {};
    });
    rep.add("antipode", fails.empty(), fails.empty() ? "" : fails.front());
  }

  if (H.commutative) {  // mu o tau = mu on pairs of total weight <= W
    auto pairs = tuples_within(H, 2, W);
    auto fails = sweep_failures((int)pairs.size(), mode, [&](int p) -> std::string {
      int i = pairs[p][0], j = pairs[p][1];
      TElem l = H.mul(elem_basis(i), elem_basis(j));
      TElem r = H.mul(elem_basis(j), elem_basis(i));
      Rat s = koszul_sign(H.deg(i), H.deg(j));
      for (auto& [k, c] : r) c *= s;
      if (l != r) return "commut(" + H.labels[i] + ", " + H.labels[j] + ")";
      return {};
    });
    rep.add("commutativity", fails.empty(), fails.empty() ? "" : fails.front());
  }

  return rep;
}

void hopf_finalize(TruncatedHopf& H, ExecMode mode) {
  hopf_validate(H);
  Report rep = check_hopf_axioms(H, mode);
  if (!rep.all_pass()) {
    const CheckLine* f = rep.first_fail();
    throw std::runtime_error("hopf axioms failed for " + H.name + ": " + f->key +
                             " [" + f->witness + "]");
  }
}

TruncatedHopf hopf_of_uea(const DGLASpec& g, int W) {
  UEA U(g, W);
  auto mons = U.basis(W);
  TruncatedHopf H;
  H.name = "U(" + g.name + ")";
  H.W = W;
  H.commutative = g.is_abelian();
  std::map<PBWMon, int> idx;
  for (int i = 0; i < (int)mons.size(); ++i) {
    idx[mons[i]] = i;
    H.labels.push_back(U.mon_str(mons[i]));
    H.degrees.push_back(U.mon_degree(mons[i]));
    H.weights.push_back((int)mons[i].size());
    H.index[H.labels.back()] = i;
  }
  auto coords = [&](const UElem& u) {
    TElem out;
    for (const auto& [m, c] : u)
      if (c != 0) out[idx.at(m)] = c;
    return out;
  };
  H.unit = coords(U.one());
  for (int i = 0; i < (int)mons.size(); ++i) {
    UElem ei{{mons[i], Rat(1)}};
    for (int j = 0; j < (int)mons.size(); ++j) {
      UElem ej{{mons[j], Rat(1)}};
      TElem p = coords(U.multiply(ei, ej));
      if (!p.empty()) H.mu_table[{i, j}] = std::move(p);
    }
    Tensor d;
    for (const auto& [mm, c] : U.coproduct(ei))
      if (c != 0) d[{idx.at(mm.first), idx.at(mm.second)}] = c;
    H.delta_table.push_back(std::move(d));
    Rat e = U.counit(ei);
    if (e != 0) H.counit_values[i] = e;
    H.antipode_table.push_back(coords(U.antipode(ei)));
  }
  hopf_finalize(H);
  return H;
}

TruncatedHopf dualize(const TruncatedHopf& H) {
  TruncatedHopf D;
  D.name = "dual(" + H.name + ")";
  D.W = H.W;
  D.commutative = is_cocommutative(H);
  D.labels = H.labels;
  D.weights = H.weights;
  D.index = H.index;
  for (Deg d : H.degrees) D.degrees.push_back(-d);
  for (const auto& [i, c] : H.counit_values)
    if (c != 0) D.unit[i] = c;
  D.delta_table.assign(H.dim(), Tensor{});
  D.antipode_table.assign(H.dim(), TElem{});
  // mu* = Delta^T, Delta* = mu^T, with <u (x) v, phi (x) psi> = koszul(|v|,|phi|)...
  for (int x = 0; x < H.dim(); ++x) {
    for (const auto& [k, c] : H.delta_table[x]) {
      if (c == 0) continue;
      Rat s = koszul_sign(H.deg(k[0]), H.deg(k[1]));
      D.mu_table[{k[0], k[1]}][x] += s * c;
    }
    for (const auto& [j, c] : H.antipode_table[x])
      if (c != 0) D.antipode_table[j][x] += c;
  }
  for (const auto& [ij, e] : H.mu_table) {
    Rat s = koszul_sign(H.deg(ij.first), H.deg(ij.second));
    for (const auto& [x, c] : e)
      if (c != 0) D.delta_table[x][{ij.first, ij.second}] += s * c;
  }
  for (auto& [ij, e] : D.mu_table) elem_trim(e);
  for (auto& t : D.delta_table) tensor_trim(t);
  for (auto& e : D.antipode_table) elem_trim(e);
  for (const auto& [i, c] : H.unit)
    if (c != 0) D.counit_values[i] = c;
  hopf_finalize(D);
  return D;
}

bool is_cocommutative(const TruncatedHopf& H) {
  for (int i = 0; i < H.dim(); ++i)
    if (flip_adjacent(H, H.delta_table[i], 0) != H.delta_table[i]) return false;
  return true;
}

std::vector<TElem> antipode_from_axiom(const TruncatedHopf& H) {
  std::vector<TElem> S(H.dim());
  std::vector<int> order(H.dim());
  for (int i = 0; i < H.dim(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return H.weight(a) < H.weight(b); });
  const int i0 = H.unit.begin()->first;
  for (int x : order) {
    if (H.weight(x) == 0) {
      S[x] = elem_basis(x);
      continue;
    }
    // sum S(x1) x2 = eps(x) 1 = 0; the diagonal term (x, 1) isolates S(x)
    Rat diag(0);
    TElem rest;
    for (const auto& [k, c] : H.delta_table[x]) {
      if (c == 0) continue;
      if (k[0] == x && k[1] == i0) {
        diag += c;
        continue;
      }
      if (H.weight(k[0]) >= H.weight(x))
        throw std::domain_error(
            "antipode_from_axiom: coproduct not connected at " + H.labels[x]);
      TElem term = H.mul(S[k[0]], elem_basis(k[1]));
      for (const auto& [j, cj] : term) rest[j] += c * cj;
    }
    if (diag == 0)
      throw std::domain_error("antipode_from_axiom: missing diagonal at " +
                              H.labels[x]);
    elem_trim(rest);
    S[x] = TElem{};
    for (const auto& [j, cj] : rest) S[x][j] = -cj / diag;
  }
  return S;
}

TElem HopfDerivation::apply(const TElem& v) const {
  TElem out;
  for (const auto& [i, c] : v) {
    if (c == 0) continue;
    for (const auto& [j, cj] : values.at(i)) out[j] += c * cj;
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

HopfDerivation derivation_from_generators(const TruncatedHopf& H,
                                          const std::map<int, TElem>& gen_images,
                                          Deg degree, int gain) {
  HopfDerivation X;
  X.degree = degree;
  X.gain = gain;
  X.values.assign(H.dim(), TElem{});
  std::vector<int> order(H.dim());
  for (int i = 0; i < H.dim(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return H.weight(a) < H.weight(b); });
  for (int m : order) {
    int w = H.weight(m);
    if (w == 0) continue;  // X(1) = 0
    if (w == 1) {
      auto it = gen_images.find(m);
      if (it != gen_images.end()) X.values[m] = it->second;
      continue;
    }
    // factor e_m = (1/c) e_g * e_r with g of weight 1, r of weight w-1
    bool found = false;
    for (int g = 0; g < H.dim() && !found; ++g) {
      if (H.weight(g) != 1) continue;
      for (int r = 0; r < H.dim() && !found; ++r) {
        if (H.weight(r) != w - 1) continue;
        auto it = H.mu_table.find({g, r});
        if (it == H.mu_table.end() || it->second.size() != 1) continue;
        if (it->second.begin()->first != m) continue;
        Rat c = it->second.begin()->second;
        TElem lhs = H.mul(X.values[g], elem_basis(r));
        TElem rhs = H.mul(elem_basis(g), X.values[r]);
        Rat s = koszul_sign(degree, H.deg(g));
        TElem img;
        for (const auto& [j, cj] : lhs) img[j] += cj / c;
        for (const auto& [j, cj] : rhs) img[j] += s * cj / c;
        elem_trim(img);
        X.values[m] = std::move(img);
        found = true;
      }
    }
    if (!found)
      throw std::domain_error("derivation_from_generators: " + H.labels[m] +
                              " has no generator factorization");
  }
  return X;
}

bool derivation_leibniz_check(const TruncatedHopf& H, const HopfDerivation& X,
                              std::string* witness) {
  int cap = H.W - X.gain;
  for (int i = 0; i < H.dim(); ++i) {
    for (int j = 0; j < H.dim(); ++j) {
      if (H.weight(i) + H.weight(j) > cap) continue;
      TElem ab = H.mul(elem_basis(i), elem_basis(j));
      TElem l = X.apply(ab);
      TElem r = H.mul(X.values.at(i), elem_basis(j));
      Rat s = koszul_sign(X.degree, H.deg(i));
      for (const auto& [k, c] : H.mul(elem_basis(i), X.values.at(j))) r[k] += s * c;
      elem_trim(l);
      elem_trim(r);
      if (l != r) {
        if (witness)
          *witness = "Leibniz(" + H.labels[i] + ", " + H.labels[j] + ")";
        return false;
      }
    }
  }
  return true;
}

bool point_derivation_check(const TruncatedHopf& H, const PointDerivation& v,
                            std::string* witness) {
  auto ev = [&](const TElem& e) {
    Rat out(0);
    for (const auto& [i, c] : e) {
      auto it = v.values.find(i);
      if (it != v.values.end()) out += c * it->second;
    }
    return out;
  };
  for (int i = 0; i < H.dim(); ++i) {
    for (int j = 0; j < H.dim(); ++j) {
      if (H.weight(i) + H.weight(j) > H.W) continue;
      TElem ab = H.mul(elem_basis(i), elem_basis(j));
      Rat l = ev(ab);
      Rat r = ev(elem_basis(i)) * H.counit_elem(elem_basis(j)) +
              H.counit_elem(elem_basis(i)) * ev(elem_basis(j));
      if (l != r) {
        if (witness)
          *witness = "point(" + H.labels[i] + ", " + H.labels[j] + ")";
        return false;
      }
    }
  }
  return true;
}

namespace {

// contract slot s with the functional v (degree d), via the prefix rule
Tensor functional_at(const TruncatedHopf& H, const Tensor& t, int s,
                     const SparseVec& v, Deg d) {
  Tensor out;
  for (const auto& [k, c] : t) {
    auto it = v.find(k[s]);
    if (it == v.end() || it->second == 0) continue;
    std::vector<int> nk(k.begin(), k.begin() + s);
    nk.insert(nk.end(), k.begin() + s + 1, k.end());
    out[nk] += c * it->second * prefix_sign(H, k, s, d);
  }
  tensor_trim(out);
  return out;
}

}  // namespace

HopfDerivation left_translate(const TruncatedHopf& H, const PointDerivation& v) {
  HopfDerivation X;
  X.degree = v.degree;
  X.gain = 0;
  X.values.assign(H.dim(), TElem{});
  for (int i = 0; i < H.dim(); ++i)
    X.values[i] = elem_of_tensor(functional_at(H, H.delta_table[i], 1, v.values, v.degree));
  return X;
}

HopfDerivation right_translate(const TruncatedHopf& H, const PointDerivation& v) {
  HopfDerivation X;
  X.degree = v.degree;
  X.gain = 0;
  X.values.assign(H.dim(), TElem{});
  for (int i = 0; i < H.dim(); ++i)
    X.values[i] = elem_of_tensor(functional_at(H, H.delta_table[i], 0, v.values, v.degree));
  return X;
}

PointDerivation value_at_unit(const TruncatedHopf& H, const HopfDerivation& X) {
  PointDerivation v;
  v.degree = X.degree;
  for (int i = 0; i < H.dim(); ++i) {
    Rat c = H.counit_elem(X.values.at(i));
    if (c != 0) v.values[i] = c;
  }
  return v;
}

bool is_left_invariant(const TruncatedHopf& H, const HopfDerivation& X,
                       std::string* witness, int slack) {
  int cap = H.W - std::max(1, X.gain) - slack;
  int kcap = H.W - slack;
  std::vector<Tensor> xt(H.dim());
  for (int i = 0; i < H.dim(); ++i) xt[i] = tensor_of_elem(X.values.at(i));
  for (int i = 0; i < H.dim(); ++i) {
    if (H.weight(i) > cap) continue;
    Tensor l = project_weight(H, apply_table_at(H, H.delta_table[i], 1, xt, X.degree), kcap);
    Tensor r = project_weight(H, H.delta_elem(X.values.at(i)), kcap);
    if (l != r) {
      if (witness) *witness = diff_witness(H, "left_inv(" + H.labels[i] + ")", l, r);
      return false;
    }
  }
  return true;
}

bool is_multiplicative(const TruncatedHopf& H, const HopfDerivation& X,
                       std::string* witness) {
  int cap = H.W - std::max(1, X.gain);
  std::vector<Tensor> xt(H.dim());
  for (int i = 0; i < H.dim(); ++i) xt[i] = tensor_of_elem(X.values.at(i));
  for (int i = 0; i < H.dim(); ++i) {
    if (H.weight(i) > cap) continue;
    Tensor l = apply_table_at(H, H.delta_table[i], 0, xt, X.degree);
    tensor_add(l, apply_table_at(H, H.delta_table[i], 1, xt, X.degree));
    l = project_weight(H, l, H.W);
    Tensor r = project_weight(H, H.delta_elem(X.values.at(i)), H.W);
    if (l != r) {
      if (witness) *witness = diff_witness(H, "mult(" + H.labels[i] + ")", l, r);
      return false;
    }
  }
  // consequences: X vanishes at the unit and commutes with the inverse
  for (int i = 0; i < H.dim(); ++i) {
    if (H.weight(i) > cap) continue;
    if (H.counit_elem(X.values.at(i)) != 0) {
      if (witness) *witness = "X_e(" + H.labels[i] + ") != 0";
      return false;
    }
    TElem l = H.antipode_elem(X.apply(elem_basis(i)));
    TElem r = X.apply(H.antipode_elem(elem_basis(i)));
    if (l != r) {
      if (witness) *witness = "S o X != X o S at " + H.labels[i];
      return false;
    }
  }
  return true;
}

HopfDerivation derivation_commutator(const TruncatedHopf& H,
                                     const HopfDerivation& X,
                                     const HopfDerivation& Y) {
  HopfDerivation Z;
  Z.degree = X.degree + Y.degree;
  Z.gain = X.gain + Y.gain;
  Z.values.assign(H.dim(), TElem{});
  Rat s = koszul_sign(X.degree, Y.degree);
  for (int i = 0; i < H.dim(); ++i) {
    TElem v = X.apply(Y.values.at(i));
    for (const auto& [k, c] : Y.apply(X.values.at(i))) v[k] -= s * c;
    for (auto it = v.begin(); it != v.end();)
      it = (it->second == 0) ? v.erase(it) : std::next(it);
    Z.values[i] = std::move(v);
  }
  return Z;
}

PointDerivation tangent_bracket(const TruncatedHopf& H, const PointDerivation& v,
                                const PointDerivation& w) {
  return value_at_unit(
      H, derivation_commutator(H, left_translate(H, v), left_translate(H, w)));
}

HopfDerivation convolve_maps(const TruncatedHopf& H, const HopfDerivation& a,
                             const HopfDerivation& b) {
  HopfDerivation out;
  out.degree = a.degree + b.degree;
  out.gain = a.gain + b.gain;
  out.values.assign(H.dim(), TElem{});
  std::vector<Tensor> at(H.dim()), bt(H.dim());
  for (int i = 0; i < H.dim(); ++i) {
    at[i] = tensor_of_elem(a.values.at(i));
    bt[i] = tensor_of_elem(b.values.at(i));
  }
  for (int i = 0; i < H.dim(); ++i) {
    Tensor t = apply_table_at(H, H.delta_table[i], 1, bt, b.degree);
    t = apply_table_at(H, t, 0, at, a.degree);
    out.values[i] = elem_of_tensor(mul_at(H, t, 0));
  }
  return out;
}

namespace {

HopfDerivation identity_field(const TruncatedHopf& H) {
  HopfDerivation X;
  X.values.assign(H.dim(), TElem{});
  for (int i = 0; i < H.dim(); ++i) X.values[i] = elem_basis(i);
  return X;
}

HopfDerivation antipode_field(const TruncatedHopf& H) {
  HopfDerivation X;
  X.values = H.antipode_table;
  return X;
}

}  // namespace

HopfDerivation mc_right(const TruncatedHopf& H, const HopfDerivation& X) {
  HopfDerivation out = convolve_maps(H, X, antipode_field(H));
  out.gain = X.gain;
  return out;
}

HopfDerivation mc_right_inverse(const TruncatedHopf& H, const HopfDerivation& xi) {
  HopfDerivation out = convolve_maps(H, xi, identity_field(H));
  out.gain = xi.gain;
  return out;
}

Tensor rho_new(const TruncatedHopf& H, int basis_index) {
  Tensor t{{{basis_index}, Rat(1)}};
  t = delta_at(H, t, 0);
  t = delta_at(H, t, 0);       // x1 (x) x2 (x) x3
  t = antipode_at(H, t, 2);    // x1 (x) x2 (x) S(x3)
  t = flip_adjacent(H, t, 1);  // x1 (x) S(x3) (x) x2
  return mul_at(H, t, 0);      // x1 S(x3) (x) x2
}

Tensor adjoint_coaction(const TruncatedHopf& H, int basis_index) {
  return flip_adjacent(H, rho_new(H, basis_index), 0);
}

bool is_group_one_cocycle(const TruncatedHopf& H, const HopfDerivation& xi,
                          std::string* witness) {
  int cap = H.W - std::max(1, xi.gain);
  std::vector<Tensor> xt(H.dim());
  for (int i = 0; i < H.dim(); ++i) xt[i] = tensor_of_elem(xi.values.at(i));
  for (int x = 0; x < H.dim(); ++x) {
    if (H.weight(x) > cap) continue;
    Tensor l = project_weight(H, H.delta_elem(xi.values.at(x)), H.W);
    Tensor r;
    for (const auto& [j, cj] : xi.values.at(x))  // xi(x) (x) 1
      for (const auto& [u, cu] : H.unit) r[{j, u}] += cj * cu;
    tensor_add(r, apply_table_at(H, rho_new(H, x), 1, xt, xi.degree));
    r = project_weight(H, r, H.W);
    if (l != r) {
      if (witness) *witness = diff_witness(H, "cocycle(" + H.labels[x] + ")", l, r);
      return false;
    }
  }
  return true;
}

HopfCochain cochain_of_derivation(const HopfDerivation& X) {
  HopfCochain c;
  c.n = 1;
  c.degree = X.degree;
  c.gain = X.gain;
  for (const auto& v : X.values) c.values.push_back(tensor_of_elem(v));
  return c;
}

HopfDerivation derivation_of_cochain(const HopfCochain& c) {
  if (c.n != 1) throw std::invalid_argument("derivation_of_cochain: n != 1");
  HopfDerivation X;
  X.degree = c.degree;
  X.gain = c.gain;
  for (const auto& t : c.values) X.values.push_back(elem_of_tensor(t));
  return X;
}

namespace {

void coface_guard(const HopfCochain& c, int i) {
  if (c.n < 0 || c.n > 2)
    throw std::out_of_range("coface: cochain arity out of range (n <= 2)");
  if (i < 0 || i > c.n + 1) throw std::out_of_range("coface: index out of range");
}

}  // namespace

HopfCochain coface(const TruncatedHopf& H, const HopfCochain& c, int i) {
  coface_guard(c, i);
  HopfCochain out;
  out.n = c.n + 1;
  out.degree = c.degree;
  out.gain = c.gain;
  out.values.resize(H.dim());
  for (int x = 0; x < H.dim(); ++x) {
    if (i == 0) {
      out.values[x] = apply_table_at(H, H.delta_table[x], 1, c.values, c.degree);
    } else if (i <= c.n) {
      out.values[x] = delta_at(H, c.values[x], i - 1);
    } else {
      out.values[x] = apply_table_at(H, H.delta_table[x], 0, c.values, c.degree);
    }
  }
  return out;
}

HopfCochain cochain_differential(const TruncatedHopf& H, const HopfCochain& c) {
  HopfCochain out;
  out.n = c.n + 1;
  out.degree = c.degree;
  out.gain = c.gain;
  out.values.assign(H.dim(), Tensor{});
  for (int i = 0; i <= c.n + 1; ++i) {
    HopfCochain d = coface(H, c, i);
    Rat s = (i % 2 == 0) ? Rat(1) : Rat(-1);
    for (int x = 0; x < H.dim(); ++x) tensor_add(out.values[x], d.values[x], s);
  }
  return out;
}

HopfCochain coface_new(const TruncatedHopf& H, const HopfCochain& c, int i) {
  coface_guard(c, i);
  HopfCochain out;
  out.n = c.n + 1;
  out.degree = c.degree;
  out.gain = c.gain;
  out.values.resize(H.dim());
  for (int x = 0; x < H.dim(); ++x) {
    if (i == 0) {
      out.values[x] = apply_table_at(H, rho_new(H, x), 1, c.values, c.degree);
    } else if (i <= c.n) {
      out.values[x] = delta_at(H, c.values[x], i - 1);
    } else {
      Tensor t;  // c(x) (x) 1: append the unit slot on the right (degree 0)
      for (const auto& [k, v] : c.values[x]) {
        for (const auto& [u, cu] : H.unit) {
          std::vector<int> nk = k;
          nk.push_back(u);
          t[nk] += v * cu;
        }
      }
      out.values[x] = std::move(t);
    }
  }
  return out;
}

HopfCochain cochain_differential_new(const TruncatedHopf& H, const HopfCochain& c) {
  HopfCochain out;
  out.n = c.n + 1;
  out.degree = c.degree;
  out.gain = c.gain;
  out.values.assign(H.dim(), Tensor{});
  for (int i = 0; i <= c.n + 1; ++i) {
    HopfCochain d = coface_new(H, c, i);
    Rat s = (i % 2 == 0) ? Rat(1) : Rat(-1);
    for (int x = 0; x < H.dim(); ++x) tensor_add(out.values[x], d.values[x], s);
  }
  return out;
}

HopfCochain mc_n(const TruncatedHopf& H, const HopfCochain& c) {
  if (c.n == 0) return c;
  HopfCochain out;
  out.n = c.n;
  out.degree = c.degree;
  out.gain = c.gain;
  out.values.resize(H.dim());
  for (int x = 0; x < H.dim(); ++x) {
    Tensor t = H.delta_table[x];            // x1 (x) x2
    t = antipode_at(H, t, 1);               // x1 (x) S(x2)
    t = delta_power_at(H, t, 1, c.n);       // x1 (x) (m*)^n S(x2)
    t = apply_table_at(H, t, 0, c.values, c.degree);  // c(x1) (x) ...
    out.values[x] = mu_power(H, t, c.n);
  }
  return out;
}

bool cochain_equal(const TruncatedHopf& H, const HopfCochain& a,
                   const HopfCochain& b, std::string* witness) {
  if (a.n != b.n) {
    if (witness) *witness = "arity mismatch";
    return false;
  }
  int cap = H.W - std::max(a.gain, b.gain);
  for (int x = 0; x < H.dim(); ++x) {
    if (H.weight(x) > cap) continue;
    Tensor l = project_weight(H, a.values.at(x), H.W);
    Tensor r = project_weight(H, b.values.at(x), H.W);
    if (l != r) {
      if (witness) *witness = diff_witness(H, "cochain(" + H.labels[x] + ")", l, r);
      return false;
    }
  }
  return true;
}

}  // namespace glint
