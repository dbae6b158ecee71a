#include <glint/uea.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace glint {

void uelem_add(UElem& a, const UElem& b, const Rat& c) {
  if (c == 0) return;
  for (const auto& [m, v] : b) {
    Rat& slot = a[m];
    slot += v * c;
    if (slot == 0) a.erase(m);
  }
}

UElem uelem_scale(const UElem& a, const Rat& c) {
  UElem r;
  if (c == 0) return r;
  for (const auto& [m, v] : a) r.emplace(m, v * c);
  return r;
}

void upair_add(UPair& a, const UPair& b, const Rat& c) {
  if (c == 0) return;
  for (const auto& [m, v] : b) {
    Rat& slot = a[m];
    slot += v * c;
    if (slot == 0) a.erase(m);
  }
}

UEA::UEA(const DGLASpec& g, int weight) : g_(g), W_(weight) {
  if (weight < 0) throw std::invalid_argument("negative truncation weight");
}

UElem UEA::scalar(const Rat& c) const {
  UElem r;
  if (c != 0) r[{}] = c;
  return r;
}

UElem UEA::gen(int i) const {
  if (i < 0 || i >= g_.basis.size()) throw std::invalid_argument("generator out of range");
  UElem r;
  if (W_ >= 1) r[{i}] = Rat(1);
  return r;
}

Deg UEA::mon_degree(const PBWMon& m) const {
  Deg d = 0;
  for (int l : m) d += g_.basis.deg(l);
  return d;
}

bool UEA::mon_sorted(const PBWMon& m) const {
  for (size_t k = 0; k + 1 < m.size(); ++k) {
    if (m[k] > m[k + 1]) return false;
    if (m[k] == m[k + 1] && deg_odd(g_.basis.deg(m[k]))) return false;
  }
  return true;
}

const UElem& UEA::inversion(int a, int b) const {
  // normal form of the two-letter word (a, b) with a >= b (a > b inversion,
  // or a == b odd)
  std::lock_guard<std::mutex> lk(memo_mu_);
  auto it = memo2_.find({a, b});
  if (it != memo2_.end()) return it->second;
  UElem r;
  if (a == b) {
    // odd square: x x = 1/2 [x,x]
    for (const auto& [t, c] : g_.bracket_basis(a, a)) r[{t}] = c / 2;
  } else {
    int s = koszul_sign(g_.basis.deg(a), g_.basis.deg(b));
    r[{b, a}] = Rat(s);
    for (const auto& [t, c] : g_.bracket_basis(a, b)) {
      Rat& slot = r[{t}];
      slot += c;
      if (slot == 0) r.erase(PBWMon{t});
    }
  }
  return memo2_.emplace(std::make_pair(a, b), std::move(r)).first->second;
}

void UEA::nf_into(UElem& out, const PBWMon& word, const Rat& coeff) const {
  if (coeff == 0) return;
  // leftmost inversion
  size_t k = 0;
  for (; k + 1 < word.size(); ++k) {
    if (word[k] > word[k + 1]) break;
    if (word[k] == word[k + 1] && deg_odd(g_.basis.deg(word[k]))) break;
  }
  if (k + 1 >= word.size()) {
    Rat& slot = out[word];
    slot += coeff;
    if (slot == 0) out.erase(word);
    return;
  }
  UElem local = inversion(word[k], word[k + 1]);
  for (const auto& [mid, c] : local) {
    PBWMon next;
    next.reserve(word.size() - 2 + mid.size());
    next.insert(next.end(), word.begin(), word.begin() + static_cast<long>(k));
    next.insert(next.end(), mid.begin(), mid.end());
    next.insert(next.end(), word.begin() + static_cast<long>(k) + 2, word.end());
    nf_into(out, next, coeff * c);
  }
}

UElem UEA::normal_form(const PBWMon& word, const Rat& coeff) const {
  for (int l : word)
    if (l < 0 || l >= g_.basis.size())
      throw std::invalid_argument("letter outside the ambient basis");
  UElem full;
  nf_into(full, word, coeff);
  // weight projection happens only after the exact normal form
  UElem out;
  for (auto& [m, c] : full)
    if (static_cast<int>(m.size()) <= W_) out.emplace(m, c);
  return out;
}

UElem UEA::multiply(const UElem& a, const UElem& b) const {
  UElem out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      PBWMon cat = ma;
      cat.insert(cat.end(), mb.begin(), mb.end());
      uelem_add(out, normal_form(cat, ca * cb));
    }
  return out;
}

std::vector<PBWMon> UEA::basis(int max_weight) const {
  std::vector<PBWMon> out;
  std::vector<PBWMon> layer = {{}};
  out.push_back({});
  for (int w = 1; w <= max_weight; ++w) {
    std::vector<PBWMon> next;
    for (const auto& m : layer) {
      int start = m.empty() ? 0 : m.back();
      for (int l = start; l < g_.basis.size(); ++l) {
        if (!m.empty() && l == m.back() && deg_odd(g_.basis.deg(l))) continue;
        PBWMon n = m;
        n.push_back(l);
        next.push_back(n);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

UPair UEA::pair_multiply(const UPair& a, const UPair& b) const {
  UPair out;
  for (const auto& [pa, ca] : a)
    for (const auto& [pb, cb] : b) {
      // (u1 x v1)(u2 x v2) = (-1)^{|v1||u2|} u1 u2 x v1 v2
      int s = koszul_sign(mon_degree(pa.second), mon_degree(pb.first));
      UElem left = normal_form([&] {
        PBWMon w = pa.first;
        w.insert(w.end(), pb.first.begin(), pb.first.end());
        return w;
      }());
      UElem right = normal_form([&] {
        PBWMon w = pa.second;
        w.insert(w.end(), pb.second.begin(), pb.second.end());
        return w;
      }());
      Rat c = ca * cb * s;
      for (const auto& [ml, cl] : left)
        for (const auto& [mr, cr] : right) {
          if (static_cast<int>(ml.size() + mr.size()) > W_) continue;
          auto key = std::make_pair(ml, mr);
          Rat& slot = out[key];
          slot += c * cl * cr;
          if (slot == 0) out.erase(key);
        }
    }
  return out;
}

UPair UEA::coproduct(const UElem& u) const {
  UPair out;
  for (const auto& [m, c] : u) {
    UPair acc;
    acc[{PBWMon{}, PBWMon{}}] = c;
    for (int l : m) {
      UPair dl;
      dl[{PBWMon{l}, PBWMon{}}] = Rat(1);
      dl[{PBWMon{}, PBWMon{l}}] = Rat(1);
      acc = pair_multiply(acc, dl);
    }
    upair_add(out, acc);
  }
  return out;
}

Rat UEA::counit(const UElem& u) const {
  auto it = u.find(PBWMon{});
  return it == u.end() ? Rat(0) : it->second;
}

UElem UEA::antipode(const UElem& u) const {
  UElem out;
  for (const auto& [m, c] : u) {
    PBWMon rev(m.rbegin(), m.rend());
    std::vector<Deg> degs;
    degs.reserve(m.size());
    for (int l : m) degs.push_back(g_.basis.deg(l));
    std::vector<int> perm(m.size());
    for (size_t k = 0; k < m.size(); ++k) perm[k] = static_cast<int>(m.size() - 1 - k);
    int sign = koszul_perm_sign(degs, perm);
    int s = (m.size() % 2) ? -1 : 1;
    uelem_add(out, normal_form(rev, c * sign * s));
  }
  return out;
}

UElem UEA::apply_derivation(const GradedLinearMap& d, const UElem& u) const {
  UElem out;
  for (const auto& [m, c] : u) {
    Deg prefix = 0;
    for (size_t j = 0; j < m.size(); ++j) {
      SparseVec img = d.apply(SparseVec{{m[j], Rat(1)}});
      if (!img.empty()) {
        int s = koszul_sign(d.degree, prefix);
        for (const auto& [t, ct] : img) {
          PBWMon word = m;
          word[j] = t;
          uelem_add(out, normal_form(word, c * ct * s));
        }
      }
      prefix += g_.basis.deg(m[j]);
    }
  }
  return out;
}

std::string UEA::mon_str(const PBWMon& m) const {
  if (m.empty()) return "1";
  std::ostringstream os;
  size_t k = 0;
  bool lead = true;
  while (k < m.size()) {
    size_t run = k;
    while (run < m.size() && m[run] == m[k]) ++run;
    if (!lead) os << "*";
    lead = false;
    os << g_.basis.name(m[k]);
    if (run - k > 1) os << "^" << (run - k);
    k = run;
  }
  return os.str();
}

std::string UEA::str(const UElem& e) const {
  if (e.empty()) return "0";
  std::vector<const std::pair<const PBWMon, Rat>*> order;
  for (const auto& t : e) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
    return a->first < b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    Rat c = t->second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool one = (c == 1) && !t->first.empty();
    if (!one) os << rat_str(c);
    if (!t->first.empty()) {
      if (!one) os << "*";
      os << mon_str(t->first);
    }
  }
  return os.str();
}

UMap umap_identity(const UEA& A, int max_weight) {
  UMap m;
  for (const auto& b : A.basis(max_weight)) {
    UElem v;
    v[b] = Rat(1);
    m.values.emplace(b, std::move(v));
  }
  return m;
}

UMap umap_counit_unit(const UEA& A, int max_weight) {
  UMap m;
  (void)max_weight;
  m.values.emplace(PBWMon{}, A.one());
  return m;
}

UMap umap_antipode(const UEA& A, int max_weight) {
  UMap m;
  for (const auto& b : A.basis(max_weight)) {
    UElem v;
    v[b] = Rat(1);
    m.values.emplace(b, A.antipode(v));
  }
  return m;
}

UMap convolve(const UEA& A, const UMap& a, const UMap& b) {
  UMap out;
  out.degree = a.degree + b.degree;
  for (const auto& mon : A.basis(A.weight_cap())) {
    UElem um;
    um[mon] = Rat(1);
    UPair parts = A.coproduct(um);
    UElem val;
    for (const auto& [p, c] : parts) {
      // b crosses the first factor: sign (-1)^{|b| |p.first|}
      int s = koszul_sign(b.degree, A.mon_degree(p.first));
      UElem left = a.apply_mon(p.first);
      if (left.empty()) continue;
      UElem right = b.apply_mon(p.second);
      if (right.empty()) continue;
      uelem_add(val, A.multiply(left, right), c * s);
    }
    if (!val.empty()) out.values.emplace(mon, std::move(val));
  }
  return out;
}

}  // namespace glint
