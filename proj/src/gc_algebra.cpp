#include <glint/gc_algebra.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace glint {

void GCElement::add_term(const GCMon& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

GCElement& GCElement::operator+=(const GCElement& o) {
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

GCElement GCElement::operator-() const {
  GCElement r;
  for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
  return r;
}

GCElement GCElement::operator*(const Rat& c) const {
  GCElement r;
  if (c == 0) return r;
  for (const auto& [m, k] : terms) r.terms.emplace(m, k * c);
  return r;
}

int gc_mon_weight(const GCMon& m) {
  int w = 0;
  for (const auto& [g, e] : m) w += e;
  return w;
}

Deg gc_mon_degree(const GradedBasis& gens, const GCMon& m) {
  Deg d = 0;
  for (const auto& [g, e] : m) d += gens.deg(g) * e;
  return d;
}

GCElement GCAlgebra::scalar(const Rat& c) const {
  GCElement r;
  r.add_term({}, c);
  return r;
}

GCElement GCAlgebra::gen(int i) const {
  GCElement r;
  if (weight_cap >= 1) r.add_term({{i, 1}}, Rat(1));
  return r;
}

GCElement GCAlgebra::from_letters(const std::vector<int>& letters, const Rat& coeff) const {
  if (static_cast<int>(letters.size()) > weight_cap || coeff == 0) return {};
  std::vector<int> perm(letters.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
    return letters[static_cast<size_t>(a)] < letters[static_cast<size_t>(b)];
  });
  std::vector<Deg> degs;
  degs.reserve(letters.size());
  for (int l : letters) degs.push_back(gens.deg(l));
  int sign = koszul_perm_sign(degs, perm);

  GCMon m;
  for (size_t k = 0; k < perm.size(); ++k) {
    int g = letters[static_cast<size_t>(perm[k])];
    if (!m.empty() && m.back().first == g) {
      if (deg_odd(gens.deg(g))) return {};  // odd square
      m.back().second += 1;
    } else {
      m.emplace_back(g, 1);
    }
  }
  GCElement r;
  r.add_term(m, coeff * sign);
  return r;
}

namespace {

void mon_letters(const GCMon& m, std::vector<int>& out) {
  out.clear();
  for (const auto& [g, e] : m)
    for (int k = 0; k < e; ++k) out.push_back(g);
}

}  // namespace

GCElement GCAlgebra::mul(const GCElement& a, const GCElement& b) const {
  GCElement r;
  std::vector<int> la, lb, cat;
  for (const auto& [ma, ca] : a.terms) {
    mon_letters(ma, la);
    for (const auto& [mb, cb] : b.terms) {
      if (gc_mon_weight(ma) + gc_mon_weight(mb) > weight_cap) continue;
      mon_letters(mb, lb);
      cat = la;
      cat.insert(cat.end(), lb.begin(), lb.end());
      r += from_letters(cat, ca * cb);
    }
  }
  return r;
}

bool GCAlgebra::homogeneous_degree(const GCElement& e, Deg& out) const {
  bool first = true;
  for (const auto& [m, c] : e.terms) {
    Deg d = gc_mon_degree(gens, m);
    if (first) {
      out = d;
      first = false;
    } else if (d != out) {
      return false;
    }
  }
  if (first) out = 0;  // zero is homogeneous of any degree
  return true;
}

std::string GCAlgebra::mon_str(const GCMon& m) const {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool lead = true;
  for (const auto& [g, e] : m) {
    if (!lead) os << "*";
    lead = false;
    os << gens.name(g);
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

namespace {

// Same display order as Poly::str: lex by generator, higher exponent first.
bool gc_display_less(const GCMon& a, const GCMon& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first != b[j].first) return a[i].first < b[j].first;
    if (a[i].second != b[j].second) return a[i].second > b[j].second;
    ++i;
    ++j;
  }
  return i < a.size();
}

}  // namespace

std::string GCAlgebra::str(const GCElement& e) const {
  if (e.terms.empty()) return "0";
  std::vector<const std::pair<const GCMon, Rat>*> order;
  for (const auto& t : e.terms) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    int wa = gc_mon_weight(a->first), wb = gc_mon_weight(b->first);
    if (wa != wb) return wa < wb;
    return gc_display_less(a->first, b->first);
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

void GCDerivation::validate(const GCAlgebra& A) const {
  if (gen_images.size() != A.gens.names.size())
    throw std::invalid_argument("derivation image count mismatch");
  for (int i = 0; i < A.gens.size(); ++i) {
    Deg d = 0;
    if (!A.homogeneous_degree(gen_images[static_cast<size_t>(i)], d))
      throw std::invalid_argument("derivation image of '" + A.gens.name(i) +
                                  "' is not homogeneous");
    if (!gen_images[static_cast<size_t>(i)].is_zero() && d != A.gens.deg(i) + degree)
      throw std::invalid_argument("derivation image of '" + A.gens.name(i) +
                                  "' has the wrong degree");
  }
}

GCElement GCDerivation::apply(const GCAlgebra& A, const GCElement& e) const {
  GCElement out;
  std::vector<int> letters;
  for (const auto& [m, c] : e.terms) {
    mon_letters(m, letters);
    Deg prefix = 0;
    for (size_t j = 0; j < letters.size(); ++j) {
      int g = letters[j];
      const GCElement& img = gen_images.at(static_cast<size_t>(g));
      if (!img.is_zero()) {
        int s = koszul_sign(degree, prefix);
        // prefix * D(letter_j) * suffix
        GCElement t = A.from_letters(
            std::vector<int>(letters.begin(), letters.begin() + static_cast<long>(j)),
            c * s);
        t = A.mul(t, img);
        t = A.mul(t, A.from_letters(
                         std::vector<int>(letters.begin() + static_cast<long>(j) + 1,
                                          letters.end()),
                         Rat(1)));
        out += t;
      }
      prefix += A.gens.deg(g);
    }
  }
  return out;
}

GCDerivation GCDerivation::commutator(const GCAlgebra& A, const GCDerivation& d1,
                                      const GCDerivation& d2) {
  GCDerivation r;
  r.degree = d1.degree + d2.degree;
  int s = koszul_sign(d1.degree, d2.degree);
  r.gen_images.resize(A.gens.names.size());
  for (int i = 0; i < A.gens.size(); ++i) {
    GCElement v = d1.apply(A, d2.gen_images.at(static_cast<size_t>(i)));
    v += d2.apply(A, d1.gen_images.at(static_cast<size_t>(i))) * Rat(-s);
    r.gen_images[static_cast<size_t>(i)] = std::move(v);
  }
  return r;
}

}  // namespace glint
