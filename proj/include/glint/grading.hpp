#pragma once

// Integer grading, the fixed commutation factor eps(a,b) = (-1)^{ab}, graded
// bases with a total order, and graded linear maps of arbitrary degree.
//
// Every transposition sign in the project routes through koszul_sign /
// koszul_perm_sign.  No other file computes a (-1)^{..} from first principles,
// which keeps the sign convention in exactly one place.

#include <glint/rational.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace glint {

using Deg = long long;

inline bool deg_odd(Deg d) { return (d % 2) != 0; }
inline int parity(Deg d) { return deg_odd(d) ? 1 : 0; }

// Sign picked up when two homogeneous elements of degrees a and b move past
// each other.
inline int koszul_sign(Deg a, Deg b) { return (deg_odd(a) && deg_odd(b)) ? -1 : 1; }

// Sign of reordering homogeneous elements with degrees degs[0..n) into the
// order degs[perm[0]], degs[perm[1]], ...  Each inverted pair contributes
// koszul_sign of the two degrees.
inline int koszul_perm_sign(const std::vector<Deg>& degs, const std::vector<int>& perm) {
  if (degs.size() != perm.size()) throw std::invalid_argument("perm size mismatch");
  int s = 1;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s *= koszul_sign(degs[perm[i]], degs[perm[j]]);
  return s;
}

struct GradedBasis {
  std::vector<std::string> names;
  std::vector<Deg> degrees;

  int size() const { return static_cast<int>(names.size()); }
  Deg deg(int i) const { return degrees.at(static_cast<size_t>(i)); }
  const std::string& name(int i) const { return names.at(static_cast<size_t>(i)); }

  int index_of(const std::string& n) const {
    for (int i = 0; i < size(); ++i)
      if (names[static_cast<size_t>(i)] == n) return i;
    throw std::invalid_argument("unknown basis element '" + n + "'");
  }

  // Rejects duplicate or empty names and absurd degrees; the degree bound is
  // a sanity guard, not a mathematical constraint.
  void validate() const {
    if (names.size() != degrees.size())
      throw std::invalid_argument("basis names/degrees length mismatch");
    for (int i = 0; i < size(); ++i) {
      if (names[static_cast<size_t>(i)].empty())
        throw std::invalid_argument("empty basis name");
      if (degrees[static_cast<size_t>(i)] > 64 || degrees[static_cast<size_t>(i)] < -64)
        throw std::invalid_argument("degree out of range for '" + names[static_cast<size_t>(i)] + "'");
      for (int j = i + 1; j < size(); ++j)
        if (names[static_cast<size_t>(i)] == names[static_cast<size_t>(j)])
          throw std::invalid_argument("duplicate basis name '" + names[static_cast<size_t>(i)] + "'");
    }
  }
};

// Sparse vector in a graded basis.
using SparseVec = std::map<int, Rat>;

inline void vec_add(SparseVec& a, const SparseVec& b, const Rat& c = Rat(1)) {
  for (const auto& [i, v] : b) {
    Rat& slot = a[i];
    slot += v * c;
    if (slot == 0) a.erase(i);
  }
}

inline SparseVec vec_scale(const SparseVec& a, const Rat& c) {
  SparseVec r;
  if (c == 0) return r;
  for (const auto& [i, v] : a) r[i] = v * c;
  return r;
}

inline bool vec_zero(const SparseVec& a) { return a.empty(); }

// A homogeneous linear map between graded bases; columns are images of basis
// elements.  Degree bookkeeping is the caller's contract: a map of degree d
// sends degree-k vectors to degree-(k+d) vectors.
struct GradedLinearMap {
  Deg degree = 0;
  std::map<int, SparseVec> columns;  // source index -> image

  SparseVec apply(const SparseVec& v) const {
    SparseVec out;
    for (const auto& [i, c] : v) {
      auto it = columns.find(i);
      if (it != columns.end()) vec_add(out, it->second, c);
    }
    return out;
  }

  SparseVec column(int i) const {
    auto it = columns.find(i);
    return it == columns.end() ? SparseVec{} : it->second;
  }

  static GradedLinearMap compose(const GradedLinearMap& f, const GradedLinearMap& g) {
    // compose(f, g)(v) = f(g(v))
    GradedLinearMap r;
    r.degree = f.degree + g.degree;
    for (const auto& [i, col] : g.columns) {
      SparseVec img = f.apply(col);
      if (!img.empty()) r.columns[i] = std::move(img);
    }
    return r;
  }

  // Graded commutator [f,g] = f g - (-1)^{|f||g|} g f.
  static GradedLinearMap commutator(const GradedLinearMap& f, const GradedLinearMap& g) {
    GradedLinearMap fg = compose(f, g);
    GradedLinearMap gf = compose(g, f);
    int s = koszul_sign(f.degree, g.degree);
    GradedLinearMap r;
    r.degree = f.degree + g.degree;
    for (const auto& [i, col] : fg.columns) r.columns[i] = col;
    for (const auto& [i, col] : gf.columns) {
      SparseVec& slot = r.columns[i];
      vec_add(slot, col, Rat(-s));
      if (slot.empty()) r.columns.erase(i);
    }
    return r;
  }

  bool is_zero() const {
    for (const auto& [i, col] : columns)
      if (!col.empty()) return false;
    return true;
  }
};

}  // namespace glint
