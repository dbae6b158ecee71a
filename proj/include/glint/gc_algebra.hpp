#pragma once

// Free graded-commutative algebra on a graded basis, truncated by weight.
//
// Monomials are canonical: letters sorted by generator index, odd generators
// with exponent at most 1.  Reordering a letter string into canonical form
// picks up the permutation's commutation sign; an odd letter repeated kills
// the term.  Products whose weight (= letter count) exceeds the cap are
// dropped, which is the working model of "polynomial functions modulo
// (weight > W)".

#include <glint/grading.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace glint {

// (generator index, exponent >= 1), sorted by index.
using GCMon = std::vector<std::pair<int, int>>;

struct GCElement {
  std::map<GCMon, Rat> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const GCElement& o) const { return terms == o.terms; }
  bool operator!=(const GCElement& o) const { return terms != o.terms; }

  GCElement& operator+=(const GCElement& o);
  GCElement operator+(const GCElement& o) const {
    GCElement r = *this;
    r += o;
    return r;
  }
  GCElement operator-() const;
  GCElement operator-(const GCElement& o) const { return *this + (-o); }
  GCElement operator*(const Rat& c) const;

  void add_term(const GCMon& m, const Rat& c);
};

int gc_mon_weight(const GCMon& m);
Deg gc_mon_degree(const GradedBasis& gens, const GCMon& m);

struct GCAlgebra {
  GradedBasis gens;
  int weight_cap = 4;

  GCElement zero() const { return {}; }
  GCElement scalar(const Rat& c) const;
  GCElement one() const { return scalar(Rat(1)); }
  GCElement gen(int i) const;

  // Canonicalize a raw letter string (generator indices in arbitrary order).
  GCElement from_letters(const std::vector<int>& letters, const Rat& coeff) const;

  GCElement mul(const GCElement& a, const GCElement& b) const;

  // True if every monomial has the same degree; reports it.
  bool homogeneous_degree(const GCElement& e, Deg& out) const;

  std::string str(const GCElement& e) const;
  std::string mon_str(const GCMon& m) const;
};

// Graded derivation, determined by its values on generators and extended by
// the Leibniz rule D(ab) = D(a) b + (-1)^{|D||a|} a D(b).
//
// The image of a degree-k generator must be homogeneous of degree k + |D|;
// otherwise the extension is not well-defined on canonical monomials (the
// letter-reordering signs stop matching).  validate() enforces this.
struct GCDerivation {
  Deg degree = 0;
  std::vector<GCElement> gen_images;  // indexed like gens

  void validate(const GCAlgebra& A) const;

  GCElement apply(const GCAlgebra& A, const GCElement& e) const;

  bool is_zero() const {
    for (const auto& g : gen_images)
      if (!g.is_zero()) return false;
    return true;
  }

  // [D1,D2] = D1 D2 - (-1)^{|D1||D2|} D2 D1, again a derivation; computed on
  // generators.
  static GCDerivation commutator(const GCAlgebra& A, const GCDerivation& d1,
                                 const GCDerivation& d2);
};

}  // namespace glint
