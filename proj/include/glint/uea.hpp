#pragma once

// Universal enveloping algebra of a graded Lie algebra, with PBW normal
// forms.  Words rewrite by
//     x y -> (-1)^{|x||y|} y x + [x,y]      (adjacent inversion)
//     x x -> 1/2 [x,x]                      (x odd)
// until the letters are non-decreasing in the basis order.  Bracket terms
// are strictly shorter, so rewriting terminates; PBW guarantees confluence.
//
// Truncation: a word is normalized exactly first, and only then are
// monomials of weight > W dropped.  Dropping early would lose bracket
// descendants (e.g. fe at W = 1 must still produce -h).

#include <glint/dgla.hpp>

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace glint {

using PBWMon = std::vector<int>;  // non-decreasing letters, odd letters strict
using UElem = std::map<PBWMon, Rat>;
// Element of the two-fold tensor product, truncated by total weight.
using UPair = std::map<std::pair<PBWMon, PBWMon>, Rat>;

void uelem_add(UElem& a, const UElem& b, const Rat& c = Rat(1));
UElem uelem_scale(const UElem& a, const Rat& c);
void upair_add(UPair& a, const UPair& b, const Rat& c = Rat(1));

class UEA {
 public:
  UEA(const DGLASpec& g, int weight);

  const DGLASpec& spec() const { return g_; }
  int weight_cap() const { return W_; }

  UElem scalar(const Rat& c) const;
  UElem one() const { return scalar(Rat(1)); }
  UElem gen(int i) const;

  Deg mon_degree(const PBWMon& m) const;
  bool mon_sorted(const PBWMon& m) const;

  // Exact normal form of an arbitrary word, then weight projection.
  UElem normal_form(const PBWMon& word, const Rat& coeff = Rat(1)) const;

  UElem multiply(const UElem& a, const UElem& b) const;

  // All PBW monomials of weight <= w, ordered (weight, lex).
  std::vector<PBWMon> basis(int max_weight) const;

  // Hopf structure: Delta is the algebra morphism with primitive generators;
  // tensor factors multiply with the sign (a x b)(c x d) = (-1)^{|b||c|} ac x bd.
  UPair coproduct(const UElem& u) const;
  UPair pair_multiply(const UPair& a, const UPair& b) const;
  Rat counit(const UElem& u) const;
  UElem antipode(const UElem& u) const;

  // Extend a degree-homogeneous linear map of the algebra to a derivation of
  // the enveloping algebra (Leibniz letter by letter, Koszul prefix signs).
  UElem apply_derivation(const GradedLinearMap& d, const UElem& u) const;

  std::string str(const UElem& e) const;
  std::string mon_str(const PBWMon& m) const;

 private:
  DGLASpec g_;
  int W_;
  mutable std::map<std::pair<int, int>, UElem> memo2_;  // two-letter inversions
  mutable std::mutex memo_mu_;

  const UElem& inversion(int a, int b) const;  // a >= b in basis order
  void nf_into(UElem& out, const PBWMon& word, const Rat& coeff) const;
};

// Graded linear map from the PBW basis to elements; the generic convolution
// algebra Hom(U, U) with a * b = mult o (a x b) o Delta.
struct UMap {
  Deg degree = 0;
  std::map<PBWMon, UElem> values;

  UElem apply_mon(const PBWMon& m) const {
    auto it = values.find(m);
    return it == values.end() ? UElem{} : it->second;
  }
  UElem apply(const UElem& u) const {
    UElem out;
    for (const auto& [m, c] : u) uelem_add(out, apply_mon(m), c);
    return out;
  }
};

UMap umap_identity(const UEA& A, int max_weight);
UMap umap_counit_unit(const UEA& A, int max_weight);  // eta o eps
UMap umap_antipode(const UEA& A, int max_weight);

// a * b = mult o (a x b) o Delta with the Koszul crossing sign.
UMap convolve(const UEA& A, const UMap& a, const UMap& b);

}  // namespace glint
