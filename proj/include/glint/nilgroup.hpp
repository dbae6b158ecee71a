#pragma once

// Polynomial model of the simply connected nilpotent Lie group of a degree-0
// Lie algebra, in exponential coordinates of the first kind.  The group law
// is bch (Dynkin series, finite by nilpotency), "smooth functions" are
// polynomials in the coordinates, and everything downstream (adjoint action,
// invariant vector fields, group cohomology in low arity, the passage between
// group 1-cocycles and algebra derivations) is exact.

#include <glint/dgla.hpp>
#include <glint/poly.hpp>

#include <string>
#include <vector>

namespace glint {

inline constexpr int kMaxBchLength = 6;

// One term of the two-letter bch series: a rational multiple of the
// right-nested bracket [w_0,[w_1,[...,w_{m-1}]]] of a word over letters 0, 1.
struct BchTerm {
  std::vector<int> word;
  Rat coeff;
};

// All series terms of word length <= kMaxBchLength, coefficients merged per
// word, sorted by (length, word).  Generated from the composition formula
// (-1)^{n-1} / (n * m * prod r_i! s_i!); the test suite replays the list
// against a log(exp exp) oracle in the free associative algebra, which is
// what certifies the generator.
const std::vector<BchTerm>& bch_terms();

struct NilpotentGroup {
  DGLASpec g;   // degree 0 everywhere, zero differential, nilpotent
  int cls = 1;  // nilpotency class (least c with all (c+1)-fold brackets 0)
  // coord[slot][i]: coordinate variable i of the slot-th symbolic group
  // element; slots 0..3 are preallocated
  std::vector<std::vector<int>> coord;

  int dim() const { return g.basis.size(); }
  PolyVec point(int slot) const;  // generic element in slot coordinates
};

// Rejects nonzero degrees, a nonzero differential, non-nilpotent brackets,
// class > max_class, and a declared_class that contradicts the computed one.
NilpotentGroup nilpotent_group(const DGLASpec& g0, int max_class = kMaxBchLength);

// Bracket extended coefficientwise to vectors of polynomials.  Coefficients
// must be even (group-coordinate) polynomials: they are moved past basis
// elements without signs.
PolyVec poly_bracket(const DGLASpec& g, const PolyVec& a, const PolyVec& b);

// sum_{k=0}^{terms-1} ad_W^k(v) / (k+1)!, the flow that integrates a
// derivation along the one-parameter subgroup through W.
PolyVec vanest_series(const DGLASpec& g, const PolyVec& W, const PolyVec& v,
                      int terms);

// log(exp X exp Y) as the Dynkin series truncated at the nilpotency class.
PolyVec bch(const NilpotentGroup& G, const PolyVec& X, const PolyVec& Y);

// --- polynomial matrices, columns = images of basis vectors ---
using PolyMat = std::vector<PolyVec>;

PolyMat mat_identity(int n);
PolyVec mat_apply(const PolyMat& M, const PolyVec& v);
PolyMat mat_mul(const PolyMat& A, const PolyMat& B);

// Ad_{exp X} = exp(ad_X), a polynomial matrix by nilpotency.
PolyMat ad_exp(const NilpotentGroup& G, const PolyVec& X);

// Coefficients a_j (in slot-0 coordinates) of the right-invariant vector
// field: (X^R f)(g) = d/dt f(bch(tX, g)) |_{t=0} = sum_j a_j df/dx_j.
// Satisfies [X^R, Y^R] = -[X,Y]^R.
PolyVec right_invariant_vf(const NilpotentGroup& G, const SparseVec& X);

Poly vf_apply(const NilpotentGroup& G, const PolyVec& coeffs, const Poly& f);
PolyVec vf_commutator(const NilpotentGroup& G, const PolyVec& A, const PolyVec& B);

// --- group cochains valued in the adjoint module (n <= 2) ---

struct GroupCochain {
  int n = 0;
  PolyVec value;  // length dim(G), in coordinates of slots 0..n-1
};

// Substitute polynomial points for the argument slots; args.size() == c.n.
PolyVec cochain_eval(const NilpotentGroup& G, const GroupCochain& c,
                     const std::vector<PolyVec>& args);

// n = 0: (da)(g) = Ad_g a - a.   n = 1: (dxi)(g,h) = Ad_g xi(h) - xi(gh) + xi(g).
GroupCochain group_coboundary(const NilpotentGroup& G, const GroupCochain& c);

// dxi = 0 as polynomials; a failing witness names a component and a rational
// point where the residual is nonzero.
bool is_group_cocycle(const NilpotentGroup& G, const GroupCochain& xi,
                      std::string* witness = nullptr);

// Linear part of a 1-cocycle at the identity; rejects xi with xi(e) != 0 or
// a failing cocycle law (std::invalid_argument carries the witness).
GradedLinearMap van_est_differentiate(const NilpotentGroup& G,
                                      const GroupCochain& xi);

// Closed-form integration xi(exp W) = sum_{k<cls} ad_W^k(delta W)/(k+1)!;
// rejects delta that fails derivation_check.
GroupCochain van_est_integrate(const NilpotentGroup& G,
                               const GradedLinearMap& delta);

}  // namespace glint
