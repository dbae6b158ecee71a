#pragma once

// Harish-Chandra pairs over a polynomial nilpotent group, and the Hopf
// algebra H of functions on the graded group they integrate to.
//
// A pair is a graded Lie algebra g with one-sided nonzero degrees, the
// simply connected group G0 of its degree-0 part, and the action
// alpha(exp X) = exp(ad_X) of G0 on all of g.  A function f in
// H = Hom_{U(g0)}(U(g), C^inf(G0)) is determined by its values on the PBW
// monomials with no g0 letters (the fiber section); evaluation on anything
// else peels trailing g0 letters into right-invariant fields,
// f(s X, .) = -(X^R f)(s, .).  Internally the basis is reordered so the g0
// letters are the largest, which makes PBW sorting itself produce the
// "g0 rightmost" form the sweep consumes.
//
// The weight-<= W model of H is finite dimensional: the pairing
// phi_f(m) = (reduce_evaluate f at m)(e) against full PBW monomials m = s q
// is nondegenerate (jet duality on the q part), so H carries coordinates
// dual to the monomial basis, and every structure map transfers to a
// TruncatedHopf on which the hopf_engine batteries run.  Multiplication is
// exactly weight-graded; the coproduct is weight-raising; truncation
// soundness is the same calculus as for graded duals.
//
// A differential pair adds a degree +1 differential del of g and the
// polynomial cocycle lambda: G0 -> g^1 (van Est closed form of -del|g0),
// from which the homological field
//   (Q f)(u, g) = (-1)^{deg u} f(u lambda(g), g) - f(del u, g)
// is built; dgla_of_group recovers the tangent DGLA from point derivations
// and closes the integrate/differentiate round trip.

#include <glint/dgla.hpp>
#include <glint/gc_algebra.hpp>
#include <glint/hopf.hpp>
#include <glint/jet.hpp>
#include <glint/nilgroup.hpp>
#include <glint/parallel.hpp>
#include <glint/report.hpp>
#include <glint/uea.hpp>

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace glint {

// U(g)-element with polynomial coefficients; keys are PBW-sorted monomials.
using UPoly = std::map<PBWMon, Poly>;

struct HCPair {
  DGLASpec g;                 // reordered: fiber letters first, g0 letters last
  std::vector<int> to_input;  // reordered index -> index in the input spec
  int fiber_count = 0;        // letters < fiber_count have nonzero degree
  DGLASpec g0;                // degree-0 part in its own indexing
  NilpotentGroup G0;
  // envelope of the reordered g, weight cap W (shared: UEA owns a memo mutex)
  std::shared_ptr<const UEA> U;
  int W = 4;
  int ad_nilp = 1;            // nilpotency index of the symbolic ad matrix
  PolyMat alpha;              // alpha(slot-0 point) on g; column j = image of e_j
  JetDual jets;
  std::vector<PBWMon> fiber_mons;        // fiber-only monomials, weight <= W
  std::map<PBWMon, UPoly> alpha_fiber;   // alpha(slot-0) on each fiber monomial

  int dim() const { return g.basis.size(); }
  bool is_fiber(int letter) const { return letter < fiber_count; }
  const UEA& env() const { return *U; }
};

// Reorders, integrates the degree-0 part, builds alpha = exp(ad) symbolically
// (throws std::invalid_argument if the grading is two-sided or ad fails to be
// nilpotent on all of g), and prepares the jet duality.
HCPair make_pair(const DGLASpec& g_input, int W);

// The pair axioms, checked symbolically: degree-0 bracket match, alpha a
// degree-preserving automorphism for the bracket, linear term of alpha = ad.
Report pair_checks(const HCPair& P, ExecMode mode = default_exec_mode());

struct DGHCPair {
  HCPair P;
  GradedLinearMap del;  // degree +1 differential, reordered letters
  PolyVec lambda;       // g-indexed, slot-0 polynomials, degree-1 rows only
};

// Van Est closed form lambda(exp V) = -Sum_k ad_V^k(del V)/(k+1)!, V over the
// g0 slice.  Throws if del is not a square-zero degree +1 derivation or if
// the compatibility law fails (pair not DG-integrable in this model).
PolyVec build_lambda(const HCPair& P, const GradedLinearMap& del);

// lambda(e) = 0; cocycle law lambda(gh) = lambda(g) + alpha(g) lambda(h);
// compatibility alpha(g) del alpha(g)^{-1} - del = ad(lambda(g)).
Report lambda_checks(const HCPair& P, const GradedLinearMap& del,
                     const PolyVec& lambda);

// del is taken from the input DGLA; lambda built (or supplied and checked).
DGHCPair make_dg_pair(const DGLASpec& g_input, int W);
DGHCPair make_dg_pair(const DGLASpec& g_input, int W, const PolyVec& lambda);

// --- functions on the integrating group ---

struct HFunction {
  Deg degree = 0;
  std::map<PBWMon, Poly> values;  // fiber monomial -> slot-0 polynomial
};

void hfun_add(HFunction& a, const HFunction& b, const Rat& c = Rat(1));
bool hfun_zero(const HFunction& f);

HFunction h_unit(const HCPair& P);
Rat h_counit(const HCPair& P, const HFunction& f);  // f(1, e)

UPoly upoly_of(const UElem& u);
UPoly upoly_mul(const HCPair& P, const UPoly& a, const UPoly& b);

// f on an arbitrary U(g)-element, evaluated at the point with coordinate
// vector `at` (slot-0 coordinates substituted; polynomial coefficients of u
// stay outside the derivatives).
Poly reduce_evaluate(const HCPair& P, const HFunction& f, const UPoly& u,
                     const PolyVec& at);
Poly reduce_evaluate(const HCPair& P, const HFunction& f, const UElem& u,
                     const PolyVec& at);

// (f1 f2)(u, g) = (f1 (x) f2)(Delta u, g, g) with the Koszul pairing sign.
HFunction h_multiply(const HCPair& P, const HFunction& f1, const HFunction& f2);

// m*(f)(u1, g1, u2, g2) = f(u1 alpha(g1) u2, g1 g2): values are polynomials
// in the slot-0 and slot-1 coordinates, keyed by fiber monomial pairs.
struct HTensor2 {
  Deg degree = 0;
  std::map<std::pair<PBWMon, PBWMon>, Poly> values;
};
HTensor2 h_comultiply(const HCPair& P, const HFunction& f);

// --- the coordinate model ---

struct BuiltHopf {
  TruncatedHopf H;             // finalized: validated + axiom battery
  std::vector<PBWMon> mons;    // full-U monomials, index-aligned with H
  std::map<PBWMon, int> index;

  HFunction coordinate_fn(const HCPair& P, int i) const;
  TElem to_coords(const HCPair& P, const HFunction& f) const;
  HFunction from_coords(const HCPair& P, const TElem& v) const;
  Tensor tensor_coords(const HCPair& P, const HTensor2& t) const;
};

BuiltHopf build_hopf(const HCPair& P, ExecMode mode = default_exec_mode());

// Convolution inverse of the identity, through the coordinate model.
HFunction h_antipode(const HCPair& P, const BuiltHopf& B, const HFunction& f);

// (Q f)(u, g) = (-1)^{deg u} f(u lambda(g), g) - f(del u, g); del extended to
// U(g) as a derivation.  The same formula with del = ad_del and
// lambda(g) = alpha(g) del - del is the inner-differential case.
HopfDerivation build_Q(const HCPair& P, const BuiltHopf& B,
                       const GradedLinearMap& del, const PolyVec& lambda);
inline HopfDerivation build_Q(const DGHCPair& D, const BuiltHopf& B) {
  return build_Q(D.P, B, D.del, D.lambda);
}

// Tangent DGLA: brackets of the letter-dual point derivations, differential
// delta_Q(v) = v o Q.  Appends to `rep` (when given) the checks that the
// Maurer-Cartan image xi = Q * S has xi_e = Q_e and is a group 1-cocycle.
DGLASpec dgla_of_group(const HCPair& P, const BuiltHopf& B,
                       const HopfDerivation& Q, Report* rep = nullptr);

// Adjoins del as a degree +1 letter, rebuilds functions there, forms the
// inner-formula field, and reports: lambda~ laws, preservation of the ideal
// of functions vanishing on U(g), and agreement of the restriction with
// build_Q on the base pair.  Throws std::invalid_argument when the extension
// is not one-sided.
Report extended_route(const DGHCPair& D, ExecMode mode = default_exec_mode());

// --- Chevalley-Eilenberg group of a one-sided DGLA (G0 = point picture) ---

struct CEGroup {
  GCAlgebra A;                // functions: free graded-commutative on duals
  std::vector<GCMon> mons;    // basis, index-aligned with H
  std::map<GCMon, int> index;
  TruncatedHopf H;
  HopfDerivation Q;           // d_CE + transpose of del
};

// theta^k sits in degree 1 - d_k; Q has degree +1.  (That affine degree
// assignment is the only one making Q homogeneous once both the quadratic
// and the linear part are present.)  Throws std::invalid_argument on
// two-sided gradings.
CEGroup ce_group(const DGLASpec& g, int W, ExecMode mode = default_exec_mode());

}  // namespace glint
