#pragma once

// Truncated graded Hopf algebras with explicit rational structure tensors,
// plus the derived calculus on them: point derivations, left/right translation,
// multiplicative vector fields, the Maurer-Cartan map omega^R = (. * S), the
// adjoint coaction, group 1-cocycles, and the coface cochain complex with its
// omega^R_n intertwiner.
//
// Truncation discipline. All data live on a basis filtered by weight <= W.
// An identity "holds up to weight W" means: quantify over basis tuples whose
// total weight is <= W - gain (gain = declared weight raise of any non-structure
// operator involved; 0 for the pure Hopf axioms), evaluate both sides with the
// stored tensors, project to total weight <= W, compare. With the argument
// restriction every evaluation in the element picture (PBW bases, where the
// product may only lower weight) is exact, and in the dual/function picture
// (where the coproduct may raise weight) all omitted terms live above W and are
// projected away. Each check states its margin next to its definition.
//
// Signs. Tensor factors of maps act with the Koszul rule
//   (f (x) g)(a (x) b) = (-1)^{|g||a|} f(a) (x) g(b).
// Two helpers own every sign in this module: flip_adjacent (transposition of
// two neighbouring tensor slots) and the slot applicator (an operator of
// degree d applied at slot s crosses the slots before s). Simultaneous tensor
// products of maps are realized by applying the rightmost factor first, which
// is the sign-free order.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "glint/dgla.hpp"
#include "glint/grading.hpp"
#include "glint/parallel.hpp"
#include "glint/rational.hpp"
#include "glint/report.hpp"

namespace glint {

// element of H in basis coordinates (index -> coefficient)
using TElem = SparseVec;

// element of H^{(x)n}: key = n basis indices; n = 0 (scalar) uses the empty key
using Tensor = std::map<std::vector<int>, Rat>;

void tensor_add(Tensor& a, const Tensor& b, const Rat& c = Rat(1));
Tensor tensor_scale(const Tensor& a, const Rat& c);
bool tensor_is_zero(const Tensor& t);
Tensor tensor_of_elem(const TElem& v);
TElem elem_of_tensor(const Tensor& t);  // arity-1 keys required

struct TruncatedHopf {
  std::string name;
  int W = 4;
  bool commutative = false;  // mu o tau = mu (graded sense)

  std::vector<std::string> labels;
  std::vector<Deg> degrees;
  std::vector<int> weights;
  std::map<std::string, int> index;

  TElem unit;                                   // coordinates of 1
  std::map<std::pair<int, int>, TElem> mu_table;  // (i,j) -> e_i * e_j
  std::vector<Tensor> delta_table;              // arity-2 tensors
  SparseVec counit_values;                      // functional coordinates
  std::vector<TElem> antipode_table;

  int dim() const { return (int)labels.size(); }
  Deg deg(int i) const { return degrees.at(i); }
  int weight(int i) const { return weights.at(i); }
  Deg key_degree(const std::vector<int>& k) const;
  int key_weight(const std::vector<int>& k) const;
  Deg elem_degree(const TElem& v, bool* homogeneous = nullptr) const;

  TElem mul(const TElem& a, const TElem& b) const;
  Tensor delta_elem(const TElem& v) const;
  Rat counit_elem(const TElem& v) const;
  TElem antipode_elem(const TElem& v) const;

  std::string elem_str(const TElem& v) const;
  std::string tensor_str(const Tensor& t) const;
};

// structural sanity: sizes, unique labels, weight-0 unit, structure maps of
// degree 0 (mu adds degrees, Delta splits them, S preserves, eps supported in
// degree 0).  Throws std::invalid_argument on violation.
void hopf_validate(const TruncatedHopf& H);

// the single transposition helper: swap slots s, s+1 with the Koszul sign
Tensor flip_adjacent(const TruncatedHopf& H, const Tensor& t, int s);

// operator application at a slot.  table[i] is the image of basis element i,
// an arity-m tensor; applying at slot s multiplies by the Koszul sign of the
// operator degree against the slots before s.
Tensor apply_table_at(const TruncatedHopf& H, const Tensor& t, int s,
                      const std::vector<Tensor>& table, Deg op_degree);
Tensor mul_at(const TruncatedHopf& H, const Tensor& t, int s);    // contract s,s+1
Tensor delta_at(const TruncatedHopf& H, const Tensor& t, int s);  // expand s
Tensor antipode_at(const TruncatedHopf& H, const Tensor& t, int s);
Tensor counit_at(const TruncatedHopf& H, const Tensor& t, int s);  // drop s
Tensor project_weight(const TruncatedHopf& H, const Tensor& t, int cap);

// iterated coproduct at slot s: arity grows by n-1 (n >= 1; leftmost expansion)
Tensor delta_power_at(const TruncatedHopf& H, const Tensor& t, int s, int n);
// componentwise product H^{(x)n} (x) H^{(x)n} -> H^{(x)n} (interleave + multiply)
Tensor mu_power(const TruncatedHopf& H, const Tensor& t, int n);

// the seven axiom groups, each "key: PASS/FAIL [witness: ...]":
//   unit, associativity, counit, coassociativity, bialgebra, unit_coalgebra,
//   antipode; plus "commutativity" when the flag is set.
// Margins: associativity/bialgebra/commutativity quantify over tuples of total
// weight <= W; everything else runs over the whole basis.
Report check_hopf_axioms(const TruncatedHopf& H,
                         ExecMode mode = default_exec_mode());

// hopf_validate + check_hopf_axioms; throws std::runtime_error on failure.
// Builders call this, so every TruncatedHopf handed out has passed.
void hopf_finalize(TruncatedHopf& H, ExecMode mode = default_exec_mode());

// group-like Hopf algebra of the universal envelope, basis = PBW monomials of
// weight <= W, primitive coproduct
TruncatedHopf hopf_of_uea(const DGLASpec& g, int W);

// graded dual on the same index set: mu* = Delta^T, Delta* = mu^T with the
// pairing <u (x) v, phi (x) psi> = (-1)^{|v||phi|} <u,phi> <v,psi>; degrees are
// negated, weights kept
TruncatedHopf dualize(const TruncatedHopf& H);

bool is_cocommutative(const TruncatedHopf& H);

// re-derive S from the antipode identity by weight recursion; requires every
// proper Delta-part to sit in strictly lower weight (std::domain_error if not)
std::vector<TElem> antipode_from_axiom(const TruncatedHopf& H);

// tangent functional at the unit: v(fg) = v(f) eps(g) + eps(f) v(g)
struct PointDerivation {
  Deg degree = 0;
  SparseVec values;  // basis index -> rational
};

// vector field: a degree-homogeneous linear endomorphism satisfying the graded
// Leibniz rule.  gain bounds the weight raise of the true operator; table
// entries are exact on arguments of weight <= W - gain.
struct HopfDerivation {
  Deg degree = 0;
  int gain = 0;
  std::vector<TElem> values;
  TElem apply(const TElem& v) const;
};

// Leibniz extension from images of the weight-1 basis (zero on the unit);
// needs every basis element of weight >= 2 to factor as a scalar multiple of
// (weight-1 generator) * (lower basis element) in the mu table.
HopfDerivation derivation_from_generators(const TruncatedHopf& H,
                                          const std::map<int, TElem>& gen_images,
                                          Deg degree, int gain);

// X(ab) = X(a) b + (-1)^{|X||a|} a X(b) on pairs of total weight <= W - gain
bool derivation_leibniz_check(const TruncatedHopf& H, const HopfDerivation& X,
                              std::string* witness = nullptr);
// v(ab) = v(a) eps(b) + eps(a) v(b) on pairs of total weight <= W
bool point_derivation_check(const TruncatedHopf& H, const PointDerivation& v,
                            std::string* witness = nullptr);

HopfDerivation left_translate(const TruncatedHopf& H, const PointDerivation& v);   // id * v
HopfDerivation right_translate(const TruncatedHopf& H, const PointDerivation& v);  // v * id
PointDerivation value_at_unit(const TruncatedHopf& H, const HopfDerivation& X);

// (id (x) X) o Delta = Delta o X on basis of weight <= W - max(1, gain) - slack,
// residual projected to total weight <= W - slack. slack is the extra weight a
// composite field can drop below its arguments (0 for translates of point
// derivations, 1 for a commutator of two of them): dual-side models lose track
// of that many boundary weights, so the check leaves them out of scope.
bool is_left_invariant(const TruncatedHopf& H, const HopfDerivation& X,
                       std::string* witness = nullptr, int slack = 0);

// (X (x) id + id (x) X) o Delta = Delta o X on basis of weight <= W - max(1, gain);
// when it holds, the consequences eps o X = 0 and S o X = X o S are asserted too
bool is_multiplicative(const TruncatedHopf& H, const HopfDerivation& X,
                       std::string* witness = nullptr);

HopfDerivation derivation_commutator(const TruncatedHopf& H,
                                     const HopfDerivation& X,
                                     const HopfDerivation& Y);

// value at the unit of [v^L, w^L]
PointDerivation tangent_bracket(const TruncatedHopf& H, const PointDerivation& v,
                                const PointDerivation& w);

// convolution of endomorphism tables: (a * b)(x) = sum +- a(x') b(x'')
HopfDerivation convolve_maps(const TruncatedHopf& H, const HopfDerivation& a,
                             const HopfDerivation& b);
HopfDerivation mc_right(const TruncatedHopf& H, const HopfDerivation& X);          // X * S
HopfDerivation mc_right_inverse(const TruncatedHopf& H, const HopfDerivation& xi);  // xi * id

// twisted coaction rho_new(f) = sum +- f(1) S(f(3)) (x) f(2)  (conjugator first)
Tensor rho_new(const TruncatedHopf& H, int basis_index);
// adjoint coaction Ad = flip o rho_new = sum +- f(2) (x) f(1) S(f(3))
Tensor adjoint_coaction(const TruncatedHopf& H, int basis_index);

// m* o xi = xi (x) 1 + (id (x) xi) o rho_new on basis of weight <= W - max(1, gain).
// (Equivalently xi (x) 1 + (xi-on-principal-slot) o tau o Ad; the classical
// group computation Delta(xi f)(g,h) = xi f(g) + (df)_e(Ad_g c(h)) lands xi on
// the principal tensor factor, which is also what delta_new-closedness of the
// 1-cochain xi unfolds to.)
bool is_group_one_cocycle(const TruncatedHopf& H, const HopfDerivation& xi,
                          std::string* witness = nullptr);

// n-cochain: linear map H -> H^{(x)n} (n = 0: functionals)
struct HopfCochain {
  int n = 0;
  Deg degree = 0;
  int gain = 0;
  std::vector<Tensor> values;
};

HopfCochain cochain_of_derivation(const HopfDerivation& X);
HopfDerivation derivation_of_cochain(const HopfCochain& c);  // n = 1 required

// coface operators for V = H with the standard bicomodule structure
// (rho^L = rho^R = Delta):
//   delta_0(c) = (id (x) c) o Delta,  delta_i = Delta at value slot i,
//   delta_{n+1}(c) = (c (x) id) o Delta;  i out of range throws.
HopfCochain coface(const TruncatedHopf& H, const HopfCochain& c, int i);
HopfCochain cochain_differential(const TruncatedHopf& H, const HopfCochain& c);

// same with the twisted bicomodule (left coaction rho_new, trivial right one):
//   delta_0(c) = (id (x) c) o rho_new,  delta_{n+1}(c) = c (x) 1
HopfCochain coface_new(const TruncatedHopf& H, const HopfCochain& c, int i);
HopfCochain cochain_differential_new(const TruncatedHopf& H, const HopfCochain& c);

// omega^R_n(c) = mu_{H^{(x)n}} o (c (x) (m*)^n o S) o Delta  (identity for n = 0)
HopfCochain mc_n(const TruncatedHopf& H, const HopfCochain& c);

// equality of cochains up to weight W: arguments of weight <= W - max(gains),
// values projected to total weight <= W
bool cochain_equal(const TruncatedHopf& H, const HopfCochain& a,
                   const HopfCochain& b, std::string* witness = nullptr);

}  // namespace glint
