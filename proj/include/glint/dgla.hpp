#pragma once

// Graded Lie algebras and DGLAs as sparse structure constants.
//
// Brackets are stored on ordered pairs i < j only; the rest is forced by
// graded antisymmetry.  A diagonal entry (i,i) is legal input exactly when
// generator i is odd ([x,x] is then not determined by antisymmetry).  Checks
// report per-axiom pass/fail lines with an offending basis tuple and residual
// on failure; bad data is a failed check, not an exception.

#include <glint/grading.hpp>
#include <glint/parallel.hpp>
#include <glint/report.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace glint {

struct DGLASpec {
  std::string name;
  GradedBasis basis;
  // (i,j) with i < j, or (i,i) with generator i odd.
  std::map<std::pair<int, int>, SparseVec> bracket_table;
  GradedLinearMap differential;  // degree +1, may have no columns
  int declared_class = 0;        // optional nilpotency class from the spec file
  int weight = 4;                // truncation weight carried to constructions

  // Full bracket with antisymmetry filled in.
  SparseVec bracket_basis(int i, int j) const;
  SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

  // ad_x = [x, -] for homogeneous x.
  GradedLinearMap adjoint(const SparseVec& x, Deg deg_x) const;
  GradedLinearMap adjoint_gen(int i) const;

  bool degree_zero_only() const;
  bool is_abelian() const;

  std::string vec_str(const SparseVec& v) const;
};

// Lower central series length: smallest c with all (c+1)-fold brackets zero.
// Returns -1 if the series stabilizes at a nonzero subspace (not nilpotent).
int nilpotency_class(const DGLASpec& g);

Report check_gla(const DGLASpec& g, ExecMode mode = default_exec_mode());
Report check_dgla(const DGLASpec& g, ExecMode mode = default_exec_mode());

// delta a candidate derivation: delta[x,y] = [delta x, y] + (-1)^{|delta||x|}[x, delta y].
Report derivation_check(const DGLASpec& g, const GradedLinearMap& delta);

struct LieRepresentation {
  GradedBasis target;
  std::vector<GradedLinearMap> action;  // indexed like g.basis
};

// rho[x,y] = rho(x) rho(y) - (-1)^{|x||y|} rho(y) rho(x) on basis pairs.
Report representation_check(const DGLASpec& g, const LieRepresentation& rho);

LieRepresentation adjoint_rep(const DGLASpec& g);

// Alternating n-cochain on a degree-0 Lie algebra valued in the
// representation space; values stored on strictly increasing index tuples.
struct Cochain {
  int n = 0;
  std::map<std::vector<int>, SparseVec> values;

  // Evaluation on an arbitrary tuple: antisymmetrize, zero on repeats.
  SparseVec eval(std::vector<int> args) const;
};

inline constexpr int kCochainCap = 3;

// Classical coboundary (degree-0 algebras only):
//   (dw)(X_0..X_n) = sum_i (-1)^i rho(X_i) w(.. X_i ..)
//                  + sum_{i<j} (-1)^{i+j} w([X_i,X_j], .. X_i .. X_j ..).
Cochain ce_coboundary(const DGLASpec& g, const LieRepresentation& rho, const Cochain& w);

// g degree-0 -> two copies: a degree -1 copy "x[1]" (listed first) and the
// original; [x,y] as before, [x, y[1]] = [x,y][1], [x[1], y[1]] = 0;
// differential is the identity shift x[1] -> x.
DGLASpec shifted_tangent_dgla(const DGLASpec& g0);

// Non-positively graded g -> abelian algebra on the dual basis, the dual of a
// degree -i generator placed in degree i+1, differential = transpose.
DGLASpec ce_dual_dgla(const DGLASpec& g);

// Adjoin the differential as a degree +1 generator "del": [del, x] = dx,
// [del, del] = 0; the new differential is ad_del.
DGLASpec extended_dgla(const DGLASpec& g);

// Degree-0 subalgebra; indices_out maps its basis into g's.
DGLASpec degree_zero_part(const DGLASpec& g, std::vector<int>& indices_out);

}  // namespace glint
