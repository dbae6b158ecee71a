#pragma once

// Jets at the identity: the exact pairing between polynomial functions on a
// nilpotent group (exponential coordinates) and the enveloping algebra of its
// Lie algebra.
//
//   phi(p, q) = [peel_q p](e),   peel_q = (-1)^r X_{l_r}^R ... X_{l_1}^R
//
// for q = l_1 ... l_r a PBW monomial (letters ascending; the innermost field
// is l_1).  The sign and order implement the defining reduction of functions
// on a Harish-Chandra pair, f(s q, .) = (-1)^r (X_{l_r}^R ... X_{l_1}^R
// f(s, .))(.), one trailing letter at a time.
//
// phi is weight-triangular: phi(p, q) = 0 whenever |q| < deg p (a field
// application lowers the total degree by at most one, and evaluation at e
// kills everything positive), and q |-> peel_q|_e is the classical injection
// of U(g0) into point distributions.  So the matrix of phi against the plain
// coordinate monomials x^gamma, deg <= W, is invertible, and its inverse
// yields the polynomial family dual to the PBW basis.  to_coeffs/from_coeffs
// convert between polynomials of degree <= W and functionals on U(g0)_{<=W}.

#include <glint/nilgroup.hpp>
#include <glint/uea.hpp>

#include <map>
#include <vector>

namespace glint {

// (-1)^r X_{l_r}^R ... X_{l_1}^R p, letters applied front-to-back, fields and
// p read in the group's slot-s coordinates.  Recomputes the invariant fields
// on every call; heavy users go through JetDual's cached variant.
Poly jet_peel(const NilpotentGroup& G, const std::vector<int>& letters,
              const Poly& p, int slot = 0);

struct JetDual {
  NilpotentGroup G;
  int W = 4;
  std::vector<PBWMon> mons;        // PBW monomials of weight <= W, (weight, lex)
  std::map<PBWMon, int> index;
  std::vector<PolyVec> vf;         // right-invariant field of letter i, slot 0
  std::vector<Poly> dual;          // phi(dual[b], mons[a]) = [a == b]

  Poly peel(const std::vector<int>& letters, const Poly& p, int slot = 0) const;

  // Pairing coefficients phi(p, q) for all q of weight <= W; parts of p of
  // degree > W are invisible to every q and silently dropped.
  std::map<PBWMon, Rat> to_coeffs(const Poly& p, int slot = 0) const;
  Poly from_coeffs(const std::map<PBWMon, Rat>& c) const;
};

JetDual jet_dual(const NilpotentGroup& G, int W);

}  // namespace glint
