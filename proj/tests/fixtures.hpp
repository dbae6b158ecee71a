#pragma once

// Small algebra corpus shared by the test binaries.  Index conventions are
// the ones used throughout: bracket constants stored on ordered pairs only.

#include <glint/dgla.hpp>

namespace glint::fixtures {

// e, f, h with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
inline DGLASpec sl2() {
  DGLASpec g;
  g.name = "sl2";
  g.basis.names = {"e", "f", "h"};
  g.basis.degrees = {0, 0, 0};
  g.bracket_table[{0, 1}] = SparseVec{{2, Rat(1)}};   // [e,f] = h
  g.bracket_table[{0, 2}] = SparseVec{{0, Rat(-2)}};  // [e,h] = -2e
  g.bracket_table[{1, 2}] = SparseVec{{1, Rat(2)}};   // [f,h] = 2f
  g.differential.degree = 1;
  return g;
}

// Mutated constant: [h,e] = e, which breaks Jacobi.
inline DGLASpec sl2_broken() {
  DGLASpec g = sl2();
  g.name = "sl2-broken";
  g.bracket_table[{0, 2}] = SparseVec{{0, Rat(-1)}};  // [e,h] = -e
  return g;
}

// X, Y, Z with [X,Y] = Z.
inline DGLASpec heis3() {
  DGLASpec g;
  g.name = "heis3";
  g.basis.names = {"X", "Y", "Z"};
  g.basis.degrees = {0, 0, 0};
  g.bracket_table[{0, 1}] = SparseVec{{2, Rat(1)}};
  g.differential.degree = 1;
  return g;
}

// e1, e2 with [e1,e2] = e2.
inline DGLASpec aff1() {
  DGLASpec g;
  g.name = "aff1";
  g.basis.names = {"e1", "e2"};
  g.basis.degrees = {0, 0};
  g.bracket_table[{0, 1}] = SparseVec{{1, Rat(1)}};
  g.differential.degree = 1;
  return g;
}

// a (degree 0), b (degree 1), abelian, da = b.
inline DGLASpec ab_ext() {
  DGLASpec g;
  g.name = "ab-ext";
  g.basis.names = {"a", "b"};
  g.basis.degrees = {0, 1};
  g.differential.degree = 1;
  g.differential.columns[0] = SparseVec{{1, Rat(1)}};
  return g;
}

// u (degree -1), v (degree 0), abelian, du = v.
inline DGLASpec twoterm() {
  DGLASpec g;
  g.name = "twoterm";
  g.basis.names = {"u", "v"};
  g.basis.degrees = {-1, 0};
  g.differential.degree = 1;
  g.differential.columns[0] = SparseVec{{1, Rat(1)}};
  return g;
}

// Two commuting degree-0 generators.
inline DGLASpec abelian2() {
  DGLASpec g;
  g.name = "abelian2";
  g.basis.names = {"p", "q"};
  g.basis.degrees = {0, 0};
  g.differential.degree = 1;
  return g;
}

// heis3 with a degree-1 generator W, [X,W] = 0 etc (central), dX = W.
// A DGHCP fixture: the differential is outer.
inline DGLASpec heis3_ext() {
  DGLASpec g;
  g.name = "heis3-ext";
  g.basis.names = {"X", "Y", "Z", "W"};
  g.basis.degrees = {0, 0, 0, 1};
  g.bracket_table[{0, 1}] = SparseVec{{2, Rat(1)}};
  g.differential.degree = 1;
  // dX = W; Leibniz forces dZ = d[X,Y] = [dX,Y] = [W,Y] = 0, fine since W central
  g.differential.columns[0] = SparseVec{{3, Rat(1)}};
  return g;
}

// e1..e4 with [e1,e2] = e3, [e1,e3] = e4: nilpotency class 3.
inline DGLASpec filiform4() {
  DGLASpec g;
  g.name = "filiform4";
  g.basis.names = {"e1", "e2", "e3", "e4"};
  g.basis.degrees = {0, 0, 0, 0};
  g.bracket_table[{0, 1}] = SparseVec{{2, Rat(1)}};
  g.bracket_table[{0, 2}] = SparseVec{{3, Rat(1)}};
  g.differential.degree = 1;
  return g;
}

// Mixed-parity Jacobi exercise: aff(1) acting on a degree -1 line,
// [e1,e2] = e2, [e1,u] = u, [e2,u] = 0, u odd of degree -1.
inline DGLASpec aff1_line() {
  DGLASpec g;
  g.name = "aff1-line";
  g.basis.names = {"u", "e1", "e2"};
  g.basis.degrees = {-1, 0, 0};
  g.bracket_table[{1, 2}] = SparseVec{{2, Rat(1)}};
  g.bracket_table[{0, 1}] = SparseVec{{0, Rat(-1)}};  // [u,e1] = -u, so [e1,u] = u
  g.differential.degree = 1;
  return g;
}

}  // namespace glint::fixtures
