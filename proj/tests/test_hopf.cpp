#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "glint/hopf.hpp"

using namespace glint;

namespace {

const TruncatedHopf& usl2() {
  static TruncatedHopf H = hopf_of_uea(fixtures::sl2(), 4);
  return H;
}

const TruncatedHopf& dsl2() {
  static TruncatedHopf D = dualize(usl2());
  return D;
}

const TruncatedHopf& uline() {  // mixed parity: u odd, e1 e2 even
  static TruncatedHopf H = hopf_of_uea(fixtures::aff1_line(), 3);
  return H;
}

const TruncatedHopf& uab2() {  // polynomial ring in two primitives
  static TruncatedHopf H = hopf_of_uea(fixtures::abelian2(), 4);
  return H;
}

TElem be(int i) { return TElem{{i, Rat(1)}}; }

PointDerivation point_at(const TruncatedHopf& H, const std::string& label,
                         Deg degree = 0) {
  PointDerivation v;
  v.degree = degree;
  v.values[H.index.at(label)] = Rat(1);
  return v;
}

HopfDerivation zero_field(const TruncatedHopf& H, Deg degree = 0) {
  HopfDerivation X;
  X.degree = degree;
  X.values.assign(H.dim(), TElem{});
  return X;
}

HopfDerivation id_field(const TruncatedHopf& H) {
  HopfDerivation X = zero_field(H);
  for (int i = 0; i < H.dim(); ++i) X.values[i] = be(i);
  return X;
}

HopfDerivation field_sub(const HopfDerivation& a, const HopfDerivation& b) {
  HopfDerivation out = a;
  for (size_t i = 0; i < out.values.size(); ++i)
    for (const auto& [k, c] : b.values[i]) {
      out.values[i][k] -= c;
      if (out.values[i][k] == 0) out.values[i].erase(k);
    }
  out.gain = std::max(a.gain, b.gain);
  return out;
}

// random endomorphism table preserving degree and weight (graded tables are
// the ones whose convolution identities survive truncation on both pictures)
HopfDerivation random_field(const TruncatedHopf& H, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-2, 2);
  HopfDerivation X = zero_field(H);
  for (int i = 0; i < H.dim(); ++i) {
    int placed = 0;
    for (int j = 0; j < H.dim() && placed < 2; ++j) {
      if (H.deg(j) != H.deg(i) || H.weight(j) != H.weight(i)) continue;
      int c = coef(rng);
      if (c == 0) continue;
      X.values[i][j] = Rat(c);
      ++placed;
    }
  }
  return X;
}

HopfCochain random_functional(const TruncatedHopf& H, std::mt19937_64& rng,
                              Deg degree = 0) {
  std::uniform_int_distribution<int> coef(-3, 3);
  HopfCochain c;
  c.n = 0;
  c.degree = degree;
  c.values.assign(H.dim(), Tensor{});
  for (int i = 0; i < H.dim(); ++i) {
    if (H.deg(i) != -degree) continue;
    int v = coef(rng);
    if (v != 0) c.values[i][{}] = Rat(v);
  }
  return c;
}

HopfCochain zero_cochain(const TruncatedHopf& H, int n, int gain = 0) {
  HopfCochain c;
  c.n = n;
  c.gain = gain;
  c.values.assign(H.dim(), Tensor{});
  return c;
}

}  // namespace

TEST_CASE("tensor flip is a sign-carrying involution") {
  const auto& H = uline();
  int u = H.index.at("u"), e1 = H.index.at("e1");
  Tensor t{{{u, u}, Rat(1)}, {{u, e1}, Rat(2)}};
  Tensor f = flip_adjacent(H, t, 0);
  CHECK(f.at({u, u}) == -1);      // odd-odd swap
  CHECK(f.at({e1, u}) == 2);      // odd-even swap
  CHECK(flip_adjacent(H, f, 0) == t);
  CHECK_THROWS_AS(flip_adjacent(H, t, 5), std::out_of_range);
}

TEST_CASE("universal envelope Hopf algebras pass the axiom battery") {
  CHECK(check_hopf_axioms(usl2()).all_pass());
  CHECK(check_hopf_axioms(hopf_of_uea(fixtures::heis3(), 4)).all_pass());
  CHECK(check_hopf_axioms(uline()).all_pass());

  TruncatedHopf A = hopf_of_uea(fixtures::abelian2(), 4);
  CHECK(A.commutative);
  Report r = check_hopf_axioms(A);
  CHECK(r.all_pass());
  CHECK(r.str().find("commutativity: PASS") != std::string::npos);

  // dimension of the weight-4 truncation of U(sl2): 1+3+6+10+15
  CHECK(usl2().dim() == 35);
  CHECK(usl2().labels[0] == "1");
  CHECK(usl2().mul(be(usl2().index.at("e")), be(usl2().index.at("f"))) ==
        TElem{{usl2().index.at("e*f"), Rat(1)}});
}

TEST_CASE("corrupted structure tensors fail with witnesses") {
  TruncatedHopf H = usl2();
  int e = H.index.at("e");

  SUBCASE("antipode sign flip") {
    H.antipode_table[e] = be(e);  // S(e) := +e
    Report r = check_hopf_axioms(H);
    CHECK_FALSE(r.all_pass());
    CHECK(r.str().find("antipode: FAIL") != std::string::npos);
    CHECK(r.first_fail()->witness.find("e") != std::string::npos);
    CHECK(r.str().find("unit: PASS") != std::string::npos);
    CHECK_THROWS_AS(hopf_finalize(H), std::runtime_error);
  }

  SUBCASE("dropped coproduct term") {
    H.delta_table[e].erase({H.unit.begin()->first, e});  // kill 1 (x) e
    Report r = check_hopf_axioms(H);
    CHECK_FALSE(r.all_pass());
    CHECK(r.str().find("counit: FAIL") != std::string::npos);
  }

  SUBCASE("degree-breaking product is rejected up front") {
    // need mixed degrees for this: U(sl2) sits entirely in degree 0
    TruncatedHopf B = uline();
    B.mu_table[{B.index.at("u"), B.index.at("e1")}] = B.unit;  // -1 -> 0
    CHECK_THROWS_AS(hopf_validate(B), std::invalid_argument);
  }
}

TEST_CASE("dualize is an involution and swaps the commutativity flags") {
  const auto& D = dsl2();
  CHECK(D.commutative);              // U(sl2) is cocommutative
  CHECK_FALSE(is_cocommutative(D));  // sl2 is not abelian
  CHECK(check_hopf_axioms(D).all_pass());
  CHECK(check_hopf_axioms(dualize(uline())).all_pass());

  TruncatedHopf DD = dualize(D);
  CHECK(DD.mu_table == usl2().mu_table);
  CHECK(DD.delta_table == usl2().delta_table);
  CHECK(DD.antipode_table == usl2().antipode_table);
  CHECK(DD.degrees == usl2().degrees);
}

TEST_CASE("antipode is recovered by weight recursion where the coproduct is connected") {
  auto S = antipode_from_axiom(usl2());
  CHECK(S == usl2().antipode_table);
  auto S2 = antipode_from_axiom(uline());
  CHECK(S2 == uline().antipode_table);
  // dual of a nonabelian envelope has same-weight coproduct terms
  CHECK_THROWS_AS(antipode_from_axiom(dsl2()), std::domain_error);
}

TEST_CASE("antipode squares to the identity on (co)commutative instances") {
  for (const TruncatedHopf* Hp : {&usl2(), &dsl2()}) {
    const auto& H = *Hp;
    for (int i = 0; i < H.dim(); ++i)
      CHECK(H.antipode_elem(H.antipode_table[i]) == be(i));
  }
}

TEST_CASE("point derivations see only the primitive part") {
  // on the function model dual(U(sl2)): letters are tangent vectors at the
  // unit; on U(sl2) itself delta_e is NOT one (v(h*e) = v(e*h + 2e) = 2 != 0)
  const auto& D = dsl2();
  std::string w;
  CHECK(point_derivation_check(D, point_at(D, "e"), &w));
  CHECK(point_derivation_check(D, point_at(D, "h"), &w));
  CHECK_FALSE(point_derivation_check(usl2(), point_at(usl2(), "e"), &w));

  PointDerivation bad;  // supported on a product: violates the law at (e, f)
  bad.values[D.index.at("e*f")] = Rat(1);
  CHECK_FALSE(point_derivation_check(D, bad, &w));
  CHECK(w.find("e") != std::string::npos);
}

TEST_CASE("translations invert value_at_unit and are one-sided invariant") {
  const auto& D = dsl2();
  for (const char* gname : {"e", "f", "h"}) {
    PointDerivation v = point_at(D, gname);
    HopfDerivation L = left_translate(D, v);
    HopfDerivation R = right_translate(D, v);
    CHECK(value_at_unit(D, L).values == v.values);
    CHECK(value_at_unit(D, R).values == v.values);
    CHECK(derivation_leibniz_check(D, L));
    CHECK(derivation_leibniz_check(D, R));
    CHECK(is_left_invariant(D, L));
  }
  CHECK(is_left_invariant(D, zero_field(D)));

  // value_at_unit inverts translation on any instance (pure counit law)
  PointDerivation ve = point_at(usl2(), "e");
  CHECK(value_at_unit(usl2(), left_translate(usl2(), ve)).values == ve.values);

  // noncocommutative: the right translation is not left-invariant
  std::string w;
  CHECK_FALSE(is_left_invariant(D, right_translate(D, point_at(D, "e")), &w));
  CHECK(!w.empty());
}

TEST_CASE("left and right translations supercommute") {
  const auto& H = uline();
  std::vector<PointDerivation> pts = {point_at(H, "u", -1), point_at(H, "e1"),
                                      point_at(H, "e2")};
  for (const auto& v1 : pts) {
    for (const auto& v2 : pts) {
      HopfDerivation L = left_translate(H, v1);
      HopfDerivation R = right_translate(H, v2);
      Rat s = koszul_sign(v1.degree, v2.degree);
      for (int i = 0; i < H.dim(); ++i) {
        TElem lr = L.apply(R.values[i]);
        TElem rl = R.apply(L.values[i]);
        for (auto& [k, c] : rl) c *= s;
        CHECK(lr == rl);
      }
    }
  }
}

TEST_CASE("on a commutative cocommutative algebra the two translations agree") {
  TruncatedHopf A = hopf_of_uea(fixtures::abelian2(), 3);
  PointDerivation v = point_at(A, "p");
  CHECK(left_translate(A, v).values == right_translate(A, v).values);
}

TEST_CASE("tangent bracket on the dual model recovers the structure constants") {
  const auto& D = dsl2();
  const DGLASpec g = fixtures::sl2();
  std::vector<PointDerivation> v;
  for (int i = 0; i < g.basis.size(); ++i) v.push_back(point_at(D, g.basis.name(i)));

  for (int i = 0; i < g.basis.size(); ++i) {
    for (int j = 0; j < g.basis.size(); ++j) {
      PointDerivation b = tangent_bracket(D, v[i], v[j]);
      SparseVec want;
      for (const auto& [k, c] : g.bracket_basis(i, j))
        want[D.index.at(g.basis.name(k))] = c;
      CHECK(b.values == want);
    }
  }

  // Jacobi for the induced bracket
  auto tb = [&](const PointDerivation& a, const PointDerivation& b) {
    return tangent_bracket(D, a, b);
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        SparseVec lhs = tb(v[i], tb(v[j], v[k])).values;
        SparseVec rhs = tb(tb(v[i], v[j]), v[k]).values;
        for (const auto& [x, c] : tb(v[j], tb(v[i], v[k])).values) {
          rhs[x] += c;
          if (rhs[x] == 0) rhs.erase(x);
        }
        CHECK(lhs == rhs);
      }

  // on the cocommutative envelope itself the tangent bracket collapses
  const auto& H = usl2();
  CHECK(tangent_bracket(H, point_at(H, "e"), point_at(H, "f")).values.empty());
}

TEST_CASE("multiplicative fields: exact difference passes, one-sided fails") {
  const auto& D = dsl2();
  PointDerivation v = point_at(D, "e");
  HopfDerivation X = field_sub(left_translate(D, v), right_translate(D, v));
  std::string w;
  CHECK(is_multiplicative(D, X, &w));
  CHECK(is_multiplicative(D, zero_field(D)));
  CHECK_FALSE(is_multiplicative(D, left_translate(D, v), &w));
  CHECK(!w.empty());

  // extension of ad_h is multiplicative on the envelope but not left-invariant
  const auto& H = usl2();
  std::map<int, TElem> imgs;
  imgs[H.index.at("e")] = TElem{{H.index.at("e"), Rat(2)}};
  imgs[H.index.at("f")] = TElem{{H.index.at("f"), Rat(-2)}};
  imgs[H.index.at("h")] = TElem{};
  HopfDerivation adh = derivation_from_generators(H, imgs, 0, 0);
  CHECK(derivation_leibniz_check(H, adh));
  CHECK(is_multiplicative(H, adh));
  CHECK_FALSE(is_left_invariant(H, adh));

  HopfDerivation broken = adh;
  broken.values[H.index.at("e*f")][H.index.at("h")] += 1;
  CHECK_FALSE(derivation_leibniz_check(H, broken, &w));
  CHECK(!w.empty());
}

TEST_CASE("Maurer-Cartan map: unit image, round trip, point-derivation range") {
  std::mt19937_64 rng(20240811);
  for (const TruncatedHopf* Hp : {&usl2(), &dsl2()}) {
    const auto& H = *Hp;

    HopfDerivation ehat = mc_right(H, id_field(H));  // id * S = eta eps
    for (int i = 0; i < H.dim(); ++i) {
      TElem want;
      Rat e = H.counit_elem(be(i));
      for (const auto& [j, c] : H.unit)
        if (e != 0) want[j] = e * c;
      CHECK(ehat.values[i] == want);
    }

    for (int rep = 0; rep < 3; ++rep) {
      HopfDerivation X = random_field(H, rng);
      HopfDerivation back = mc_right_inverse(H, mc_right(H, X));
      CHECK(back.values == X.values);
    }
  }

  // omega^R of a derivation satisfies the eps-twisted Leibniz law
  auto check_point_law = [](const TruncatedHopf& H, const HopfDerivation& xi) {
    for (int i = 0; i < H.dim(); ++i) {
      for (int j = 0; j < H.dim(); ++j) {
        if (H.weight(i) + H.weight(j) > H.W) continue;
        TElem l = xi.apply(H.mul(be(i), be(j)));
        TElem r = xi.apply(be(i));
        Rat ei = H.counit_elem(be(i)), ej = H.counit_elem(be(j));
        for (auto& [k, c] : r) c *= ej;
        for (const auto& [k, c] : xi.apply(be(j))) r[k] += ei * c;
        for (auto it = l.begin(); it != l.end();)
          it = (it->second == 0) ? l.erase(it) : std::next(it);
        for (auto it = r.begin(); it != r.end();)
          it = (it->second == 0) ? r.erase(it) : std::next(it);
        CHECK(l == r);
      }
    }
  };
  // on the commutative function model the form is pointwise a tangent vector
  const auto& D = dsl2();
  check_point_law(D, mc_right(D, left_translate(D, point_at(D, "e"))));

  // noncommutative case: the second summand picks up an adjoint twist,
  // xi(ab) = xi(a) eps(b) + sum a_1 xi(b) S(a_2)
  const auto& H = usl2();
  std::map<int, TElem> imgs;
  imgs[H.index.at("e")] = TElem{{H.index.at("e"), Rat(2)}};
  imgs[H.index.at("f")] = TElem{{H.index.at("f"), Rat(-2)}};
  imgs[H.index.at("h")] = TElem{};
  HopfDerivation xi = mc_right(H, derivation_from_generators(H, imgs, 0, 0));
  for (int i = 0; i < H.dim(); ++i)
    for (int j = 0; j < H.dim(); ++j) {
      if (H.weight(i) + H.weight(j) > H.W) continue;
      TElem l = xi.apply(H.mul(be(i), be(j)));
      TElem r = xi.apply(be(i));
      Rat ej = H.counit_elem(be(j));
      for (auto& [k, c] : r) c *= ej;
      for (const auto& [ab, c] : H.delta_table[i]) {
        TElem m = H.mul(be(ab[0]), xi.apply(be(j)));
        m = H.mul(m, H.antipode_table[ab[1]]);
        for (const auto& [k, cv] : m) r[k] += c * cv;
      }
      for (auto it = l.begin(); it != l.end();)
        it = (it->second == 0) ? l.erase(it) : std::next(it);
      for (auto it = r.begin(); it != r.end();)
        it = (it->second == 0) ? r.erase(it) : std::next(it);
      CHECK(l == r);
    }
}

TEST_CASE("adjoint coaction: unit, counit compatibility, triviality") {
  TruncatedHopf A = hopf_of_uea(fixtures::abelian2(), 3);
  for (int i = 0; i < A.dim(); ++i) {
    Tensor want;
    for (const auto& [u, cu] : A.unit) want[{i, u}] = cu;
    CHECK(adjoint_coaction(A, i) == want);  // commutative cocommutative: f (x) 1
  }
  for (const TruncatedHopf* Hp : {&usl2(), &dsl2(), &uline()}) {
    const auto& H = *Hp;
    int i0 = H.unit.begin()->first;
    Tensor unit2;
    unit2[{i0, i0}] = Rat(1);
    CHECK(adjoint_coaction(H, i0) == unit2);
    for (int i = 0; i < H.dim(); ++i) {
      CHECK(elem_of_tensor(counit_at(H, adjoint_coaction(H, i), 1)) == be(i));
      // left-coaction counit law for the twisted coaction
      CHECK(elem_of_tensor(counit_at(H, rho_new(H, i), 0)) == be(i));
    }
  }
  bool trivial = true;
  for (int i = 0; i < dsl2().dim() && trivial; ++i) {
    Tensor want;
    for (const auto& [u, cu] : dsl2().unit) want[{i, u}] = cu;
    trivial = adjoint_coaction(dsl2(), i) == want;
  }
  CHECK_FALSE(trivial);  // sl2 has nontrivial adjoint
}

TEST_CASE("group 1-cocycles match multiplicative fields through omega^R") {
  const auto& D = dsl2();
  PointDerivation v = point_at(D, "e");
  HopfDerivation X = field_sub(left_translate(D, v), right_translate(D, v));
  HopfDerivation xi = mc_right(D, X);
  std::string w;
  CHECK(is_group_one_cocycle(D, xi, &w));
  CHECK(is_group_one_cocycle(D, zero_field(D)));
  HopfDerivation bad = mc_right(D, left_translate(D, v));
  CHECK_FALSE(is_group_one_cocycle(D, bad, &w));
  CHECK(!w.empty());

  // delta_new-closedness of a 1-cochain is the same condition
  HopfCochain cx = cochain_of_derivation(xi);
  HopfCochain z2 = zero_cochain(D, 2, 1);
  CHECK(cochain_equal(D, cochain_differential_new(D, cx), z2));
  HopfCochain cb = cochain_of_derivation(bad);
  cb.gain = 1;
  CHECK_FALSE(cochain_equal(D, cochain_differential_new(D, cb), z2, &w));
}

TEST_CASE("mc_right_inverse of a cocycle is multiplicative (both directions)") {
  const auto& D = dsl2();
  PointDerivation v = point_at(D, "h");
  HopfDerivation X = field_sub(left_translate(D, v), right_translate(D, v));
  HopfDerivation back = mc_right_inverse(D, mc_right(D, X));
  CHECK(back.values == X.values);
  CHECK(is_multiplicative(D, back));
}

TEST_CASE("coboundary of cochains squares to zero, both bicomodule structures") {
  // run on Hopf algebras whose product is weight-graded (not merely filtered):
  // there delta o delta = 0 holds verbatim in the truncated model, with no
  // contributions escaping past the weight cap in one composition order only
  std::mt19937_64 rng(77001);
  for (const TruncatedHopf* Hp : {&usl2(), &uline(), &uab2()}) {
    const auto& H = *Hp;
    HopfCochain c0 = random_functional(H, rng);
    HopfCochain dd0 = cochain_differential(H, cochain_differential(H, c0));
    CHECK(cochain_equal(H, dd0, zero_cochain(H, 2)));
    HopfCochain nn0 = cochain_differential_new(H, cochain_differential_new(H, c0));
    CHECK(cochain_equal(H, nn0, zero_cochain(H, 2)));

    HopfCochain c1 = cochain_of_derivation(random_field(H, rng));
    HopfCochain dd1 = cochain_differential(H, cochain_differential(H, c1));
    CHECK(cochain_equal(H, dd1, zero_cochain(H, 3)));
    HopfCochain nn1 = cochain_differential_new(H, cochain_differential_new(H, c1));
    CHECK(cochain_equal(H, nn1, zero_cochain(H, 3)));
  }

  HopfCochain c3 = zero_cochain(usl2(), 3);
  CHECK_THROWS_AS(coface(usl2(), c3, 0), std::out_of_range);
  CHECK_THROWS_AS(coface(usl2(), zero_cochain(usl2(), 1), 3), std::out_of_range);
  CHECK_THROWS_AS(coface(usl2(), zero_cochain(usl2(), 1), -1), std::out_of_range);
}

TEST_CASE("omega^R intertwines the two coface complexes") {
  // weight-graded product instances again: mc_n composes mu with Delta, and on
  // merely filtered products the two sides shed different above-cap terms
  std::mt19937_64 rng(515151);
  for (const TruncatedHopf* Hp : {&usl2(), &uline(), &uab2()}) {
    const auto& H = *Hp;

    // n = 0, even and odd functionals
    for (Deg d : {Deg(0), Deg(-1), Deg(1)}) {
      HopfCochain c = random_functional(H, rng, d);
      for (int i = 0; i <= 1; ++i) {
        HopfCochain lhs = mc_n(H, coface(H, c, i));
        HopfCochain rhs = coface_new(H, mc_n(H, c), i);
        CHECK(cochain_equal(H, lhs, rhs));
      }
    }

    // n = 1
    HopfCochain c1 = cochain_of_derivation(random_field(H, rng));
    for (int i = 0; i <= 2; ++i) {
      HopfCochain lhs = mc_n(H, coface(H, c1, i));
      HopfCochain rhs = coface_new(H, mc_n(H, c1), i);
      CHECK(cochain_equal(H, lhs, rhs));
    }
  }
}

TEST_CASE("left-invariant fields close under the graded commutator") {
  const auto& D = dsl2();
  std::vector<PointDerivation> pts;
  std::vector<HopfDerivation> fields;
  for (const char* n : {"e", "f", "h"}) {
    pts.push_back(point_at(D, n));
    fields.push_back(left_translate(D, pts.back()));
  }
  for (size_t a = 0; a < fields.size(); ++a)
    for (size_t b = 0; b < fields.size(); ++b) {
      // a commutator of translates can drop weight by 2, so its table is only
      // trustworthy one weight below the cap; invariance is checked there
      HopfDerivation C = derivation_commutator(D, fields[a], fields[b]);
      CHECK(is_left_invariant(D, C, nullptr, 1));
      // and it is again a translate: of the bracket of the tangent vectors
      HopfDerivation T = left_translate(D, tangent_bracket(D, pts[a], pts[b]));
      for (int i = 0; i < D.dim(); ++i) {
        if (D.weight(i) > D.W - 1) continue;
        TElem l = C.values[i], r = T.values[i];
        for (auto it = l.begin(); it != l.end();)
          it = (D.weight(it->first) > D.W - 1) ? l.erase(it) : std::next(it);
        for (auto it = r.begin(); it != r.end();)
          it = (D.weight(it->first) > D.W - 1) ? r.erase(it) : std::next(it);
        CHECK(l == r);
      }
    }
}

TEST_CASE("axiom reports are identical in serial and parallel mode") {
  std::string s = check_hopf_axioms(usl2(), ExecMode::serial).str();
  std::string p = check_hopf_axioms(usl2(), ExecMode::parallel).str();
  CHECK(s == p);
  TruncatedHopf bad = usl2();
  bad.antipode_table[bad.index.at("f")] = be(bad.index.at("f"));
  CHECK(check_hopf_axioms(bad, ExecMode::serial).str() ==
        check_hopf_axioms(bad, ExecMode::parallel).str());
}
