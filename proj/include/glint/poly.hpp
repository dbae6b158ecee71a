#pragma once

// Sparse multivariate polynomials over Q.  These are the "smooth functions"
// of the polynomial nilpotent-group model: every coordinate ring, group law,
// and cocycle in the project is a vector of these.
//
// Variables live in a process-wide registry and are identified by small ints;
// the registry hands out slot-tagged copies ("x@2") when a symbolic
// computation needs several independent group points.

#include <glint/rational.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace glint {

// --- variable registry ---

int var_new(const std::string& name);          // always creates a fresh id
int var_named(const std::string& name);        // reuses the id if the name exists
const std::string& var_name(int id);
int var_count();

// Monomial: sorted (var, exponent>0) pairs.
using PolyMon = std::vector<std::pair<int, int>>;

class Poly {
 public:
  Poly() = default;
  explicit Poly(const Rat& c) {
    if (c != 0) terms_[{}] = c;
  }
  static Poly var(int id) {
    Poly p;
    p.terms_[{{id, 1}}] = Rat(1);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  Rat constant_term() const {
    auto it = terms_.find({});
    return it == terms_.end() ? Rat(0) : it->second;
  }

  int total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
      int t = 0;
      for (const auto& [v, e] : m) t += e;
      if (t > d) d = t;
    }
    return d;
  }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
  }
  Poly operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
  }
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return terms_ != o.terms_; }
  bool operator<(const Poly& o) const { return terms_ < o.terms_; }

  Poly pow(unsigned e) const;

  // Simultaneous substitution var -> polynomial; unmapped variables persist.
  Poly substitute(const std::map<int, Poly>& sub) const;

  // d/d(var).
  Poly derivative(int var) const;

  // Coefficient of var^k, as a polynomial in the remaining variables.
  Poly coefficient_of(int var, int k) const;

  // Evaluate with every variable set to 0.
  Rat eval_at_zero() const;

  // Rational evaluation; unmapped variables are an error only if present.
  Rat eval(const std::map<int, Rat>& point) const;

  // Collect the ids of variables that occur.
  std::vector<int> variables() const;

  // Deterministic rendering, terms ordered by (total degree, monomial).
  std::string str() const;

  const std::map<PolyMon, Rat>& terms() const { return terms_; }
  void add_term(const PolyMon& m, const Rat& c);

 private:
  std::map<PolyMon, Rat> terms_;
};

using PolyVec = std::vector<Poly>;

inline PolyVec polyvec_zero(size_t n) { return PolyVec(n); }

PolyVec polyvec_add(const PolyVec& a, const PolyVec& b);
PolyVec polyvec_scale(const PolyVec& a, const Poly& c);
bool polyvec_zero_p(const PolyVec& a);
PolyVec polyvec_substitute(const PolyVec& a, const std::map<int, Poly>& sub);

}  // namespace glint
