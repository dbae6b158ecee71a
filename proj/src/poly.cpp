#include <glint/poly.hpp>

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace glint {

namespace {

struct VarRegistry {
  std::vector<std::string> names;
  std::map<std::string, int> by_name;
  std::mutex mu;
};

VarRegistry& reg() {
  static VarRegistry r;
  return r;
}

}  // namespace

int var_new(const std::string& name) {
  auto& r = reg();
  std::lock_guard<std::mutex> lk(r.mu);
  int id = static_cast<int>(r.names.size());
  r.names.push_back(name);
  // Later var_named lookups resolve to the most recent binding of the name.
  r.by_name[name] = id;
  return id;
}

int var_named(const std::string& name) {
  auto& r = reg();
  {
    std::lock_guard<std::mutex> lk(r.mu);
    auto it = r.by_name.find(name);
    if (it != r.by_name.end()) return it->second;
  }
  return var_new(name);
}

const std::string& var_name(int id) {
  auto& r = reg();
  std::lock_guard<std::mutex> lk(r.mu);
  return r.names.at(static_cast<size_t>(id));
}

int var_count() {
  auto& r = reg();
  std::lock_guard<std::mutex> lk(r.mu);
  return static_cast<int>(r.names.size());
}

void Poly::add_term(const PolyMon& m, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

namespace {

PolyMon mon_mul(const PolyMon& a, const PolyMon& b) {
  PolyMon r;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      r.push_back(b[j++]);
    } else {
      r.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return r;
}

}  // namespace

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term(mon_mul(ma, mb), ca * cb);
  return r;
}

Poly Poly::operator*(const Rat& c) const {
  if (c == 0) return Poly();
  Poly r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r(Rat(1));
  Poly base = *this;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly Poly::substitute(const std::map<int, Poly>& sub) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    for (const auto& [v, e] : m) {
      auto it = sub.find(v);
      if (it == sub.end()) {
        Poly pv = Poly::var(v);
        t = t * pv.pow(static_cast<unsigned>(e));
      } else {
        t = t * it->second.pow(static_cast<unsigned>(e));
      }
    }
    r += t;
  }
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    for (size_t k = 0; k < m.size(); ++k) {
      if (m[k].first != var) continue;
      PolyMon dm = m;
      Rat dc = c * m[k].second;
      if (dm[k].second == 1)
        dm.erase(dm.begin() + static_cast<long>(k));
      else
        dm[k].second -= 1;
      r.add_term(dm, dc);
    }
  }
  return r;
}

Poly Poly::coefficient_of(int var, int k) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = 0;
    PolyMon rest;
    for (const auto& [v, p] : m) {
      if (v == var)
        e = p;
      else
        rest.emplace_back(v, p);
    }
    if (e == k) r.add_term(rest, c);
  }
  return r;
}

Rat Poly::eval_at_zero() const { return constant_term(); }

Rat Poly::eval(const std::map<int, Rat>& point) const {
  Rat r(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (const auto& [v, e] : m) {
      auto it = point.find(v);
      if (it == point.end())
        throw std::invalid_argument("poly eval: unbound variable " + var_name(v));
      t *= rat_pow(it->second, e);
    }
    r += t;
  }
  return r;
}

std::vector<int> Poly::variables() const {
  std::vector<int> vs;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m)
      if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  return vs;
}

namespace {

// Display order within a degree block: lex by variable id, higher exponent
// first, so x^2 precedes x*y precedes y^2.
bool mon_display_less(const PolyMon& a, const PolyMon& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first != b[j].first) return a[i].first < b[j].first;
    if (a[i].second != b[j].second) return a[i].second > b[j].second;
    ++i;
    ++j;
  }
  return i < a.size();
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<int, const std::pair<const PolyMon, Rat>*>> order;
  for (const auto& t : terms_) {
    int d = 0;
    for (const auto& [v, e] : t.first) d += e;
    order.emplace_back(d, &t);
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return mon_display_less(a.second->first, b.second->first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, tp] : order) {
    const auto& [m, c] = *tp;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool coeff_one = (a == 1) && !m.empty();
    if (!coeff_one) os << rat_str(a);
    bool lead = coeff_one;
    for (const auto& [v, e] : m) {
      if (!lead) os << "*";
      lead = false;
      os << var_name(v);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

PolyVec polyvec_add(const PolyVec& a, const PolyVec& b) {
  PolyVec r = a;
  for (size_t i = 0; i < b.size(); ++i) {
    if (i >= r.size()) r.resize(b.size());
    r[i] += b[i];
  }
  return r;
}

PolyVec polyvec_scale(const PolyVec& a, const Poly& c) {
  PolyVec r;
  r.reserve(a.size());
  for (const auto& p : a) r.push_back(p * c);
  return r;
}

bool polyvec_zero_p(const PolyVec& a) {
  for (const auto& p : a)
    if (!p.is_zero()) return false;
  return true;
}

PolyVec polyvec_substitute(const PolyVec& a, const std::map<int, Poly>& sub) {
  PolyVec r;
  r.reserve(a.size());
  for (const auto& p : a) r.push_back(p.substitute(sub));
  return r;
}

}  // namespace glint
