#pragma once

// Exact rational scalars. Everything in this project is computed over Q with
// arbitrary-precision integer parts; there are no floating point numbers and
// no tolerances anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace glint {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// or zero denominator; the message carries the offending text.
inline Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw std::invalid_argument("malformed rational '" + s + "'");
  }
  Rat r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational '" + s + "'");
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational '" + s + "'");
  r.canonicalize();
  return r;
}

// Canonical short form: "3", "-2/5".
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Spec-file form: denominator always present, "3/1", "-2/5".
inline std::string rat_str_pq(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rat rat_pow(const Rat& base, unsigned e) {
  Rat acc(1), b(base);
  while (e) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

inline Rat factorial(unsigned n) {
  Rat acc(1);
  for (unsigned k = 2; k <= n; ++k) acc *= Rat(static_cast<long>(k));
  return acc;
}

}  // namespace glint
