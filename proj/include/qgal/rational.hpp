#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qgal {

// Exact rational scalar. All coefficient arithmetic in the engine is exact;
// floating point is never used.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative integer");
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return Rat(z);
}

inline Rat binomial(int n, int k) {
  if (k < 0 || k > n) return Rat(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return Rat(z);
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// Canonical text form: "p" or "p/q" with q > 0.
inline std::string to_string(const Rat& q) { return q.get_str(); }

// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw std::invalid_argument("malformed rational literal: " + s);
  }
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  q.canonicalize();
  if (q.get_den() == 0)
    throw std::invalid_argument("rational with zero denominator: " + s);
  return q;
}

}  // namespace qgal
