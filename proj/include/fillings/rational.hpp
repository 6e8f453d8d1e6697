#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "fillings/error.hpp"

namespace fillings {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational. Rejects q = 0.
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto is_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
    throw InputError("not a rational number: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num, 10), d(den, 10);
  if (d == 0) throw InputError("zero denominator in '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Integer& z) { return z.get_str(); }

inline bool is_perfect_square(const Integer& z) {
  return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

/// True iff r = (p/q)^2 for some rational p/q.
inline bool rational_is_square(const Rational& r) {
  return sgn(r) >= 0 && is_perfect_square(r.get_num()) && is_perfect_square(r.get_den());
}

/// Exact square root of a rational square; caller guarantees rational_is_square(r).
inline Rational rational_sqrt(const Rational& r) {
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
  Rational out(n, d);
  out.canonicalize();
  return out;
}

}  // namespace fillings
