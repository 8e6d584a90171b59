#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "bll/errors.hpp"

namespace bll {

// Exact rational scalar. All arithmetic in the library is exact; doubles
// appear only in the Monte Carlo estimator.
//
// Invariant: every Rat handled by the library is canonical (gcd(p,q)=1, q>0).
// GMP does not canonicalize values built from a numerator/denominator pair,
// so construction goes through rat() / parse_rat() below.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw parse_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q", optional leading '-' on either part. Rejects q = 0.
inline Rat parse_rat(const std::string& text) {
  auto bad = [&]() -> parse_error { return parse_error("malformed rational: '" + text + "'"); };
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  mpz_class num, den;
  if (slash == std::string::npos) {
    if (!is_int(text)) throw bad();
    num.set_str(text, 10);
    den = 1;
  } else {
    const std::string p = text.substr(0, slash), q = text.substr(slash + 1);
    if (!is_int(p) || !is_int(q)) throw bad();
    num.set_str(p, 10);
    den.set_str(q, 10);
    if (den == 0) throw parse_error("rational with zero denominator: '" + text + "'");
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline double to_double(const Rat& r) { return r.get_d(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

}  // namespace bll
