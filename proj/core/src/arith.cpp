#include "ql/arith.hpp"

#include <stdexcept>

namespace ql {

Int isqrt_floor(const Int& v) {
  if (v < 0) throw std::domain_error("isqrt_floor: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

Int sqrt_floor(const Rat& r) {
  if (r < 0) throw std::domain_error("sqrt_floor: negative argument");
  // sqrt(p/q) = sqrt(p*q)/q; start from the integer square root and adjust.
  const Int p = r.get_num(), q = r.get_den();
  Int k = isqrt_floor(p * q) / q;
  while (Rat(k + 1) * Rat(k + 1) <= r) ++k;
  while (Rat(k) * Rat(k) > r) --k;
  return k;
}

Int floor_rat(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Rat mod_rat(const Rat& r, const Rat& m) {
  if (m <= 0) throw std::domain_error("mod_rat: modulus must be positive");
  Rat res = r - m * Rat(floor_rat(r / m));
  res.canonicalize();
  return res;
}

Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      Rat r(Int(s));
      return r;
    }
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("rat_from_string: malformed rational '" + s + "'");
  }
}

std::string rat_to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

}  // namespace ql
