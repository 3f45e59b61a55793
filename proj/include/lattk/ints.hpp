#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lattk {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DimensionError : Error {
  using Error::Error;
};
struct DegenerateLatticeError : Error {
  using Error::Error;
};
struct CapacityError : Error {
  using Error::Error;
};
struct AdmissibilityError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct DomainError : Error {
  using Error::Error;
};

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline Int rat_floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

// canonical representative in [0, 1)
inline Rat mod1(const Rat& x) {
  Rat r = x - Rat(rat_floor(x));
  return r;
}

// canonical representative in [0, 2)
inline Rat mod2(const Rat& x) {
  Rat half = x / 2;
  Rat r = x - Rat(2 * rat_floor(half));
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// exact quotient; caller guarantees divisibility
inline Int div_exact(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int div_floor(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline bool fits_int64(const Int& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

inline std::int64_t to_int64(const Int& v) {
  if (!fits_int64(v)) throw CapacityError("integer exceeds 64-bit range: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

// "p" or "p/q" with q > 1
inline std::string rat_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline bool is_integral(const Rat& x) { return x.get_den() == 1; }

inline bool is_half_integral(const Rat& x) { return x.get_den() == 1 || x.get_den() == 2; }

}  // namespace lattk
