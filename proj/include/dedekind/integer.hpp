#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dedekind/error.hpp"

namespace dedekind {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

inline std::string to_string(const Integer& v) { return v.get_str(); }

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Integer iabs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline Integer igcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Floor division and the matching non-negative remainder for b > 0.
inline Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Integer fmod(const Integer& a, const Integer& b) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Integer divexact(const Integer& n, const Integer& d) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

// p-adic valuation; n must be nonzero.
inline unsigned valuation(Integer n, const Integer& p) {
  unsigned v = 0;
  while (n != 0 && divides(p, n)) {
    n /= p;
    ++v;
  }
  return v;
}

inline bool fits_u64(const Integer& v) { return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64; }

inline std::uint64_t to_u64(const Integer& v) {
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, v.get_mpz_t());
  return out;
}

inline Integer from_u64(std::uint64_t v) {
  Integer r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

struct PrimePower {
  Integer prime;
  unsigned exponent;
};

// Complete factorization of |n| by trial division up to `bound`. Anything
// left over after the loop is prime only if it is below bound^2; otherwise
// the factorization is not certified and BoundExceeded is raised.
inline std::vector<PrimePower> trial_factor(const Integer& n, std::uint64_t bound) {
  if (n == 0) throw InvalidArgument("cannot factor zero");
  Integer rest = iabs(n);
  std::vector<PrimePower> out;
  auto strip = [&](std::uint64_t d) {
    Integer dd = from_u64(d);
    unsigned e = 0;
    while (divides(dd, rest)) {
      rest = divexact(rest, dd);
      ++e;
    }
    if (e > 0) out.push_back({dd, e});
  };
  strip(2);
  for (std::uint64_t d = 3; d <= bound; d += 2) {
    Integer dd = from_u64(d);
    if (dd * dd > rest) break;
    strip(d);
  }
  if (rest > 1) {
    Integer b = from_u64(bound);
    if (rest > b * b)
      throw BoundExceeded("trial division up to " + std::to_string(bound) +
                          " does not certify the factorization of " + n.get_str());
    out.push_back({rest, 1});
  }
  return out;
}

}  // namespace dedekind
