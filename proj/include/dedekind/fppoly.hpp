#pragma once

// Dense univariate polynomials over a prime field F_p with p < 2^31, and the
// "higher congruence" toolkit built on them: gcd, factorization into prime
// functions, irreducibility testing and counting/enumerating monic
// irreducibles.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "dedekind/error.hpp"
#include "dedekind/integer.hpp"
#include "dedekind/poly_text.hpp"

namespace dedekind {

class PrimeModulus {
 public:
  static constexpr std::uint64_t kLimit = std::uint64_t{1} << 31;

  explicit PrimeModulus(std::uint64_t p) : p_(static_cast<std::uint32_t>(p)) {
    if (p >= kLimit) throw InvalidArgument("modulus " + std::to_string(p) + " exceeds 2^31");
    if (!is_prime_u64(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
  }
  static PrimeModulus from_integer(const Integer& p) {
    if (!fits_u64(p) || p >= Integer(std::to_string(kLimit)))
      throw InvalidArgument("modulus " + p.get_str() + " exceeds 2^31");
    return PrimeModulus(to_u64(p));
  }

  std::uint32_t value() const { return p_; }
  Integer as_integer() const { return Integer(static_cast<unsigned long>(p_)); }

  friend bool operator==(PrimeModulus, PrimeModulus) = default;
  friend auto operator<=>(PrimeModulus, PrimeModulus) = default;

 private:
  std::uint32_t p_;
};

namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t{a} + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : static_cast<std::uint32_t>(std::uint64_t{a} + p - b);
}
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
}
inline std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}
inline std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw InvalidArgument("zero has no inverse mod " + std::to_string(p));
  return pow(a, p - 2, p);
}
inline std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}
inline std::uint32_t reduce(const Integer& v, std::uint32_t p) {
  return static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
}

}  // namespace fp

class FpPoly {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit FpPoly(PrimeModulus p) : p_(p) {}
  FpPoly(PrimeModulus p, std::initializer_list<std::int64_t> coeffs) : p_(p) {
    for (auto c : coeffs) c_.push_back(fp::reduce(c, p.value()));
    normalize();
  }
  FpPoly(PrimeModulus p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& c : c_) c %= p.value();
    normalize();
  }
  static FpPoly from_integers(PrimeModulus p, const IntVector& coeffs) {
    std::vector<std::uint32_t> c;
    c.reserve(coeffs.size());
    for (const auto& v : coeffs) c.push_back(fp::reduce(v, p.value()));
    return FpPoly(p, std::move(c));
  }
  static FpPoly constant(PrimeModulus p, std::uint64_t value) {
    return FpPoly(p, std::vector<std::uint32_t>{static_cast<std::uint32_t>(value % p.value())});
  }
  static FpPoly monomial(PrimeModulus p, std::size_t degree, std::uint32_t coeff = 1) {
    std::vector<std::uint32_t> c(degree + 1, 0);
    c[degree] = coeff;
    return FpPoly(p, std::move(c));
  }
  static FpPoly x(PrimeModulus p) { return monomial(p, 1); }

  PrimeModulus modulus() const { return p_; }
  std::uint32_t prime() const { return p_.value(); }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? npos : c_.size() - 1; }
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
  std::uint32_t coeff(std::size_t k) const { return k < c_.size() ? c_[k] : 0; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  IntVector to_integers() const {
    IntVector out;
    out.reserve(c_.size());
    for (auto c : c_) out.emplace_back(static_cast<unsigned long>(c));
    return out;
  }

  // Canonical order: by degree, then lexicographically on the coefficient
  // sequence from the constant term upward. Enumeration and factor lists
  // both follow it.
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const FpPoly& a, const FpPoly& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  PrimeModulus p_;
  std::vector<std::uint32_t> c_;
};

inline std::string to_string(const FpPoly& f, char var = 't') {
  return format_coefficients(f.to_integers(), var);
}

inline FpPoly parse_fppoly(std::string_view text, PrimeModulus p, char var = 't') {
  return FpPoly::from_integers(p, parse_coefficients(text, var));
}

namespace detail {
inline void require_same(const FpPoly& a, const FpPoly& b) {
  if (a.modulus() != b.modulus()) throw ModulusMismatch();
}
}  // namespace detail

inline FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  detail::require_same(a, b);
  const auto p = a.prime();
  std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = fp::add(a.coeff(i), b.coeff(i), p);
  return FpPoly(a.modulus(), std::move(c));
}

inline FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  detail::require_same(a, b);
  const auto p = a.prime();
  std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = fp::sub(a.coeff(i), b.coeff(i), p);
  return FpPoly(a.modulus(), std::move(c));
}

inline FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  detail::require_same(a, b);
  if (a.is_zero() || b.is_zero()) return FpPoly(a.modulus());
  const std::uint64_t p = a.prime();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<std::uint64_t> acc(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t{x[i]} * y[j]) % p;
  }
  std::vector<std::uint32_t> c(acc.begin(), acc.end());
  return FpPoly(a.modulus(), std::move(c));
}

inline FpPoly pow(const FpPoly& a, unsigned e) {
  FpPoly r = FpPoly::constant(a.modulus(), 1);
  for (unsigned k = 0; k < e; ++k) r = r * a;
  return r;
}

inline FpPoly scale(const FpPoly& a, std::uint32_t s) {
  std::vector<std::uint32_t> c(a.coeffs());
  for (auto& v : c) v = fp::mul(v, s % a.prime(), a.prime());
  return FpPoly(a.modulus(), std::move(c));
}

struct FpDivRem {
  FpPoly quotient;
  FpPoly remainder;
};

inline FpDivRem divrem(const FpPoly& a, const FpPoly& b) {
  detail::require_same(a, b);
  if (b.is_zero()) throw DivisionByZero();
  const auto p = a.prime();
  if (a.is_zero() || a.degree() < b.degree()) return {FpPoly(a.modulus()), a};
  std::vector<std::uint32_t> r(a.coeffs());
  const auto& d = b.coeffs();
  const std::size_t db = b.degree();
  std::vector<std::uint32_t> q(a.degree() - db + 1, 0);
  const std::uint32_t inv_lead = fp::inv(b.lead(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::uint32_t coef = fp::mul(r[k + db], inv_lead, p);
    q[k] = coef;
    if (coef == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] = fp::sub(r[k + j], fp::mul(coef, d[j], p), p);
  }
  r.resize(db);
  return {FpPoly(a.modulus(), std::move(q)), FpPoly(a.modulus(), std::move(r))};
}

inline FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divrem(a, b).remainder; }
inline FpPoly operator/(const FpPoly& a, const FpPoly& b) { return divrem(a, b).quotient; }

inline FpPoly make_monic(const FpPoly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(a, fp::inv(a.lead(), a.prime()));
}

inline FpPoly derivative(const FpPoly& a) {
  if (a.degree() == FpPoly::npos || a.degree() == 0) return FpPoly(a.modulus());
  std::vector<std::uint32_t> c(a.degree());
  for (std::size_t k = 1; k <= a.degree(); ++k)
    c[k - 1] = fp::mul(a.coeff(k), static_cast<std::uint32_t>(k % a.prime()), a.prime());
  return FpPoly(a.modulus(), std::move(c));
}

// Monic gcd. Both inputs zero has no meaningful answer.
inline FpPoly gcd(FpPoly a, FpPoly b) {
  detail::require_same(a, b);
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

struct FpExtGcd {
  FpPoly g;
  FpPoly u;
  FpPoly v;
};

// g = u*a + v*b with g monic.
inline FpExtGcd extgcd(const FpPoly& a, const FpPoly& b) {
  detail::require_same(a, b);
  if (a.is_zero() && b.is_zero()) throw InvalidArgument("extended gcd of two zero polynomials");
  const auto p = a.modulus();
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = FpPoly::constant(p, 1), s1(p);
  FpPoly t0(p), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    FpPoly s2 = s0 - q * s1;
    FpPoly t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::uint32_t k = fp::inv(r0.lead(), p.value());
  return {scale(r0, k), scale(s0, k), scale(t0, k)};
}

// base^exp mod m for an arbitrary non-negative exponent.
inline FpPoly powmod(const FpPoly& base, const Integer& exp, const FpPoly& m) {
  detail::require_same(base, m);
  if (m.is_zero()) throw DivisionByZero();
  FpPoly result = FpPoly::constant(m.modulus(), 1) % m;
  FpPoly b = base % m;
  const std::size_t bits = exp == 0 ? 0 : mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(exp.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

inline std::uint32_t evaluate(const FpPoly& f, std::uint32_t x) {
  std::uint32_t acc = 0;
  for (std::size_t k = f.coeffs().size(); k-- > 0;)
    acc = fp::add(fp::mul(acc, x, f.prime()), f.coeffs()[k], f.prime());
  return acc;
}

// ---------------------------------------------------------------------------
// Factorization

struct FactorPower {
  FpPoly poly;
  unsigned exponent;

  friend bool operator==(const FactorPower&, const FactorPower&) = default;
};

struct FpFactorization {
  std::uint32_t unit = 1;
  std::vector<FactorPower> factors;
};

namespace detail {

// f(t) = g(t^p) -> g, valid because the Frobenius fixes F_p.
inline FpPoly pth_root(const FpPoly& f) {
  const auto p = f.prime();
  std::vector<std::uint32_t> c(f.degree() / p + 1, 0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f.coeff(k * p);
  return FpPoly(f.modulus(), std::move(c));
}

// Squarefree parts of a monic polynomial: pairs (g, m) with f = prod g^m
// and the g pairwise coprime and squarefree.
inline void squarefree_parts(const FpPoly& f, unsigned multiplier, std::vector<FactorPower>& out) {
  if (f.degree() == FpPoly::npos || f.degree() == 0) return;
  FpPoly df = derivative(f);
  FpPoly c = df.is_zero() ? f : gcd(f, df);
  FpPoly w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    FpPoly y = gcd(w, c);
    FpPoly fac = w / y;
    if (fac.degree() > 0) out.push_back({make_monic(fac), i * multiplier});
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) squarefree_parts(make_monic(pth_root(c)), multiplier * f.prime(), out);
}

struct DegreePart {
  FpPoly product;
  std::size_t degree;
};

// Splits a monic squarefree polynomial into products of irreducibles of a
// common degree.
inline std::vector<DegreePart> distinct_degree(FpPoly f) {
  std::vector<DegreePart> out;
  const auto p = f.modulus();
  const FpPoly x = FpPoly::x(p);
  FpPoly h = x % f;
  for (std::size_t d = 1; f.degree() != FpPoly::npos && f.degree() >= 2 * d; ++d) {
    h = powmod(h, p.as_integer(), f);
    FpPoly g = gcd(h - x, f);
    if (!g.is_one()) {
      out.push_back({g, d});
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() != FpPoly::npos && f.degree() > 0) out.push_back({f, f.degree()});
  return out;
}

inline FpPoly random_below(PrimeModulus p, std::size_t degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p.value() - 1);
  std::vector<std::uint32_t> c(degree);
  for (auto& v : c) v = dist(rng);
  return FpPoly(p, std::move(c));
}

// Cantor-Zassenhaus splitting of a product of distinct degree-d irreducibles.
// Characteristic 2 uses the absolute trace a + a^2 + ... + a^(2^(d-1)).
inline void equal_degree(const FpPoly& g, std::size_t d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const auto p = g.modulus();
  const auto one = FpPoly::constant(p, 1);
  Integer half_exp;
  if (p.value() != 2) half_exp = (ipow(p.as_integer(), d) - 1) / 2;
  for (;;) {
    FpPoly a = random_below(p, g.degree(), rng);
    if (a.degree() == FpPoly::npos || a.degree() == 0) continue;
    FpPoly b(p);
    if (p.value() == 2) {
      FpPoly s = a;
      b = a;
      for (std::size_t i = 1; i < d; ++i) {
        s = (s * s) % g;
        b = b + s;
      }
    } else {
      b = powmod(a, half_exp, g) - one;
    }
    if (b.is_zero()) continue;
    FpPoly u = gcd(g, b);
    if (u.degree() == 0 || u.degree() == g.degree()) continue;
    equal_degree(u, d, rng, out);
    equal_degree(g / u, d, rng, out);
    return;
  }
}

}  // namespace detail

// Complete factorization f = unit * prod P_i^{e_i} into monic irreducibles,
// sorted canonically. The seed drives the randomized splitting only; the
// output does not depend on it.
inline FpFactorization fp_factor(const FpPoly& f, std::uint64_t seed = 0) {
  if (f.is_zero()) throw InvalidArgument("cannot factor the zero polynomial");
  FpFactorization result;
  result.unit = f.lead();
  std::vector<FactorPower> parts;
  detail::squarefree_parts(make_monic(f), 1, parts);
  std::mt19937_64 rng(seed);
  for (const auto& part : parts) {
    for (const auto& dd : detail::distinct_degree(part.poly)) {
      std::vector<FpPoly> irreducibles;
      detail::equal_degree(dd.product, dd.degree, rng, irreducibles);
      for (auto& q : irreducibles) result.factors.push_back({std::move(q), part.exponent});
    }
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const FactorPower& a, const FactorPower& b) { return a.poly < b.poly; });
  return result;
}

inline FpPoly expand(const FpFactorization& fac, PrimeModulus p) {
  FpPoly out = FpPoly::constant(p, fac.unit);
  for (const auto& [poly, e] : fac.factors)
    for (unsigned k = 0; k < e; ++k) out = out * poly;
  return out;
}

namespace detail {
inline std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      out.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}
}  // namespace detail

// Rabin's test: x^(p^n) = x mod f, and gcd(x^(p^(n/q)) - x, f) = 1 for every
// prime q dividing n = deg f.
inline bool fp_is_irreducible(const FpPoly& f) {
  if (f.is_zero() || f.degree() == 0)
    throw InvalidArgument("irreducibility is undefined for constant polynomials");
  const std::size_t n = f.degree();
  if (n == 1) return true;
  const FpPoly g = make_monic(f);
  const auto p = g.modulus();
  const FpPoly x = FpPoly::x(p);
  std::vector<FpPoly> frob{x % g};  // frob[k] = x^(p^k) mod g
  for (std::size_t k = 1; k <= n; ++k) frob.push_back(powmod(frob.back(), p.as_integer(), g));
  if (frob[n] != x % g) return false;
  for (std::size_t q : detail::prime_divisors(n)) {
    if (!gcd(frob[n / q] - x, g).is_one()) return false;
  }
  return true;
}

// Number of monic irreducibles of degree f over F_p: (1/f) sum_{d|f} mu(d) p^(f/d).
inline Integer count_monic_irreducibles(PrimeModulus p, unsigned f) {
  if (f == 0) throw InvalidArgument("degree must be positive");
  Integer total = 0;
  for (unsigned d = 1; d <= f; ++d) {
    if (f % d != 0) continue;
    int mu = 1;
    unsigned m = d;
    for (unsigned q = 2; q * q <= m; ++q) {
      if (m % q == 0) {
        m /= q;
        if (m % q == 0) {
          mu = 0;
          break;
        }
        mu = -mu;
      }
    }
    if (mu != 0 && m > 1) mu = -mu;
    if (mu == 0) continue;
    total += mu * ipow(p.as_integer(), f / d);
  }
  return divexact(total, Integer(f));
}

inline constexpr std::uint64_t kEnumerationLimit = 10'000'000;

// Monic irreducibles of degree f in canonical (lexicographic) order. With a
// limit, stops after that many have been found.
inline std::vector<FpPoly> enumerate_monic_irreducibles(PrimeModulus p, unsigned f,
                                                        std::size_t limit = FpPoly::npos) {
  if (f == 0) throw InvalidArgument("degree must be positive");
  if (limit == FpPoly::npos && ipow(p.as_integer(), f) > Integer(std::to_string(kEnumerationLimit)))
    throw BoundExceeded("enumerating p^f = " + ipow(p.as_integer(), f).get_str() + " candidates");
  std::vector<FpPoly> out;
  std::vector<std::uint32_t> digits(f, 0);
  for (;;) {
    std::vector<std::uint32_t> c(digits);
    c.push_back(1);
    FpPoly cand(p, std::move(c));
    if (fp_is_irreducible(cand)) {
      out.push_back(std::move(cand));
      if (out.size() >= limit) break;
    }
    // Odometer with the constant term as most significant digit.
    std::size_t k = f;
    while (k > 0) {
      --k;
      if (++digits[k] < p.value()) break;
      digits[k] = 0;
      if (k == 0) return out;
    }
  }
  return out;
}

}  // namespace dedekind
