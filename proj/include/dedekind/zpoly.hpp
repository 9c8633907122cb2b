#pragma once

// Univariate polynomials with arbitrary-precision integer coefficients:
// exact arithmetic, resultants and discriminants, reduction and lifting
// mod p, and the cofactor M defined by F = prod P_i^{e_i} - p*M.

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dedekind/error.hpp"
#include "dedekind/fppoly.hpp"
#include "dedekind/integer.hpp"
#include "dedekind/matrix.hpp"
#include "dedekind/poly_text.hpp"

namespace dedekind {

class ZPoly {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  ZPoly() = default;
  ZPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) c_.emplace_back(c);
    trim_trailing_zeros(c_);
  }
  explicit ZPoly(IntVector coeffs) : c_(std::move(coeffs)) { trim_trailing_zeros(c_); }

  static ZPoly constant(const Integer& c) { return ZPoly(IntVector{c}); }
  static ZPoly monomial(std::size_t degree, const Integer& c = 1) {
    IntVector v(degree + 1, 0);
    v[degree] = c;
    return ZPoly(std::move(v));
  }
  static ZPoly x() { return monomial(1); }

  const IntVector& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t degree() const { return c_.empty() ? npos : c_.size() - 1; }
  const Integer& lead() const {
    static const Integer zero = 0;
    return c_.empty() ? zero : c_.back();
  }
  Integer coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Integer(0); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend bool operator==(const ZPoly&, const ZPoly&) = default;

 private:
  IntVector c_;
};

inline std::string to_string(const ZPoly& f, char var = 't') { return format_coefficients(f.coeffs(), var); }

inline ZPoly parse_zpoly(std::string_view text, char var = 't') { return ZPoly(parse_coefficients(text, var)); }

inline ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  IntVector c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return ZPoly(std::move(c));
}

inline ZPoly operator-(const ZPoly& a, const ZPoly& b) {
  IntVector c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return ZPoly(std::move(c));
}

inline ZPoly operator-(const ZPoly& a) { return ZPoly() - a; }

inline ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntVector c(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return ZPoly(std::move(c));
}

inline ZPoly operator*(const Integer& s, const ZPoly& a) {
  IntVector c(a.coeffs());
  for (auto& v : c) v *= s;
  return ZPoly(std::move(c));
}

inline ZPoly pow(const ZPoly& a, unsigned e) {
  ZPoly r = ZPoly::constant(1);
  for (unsigned k = 0; k < e; ++k) r = r * a;
  return r;
}

struct ZDivRem {
  ZPoly quotient;
  ZPoly remainder;
};

// Division by a monic polynomial, exact over the integers.
inline ZDivRem divrem_exact(const ZPoly& a, const ZPoly& b) {
  if (!b.is_monic()) throw NotMonic("divisor");
  if (a.is_zero() || a.degree() < b.degree()) return {ZPoly(), a};
  IntVector r(a.coeffs());
  const std::size_t db = b.degree();
  IntVector q(a.degree() - db + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    q[k] = r[k + db];
    if (q[k] == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= q[k] * b.coeffs()[j];
  }
  r.resize(db);
  return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

inline ZPoly derivative(const ZPoly& a) {
  if (a.degree() == ZPoly::npos || a.degree() == 0) return {};
  IntVector c(a.degree());
  for (std::size_t k = 1; k <= a.degree(); ++k) c[k - 1] = a.coeffs()[k] * static_cast<unsigned long>(k);
  return ZPoly(std::move(c));
}

inline Integer evaluate(const ZPoly& f, const Integer& x) {
  Integer acc = 0;
  for (std::size_t k = f.coeffs().size(); k-- > 0;) acc = acc * x + f.coeffs()[k];
  return acc;
}

// Sylvester matrix of a (degree m) and b (degree n): n shifted rows of a's
// coefficients followed by m shifted rows of b's, highest degree first.
inline IntMatrix sylvester_matrix(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) throw InvalidArgument("resultant with the zero polynomial");
  const std::size_t m = a.degree(), n = b.degree(), size = m + n;
  IntMatrix s(size, IntVector(size, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = a.coeffs()[m - k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = b.coeffs()[n - k];
  return s;
}

inline Integer resultant(const ZPoly& a, const ZPoly& b) {
  if (a.degree() == 0 && b.degree() == 0) return 1;
  return det_bareiss(sylvester_matrix(a, b));
}

// (-1)^(n(n-1)/2) Res(f, f') for monic f of degree n >= 1.
inline Integer discriminant(const ZPoly& f) {
  if (f.is_zero() || f.degree() == 0) throw InvalidArgument("discriminant of a constant polynomial");
  if (!f.is_monic()) throw NotMonic("discriminant");
  const std::size_t n = f.degree();
  if (n == 1) return 1;
  Integer r = resultant(f, derivative(f));
  return (n * (n - 1) / 2) % 2 == 0 ? r : Integer(-r);
}

inline FpPoly reduce_mod(const ZPoly& f, PrimeModulus p) { return FpPoly::from_integers(p, f.coeffs()); }

// Canonical lift, coefficients in [0, p).
inline ZPoly lift(const FpPoly& g) { return ZPoly(g.to_integers()); }

// Display lift used by the CLI: a linear factor t + c is written t - r with
// r the root in [0, p); other factors keep the canonical lift.
inline ZPoly root_form_lift(const FpPoly& g) {
  if (g.degree() == 1 && g.is_monic() && g.coeff(0) != 0)
    return ZPoly(IntVector{Integer(static_cast<unsigned long>(g.coeff(0))) - g.prime(), 1});
  return lift(g);
}

struct ZFactorPower {
  ZPoly poly;
  unsigned exponent;
};

// M = (prod lift_i^{e_i} - f) / p. The division must be exact, i.e. the lifts
// must multiply to f modulo p.
inline ZPoly cofactor_M(const ZPoly& f, PrimeModulus p, std::span<const ZFactorPower> lifts) {
  if (!f.is_monic()) throw NotMonic("cofactor_M");
  ZPoly prod = ZPoly::constant(1);
  for (const auto& [poly, e] : lifts) {
    if (!poly.is_monic()) throw NotMonic("lifted factor " + to_string(poly));
    prod = prod * pow(poly, e);
  }
  ZPoly diff = prod - f;
  const Integer pp = p.as_integer();
  IntVector m(diff.coeffs().size());
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (!divides(pp, diff.coeffs()[k]))
      throw NotExact("product of lifts is not congruent to " + to_string(f) + " mod " + pp.get_str());
    m[k] = divexact(diff.coeffs()[k], pp);
  }
  return ZPoly(std::move(m));
}

inline ZPoly cofactor_M(const ZPoly& f, PrimeModulus p, std::initializer_list<ZFactorPower> lifts) {
  return cofactor_M(f, p, std::span<const ZFactorPower>(lifts.begin(), lifts.size()));
}

// Integer roots of a polynomial with nonzero constant term are divisors of
// that term. Divisor pairs are scanned up to `limit`; constants above
// limit^2 are not screened (nullopt).
inline std::optional<Integer> small_integer_root(const ZPoly& f, const Integer& limit = Integer(1000000)) {
  if (f.is_zero() || f.degree() == 0) return std::nullopt;
  if (f.coeffs()[0] == 0) return Integer(0);
  const Integer c = iabs(f.coeffs()[0]);
  if (c > limit * limit) return std::nullopt;
  for (Integer d = 1; d * d <= c; ++d) {
    if (!divides(d, c)) continue;
    for (const Integer& r : {d, Integer(c / d)}) {
      if (evaluate(f, r) == 0) return r;
      if (evaluate(f, -r) == 0) return Integer(-r);
    }
  }
  return std::nullopt;
}

}  // namespace dedekind
