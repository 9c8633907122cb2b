// Randomized property checks shared by the unit suite and the acceptance
// runner. Each check runs at least kCases cases from a fixed seed and
// reports the first counterexample.
#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dedekind/dedekind.hpp"
#include "oracles.hpp"

namespace props {

using namespace dedekind;

inline constexpr int kCases = 200;

struct Outcome {
  explicit Outcome(std::string n) : name(std::move(n)) {}

  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases >= kCases; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

namespace detail {

inline PrimeModulus pick(std::mt19937_64& rng, std::initializer_list<std::uint32_t> ps) {
  const std::vector<std::uint32_t> v(ps);
  return PrimeModulus(v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]);
}

inline SplittingShape shape_in_order(const OrderPtr& o, PrimeModulus p, std::uint64_t bound = kDefaultIdealBound) {
  std::vector<ShapePart> parts;
  for (const auto& pf : factor_p_in_order(o, p, bound)) parts.push_back({pf.f, pf.e});
  return SplittingShape(p, o->rank(), parts);
}

inline OrderElement random_element(std::mt19937_64& rng, const OrderPtr& o, long bound) {
  IntVector c(o->rank());
  for (auto& v : c) v = oracle::rand_int(rng, -bound, bound);
  return OrderElement(o, c);
}

// An integer plus two random elements.
inline LatticeIdeal random_ideal(std::mt19937_64& rng, const OrderPtr& o) {
  const long m = oracle::rand_int(rng, 1, 12).get_si();
  return ideal_from_generators(o, {OrderElement::integer(o, m), random_element(rng, o, 6), random_element(rng, o, 6)});
}

inline std::string mod_text(const ZPoly& f, PrimeModulus p) { return to_string(f) + " mod " + std::to_string(p.value()); }

}  // namespace detail

inline Outcome factorization_round_trip() {
  Outcome out{"factorization round trip"};
  std::mt19937_64 rng(101);
  for (; out.cases < kCases; ++out.cases) {
    const PrimeModulus p = detail::pick(rng, {2, 3, 5, 7, 11, 13, 101, 65537});
    const FpPoly f = oracle::random_fppoly(rng, p, 12);
    const FpFactorization fac = fp_factor(f, rng());
    if (!(expand(fac, p) == f)) out.fail("product differs for " + to_string(f));
    for (std::size_t k = 0; k < fac.factors.size(); ++k) {
      const FpPoly& g = fac.factors[k].poly;
      bool irreducible;
      if (p.value() <= 13 && g.degree() <= 6)
        irreducible = oracle::irreducible(std::vector<std::uint32_t>(g.coeffs().begin(), g.coeffs().end()), p.value());
      else
        irreducible = fp_is_irreducible(g);
      if (!g.is_monic() || !irreducible) out.fail("bad factor " + to_string(g) + " of " + to_string(f));
      if (k > 0 && !(fac.factors[k - 1].poly < g)) out.fail("unsorted factors of " + to_string(f));
    }
  }
  return out;
}

inline Outcome factorization_seed_independent() {
  Outcome out{"factorization independent of seed"};
  std::mt19937_64 rng(102);
  for (; out.cases < kCases; ++out.cases) {
    const PrimeModulus p = detail::pick(rng, {2, 3, 5, 7, 1009});
    const FpPoly f = oracle::random_fppoly(rng, p, 14);
    if (!(fp_factor(f, 1).factors == fp_factor(f, rng()).factors)) out.fail(to_string(f));
  }
  return out;
}

// p | disc F iff F mod p has a repeated factor.
inline Outcome discriminant_detects_repeated_factors() {
  Outcome out{"p | disc F iff repeated factor mod p"};
  std::mt19937_64 rng(103);
  for (; out.cases < kCases; ++out.cases) {
    const PrimeModulus p = detail::pick(rng, {2, 3, 5, 7});
    const ZPoly F = oracle::random_monic(rng, 2 + out.cases % 4, 10);
    bool repeated = false;
    for (const auto& fp : fp_factor(reduce_mod(F, p)).factors) repeated = repeated || fp.exponent >= 2;
    if (divides(p.as_integer(), discriminant(F)) != repeated) out.fail(detail::mod_text(F, p));
  }
  return out;
}

// sum over d | f of d * N(p, d) equals p^f: every p <= 7 with f <= 6, where
// counts are also checked against brute-force enumeration when p^f is small,
// then random primes below 1000 with f <= 12.
inline Outcome necklace_identity() {
  Outcome out{"necklace identity"};
  const auto check = [&](std::uint32_t q, unsigned f) {
    ++out.cases;
    const PrimeModulus p(q);
    Integer sum = 0;
    for (unsigned d = 1; d <= f; ++d)
      if (f % d == 0) sum += Integer(d) * count_monic_irreducibles(p, d);
    if (sum != ipow(Integer(q), f)) out.fail("p=" + std::to_string(q) + " f=" + std::to_string(f));
  };
  for (std::uint32_t q : {2u, 3u, 5u, 7u})
    for (unsigned f = 1; f <= 6; ++f) {
      check(q, f);
      if (ipow(Integer(q), f) <= 20000 &&
          Integer(static_cast<unsigned long>(oracle::count_irreducible(q, f))) != count_monic_irreducibles(PrimeModulus(q), f))
        out.fail("count differs from enumeration at p=" + std::to_string(q) + " f=" + std::to_string(f));
    }
  std::mt19937_64 rng(110);
  while (out.cases < kCases) {
    const auto q = static_cast<std::uint32_t>(oracle::rand_int(rng, 2, 999).get_ui());
    if (is_prime_u64(q)) check(q, static_cast<unsigned>(oracle::rand_int(rng, 1, 12).get_ui()));
  }
  return out;
}

// Other lifts P + p*h give a cofactor N with M - N divisible by every
// repeated factor mod p, so the verdict does not depend on the lift.
inline Outcome lift_independence() {
  Outcome out{"criterion independent of lifts"};
  std::mt19937_64 rng(104);
  for (; out.cases < kCases; ++out.cases) {
    const PrimeModulus p = detail::pick(rng, {2, 3, 5});
    const ZPoly F = oracle::random_monic(rng, 3 + out.cases % 3, 12);
    const FpFactorization fac = fp_factor(reduce_mod(F, p));
    std::vector<ZFactorPower> canon, other;
    for (const auto& fp : fac.factors) {
      canon.push_back({lift(fp.poly), fp.exponent});
      IntVector h(fp.poly.degree(), 0);
      for (auto& v : h) v = oracle::rand_int(rng, -3, 3);
      other.push_back({lift(fp.poly) + p.as_integer() * ZPoly(h), fp.exponent});
    }
    const ZPoly M = cofactor_M(F, p, canon), N = cofactor_M(F, p, other);
    bool verdict_m = false, verdict_n = false;
    for (const auto& fp : fac.factors) {
      if (fp.exponent < 2) continue;
      if (!(reduce_mod(M - N, p) % fp.poly).is_zero()) out.fail("M - N not divisible: " + detail::mod_text(F, p));
      verdict_m = verdict_m || (reduce_mod(M, p) % fp.poly).is_zero();
      verdict_n = verdict_n || (reduce_mod(N, p) % fp.poly).is_zero();
    }
    if (verdict_m != verdict_n) out.fail("verdict changed: " + detail::mod_text(F, p));
  }
  return out;
}

// On random cubics and quartics and p in {2, 3, 5}: the criterion fires iff
// p divides the index found by enlarging to the maximal order; otherwise the
// polynomial shape equals the shape found in the maximal order. Also
// disc F = D * index^2.
inline Outcome criterion_matches_maximal_order() {
  Outcome out{"criterion agrees with maximal order"};
  std::mt19937_64 rng(105);
  for (; out.cases < kCases; ++out.cases) {
    const std::size_t n = out.cases % 2 ? 4 : 3;
    const ZPoly F = oracle::random_irreducible(rng, n, n == 3 ? 12 : 6);
    const MaximalOrder mo = maximal_order(F);
    const Integer k = oracle::index_from_discriminants(discriminant(F), mo.discriminant);
    if (discriminant(F) != mo.discriminant * k * k) out.fail("disc identity: " + to_string(F));
    for (std::uint32_t q : {2u, 3u, 5u}) {
      const PrimeModulus p(q);
      const bool fires = index_divisible(F, p).divisible;
      if (fires != divides(Integer(q), k)) out.fail("verdict: " + detail::mod_text(F, p));
      if (!fires && !(factor_prime_via_polynomial(F, p).shape == detail::shape_in_order(mo.order, p)))
        out.fail("shape: " + detail::mod_text(F, p));
    }
  }
  return out;
}

// Sum of e*f is n, prime norms are p^f, and the product of P^e is pO.
inline Outcome sum_ef_equals_degree() {
  Outcome out{"sum of e*f equals n"};
  std::mt19937_64 rng(106);
  for (; out.cases < kCases; ++out.cases) {
    const std::size_t n = 2 + out.cases % 3;
    const ZPoly F = oracle::random_irreducible(rng, n, 8);
    const OrderPtr o = maximal_order(F).order;
    const PrimeModulus p = detail::pick(rng, {2, 3, 5, 7});
    std::size_t sum = 0;
    LatticeIdeal product = LatticeIdeal::unit(o);
    for (const auto& pf : factor_p_in_order(o, p)) {
      sum += std::size_t{pf.e} * pf.f;
      if (ideal_norm(pf.ideal) != ipow(p.as_integer(), pf.f)) out.fail("norm: " + detail::mod_text(F, p));
      product = product * power(pf.ideal, pf.e);
    }
    if (sum != n) out.fail("sum: " + detail::mod_text(F, p));
    if (!(product == LatticeIdeal(o, identity_matrix(n, p.as_integer())))) out.fail("product: " + detail::mod_text(F, p));
  }
  return out;
}

inline Outcome norm_multiplicative() {
  Outcome out{"norm multiplicative"};
  std::mt19937_64 rng(107);
  const std::vector<OrderPtr> orders{cubic_family(2, 2, 1, -1).order, order_from_polynomial(parse_zpoly("t^2-2")),
                                     maximal_order(parse_zpoly("t^4-t^3+t^2-2t+4")).order};
  for (; out.cases < kCases; ++out.cases) {
    const OrderPtr& o = orders[out.cases % orders.size()];
    const LatticeIdeal a = detail::random_ideal(rng, o), b = detail::random_ideal(rng, o);
    if (ideal_norm(a * b) != ideal_norm(a) * ideal_norm(b)) out.fail(to_string(a) + " * " + to_string(b));
    const OrderElement x = detail::random_element(rng, o, 9);
    if (!(x == OrderElement::zero(o)) && ideal_norm(principal_ideal(x)) != iabs(norm(x)))
      out.fail("principal norm of " + to_string(x));
  }
  return out;
}

// Extensional check: some e >= 2 above p iff p | D, on a fixed corpus of
// fields and then on random quadratic and cubic fields, testing the small
// primes together with every prime below 20 that divides D.
inline Outcome ramification_iff_divides_discriminant() {
  Outcome out{"ramified iff p | D"};
  const auto check = [&](const ZPoly& F, const std::vector<std::uint64_t>& primes, std::uint64_t bound) {
    const MaximalOrder mo = maximal_order(F);
    for (std::uint64_t q : primes) {
      ++out.cases;
      bool ramified = false;
      const SplittingShape shape = detail::shape_in_order(mo.order, PrimeModulus(q), bound);
      for (const auto& part : shape.parts())
        ramified = ramified || part.e >= 2;
      if (ramified != divides(Integer(static_cast<unsigned long>(q)), mo.discriminant))
        out.fail(to_string(F) + " p=" + std::to_string(q));
    }
  };
  check(parse_zpoly("t^3-t^2-2t-8"), {2, 3, 5, 7, 11, 13, 503}, 200'000'000);
  check(parse_zpoly("t^4-t^3+t^2-2t+4"), {2, 3, 5, 7, 13, 17}, 200'000);
  check(parse_zpoly("t^2-2"), {2, 3, 5, 7, 11, 13}, kDefaultIdealBound);
  check(parse_zpoly("t^2+1"), {2, 3, 5, 7, 11, 13}, kDefaultIdealBound);
  check(parse_zpoly("t^3-2"), {2, 3, 5, 7, 11, 13}, kDefaultIdealBound);
  check(parse_zpoly("t^4-t^3+t^2-t+1"), {2, 3, 5, 7, 11}, 100'000);
  check(parse_zpoly("t^5-t-1"), {2, 3, 5, 7}, 100'000);
  std::mt19937_64 rng(109);
  while (out.cases < kCases) {
    const ZPoly F = oracle::random_irreducible(rng, 2 + out.cases % 2, 15);
    std::vector<std::uint64_t> primes{2, 3, 5, 7};
    const Integer D = maximal_order(F).discriminant;
    for (std::uint64_t q : {11u, 13u, 17u, 19u})
      if (divides(Integer(static_cast<unsigned long>(q)), D)) primes.push_back(q);
    check(F, primes, kDefaultIdealBound);
  }
  return out;
}

inline Outcome family_discriminant_closed_form() {
  Outcome out{"family discriminant closed form"};
  std::mt19937_64 rng(108);
  while (out.cases < kCases) {
    const Integer a = oracle::rand_int(rng, -20, 20), b = oracle::rand_int(rng, -20, 20);
    const Integer a1 = oracle::rand_int(rng, -20, 20), b1 = oracle::rand_int(rng, -20, 20);
    std::optional<CubicFamily> fam;
    try {
      fam = cubic_family(a, b, a1, b1);
    } catch (const Error&) {
      continue;
    }
    ++out.cases;
    const Integer want =
        a1 * a1 * b1 * b1 + 18 * a * b * a1 * b1 - 4 * a * a1 * a1 * a1 - 4 * b * b1 * b1 * b1 - 27 * a * a * b * b;
    if (fam->closed_form_discriminant != want || order_discriminant(fam->order) != want) {
      std::ostringstream s;
      s << a << "," << b << "," << a1 << "," << b1;
      out.fail(s.str());
    }
  }
  return out;
}

}  // namespace props
