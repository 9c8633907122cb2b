#pragma once

// Dedekind's polynomial criteria for a monic F and a prime p:
//  - whether p divides the index of theta, decided from the cofactor M;
//  - the splitting of p read off the factorization of F mod p when it does not;
//  - whether p is a common index divisor for a given splitting shape, i.e.
//    there are too few distinct prime functions of the required degrees.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dedekind/error.hpp"
#include "dedekind/fppoly.hpp"
#include "dedekind/integer.hpp"
#include "dedekind/zpoly.hpp"

namespace dedekind {

struct ShapePart {
  unsigned f;  // residue degree
  unsigned e;  // ramification exponent

  friend auto operator<=>(const ShapePart&, const ShapePart&) = default;
};

class SplittingShape {
 public:
  SplittingShape(PrimeModulus p, std::size_t n, std::vector<ShapePart> parts)
      : p_(p), n_(n), parts_(std::move(parts)) {
    std::size_t total = 0;
    for (const auto& part : parts_) {
      if (part.f == 0 || part.e == 0) throw InvalidArgument("splitting shape parts need e, f >= 1");
      total += std::size_t{part.e} * part.f;
    }
    if (total != n_)
      throw InvalidArgument("sum of e*f over the parts is " + std::to_string(total) + ", expected " +
                            std::to_string(n_));
  }

  PrimeModulus p() const { return p_; }
  std::size_t degree() const { return n_; }
  const std::vector<ShapePart>& parts() const { return parts_; }

  std::vector<ShapePart> sorted_parts() const {
    auto v = parts_;
    std::sort(v.begin(), v.end());
    return v;
  }

  // Shapes compare as multisets.
  friend bool operator==(const SplittingShape& a, const SplittingShape& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.sorted_parts() == b.sorted_parts();
  }

 private:
  PrimeModulus p_;
  std::size_t n_;
  std::vector<ShapePart> parts_;
};

struct PrimeIdealSymbol {
  PrimeModulus p;
  ZPoly generator_poly;  // lift of a monic irreducible P; the ideal is (p, P(theta))
  unsigned e;
  unsigned f;
};

struct IndexWitness {
  FpPoly poly;
  unsigned exponent;
};

struct IndexVerdict {
  bool divisible = false;
  std::optional<IndexWitness> witness;
  FpFactorization factorization;  // F mod p
  ZPoly cofactor;                 // M for the canonical lifts
};

namespace detail {

inline void require_monic_input(const ZPoly& f, const char* what) {
  if (f.is_zero() || f.degree() == 0) throw InvalidArgument(std::string(what) + ": constant polynomial");
  if (!f.is_monic()) throw NotMonic(what);
}

inline void screen_rational_roots(const ZPoly& f) {
  if (f.degree() < 2) return;
  if (auto r = small_integer_root(f))
    throw ReducibleInput(to_string(f) + " has the rational root " + r->get_str());
}

// Linear factors t + c are lifted as t - r, so M matches hand computations.
inline std::vector<ZFactorPower> standard_lifts(const FpFactorization& fac) {
  std::vector<ZFactorPower> lifts;
  for (const auto& [poly, e] : fac.factors) lifts.push_back({root_form_lift(poly), e});
  return lifts;
}

}  // namespace detail

// Index divisibility test: p divides the index of a root of F iff some prime
// function P with P^2 | F mod p also divides M mod p.
inline IndexVerdict index_divisible(const ZPoly& F, PrimeModulus p, std::uint64_t seed = 0) {
  detail::require_monic_input(F, "index_divisible");
  detail::screen_rational_roots(F);
  IndexVerdict v;
  v.factorization = fp_factor(reduce_mod(F, p), seed);
  v.cofactor = cofactor_M(F, p, detail::standard_lifts(v.factorization));
  const FpPoly m = reduce_mod(v.cofactor, p);
  for (const auto& [poly, e] : v.factorization.factors) {
    if (e < 2) continue;
    if ((m % poly).is_zero()) {
      v.divisible = true;
      v.witness = IndexWitness{poly, e};
      break;
    }
  }
  return v;
}

struct PolynomialSplitting {
  SplittingShape shape;
  std::vector<PrimeIdealSymbol> symbols;
};

// Splitting of p read from F mod p. Refuses when p divides the index, where
// the polynomial data no longer describes the ideals.
inline PolynomialSplitting factor_prime_via_polynomial(const ZPoly& F, PrimeModulus p, std::uint64_t seed = 0) {
  IndexVerdict v = index_divisible(F, p, seed);
  if (v.divisible)
    throw IndexDivisible(std::to_string(p.value()) + " divides the index of every root of " + to_string(F) +
                         "; factor it in the maximal order instead");
  std::vector<ShapePart> parts;
  std::vector<PrimeIdealSymbol> symbols;
  for (const auto& [poly, e] : v.factorization.factors) {
    const auto f = static_cast<unsigned>(poly.degree());
    parts.push_back({f, e});
    symbols.push_back({p, lift(poly), e, f});
  }
  return {SplittingShape(p, F.degree(), std::move(parts)), std::move(symbols)};
}

struct DegreeSupply {
  unsigned degree;
  std::size_t required;
  Integer available;
};

struct CommonIndexReport {
  bool common_index_divisor = false;
  std::vector<DegreeSupply> supply;  // ascending degree
};

inline std::map<unsigned, std::size_t> degree_demand(const SplittingShape& shape) {
  std::map<unsigned, std::size_t> demand;
  for (const auto& part : shape.parts()) ++demand[part.f];
  return demand;
}

// p is a common index divisor exactly when some degree d is needed by more
// prime ideals than there are monic irreducibles of degree d mod p.
inline CommonIndexReport common_index_divisor(PrimeModulus p, const SplittingShape& shape) {
  CommonIndexReport report;
  for (const auto& [d, need] : degree_demand(shape)) {
    Integer have = count_monic_irreducibles(p, d);
    if (Integer(static_cast<unsigned long>(need)) > have) report.common_index_divisor = true;
    report.supply.push_back({d, need, have});
  }
  return report;
}

// Pairwise distinct prime functions matching the parts of the shape (in the
// order of the parts), taken first-fit in enumeration order.
inline std::optional<std::vector<FpPoly>> assign_prime_functions(PrimeModulus p, const SplittingShape& shape) {
  if (common_index_divisor(p, shape).common_index_divisor) return std::nullopt;
  std::map<unsigned, std::vector<FpPoly>> pool;
  std::map<unsigned, std::size_t> next;
  for (const auto& [d, need] : degree_demand(shape)) pool[d] = enumerate_monic_irreducibles(p, d, need);
  std::vector<FpPoly> out;
  for (const auto& part : shape.parts()) out.push_back(pool[part.f][next[part.f]++]);
  return out;
}

// ---------------------------------------------------------------------------
// Structured-text form of a verdict together with the shape of F mod p:
// {"p":2,"parts":[{"f":1,"e":2},{"f":1,"e":1}],"index_divisible":true,
//  "witness":{"poly":"t","e":2}}

inline nlohmann::ordered_json shape_parts_json(const std::vector<ShapePart>& parts) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& part : parts) arr.push_back({{"f", part.f}, {"e", part.e}});
  return arr;
}

inline nlohmann::ordered_json verdict_json(PrimeModulus p, const IndexVerdict& v, char var = 't') {
  nlohmann::ordered_json j;
  j["p"] = p.value();
  std::vector<ShapePart> parts;
  for (const auto& [poly, e] : v.factorization.factors) parts.push_back({static_cast<unsigned>(poly.degree()), e});
  j["parts"] = shape_parts_json(parts);
  j["index_divisible"] = v.divisible;
  if (v.witness)
    j["witness"] = {{"poly", to_string(v.witness->poly, var)}, {"e", v.witness->exponent}};
  else
    j["witness"] = nullptr;
  return j;
}

inline nlohmann::ordered_json shape_json(const SplittingShape& shape) {
  nlohmann::ordered_json j;
  j["p"] = shape.p().value();
  j["n"] = shape.degree();
  j["parts"] = shape_parts_json(shape.parts());
  return j;
}

inline SplittingShape shape_from_json(const nlohmann::ordered_json& j) {
  std::vector<ShapePart> parts;
  std::size_t n = 0;
  for (const auto& part : j.at("parts")) {
    parts.push_back({part.at("f").get<unsigned>(), part.at("e").get<unsigned>()});
    n += std::size_t{parts.back().f} * parts.back().e;
  }
  if (j.contains("n")) n = j.at("n").get<std::size_t>();
  return SplittingShape(PrimeModulus(j.at("p").get<std::uint64_t>()), n, std::move(parts));
}

}  // namespace dedekind
