#pragma once

// Command layer behind the dedekind tool. Each command parses its textual
// inputs, runs the library, and returns a RunReport that renders either as
// plain text or as JSON with a fixed key order.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dedekind/criteria.hpp"
#include "dedekind/error.hpp"
#include "dedekind/fppoly.hpp"
#include "dedekind/ideal.hpp"
#include "dedekind/indexform.hpp"
#include "dedekind/integer.hpp"
#include "dedekind/order.hpp"
#include "dedekind/zpoly.hpp"

namespace dedekind {

using Json = nlohmann::ordered_json;

enum ExitStatus : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

struct CommandOptions {
  std::uint64_t seed = 0;
  std::uint64_t trial_bound = kDefaultTrialBound;
  std::uint64_t ideal_bound = kDefaultIdealBound;
  bool inject_fault = false;  // paper-examples only
};

struct RunReport {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<std::string> lines;
  int exit_status = kExitOk;

  Json to_json() const {
    Json j;
    j["command"] = command;
    j["inputs"] = inputs;
    j["results"] = results;
    j["exit_status"] = exit_status;
    return j;
  }

  std::string text() const {
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
  }
};

namespace detail {

struct ParsedPoly {
  ZPoly poly;
  char var;
};

inline ParsedPoly parse_input_poly(const std::string& text) {
  const char var = detect_variable(text, 't');
  return {parse_zpoly(text, var), var};
}

inline PrimeModulus parse_prime(const std::string& text) {
  Integer p;
  if (text.empty() || p.set_str(text, 10) != 0) throw ParseError("'" + text + "' is not an integer");
  if (p < 2) throw InvalidArgument("modulus " + text + " is not prime");
  return PrimeModulus::from_integer(p);
}

inline std::string factored(const Integer& n, std::uint64_t bound) {
  if (n == 0) return "0";
  std::string out = n < 0 ? "-" : "";
  if (iabs(n) == 1) return out + "1";
  bool first = true;
  for (const auto& [q, e] : trial_factor(n, bound)) {
    if (!first) out += " * ";
    first = false;
    out += q.get_str();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

// "n = factorization", or just "n" when n is prime or a unit.
inline std::string with_factors(const Integer& n, std::uint64_t bound) {
  const std::string fs = factored(n, bound);
  return fs == n.get_str() ? fs : n.get_str() + " = " + fs;
}

inline std::string shape_text(const std::vector<ShapePart>& parts) {
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += " ";
    out += "(f=" + std::to_string(part.f) + ",e=" + std::to_string(part.e) + ")";
  }
  return out;
}

// Basis element of an overorder written over the power basis.
inline std::string scaled_element(IntVector row, Integer den, const std::vector<std::string>& labels) {
  Integer g = den;
  for (const auto& v : row) g = igcd(g, v);
  if (g > 1) {
    for (auto& v : row) v = divexact(v, g);
    den = divexact(den, g);
  }
  const std::string num = format_element(row, labels);
  if (den == 1) return num;
  std::size_t nonzero = 0;
  for (const auto& v : row) nonzero += v != 0;
  return (nonzero > 1 ? "(" + num + ")" : num) + "/" + den.get_str();
}

inline Json integer_list(const IntVector& v) {
  auto a = Json::array();
  for (const auto& x : v) a.push_back(integer_json(x));
  return a;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline RunReport cmd_factor_mod_p(const std::string& poly_text, const std::string& p_text,
                                  const CommandOptions& opt = {}) {
  RunReport r;
  r.command = "factor-mod-p";
  r.inputs["poly"] = poly_text;
  r.inputs["p"] = p_text;
  const auto [F, var] = detail::parse_input_poly(poly_text);
  const PrimeModulus p = detail::parse_prime(p_text);
  const FpPoly f = reduce_mod(F, p);
  if (f.is_zero()) throw InvalidArgument(to_string(F, var) + " vanishes mod " + p_text);
  const FpFactorization fac = fp_factor(f, opt.seed);

  r.lines.push_back(to_string(F, var) + " mod " + std::to_string(p.value()));
  auto factors = Json::array();
  std::vector<ZFactorPower> lifts;
  std::string product;
  for (const auto& [g, e] : fac.factors) {
    const ZPoly l = root_form_lift(g);
    lifts.push_back({l, e});
    factors.push_back({{"poly", to_string(g, var)}, {"lift", to_string(l, var)}, {"e", e}});
    std::string item = "(" + to_string(l, var) + ")";
    if (e > 1) item += "^" + std::to_string(e);
    product += item;
    r.lines.push_back("  factor " + to_string(g, var) + "  lift " + to_string(l, var) + "  exponent " +
                      std::to_string(e));
  }
  r.results["unit"] = fac.unit;
  r.results["factors"] = std::move(factors);
  if (F.is_monic()) {
    const ZPoly M = cofactor_M(F, p, lifts);
    r.results["M"] = to_string(M, var);
    r.lines.push_back("  " + to_string(F, var) + " = " + product + " - " + std::to_string(p.value()) + "*M");
    r.lines.push_back("  M = " + to_string(M, var));
  } else {
    r.results["M"] = nullptr;
    if (fac.unit != 1) r.lines.push_back("  leading unit " + std::to_string(fac.unit));
  }
  return r;
}

inline RunReport cmd_discriminant(const std::string& poly_text, const CommandOptions& opt = {}) {
  RunReport r;
  r.command = "discriminant";
  r.inputs["poly"] = poly_text;
  const auto [F, var] = detail::parse_input_poly(poly_text);
  const Integer d = discriminant(F);
  r.results["discriminant"] = detail::integer_json(d);
  r.lines.push_back("disc(" + to_string(F, var) + ") = " + d.get_str());
  if (d != 0) {
    try {
      const std::string fs = detail::factored(d, opt.trial_bound);
      r.results["factored"] = fs;
      r.lines.push_back("  = " + fs);
    } catch (const BoundExceeded&) {
      r.results["factored"] = nullptr;
    }
  }
  return r;
}

inline RunReport cmd_dedekind_criterion(const std::string& poly_text, const std::string& p_text,
                                        const CommandOptions& opt = {}) {
  RunReport r;
  r.command = "dedekind-criterion";
  r.inputs["poly"] = poly_text;
  r.inputs["p"] = p_text;
  const auto [F, var] = detail::parse_input_poly(poly_text);
  const PrimeModulus p = detail::parse_prime(p_text);
  const IndexVerdict v = index_divisible(F, p, opt.seed);
  r.results = verdict_json(p, v, var);
  std::vector<ZFactorPower> lifts;
  for (const auto& [g, e] : v.factorization.factors) lifts.push_back({root_form_lift(g), e});
  const ZPoly M = cofactor_M(F, p, lifts);
  r.results["M"] = to_string(M, var);

  r.lines.push_back(to_string(F, var) + " at p = " + std::to_string(p.value()));
  r.lines.push_back("  M = " + to_string(M, var));
  if (v.divisible)
    r.lines.push_back("  p divides the index: " + to_string(v.witness->poly, var) + " divides M mod p and its " +
                      (v.witness->exponent == 2 ? std::string("square") : "power " + std::to_string(v.witness->exponent)) +
                      " divides F mod p");
  else
    r.lines.push_back("  p does not divide the index");
  return r;
}

inline RunReport cmd_split_prime(const std::string& poly_text, const std::string& p_text,
                                 const CommandOptions& opt = {}) {
  RunReport r;
  r.command = "split-prime";
  r.inputs["poly"] = poly_text;
  r.inputs["p"] = p_text;
  const auto [F, var] = detail::parse_input_poly(poly_text);
  const PrimeModulus p = detail::parse_prime(p_text);
  const IndexVerdict v = index_divisible(F, p, opt.seed);
  r.lines.push_back(to_string(F, var) + " at p = " + std::to_string(p.value()));
  r.results["index_divisible"] = v.divisible;

  std::vector<ShapePart> parts;
  auto primes = Json::array();
  if (!v.divisible) {
    const PolynomialSplitting s = factor_prime_via_polynomial(F, p, opt.seed);
    r.results["method"] = "polynomial";
    for (const auto& sym : s.symbols) {
      const ZPoly g = root_form_lift(reduce_mod(sym.generator_poly, p));
      parts.push_back({sym.f, sym.e});
      primes.push_back({{"generators", {std::to_string(p.value()), to_string(g, var)}}, {"f", sym.f}, {"e", sym.e}});
      r.lines.push_back("  prime (" + std::to_string(p.value()) + ", " + to_string(g, var) + ")  f=" +
                        std::to_string(sym.f) + " e=" + std::to_string(sym.e));
    }
  } else {
    const MaximalOrder mo = maximal_order(F, opt.trial_bound);
    const auto fac = factor_p_in_order(mo.order, p, opt.ideal_bound);
    r.results["method"] = "maximal-order";
    r.lines.push_back("  p divides the index; factoring in the maximal order");
    const auto& labels = mo.order->labels();
    const auto power_labels = power_basis_labels(F.degree(), "a");
    std::string basis_text;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (i) basis_text += ", ";
      basis_text += labels[i];
      if (labels[i] != power_labels[i]) basis_text += " = " + detail::scaled_element(mo.basis[i], mo.denominator, power_labels);
    }
    r.results["order_basis"] = basis_text;
    r.lines.push_back("  basis " + basis_text);
    for (const auto& pf : fac) {
      parts.push_back({pf.f, pf.e});
      Json ij = ideal_json(pf.ideal);
      primes.push_back({{"ideal", ij["text"]}, {"basis", ij["basis"]}, {"f", pf.f}, {"e", pf.e}});
      r.lines.push_back("  prime " + to_string(pf.ideal) + "  f=" + std::to_string(pf.f) + " e=" +
                        std::to_string(pf.e));
    }
  }
  const SplittingShape shape(p, F.degree(), parts);
  const CommonIndexReport cid = common_index_divisor(p, shape);
  r.results["parts"] = shape_parts_json(parts);
  r.results["primes"] = std::move(primes);
  r.results["common_index_divisor"] = cid.common_index_divisor;
  r.lines.push_back("  shape " + detail::shape_text(parts));
  r.lines.push_back(std::string("  common index divisor: ") + (cid.common_index_divisor ? "yes" : "no"));
  return r;
}

// Shape given as "f:e,f:e,..." (":e" may be omitted for e = 1).
inline std::vector<ShapePart> parse_shape_parts(const std::string& text) {
  std::vector<ShapePart> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const std::size_t colon = item.find(':');
    try {
      std::size_t used = 0;
      const std::string fs = item.substr(0, colon);
      const unsigned long f = std::stoul(fs, &used);
      if (used != fs.size()) throw ParseError("");
      unsigned long e = 1;
      if (colon != std::string::npos) {
        const std::string es = item.substr(colon + 1);
        e = std::stoul(es, &used);
        if (used != es.size()) throw ParseError("");
      }
      parts.push_back({static_cast<unsigned>(f), static_cast<unsigned>(e)});
    } catch (const std::exception&) {
      throw ParseError("cannot parse shape part '" + item + "'; expected f or f:e");
    }
    start = end + 1;
  }
  return parts;
}

inline RunReport cmd_common_index_divisor(const std::string& p_text, const std::string& shape_text,
                                          const CommandOptions& = {}) {
  RunReport r;
  r.command = "common-index-divisor";
  r.inputs["p"] = p_text;
  r.inputs["shape"] = shape_text;
  const PrimeModulus p = detail::parse_prime(p_text);
  const auto parts = parse_shape_parts(shape_text);
  std::size_t n = 0;
  for (const auto& part : parts) n += std::size_t{part.f} * part.e;
  const SplittingShape shape(p, n, parts);
  const CommonIndexReport rep = common_index_divisor(p, shape);
  r.results["common_index_divisor"] = rep.common_index_divisor;
  auto supply = Json::array();
  r.lines.push_back("p = " + std::to_string(p.value()) + ", shape " + detail::shape_text(parts));
  for (const auto& s : rep.supply) {
    supply.push_back({{"degree", s.degree}, {"required", s.required}, {"available", detail::integer_json(s.available)}});
    r.lines.push_back("  degree " + std::to_string(s.degree) + ": need " + std::to_string(s.required) +
                      ", available " + s.available.get_str());
  }
  r.results["supply"] = std::move(supply);
  if (auto assigned = assign_prime_functions(p, shape)) {
    auto a = Json::array();
    std::string listed;
    for (const auto& g : *assigned) {
      a.push_back(to_string(g));
      listed += (listed.empty() ? "" : ", ") + to_string(g);
    }
    r.results["prime_functions"] = std::move(a);
    r.lines.push_back("  prime functions: " + listed);
  } else {
    r.results["prime_functions"] = nullptr;
  }
  r.lines.push_back(std::string("  common index divisor: ") + (rep.common_index_divisor ? "yes" : "no"));
  return r;
}

inline RunReport cmd_maximal_order(const std::string& poly_text, const CommandOptions& opt = {}) {
  RunReport r;
  r.command = "maximal-order";
  r.inputs["poly"] = poly_text;
  const auto [F, var] = detail::parse_input_poly(poly_text);
  detail::require_monic_input(F, "maximal-order");
  detail::screen_rational_roots(F);
  const MaximalOrder mo = maximal_order(F, opt.trial_bound);
  const Integer dF = discriminant(F);
  const std::size_t n = F.degree();
  const Integer k = divexact(ipow(mo.denominator, n), diagonal_product(mo.basis));
  const auto power_labels = power_basis_labels(n, "a");

  r.results["poly_discriminant"] = detail::integer_json(dF);
  r.results["discriminant"] = detail::integer_json(mo.discriminant);
  r.results["index"] = detail::integer_json(k);
  auto basis = Json::array();
  r.lines.push_back(to_string(F, var) + ", a a root");
  r.lines.push_back("  disc(F) = " + detail::with_factors(dF, opt.trial_bound));
  r.lines.push_back("  D = " + detail::with_factors(mo.discriminant, opt.trial_bound));
  r.lines.push_back("  index of a = " + k.get_str());
  const auto& labels = mo.order->labels();
  for (std::size_t i = 0; i < n; ++i) {
    const std::string expr = detail::scaled_element(mo.basis[i], mo.denominator, power_labels);
    basis.push_back({{"label", labels[i]}, {"numerator", detail::integer_list(mo.basis[i])}, {"expression", expr}});
    r.lines.push_back("  " + labels[i] + " = " + expr);
  }
  r.results["denominator"] = detail::integer_json(mo.denominator);
  r.results["basis"] = std::move(basis);
  r.results["order"] = order_json(*mo.order);
  return r;
}

// Cubic family parameters "a,b,a1,b1".
inline CubicFamily parse_family(const std::string& text) {
  IntVector v;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    Integer x;
    if (x.set_str(text.substr(start, end - start), 10) != 0)
      throw ParseError("cannot parse family parameter '" + text.substr(start, end - start) + "'");
    v.push_back(x);
    start = end + 1;
  }
  if (v.size() != 4) throw ParseError("family needs four parameters a,b,a1,b1");
  return cubic_family(v[0], v[1], v[2], v[3]);
}

inline constexpr std::uint32_t kSmallPrimes[] = {2, 3, 5, 7, 11, 13};

// Index form of the maximal order of F, or of a cubic family order when
// `family` is set.
inline RunReport cmd_index_form(const std::string& poly_text, const std::string& family_text,
                                const CommandOptions& opt = {}) {
  RunReport r;
  r.command = "index-form";
  OrderPtr o;
  if (!family_text.empty()) {
    r.inputs["family"] = family_text;
    o = parse_family(family_text).order;
  } else {
    r.inputs["poly"] = poly_text;
    const auto [F, var] = detail::parse_input_poly(poly_text);
    detail::require_monic_input(F, "index-form");
    o = maximal_order(F, opt.trial_bound).order;
  }
  std::string labels;
  for (const auto& l : o->labels()) labels += (labels.empty() ? "" : ", ") + l;
  const MultiPoly form = index_form(*o);
  r.results["labels"] = o->labels();
  r.results["index_form"] = to_string(form);
  r.lines.push_back("order [" + labels + "]");
  r.lines.push_back("  index form " + to_string(form));
  auto divisors = Json::array();
  for (std::uint32_t q : kSmallPrimes) {
    if (ipow(Integer(q), form.variables().size()) > from_u64(kValueSearchLimit)) continue;
    if (common_value_divisor(form, PrimeModulus(q))) divisors.push_back(q);
  }
  std::string listed;
  for (const auto& d : divisors) listed += (listed.empty() ? "" : ", ") + std::to_string(d.get<unsigned>());
  r.results["common_value_divisors"] = std::move(divisors);
  r.lines.push_back("  every value divisible by: " + (listed.empty() ? std::string("none of 2..13") : listed));
  return r;
}

}  // namespace dedekind
