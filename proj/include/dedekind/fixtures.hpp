#pragma once

// Replay of the worked examples: a fixed list of named checks, each
// recomputed from scratch and compared with the published value.

#include <functional>
#include <string>
#include <vector>

#include "dedekind/commands.hpp"

namespace dedekind {

struct FixtureCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

namespace detail {

inline std::string ideal_list(const std::vector<LatticeIdeal>& ideals) {
  std::string out;
  for (const auto& i : ideals) out += (out.empty() ? "" : " ") + to_string(i);
  return out;
}

class CheckRunner {
 public:
  void run(const std::string& name, const std::string& expected, const std::function<std::string()>& compute) {
    FixtureCheck c{name, expected, "", false};
    try {
      c.actual = compute();
      c.passed = c.actual == expected;
    } catch (const std::exception& e) {
      c.actual = std::string("error: ") + e.what();
    }
    checks.push_back(std::move(c));
  }

  std::vector<FixtureCheck> checks;
};

}  // namespace detail

// With inject_fault the cubic order is built with b' = +1 instead of -1, so
// every check that depends on it must fail.
inline std::vector<FixtureCheck> worked_example_checks(bool inject_fault = false) {
  detail::CheckRunner run;
  const ZPoly F = parse_zpoly("t^3 - t^2 - 2*t - 8");
  const CubicFamily fam = inject_fault ? cubic_family(2, 2, 1, 1) : cubic_family(2, 2, 1, -1);
  const OrderPtr O = fam.order;
  auto E = [&](long z, long x, long y) { return OrderElement(O, {Integer(z), Integer(x), Integer(y)}); };
  auto I = [&](std::vector<OrderElement> g) { return ideal_from_generators(O, g); };
  const PrimeModulus two(2), seven(7);

  run.run("cubic.poly_discriminant", "-2012", [&] { return discriminant(F).get_str(); });
  run.run("cubic.delta_char_poly", "t^3 - 7*t^2 - 2012", [&] {
    const OrderPtr Za = order_from_polynomial(F);
    return to_string(char_poly(OrderElement(Za, {Integer(-2), Integer(-2), Integer(3)})));
  });
  run.run("cubic.table", "a*a=2+a+2b b*b=-2+2a-b a*b=4", [&] {
    const auto a = E(0, 1, 0), b = E(0, 0, 1);
    return "a*a=" + to_string(a * a) + " b*b=" + to_string(b * b) + " a*b=" + to_string(a * b);
  });
  run.run("cubic.alpha_char_poly", "t^3 - t^2 - 2*t - 8", [&] { return to_string(char_poly(E(0, 1, 0))); });
  run.run("cubic.beta_char_poly", "t^3 + t^2 + 2*t - 8", [&] { return to_string(char_poly(E(0, 0, 1))); });
  run.run("cubic.order_discriminant", "-503", [&] { return order_discriminant(O).get_str(); });
  run.run("cubic.maximal_order_D", "-503", [&] { return maximal_order(F).discriminant.get_str(); });
  run.run("cubic.index_of_alpha", "2", [&] { return element_index(E(0, 1, 0)).get_str(); });
  run.run("cubic.cofactor_M", "t + 4", [&] {
    return to_string(cofactor_M(F, two, {{parse_zpoly("t"), 2}, {parse_zpoly("t - 1"), 1}}));
  });
  run.run("cubic.criterion", "divisible witness t^2", [&] {
    const IndexVerdict v = index_divisible(F, two);
    if (!v.divisible) return std::string("not divisible");
    return "divisible witness " + to_string(v.witness->poly) + "^" + std::to_string(v.witness->exponent);
  });

  const auto a = I({E(2, 0, 0), E(0, 1, 0), E(1, 0, 1)});
  const auto b = I({E(2, 0, 0), E(1, 1, 0), E(0, 0, 1)});
  const auto c = I({E(2, 0, 0), E(0, 1, 0), E(0, 0, 1)});
  run.run("ideals.primes_above_2", "[2, a, 1+b] [2, 1+a, b] [2, a, b] e=1,1,1 f=1,1,1", [&] {
    const auto fac = factor_p_in_order(O, two);
    std::vector<LatticeIdeal> want{a, b, c}, got;
    std::string e, f;
    for (const auto& w : want)
      for (const auto& pf : fac)
        if (pf.ideal == w) {
          got.push_back(pf.ideal);
          e += (e.empty() ? "" : ",") + std::to_string(pf.e);
          f += (f.empty() ? "" : ",") + std::to_string(pf.f);
        }
    if (fac.size() != 3) return std::to_string(fac.size()) + " primes";
    return detail::ideal_list(got) + " e=" + e + " f=" + f;
  });
  run.run("ideals.norms", "2 2 2", [&] {
    return ideal_norm(a).get_str() + " " + ideal_norm(b).get_str() + " " + ideal_norm(c).get_str();
  });
  const std::vector<std::pair<std::string, std::pair<std::string, std::function<LatticeIdeal()>>>> products{
      {"a^2", {"[4, a, 3+b]", [&] { return a * a; }}},
      {"b^2", {"[4, 1+a, b]", [&] { return b * b; }}},
      {"c^2", {"[4, 2+a, 2+b]", [&] { return c * c; }}},
      {"bc", {"[2, 2a, b]", [&] { return b * c; }}},
      {"ca", {"[2, a, 2b]", [&] { return c * a; }}},
      {"ab", {"[2, 2a, 1+a+b]", [&] { return a * b; }}},
  };
  for (const auto& [name, spec] : products)
    run.run("ideals.product_" + name, spec.first, [&] { return to_string(spec.second()); });

  struct Principal {
    std::string name, hnf;
    std::function<LatticeIdeal()> product;
    OrderElement mu;
  };
  const std::vector<Principal> principal{
      {"abc", "[2, 2a, 2b]", [&] { return a * b * c; }, E(2, 0, 0)},
      {"a^2c", "[4, a, 2+2b]", [&] { return a * a * c; }, E(0, 1, 0)},
      {"b^2c", "[4, 2+2a, b]", [&] { return b * b * c; }, E(0, 0, 1)},
      {"ac^2", "[4, 2+a, 2b]", [&] { return a * c * c; }, E(-2, 1, 0)},
      {"bc^2", "[4, 2a, 2+b]", [&] { return b * c * c; }, E(2, 0, -1)},
      {"a^2b", "[4, 2a, 3+a+b]", [&] { return a * a * b; }, E(3, 1, 1)},
      {"ab^2", "[4, 2+2a, 1+a+b]", [&] { return a * b * b; }, E(1, 1, 1)},
      {"a^3", "[8, 4+a, 3+b]", [&] { return a * a * a; }, E(3, 2, 1)},
      {"b^3", "[8, 1+a, 4+b]", [&] { return b * b * b; }, E(1, 1, 0)},
      {"c^3", "[8, 2+a, 2+b]", [&] { return c * c * c; }, E(-4, 1, 1)},
  };
  for (const auto& pr : principal)
    run.run("ideals.principal_" + pr.name, pr.hnf + " = (" + to_string(pr.mu) + ")", [&] {
      const LatticeIdeal prod = pr.product();
      const LatticeIdeal gen = principal_ideal(pr.mu);
      return to_string(prod) + (prod == gen ? " = (" : " != (") + to_string(pr.mu) + ")";
    });

  // Relations among the generators of the principal ideals above.
  const auto alpha = E(0, 1, 0), beta = E(0, 0, 1), one = E(1, 0, 0);
  const std::vector<std::pair<std::string, std::pair<OrderElement, OrderElement>>> relations{
      {"a(a-2)(1+a)=8", {alpha * (alpha - 2 * one) * (one + alpha), 8 * one}},
      {"(a-2)(3+a+b)=2a", {(alpha - 2 * one) * E(3, 1, 1), 2 * alpha}},
      {"a(2-b)=2(a-2)", {alpha * E(2, 0, -1), 2 * (alpha - 2 * one)}},
      {"(a-2)(3+2a+b)=a^2", {(alpha - 2 * one) * E(3, 2, 1), alpha * alpha}},
      {"a(a+b-4)=(a-2)^2", {alpha * E(-4, 1, 1), (alpha - 2 * one) * (alpha - 2 * one)}},
      {"ab=2^2", {alpha * beta, 4 * one}},
  };
  for (const auto& [name, sides] : relations)
    run.run("relations." + name, "equal", [&] { return sides.first == sides.second ? "equal" : "differ"; });

  run.run("index_form.cubic", "2x^3 - x^2y - xy^2 - 2y^3", [&] {
    MultiPoly f = index_form(*O);
    if (!f.is_zero() && f.terms().begin()->second < 0) f = -f;
    return to_string(f);
  });
  run.run("index_form.always_even", "true", [&] {
    return common_value_divisor(index_form(*O), two) ? std::string("true") : std::string("false");
  });

  run.run("family.discriminant_formula", "-503 -503", [&] {
    return fam.closed_form_discriminant.get_str() + " " + order_discriminant(O).get_str();
  });
  run.run("family.6_2_9_13", "1", [&] { return order_discriminant(cubic_family(6, 2, 9, 13).order).get_str(); });
  run.run("family.2_2_1_1_min_poly", "t^3 - t^2 + 2*t - 8 = (t - 2)(t^2 + t + 4)", [&] {
    const OrderPtr o = cubic_family(2, 2, 1, 1).order;
    const ZPoly m = char_poly(OrderElement::basis(o, 1));
    const auto [q, rem] = divrem_exact(m, parse_zpoly("t - 2"));
    if (!rem.is_zero()) return to_string(m) + " irreducible";
    return to_string(m) + " = (t - 2)(" + to_string(q) + ")";
  });
  run.run("family.index_form_generic", "b*x^3 - a1*x^2y + b1*xy^2 - a*y^3", [&] {
    // Read the coefficients back off a family member with distinct parameters.
    const MultiPoly f = index_form(*cubic_family(3, 5, 7, 11).order);
    std::vector<std::string> got;
    for (const auto& [e, coef] : f.terms()) got.push_back(coef.get_str());
    return got == std::vector<std::string>{"5", "-7", "11", "-3"} ? std::string("b*x^3 - a1*x^2y + b1*xy^2 - a*y^3")
                                                                    : to_string(f);
  });

  const ZPoly Q = parse_zpoly("t^4 - t^3 + t^2 - 2*t + 4");
  run.run("quartic.fundamental_number", "2873 = 13^2 * 17", [&] {
    const Integer D = maximal_order(Q).discriminant;
    return D.get_str() + " = " + detail::factored(D, 1000);
  });
  run.run("quartic.shape_at_2", "(f=2,e=1) (f=2,e=1) common index divisor", [&] {
    const MaximalOrder mo = maximal_order(Q);
    std::vector<ShapePart> parts;
    for (const auto& pf : factor_p_in_order(mo.order, two)) parts.push_back({pf.f, pf.e});
    const bool cid = common_index_divisor(two, SplittingShape(two, 4, parts)).common_index_divisor;
    return detail::shape_text(parts) + (cid ? " common index divisor" : " no common index divisor");
  });
  run.run("quartic.degree_2_mod_2", "1: t^2 + t + 1", [&] {
    const auto irr = enumerate_monic_irreducibles(two, 2);
    return count_monic_irreducibles(two, 2).get_str() + ": " + to_string(irr.at(0));
  });

  const ZPoly sqrt2 = parse_zpoly("t^2 - 2");
  run.run("sqrt2.theta_discriminant", "5832", [&] { return discriminant(parse_zpoly("t^2 - 50*t - 833")).get_str(); });
  run.run("sqrt2.split_7", "(f=1,e=1) (f=1,e=1)", [&] {
    std::vector<ShapePart> parts;
    for (const auto& pf : factor_p_in_order(order_from_polynomial(sqrt2), seven)) parts.push_back({pf.f, pf.e});
    return detail::shape_text(parts);
  });
  run.run("sqrt2.good_generator", "25+27a index 27 t^2 + 6*t mod 7", [&] {
    const OrderPtr Z2 = order_from_polynomial(sqrt2);
    const auto primes = factor_p_in_order(Z2, seven);
    const OrderElement th =
        crt_good_generator(Z2, seven, primes, {parse_fppoly("t", seven), parse_fppoly("t - 1", seven)});
    return to_string(th) + " index " + element_index(th).get_str() + " " + to_string(reduce_mod(char_poly(th), seven)) +
           " mod 7";
  });

  return std::move(run.checks);
}

inline RunReport cmd_worked_examples(const CommandOptions& opt = {}) {
  RunReport r;
  r.command = "paper-examples";
  r.inputs["inject_fault"] = opt.inject_fault;
  const auto checks = worked_example_checks(opt.inject_fault);
  auto arr = Json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name}, {"passed", c.passed}, {"expected", c.expected}, {"actual", c.actual}});
    if (c.passed) {
      r.lines.push_back("PASS " + c.name + "  " + c.actual);
    } else {
      ++failed;
      r.lines.push_back("FAIL " + c.name);
      r.lines.push_back("  - expected: " + c.expected);
      r.lines.push_back("  + actual:   " + c.actual);
    }
  }
  r.results["checks"] = std::move(arr);
  r.results["passed"] = checks.size() - failed;
  r.results["failed"] = failed;
  r.lines.push_back(std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks passed");
  r.exit_status = failed ? kExitCheckFailed : kExitOk;
  return r;
}

}  // namespace dedekind
