// Acceptance runner: one PASS/FAIL line per criterion. AC10 is reported but
// does not affect the exit status.
#include <iostream>
#include <string>
#include <vector>

#include "dedekind/dedekind.hpp"
#include "dedekind/fixtures.hpp"
#include "oracles.hpp"
#include "property_suite.hpp"

using namespace dedekind;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

IntMatrix rows3(std::initializer_list<std::initializer_list<long>> rs) {
  IntMatrix m;
  for (const auto& r : rs) {
    IntVector v;
    for (long x : r) v.emplace_back(x);
    m.push_back(v);
  }
  return m;
}

const PrimeModulus kTwo(2), kSeven(7);

Verdict ac1() {
  Verdict v;
  const ZPoly F = parse_zpoly("t^3-t^2-2t-8");
  const Integer d = discriminant(F), D = maximal_order(F).discriminant;
  v.require(d == -2012, "disc F = " + d.get_str());
  v.require(D == -503, "D = " + D.get_str());
  v.require(d == 4 * D, "disc F != 2^2 * D");
  v.require(oracle::discriminant(F.coeffs()) == -2012, "Laplace oracle disagrees");
  v.detail = v.pass ? "disc F = -2012 = 2^2 * (-503), D = -503" : v.detail;
  return v;
}

Verdict ac2() {
  Verdict v;
  const IndexVerdict r = index_divisible(parse_zpoly("t^3-t^2-2t-8"), kTwo);
  v.require(r.cofactor == parse_zpoly("t+4"), "M = " + to_string(r.cofactor));
  v.require(r.divisible, "not divisible");
  v.require(r.witness && r.witness->poly == parse_fppoly("t", kTwo) && r.witness->exponent == 2, "witness");
  v.detail = v.pass ? "M = t + 4, witness (t, 2), divisible" : v.detail;
  return v;
}

Verdict ac3() {
  Verdict v;
  const OrderPtr O = cubic_family(2, 2, 1, -1).order;
  const std::vector<IntMatrix> want{rows3({{2, 0, 0}, {0, 1, 0}, {1, 0, 1}}), rows3({{2, 0, 0}, {1, 1, 0}, {0, 0, 1}}),
                                    rows3({{2, 0, 0}, {0, 1, 0}, {0, 0, 1}})};
  const auto fac = factor_p_in_order(O, kTwo);
  v.require(fac.size() == 3, std::to_string(fac.size()) + " primes");
  LatticeIdeal product = LatticeIdeal::unit(O);
  for (const auto& pf : fac) {
    v.require(std::find(want.begin(), want.end(), pf.ideal.basis()) != want.end(), "unexpected " + to_string(pf.ideal));
    v.require(ideal_norm(pf.ideal) == 2, "norm of " + to_string(pf.ideal));
    v.require(pf.e == 1 && pf.f == 1, "e, f of " + to_string(pf.ideal));
    product = product * pf.ideal;
  }
  v.require(product.basis() == identity_matrix(3, 2), "product is " + to_string(product));
  v.detail = v.pass ? "[2, a, 1+b] [2, 1+a, b] [2, a, b], norms 2, product [2, 2a, 2b]" : v.detail;
  return v;
}

Verdict ac4() {
  Verdict v;
  int n = 0;
  for (const auto& c : worked_example_checks()) {
    if (c.name.rfind("ideals.product_", 0) != 0 && c.name.rfind("ideals.principal_", 0) != 0) continue;
    ++n;
    v.require(c.passed, c.name + ": " + c.actual);
  }
  v.require(n == 16, std::to_string(n) + " identities checked");
  if (v.pass) v.detail = "6 products and 10 principal ideals match";
  return v;
}

Verdict ac5() {
  Verdict v;
  const MultiPoly f = index_form(cubic_family(2, 2, 1, -1).order);
  const std::vector<std::string> vars{"x", "y"};
  const MultiPoly x = MultiPoly::variable(vars, 0), y = MultiPoly::variable(vars, 1);
  const MultiPoly want = Integer(2) * (x * x * x) - x * x * y - x * y * y - Integer(2) * (y * y * y);
  v.require(f == want || f == -want, "index form " + to_string(f));
  v.require(common_value_divisor(f, kTwo), "some value is odd");
  if (v.pass) v.detail = "+-(2x^3 - x^2y - xy^2 - 2y^3), every value even";
  return v;
}

Verdict ac6() {
  Verdict v;
  const CubicFamily fam = cubic_family(2, 2, 1, -1);
  v.require(fam.closed_form_discriminant == -503 && order_discriminant(fam.order) == -503, "(2,2,1,-1)");
  const props::Outcome r = props::family_discriminant_closed_form();
  v.require(r.ok(), r.name + ": " + r.first_failure);
  if (v.pass) v.detail = "(2,2,1,-1) -> -503; " + std::to_string(r.cases) + " random quadruples agree";
  return v;
}

Verdict ac7() {
  Verdict v;
  const MaximalOrder mo = maximal_order(parse_zpoly("t^4-t^3+t^2-2t+4"));
  v.require(mo.discriminant == 2873 && Integer(13 * 13 * 17) == 2873, "D = " + mo.discriminant.get_str());
  std::vector<ShapePart> parts;
  for (const auto& pf : factor_p_in_order(mo.order, kTwo)) parts.push_back({pf.f, pf.e});
  const SplittingShape shape(kTwo, 4, parts);
  v.require(shape == SplittingShape(kTwo, 4, {{2, 1}, {2, 1}}), "shape at 2");
  v.require(common_index_divisor(kTwo, shape).common_index_divisor, "2 not a common index divisor");
  if (v.pass) v.detail = "D = 2873 = 13^2 * 17, shape (f=2,e=1) x2, 2 is a common index divisor";
  return v;
}

Verdict ac8() {
  Verdict v;
  const OrderPtr q = order_from_polynomial(parse_zpoly("t^2-2"));
  const auto primes = factor_p_in_order(q, kSeven);
  const OrderElement th =
      crt_good_generator(q, kSeven, primes, {parse_fppoly("t", kSeven), parse_fppoly("t-1", kSeven)});
  v.require(LatticeIdeal(q, identity_matrix(2, 49)).contains(th - OrderElement(q, {Integer(25), Integer(27)})),
            "theta = " + to_string(th) + " not 25+27a mod 49");
  v.require(reduce_mod(char_poly(th), kSeven) == parse_fppoly("t^2-t", kSeven), "char poly mod 7");
  const Integer k = element_index(th);
  v.require(k == 27 && !divides(Integer(7), k), "index " + k.get_str());
  v.require(oracle::index_from_discriminants(discriminant(char_poly(th)), 8) == 27, "discriminant-ratio oracle");
  if (v.pass) v.detail = "theta = " + to_string(th) + ", congruent to 25+27a mod 49, F = t^2 - t mod 7, index 27";
  return v;
}

Verdict ac9() {
  Verdict v;
  const std::vector<props::Outcome> all{props::factorization_round_trip(),
                                        props::factorization_seed_independent(),
                                        props::discriminant_detects_repeated_factors(),
                                        props::necklace_identity(),
                                        props::lift_independence(),
                                        props::criterion_matches_maximal_order(),
                                        props::sum_ef_equals_degree(),
                                        props::norm_multiplicative(),
                                        props::ramification_iff_divides_discriminant(),
                                        props::family_discriminant_closed_form()};
  int total = 0;
  for (const auto& r : all) {
    total += r.cases;
    v.require(r.ok(), r.name + " (" + std::to_string(r.cases) + " cases): " + r.first_failure);
  }
  if (v.pass) v.detail = std::to_string(all.size()) + " properties, " + std::to_string(total) + " cases";
  return v;
}

// Elements of Z[x]/(x^13 - 1); an element is rational iff its coefficients at
// x^1..x^12 agree, with value c0 - c1, since 1 + x + ... + x^12 = 0 in Z[zeta].
using Cyclo = std::vector<Integer>;

Cyclo cyclo_mul(const Cyclo& a, const Cyclo& b) {
  Cyclo r(13, 0);
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j) r[(i + j) % 13] += a[i] * b[j];
  return r;
}

// Minimal polynomial of the period zeta + zeta^3 + zeta^9, by multiplying out
// the four conjugates t - eta_k.
std::optional<ZPoly> gauss_period_quartic() {
  // Coefficients of the running product, lowest degree first.
  std::vector<Cyclo> cur{[] {
    Cyclo one(13, 0);
    one[0] = 1;
    return one;
  }()};
  for (int k : {1, 2, 4, 7}) {
    Cyclo eta(13, 0);
    for (int h : {1, 3, 9}) eta[(k * h) % 13] += 1;
    std::vector<Cyclo> next(cur.size() + 1, Cyclo(13, 0));
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const Cyclo prod = cyclo_mul(cur[i], eta);
      for (int c = 0; c < 13; ++c) {
        next[i + 1][c] += cur[i][c];
        next[i][c] -= prod[c];
      }
    }
    cur = std::move(next);
  }
  IntVector coeffs;
  for (const auto& c : cur) {
    for (int i = 2; i < 13; ++i)
      if (c[i] != c[1]) return std::nullopt;
    coeffs.push_back(c[0] - c[1]);
  }
  return ZPoly(coeffs);
}

Verdict ac10() {
  Verdict v;
  const auto G = gauss_period_quartic();
  v.require(G.has_value(), "period polynomial is not rational");
  if (!G) return v;
  const MaximalOrder mo = maximal_order(*G);
  const PrimeModulus three(3);
  std::vector<ShapePart> parts;
  for (const auto& pf : factor_p_in_order(mo.order, three)) parts.push_back({pf.f, pf.e});
  const SplittingShape shape(three, 4, parts);
  v.require(shape == SplittingShape(three, 4, {{1, 1}, {1, 1}, {1, 1}, {1, 1}}), "shape at 3");
  v.require(common_index_divisor(three, shape).common_index_divisor, "3 not a common index divisor");
  if (v.pass)
    v.detail = "G = " + to_string(*G) + ", D = " + mo.discriminant.get_str() +
               ", 3 splits into four primes of norm 3 and is a common index divisor";
  return v;
}

}  // namespace

int main() {
  struct Row {
    const char* id;
    const char* what;
    Verdict (*run)();
    bool gating;
  };
  const Row rows[] = {
      {"AC1", "cubic discriminant and fundamental number", ac1, true},
      {"AC2", "index criterion at 2", ac2, true},
      {"AC3", "prime ideals above 2 in the cubic order", ac3, true},
      {"AC4", "ideal products and principal ideals", ac4, true},
      {"AC5", "cubic index form", ac5, true},
      {"AC6", "cubic family discriminant formula", ac6, true},
      {"AC7", "quartic fundamental number and common index divisor 2", ac7, true},
      {"AC8", "good generator in Z[sqrt2] at 7", ac8, true},
      {"AC9", "randomized properties", ac9, true},
      {"AC10", "period quartic of the 13th roots of unity (non-gating)", ac10, false},
  };
  bool ok = true;
  for (const auto& row : rows) {
    Verdict v;
    try {
      v = row.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    std::cout << row.id << (v.pass ? " PASS " : " FAIL ") << row.what << ": " << v.detail << std::endl;
    if (row.gating && !v.pass) ok = false;
  }
  return ok ? 0 : 1;
}
