#pragma once

// Integral ideals of an order, stored as full-rank sublattices in Hermite
// normal form with respect to the order's basis.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dedekind/error.hpp"
#include "dedekind/fppoly.hpp"
#include "dedekind/integer.hpp"
#include "dedekind/matrix.hpp"
#include "dedekind/order.hpp"
#include "dedekind/zpoly.hpp"

namespace dedekind {

class LatticeIdeal {
 public:
  // `rows` may be any generating set of the lattice; it is brought to HNF and
  // checked for closure under multiplication by the order.
  LatticeIdeal(OrderPtr order, const IntMatrix& rows) : order_(std::move(order)) {
    if (!order_) throw InvalidArgument("ideal without an order");
    basis_ = hnf(rows, order_->rank());
    for (const auto& row : basis_)
      for (std::size_t j = 1; j < order_->rank(); ++j) {
        IntVector w = detail::multiply_coords(*order_, row, OrderElement::basis(order_, j).coords());
        if (!lattice_contains(basis_, w)) throw NotAnIdeal("lattice is not closed under multiplication by " +
                                                           order_->labels()[j]);
      }
  }

  static LatticeIdeal unit(const OrderPtr& o) { return LatticeIdeal(o, identity_matrix(o->rank())); }

  const OrderPtr& order() const { return order_; }
  const IntMatrix& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }

  bool contains(const OrderElement& x) const {
    detail::require_same_order(order_, x.order());
    return lattice_contains(basis_, x.coords());
  }

  friend bool operator==(const LatticeIdeal& a, const LatticeIdeal& b) {
    return same_order(a.order_, b.order_) && a.basis_ == b.basis_;
  }

 private:
  OrderPtr order_;
  IntMatrix basis_;
};

inline Integer ideal_norm(const LatticeIdeal& a) { return diagonal_product(a.basis()); }

// a is contained in b.
inline bool is_subset(const LatticeIdeal& a, const LatticeIdeal& b) {
  detail::require_same_order(a.order(), b.order());
  return std::all_of(a.basis().begin(), a.basis().end(),
                     [&](const IntVector& row) { return lattice_contains(b.basis(), row); });
}

inline LatticeIdeal ideal_from_generators(const OrderPtr& o, const std::vector<OrderElement>& gens) {
  IntMatrix rows;
  for (const auto& g : gens) {
    detail::require_same_order(o, g.order());
    for (std::size_t j = 0; j < o->rank(); ++j)
      rows.push_back(detail::multiply_coords(*o, g.coords(), OrderElement::basis(o, j).coords()));
  }
  if (rows.empty()) throw RankDeficient("no generators");
  return LatticeIdeal(o, rows);
}

inline LatticeIdeal principal_ideal(const OrderElement& mu) { return ideal_from_generators(mu.order(), {mu}); }

// The ideal generated by p and P(theta).
inline LatticeIdeal two_element_ideal(const OrderPtr& o, PrimeModulus p, const ZPoly& P, const OrderElement& theta) {
  detail::require_same_order(o, theta.order());
  return ideal_from_generators(o, {OrderElement::integer(o, p.as_integer()), evaluate(P, theta)});
}

inline LatticeIdeal ideal_product(const LatticeIdeal& a, const LatticeIdeal& b) {
  detail::require_same_order(a.order(), b.order());
  IntMatrix rows;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) rows.push_back(detail::multiply_coords(*a.order(), x, y));
  return LatticeIdeal(a.order(), rows);
}

inline LatticeIdeal operator*(const LatticeIdeal& a, const LatticeIdeal& b) { return ideal_product(a, b); }

inline LatticeIdeal ideal_sum(const LatticeIdeal& a, const LatticeIdeal& b) {
  detail::require_same_order(a.order(), b.order());
  IntMatrix rows = a.basis();
  rows.insert(rows.end(), b.basis().begin(), b.basis().end());
  return LatticeIdeal(a.order(), rows);
}

inline LatticeIdeal power(const LatticeIdeal& a, unsigned e) {
  LatticeIdeal r = LatticeIdeal::unit(a.order());
  for (unsigned k = 0; k < e; ++k) r = r * a;
  return r;
}

// ---------------------------------------------------------------------------
// Residue arithmetic mod p

namespace detail {

inline ResidueVector residues(const IntVector& v, std::uint32_t p) {
  ResidueVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = fp::reduce(v[i], p);
  return r;
}

inline IntVector lift_residues(const ResidueVector& v) {
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = from_u64(v[i]);
  return r;
}

inline ResidueVector multiply_mod(const Order& o, const ResidueVector& a, const ResidueVector& b, std::uint32_t p) {
  return residues(multiply_coords(o, lift_residues(a), lift_residues(b)), p);
}

inline bool subspace_contains(const Echelon& e, const ResidueVector& v, std::uint32_t p) {
  return is_zero_vector(reduce_against(e, v, p));
}

// Image of an ideal containing p in O/pO.
inline Echelon ideal_image(const LatticeIdeal& a, std::uint32_t p) {
  std::vector<ResidueVector> rows;
  for (const auto& row : a.basis()) rows.push_back(residues(row, p));
  return rref_mod(std::move(rows), p);
}

}  // namespace detail

// A nonzero ideal P is maximal iff O/P is a field. With p in P and
// N(P) = p^f, O/P is an f-dimensional F_p-algebra; it is a field exactly
// when the Frobenius x -> x^p is injective on it (reduced) and fixes a
// one-dimensional subspace (a single factor).
inline bool is_maximal_ideal(const LatticeIdeal& P) {
  const Integer nrm = ideal_norm(P);
  if (nrm == 1) return false;
  const auto fac = trial_factor(nrm, 1'000'000);
  if (fac.size() != 1 || !fits_u64(fac[0].prime) || fac[0].prime >= Integer(static_cast<unsigned long>(PrimeModulus::kLimit)))
    return false;
  const auto p = static_cast<std::uint32_t>(to_u64(fac[0].prime));
  const Order& o = *P.order();
  const std::size_t n = o.rank();
  if (!P.contains(OrderElement::integer(P.order(), fac[0].prime))) return false;

  const Echelon image = detail::ideal_image(P, p);
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (std::find(image.pivots.begin(), image.pivots.end(), c) == image.pivots.end()) free_cols.push_back(c);
  const std::size_t f = free_cols.size();
  if (f != fac[0].exponent) return false;

  std::vector<ResidueVector> frob, frob_minus_id;
  for (std::size_t i = 0; i < f; ++i) {
    ResidueVector e(n, 0);
    e[free_cols[i]] = 1;
    ResidueVector x = e, acc(n, 0);
    acc[0] = 1;
    for (std::uint32_t k = p; k; k >>= 1) {
      if (k & 1) acc = detail::multiply_mod(o, acc, x, p);
      x = detail::multiply_mod(o, x, x, p);
    }
    acc = reduce_against(image, acc, p);
    ResidueVector row(f), shifted(f);
    for (std::size_t j = 0; j < f; ++j) {
      row[j] = acc[free_cols[j]];
      shifted[j] = (row[j] + (i == j ? p - 1 : 0)) % p;
    }
    frob.push_back(std::move(row));
    frob_minus_id.push_back(std::move(shifted));
  }
  return rank_mod(frob, p) == f && rank_mod(frob_minus_id, p) + 1 == f;
}

// Largest v with prime^v containing a.
inline unsigned ideal_valuation(const LatticeIdeal& a, const LatticeIdeal& prime) {
  detail::require_same_order(a.order(), prime.order());
  if (!is_maximal_ideal(prime)) throw NotMaximalIdeal("valuation at an ideal that is not maximal");
  const Integer na = ideal_norm(a);
  unsigned v = 0;
  LatticeIdeal pw = prime;
  while (divides(ideal_norm(pw), na) && is_subset(a, pw)) {
    ++v;
    pw = pw * prime;
  }
  return v;
}

struct PrimeFactor {
  LatticeIdeal ideal;
  unsigned e;
  unsigned f;
};

inline constexpr std::uint64_t kDefaultIdealBound = 10'000;
inline constexpr std::uint64_t kSubspaceLimit = 10'000'000;

namespace detail {

inline bool hnf_less(const IntMatrix& a, const IntMatrix& b) { return a < b; }

// Number of k-dimensional subspaces of F_p^n.
inline Integer gaussian_binomial(std::uint64_t p, std::size_t n, std::size_t k) {
  Integer num = 1, den = 1;
  const Integer pp = from_u64(p);
  for (std::size_t i = 0; i < k; ++i) {
    num *= ipow(pp, n - i) - 1;
    den *= ipow(pp, i + 1) - 1;
  }
  return num / den;
}

// Calls visit(rows) for every k-dimensional subspace in reduced row echelon
// form. Subsets of pivot columns are taken in lexicographic order, free
// entries as an odometer.
template <class Visit>
void for_each_subspace(std::size_t n, std::size_t k, std::uint32_t p, Visit&& visit) {
  if (k == 0) {
    visit(std::vector<ResidueVector>{});
    return;
  }
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  for (;;) {
    // Free positions: row i, column c > piv[i] that is not a pivot column.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = piv[i] + 1; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(i, c);
    std::vector<std::uint32_t> vals(slots.size(), 0);
    for (;;) {
      std::vector<ResidueVector> rows(k, ResidueVector(n, 0));
      for (std::size_t i = 0; i < k; ++i) rows[i][piv[i]] = 1;
      for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = vals[s];
      visit(rows);
      std::size_t s = slots.size();
      bool carry = true;
      while (carry && s > 0) {
        --s;
        if (++vals[s] < p) carry = false;
        else vals[s] = 0;
      }
      if (carry) break;
    }
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

}  // namespace detail

// Prime ideals above p with exponents and residue degrees, by enumerating
// the ideals between pO and O as subspaces of O/pO. Requires O to be
// p-maximal, since otherwise pO need not factor into primes. Sorted by
// residue degree, then by HNF basis.
inline std::vector<PrimeFactor> factor_p_in_order(const OrderPtr& o, PrimeModulus p,
                                                  std::uint64_t bound = kDefaultIdealBound) {
  const std::size_t n = o->rank();
  const std::uint32_t pv = p.value();
  const Integer pn = ipow(p.as_integer(), n);
  if (pn > from_u64(bound))
    throw BoundExceeded("p^n = " + pn.get_str() + " exceeds the bound " + std::to_string(bound));
  Integer subspaces = 0;
  for (std::size_t k = 0; k < n; ++k) subspaces += detail::gaussian_binomial(pv, n, k);
  if (subspaces > from_u64(kSubspaceLimit))
    throw BoundExceeded(subspaces.get_str() + " subspaces of O/pO to enumerate");
  if (!is_p_maximal(o, p)) throw NotPMaximal("order is not maximal at " + std::to_string(pv));

  std::vector<std::vector<ResidueVector>> basis_products(n);
  std::vector<Echelon> invariant;
  for (std::size_t k = 0; k < n; ++k) {
    detail::for_each_subspace(n, k, pv, [&](const std::vector<ResidueVector>& rows) {
      Echelon e{rows, {}};
      for (const auto& r : rows)
        e.pivots.push_back(static_cast<std::size_t>(std::find(r.begin(), r.end(), 1u) - r.begin()));
      for (const auto& r : rows)
        for (std::size_t j = 1; j < n; ++j) {
          ResidueVector w(n, 0);
          for (std::size_t i = 0; i < n; ++i) {
            if (!r[i]) continue;
            const IntVector& t = o->product(i, j);
            for (std::size_t c = 0; c < n; ++c) w[c] = (w[c] + r[i] * fp::reduce(t[c], pv)) % pv;
          }
          if (!detail::subspace_contains(e, w, pv)) return;
        }
      invariant.push_back(std::move(e));
    });
  }

  auto contained = [&](const Echelon& small, const Echelon& big) {
    return std::all_of(small.rows.begin(), small.rows.end(),
                       [&](const ResidueVector& r) { return detail::subspace_contains(big, r, pv); });
  };
  std::vector<PrimeFactor> out;
  const LatticeIdeal pO(o, identity_matrix(n, p.as_integer()));
  for (const auto& cand : invariant) {
    bool maximal = true;
    for (const auto& other : invariant)
      if (other.rows.size() > cand.rows.size() && contained(cand, other)) {
        maximal = false;
        break;
      }
    if (!maximal) continue;
    IntMatrix rows = identity_matrix(n, p.as_integer());
    for (const auto& r : cand.rows) rows.push_back(detail::lift_residues(r));
    LatticeIdeal P(o, rows);
    const auto f = static_cast<unsigned>(n - cand.rows.size());
    out.push_back({P, 0, f});
  }
  for (auto& pf : out) pf.e = ideal_valuation(pO, pf.ideal);

  LatticeIdeal prod = LatticeIdeal::unit(o);
  std::size_t total = 0;
  for (const auto& pf : out) {
    prod = prod * power(pf.ideal, pf.e);
    total += std::size_t{pf.e} * pf.f;
  }
  if (!(prod == pO) || total != n) throw std::logic_error("prime ideals above p do not multiply to pO");
  std::sort(out.begin(), out.end(), [](const PrimeFactor& a, const PrimeFactor& b) {
    if (a.f != b.f) return a.f < b.f;
    return detail::hnf_less(a.ideal.basis(), b.ideal.basis());
  });
  return out;
}

// ---------------------------------------------------------------------------
// Good generators

namespace detail {

// Residue classes of O/P in coordinate-lexicographic order: coordinate i of
// a representative ranges over [0, pivot_i).
inline std::optional<IntVector> smallest_root(const FpPoly& poly, const LatticeIdeal& P) {
  const auto& b = P.basis();
  const std::size_t n = b.size();
  const OrderPtr& o = P.order();
  const ZPoly lifted = lift(poly);
  IntVector c(n, 0);
  for (;;) {
    if (P.contains(evaluate(lifted, OrderElement(o, c)))) return c;
    std::size_t k = n;
    bool done = true;
    while (k > 0) {
      --k;
      if (++c[k] < b[k][k]) {
        done = false;
        break;
      }
      c[k] = 0;
    }
    if (done) return std::nullopt;
  }
}

}  // namespace detail

// Element theta with theta = alpha_i mod P_i^2, where alpha_i is the
// smallest root of polys[i] in O/P_i, adjusted when e_i >= 2 so that
// polys[i](alpha_i) is not in P_i^2. Then F = char_poly(theta) reduces to
// prod polys[i]^e_i mod p and p does not divide the index of theta.
// `roots`, when given, replaces the root search.
inline OrderElement crt_good_generator(const OrderPtr& o, PrimeModulus p, const std::vector<PrimeFactor>& primes,
                                       const std::vector<FpPoly>& polys,
                                       const std::vector<OrderElement>& roots = {}) {
  const std::size_t m = primes.size();
  const std::size_t n = o->rank();
  if (polys.size() != m) throw InvalidArgument("need one prime function per prime ideal");
  for (std::size_t i = 0; i < m; ++i) {
    if (polys[i].modulus() != p) throw ModulusMismatch();
    if (!polys[i].is_monic() || polys[i].degree() != primes[i].f)
      throw InvalidArgument("prime function " + std::to_string(i) + " must be monic of degree " +
                            std::to_string(primes[i].f));
    if (!fp_is_irreducible(polys[i])) throw InvalidArgument(to_string(polys[i]) + " is not irreducible");
    for (std::size_t j = 0; j < i; ++j)
      if (polys[i] == polys[j])
        throw InfeasibleSupply("prime functions must be pairwise distinct; " + to_string(polys[i]) +
                               " is repeated");
  }
  if (!roots.empty() && roots.size() != m) throw InvalidArgument("need one root per prime ideal");

  std::vector<LatticeIdeal> mods;
  std::vector<OrderElement> alphas;
  for (std::size_t i = 0; i < m; ++i) {
    const LatticeIdeal& P = primes[i].ideal;
    const LatticeIdeal P2 = P * P;
    const ZPoly lifted = lift(polys[i]);
    OrderElement alpha = OrderElement::zero(o);
    if (roots.empty()) {
      auto r = detail::smallest_root(polys[i], P);
      if (!r) throw InvalidArgument(to_string(polys[i]) + " has no root modulo the given prime ideal");
      alpha = OrderElement(o, *r);
    } else {
      alpha = roots[i];
      if (!P.contains(evaluate(lifted, alpha)))
        throw InvalidArgument("supplied element is not a root modulo its prime ideal");
    }
    if (primes[i].e >= 2 && P2.contains(evaluate(lifted, alpha))) {
      for (const auto& row : P.basis()) {
        OrderElement lambda(o, row);
        if (P2.contains(lambda)) continue;
        alpha = alpha + lambda;
        break;
      }
    }
    mods.push_back(P2);
    alphas.push_back(alpha);
  }

  // v_i = 1 mod I_i and v_i = 0 mod I_j (j != i): 1 = u + v with u in I_i and
  // v in the product of the others, read off the HNF transform of the
  // stacked bases.
  LatticeIdeal all = LatticeIdeal::unit(o);
  for (const auto& I : mods) all = all * I;
  IntVector theta(n, 0);
  for (std::size_t i = 0; i < m; ++i) {
    LatticeIdeal J = LatticeIdeal::unit(o);
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) J = J * mods[j];
    IntMatrix stacked = mods[i].basis();
    stacked.insert(stacked.end(), J.basis().begin(), J.basis().end());
    HnfResult h = hnf_with_transform(stacked, n);
    if (h.basis != identity_matrix(n)) throw std::logic_error("CRT moduli are not coprime");
    IntVector v(n, 0);
    for (std::size_t k = 0; k < n; ++k)
      if (h.transform[0][n + k] != 0)
        for (std::size_t c = 0; c < n; ++c) v[c] += h.transform[0][n + k] * J.basis()[k][c];
    IntVector term = detail::multiply_coords(*o, alphas[i].coords(), v);
    for (std::size_t c = 0; c < n; ++c) theta[c] += term[c];
  }
  OrderElement result(o, reduce_modulo_lattice(all.basis(), theta));

  const Integer k = element_index(result);
  if (k == 0 || divides(p.as_integer(), k))
    throw std::logic_error("constructed element has index " + k.get_str() + ", divisible by p");
  FpPoly expected = FpPoly::constant(p, 1);
  for (std::size_t i = 0; i < m; ++i)
    for (unsigned e = 0; e < primes[i].e; ++e) expected = expected * polys[i];
  if (!(reduce_mod(char_poly(result), p) == expected))
    throw std::logic_error("characteristic polynomial does not reduce to the chosen prime functions");
  return result;
}

// ---------------------------------------------------------------------------
// Text forms

// "[2, a, 1+b]"
inline std::string to_string(const LatticeIdeal& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.basis().size(); ++i) {
    if (i) out += ", ";
    out += format_element(a.basis()[i], a.order()->labels());
  }
  return out + "]";
}

inline nlohmann::ordered_json ideal_json(const LatticeIdeal& a) {
  nlohmann::ordered_json j;
  j["labels"] = a.order()->labels();
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : a.basis()) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& v : row) r.push_back(detail::integer_json(v));
    rows.push_back(std::move(r));
  }
  j["basis"] = std::move(rows);
  j["text"] = to_string(a);
  return j;
}

inline LatticeIdeal ideal_from_json(const OrderPtr& o, const nlohmann::ordered_json& j) {
  IntMatrix rows;
  try {
    for (const auto& r : j.at("basis")) {
      IntVector v;
      for (const auto& x : r) v.push_back(detail::integer_from_json(x));
      if (v.size() != o->rank()) throw ParseError("ideal basis row has wrong length");
      rows.push_back(std::move(v));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ideal: ") + e.what());
  }
  return LatticeIdeal(o, rows);
}

}  // namespace dedekind
