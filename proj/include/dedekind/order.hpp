#pragma once

// Orders of rank n presented by an integral basis [w_1 = 1, w_2, ..., w_n]
// and integer structure constants w_i * w_j = sum_k c_ijk w_k.
//
// Everything here is exact: characteristic polynomials come from a
// fraction-free determinant over Z[t], discriminants from the trace form,
// and p-maximal overorders from an exhaustive search for elements x with
// x/p integral.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "dedekind/error.hpp"
#include "dedekind/fppoly.hpp"
#include "dedekind/integer.hpp"
#include "dedekind/matrix.hpp"
#include "dedekind/zpoly.hpp"

namespace dedekind {

using StructureTable = std::vector<std::vector<IntVector>>;

class Order;
using OrderPtr = std::shared_ptr<const Order>;

class Order {
 public:
  // Validates shape, commutativity, that w_1 is the identity, and
  // associativity on every basis triple.
  static OrderPtr make(std::vector<std::string> labels, StructureTable table) {
    return OrderPtr(new Order(std::move(labels), std::move(table)));
  }

  std::size_t rank() const { return table_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureTable& table() const { return table_; }
  const IntVector& product(std::size_t i, std::size_t j) const { return table_[i][j]; }

  // Trace of the basis element w_i.
  const Integer& basis_trace(std::size_t i) const { return traces_[i]; }

  friend bool operator==(const Order& a, const Order& b) { return a.table_ == b.table_; }

 private:
  Order(std::vector<std::string> labels, StructureTable table) : labels_(std::move(labels)), table_(std::move(table)) {
    validate();
    const std::size_t n = rank();
    traces_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) traces_[i] += table_[i][j][j];
  }

  void validate() const {
    const std::size_t n = table_.size();
    if (n == 0) throw InvalidOrder("order of rank 0");
    if (labels_.size() != n) throw InvalidOrder("need one label per basis element");
    for (const auto& row : table_) {
      if (row.size() != n) throw InvalidOrder("multiplication table is not square");
      for (const auto& v : row)
        if (v.size() != n) throw InvalidOrder("structure constant vector has wrong length");
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (table_[i][j] != table_[j][i])
          throw InvalidOrder("table is not symmetric at (" + labels_[i] + ", " + labels_[j] + ")");
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table_[0][j][k] != (j == k ? 1 : 0))
          throw InvalidOrder("first basis element does not act as the identity");
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          IntVector left(n, 0), right(n, 0);
          for (std::size_t l = 0; l < n; ++l) {
            const Integer& a = table_[i][j][l];
            const Integer& b = table_[j][k][l];
            for (std::size_t m = 0; m < n; ++m) {
              if (a != 0) left[m] += a * table_[l][k][m];
              if (b != 0) right[m] += b * table_[i][l][m];
            }
          }
          if (left != right)
            throw InvalidOrder("table is not associative on (" + labels_[i] + ", " + labels_[j] + ", " +
                               labels_[k] + ")");
        }
  }

  std::vector<std::string> labels_;
  StructureTable table_;
  IntVector traces_;
};

inline bool same_order(const OrderPtr& a, const OrderPtr& b) { return a == b || (a && b && *a == *b); }

class OrderElement {
 public:
  OrderElement(OrderPtr order, IntVector coords) : order_(std::move(order)), coords_(std::move(coords)) {
    if (!order_) throw InvalidArgument("element without an order");
    if (coords_.size() != order_->rank()) throw InvalidArgument("coordinate vector length does not match rank");
  }

  static OrderElement zero(const OrderPtr& o) { return OrderElement(o, IntVector(o->rank(), 0)); }
  static OrderElement integer(const OrderPtr& o, const Integer& v) {
    IntVector c(o->rank(), 0);
    c[0] = v;
    return OrderElement(o, std::move(c));
  }
  static OrderElement one(const OrderPtr& o) { return integer(o, 1); }
  static OrderElement basis(const OrderPtr& o, std::size_t i) {
    IntVector c(o->rank(), 0);
    c.at(i) = 1;
    return OrderElement(o, std::move(c));
  }

  const OrderPtr& order() const { return order_; }
  const IntVector& coords() const { return coords_; }
  std::size_t rank() const { return coords_.size(); }

  friend bool operator==(const OrderElement& a, const OrderElement& b) {
    return same_order(a.order_, b.order_) && a.coords_ == b.coords_;
  }

 private:
  OrderPtr order_;
  IntVector coords_;
};

namespace detail {
inline void require_same_order(const OrderPtr& a, const OrderPtr& b) {
  if (!same_order(a, b)) throw OrderMismatch();
}

// Product of two coordinate vectors through the structure constants.
inline IntVector multiply_coords(const Order& o, const IntVector& a, const IntVector& b) {
  const std::size_t n = o.rank();
  IntVector out(n, 0);
  Integer ab;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      ab = a[i] * b[j];
      const IntVector& t = o.product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (t[k] != 0) out[k] += ab * t[k];
    }
  }
  return out;
}
}  // namespace detail

inline OrderElement operator+(const OrderElement& a, const OrderElement& b) {
  detail::require_same_order(a.order(), b.order());
  IntVector c(a.coords());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords()[i];
  return OrderElement(a.order(), std::move(c));
}

inline OrderElement operator-(const OrderElement& a, const OrderElement& b) {
  detail::require_same_order(a.order(), b.order());
  IntVector c(a.coords());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords()[i];
  return OrderElement(a.order(), std::move(c));
}

inline OrderElement operator*(const Integer& s, const OrderElement& a) {
  IntVector c(a.coords());
  for (auto& v : c) v *= s;
  return OrderElement(a.order(), std::move(c));
}

inline OrderElement element_mul(const OrderElement& a, const OrderElement& b) {
  detail::require_same_order(a.order(), b.order());
  return OrderElement(a.order(), detail::multiply_coords(*a.order(), a.coords(), b.coords()));
}

inline OrderElement operator*(const OrderElement& a, const OrderElement& b) { return element_mul(a, b); }

inline OrderElement power(const OrderElement& a, unsigned e) {
  OrderElement r = OrderElement::one(a.order());
  OrderElement b = a;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

// P(x) by Horner's rule inside the order.
inline OrderElement evaluate(const ZPoly& poly, const OrderElement& x) {
  OrderElement acc = OrderElement::zero(x.order());
  for (std::size_t k = poly.coeffs().size(); k-- > 0;)
    acc = acc * x + OrderElement::integer(x.order(), poly.coeffs()[k]);
  return acc;
}

// Row i holds the coordinates of x * w_i.
inline IntMatrix multiplication_matrix(const OrderElement& x) {
  const Order& o = *x.order();
  const std::size_t n = o.rank();
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (x.coords()[j] == 0) continue;
      const IntVector& t = o.product(j, i);
      for (std::size_t k = 0; k < n; ++k) m[i][k] += x.coords()[j] * t[k];
    }
  return m;
}

inline Integer trace(const OrderElement& x) {
  Integer tr = 0;
  for (std::size_t i = 0; i < x.rank(); ++i) tr += x.coords()[i] * x.order()->basis_trace(i);
  return tr;
}

// det(t*I - M) by Bareiss elimination over Z[t]. The pivots are the leading
// principal minors of t*I - M, which are monic, so every division is exact.
inline ZPoly char_poly(const OrderElement& x) {
  const IntMatrix m = multiplication_matrix(x);
  const std::size_t n = m.size();
  std::vector<std::vector<ZPoly>> a(n, std::vector<ZPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = i == j ? ZPoly(IntVector{Integer(-m[i][j]), 1}) : ZPoly::constant(-m[i][j]);
  ZPoly prev = ZPoly::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        ZPoly t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto [q, r] = divrem_exact(t, prev);
        if (!r.is_zero()) throw std::logic_error("inexact Bareiss step in char_poly");
        a[i][j] = std::move(q);
      }
    prev = a[k][k];
  }
  return a[n - 1][n - 1];
}

inline Integer norm(const OrderElement& x) {
  ZPoly cp = char_poly(x);
  return x.rank() % 2 == 0 ? cp.coeff(0) : Integer(-cp.coeff(0));
}

// det(Tr(w_i w_j)).
inline Integer order_discriminant(const Order& o) {
  const std::size_t n = o.rank();
  IntMatrix tr(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) tr[i][j] += o.product(i, j)[k] * o.basis_trace(k);
  return det_bareiss(tr);
}

inline Integer order_discriminant(const OrderPtr& o) { return order_discriminant(*o); }

inline std::vector<std::string> power_basis_labels(std::size_t n, const std::string& symbol = "a") {
  std::vector<std::string> labels{"1"};
  for (std::size_t k = 1; k < n; ++k) labels.push_back(k == 1 ? symbol : symbol + "^" + std::to_string(k));
  return labels;
}

// Z[theta] = [1, theta, ..., theta^(n-1)] for a root theta of monic F.
inline OrderPtr order_from_polynomial(const ZPoly& F, const std::string& symbol = "a") {
  if (F.is_zero() || F.degree() < 1) throw InvalidArgument("order_from_polynomial needs degree >= 1");
  if (!F.is_monic()) throw NotMonic("order_from_polynomial");
  const std::size_t n = F.degree();
  StructureTable table(n, std::vector<IntVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ZPoly r = divrem_exact(ZPoly::monomial(i + j), F).remainder;
      IntVector c(n, 0);
      for (std::size_t k = 0; k < r.coeffs().size(); ++k) c[k] = r.coeffs()[k];
      table[i][j] = std::move(c);
    }
  return Order::make(power_basis_labels(n, symbol), std::move(table));
}

// Matrix whose rows are the coordinates of 1, theta, ..., theta^(n-1).
inline IntMatrix embedding_matrix(const OrderElement& theta) {
  IntMatrix rows;
  OrderElement pw = OrderElement::one(theta.order());
  for (std::size_t k = 0; k < theta.rank(); ++k) {
    rows.push_back(pw.coords());
    pw = pw * theta;
  }
  return rows;
}

// |det| of the embedding matrix; 0 when theta does not generate.
inline Integer element_index(const OrderElement& theta) { return iabs(det_bareiss(embedding_matrix(theta))); }

// ---------------------------------------------------------------------------
// Overorders

// The order spanned by the rows of `basis` / `denominator`, written in the
// coordinates of `base`. `basis` must be a lower-triangular HNF whose first
// row is denominator * e_1.
inline OrderPtr overorder(const Order& base, const IntMatrix& basis, const Integer& denominator) {
  const std::size_t n = base.rank();
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool same = true;
    for (std::size_t k = 0; k < n; ++k)
      if (basis[i][k] != (k == i ? denominator : Integer(0))) same = false;
    labels[i] = same ? base.labels()[i] : "w" + std::to_string(i);
  }
  StructureTable table(n, std::vector<IntVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntVector w = detail::multiply_coords(base, basis[i], basis[j]);
      for (auto& v : w) {
        if (!divides(denominator, v)) throw InvalidOrder("lattice is not closed under multiplication");
        v = divexact(v, denominator);
      }
      auto coords = lattice_coordinates(basis, w);
      if (!coords) throw InvalidOrder("lattice is not closed under multiplication");
      table[i][j] = std::move(*coords);
    }
  return Order::make(std::move(labels), std::move(table));
}

struct Enlargement {
  OrderPtr order;     // p-maximal overorder
  IntMatrix basis;    // its basis over the input order, scaled by `denominator`, in HNF
  Integer denominator = 1;

  bool changed() const { return denominator != 1; }
};

namespace detail {

inline Integer content(const IntMatrix& m) {
  Integer g = 0;
  for (const auto& row : m)
    for (const auto& v : row) g = igcd(g, v);
  return g;
}

inline void normalize_denominator(IntMatrix& basis, Integer& denominator) {
  Integer g = igcd(content(basis), denominator);
  if (g <= 1) return;
  for (auto& row : basis)
    for (auto& v : row) v = divexact(v, g);
  denominator = divexact(denominator, g);
}

// Smallest closed lattice (with fixed denominator D) containing the rows.
inline IntMatrix ring_closure(const Order& base, IntMatrix gens, const Integer& denom) {
  const std::size_t n = base.rank();
  for (;;) {
    IntMatrix h = hnf(gens, n);
    gens = h;
    bool grew = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        IntVector w = multiply_coords(base, h[i], h[j]);
        for (auto& v : w) {
          if (!divides(denom, v)) throw std::logic_error("ring closure left the p-power denominator");
          v = divexact(v, denom);
        }
        if (!lattice_contains(h, w)) {
          gens.push_back(std::move(w));
          grew = true;
        }
      }
    if (!grew) return h;
  }
}

// First x = sum c_i (basis_i / D), c in [0,p)^n \ {0} in lexicographic order,
// such that x / p is integral. Returns the scaled vector D*x or an empty vector.
inline IntVector find_integral_quotient(const Order& base, const IntMatrix& basis, const Integer& denom,
                                        std::uint32_t p) {
  const std::size_t n = base.rank();
  const Integer pd = denom * p;
  IntVector basis_traces(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) basis_traces[i] += basis[i][k] * base.basis_trace(k);
  std::vector<Integer> bound(n + 1);
  for (std::size_t k = 0; k <= n; ++k) bound[k] = ipow(pd, n - k);

  auto base_ptr = OrderPtr(std::shared_ptr<const Order>(), &base);  // non-owning view
  std::vector<std::uint32_t> c(n, 0);
  for (;;) {
    std::size_t k = n;
    bool done = true;
    while (k > 0) {
      --k;
      if (++c[k] < p) {
        done = false;
        break;
      }
      c[k] = 0;
    }
    if (done) return {};
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (c[i]) tr += basis_traces[i] * static_cast<unsigned long>(c[i]);
    if (!divides(pd, tr)) continue;
    IntVector h(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (c[i])
        for (std::size_t j = 0; j < n; ++j) h[j] += basis[i][j] * static_cast<unsigned long>(c[i]);
    ZPoly cp = char_poly(OrderElement(base_ptr, h));
    bool integral = true;
    for (std::size_t e = 0; e < n && integral; ++e) integral = divides(bound[e], cp.coeff(e));
    if (integral) return h;
  }
}

}  // namespace detail

// Overorder of O with p-power index that is p-maximal: no element of
// (1/p)*O' outside O' has an integral characteristic polynomial. Built by
// repeatedly adjoining the lexicographically first integral x/p and closing
// under multiplication.
inline Enlargement p_enlarge(const OrderPtr& o, PrimeModulus p) {
  const std::size_t n = o->rank();
  const Integer disc = order_discriminant(*o);
  if (disc == 0) throw InvalidOrder("order has discriminant 0; the algebra is not separable");
  const Integer pp = p.as_integer();
  const unsigned j = valuation(disc, pp) / 2;
  if (j == 0) return {o, identity_matrix(n), 1};

  // The p-part of the index is at most p^j, so the overorder sits inside
  // (1/p^j) O and every lattice can be carried with that denominator.
  const Integer denom = ipow(pp, j);
  IntMatrix basis = identity_matrix(n, denom);
  for (;;) {
    IntVector h = detail::find_integral_quotient(*o, basis, denom, p.value());
    if (h.empty()) break;
    for (auto& v : h) {
      if (!divides(pp, v)) throw std::logic_error("integral element outside the p-power bound");
      v = divexact(v, pp);
    }
    IntMatrix gens = basis;
    gens.push_back(std::move(h));
    basis = detail::ring_closure(*o, std::move(gens), denom);
  }
  Integer d = denom;
  detail::normalize_denominator(basis, d);
  if (d == 1) return {o, identity_matrix(n), 1};
  return {overorder(*o, basis, d), basis, d};
}

inline bool is_p_maximal(const OrderPtr& o, PrimeModulus p) {
  const Integer disc = order_discriminant(*o);
  if (disc != 0 && !divides(p.as_integer() * p.as_integer(), disc)) return true;
  return !p_enlarge(o, p).changed();
}

struct MaximalOrder {
  OrderPtr power_order;  // Z[theta]
  OrderPtr order;        // maximal order
  Integer discriminant;  // fundamental number D
  IntMatrix basis;       // basis of `order` over Z[theta], scaled by `denominator`
  Integer denominator = 1;
};

inline constexpr std::uint64_t kDefaultTrialBound = 1'000'000;

// Enlarges Z[theta] at every prime whose square divides disc(F).
inline MaximalOrder maximal_order(const ZPoly& F, std::uint64_t trial_bound = kDefaultTrialBound,
                                  const std::string& symbol = "a") {
  if (!F.is_monic()) throw NotMonic("maximal_order");
  if (F.degree() == ZPoly::npos || F.degree() < 2) throw InvalidArgument("maximal_order needs degree >= 2");
  MaximalOrder out;
  out.power_order = order_from_polynomial(F, symbol);
  const std::size_t n = F.degree();
  const Integer disc = discriminant(F);
  if (disc == 0) throw InvalidArgument(to_string(F) + " has a repeated root");
  OrderPtr current = out.power_order;
  IntMatrix basis = identity_matrix(n);
  Integer denom = 1;
  for (const auto& [q, e] : trial_factor(disc, trial_bound)) {
    if (e < 2) continue;
    Enlargement step = p_enlarge(current, PrimeModulus::from_integer(q));
    if (!step.changed()) continue;
    IntMatrix composed(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) composed[i][l] += step.basis[i][k] * basis[k][l];
    denom *= step.denominator;
    basis = hnf(composed, n);
    detail::normalize_denominator(basis, denom);
    current = step.order;
  }
  out.basis = basis;
  out.denominator = denom;
  out.order = denom == 1 ? out.power_order : overorder(*out.power_order, basis, denom);
  out.discriminant = order_discriminant(*out.order);
  return out;
}

// ---------------------------------------------------------------------------
// Cubic orders [1, a, b] with a*b rational:
//   a*a = a' a + b b - b b',   b*b = a a + b' b - a a',   a*b = a b.

struct CubicFamily {
  OrderPtr order;
  Integer closed_form_discriminant;
};

inline Integer cubic_family_discriminant(const Integer& a, const Integer& b, const Integer& a1, const Integer& b1) {
  return a1 * a1 * b1 * b1 + 18 * a * b * a1 * b1 - 4 * a * a1 * a1 * a1 - 4 * b * b1 * b1 * b1 - 27 * a * a * b * b;
}

inline CubicFamily cubic_family(const Integer& a, const Integer& b, const Integer& a1, const Integer& b1) {
  if (igcd(igcd(a, b), igcd(a1, b1)) != 1)
    throw InvalidArgument("cubic family parameters must have no common divisor");
  StructureTable t(3, std::vector<IntVector>(3, IntVector(3, 0)));
  for (std::size_t j = 0; j < 3; ++j) {
    t[0][j][j] = 1;
    t[j][0][j] = 1;
  }
  t[1][1] = {-b * b1, a1, b};
  t[2][2] = {-a * a1, a, b1};
  t[1][2] = {a * b, 0, 0};
  t[2][1] = t[1][2];
  return {Order::make({"1", "a", "b"}, std::move(t)), cubic_family_discriminant(a, b, a1, b1)};
}

// ---------------------------------------------------------------------------
// Text forms

// "1+a+b", "2a", "-2+2a-b"; a '*' separates coefficient and label when the
// label starts with a digit or a parenthesis.
inline std::string format_element(const IntVector& coords, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Integer& c = coords[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? "-" : "+";
    else if (c < 0) out += "-";
    const Integer mag = iabs(c);
    if (i == 0 || labels[i] == "1") {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) {
      out += mag.get_str();
      const char lead = labels[i].empty() ? 'x' : labels[i][0];
      if (std::isdigit(static_cast<unsigned char>(lead)) || lead == '(') out += "*";
    }
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

inline std::string to_string(const OrderElement& x) { return format_element(x.coords(), x.order()->labels()); }

namespace detail {
inline nlohmann::ordered_json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}
inline Integer integer_from_json(const nlohmann::ordered_json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  throw ParseError("expected an integer");
}
}  // namespace detail

// {"rank":3,"labels":["1","a","b"],"table":[[[1,0,0],...],...]}
inline nlohmann::ordered_json order_json(const Order& o) {
  nlohmann::ordered_json j;
  j["rank"] = o.rank();
  j["labels"] = o.labels();
  auto table = nlohmann::ordered_json::array();
  for (const auto& row : o.table()) {
    auto r = nlohmann::ordered_json::array();
    for (const auto& v : row) {
      auto c = nlohmann::ordered_json::array();
      for (const auto& x : v) c.push_back(detail::integer_json(x));
      r.push_back(std::move(c));
    }
    table.push_back(std::move(r));
  }
  j["table"] = std::move(table);
  return j;
}

inline OrderPtr order_from_json(const nlohmann::ordered_json& j) {
  try {
    const auto n = j.at("rank").get<std::size_t>();
    auto labels = j.at("labels").get<std::vector<std::string>>();
    StructureTable table;
    for (const auto& row : j.at("table")) {
      std::vector<IntVector> r;
      for (const auto& v : row) {
        IntVector c;
        for (const auto& x : v) c.push_back(detail::integer_from_json(x));
        r.push_back(std::move(c));
      }
      table.push_back(std::move(r));
    }
    if (table.size() != n) throw ParseError("table size does not match rank");
    return Order::make(std::move(labels), std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed order: ") + e.what());
  }
}

}  // namespace dedekind
