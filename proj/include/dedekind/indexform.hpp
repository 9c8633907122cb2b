#pragma once

// Index form of an order: det of the coordinates of 1, w, ..., w^(n-1) for
// the generic element w = z + x1*w_2 + ... + x_{n-1}*w_n.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "json.hpp"

#include "dedekind/error.hpp"
#include "dedekind/fppoly.hpp"
#include "dedekind/integer.hpp"
#include "dedekind/order.hpp"

namespace dedekind {

using Exponents = std::vector<unsigned>;

// Graded lexicographic order, largest term first.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;
  }
};

class MultiPoly {
 public:
  using Terms = std::map<Exponents, Integer, GrlexDescending>;

  explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(std::vector<std::string> vars, const Integer& c) {
    MultiPoly m(std::move(vars));
    m.add_term(Exponents(m.vars_.size(), 0), c);
    return m;
  }
  static MultiPoly variable(std::vector<std::string> vars, std::size_t i) {
    MultiPoly m(std::move(vars));
    Exponents e(m.vars_.size(), 0);
    e.at(i) = 1;
    m.add_term(e, 1);
    return m;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Integer& c) {
    if (e.size() != vars_.size()) throw InvalidArgument("exponent vector has wrong length");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Degree in variable i, 0 for the zero polynomial.
  unsigned degree_in(std::size_t i) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  std::vector<std::string> vars_;
  Terms terms_;
};

inline void require_same_variables(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables() != b.variables()) throw InvalidArgument("polynomials in different variables");
}

inline MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  require_same_variables(a, b);
  MultiPoly r = a;
  for (const auto& [e, c] : b.terms()) r.add_term(e, c);
  return r;
}

inline MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r(a.variables());
  for (const auto& [e, c] : a.terms()) r.add_term(e, -c);
  return r;
}

inline MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

inline MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  require_same_variables(a, b);
  MultiPoly r(a.variables());
  Exponents e(a.variables().size());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

inline MultiPoly operator*(const Integer& s, const MultiPoly& a) {
  MultiPoly r(a.variables());
  for (const auto& [e, c] : a.terms()) r.add_term(e, s * c);
  return r;
}

inline Integer evaluate(const MultiPoly& f, const IntVector& point) {
  if (point.size() != f.variables().size()) throw InvalidArgument("point has wrong dimension");
  Integer acc = 0;
  for (const auto& [e, c] : f.terms()) {
    Integer t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= ipow(point[i], e[i]);
    acc += t;
  }
  return acc;
}

// Coefficients reduced into [0, p).
inline MultiPoly reduce_coefficients(const MultiPoly& f, PrimeModulus p) {
  MultiPoly r(f.variables());
  for (const auto& [e, c] : f.terms()) r.add_term(e, fmod(c, p.as_integer()));
  return r;
}

// Removes variable i, which must not occur.
inline MultiPoly drop_variable(const MultiPoly& f, std::size_t i) {
  if (f.degree_in(i) != 0) throw std::logic_error("variable " + f.variables()[i] + " still occurs");
  std::vector<std::string> vars = f.variables();
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(i));
  MultiPoly r(vars);
  for (const auto& [e, c] : f.terms()) {
    Exponents shorter = e;
    shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i));
    r.add_term(shorter, c);
  }
  return r;
}

// "2x^3 - x^2y - xy^2 - 2y^3". Single-letter variables are juxtaposed;
// longer names are joined with '*'.
inline std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  bool single = true;
  for (const auto& v : f.variables()) single = single && v.size() == 1;
  const std::string sep = single ? "" : "*";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    if (out.empty()) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    const Integer mag = iabs(c);
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += sep;
      mono += f.variables()[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) out += mag.get_str();
    else if (mag == 1) out += mono;
    else out += mag.get_str() + sep + mono;
  }
  return out;
}

inline std::vector<std::string> index_form_variables(std::size_t n) {
  if (n == 2) return {"x"};
  if (n == 3) return {"x", "y"};
  std::vector<std::string> v;
  for (std::size_t i = 1; i < n; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

inline constexpr std::size_t kIndexFormMaxRank = 5;

namespace detail {

using SymbolicVector = std::vector<MultiPoly>;

inline SymbolicVector symbolic_mul(const Order& o, const SymbolicVector& a, const SymbolicVector& b) {
  const std::size_t n = o.rank();
  const auto& vars = a[0].variables();
  SymbolicVector out(n, MultiPoly(vars));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      const MultiPoly ab = a[i] * b[j];
      const IntVector& t = o.product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (t[k] != 0) out[k] = out[k] + t[k] * ab;
    }
  }
  return out;
}

// Leibniz expansion; fine for n <= 5.
inline MultiPoly symbolic_det(const std::vector<SymbolicVector>& m) {
  const std::size_t n = m.size();
  const auto& vars = m[0][0].variables();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly det(vars);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    MultiPoly term = MultiPoly::constant(vars, sign);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term = term * m[i][perm[i]];
    det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

}  // namespace detail

// Homogeneous of degree n(n-1)/2; evaluating at the non-identity coordinates
// of theta gives +-element_index(theta). The identity coordinate z is kept
// symbolic and must cancel.
inline MultiPoly index_form(const Order& o) {
  const std::size_t n = o.rank();
  if (n > kIndexFormMaxRank)
    throw BoundExceeded("index form is limited to rank " + std::to_string(kIndexFormMaxRank));
  std::vector<std::string> vars{"z"};
  for (const auto& v : index_form_variables(n)) vars.push_back(v);
  if (n == 1) return MultiPoly::constant({}, 1);

  detail::SymbolicVector omega;
  for (std::size_t i = 0; i < n; ++i) omega.push_back(MultiPoly::variable(vars, i));
  detail::SymbolicVector pw(n, MultiPoly(vars));
  pw[0] = MultiPoly::constant(vars, 1);
  std::vector<detail::SymbolicVector> rows;
  for (std::size_t k = 0; k < n; ++k) {
    rows.push_back(pw);
    if (k + 1 < n) pw = detail::symbolic_mul(o, pw, omega);
  }
  return drop_variable(detail::symbolic_det(rows), 0);
}

inline MultiPoly index_form(const OrderPtr& o) { return index_form(*o); }

inline constexpr std::uint64_t kValueSearchLimit = 1'000'000;

// True iff p divides f at every integer point, decided over F_p^v.
inline bool common_value_divisor(const MultiPoly& f, PrimeModulus p) {
  const std::size_t v = f.variables().size();
  if (ipow(p.as_integer(), v) > from_u64(kValueSearchLimit))
    throw BoundExceeded("p^v exceeds " + std::to_string(kValueSearchLimit) + " evaluation points");
  const std::uint32_t pv = p.value();
  // Per-term residues and exponents for a fast inner loop.
  std::vector<std::pair<Exponents, std::uint32_t>> terms;
  for (const auto& [e, c] : f.terms()) terms.emplace_back(e, fp::reduce(c, pv));
  std::vector<std::uint32_t> point(v, 0);
  for (;;) {
    std::uint32_t value = 0;
    for (const auto& [e, c] : terms) {
      std::uint32_t t = c;
      for (std::size_t i = 0; i < v && t; ++i)
        if (e[i]) t = fp::mul(t, fp::pow(point[i], e[i], pv), pv);
      value = fp::add(value, t, pv);
    }
    if (value != 0) return false;
    std::size_t k = v;
    bool done = true;
    while (k > 0) {
      --k;
      if (++point[k] < pv) {
        done = false;
        break;
      }
      point[k] = 0;
    }
    if (done) return true;
  }
}

inline nlohmann::ordered_json multipoly_json(const MultiPoly& f) {
  nlohmann::ordered_json j;
  j["variables"] = f.variables();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exponents", e}, {"coefficient", detail::integer_json(c)}});
  j["terms"] = std::move(terms);
  j["text"] = to_string(f);
  return j;
}

}  // namespace dedekind
