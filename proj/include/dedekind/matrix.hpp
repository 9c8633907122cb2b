#pragma once

// Exact integer linear algebra on small dense matrices: fraction-free
// determinants, Hermite normal form of row lattices, lattice membership, and
// row reduction over F_p.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dedekind/error.hpp"
#include "dedekind/integer.hpp"

namespace dedekind {

inline IntMatrix identity_matrix(std::size_t n, const Integer& scale = 1) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = scale;
  return m;
}

// Bareiss elimination. Every division is exact, so intermediate entries stay
// bounded by minors of the input.
inline Integer det_bareiss(IntMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = divexact(t, prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

struct HnfResult {
  IntMatrix basis;      // n x n, lower triangular
  IntMatrix transform;  // basis[i] = sum_k transform[i][k] * rows[k]; empty unless requested
};

namespace detail {

inline void axpy_row(IntVector& dst, const IntVector& src, const Integer& q) {
  for (std::size_t j = 0; j < dst.size(); ++j)
    if (src[j] != 0) dst[j] -= q * src[j];
}

}  // namespace detail

// Hermite normal form of the lattice spanned by `rows` (each of length n).
// Convention: lower triangular, row i has its pivot in column i, pivots are
// positive and each entry left of a pivot lies in [0, pivot of its column).
// This is the layout of bases like [2, a, 1+b] written over [1, a, b].
inline HnfResult hnf_with_transform(const IntMatrix& rows, std::size_t n, bool track = true) {
  const std::size_t m = rows.size();
  IntMatrix a = rows;
  for (const auto& r : a)
    if (r.size() != n) throw InvalidArgument("row length does not match lattice dimension");
  IntMatrix t;
  if (track) t = identity_matrix(m);

  std::vector<bool> used(m, false);
  std::vector<std::size_t> pivot_row(n, 0);
  for (std::size_t col = n; col-- > 0;) {
    std::size_t best = m;
    for (;;) {
      best = m;
      for (std::size_t r = 0; r < m; ++r) {
        if (used[r] || a[r][col] == 0) continue;
        if (best == m || iabs(a[r][col]) < iabs(a[best][col])) best = r;
      }
      if (best == m) throw RankDeficient("generators do not span a full-rank lattice");
      bool others = false;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == best || used[r] || a[r][col] == 0) continue;
        Integer q = fdiv(a[r][col], a[best][col]);
        detail::axpy_row(a[r], a[best], q);
        if (track) detail::axpy_row(t[r], t[best], q);
        if (a[r][col] != 0) others = true;
      }
      if (!others) break;
    }
    if (a[best][col] < 0) {
      for (auto& v : a[best]) v = -v;
      if (track)
        for (auto& v : t[best]) v = -v;
    }
    used[best] = true;
    pivot_row[col] = best;
  }

  HnfResult out;
  out.basis.resize(n);
  if (track) out.transform.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    out.basis[c] = a[pivot_row[c]];
    if (track) out.transform[c] = t[pivot_row[c]];
  }
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t c = r; c-- > 0;) {
      Integer q = fdiv(out.basis[r][c], out.basis[c][c]);
      if (q == 0) continue;
      detail::axpy_row(out.basis[r], out.basis[c], q);
      if (track) detail::axpy_row(out.transform[r], out.transform[c], q);
    }
  }
  return out;
}

inline IntMatrix hnf(const IntMatrix& rows, std::size_t n) { return hnf_with_transform(rows, n, false).basis; }

// Coordinates x with x * basis = v for a lower-triangular HNF basis, or
// nothing when v is not in the lattice.
inline std::optional<IntVector> lattice_coordinates(const IntMatrix& basis, IntVector v) {
  const std::size_t n = basis.size();
  IntVector x(n, 0);
  for (std::size_t col = n; col-- > 0;) {
    if (!divides(basis[col][col], v[col])) return std::nullopt;
    x[col] = divexact(v[col], basis[col][col]);
    if (x[col] != 0) detail::axpy_row(v, basis[col], x[col]);
  }
  return x;
}

inline bool lattice_contains(const IntMatrix& basis, const IntVector& v) {
  return lattice_coordinates(basis, v).has_value();
}

// Canonical representative of v modulo the lattice: coordinate i ends up in
// [0, basis[i][i]).
inline IntVector reduce_modulo_lattice(const IntMatrix& basis, IntVector v) {
  for (std::size_t col = basis.size(); col-- > 0;) {
    Integer q = fdiv(v[col], basis[col][col]);
    if (q != 0) detail::axpy_row(v, basis[col], q);
  }
  return v;
}

inline Integer diagonal_product(const IntMatrix& lower) {
  Integer d = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) d *= lower[i][i];
  return d;
}

// ---------------------------------------------------------------------------
// Linear algebra over F_p on small vectors of residues.

using ResidueVector = std::vector<std::uint64_t>;

struct Echelon {
  std::vector<ResidueVector> rows;  // reduced row echelon form, nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline Echelon rref_mod(std::vector<ResidueVector> rows, std::uint64_t p) {
  Echelon out;
  if (rows.empty()) return out;
  const std::size_t n = rows[0].size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const std::uint64_t inv = inverse_mod(rows[r][col], p);
    for (auto& v : rows[r]) v = v % p * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r) continue;
      const std::uint64_t f = rows[i][col] % p;
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = (rows[i][j] % p + p - f * rows[r][j] % p) % p;
    }
    out.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

// Reduces v against an echelon basis; the result is zero iff v lies in the span.
inline ResidueVector reduce_against(const Echelon& e, ResidueVector v, std::uint64_t p) {
  for (std::size_t i = 0; i < e.rows.size(); ++i) {
    const std::uint64_t f = v[e.pivots[i]] % p;
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] % p + p - f * e.rows[i][j] % p) % p;
  }
  return v;
}

inline bool is_zero_vector(const ResidueVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
}

inline std::size_t rank_mod(const std::vector<ResidueVector>& rows, std::uint64_t p) {
  return rref_mod(rows, p).rows.size();
}

}  // namespace dedekind
