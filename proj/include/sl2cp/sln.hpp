#pragma once

// sl(n) in the basis h_1..h_{n-1}, e_ij (i != j, lexicographic), its adjoint
// representation, and the restriction along the sl(2)-triple at a simple root.

#include <string>
#include <vector>

#include "sl2cp/charpoly.hpp"
#include "sl2cp/error.hpp"
#include "sl2cp/polynomial.hpp"
#include "sl2cp/rational_matrix.hpp"
#include "sl2cp/repmatrix.hpp"

namespace sl2cp {

class SlnBasis {
 public:
  /// Throws IndexOutOfRange for n < 2.
  explicit SlnBasis(std::size_t n) : n_(n) {
    if (n < 2) throw Error(ErrorKind::IndexOutOfRange, "sl(n) needs n >= 2");
    for (std::size_t i = 1; i < n; ++i) {
      RationalMatrix h(n, n);
      h(i - 1, i - 1) = 1;
      h(i, i) = -1;
      elements_.push_back(std::move(h));
      labels_.push_back("h" + std::to_string(i));
    }
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j) {
        if (i == j) continue;
        elements_.push_back(unit(i, j));
        labels_.push_back("e" + std::to_string(i) + "," + std::to_string(j));
      }
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<RationalMatrix>& elements() const noexcept { return elements_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// h_i, 1 <= i <= n-1.
  const RationalMatrix& h(std::size_t i) const {
    if (i < 1 || i >= n_) throw Error(ErrorKind::IndexOutOfRange, "h index out of range");
    return elements_[i - 1];
  }

  /// e_ij with entry 1 at row i, column j (1-based).
  RationalMatrix unit(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_ || i == j)
      throw Error(ErrorKind::IndexOutOfRange, "e index out of range");
    RationalMatrix e(n_, n_);
    e(i - 1, j - 1) = 1;
    return e;
  }

  /// Coordinates of a trace-zero n x n matrix. Throws NotInAlgebra.
  std::vector<mpq_class> coordinates(const RationalMatrix& y) const {
    check_member(y);
    std::vector<mpq_class> c;
    c.reserve(size());
    // diag(Y) = sum_k c_k (e_kk - e_{k+1,k+1})  =>  c_k = Y_11 + ... + Y_kk
    mpq_class partial = 0;
    for (std::size_t k = 0; k + 1 < n_; ++k) {
      partial += y(k, k);
      c.push_back(partial);
    }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j) c.push_back(y(i, j));
    return c;
  }

  void check_member(const RationalMatrix& x) const {
    if (x.rows() != n_ || x.cols() != n_)
      throw Error(ErrorKind::NotInAlgebra, "matrix has the wrong size for sl(n)");
    if (x.trace() != 0) throw Error(ErrorKind::NotInAlgebra, "matrix has nonzero trace");
  }

 private:
  std::size_t n_;
  std::vector<RationalMatrix> elements_;
  std::vector<std::string> labels_;
};

/// Matrix of Y -> XY - YX in the ordered basis; column k holds [X, b_k].
inline RationalMatrix ad_matrix(const SlnBasis& basis, const RationalMatrix& x) {
  basis.check_member(x);
  const std::size_t d = basis.size();
  RationalMatrix ad(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const RationalMatrix& y = basis.elements()[k];
    const auto col = basis.coordinates(x * y - y * x);
    for (std::size_t r = 0; r < d; ++r) ad(r, k) = col[r];
  }
  return ad;
}

/// (ad h_i, ad e_{i,i+1}, ad e_{i+1,i}) on sl(n). ad h_i is diagonal in the
/// ordered basis. Throws IndexOutOfRange unless n >= 2 and 1 <= i <= n-1.
inline RepTriple ad_restriction_rep(std::size_t n, std::size_t i) {
  if (n < 2 || i < 1 || i >= n)
    throw Error(ErrorKind::IndexOutOfRange,
                "need n >= 2 and 1 <= i <= n-1 (n=" + std::to_string(n) +
                    ", i=" + std::to_string(i) + ")");
  const SlnBasis basis(n);
  return {ad_matrix(basis, basis.h(i)), ad_matrix(basis, basis.unit(i, i + 1)),
          ad_matrix(basis, basis.unit(i + 1, i))};
}

inline CanonicalCP adjoint_charpoly(std::size_t n, std::size_t i) {
  return charpoly_of_rep(ad_restriction_rep(n, i));
}

/// adjoint_charpoly(n, i) is the same for every simple root index i.
inline bool simple_root_equivalence(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::IndexOutOfRange, "sl(n) needs n >= 2");
  const CanonicalCP first = adjoint_charpoly(n, 1);
  for (std::size_t i = 2; i < n; ++i)
    if (!(adjoint_charpoly(n, i) == first)) return false;
  return true;
}

/// Zero-weight multiplicity of ad restricted to a simple-root sl(2): the
/// n-1 Cartan directions plus the (n-2)(n-3) root vectors orthogonal to the
/// root, equivalently (n^2-1) - 2 - 2(2n-4).
inline long dimension_consistent_z0_exponent(long n) { return n * n - 4 * n + 5; }

/// The exponent n^2 - 5n + 6 as printed with the closed form for this
/// restriction. It does not satisfy d0 + 2 sum d_n = n^2 - 1.
inline long printed_z0_exponent(long n) { return n * n - 5 * n + 6; }

struct AdjointReport {
  long n = 0;
  long printed_z0_exponent = 0;
  long computed_z0_exponent = 0;
  bool match = false;
};

/// Compares the computed z0-exponent (i = 1) with the printed one.
inline AdjointReport adjoint_report(std::size_t n) {
  const CanonicalCP c = adjoint_charpoly(n, 1);
  AdjointReport r;
  r.n = static_cast<long>(n);
  r.printed_z0_exponent = printed_z0_exponent(r.n);
  r.computed_z0_exponent = static_cast<long>(c.d0());
  r.match = r.printed_z0_exponent == r.computed_z0_exponent;
  return r;
}

}  // namespace sl2cp
