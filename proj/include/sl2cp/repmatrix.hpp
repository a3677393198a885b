#pragma once

// Exact matrix realizations of sl(2) representations.

#include <gmpxx.h>

#include <map>
#include <vector>

#include "sl2cp/error.hpp"
#include "sl2cp/rational_matrix.hpp"
#include "sl2cp/weights.hpp"

namespace sl2cp {

/// Images of h, e1, e2. Constructors in this header keep H diagonal with
/// integer entries; triples read from outside are checked with validate().
struct RepTriple {
  RationalMatrix H;
  RationalMatrix E;
  RationalMatrix F;

  std::size_t dim() const noexcept { return H.rows(); }

  friend bool operator==(const RepTriple&, const RepTriple&) = default;
};

/// [e,f] = h, [h,e] = 2e, [h,f] = -2f, checked exactly.
inline bool check_brackets(const RationalMatrix& h, const RationalMatrix& e,
                           const RationalMatrix& f) {
  const std::size_t n = h.rows();
  for (const auto* m : {&h, &e, &f})
    if (m->rows() != n || m->cols() != n) return false;
  return e * f - f * e == h &&
         h * e - e * h == mpq_class(2) * e &&
         h * f - f * h == mpq_class(-2) * f;
}

inline bool check_brackets(const RepTriple& t) { return check_brackets(t.H, t.E, t.F); }

/// Throws BadInput unless the triple is square, H is diagonal with integer
/// entries and the bracket relations hold.
inline void validate(const RepTriple& t) {
  const std::size_t n = t.H.rows();
  for (const auto* m : {&t.H, &t.E, &t.F})
    if (m->rows() != n || m->cols() != n)
      throw Error(ErrorKind::BadInput, "triple matrices must be square of equal size");
  if (!t.H.is_diagonal() || !t.H.is_integral())
    throw Error(ErrorKind::BadInput, "H must be diagonal with integer entries");
  if (!check_brackets(t))
    throw Error(ErrorKind::BadInput, "bracket relations do not hold");
}

/// Irreducible module of highest weight m in the basis v_0..v_m with
/// H v_i = (m-2i) v_i, E v_i = (m-i+1) v_{i-1}, F v_i = (i+1) v_{i+1}.
inline RepTriple irrep_matrices(Weight m) {
  const std::size_t n = std::size_t{m} + 1;
  RepTriple t{RationalMatrix(n, n), RationalMatrix(n, n), RationalMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    t.H(i, i) = static_cast<long>(m) - 2 * static_cast<long>(i);
    if (i > 0) t.E(i - 1, i) = static_cast<unsigned long>(m - i + 1);
    if (i + 1 < n) t.F(i + 1, i) = static_cast<unsigned long>(i + 1);
  }
  return t;
}

inline RepTriple direct_sum(const RepTriple& a, const RepTriple& b) {
  return {block_diag(a.H, b.H), block_diag(a.E, b.E), block_diag(a.F, b.F)};
}

/// X -> X_a (x) I + I (x) X_b for each generator.
inline RepTriple tensor(const RepTriple& a, const RepTriple& b) {
  const auto ia = RationalMatrix::identity(a.dim());
  const auto ib = RationalMatrix::identity(b.dim());
  return {kron(a.H, ib) + kron(ia, b.H), kron(a.E, ib) + kron(ia, b.E),
          kron(a.F, ib) + kron(ia, b.F)};
}

/// Multiplicities of the diagonal of H. Throws AsymmetricSpectrum when
/// d_n != d_{-n} for some n, BadInput when H is not integral diagonal.
inline WeightVector h_weights(const RepTriple& t) {
  if (!t.H.is_square() || !t.H.is_diagonal() || !t.H.is_integral())
    throw Error(ErrorKind::BadInput, "H must be diagonal with integer entries");
  std::map<long, Multiplicity> counts;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    const mpz_class& w = t.H(i, i).get_num();
    if (!w.fits_slong_p()) throw Error(ErrorKind::BadInput, "weight out of range");
    ++counts[w.get_si()];
  }
  WeightVector::map_type d;
  for (const auto& [w, mult] : counts) {
    auto mirror = counts.find(-w);
    if (mirror == counts.end() || mirror->second != mult)
      throw Error(ErrorKind::AsymmetricSpectrum,
                  "multiplicity of " + std::to_string(w) + " differs from its negative");
    if (w >= 0) d[static_cast<Weight>(w)] = mult;
  }
  return WeightVector(d);
}

/// Conjugate of the standard 2x2 basis carrying h onto a prescribed h'.
struct ConjugateBasis {
  RationalMatrix A;
  RationalMatrix h;
  RationalMatrix e1;
  RationalMatrix e2;
};

inline const RationalMatrix& standard_h() {
  static const RationalMatrix h{{1, 0}, {0, -1}};
  return h;
}
inline const RationalMatrix& standard_e1() {
  static const RationalMatrix e{{0, 1}, {0, 0}};
  return e;
}
inline const RationalMatrix& standard_e2() {
  static const RationalMatrix f{{0, 0}, {1, 0}};
  return f;
}

/// Finds invertible A with A h A^{-1} = hp and returns the conjugated triple.
/// The columns of A are eigenvectors of hp for +1 and -1, each scaled so its
/// first nonzero coordinate is 1. Throws BadInput unless hp is 2x2 with
/// trace 0 and determinant -1.
inline ConjugateBasis conjugate_basis(const RationalMatrix& hp) {
  if (hp.rows() != 2 || hp.cols() != 2)
    throw Error(ErrorKind::BadInput, "h' must be 2x2");
  if (hp.trace() != 0) throw Error(ErrorKind::BadInput, "h' must have trace 0");
  if (determinant(hp) != -1) throw Error(ErrorKind::BadInput, "h' must have determinant -1");

  RationalMatrix A(2, 2);
  const auto id = RationalMatrix::identity(2);
  for (int col = 0; col < 2; ++col) {
    const mpq_class lambda = col == 0 ? 1 : -1;
    const auto kernel = null_space(hp - lambda * id);
    // Eigenvalues are +1 and -1, each simple.
    auto v = kernel.at(0);
    const mpq_class lead = v[0] != 0 ? v[0] : v[1];
    for (std::size_t i = 0; i < 2; ++i) A(i, static_cast<std::size_t>(col)) = v[i] / lead;
  }
  const auto A_inv = inverse(A);
  if (!A_inv) throw Error(ErrorKind::BadInput, "eigenvector matrix is singular");
  return {A, A * standard_h() * *A_inv, A * standard_e1() * *A_inv,
          A * standard_e2() * *A_inv};
}

}  // namespace sl2cp
