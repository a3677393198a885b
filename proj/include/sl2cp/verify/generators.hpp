#pragma once

// Seeded random generators for property checks.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "sl2cp/monoid.hpp"
#include "sl2cp/polynomial.hpp"
#include "sl2cp/rational_matrix.hpp"
#include "sl2cp/repmatrix.hpp"
#include "sl2cp/weights.hpp"

namespace sl2cp::verify {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long range(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  bool coin() { return (engine_() & 1) != 0; }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Random module with total dimension in [1, max_dim].
inline Decomposition random_decomposition(Gen& g, long max_dim) {
  const long target = g.range(1, max_dim);
  Decomposition::map_type l;
  long dim = 0;
  while (dim < target) {
    const long m = g.range(0, std::min(target - dim, 13L) - 1);
    ++l[static_cast<Weight>(m)];
    dim += m + 1;
  }
  return Decomposition(l);
}

inline WeightVector random_admissible(Gen& g, long max_dim) {
  return weights_of_decomposition(random_decomposition(g, max_dim));
}

inline MonoidElement random_element(Gen& g, long max_dim) {
  return MonoidElement::of(random_decomposition(g, max_dim));
}

/// Admissible factored form of degree at most max_degree.
inline CanonicalCP random_canonical(Gen& g, long max_degree) {
  return CanonicalCP::from_weights(random_admissible(g, max_degree));
}

/// Arbitrary (possibly inadmissible) weight vector.
inline WeightVector random_weights(Gen& g, long max_weight, long max_mult) {
  WeightVector::map_type d;
  for (long n = 0; n <= max_weight; ++n)
    if (g.coin()) d[static_cast<Weight>(n)] = static_cast<Multiplicity>(g.range(1, max_mult));
  return WeightVector(d);
}

/// Sparse polynomial with a few small terms.
inline MultiPoly random_poly(Gen& g, long max_terms = 5, long max_exp = 3, long max_coeff = 9) {
  std::vector<MultiPoly::Term> terms;
  const long count = g.range(0, max_terms);
  for (long k = 0; k < count; ++k) {
    const auto e = [&] { return static_cast<unsigned>(g.range(0, max_exp)); };
    const unsigned a0 = e(), a1 = e(), a2 = e(), a3 = e();
    terms.emplace_back(Monomial::of(a0, a1, a2, a3), mpz_class(g.range(-max_coeff, max_coeff)));
  }
  return MultiPoly::from_terms(std::move(terms));
}

inline Point random_point(Gen& g, long radius = 50) {
  Point x;
  for (auto& c : x) c = g.range(-radius, radius);
  return x;
}

inline mpq_class random_rational(Gen& g, long radius = 7) {
  mpq_class q(g.range(-radius, radius), static_cast<unsigned long>(g.range(1, radius)));
  q.canonicalize();
  return q;
}

/// Random composition of irreducibles under direct sum and tensor product,
/// dimension at most max_dim (at least 1).
inline RepTriple random_rep(Gen& g, std::size_t max_dim, int depth = 3) {
  if (depth == 0 || max_dim < 2 || g.range(0, 3) == 0)
    return irrep_matrices(static_cast<Weight>(g.range(0, static_cast<long>(std::min<std::size_t>(max_dim, 8)) - 1)));
  if (g.coin()) {
    const auto left_cap = static_cast<std::size_t>(g.range(1, static_cast<long>(max_dim) - 1));
    RepTriple a = random_rep(g, left_cap, depth - 1);
    RepTriple b = random_rep(g, max_dim - a.dim(), depth - 1);
    return direct_sum(a, b);
  }
  const auto left_cap = static_cast<std::size_t>(g.range(1, static_cast<long>(max_dim / 2)));
  RepTriple a = random_rep(g, left_cap, depth - 1);
  RepTriple b = random_rep(g, max_dim / a.dim(), depth - 1);
  return tensor(a, b);
}

/// Direct sum of irreducibles realizing `dec`, blocks in increasing weight.
inline RepTriple build(const Decomposition& dec) {
  RepTriple t{RationalMatrix(0, 0), RationalMatrix(0, 0), RationalMatrix(0, 0)};
  for (const auto& [m, mult] : dec.entries())
    for (Multiplicity c = 0; c < mult; ++c) t = direct_sum(t, irrep_matrices(m));
  return t;
}

/// h' = [[a, b], [c, -a]] with a, b random rationals and bc = 1 - a^2.
inline RationalMatrix random_h_prime(Gen& g) {
  const mpq_class a = random_rational(g);
  mpq_class b;
  do b = random_rational(g); while (b == 0);
  const mpq_class c = (1 - a * a) / b;
  if (g.coin()) return RationalMatrix{{a, b}, {c, -a}};
  return RationalMatrix{{a, c}, {b, -a}};
}

/// Invertible rational matrix with small entries.
inline RationalMatrix random_invertible(Gen& g, std::size_t n) {
  for (;;) {
    RationalMatrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = random_rational(g, 3);
    if (determinant(p) != 0) return p;
  }
}

/// (P H P^-1, P E P^-1, P F P^-1).
inline RepTriple conjugate(const RepTriple& t, const RationalMatrix& p) {
  const RationalMatrix p_inv = *inverse(p);
  return {p * t.H * p_inv, p * t.E * p_inv, p * t.F * p_inv};
}

}  // namespace sl2cp::verify
