#pragma once

// Characteristic polynomial det(z0 I + z1 H + z2 E + z3 F) of a
// representation: closed form from the weights, exact symbolic determinant,
// randomized exact evaluation, and the specialization identities.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <type_traits>
#include <vector>

#include "sl2cp/error.hpp"
#include "sl2cp/polynomial.hpp"
#include "sl2cp/rational_matrix.hpp"
#include "sl2cp/repmatrix.hpp"
#include "sl2cp/weights.hpp"

namespace sl2cp {

inline constexpr std::size_t kDefaultExactCap = 16;
inline constexpr unsigned kDefaultTrials = 20;
inline constexpr long kSampleRadius = 1'000'000;

namespace detail {

inline bool is_zero(const mpz_class& x) { return x == 0; }
inline bool is_zero(const MultiPoly& x) { return x.is_zero(); }

inline mpz_class divexact(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline MultiPoly divexact(const MultiPoly& a, const MultiPoly& b) {
  return exact_divide(a, b);
}

template <typename Ring>
Ring one() {
  if constexpr (std::is_same_v<Ring, MultiPoly>)
    return MultiPoly::constant(1);
  else
    return Ring(1);
}

}  // namespace detail

/// Fraction-free (Bareiss) determinant of a row-major n x n matrix over an
/// integral domain with exact division.
template <typename Ring>
Ring bareiss_determinant(std::vector<Ring> m, std::size_t n) {
  if (n == 0) return detail::one<Ring>();
  auto at = [&](std::size_t i, std::size_t j) -> Ring& { return m[i * n + j]; };
  Ring prev = detail::one<Ring>();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (detail::is_zero(at(k, k))) {
      std::size_t p = k + 1;
      while (p < n && detail::is_zero(at(p, k))) ++p;
      if (p == n) return Ring();
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      negate = !negate;
    }
    const Ring& pivot = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const bool eliminate = !detail::is_zero(at(i, k));
      for (std::size_t j = k + 1; j < n; ++j) {
        Ring& x = at(i, j);
        if (eliminate) {
          x = detail::divexact(pivot * x - at(i, k) * at(k, j), prev);
        } else if (!detail::is_zero(x)) {
          x = detail::divexact(pivot * x, prev);
        }
      }
    }
    prev = pivot;
  }
  Ring det = at(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

/// Closed form z0^{d0} prod (z0^2 - n^2 u)^{d_n} read off the H spectrum.
inline CanonicalCP charpoly_of_rep(const RepTriple& t) {
  CanonicalCP c = CanonicalCP::from_weights(h_weights(t));
  if (!c.admissible())
    throw Error(ErrorKind::NotAdmissible, "spectrum of H is not realizable");
  return c;
}

namespace detail {

// Entries of D * (z0 I + z1 H + z2 E + z3 F) with D clearing all denominators.
inline std::pair<std::vector<MultiPoly>, mpz_class> integral_pencil(const RepTriple& t) {
  const std::size_t n = t.dim();
  mpz_class den = 1;
  for (const auto* m : {&t.H, &t.E, &t.F}) {
    const mpz_class d = m->common_denominator();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<MultiPoly> out(n * n);
  const std::array<const RationalMatrix*, 3> gens{&t.H, &t.E, &t.F};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<MultiPoly::Term> terms;
      if (i == j) terms.emplace_back(Monomial::of(1), den);
      for (std::size_t g = 0; g < 3; ++g) {
        const mpq_class x = (*gens[g])(i, j) * den;
        if (x != 0) {
          std::array<unsigned, kNumVars> a{};
          a[g + 1] = 1;
          terms.emplace_back(Monomial::of(a[0], a[1], a[2], a[3]), x.get_num());
        }
      }
      out[i * n + j] = MultiPoly::from_terms(std::move(terms));
    }
  return {std::move(out), den};
}

inline void check_square(const RepTriple& t) {
  const std::size_t n = t.H.rows();
  for (const auto* m : {&t.H, &t.E, &t.F})
    if (m->rows() != n || m->cols() != n)
      throw Error(ErrorKind::BadInput, "triple matrices must be square of equal size");
}

}  // namespace detail

/// Expanded determinant of the four-parameter pencil. Throws
/// SizeCapExceeded when dim > exact_cap.
inline MultiPoly pencil_det_exact(const RepTriple& t,
                                  std::size_t exact_cap = kDefaultExactCap) {
  detail::check_square(t);
  if (t.dim() > exact_cap)
    throw Error(ErrorKind::SizeCapExceeded,
                "dimension " + std::to_string(t.dim()) + " exceeds exact cap " +
                    std::to_string(exact_cap));
  auto [entries, den] = detail::integral_pencil(t);
  MultiPoly det = bareiss_determinant(std::move(entries), t.dim());
  if (den != 1) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), t.dim());
    det = exact_divide(det, MultiPoly::constant(scale));
  }
  return det;
}

struct VerificationReport {
  enum class Mode { exact, randomized };

  Mode mode = Mode::exact;
  unsigned trials = 0;
  bool agreed = false;
  std::optional<Point> witness;
};

/// Deterministic sampler of integer points with coordinates uniform in
/// [-radius, radius]. Uses only the mt19937_64 output sequence, which the
/// standard fixes, so points are reproducible across platforms.
class PointSampler {
 public:
  explicit PointSampler(std::uint64_t seed, long radius = kSampleRadius)
      : engine_(seed), span_(2 * static_cast<std::uint64_t>(radius) + 1), radius_(radius) {}

  long next_coordinate() {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span_;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<long>(x % span_) - radius_;
  }

  Point next_point() {
    Point p;
    for (auto& c : p) c = next_coordinate();
    return p;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t span_;
  long radius_;
};

/// Value of the factored form at a point.
inline mpz_class evaluate(const CanonicalCP& c, const Point& x) {
  const mpz_class u = x[1] * x[1] + x[2] * x[3];
  mpz_class value, factor;
  mpz_pow_ui(value.get_mpz_t(), x[0].get_mpz_t(), c.d0());
  for (const auto& [n, dn] : c.factors()) {
    factor = x[0] * x[0] - mpz_class(n) * n * u;
    mpz_pow_ui(factor.get_mpz_t(), factor.get_mpz_t(), dn);
    value *= factor;
  }
  return value;
}

/// D^dim * det(x0 I + x1 H + x2 E + x3 F) with D the common denominator,
/// computed by fraction-free elimination over the integers.
inline mpz_class scaled_pencil_value(const RepTriple& t, const Point& x, mpz_class* den_out) {
  const std::size_t n = t.dim();
  mpz_class den = 1;
  for (const auto* m : {&t.H, &t.E, &t.F}) {
    const mpz_class d = m->common_denominator();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> entries(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class v = x[1] * t.H(i, j) + x[2] * t.E(i, j) + x[3] * t.F(i, j);
      if (i == j) v += x[0];
      v *= den;
      entries[i * n + j] = v.get_num();
    }
  if (den_out) *den_out = den;
  return bareiss_determinant(std::move(entries), n);
}

/// Probabilistic identity test of det(pencil) against the expansion of
/// `candidate`, every evaluation exact. Deterministic in (t, candidate,
/// trials, seed).
inline VerificationReport pencil_verify_randomized(const RepTriple& t,
                                                   const CanonicalCP& candidate,
                                                   unsigned trials,
                                                   std::uint64_t seed) {
  detail::check_square(t);
  if (trials == 0) throw Error(ErrorKind::BadInput, "trials must be positive");
  VerificationReport report;
  report.mode = VerificationReport::Mode::randomized;
  report.trials = trials;
  report.agreed = true;
  PointSampler sampler(seed);
  for (unsigned k = 0; k < trials; ++k) {
    const Point x = sampler.next_point();
    mpz_class den;
    const mpz_class lhs = scaled_pencil_value(t, x, &den);
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), t.dim());
    if (lhs != scale * evaluate(candidate, x)) {
      report.agreed = false;
      report.witness = x;
      break;
    }
  }
  return report;
}

/// Exact comparison of the symbolic determinant with the expansion.
inline VerificationReport pencil_verify_exact(const RepTriple& t,
                                              const CanonicalCP& candidate,
                                              std::size_t exact_cap = kDefaultExactCap) {
  const MultiPoly det = pencil_det_exact(t, exact_cap);
  const MultiPoly expected = expand_canonical(candidate);
  VerificationReport report;
  report.mode = VerificationReport::Mode::exact;
  report.agreed = det == expected;
  if (!report.agreed) {
    // Any point where the difference is nonzero; a nonzero polynomial of
    // degree d cannot vanish on all of {0..d}^4.
    const MultiPoly diff = det - expected;
    const unsigned d = diff.total_degree();
    for (unsigned a = 0; a <= d && !report.witness; ++a)
      for (unsigned b = 0; b <= d && !report.witness; ++b)
        for (unsigned c = 0; c <= d && !report.witness; ++c)
          for (unsigned e = 0; e <= d && !report.witness; ++e) {
            const Point x{a, b, c, e};
            if (evaluate(diff, x) != 0) report.witness = x;
          }
  }
  return report;
}

/// Module structure from the characteristic polynomial: l_m = d_m - d_{m+2}.
inline Decomposition decompose_charpoly(const CanonicalCP& c) {
  return decomposition_of_weights(c.weights());
}

/// Paired form of f_m(z0, z1) = det(z0 I + z1 H + E + F) for the irreducible
/// of highest weight m: z0 prod_l (z0^2 - 4 l^2 (1 + z1^2)) for even m,
/// prod_l (z0^2 - (2l+1)^2 (1 + z1^2)) for odd m.
inline MultiPoly hu_zhang_product(Weight m) {
  const MultiPoly z0 = MultiPoly::variable(0);
  const MultiPoly z1 = MultiPoly::variable(1);
  const MultiPoly s = MultiPoly::constant(1) + z1 * z1;
  MultiPoly result = MultiPoly::constant(1);
  if (m % 2 == 0) {
    result = z0;
    for (Weight l = 1; l <= m / 2; ++l)
      result *= z0 * z0 - mpz_class(4) * l * l * s;
  } else {
    for (Weight l = 0; l <= (m - 1) / 2; ++l)
      result *= z0 * z0 - mpz_class(2 * l + 1) * (2 * l + 1) * s;
  }
  return result;
}

/// f(z0, z1, 1, 1) of a polynomial in z0..z3.
inline MultiPoly specialize_e_unit(const MultiPoly& p) {
  return substitute(p, {MultiPoly::variable(0), MultiPoly::variable(1),
                        MultiPoly::constant(1), MultiPoly::constant(1)});
}

/// f(z0, 1, z1, z1) of a polynomial in z0..z3.
inline MultiPoly specialize_h_unit(const MultiPoly& p) {
  return substitute(p, {MultiPoly::variable(0), MultiPoly::constant(1),
                        MultiPoly::variable(1), MultiPoly::variable(1)});
}

/// det(z0 I + z1 H + E + F) of the irreducible of weight m equals the
/// paired product, as polynomials.
inline bool hu_zhang_check(Weight m, std::size_t exact_cap = kDefaultExactCap) {
  return specialize_e_unit(pencil_det_exact(irrep_matrices(m), exact_cap)) ==
         hu_zhang_product(m);
}

/// f(z0, z1, 1, 1) = f(z0, 1, z1, z1) as polynomials.
inline bool symmetry_identity_check(const RepTriple& t,
                                    std::size_t exact_cap = kDefaultExactCap) {
  const MultiPoly det = pencil_det_exact(t, exact_cap);
  return specialize_e_unit(det) == specialize_h_unit(det);
}

}  // namespace sl2cp
