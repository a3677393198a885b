#pragma once

// Reference computations used only to check the library. Each one takes a
// deliberately different route from the code it checks: cofactor expansion
// instead of fraction-free elimination, explicit eigenvalue lists instead of
// multiplicity arithmetic, term-by-term products instead of hashing.

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <vector>

#include "sl2cp/polynomial.hpp"
#include "sl2cp/rational_matrix.hpp"
#include "sl2cp/repmatrix.hpp"
#include "sl2cp/weights.hpp"

namespace sl2cp::verify {

/// Every h-eigenvalue of the module, with repetition.
inline std::vector<long> eigenvalue_list(const Decomposition& dec) {
  std::vector<long> out;
  for (const auto& [m, mult] : dec.entries())
    for (Multiplicity c = 0; c < mult; ++c)
      for (long i = 0; i <= static_cast<long>(m); ++i) out.push_back(static_cast<long>(m) - 2 * i);
  return out;
}

inline std::vector<long> eigenvalue_list(const WeightVector& w) {
  std::vector<long> out;
  for (const auto& [n, mult] : w.entries())
    for (Multiplicity c = 0; c < mult; ++c) {
      out.push_back(static_cast<long>(n));
      if (n != 0) out.push_back(-static_cast<long>(n));
    }
  return out;
}

/// Counts of the nonnegative entries of a symmetric eigenvalue list.
inline WeightVector count_weights(const std::vector<long>& eigenvalues) {
  WeightVector::map_type d;
  for (long x : eigenvalues)
    if (x >= 0) ++d[static_cast<Weight>(x)];
  return WeightVector(d);
}

inline WeightVector naive_weights(const Decomposition& dec) {
  return count_weights(eigenvalue_list(dec));
}

/// All pairwise sums of the two eigenvalue lists.
inline WeightVector naive_convolve(const WeightVector& a, const WeightVector& b) {
  std::vector<long> sums;
  for (long x : eigenvalue_list(a))
    for (long y : eigenvalue_list(b)) sums.push_back(x + y);
  return count_weights(sums);
}

/// Peels off the top weight N with multiplicity l_N = d_N, removes the
/// weights of l_N copies of the irreducible of weight N and recurses.
/// Returns false when some multiplicity would go negative.
inline bool recursive_decomposition(const WeightVector& w, Decomposition& out) {
  std::map<long, long> d;
  for (const auto& [n, mult] : w.entries()) d[static_cast<long>(n)] = static_cast<long>(mult);
  Decomposition::map_type l;
  while (!d.empty()) {
    const long top = d.rbegin()->first;
    const long count = d.rbegin()->second;
    l[static_cast<Weight>(top)] = static_cast<Multiplicity>(count);
    for (long n = top % 2; n <= top; n += 2) {
      long& slot = d[n];
      slot -= count;
      if (slot < 0) return false;
    }
    std::erase_if(d, [](const auto& kv) { return kv.second == 0; });
  }
  out = Decomposition(l);
  return true;
}

/// Schoolbook product through an ordered map of exponent tuples.
inline MultiPoly naive_multiply(const MultiPoly& p, const MultiPoly& q) {
  std::map<std::array<unsigned, kNumVars>, mpz_class> acc;
  for (const auto& [mp, cp] : p.terms())
    for (const auto& [mq, cq] : q.terms()) {
      std::array<unsigned, kNumVars> e{};
      for (std::size_t v = 0; v < kNumVars; ++v) e[v] = mp[v] + mq[v];
      acc[e] += cp * cq;
    }
  std::vector<MultiPoly::Term> terms;
  for (const auto& [e, c] : acc) terms.emplace_back(Monomial::of(e[0], e[1], e[2], e[3]), c);
  return MultiPoly::from_terms(std::move(terms));
}

namespace detail {

inline MultiPoly cofactor_expand(const std::vector<MultiPoly>& m, std::size_t n,
                                 std::size_t row, std::vector<bool>& used) {
  if (row == n) return MultiPoly::constant(1);
  MultiPoly total;
  int sign = 1;
  for (std::size_t col = 0; col < n; ++col) {
    if (used[col]) continue;
    const MultiPoly& entry = m[row * n + col];
    if (!entry.is_zero()) {
      used[col] = true;
      MultiPoly minor = naive_multiply(entry, cofactor_expand(m, n, row + 1, used));
      used[col] = false;
      total = sign > 0 ? total + minor : total - minor;
    }
    sign = -sign;
  }
  return total;
}

}  // namespace detail

/// Laplace expansion along successive rows, skipping zero entries.
/// Exponential in general; intended for small or sparse matrices.
inline MultiPoly cofactor_determinant(const std::vector<MultiPoly>& m, std::size_t n) {
  std::vector<bool> used(n, false);
  return detail::cofactor_expand(m, n, 0, used);
}

/// The pencil z0 I + z1 H + z2 E + z3 F of an integral triple.
inline std::vector<MultiPoly> pencil_entries(const RepTriple& t) {
  const std::size_t n = t.dim();
  std::vector<MultiPoly> out(n * n);
  const std::array<const RationalMatrix*, 3> gens{&t.H, &t.E, &t.F};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly e = i == j ? MultiPoly::variable(0) : MultiPoly{};
      for (std::size_t g = 0; g < 3; ++g)
        e += MultiPoly::constant((*gens[g])(i, j).get_num()) * MultiPoly::variable(g + 1);
      out[i * n + j] = e;
    }
  return out;
}

/// The closed form for the irreducible module of highest weight m, written
/// out per parity with u = z1^2 + z2 z3:
///   even m: z0 prod_{l=1}^{m/2} (z0^2 - 4 l^2 u)
///   odd m:  prod_{l=0}^{(m-1)/2} (z0^2 - (2l+1)^2 u)
inline MultiPoly irreducible_formula(Weight m) {
  const MultiPoly z0 = MultiPoly::variable(0);
  const MultiPoly u = naive_multiply(MultiPoly::variable(1), MultiPoly::variable(1)) +
                      naive_multiply(MultiPoly::variable(2), MultiPoly::variable(3));
  const MultiPoly z0sq = naive_multiply(z0, z0);
  MultiPoly result = MultiPoly::constant(1);
  if (m % 2 == 0) {
    result = z0;
    for (Weight l = 1; l <= m / 2; ++l)
      result = naive_multiply(result, z0sq - MultiPoly::constant(mpz_class(4) * l * l) * u);
  } else {
    for (Weight l = 0; l <= (m - 1) / 2; ++l)
      result = naive_multiply(result,
                              z0sq - MultiPoly::constant(mpz_class(2 * l + 1) * (2 * l + 1)) * u);
  }
  return result;
}

/// Spectrum of ad h_i on sl(n) from the root description: 0 on the n-1
/// Cartan directions, and h_i(j) - h_i(k) on e_jk where h_i has +1 at
/// position i and -1 at position i+1.
inline WeightVector root_count_weights(long n, long i) {
  std::vector<long> eigenvalues(static_cast<std::size_t>(n - 1), 0);
  auto coord = [&](long j) { return j == i ? 1L : j == i + 1 ? -1L : 0L; };
  for (long j = 1; j <= n; ++j)
    for (long k = 1; k <= n; ++k)
      if (j != k) eigenvalues.push_back(coord(j) - coord(k));
  return count_weights(eigenvalues);
}

}  // namespace sl2cp::verify
