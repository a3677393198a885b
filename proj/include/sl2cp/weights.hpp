#pragma once

// Weight-multiplicity combinatorics for finite-dimensional sl(2) modules.
//
// A module is determined up to isomorphism by the eigenvalue multiplicities
// d_n of the image of h. Only n >= 0 is stored; the spectrum is symmetric.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sl2cp/error.hpp"

namespace sl2cp {

using Weight = unsigned;
using Multiplicity = std::uint64_t;

/// Multiplicities d_n of the h-eigenvalue n for n >= 0. Zero entries are
/// never stored, so two vectors are equal iff their maps are equal.
class WeightVector {
 public:
  using map_type = std::map<Weight, Multiplicity>;

  WeightVector() = default;

  /// Zero entries in `d` are dropped.
  explicit WeightVector(const map_type& d) {
    for (const auto& [n, mult] : d)
      if (mult != 0) d_.emplace(n, mult);
  }

  WeightVector(std::initializer_list<std::pair<const Weight, Multiplicity>> d)
      : WeightVector(map_type(d)) {}

  const map_type& entries() const noexcept { return d_; }

  Multiplicity operator[](Weight n) const {
    auto it = d_.find(n);
    return it == d_.end() ? 0 : it->second;
  }

  /// d_0 + 2 * sum_{n >= 1} d_n
  Multiplicity dim() const {
    Multiplicity total = 0;
    for (const auto& [n, mult] : d_) total += n == 0 ? mult : 2 * mult;
    return total;
  }

  /// Largest stored weight, or 0 for the zero module.
  Weight top() const { return d_.empty() ? 0 : d_.rbegin()->first; }

  bool empty() const noexcept { return d_.empty(); }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  map_type d_;
};

/// Multiplicities l_m of the irreducible module of highest weight m.
class Decomposition {
 public:
  using map_type = std::map<Weight, Multiplicity>;

  Decomposition() = default;

  explicit Decomposition(const map_type& l) {
    for (const auto& [m, mult] : l)
      if (mult != 0) l_.emplace(m, mult);
  }

  Decomposition(std::initializer_list<std::pair<const Weight, Multiplicity>> l)
      : Decomposition(map_type(l)) {}

  const map_type& entries() const noexcept { return l_; }

  Multiplicity operator[](Weight m) const {
    auto it = l_.find(m);
    return it == l_.end() ? 0 : it->second;
  }

  Multiplicity dim() const {
    Multiplicity total = 0;
    for (const auto& [m, mult] : l_) total += mult * (Multiplicity{m} + 1);
    return total;
  }

  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  map_type l_;
};

/// d_n = sum of l_m over m >= n with m = n (mod 2).
inline WeightVector weights_of_decomposition(const Decomposition& dec) {
  WeightVector::map_type d;
  for (const auto& [m, mult] : dec.entries())
    for (Weight n = m % 2; n <= m; n += 2) d[n] += mult;
  return WeightVector(d);
}

/// True iff d_n >= d_{n+2} for every n >= 0.
inline bool is_admissible(const WeightVector& w) {
  for (const auto& [n, mult] : w.entries()) {
    if (n >= 2 && w[n - 2] < mult) return false;
  }
  return true;
}

/// Inverts weights_of_decomposition via l_m = d_m - d_{m+2}.
/// Throws NotAdmissible if some d_m < d_{m+2}.
inline Decomposition decomposition_of_weights(const WeightVector& w) {
  if (!is_admissible(w))
    throw Error(ErrorKind::NotAdmissible,
                "weight multiplicities must satisfy d_n >= d_{n+2}");
  Decomposition::map_type l;
  for (const auto& [m, mult] : w.entries()) l[m] = mult - w[m + 2];
  return Decomposition(l);
}

/// Multiset of pairwise eigenvalue sums: the nonnegative half of the
/// convolution of the two symmetric multiplicity sequences c(-n) = c(n) = d_n.
inline WeightVector convolve(const WeightVector& a, const WeightVector& b) {
  if (a.empty() || b.empty()) return {};
  const long na = a.top(), nb = b.top();
  std::vector<Multiplicity> ca(static_cast<std::size_t>(2 * na + 1));
  std::vector<Multiplicity> cb(static_cast<std::size_t>(2 * nb + 1));
  for (const auto& [n, mult] : a.entries()) ca[na + n] = ca[na - n] = mult;
  for (const auto& [n, mult] : b.entries()) cb[nb + n] = cb[nb - n] = mult;
  std::vector<Multiplicity> out(static_cast<std::size_t>(na + nb + 1));
  for (long i = -na; i <= na; ++i) {
    const Multiplicity x = ca[i + na];
    if (x == 0) continue;
    for (long j = std::max(-nb, -i); j <= nb; ++j) out[i + j] += x * cb[j + nb];
  }
  WeightVector::map_type d;
  for (std::size_t s = 0; s < out.size(); ++s)
    if (out[s] != 0) d.emplace(static_cast<Weight>(s), out[s]);
  return WeightVector(d);
}

/// Entrywise sum (direct sum of modules).
inline WeightVector operator+(const WeightVector& a, const WeightVector& b) {
  WeightVector::map_type out = a.entries();
  for (const auto& [n, mult] : b.entries()) out[n] += mult;
  return WeightVector(out);
}

}  // namespace sl2cp
