#pragma once

// Resolution product on characteristic polynomials. The product of f_phi and
// f_psi is the polynomial whose h-eigenvalue multiset is all pairwise sums,
// i.e. f_{phi (x) psi}; it is computed on weight vectors, never through the
// square root of z1^2 + z2 z3.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sl2cp/error.hpp"
#include "sl2cp/polynomial.hpp"
#include "sl2cp/weights.hpp"

namespace sl2cp {

/// An admissible characteristic polynomial.
class MonoidElement {
 public:
  /// Throws NotAdmissible.
  explicit MonoidElement(CanonicalCP cp) : cp_(std::move(cp)) {
    if (!cp_.admissible())
      throw Error(ErrorKind::NotAdmissible, "not the characteristic polynomial of a module");
  }

  /// z0, the class of the trivial module.
  static MonoidElement unit() { return MonoidElement(CanonicalCP(1)); }

  /// f of the irreducible module of highest weight m.
  static MonoidElement irreducible(Weight m) {
    return of(Decomposition{{m, 1}});
  }

  static MonoidElement of(const Decomposition& dec) {
    return MonoidElement(CanonicalCP::from_weights(weights_of_decomposition(dec)));
  }

  const CanonicalCP& cp() const noexcept { return cp_; }
  WeightVector weights() const { return cp_.weights(); }

  friend bool operator==(const MonoidElement&, const MonoidElement&) = default;

 private:
  CanonicalCP cp_;
};

inline MonoidElement resolution_product(const MonoidElement& a, const MonoidElement& b) {
  return MonoidElement(CanonicalCP::from_weights(convolve(a.weights(), b.weights())));
}

/// phi_m (x) phi_n = sum_{k=0}^{n} phi_{m-n+2k} for n <= m.
inline Decomposition clebsch_gordan(Weight m, Weight n) {
  if (n > m) std::swap(m, n);
  Decomposition::map_type l;
  for (Weight k = 0; k <= n; ++k) l[m - n + 2 * k] = 1;
  return Decomposition(l);
}

/// The same decomposition reached by convolving weight vectors and reading
/// off l_m = d_m - d_{m+2}.
inline Decomposition clebsch_gordan_by_weights(Weight m, Weight n) {
  return decomposition_of_weights(convolve(weights_of_decomposition(Decomposition{{m, 1}}),
                                           weights_of_decomposition(Decomposition{{n, 1}})));
}

struct MonoidCounterexample {
  std::string law;                   // closure, commutativity, associativity, unit
  std::vector<std::size_t> indices;  // positions in the sample list
};

struct MonoidReport {
  bool closure = true;
  bool commutativity = true;
  bool associativity = true;
  bool unit = true;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  bool exhaustive_triples = true;
  std::vector<MonoidCounterexample> counterexamples;

  bool passed() const { return closure && commutativity && associativity && unit; }
};

inline constexpr std::size_t kDefaultTripleBudget = 1'000'000;

/// Checks closure, commutativity, associativity and the unit law exactly on
/// the samples. All ordered triples are checked when there are at most
/// `triple_budget` of them; otherwise `triple_budget` triples are drawn with
/// a generator seeded by `seed`.
inline MonoidReport verify_monoid_laws(const std::vector<MonoidElement>& samples,
                                       std::uint64_t seed,
                                       std::size_t triple_budget = kDefaultTripleBudget) {
  MonoidReport report;
  const std::size_t k = samples.size();
  std::vector<WeightVector> w;
  w.reserve(k);
  for (const auto& s : samples) w.push_back(s.weights());

  const WeightVector one{{0, 1}};
  for (std::size_t i = 0; i < k; ++i) {
    if (!(convolve(w[i], one) == w[i]) || !(convolve(one, w[i]) == w[i])) {
      report.unit = false;
      report.counterexamples.push_back({"unit", {i}});
    }
  }

  std::vector<WeightVector> prod(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      prod[i * k + j] = convolve(w[i], w[j]);
      ++report.pairs_checked;
      if (!is_admissible(prod[i * k + j])) {
        report.closure = false;
        report.counterexamples.push_back({"closure", {i, j}});
      }
      if (j < i && !(prod[i * k + j] == prod[j * k + i])) {
        report.commutativity = false;
        report.counterexamples.push_back({"commutativity", {j, i}});
      }
    }

  auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    ++report.triples_checked;
    if (!(convolve(prod[a * k + b], w[c]) == convolve(w[a], prod[b * k + c]))) {
      report.associativity = false;
      report.counterexamples.push_back({"associativity", {a, b, c}});
    }
  };
  const std::size_t total = k * k * k;
  if (total <= triple_budget) {
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        for (std::size_t c = 0; c < k; ++c) check_triple(a, b, c);
  } else {
    report.exhaustive_triples = false;
    std::mt19937_64 engine(seed);
    for (std::size_t t = 0; t < triple_budget; ++t) {
      const std::size_t a = engine() % k, b = engine() % k, c = engine() % k;
      check_triple(a, b, c);
    }
  }
  return report;
}

}  // namespace sl2cp
