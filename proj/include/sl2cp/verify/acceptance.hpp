#pragma once

// End-to-end checks of every closed-form identity, each with an exact
// comparison and a wall-clock budget.

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sl2cp/charpoly.hpp"
#include "sl2cp/monoid.hpp"
#include "sl2cp/polynomial.hpp"
#include "sl2cp/repmatrix.hpp"
#include "sl2cp/sln.hpp"
#include "sl2cp/verify/generators.hpp"
#include "sl2cp/verify/oracles.hpp"
#include "sl2cp/verify/properties.hpp"

namespace sl2cp::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool correct = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;

  bool within_budget() const { return seconds <= budget_seconds; }
  bool passed() const { return correct && within_budget(); }
};

inline constexpr std::size_t kMinPropertyCases = 500;

namespace detail {

// body returns "" on success, otherwise a description of the first failure.
inline CriterionResult timed(int id, std::string name, double budget,
                             const std::function<std::string()>& body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  r.budget_seconds = budget;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.detail = body();
    r.correct = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.correct) r.detail = "ok";
  return r;
}

}  // namespace detail

inline CriterionResult criterion_irreducible_formula() {
  return detail::timed(1, "irreducible closed form, m <= 8", 30, [] {
    for (Weight m = 0; m <= 8; ++m) {
      const auto t = irrep_matrices(m);
      if (!(pencil_det_exact(t) == irreducible_formula(m)))
        return "det(pencil) differs from closed form at m=" + std::to_string(m);
      if (!(expand_canonical(charpoly_of_rep(t)) == irreducible_formula(m)))
        return "factored form differs from closed form at m=" + std::to_string(m);
    }
    return std::string();
  });
}

inline CriterionResult criterion_hu_zhang() {
  return detail::timed(2, "specialization at z2 = z3 = 1, m <= 8", 30, [] {
    for (Weight m = 0; m <= 8; ++m)
      if (!hu_zhang_check(m)) return "identity fails at m=" + std::to_string(m);
    return std::string();
  });
}

inline CriterionResult criterion_bijection(std::uint64_t seed) {
  return detail::timed(3, "module <-> polynomial bijection, 200 modules of dim <= 30", 10, [seed] {
    Gen g(stream_seed(seed, "bijection"));
    for (int k = 0; k < 200; ++k) {
      const auto dec = random_decomposition(g, 30);
      if (!(decompose_charpoly(charpoly_of_rep(build(dec))) == dec))
        return "round trip fails on sample " + std::to_string(k);
    }
    return std::string();
  });
}

inline CriterionResult criterion_tensor_identity() {
  return detail::timed(4, "tensor = resolution product = Clebsch-Gordan, n <= m <= 4", 10, [] {
    for (Weight m = 0; m <= 4; ++m)
      for (Weight n = 0; n <= m; ++n) {
        const auto by_matrix = charpoly_of_rep(tensor(irrep_matrices(m), irrep_matrices(n)));
        const auto by_product =
            resolution_product(MonoidElement::irreducible(m), MonoidElement::irreducible(n));
        MultiPoly by_cg = MultiPoly::constant(1);
        for (Weight k = 0; k <= n; ++k) by_cg *= irreducible_formula(m - n + 2 * k);
        const std::string at = " at (" + std::to_string(m) + "," + std::to_string(n) + ")";
        if (!(by_matrix == by_product.cp())) return "matrix and product differ" + at;
        if (!(expand_canonical(by_product.cp()) == by_cg)) return "product and CG differ" + at;
      }
    return std::string();
  });
}

inline CriterionResult criterion_monoid_laws(std::uint64_t seed) {
  return detail::timed(5, "monoid laws on 6 irreducibles + 50 random elements", 10, [seed] {
    std::vector<MonoidElement> samples;
    for (Weight m = 0; m <= 5; ++m) samples.push_back(MonoidElement::irreducible(m));
    Gen g(stream_seed(seed, "monoid"));
    for (int k = 0; k < 50; ++k) samples.push_back(random_element(g, 12));
    const auto report = verify_monoid_laws(samples, seed);
    if (!report.exhaustive_triples) return std::string("associativity was not exhaustive");
    if (!report.passed())
      return "law " + report.counterexamples.front().law + " fails";
    return std::string();
  });
}

inline CriterionResult criterion_symmetry(std::uint64_t seed) {
  return detail::timed(6, "f(z0,z1,1,1) = f(z0,1,z1,z1)", 10, [seed] {
    for (Weight m = 0; m <= 6; ++m)
      if (!symmetry_identity_check(irrep_matrices(m)))
        return "fails for irreducible m=" + std::to_string(m);
    Gen g(stream_seed(seed, "symmetry"));
    for (int k = 0; k < 20; ++k) {
      const auto t = build(random_decomposition(g, 12));
      if (!symmetry_identity_check(t)) return "fails for direct sum " + std::to_string(k);
    }
    return std::string();
  });
}

inline CriterionResult criterion_conjugation(std::uint64_t seed) {
  return detail::timed(7, "conjugate basis for 100 random h' and the e1+e2 triple", 5, [seed] {
    Gen g(stream_seed(seed, "conjugation"));
    for (int k = 0; k < 100; ++k) {
      const auto hp = random_h_prime(g);
      const auto cb = conjugate_basis(hp);
      const auto a_inv = inverse(cb.A);
      if (!a_inv || !(cb.A * standard_h() * *a_inv == hp))
        return "A h A^-1 != h' on sample " + std::to_string(k);
      if (!check_brackets(cb.h, cb.e1, cb.e2))
        return "brackets fail on sample " + std::to_string(k);
    }
    const RationalMatrix hp{{0, 1}, {1, 0}};
    const RationalMatrix e1{{mpq_class(1, 2), mpq_class(-1, 2)}, {mpq_class(1, 2), mpq_class(-1, 2)}};
    const RationalMatrix e2{{mpq_class(1, 2), mpq_class(1, 2)}, {mpq_class(-1, 2), mpq_class(-1, 2)}};
    if (!check_brackets(hp, e1, e2)) return std::string("explicit e1+e2 triple fails brackets");
    if (!(e1 + e2 == standard_h())) return std::string("explicit triple: e1' + e2' != h");
    const auto cb = conjugate_basis(hp);
    if (!(cb.e1 == e1 && cb.e2 == e2)) return std::string("computed triple differs from explicit one");
    return std::string();
  });
}

inline CriterionResult criterion_adjoint() {
  return detail::timed(8, "adjoint of sl(n) restricted to simple roots, n = 2..5", 60, [] {
    for (std::size_t n = 2; n <= 5; ++n) {
      const std::string at = " for n=" + std::to_string(n);
      const CanonicalCP first = adjoint_charpoly(n, 1);
      for (std::size_t i = 1; i < n; ++i) {
        const auto t = ad_restriction_rep(n, i);
        if (!check_brackets(t)) return "brackets fail" + at;
        const auto c = charpoly_of_rep(t);
        if (!(c == first)) return "charpoly depends on the simple root" + at;
        if (!pencil_verify_randomized(t, c, kDefaultTrials, 0).agreed)
          return "randomized pencil check fails" + at;
      }
      const long nl = static_cast<long>(n);
      if (static_cast<long>(first.d0()) != (nl * nl - 1) - 2 - 2 * (2 * nl - 4))
        return "z0 exponent is not dimension-consistent" + at;
      if (first.degree() != n * n - 1) return "degree is not n^2 - 1" + at;
      const auto report = adjoint_report(n);
      if (report.match || report.printed_z0_exponent != nl * nl - 5 * nl + 6 ||
          report.computed_z0_exponent != static_cast<long>(first.d0()))
        return "comparison report does not record the deviation" + at;
    }
    return std::string();
  });
}

inline CriterionResult criterion_properties(std::uint64_t seed) {
  return detail::timed(9, "property suites, >= 500 cases", 120, [seed] {
    std::size_t cases = 0;
    for (const auto& p : run_property_suite(seed)) {
      cases += p.cases;
      if (!p.passed()) return p.module + "/" + p.name + ": " + p.first_failure;
    }
    if (cases < kMinPropertyCases) return "only " + std::to_string(cases) + " cases";
    return std::string();
  });
}

inline std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0) {
  return {criterion_irreducible_formula(), criterion_hu_zhang(),   criterion_bijection(seed),
          criterion_tensor_identity(),     criterion_monoid_laws(seed),
          criterion_symmetry(seed),        criterion_conjugation(seed),
          criterion_adjoint(),             criterion_properties(seed)};
}

}  // namespace sl2cp::verify
