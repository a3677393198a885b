#pragma once

// Seeded property checks for the invariants of every module. Each property
// runs a fixed number of cases from its own generator stream; a case reports
// a failure message or nothing.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sl2cp/charpoly.hpp"
#include "sl2cp/monoid.hpp"
#include "sl2cp/polynomial.hpp"
#include "sl2cp/polynomial_io.hpp"
#include "sl2cp/repmatrix.hpp"
#include "sl2cp/sln.hpp"
#include "sl2cp/verify/generators.hpp"
#include "sl2cp/verify/oracles.hpp"
#include "sl2cp/weights.hpp"

namespace sl2cp::verify {

struct PropertyResult {
  std::string module;
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

using Failure = std::optional<std::string>;
using CaseBody = std::function<Failure(Gen&, std::size_t)>;

inline std::uint64_t stream_seed(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char ch : name) h = (h ^ ch) * 1099511628211ULL;
  return seed ^ h;
}

inline PropertyResult check_property(std::string module, std::string name,
                                     std::size_t cases, std::uint64_t seed,
                                     const CaseBody& body) {
  PropertyResult r{std::move(module), std::move(name), cases, 0, {}};
  Gen g(stream_seed(seed, r.name));
  for (std::size_t k = 0; k < cases; ++k) {
    Failure f;
    try {
      f = body(g, k);
    } catch (const std::exception& e) {
      f = std::string("exception: ") + e.what();
    }
    if (f) {
      if (r.failures == 0) r.first_failure = "case " + std::to_string(k) + ": " + *f;
      ++r.failures;
    }
  }
  return r;
}

inline Failure expect(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return what;
}

inline std::vector<PropertyResult> weights_properties(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  out.push_back(check_property("weights", "decomposition round trip", 100, seed,
                               [](Gen& g, std::size_t) {
    const auto dec = random_decomposition(g, 40);
    return expect(decomposition_of_weights(weights_of_decomposition(dec)) == dec,
                  "decomposition_of_weights(weights_of_decomposition(D)) != D");
  }));
  out.push_back(check_property("weights", "weights agree with eigenvalue count", 100, seed,
                               [](Gen& g, std::size_t) {
    const auto dec = random_decomposition(g, 40);
    const auto w = weights_of_decomposition(dec);
    return expect(w == naive_weights(dec) && w.dim() == dec.dim(),
                  "weights differ from explicit eigenvalue list");
  }));
  out.push_back(check_property("weights", "admissibility closure", 100, seed,
                               [](Gen& g, std::size_t) {
    return expect(is_admissible(random_admissible(g, 40)),
                  "weights of a module are not admissible");
  }));
  out.push_back(check_property("weights", "closed form matches recursive peeling", 100, seed,
                               [](Gen& g, std::size_t) -> Failure {
    const auto w = random_weights(g, 6, 4);
    Decomposition peeled;
    const bool ok = recursive_decomposition(w, peeled);
    if (ok != is_admissible(w)) return "is_admissible disagrees with recursive peeling";
    if (!ok) {
      try {
        decomposition_of_weights(w);
        return "inadmissible vector decomposed";
      } catch (const Error& e) {
        return expect(e.kind() == ErrorKind::NotAdmissible, "wrong error kind");
      }
    }
    return expect(decomposition_of_weights(w) == peeled, "closed form != recursion");
  }));
  out.push_back(check_property("weights", "convolve commutative, associative, unital", 100, seed,
                               [](Gen& g, std::size_t) -> Failure {
    const auto a = random_admissible(g, 12), b = random_admissible(g, 12),
               c = random_admissible(g, 12);
    const WeightVector one{{0, 1}};
    if (!(convolve(a, b) == convolve(b, a))) return "not commutative";
    if (!(convolve(convolve(a, b), c) == convolve(a, convolve(b, c)))) return "not associative";
    return expect(convolve(a, one) == a && convolve(one, a) == a, "unit law fails");
  }));
  out.push_back(check_property("weights", "convolve preserves admissibility and dimension", 100,
                               seed, [](Gen& g, std::size_t) -> Failure {
    const auto a = random_admissible(g, 12), b = random_admissible(g, 12);
    const auto ab = convolve(a, b);
    if (!(ab == naive_convolve(a, b))) return "convolve differs from pairwise sums";
    if (ab.dim() != a.dim() * b.dim()) return "dimension not multiplicative";
    return expect(is_admissible(ab), "product not admissible");
  }));
  return out;
}

inline std::vector<PropertyResult> polynomial_properties(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  out.push_back(check_property("polynomial", "ring axioms", 60, seed,
                               [](Gen& g, std::size_t) -> Failure {
    const auto p = random_poly(g), q = random_poly(g), r = random_poly(g);
    if (!((p * q) * r == p * (q * r))) return "multiplication not associative";
    if (!((p + q) + r == p + (q + r))) return "addition not associative";
    if (!(p * (q + r) == p * q + p * r)) return "not distributive";
    if (!(p * q == q * p)) return "multiplication not commutative";
    if (!(p * q == naive_multiply(p, q))) return "product differs from schoolbook";
    return expect((p - p).is_zero(), "p - p != 0");
  }));
  out.push_back(check_property("polynomial", "exact division inverts multiplication", 60, seed,
                               [](Gen& g, std::size_t) -> Failure {
    const auto p = random_poly(g);
    auto q = random_poly(g);
    if (q.is_zero()) q = MultiPoly::constant(3);
    return expect(exact_divide(p * q, q) == p, "(p*q)/q != p");
  }));
  out.push_back(check_property("polynomial", "recognize inverts expand", 60, seed,
                               [](Gen& g, std::size_t) {
    const auto c = random_canonical(g, 20);
    return expect(recognize(expand_canonical(c)) == c, "recognize(expand(c)) != c");
  }));
  out.push_back(check_property("polynomial", "expansion is homogeneous", 60, seed,
                               [](Gen& g, std::size_t) -> Failure {
    const auto c = random_canonical(g, 20);
    const auto p = expand_canonical(c);
    if (!p.is_homogeneous()) return "not homogeneous";
    if (p.total_degree() != c.degree()) return "wrong total degree";
    for (const auto& [m, coeff] : p.terms())
      if (m[2] != m[3]) return "z2 and z3 do not enter as z2*z3";
    return expect(to_uform(p) == uform_of(c), "u-form differs from factored form");
  }));
  out.push_back(check_property("polynomial", "depends only on z1^2 + z2 z3", 60, seed,
                               [](Gen& g, std::size_t) -> Failure {
    const auto p = expand_canonical(random_canonical(g, 16));
    const Point x = random_point(g);
    // Another point with the same u: keep z1, pick z2' dividing z2*z3.
    Point y = x;
    y[1] = -x[1];
    y[2] = x[3];
    y[3] = x[2];
    if (evaluate(p, x) != evaluate(p, y)) return "value changed under u-preserving move";
    Point w = x;
    w[1] = 0;
    w[2] = 1;
    w[3] = x[1] * x[1] + x[2] * x[3];
    return expect(evaluate(p, x) == evaluate(p, w), "value changed under (0, 1, u)");
  }));
  out.push_back(check_property("polynomial", "evaluation is multiplicative", 60, seed,
                               [](Gen& g, std::size_t) {
    const auto p = random_poly(g), q = random_poly(g);
    const Point x = random_point(g);
    return expect(evaluate(p * q, x) == evaluate(p, x) * evaluate(q, x) &&
                      evaluate(p + q, x) == evaluate(p, x) + evaluate(q, x),
                  "evaluation is not a ring homomorphism");
  }));
  out.push_back(check_property("polynomial", "text form round trips", 60, seed,
                               [](Gen& g, std::size_t) {
    const auto p = random_poly(g, 6, 4, 1000);
    return expect(parse_polynomial(to_text(p)) == p, "parse(to_text(p)) != p");
  }));
  return out;
}

inline std::vector<PropertyResult> repmatrix_properties(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  out.push_back(check_property("repmatrix", "irreducibles satisfy brackets", 9, seed,
                               [](Gen&, std::size_t k) {
    return expect(check_brackets(irrep_matrices(static_cast<Weight>(k))),
                  "irrep " + std::to_string(k) + " fails brackets");
  }));
  out.push_back(check_property("repmatrix", "compositions satisfy brackets", 40, seed,
                               [](Gen& g, std::size_t) {
    const auto t = random_rep(g, 30);
    return expect(check_brackets(t) && t.H.is_diagonal() && t.H.is_integral(),
                  "composite fails brackets");
  }));
  out.push_back(check_property("repmatrix", "tensor weights are the convolution", 40, seed,
                               [](Gen& g, std::size_t) {
    const auto a = random_rep(g, 6), b = random_rep(g, 5);
    return expect(h_weights(tensor(a, b)) == convolve(h_weights(a), h_weights(b)),
                  "h_weights(a (x) b) != convolve");
  }));
  out.push_back(check_property("repmatrix", "direct sum weights add", 40, seed,
                               [](Gen& g, std::size_t) {
    const auto a = random_rep(g, 15), b = random_rep(g, 15);
    return expect(h_weights(direct_sum(a, b)) == h_weights(a) + h_weights(b),
                  "h_weights(a + b) != sum");
  }));
  out.push_back(check_property("repmatrix", "conjugate basis", 60, seed,
                               [](Gen& g, std::size_t) -> Failure {
    const auto hp = random_h_prime(g);
    const auto cb = conjugate_basis(hp);
    const auto a_inv = inverse(cb.A);
    if (!a_inv) return "A is singular";
    if (!(cb.A * standard_h() * *a_inv == hp) || !(cb.h == hp)) return "A h A^-1 != h'";
    return expect(check_brackets(cb.h, cb.e1, cb.e2), "conjugated triple fails brackets");
  }));
  return out;
}

inline std::vector<PropertyResult> charpoly_properties(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  out.push_back(check_property("charpoly", "formula agrees with determinant", 16, seed,
                               [](Gen& g, std::size_t) {
    const auto t = random_rep(g, 16);
    return expect(pencil_det_exact(t) == expand_canonical(charpoly_of_rep(t)),
                  "det != expand(charpoly) for dim " + std::to_string(t.dim()));
  }));
  out.push_back(check_property("charpoly", "Bareiss matches cofactor expansion", 20, seed,
                               [](Gen& g, std::size_t) {
    const auto t = random_rep(g, 7);
    return expect(pencil_det_exact(t) == cofactor_determinant(pencil_entries(t), t.dim()),
                  "Bareiss and cofactor determinants differ");
  }));
  out.push_back(check_property("charpoly", "determinant multiplicative over direct sums", 15,
                               seed, [](Gen& g, std::size_t) {
    const auto a = random_rep(g, 7), b = random_rep(g, 7);
    return expect(pencil_det_exact(direct_sum(a, b)) == pencil_det_exact(a) * pencil_det_exact(b),
                  "det(a + b) != det(a) det(b)");
  }));
  out.push_back(check_property("charpoly", "bijection with modules", 100, seed,
                               [](Gen& g, std::size_t) {
    const auto dec = random_decomposition(g, 30);
    return expect(decompose_charpoly(charpoly_of_rep(build(dec))) == dec,
                  "decompose(charpoly(build(D))) != D");
  }));
  out.push_back(check_property("charpoly", "basis independence", 15, seed,
                               [](Gen& g, std::size_t) {
    const auto t = random_rep(g, 5);
    const auto p = random_invertible(g, t.dim());
    return expect(pencil_det_exact(conjugate(t, p)) == pencil_det_exact(t),
                  "conjugated pencil has a different determinant");
  }));
  out.push_back(check_property("charpoly", "randomized agrees with exact", 15, seed,
                               [](Gen& g, std::size_t) -> Failure {
    const auto t = random_rep(g, 10);
    const auto seed_k = static_cast<std::uint64_t>(g.range(0, 1 << 30));
    const auto c = charpoly_of_rep(t);
    const auto exact = pencil_verify_exact(t, c);
    const auto randomized = pencil_verify_randomized(t, c, 5, seed_k);
    if (!exact.agreed || !randomized.agreed) return "verification failed on true charpoly";
    const CanonicalCP wrong(c.d0() + 2, c.factors());
    return expect(!pencil_verify_exact(t, wrong).agreed &&
                      !pencil_verify_randomized(t, wrong, 5, seed_k).agreed,
                  "verification accepted a wrong charpoly");
  }));
  return out;
}

inline std::vector<PropertyResult> monoid_properties(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  out.push_back(check_property("monoid", "three-way tensor identity", 25, seed,
                               [](Gen&, std::size_t k) -> Failure {
    const auto m = static_cast<Weight>(k / 5), n = static_cast<Weight>(k % 5);
    const auto by_matrix = charpoly_of_rep(tensor(irrep_matrices(m), irrep_matrices(n)));
    const auto by_product =
        resolution_product(MonoidElement::irreducible(m), MonoidElement::irreducible(n)).cp();
    const auto by_cg = MonoidElement::of(clebsch_gordan(m, n)).cp();
    return expect(by_matrix == by_product && by_product == by_cg,
                  "tensor, product and Clebsch-Gordan disagree at (" + std::to_string(m) + "," +
                      std::to_string(n) + ")");
  }));
  out.push_back(check_property("monoid", "decomposed product is Clebsch-Gordan", 121, seed,
                               [](Gen&, std::size_t k) {
    const auto m = static_cast<Weight>(k / 11), n = static_cast<Weight>(k % 11);
    const auto f = resolution_product(MonoidElement::irreducible(m), MonoidElement::irreducible(n));
    return expect(decompose_charpoly(f.cp()) == clebsch_gordan(m, n) &&
                      clebsch_gordan(m, n) == clebsch_gordan_by_weights(m, n),
                  "Clebsch-Gordan mismatch");
  }));
  out.push_back(check_property("monoid", "laws on random elements", 100, seed,
                               [](Gen& g, std::size_t) -> Failure {
    const auto a = random_element(g, 10), b = random_element(g, 10), c = random_element(g, 10);
    if (!(resolution_product(a, b) == resolution_product(b, a))) return "not commutative";
    if (!(resolution_product(resolution_product(a, b), c) ==
          resolution_product(a, resolution_product(b, c))))
      return "not associative";
    return expect(resolution_product(a, MonoidElement::unit()) == a &&
                      resolution_product(MonoidElement::unit(), a) == a,
                  "z0 is not a unit");
  }));
  return out;
}

inline std::vector<PropertyResult> sln_properties(std::uint64_t seed) {
  std::vector<PropertyResult> out;
  // (n, i) for 2 <= n <= 6, 1 <= i <= n-1.
  std::vector<std::pair<std::size_t, std::size_t>> roots;
  for (std::size_t n = 2; n <= 6; ++n)
    for (std::size_t i = 1; i < n; ++i) roots.emplace_back(n, i);
  out.push_back(check_property("sln", "restrictions satisfy brackets", roots.size(), seed,
                               [roots](Gen&, std::size_t k) {
    const auto [n, i] = roots[k];
    return expect(check_brackets(ad_restriction_rep(n, i)),
                  "ad restriction fails brackets at n=" + std::to_string(n));
  }));
  out.push_back(check_property("sln", "weights match root count", roots.size(), seed,
                               [roots](Gen&, std::size_t k) -> Failure {
    const auto [n, i] = roots[k];
    const auto w = h_weights(ad_restriction_rep(n, i));
    const long nl = static_cast<long>(n);
    WeightVector::map_type expected{{0, static_cast<Multiplicity>(nl * nl - 4 * nl + 5)},
                                    {1, static_cast<Multiplicity>(2 * nl - 4)},
                                    {2, 1}};
    if (!(w == WeightVector(expected))) return "weight vector differs from closed count";
    if (!(w == root_count_weights(nl, static_cast<long>(i)))) return "differs from root count";
    return expect(w.dim() == n * n - 1, "dimension is not n^2 - 1");
  }));
  out.push_back(check_property("sln", "randomized pencil agrees", 4, seed,
                               [](Gen& g, std::size_t k) {
    const std::size_t n = k + 2;
    const auto i = static_cast<std::size_t>(g.range(1, static_cast<long>(n) - 1));
    const auto t = ad_restriction_rep(n, i);
    return expect(pencil_verify_randomized(t, charpoly_of_rep(t), kDefaultTrials,
                                           static_cast<std::uint64_t>(k)).agreed,
                  "randomized verification failed for n=" + std::to_string(n));
  }));
  out.push_back(check_property("sln", "ad is a derivation of the bracket", 20, seed,
                               [](Gen& g, std::size_t) -> Failure {
    const auto n = static_cast<std::size_t>(g.range(2, 4));
    const SlnBasis basis(n);
    const auto& els = basis.elements();
    const auto& x = els[static_cast<std::size_t>(g.range(0, static_cast<long>(els.size()) - 1))];
    const auto& y = els[static_cast<std::size_t>(g.range(0, static_cast<long>(els.size()) - 1))];
    // ad [x,y] = [ad x, ad y]
    const auto adx = ad_matrix(basis, x), ady = ad_matrix(basis, y);
    return expect(ad_matrix(basis, x * y - y * x) == adx * ady - ady * adx,
                  "ad is not a Lie algebra homomorphism");
  }));
  return out;
}

inline std::vector<PropertyResult> run_property_suite(std::uint64_t seed) {
  std::vector<PropertyResult> all;
  for (auto suite : {weights_properties, polynomial_properties, repmatrix_properties,
                     charpoly_properties, monoid_properties, sln_properties}) {
    auto part = suite(seed);
    all.insert(all.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return all;
}

}  // namespace sl2cp::verify
