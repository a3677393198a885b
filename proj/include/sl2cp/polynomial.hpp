#pragma once

// Sparse polynomials in z0, z1, z2, z3 over arbitrary-precision integers,
// and the factored form z0^d0 * prod_n (z0^2 - n^2 u)^dn with u = z1^2 + z2 z3.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sl2cp/error.hpp"
#include "sl2cp/weights.hpp"

namespace sl2cp {

inline constexpr std::size_t kNumVars = 4;

/// Exponent vector (a0, a1, a2, a3), packed 16 bits per variable with z0 in
/// the high bits so that integer comparison of `packed` is lex order.
struct Monomial {
  static constexpr unsigned kMaxExponent = 0xFFFF;

  std::uint64_t packed = 0;

  static Monomial of(unsigned a0, unsigned a1 = 0, unsigned a2 = 0,
                     unsigned a3 = 0) {
    const std::array<unsigned, kNumVars> a{a0, a1, a2, a3};
    Monomial m;
    for (std::size_t v = 0; v < kNumVars; ++v) {
      if (a[v] > kMaxExponent)
        throw Error(ErrorKind::BadInput, "exponent exceeds 65535");
      m.packed |= std::uint64_t{a[v]} << shift(v);
    }
    return m;
  }

  unsigned operator[](std::size_t var) const {
    return static_cast<unsigned>((packed >> shift(var)) & kMaxExponent);
  }

  unsigned degree() const {
    unsigned d = 0;
    for (std::size_t v = 0; v < kNumVars; ++v) d += (*this)[v];
    return d;
  }

  bool divides(Monomial other) const {
    for (std::size_t v = 0; v < kNumVars; ++v)
      if ((*this)[v] > other[v]) return false;
    return true;
  }

  /// Caller guarantees no component overflows.
  friend Monomial operator*(Monomial a, Monomial b) {
    return Monomial{a.packed + b.packed};
  }
  /// Caller guarantees b divides a.
  friend Monomial operator/(Monomial a, Monomial b) {
    return Monomial{a.packed - b.packed};
  }

  friend bool operator==(Monomial, Monomial) = default;

 private:
  static constexpr unsigned shift(std::size_t var) {
    return static_cast<unsigned>(48 - 16 * var);
  }
};

/// Graded lexicographic order, larger monomials first.
struct GrlexGreater {
  bool operator()(Monomial a, Monomial b) const {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.packed > b.packed;
  }
};

class MultiPoly {
 public:
  using Term = std::pair<Monomial, mpz_class>;

  MultiPoly() = default;

  static MultiPoly constant(const mpz_class& c) { return monomial(c, {}); }

  static MultiPoly monomial(const mpz_class& c, Monomial m) {
    MultiPoly p;
    if (c != 0) p.terms_.emplace_back(m, c);
    return p;
  }

  /// z_var, var in 0..3.
  static MultiPoly variable(std::size_t var) {
    std::array<unsigned, kNumVars> a{};
    a.at(var) = 1;
    return monomial(1, Monomial::of(a[0], a[1], a[2], a[3]));
  }

  /// Combines like terms and drops zeros.
  static MultiPoly from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
      return GrlexGreater{}(x.first, y.first);
    });
    MultiPoly p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().first == t.first)
        p.terms_.back().second += t.second;
      else
        p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.second == 0; });
    return p;
  }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.front().first.packed == 0);
  }

  unsigned total_degree() const {
    return terms_.empty() ? 0 : terms_.front().first.degree();
  }

  unsigned degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
  }

  bool is_homogeneous() const {
    return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
      return t.first.degree() == total_degree();
    });
  }

  mpz_class coefficient(Monomial m) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), m,
        [](const Term& t, Monomial key) { return GrlexGreater{}(t.first, key); });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
    return merge(p, q, false);
  }
  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) {
    return merge(p, q, true);
  }

  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    if (q.size() == 1) return p.times_term(q.terms_.front());
    if (p.size() == 1) return q.times_term(p.terms_.front());
    check_product_degrees(p, q);
    std::unordered_map<std::uint64_t, mpz_class> acc;
    acc.reserve(p.size() * q.size());
    for (const auto& [mp, cp] : p.terms_)
      for (const auto& [mq, cq] : q.terms_) {
        mpz_class& slot = acc[(mp * mq).packed];
        mpz_addmul(slot.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
      }
    MultiPoly r;
    r.terms_.reserve(acc.size());
    for (auto& [key, c] : acc)
      if (c != 0) r.terms_.emplace_back(Monomial{key}, std::move(c));
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& x, const Term& y) {
                return GrlexGreater{}(x.first, y.first);
              });
    return r;
  }

  friend MultiPoly operator*(const mpz_class& c, const MultiPoly& p) {
    if (c == 0) return {};
    MultiPoly r = p;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& q) { return *this = *this + q; }
  MultiPoly& operator-=(const MultiPoly& q) { return *this = *this - q; }
  MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }

  friend bool operator==(const MultiPoly& p, const MultiPoly& q) {
    if (p.terms_.size() != q.terms_.size()) return false;
    for (std::size_t i = 0; i < p.terms_.size(); ++i)
      if (p.terms_[i].first != q.terms_[i].first ||
          p.terms_[i].second != q.terms_[i].second)
        return false;
    return true;
  }

 private:
  static MultiPoly merge(const MultiPoly& p, const MultiPoly& q, bool negate) {
    MultiPoly r;
    r.terms_.reserve(p.size() + q.size());
    auto i = p.terms_.begin(), j = q.terms_.begin();
    const GrlexGreater before;
    while (i != p.terms_.end() || j != q.terms_.end()) {
      if (j == q.terms_.end() ||
          (i != p.terms_.end() && before(i->first, j->first))) {
        r.terms_.push_back(*i++);
      } else if (i == p.terms_.end() || before(j->first, i->first)) {
        r.terms_.emplace_back(j->first, negate ? mpz_class(-j->second)
                                               : j->second);
        ++j;
      } else {
        mpz_class c = negate ? mpz_class(i->second - j->second)
                             : mpz_class(i->second + j->second);
        if (c != 0) r.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  static void check_product_degrees(const MultiPoly& p, const MultiPoly& q) {
    for (std::size_t v = 0; v < kNumVars; ++v)
      if (p.degree_in(v) + q.degree_in(v) > Monomial::kMaxExponent)
        throw Error(ErrorKind::BadInput, "product exponent exceeds 65535");
  }

  MultiPoly times_term(const Term& t) const {
    check_product_degrees(*this, monomial(1, t.first));
    MultiPoly r;
    r.terms_.reserve(size());
    // Multiplying by a monomial preserves grlex order.
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m * t.first, c * t.second);
    return r;
  }

  std::vector<Term> terms_;
};

inline MultiPoly add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
inline MultiPoly mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

inline MultiPoly pow(MultiPoly base, std::uint64_t k) {
  MultiPoly result = MultiPoly::constant(1);
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

/// Returns r with p = q * r. Throws NotDivisible if no such r exists and
/// BadInput if q is zero.
inline MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw Error(ErrorKind::BadInput, "division by zero polynomial");
  if (p.is_zero()) return {};
  const auto& [lead_m, lead_c] = q.leading();

  if (q.size() == 1) {
    std::vector<MultiPoly::Term> out;
    out.reserve(p.size());
    for (const auto& [m, c] : p.terms()) {
      if (!lead_m.divides(m) || !mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t()))
        throw Error(ErrorKind::NotDivisible, "polynomial is not divisible");
      mpz_class quo;
      mpz_divexact(quo.get_mpz_t(), c.get_mpz_t(), lead_c.get_mpz_t());
      out.emplace_back(m / lead_m, std::move(quo));
    }
    return MultiPoly::from_terms(std::move(out));
  }

  // Multivariate division by a single divisor. When the quotient is exact,
  // the leading term of the remainder is always a multiple of lead(q).
  std::map<Monomial, mpz_class, GrlexGreater> rem;
  for (const auto& [m, c] : p.terms()) rem.emplace(m, c);
  std::vector<MultiPoly::Term> quotient;
  mpz_class qc;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead_m.divides(top->first) ||
        !mpz_divisible_p(top->second.get_mpz_t(), lead_c.get_mpz_t()))
      throw Error(ErrorKind::NotDivisible, "polynomial is not divisible");
    const Monomial qm = top->first / lead_m;
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lead_c.get_mpz_t());
    rem.erase(top);
    for (auto it = std::next(q.terms().begin()); it != q.terms().end(); ++it) {
      const Monomial m = it->first * qm;
      auto [slot, inserted] = rem.try_emplace(m);
      mpz_submul(slot->second.get_mpz_t(), qc.get_mpz_t(), it->second.get_mpz_t());
      if (slot->second == 0) rem.erase(slot);
    }
    quotient.emplace_back(qm, qc);
  }
  return MultiPoly::from_terms(std::move(quotient));
}

using Point = std::array<mpz_class, kNumVars>;

inline mpz_class evaluate(const MultiPoly& p, const Point& x) {
  std::array<std::vector<mpz_class>, kNumVars> powers;
  for (std::size_t v = 0; v < kNumVars; ++v) {
    const unsigned d = p.degree_in(v);
    powers[v].resize(d + 1);
    powers[v][0] = 1;
    for (unsigned e = 1; e <= d; ++e) powers[v][e] = powers[v][e - 1] * x[v];
  }
  mpz_class sum = 0, term;
  for (const auto& [m, c] : p.terms()) {
    term = c;
    for (std::size_t v = 0; v < kNumVars; ++v)
      if (m[v] != 0) term *= powers[v][m[v]];
    sum += term;
  }
  return sum;
}

/// Replaces each z_v by images[v].
inline MultiPoly substitute(const MultiPoly& p,
                            const std::array<MultiPoly, kNumVars>& images) {
  std::array<std::vector<MultiPoly>, kNumVars> powers;
  for (std::size_t v = 0; v < kNumVars; ++v) {
    const unsigned d = p.degree_in(v);
    powers[v].reserve(d + 1);
    powers[v].push_back(MultiPoly::constant(1));
    for (unsigned e = 1; e <= d; ++e) powers[v].push_back(powers[v].back() * images[v]);
  }
  MultiPoly sum;
  for (const auto& [m, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(c);
    for (std::size_t v = 0; v < kNumVars; ++v)
      if (m[v] != 0) term *= powers[v][m[v]];
    sum += term;
  }
  return sum;
}

/// Polynomial in z0 and u := z1^2 + z2 z3.
class UPoly {
 public:
  struct Term {
    unsigned z0_exp;
    unsigned u_exp;
    mpz_class coeff;
  };

  UPoly() = default;

  static UPoly from_terms(const std::vector<Term>& terms) {
    std::vector<MultiPoly::Term> raw;
    raw.reserve(terms.size());
    for (const auto& t : terms)
      raw.emplace_back(Monomial::of(t.z0_exp, t.u_exp), t.coeff);
    return UPoly(MultiPoly::from_terms(std::move(raw)));
  }

  static UPoly z0() { return UPoly(MultiPoly::variable(0)); }
  static UPoly u() { return UPoly(MultiPoly::variable(1)); }
  static UPoly constant(const mpz_class& c) { return UPoly(MultiPoly::constant(c)); }

  std::vector<Term> terms() const {
    std::vector<Term> out;
    out.reserve(poly_.size());
    for (const auto& [m, c] : poly_.terms()) out.push_back({m[0], m[1], c});
    return out;
  }

  bool is_zero() const { return poly_.is_zero(); }
  std::size_t size() const { return poly_.size(); }
  unsigned z0_degree() const { return poly_.degree_in(0); }
  unsigned u_degree() const { return poly_.degree_in(1); }

  /// Smallest power of z0 occurring in any term.
  unsigned z0_order() const {
    if (poly_.is_zero()) return 0;
    unsigned d = Monomial::kMaxExponent;
    for (const auto& [m, c] : poly_.terms()) d = std::min(d, m[0]);
    return d;
  }

  mpz_class coefficient(unsigned z0_exp, unsigned u_exp) const {
    return poly_.coefficient(Monomial::of(z0_exp, u_exp));
  }

  mpz_class evaluate(const mpz_class& z0, const mpz_class& u) const {
    return sl2cp::evaluate(poly_, {z0, u, 0, 0});
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) { return UPoly(a.poly_ + b.poly_); }
  friend UPoly operator-(const UPoly& a, const UPoly& b) { return UPoly(a.poly_ - b.poly_); }
  friend UPoly operator*(const UPoly& a, const UPoly& b) { return UPoly(a.poly_ * b.poly_); }
  friend UPoly operator*(const mpz_class& c, const UPoly& a) { return UPoly(c * a.poly_); }
  friend UPoly exact_divide(const UPoly& a, const UPoly& b) {
    return UPoly(exact_divide(a.poly_, b.poly_));
  }
  friend UPoly pow(const UPoly& a, std::uint64_t k) { return UPoly(pow(a.poly_, k)); }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  /// Substitutes u -> z1^2 + z2 z3.
  MultiPoly expand() const {
    const MultiPoly z1 = MultiPoly::variable(1);
    return substitute(poly_, {MultiPoly::variable(0),
                              z1 * z1 + MultiPoly::variable(2) * MultiPoly::variable(3),
                              MultiPoly{}, MultiPoly{}});
  }

 private:
  explicit UPoly(MultiPoly p) : poly_(std::move(p)) {}
  MultiPoly poly_;  // z0 in slot 0, u in slot 1
};

/// z0^d0 * prod_{n >= 1} (z0^2 - n^2 u)^{d_n}, stored as exponents.
class CanonicalCP {
 public:
  using factor_map = std::map<Weight, Multiplicity>;

  CanonicalCP() = default;

  /// Zero exponents are dropped; a factor keyed by n = 0 is BadInput.
  explicit CanonicalCP(Multiplicity d0, const factor_map& factors = {}) : d0_(d0) {
    for (const auto& [n, dn] : factors) {
      if (n == 0)
        throw Error(ErrorKind::BadInput, "factor index must be at least 1");
      if (dn != 0) factors_.emplace(n, dn);
    }
  }

  static CanonicalCP from_weights(const WeightVector& w) {
    factor_map f;
    for (const auto& [n, dn] : w.entries())
      if (n != 0) f.emplace(n, dn);
    return CanonicalCP(w[0], f);
  }

  WeightVector weights() const {
    WeightVector::map_type d(factors_.begin(), factors_.end());
    d[0] = d0_;
    return WeightVector(d);
  }

  Multiplicity d0() const noexcept { return d0_; }
  const factor_map& factors() const noexcept { return factors_; }

  Multiplicity factor(Weight n) const {
    auto it = factors_.find(n);
    return it == factors_.end() ? 0 : it->second;
  }

  /// Degree in z0, which is also the total degree and the module dimension.
  Multiplicity degree() const { return weights().dim(); }

  bool admissible() const { return is_admissible(weights()); }

  friend bool operator==(const CanonicalCP&, const CanonicalCP&) = default;

 private:
  Multiplicity d0_ = 0;
  factor_map factors_;
};

inline UPoly uform_of(const CanonicalCP& c) {
  UPoly result = pow(UPoly::z0(), c.d0());
  const UPoly z0sq = UPoly::z0() * UPoly::z0();
  for (const auto& [n, dn] : c.factors()) {
    const mpz_class n2 = mpz_class(n) * n;
    result = result * pow(z0sq - n2 * UPoly::u(), dn);
  }
  return result;
}

inline MultiPoly expand_canonical(const CanonicalCP& c) {
  const MultiPoly z0 = MultiPoly::variable(0);
  const MultiPoly z1 = MultiPoly::variable(1);
  const MultiPoly u = z1 * z1 + MultiPoly::variable(2) * MultiPoly::variable(3);
  MultiPoly result = pow(z0, c.d0());
  for (const auto& [n, dn] : c.factors()) {
    const mpz_class n2 = mpz_class(n) * n;
    result *= pow(z0 * z0 - n2 * u, dn);
  }
  return result;
}

/// Image under z1 -> 0, z2 -> 1, z3 -> u.
inline UPoly to_uform(const MultiPoly& p) {
  std::vector<UPoly::Term> out;
  for (const auto& [m, c] : p.terms())
    if (m[1] == 0) out.push_back({m[0], m[3], c});
  return UPoly::from_terms(out);
}

/// Recovers the factored form of a characteristic polynomial.
/// Throws NotCharPoly if p is not of the form z0^d0 prod (z0^2 - n^2 u)^dn,
/// NotAdmissible if it is but some d_n < d_{n+2}.
inline CanonicalCP recognize(const MultiPoly& p) {
  const Error not_cp(ErrorKind::NotCharPoly,
                     "not of the form z0^d0 prod (z0^2 - n^2 u)^dn");
  if (p.is_zero()) throw not_cp;
  UPoly rest = to_uform(p);
  if (rest.is_zero()) throw not_cp;

  const unsigned d0 = rest.z0_order();
  rest = exact_divide(rest, pow(UPoly::z0(), d0));

  const UPoly z0sq = UPoly::z0() * UPoly::z0();
  CanonicalCP::factor_map factors;
  Weight n = 1;
  while (rest.z0_degree() > 0) {
    // rest = prod_{i<=k} (z0^2 - n_i^2 u): monic in z0 and the next
    // coefficient is -sum n_i^2, so the smallest n_i^2 is at most sum / k.
    const unsigned deg = rest.z0_degree();
    if (deg % 2 != 0 || rest.coefficient(deg, 0) != 1) throw not_cp;
    const unsigned k = deg / 2;
    const mpz_class sum = -rest.coefficient(deg - 2, 1);
    if (sum <= 0) throw not_cp;

    Weight found = 0;
    if (k == 1) {
      if (!mpz_perfect_square_p(sum.get_mpz_t())) throw not_cp;
      const mpz_class root = sqrt(sum);
      if (!root.fits_uint_p()) throw not_cp;
      found = static_cast<Weight>(root.get_ui());
    } else {
      for (; mpz_class(n) * n * k <= sum; ++n) {
        if (rest.evaluate(n, 1) == 0) {
          found = n;
          break;
        }
      }
    }
    if (found == 0) throw not_cp;
    try {
      rest = exact_divide(rest, z0sq - mpz_class(found) * found * UPoly::u());
    } catch (const Error&) {
      throw not_cp;
    }
    ++factors[found];
    n = found;
  }
  if (!(rest == UPoly::constant(1))) throw not_cp;

  CanonicalCP c(d0, factors);
  if (!(expand_canonical(c) == p))
    throw Error(ErrorKind::NotCharPoly,
                "z1, z2, z3 do not enter through z1^2 + z2 z3");
  if (!c.admissible())
    throw Error(ErrorKind::NotAdmissible, "factored form violates d_n >= d_{n+2}");
  return c;
}

}  // namespace sl2cp
