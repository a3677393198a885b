#pragma once

// JSON forms of the library types (nlohmann::json, found by ADL).
// Integers that may exceed 64 bits are written as decimal strings.

#include <gmpxx.h>

#include <nlohmann/json.hpp>

#include <cctype>
#include <string>

#include "sl2cp/charpoly.hpp"
#include "sl2cp/error.hpp"
#include "sl2cp/monoid.hpp"
#include "sl2cp/polynomial.hpp"
#include "sl2cp/rational_matrix.hpp"
#include "sl2cp/repmatrix.hpp"
#include "sl2cp/sln.hpp"
#include "sl2cp/weights.hpp"

namespace sl2cp {

using json = nlohmann::json;

namespace detail {

[[noreturn]] inline void bad_json(const std::string& why) {
  throw Error(ErrorKind::BadInput, "invalid JSON: " + why);
}

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_json(std::string("missing \"") + key + "\"");
  return j.at(key);
}

inline std::uint64_t unsigned_value(const json& j, const std::string& what) {
  if (!j.is_number_unsigned()) bad_json(what + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

inline Weight weight_key(const std::string& key) {
  if (key.empty() || key.size() > 9 ||
      !std::all_of(key.begin(), key.end(), [](unsigned char ch) { return std::isdigit(ch); }))
    bad_json("key \"" + key + "\" is not a decimal weight");
  return static_cast<Weight>(std::stoul(key));
}

inline json multiplicity_map(const std::map<Weight, Multiplicity>& m) {
  json out = json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

inline std::map<Weight, Multiplicity> read_multiplicity_map(const json& j,
                                                            const std::string& what) {
  if (!j.is_object()) bad_json(what + " must be an object");
  std::map<Weight, Multiplicity> out;
  for (const auto& [k, v] : j.items()) out[weight_key(k)] = unsigned_value(v, what);
  return out;
}

inline mpz_class integer_value(const json& j) {
  mpz_class z;
  if (j.is_string()) {
    if (z.set_str(j.get<std::string>(), 10) != 0) bad_json("malformed integer string");
  } else if (j.is_number_integer()) {
    z = j.get<long>();
  } else {
    bad_json("expected an integer");
  }
  return z;
}

inline std::string fraction_string(const mpq_class& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline mpq_class rational_value(const json& j) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  if (!j.is_string()) bad_json("matrix entries must be fraction strings");
  mpq_class q;
  if (q.set_str(j.get<std::string>(), 10) != 0) bad_json("malformed fraction");
  if (q.get_den() == 0) bad_json("zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace detail

// WeightVector: {"dim": N, "d": {"0": d0, ...}}
inline void to_json(json& j, const WeightVector& w) {
  j = json{{"dim", w.dim()}, {"d", detail::multiplicity_map(w.entries())}};
}
inline void from_json(const json& j, WeightVector& w) {
  w = WeightVector(detail::read_multiplicity_map(detail::field(j, "d"), "d"));
  if (j.contains("dim") && detail::unsigned_value(j.at("dim"), "dim") != w.dim())
    detail::bad_json("dim does not match multiplicities");
}

// Decomposition: {"l": {"0": l0, ...}}
inline void to_json(json& j, const Decomposition& d) {
  j = json{{"l", detail::multiplicity_map(d.entries())}};
}
inline void from_json(const json& j, Decomposition& d) {
  d = Decomposition(detail::read_multiplicity_map(detail::field(j, "l"), "l"));
}

// MultiPoly: {"terms": [[c, a0, a1, a2, a3], ...]} with c a decimal string.
inline void to_json(json& j, const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms())
    terms.push_back(json{c.get_str(), m[0], m[1], m[2], m[3]});
  j = json{{"terms", terms}};
}
inline void from_json(const json& j, MultiPoly& p) {
  const json& terms = detail::field(j, "terms");
  if (!terms.is_array()) detail::bad_json("terms must be an array");
  std::vector<MultiPoly::Term> raw;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 1 + kNumVars)
      detail::bad_json("each term is [coefficient, a0, a1, a2, a3]");
    std::array<unsigned, kNumVars> a{};
    for (std::size_t v = 0; v < kNumVars; ++v) {
      const auto e = detail::unsigned_value(t[v + 1], "exponent");
      if (e > Monomial::kMaxExponent) detail::bad_json("exponent exceeds 65535");
      a[v] = static_cast<unsigned>(e);
    }
    raw.emplace_back(Monomial::of(a[0], a[1], a[2], a[3]), detail::integer_value(t[0]));
  }
  p = MultiPoly::from_terms(std::move(raw));
}

// CanonicalCP: {"d0": d0, "factors": {"n": dn}}
inline void to_json(json& j, const CanonicalCP& c) {
  j = json{{"d0", c.d0()}, {"factors", detail::multiplicity_map(c.factors())}};
}
inline void from_json(const json& j, CanonicalCP& c) {
  const auto d0 = detail::unsigned_value(detail::field(j, "d0"), "d0");
  const auto factors = j.contains("factors")
                           ? detail::read_multiplicity_map(j.at("factors"), "factors")
                           : std::map<Weight, Multiplicity>{};
  c = CanonicalCP(d0, factors);
}

// RationalMatrix: {"rows": r, "cols": c, "entries": [["num/den", ...], ...]}
inline void to_json(json& j, const RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(detail::fraction_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  j = json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}
inline void from_json(const json& j, RationalMatrix& m) {
  const auto rows = detail::unsigned_value(detail::field(j, "rows"), "rows");
  const auto cols = detail::unsigned_value(detail::field(j, "cols"), "cols");
  const json& entries = detail::field(j, "entries");
  if (!entries.is_array() || entries.size() != rows) detail::bad_json("entries must have `rows` rows");
  m = RationalMatrix(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols)
      detail::bad_json("each row must have `cols` entries");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = detail::rational_value(entries[i][k]);
  }
}

// RepTriple: {"dim": d, "H": M, "E": M, "F": M}
inline void to_json(json& j, const RepTriple& t) {
  j = json{{"dim", t.dim()}, {"H", t.H}, {"E", t.E}, {"F", t.F}};
}
inline void from_json(const json& j, RepTriple& t) {
  t.H = detail::field(j, "H").get<RationalMatrix>();
  t.E = detail::field(j, "E").get<RationalMatrix>();
  t.F = detail::field(j, "F").get<RationalMatrix>();
  if (j.contains("dim") && detail::unsigned_value(j.at("dim"), "dim") != t.dim())
    detail::bad_json("dim does not match matrices");
}

inline json point_json(const Point& x) {
  json out = json::array();
  for (const auto& c : x) out.push_back(c.get_str());
  return out;
}

inline void to_json(json& j, const VerificationReport& r) {
  j = json{{"mode", r.mode == VerificationReport::Mode::exact ? "exact" : "randomized"},
           {"trials", r.trials},
           {"agreed", r.agreed},
           {"witness", r.witness ? point_json(*r.witness) : json(nullptr)}};
}
inline void from_json(const json& j, VerificationReport& r) {
  const auto mode = detail::field(j, "mode").get<std::string>();
  if (mode != "exact" && mode != "randomized") detail::bad_json("mode must be exact or randomized");
  r.mode = mode == "exact" ? VerificationReport::Mode::exact : VerificationReport::Mode::randomized;
  r.trials = static_cast<unsigned>(detail::unsigned_value(detail::field(j, "trials"), "trials"));
  r.agreed = detail::field(j, "agreed").get<bool>();
  r.witness.reset();
  const json& w = detail::field(j, "witness");
  if (w.is_null()) return;
  if (!w.is_array() || w.size() != kNumVars) detail::bad_json("witness must have four coordinates");
  Point x;
  for (std::size_t v = 0; v < kNumVars; ++v) x[v] = detail::integer_value(w[v]);
  r.witness = x;
}

inline void to_json(json& j, const MonoidReport& r) {
  json ce = json::array();
  for (const auto& c : r.counterexamples) ce.push_back(json{{"law", c.law}, {"indices", c.indices}});
  j = json{{"passed", r.passed()},
           {"closure", r.closure},
           {"commutativity", r.commutativity},
           {"associativity", r.associativity},
           {"unit", r.unit},
           {"pairs_checked", r.pairs_checked},
           {"triples_checked", r.triples_checked},
           {"exhaustive_triples", r.exhaustive_triples},
           {"counterexamples", ce}};
}
inline void from_json(const json& j, MonoidReport& r) {
  r.closure = detail::field(j, "closure").get<bool>();
  r.commutativity = detail::field(j, "commutativity").get<bool>();
  r.associativity = detail::field(j, "associativity").get<bool>();
  r.unit = detail::field(j, "unit").get<bool>();
  r.pairs_checked = detail::unsigned_value(detail::field(j, "pairs_checked"), "pairs_checked");
  r.triples_checked = detail::unsigned_value(detail::field(j, "triples_checked"), "triples_checked");
  r.exhaustive_triples = detail::field(j, "exhaustive_triples").get<bool>();
  r.counterexamples.clear();
  for (const auto& c : detail::field(j, "counterexamples"))
    r.counterexamples.push_back(
        {detail::field(c, "law").get<std::string>(),
         detail::field(c, "indices").get<std::vector<std::size_t>>()});
}

inline void to_json(json& j, const AdjointReport& r) {
  j = json{{"n", r.n},
           {"paper_z0_exponent", r.printed_z0_exponent},
           {"computed_z0_exponent", r.computed_z0_exponent},
           {"match", r.match}};
}
inline void from_json(const json& j, AdjointReport& r) {
  r.n = static_cast<long>(detail::unsigned_value(detail::field(j, "n"), "n"));
  r.printed_z0_exponent = detail::field(j, "paper_z0_exponent").get<long>();
  r.computed_z0_exponent = detail::field(j, "computed_z0_exponent").get<long>();
  r.match = detail::field(j, "match").get<bool>();
}

}  // namespace sl2cp
