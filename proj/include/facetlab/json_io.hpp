#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "facetlab/cell_complex.hpp"
#include "facetlab/chain.hpp"
#include "facetlab/collapse.hpp"
#include "facetlab/complex.hpp"
#include "facetlab/errors.hpp"

namespace facetlab {

// Insertion-ordered JSON so serialization has one canonical byte form:
// fixed key order, lex-sorted faces, coefficients reduced mod p.
using Json = nlohmann::ordered_json;

struct ComplexDoc {
  Complex complex;
  std::uint64_t p = 2;
};

struct ChainDoc {
  Chain chain{0, 2};
  int n = 0;
};

// Face family named by either document kind: the facets of a complex or
// the support of a chain.
struct FaceDoc {
  std::vector<Simplex> faces;
  int n = 0;
  std::uint64_t p = 2;
};

inline Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("input is not valid JSON");
  return j;
}

namespace jsondetail {

inline const Json& field(const Json& j, const char* key,
                         const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

inline void only_fields(const Json& j, const std::set<std::string>& keys,
                        const std::string& where) {
  for (const auto& [k, v] : j.items())
    if (!keys.count(k))
      throw ParseError(where + ": unexpected field \"" + k + "\"");
}

inline long long integer(const Json& v, const std::string& where) {
  if (!v.is_number_integer())
    throw ParseError(where + ": expected an integer");
  return v.get<long long>();
}

inline std::uint64_t modulus(const Json& v, const std::string& where) {
  long long p = integer(v, where);
  if (p < 2) throw ParseError(where + ": modulus must be at least 2");
  return static_cast<std::uint64_t>(p);
}

inline std::string text(const Json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + ": expected a string");
  return v.get<std::string>();
}

// A vertex tuple must be a strictly increasing array within {1, ..., n}.
inline Simplex vertex_tuple(const Json& v, int n, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  std::vector<int> verts;
  for (std::size_t i = 0; i < v.size(); ++i) {
    long long u = integer(v[i], where + "[" + std::to_string(i) + "]");
    if (u < 1 || u > n)
      throw ParseError(where + "[" + std::to_string(i) +
                       "]: vertex out of range 1.." + std::to_string(n));
    if (!verts.empty() && u <= verts.back())
      throw ParseError(where + ": vertices must be strictly increasing");
    verts.push_back(static_cast<int>(u));
  }
  return Simplex(std::move(verts));
}

inline Json simplex_array(const Simplex& s) {
  return Json(s.vertices());
}

}  // namespace jsondetail

inline Json complex_to_json(const Complex& k, std::uint64_t p) {
  Json j;
  j["n"] = k.n();
  j["p"] = p;
  Json facets = Json::array();
  std::vector<Simplex> fs = k.facets();
  std::sort(fs.begin(), fs.end());
  for (const Simplex& f : fs) facets.push_back(jsondetail::simplex_array(f));
  j["facets"] = std::move(facets);
  return j;
}

inline ComplexDoc complex_from_json(const Json& j) {
  using namespace jsondetail;
  only_fields(j, {"n", "p", "facets"}, "complex");
  long long n = integer(field(j, "n", "complex"), "n");
  if (n < 0 || n > 64) throw ParseError("n: out of range 0..64");
  std::uint64_t p = modulus(field(j, "p", "complex"), "p");
  const Json& fs = field(j, "facets", "complex");
  if (!fs.is_array()) throw ParseError("facets: expected an array");
  std::vector<Simplex> faces;
  for (std::size_t i = 0; i < fs.size(); ++i)
    faces.push_back(vertex_tuple(fs[i], static_cast<int>(n),
                                 "facets[" + std::to_string(i) + "]"));
  Fp fp(p);
  static_cast<void>(fp);  // constructed only to validate primality
  return ComplexDoc{Complex::closure(faces, static_cast<int>(n)), p};
}

inline Json chain_to_json(const Chain& c, int n) {
  Json j;
  j["n"] = n;
  j["p"] = c.p();
  j["dim"] = c.dim();
  Json terms = Json::array();
  for (const auto& [s, v] : c.terms()) {
    Json t;
    t["s"] = jsondetail::simplex_array(s);
    t["c"] = v;
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

inline ChainDoc chain_from_json(const Json& j) {
  using namespace jsondetail;
  only_fields(j, {"n", "p", "dim", "terms"}, "chain");
  long long n = integer(field(j, "n", "chain"), "n");
  if (n < 0 || n > 64) throw ParseError("n: out of range 0..64");
  std::uint64_t p = modulus(field(j, "p", "chain"), "p");
  long long dim = integer(field(j, "dim", "chain"), "dim");
  if (dim < -1 || dim >= n)
    throw ParseError("dim: out of range -1.." + std::to_string(n - 1));
  Fp fp(p);
  Chain chain(static_cast<int>(dim), p);
  const Json& terms = field(j, "terms", "chain");
  if (!terms.is_array()) throw ParseError("terms: expected an array");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string where = "terms[" + std::to_string(i) + "]";
    const Json& t = terms[i];
    only_fields(t, {"s", "c"}, where);
    Simplex s =
        vertex_tuple(field(t, "s", where), static_cast<int>(n), where + ".s");
    if (s.dim() != dim)
      throw ParseError(where + ".s: expected " + std::to_string(dim + 1) +
                       " vertices");
    long long c = integer(field(t, "c", where), where + ".c");
    if (c < 0 || static_cast<std::uint64_t>(c) >= p)
      throw ParseError(where + ".c: coefficient out of range 0..p-1");
    if (chain.coeff(s) != 0)
      throw ParseError(where + ".s: repeated simplex " + s.str());
    chain.add_term(s, static_cast<Scalar>(c), fp);
  }
  return ChainDoc{std::move(chain), static_cast<int>(n)};
}

inline FaceDoc faces_from_json(const Json& j) {
  if (j.is_object() && j.contains("facets")) {
    ComplexDoc doc = complex_from_json(j);
    return FaceDoc{doc.complex.facets(), doc.complex.n(), doc.p};
  }
  if (j.is_object() && j.contains("terms")) {
    ChainDoc doc = chain_from_json(j);
    return FaceDoc{doc.chain.support(), doc.n, doc.chain.p()};
  }
  throw ParseError("input: expected a \"facets\" or \"terms\" document");
}

inline Json collapse_to_json(const CollapseCertificate& cert) {
  Json steps = Json::array();
  for (const CollapseStep& st : cert.steps) {
    Json s;
    s["free"] = jsondetail::simplex_array(st.free);
    s["coface"] = jsondetail::simplex_array(st.coface);
    steps.push_back(std::move(s));
  }
  Json j;
  j["steps"] = std::move(steps);
  return j;
}

inline Json cell_poset_to_json(const CellPoset& P) {
  Json j;
  j["p"] = P.p();
  Json cells = Json::array();
  for (const CellPoset::Cell& c : P.cells()) {
    Json e;
    e["id"] = c.id;
    e["dim"] = c.dim;
    cells.push_back(std::move(e));
  }
  j["cells"] = std::move(cells);
  Json covers = Json::array();
  for (int i = 0; i < P.size(); ++i)
    for (int s : P.subcells(i))
      covers.push_back(Json::array({P.cell(s).id, P.cell(i).id}));
  j["covers"] = std::move(covers);
  Json bd = Json::object();
  for (int i = 0; i < P.size(); ++i) {
    int d = P.cell(i).dim;
    Json terms = Json::array();
    if (d == 0 && P.explicit_empty()) {
      Json t;
      t["id"] = P.cell(*P.explicit_empty()).id;
      t["c"] = P.empty_coefficient(i);
      terms.push_back(std::move(t));
    } else {
      for (const auto& [t, v] : P.boundary_terms(i)) {
        Json e;
        e["id"] = P.cell(t).id;
        e["c"] = v;
        terms.push_back(std::move(e));
      }
    }
    if (!terms.empty()) bd[P.cell(i).id] = std::move(terms);
  }
  j["boundary"] = std::move(bd);
  return j;
}

inline CellPoset cell_poset_from_json(const Json& j) {
  using namespace jsondetail;
  only_fields(j, {"p", "cells", "covers", "boundary"}, "cell poset");
  std::uint64_t p = modulus(field(j, "p", "cell poset"), "p");
  const Json& cs = field(j, "cells", "cell poset");
  if (!cs.is_array()) throw ParseError("cells: expected an array");
  std::vector<CellPoset::Cell> cells;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::string where = "cells[" + std::to_string(i) + "]";
    only_fields(cs[i], {"id", "dim"}, where);
    CellPoset::Cell c;
    c.id = text(field(cs[i], "id", where), where + ".id");
    c.dim = static_cast<int>(integer(field(cs[i], "dim", where),
                                     where + ".dim"));
    cells.push_back(std::move(c));
  }
  const Json& cv = field(j, "covers", "cell poset");
  if (!cv.is_array()) throw ParseError("covers: expected an array");
  CellPoset::CoverList covers;
  for (std::size_t i = 0; i < cv.size(); ++i) {
    std::string where = "covers[" + std::to_string(i) + "]";
    if (!cv[i].is_array() || cv[i].size() != 2)
      throw ParseError(where + ": expected [\"idLow\",\"idHigh\"]");
    covers.emplace_back(text(cv[i][0], where + "[0]"),
                        text(cv[i][1], where + "[1]"));
  }
  const Json& bd = field(j, "boundary", "cell poset");
  if (!bd.is_object()) throw ParseError("boundary: expected an object");
  CellPoset::BoundaryInput boundaries;
  for (const auto& [id, terms] : bd.items()) {
    std::string where = "boundary[\"" + id + "\"]";
    if (!terms.is_array()) throw ParseError(where + ": expected an array");
    auto& out = boundaries[id];
    for (std::size_t i = 0; i < terms.size(); ++i) {
      std::string twhere = where + "[" + std::to_string(i) + "]";
      only_fields(terms[i], {"id", "c"}, twhere);
      out.emplace_back(text(field(terms[i], "id", twhere), twhere + ".id"),
                       integer(field(terms[i], "c", twhere), twhere + ".c"));
    }
  }
  return CellPoset::build(p, cells, covers, boundaries);
}

}  // namespace facetlab
