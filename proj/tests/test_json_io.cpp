#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "facetlab/generators.hpp"
#include "facetlab/json_io.hpp"

using facetlab::boundary;
using facetlab::cell_poset_from_json;
using facetlab::cell_poset_to_json;
using facetlab::CellPoset;
using facetlab::Chain;
using facetlab::chain_from_json;
using facetlab::chain_to_json;
using facetlab::ChainDoc;
using facetlab::collapse_small_set;
using facetlab::collapse_to_json;
using facetlab::Complex;
using facetlab::complex_from_json;
using facetlab::complex_to_json;
using facetlab::ComplexDoc;
using facetlab::cross_polytope_cycle;
using facetlab::FaceDoc;
using facetlab::faces_from_json;
using facetlab::InvalidParameter;
using facetlab::Json;
using facetlab::NonPrimeModulus;
using facetlab::parse_json_text;
using facetlab::ParseError;
using facetlab::pentagon_cells;
using facetlab::Simplex;
using facetlab::simplex_boundary_cycle;
using facetlab::validate_axioms;

namespace {

std::string reparse_complex(const std::string& text) {
  ComplexDoc doc = complex_from_json(parse_json_text(text));
  return complex_to_json(doc.complex, doc.p).dump();
}

std::string reparse_chain(const std::string& text) {
  ChainDoc doc = chain_from_json(parse_json_text(text));
  return chain_to_json(doc.chain, doc.n).dump();
}

std::string reparse_cell_poset(const std::string& text) {
  return cell_poset_to_json(cell_poset_from_json(parse_json_text(text)))
      .dump();
}

}  // namespace

TEST_CASE("complex documents round trip byte for byte") {
  Json j = complex_to_json(Complex::complete(3, 1), 2);
  std::string text = j.dump();
  CHECK(text == R"({"n":3,"p":2,"facets":[[1,2],[1,3],[2,3]]})");
  CHECK(reparse_complex(text) == text);

  Json big = complex_to_json(Complex::complete(6, 2), 5);
  CHECK(reparse_complex(big.dump()) == big.dump());

  ComplexDoc doc = complex_from_json(parse_json_text(text));
  CHECK(doc.p == 2);
  CHECK(doc.complex.n() == 3);
  CHECK(doc.complex.face_count(1) == 3);
  CHECK(doc.complex.face_count(0) == 3);
}

TEST_CASE("complex parsing names the offending field") {
  CHECK_THROWS_AS(parse_json_text("{not json"), ParseError);
  CHECK_THROWS_WITH(parse_json_text("{not json"), "input is not valid JSON");

  auto parse = [](const std::string& text) {
    return complex_from_json(parse_json_text(text));
  };
  CHECK_THROWS_WITH(parse(R"({"p":2,"facets":[]})"),
                    "complex: missing field \"n\"");
  CHECK_THROWS_WITH(parse(R"({"n":3,"p":2,"facets":[],"x":1})"),
                    "complex: unexpected field \"x\"");
  CHECK_THROWS_WITH(parse(R"({"n":120,"p":2,"facets":[]})"),
                    "n: out of range 0..64");
  CHECK_THROWS_WITH(parse(R"({"n":3,"p":1,"facets":[]})"),
                    "p: modulus must be at least 2");
  CHECK_THROWS_WITH(parse(R"({"n":3,"p":2,"facets":{}})"),
                    "facets: expected an array");
  CHECK_THROWS_WITH(parse(R"({"n":3,"p":2,"facets":[[2,1]]})"),
                    "facets[0]: vertices must be strictly increasing");
  CHECK_THROWS_AS(parse(R"({"n":3,"p":2,"facets":[[1,4]]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"n":3,"p":2,"facets":[[1,1.5]]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"n":3,"p":4,"facets":[[1,2]]})"),
                  NonPrimeModulus);
}

TEST_CASE("chain documents round trip byte for byte") {
  Chain z = simplex_boundary_cycle(Simplex({1, 2, 3}), 3);
  std::string text = chain_to_json(z, 3).dump();
  CHECK(text ==
        R"({"n":3,"p":3,"dim":1,"terms":[{"s":[1,2],"c":1},{"s":[1,3],"c":2},{"s":[2,3],"c":1}]})");
  CHECK(reparse_chain(text) == text);

  ChainDoc doc = chain_from_json(parse_json_text(text));
  CHECK(doc.n == 3);
  CHECK(doc.chain == z);

  Json octa = chain_to_json(cross_polytope_cycle(2, 5), 6);
  CHECK(reparse_chain(octa.dump()) == octa.dump());

  Chain vertex(0, 3);
  vertex.set_coeff(Simplex({2}), 1);
  Json empty_term = chain_to_json(boundary(vertex), 3);
  CHECK(empty_term.dump() == R"({"n":3,"p":3,"dim":-1,"terms":[{"s":[],"c":1}]})");
  CHECK(reparse_chain(empty_term.dump()) == empty_term.dump());

  Json zero = chain_to_json(Chain(1, 2), 4);
  CHECK(zero.dump() == R"({"n":4,"p":2,"dim":1,"terms":[]})");
  CHECK(reparse_chain(zero.dump()) == zero.dump());
}

TEST_CASE("chain parsing names the offending field") {
  auto parse = [](const std::string& text) {
    return chain_from_json(parse_json_text(text));
  };
  CHECK_THROWS_WITH(parse(R"({"n":3,"p":3,"terms":[]})"),
                    "chain: missing field \"dim\"");
  CHECK_THROWS_WITH(parse(R"({"n":3,"p":3,"dim":3,"terms":[]})"),
                    "dim: out of range -1..2");
  CHECK_THROWS_WITH(
      parse(R"({"n":3,"p":3,"dim":1,"terms":[{"s":[1,2,3],"c":1}]})"),
      "terms[0].s: expected 2 vertices");
  CHECK_THROWS_WITH(
      parse(R"({"n":3,"p":3,"dim":1,"terms":[{"s":[1,2],"c":3}]})"),
      "terms[0].c: coefficient out of range 0..p-1");
  CHECK_THROWS_WITH(
      parse(
          R"({"n":3,"p":3,"dim":1,"terms":[{"s":[1,2],"c":1},{"s":[1,2],"c":2}]})"),
      "terms[1].s: repeated simplex 1.2");
  CHECK_THROWS_WITH(
      parse(R"({"n":3,"p":3,"dim":1,"terms":[{"s":[1,2],"c":1,"w":0}]})"),
      "terms[0]: unexpected field \"w\"");
}

TEST_CASE("face documents accept either kind") {
  FaceDoc fromComplex = faces_from_json(
      parse_json_text(R"({"n":4,"p":2,"facets":[[1,2,3],[2,3,4]]})"));
  CHECK(fromComplex.n == 4);
  CHECK(fromComplex.p == 2);
  CHECK(fromComplex.faces ==
        std::vector<Simplex>{Simplex({1, 2, 3}), Simplex({2, 3, 4})});

  FaceDoc fromChain = faces_from_json(parse_json_text(
      R"({"n":4,"p":3,"dim":1,"terms":[{"s":[1,4],"c":2},{"s":[2,3],"c":1}]})"));
  CHECK(fromChain.n == 4);
  CHECK(fromChain.p == 3);
  CHECK(fromChain.faces ==
        std::vector<Simplex>{Simplex({1, 4}), Simplex({2, 3})});

  CHECK_THROWS_WITH(faces_from_json(parse_json_text(R"({"n":4,"p":2})")),
                    "input: expected a \"facets\" or \"terms\" document");
}

TEST_CASE("collapse certificates serialize their steps") {
  Json j = collapse_to_json(collapse_small_set(2, {Simplex({1, 2, 3})}));
  REQUIRE(j["steps"].is_array());
  REQUIRE(j["steps"].size() > 0);
  CHECK(j["steps"][0].dump() == R"({"free":[1,2],"coface":[1,2,3]})");
  for (const Json& step : j["steps"]) {
    REQUIRE(step.contains("free"));
    REQUIRE(step.contains("coface"));
    CHECK(step["free"].size() + 1 == step["coface"].size());
  }
}

TEST_CASE("cell poset documents round trip byte for byte") {
  for (std::uint64_t p : {2ull, 3ull, 5ull}) {
    Json j = cell_poset_to_json(pentagon_cells(p));
    CHECK(reparse_cell_poset(j.dump()) == j.dump());
    CellPoset back = cell_poset_from_json(j);
    CHECK(back.size() == 16);
    CHECK(validate_axioms(back).all_pass());
  }

  CellPoset withEmpty = CellPoset::build(
      3,
      {{"o", -1}, {"a", 0}, {"b", 0}, {"ab", 1}},
      {{"a", "ab"}, {"b", "ab"}},
      {{"ab", {{"b", 1}, {"a", 2}}}, {"a", {{"o", 1}}}, {"b", {{"o", 1}}}});
  Json j = cell_poset_to_json(withEmpty);
  CHECK(reparse_cell_poset(j.dump()) == j.dump());
  CellPoset back = cell_poset_from_json(j);
  REQUIRE(back.explicit_empty().has_value());
  CHECK(back.cell(*back.explicit_empty()).id == "o");
}

TEST_CASE("cell poset parsing names the offending field") {
  auto parse = [](const std::string& text) {
    return cell_poset_from_json(parse_json_text(text));
  };
  CHECK_THROWS_WITH(parse(R"({"cells":[],"covers":[],"boundary":{}})"),
                    "cell poset: missing field \"p\"");
  CHECK_THROWS_WITH(
      parse(R"({"p":2,"cells":[{"id":"a"}],"covers":[],"boundary":{}})"),
      "cells[0]: missing field \"dim\"");
  CHECK_THROWS_WITH(
      parse(
          R"({"p":2,"cells":[{"id":"a","dim":0}],"covers":[["a"]],"boundary":{}})"),
      "covers[0]: expected [\"idLow\",\"idHigh\"]");
  CHECK_THROWS_WITH(
      parse(
          R"({"p":2,"cells":[{"id":"a","dim":0}],"covers":[],"boundary":[]})"),
      "boundary: expected an object");
  CHECK_THROWS_AS(
      parse(
          R"({"p":2,"cells":[{"id":"a","dim":0},{"id":"b","dim":2}],"covers":[["a","b"]],"boundary":{}})"),
      InvalidParameter);
}
