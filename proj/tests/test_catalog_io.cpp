#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "solvstab/catalog.hpp"
#include "solvstab/errors.hpp"

using namespace solvstab;

#ifndef SOLVSTAB_FIXTURE_DIR
#define SOLVSTAB_FIXTURE_DIR "fixtures"
#endif

TEST_SUITE("catalog_io") {
  TEST_CASE("matrix export/import round trip") {
    MatrixGroup gl = named_group("GL(2,3)");
    std::string text = export_group_json("roundtrip", gl);
    CatalogEntry e = import_group_json(text, "inline");
    CHECK(e.label == "roundtrip");
    CHECK(e.provenance == Provenance::imported);
    REQUIRE(e.is_matrix());
    CHECK(e.order == 48);
    CHECK(e.irreducible);
    CHECK(e.primitive_affine);
    CHECK(!e.odd_order);
  }

  TEST_CASE("permutation export/import round trip") {
    PermGroup s3(3, {parse_permutation("(0,1)", 3), parse_permutation("(0,1,2)", 3)});
    CatalogEntry e = import_group_json(export_group_json("rt", s3), "inline");
    CHECK(!e.is_matrix());
    CHECK(e.order == 6);
    CHECK(e.n == 3);
  }

  TEST_CASE("permutation import accepts image lists and cycle strings") {
    const char* text = R"json({
      "label": "sym3",
      "degree": 3,
      "generators": [[1, 0, 2], "(0,1,2)"]
    })json";
    CatalogEntry e = import_group_json(text, "inline");
    CHECK(!e.is_matrix());
    CHECK(e.order == 6);
    CHECK(e.primitive_affine);  // Sym(3) is primitive
  }

  TEST_CASE("import diagnostics are distinct") {
    CHECK_THROWS_WITH_AS(import_group_json("{", "x"), doctest::Contains("malformed JSON"),
                         ParseError);
    CHECK_THROWS_WITH_AS(import_group_json(R"({"degree": 3, "generators": []})", "x"),
                         doctest::Contains("label"), ParseError);
    CHECK_THROWS_WITH_AS(
        import_group_json(R"({"label":"a","generators":[]})", "x"),
        doctest::Contains("exactly one of"), ParseError);
    CHECK_THROWS_WITH_AS(
        import_group_json(
            R"({"label":"a","degree":2,"dimension":2,"characteristic":3,"generators":[]})",
            "x"),
        doctest::Contains("exactly one of"), ParseError);
    CHECK_THROWS_WITH_AS(
        import_group_json(
            R"({"label":"a","dimension":2,"characteristic":4,"generators":[]})", "x"),
        doctest::Contains("prime"), ParseError);
    // non-invertible matrix
    CHECK_THROWS_WITH_AS(
        import_group_json(
            R"({"label":"a","dimension":2,"characteristic":3,"generators":[[1,0,2,0]]})",
            "x"),
        doctest::Contains("not invertible"), ParseError);
    // matrix entry out of range
    CHECK_THROWS_WITH_AS(
        import_group_json(
            R"({"label":"a","dimension":2,"characteristic":3,"generators":[[1,0,0,5]]})",
            "x"),
        doctest::Contains("out of range"), ParseError);
    // permutation that is not a bijection
    CHECK_THROWS_AS(
        import_group_json(R"({"label":"a","degree":3,"generators":[[0,0,1]]})", "x"),
        ParseError);
    // wrong image list length
    CHECK_THROWS_WITH_AS(
        import_group_json(R"({"label":"a","degree":3,"generators":[[0,1]]})", "x"),
        doctest::Contains("does not match degree"), ParseError);
    CHECK_THROWS_WITH_AS(import_group("/nonexistent/path.json"),
                         doctest::Contains("cannot open"), ParseError);
  }

  TEST_CASE("the degree-512 fixture") {
    CatalogEntry e = import_group(std::string(SOLVSTAB_FIXTURE_DIR) + "/deg512.json");
    REQUIRE(e.is_matrix());
    CHECK(e.p == 2);
    CHECK(e.n == 9);
    CHECK(e.order == 9261);
    CHECK(e.irreducible);
    CHECK(e.primitive_affine);
    CHECK(e.matrix().permutation_rep().degree() == 512);
    CHECK(e.matrix().permutation_rep().order() == 9261);
  }

  TEST_CASE("catalog labels are unique and flags recomputed") {
    CatalogLimits lim;
    lim.max_field = 27;
    lim.max_degree = 27;
    auto catalog = build_catalog(lim);
    std::set<std::string> labels;
    for (const CatalogEntry& e : catalog) {
      CHECK(labels.insert(e.label).second);
      if (e.is_matrix()) {
        CHECK(e.order == e.matrix().order());
        CHECK(e.irreducible == is_irreducible(e.matrix()));
      }
    }
    CHECK(find_entry(catalog, "GL(2,3)") != nullptr);
    CHECK(find_entry(catalog, "Gamma(3^3)") != nullptr);
    CHECK(find_entry(catalog, "no-such-label") == nullptr);
  }

  TEST_CASE("odd-only filter") {
    CatalogLimits lim;
    lim.max_field = 27;
    lim.max_degree = 27;
    lim.odd_only = true;
    for (const CatalogEntry& e : build_catalog(lim)) CHECK(e.odd_order);
  }

  TEST_CASE("duplicate labels are rejected") {
    std::string path = std::string(SOLVSTAB_FIXTURE_DIR) + "/deg512.json";
    CatalogLimits lim;
    lim.max_field = 4;
    lim.max_degree = 4;
    CHECK_THROWS_WITH_AS(build_catalog(lim, {path, path}), doctest::Contains("duplicate"),
                         PreconditionError);
  }

  TEST_CASE("primitive iff irreducible holds across the whole default catalog") {
    for (const CatalogEntry& e : build_catalog(CatalogLimits{}))
      if (e.is_matrix()) CHECK(e.primitive_affine == e.irreducible);
  }
}
