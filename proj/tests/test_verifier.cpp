#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "solvstab/errors.hpp"
#include "solvstab/report.hpp"
#include "solvstab/verifier.hpp"

#include <fstream>
#include <sstream>

using namespace solvstab;

#ifndef SOLVSTAB_GOLDEN_DIR
#define SOLVSTAB_GOLDEN_DIR "tests/golden"
#endif

TEST_SUITE("verifier") {
  TEST_CASE("analysis of the trivial group: every vector is its own good orbit") {
    MatrixGroup triv(3, 2, {});
    GoodOrbitReport rep = analyze(triv, 9, "trivial");
    CHECK(rep.orbit_count() == 9);
    CHECK(rep.good_count() == 9);
    for (const OrbitRow& r : rep.rows) {
      CHECK(r.centralizer_order == 1);
      CHECK(r.derived_length == 0);
      CHECK(r.cyclic);
    }
  }

  TEST_CASE("analysis of GL(2,3)") {
    GoodOrbitReport rep = analyze(named_group("GL(2,3)"), 9, "GL(2,3)");
    REQUIRE(rep.orbit_count() == 2);
    CHECK(rep.group_derived_length == 4);
    CHECK(rep.rows[0].centralizer_order == 48);
    CHECK(rep.rows[0].derived_length == 4);
    CHECK(rep.rows[1].size == 8);
    CHECK(rep.rows[1].centralizer_order == 6);
    CHECK(rep.rows[1].derived_length == 2);
    CHECK(!rep.rows[1].abelian);
    CHECK(rep.good_count() == 2);
    CHECK(!rep.has_abelian_centralizer());  // the even-case necessity witness
    CHECK(check_thm_even(rep).status == Status::pass);      // 2 < 5 and dl 4 <= 6
    CHECK(check_lem_r(rep).status == Status::pass);         // r = 2 and dl 4 <= 4
    CHECK(check_thm_mod_ii(rep).status == Status::not_applicable);
  }

  TEST_CASE("analysis of C31:C3: cyclic witnesses everywhere") {
    GoodOrbitReport rep = analyze(named_group("C31:C3-in-GL(3,5)"), 9, "C31:C3");
    REQUIRE(rep.orbit_count() == 5);
    CHECK(rep.rows[0].centralizer_order == 93);
    CHECK(!rep.rows[0].cyclic);
    for (std::size_t i = 1; i < rep.rows.size(); ++i) {
      CHECK(rep.rows[i].centralizer_order == 3);
      CHECK(rep.rows[i].cyclic);
    }
    CHECK(check_thm_mod_ii(rep).status == Status::pass);
    CHECK(check_lem_oddqp(rep, true).status == Status::pass);
    CHECK(check_lem_oddqp(rep, false).status == Status::not_applicable);
  }

  TEST_CASE("analyze rejects non-solvable input") {
    CHECK_THROWS_AS(analyze(named_group("GL(2,5)"), 9, "GL(2,5)"), NotSolvable);
  }

  TEST_CASE("checkers can fail on fabricated reports") {
    GoodOrbitReport fake;
    fake.p = 3;
    fake.n = 1;
    fake.group_order = 3;  // odd |V||G|
    fake.group_derived_length = 5;
    fake.threshold = 9;
    fake.rows = {OrbitRow{0, 1, 3, 2, false, false}, OrbitRow{1, 2, 1, 0, false, false}};
    CHECK(check_lem_r(fake).status == Status::fail);      // r = 2 but dl = 5
    CHECK(check_thm_mod_ii(fake).status == Status::fail); // odd but no abelian row
    fake.rows[0].derived_length = 10;
    fake.rows[1].derived_length = 10;
    CHECK(check_thm_even(fake).status == Status::fail);   // no good orbits at all
    fake.group_derived_length = 11;
    CHECK(check_lem_five_regular(fake).status == Status::fail);
    fake.group_derived_length = 3;
    CHECK(check_lem_five_regular(fake).status == Status::not_applicable);
    CHECK(check_eq21(fake, 1, 1).status == Status::fail);
    CHECK(check_eq21(fake, 2, 1).status == Status::pass);
  }

  TEST_CASE("lemma 2.3 checker") {
    PermGroup s6(6, {parse_permutation("(0,1)", 6), parse_permutation("(0,1,2,3,4,5)", 6)});
    PermGroup triv = PermGroup::trivial(6);
    CHECK(check_lemma_gt(s6, {triv, triv}, {triv, triv}, 0).status == Status::pass);
    CHECK(check_lemma_gt(s6, {triv}, {triv}, 3).status == Status::pass);

    // hypothesis violation: J_1 outside A
    PermGroup a(6, {parse_permutation("(0,1,2)", 6)});
    PermGroup j(6, {parse_permutation("(3,4)", 6)});
    CHECK(check_lemma_gt(a, {j}, {triv}, 1).status == Status::not_applicable);

    // degree mismatch is a hard error
    CHECK_THROWS_AS(check_lemma_gt(s6, {PermGroup::trivial(5)}, {triv}, 1), DomainMismatch);

    // a direct-sum instance with ell = 1: centralizers of the two summand
    // vectors, modulo the centralizers of the summands
    MatrixGroup h = semilinear_subgroup(7, 1, 2, 1, 0);  // C3 in GL(1,7)
    MatrixGroup m = direct_sum(h, h);
    const PermGroup& A = m.permutation_rep();
    int v1 = vector_index({1, 0}, 7), v2 = vector_index({0, 1}, 7);
    PermGroup j1 = centralizer_of_vector(m, v1);
    PermGroup j2 = centralizer_of_vector(m, v2);
    PermGroup k1 = pointwise_stabilizer(A, {v1});
    PermGroup k2 = pointwise_stabilizer(A, {v2});
    Verdict v = check_lemma_gt(A, {j1, j2}, {k1, k2}, 1);
    CHECK(v.status == Status::pass);
  }

  TEST_CASE("Seress base search") {
    // regular group: a single point suffices
    MatrixGroup triv(3, 2, {});
    SeressResult reg = check_seress(affine_group(triv), true);
    CHECK(reg.status == Status::pass);
    CHECK(reg.witness.size() <= 1);

    PermGroup aff = affine_group(named_group("GL(2,3)"));
    SeressResult se = check_seress(aff, false);
    CHECK(se.status == Status::pass);
    CHECK(se.witness.size() <= 4);
    CHECK(pointwise_stabilizer(aff, se.witness).order() == 1);

    // seeded pre-search reaches the same verdict and a valid witness
    SeressResult seeded = check_seress(aff, false, 12345);
    CHECK(seeded.status == Status::pass);
    CHECK(pointwise_stabilizer(aff, seeded.witness).order() == 1);

    // degrees at or below the tuple limit must not trip the random search
    PermGroup tiny = affine_group(semilinear_group(2, 1));  // degree 2
    SeressResult small = check_seress(tiny, false, 99);
    CHECK(small.status == Status::pass);
    CHECK(small.witness.size() <= 2);

    // odd-order affine group: three points
    PermGroup c13 = affine_group(semilinear_subgroup(13, 1, 4, 1, 0));
    SeressResult odd = check_seress(c13, true);
    CHECK(odd.status == Status::pass);
    CHECK(odd.witness.size() <= 3);
  }

  TEST_CASE("stabilizer order bound") {
    PalfyWolfResult pw = check_palfy_wolf(48, 9);
    CHECK(pw.status == Status::pass);
    CHECK(pw.bound == doctest::Approx(431.06).epsilon(0.01));
    CHECK(check_palfy_wolf(1000000, 9).status == Status::fail);
    CHECK(check_palfy_wolf(1, 2).status == Status::pass);
    CHECK(check_palfy_wolf(3, 2).status == Status::pass);   // bound ~3.28
    CHECK(check_palfy_wolf(4, 2).status == Status::fail);
    CHECK(check_palfy_wolf(9261, 512).status == Status::pass);
  }

  TEST_CASE("two-point derived length minima") {
    PermGroup aff = affine_group(named_group("GL(2,3)"));
    TwoPointResult two = min_two_point_dl(aff);
    CHECK(two.x == 0);
    CHECK(two.min_derived_length == 2);  // no abelian two-point stabilizer
    REQUIRE(two.rows.size() == 1);       // one nonzero orbit of the stabilizer
    CHECK(two.rows[0].orbit_size == 8);

    // regular group: derived length zero with any pair
    TwoPointResult reg = min_two_point_dl(affine_group(MatrixGroup(3, 2, {})));
    CHECK(reg.min_derived_length == 0);
  }

  TEST_CASE("two independent routes to the two-point derived length") {
    for (const char* name : {"GL(2,3)", "SL(2,3)", "C31:C3-in-GL(3,5)", "Q8-in-GL(2,3)"}) {
      MatrixGroup m = named_group(name);
      GoodOrbitReport rep = analyze(m, 9, name);
      int via_centralizers = INT_MAX;
      for (const OrbitRow& r : rep.rows)
        if (r.representative != 0)
          via_centralizers = std::min(via_centralizers, r.derived_length);
      TwoPointResult two = min_two_point_dl(affine_group(m));
      CHECK(two.min_derived_length == via_centralizers);
    }
  }

  TEST_CASE("verification sweep on a small catalog") {
    CatalogLimits lim;
    lim.max_field = 16;
    lim.max_degree = 16;
    auto catalog = build_catalog(lim);
    VerifierConfig cfg;
    VerifyReport report = run_verification(catalog, cfg);
    CHECK(report.all_pass());
    CHECK(report.max_min_two_point_dl >= 0);
    CHECK(report.max_min_two_point_dl <= 9);

    // byte-identical output across worker counts
    VerifierConfig parallel;
    parallel.jobs = 3;
    CHECK(report_json(run_verification(catalog, parallel)) == report_json(report));

    // a lowered threshold makes good-orbit counting fail somewhere: the
    // checks honestly report failure and all_pass turns false
    VerifierConfig strict;
    strict.threshold = 0;
    VerifyReport broken = run_verification(catalog, strict);
    CHECK(!broken.all_pass());
  }

  TEST_CASE("report serialization") {
    CatalogLimits lim;
    lim.max_field = 8;
    lim.max_degree = 8;
    auto catalog = build_catalog(lim);
    VerifyReport report = run_verification(catalog, VerifierConfig{});
    std::string json = report_json(report);
    CHECK(json.find("\"schema_version\": 1") != std::string::npos);
    CHECK(json.find("\"claims\"") != std::string::npos);
    CHECK(json.find("\"groups\"") != std::string::npos);
    CHECK(json.find("thm-main") != std::string::npos);
    std::string md = report_markdown(report);
    CHECK(md.find("| claim |") != std::string::npos);

    auto rows = min_dl_table(catalog);
    CHECK(!rows.empty());
    std::string csv = min_dl_csv(rows);
    CHECK(csv.rfind("label,degree,affine_order,x,y,min_derived_length", 0) == 0);
  }

  TEST_CASE("a non-solvable import is skipped with a note, not a failure") {
    CatalogLimits lim;
    lim.max_field = 4;
    lim.max_degree = 4;
    auto catalog = build_catalog(lim);
    catalog.push_back(make_entry("outside", Provenance::imported, named_group("GL(2,5)")));
    VerifyReport report = run_verification(catalog, VerifierConfig{});
    CHECK(report.all_pass());
    bool noted = false;
    for (const std::string& n : report.notes)
      if (n.find("outside") != std::string::npos && n.find("skipped") != std::string::npos)
        noted = true;
    CHECK(noted);
  }

  TEST_CASE("primitive affine groups of degree <= 9 have derived length <= 5") {
    // confirmed extensionally over the catalog; nothing in the library
    // assumes this bound
    for (const CatalogEntry& e : build_catalog(CatalogLimits{})) {
      if (!e.primitive_affine) continue;
      PermGroup action = e.action();
      if (action.degree() > 9) continue;
      CHECK(derived_length(action) <= 5);
    }
  }

  TEST_CASE("the verify report reproduces the versioned golden fixture byte for byte") {
    CatalogLimits lim;
    lim.max_field = 8;
    lim.max_degree = 8;
    VerifyReport report = run_verification(build_catalog(lim), VerifierConfig{});
    std::ifstream golden(std::string(SOLVSTAB_GOLDEN_DIR) + "/verify_small.json");
    REQUIRE(golden.good());
    std::ostringstream expected;
    expected << golden.rdbuf();
    CHECK(report_json(report) == expected.str());
  }
}
