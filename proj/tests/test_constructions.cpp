#include <doctest.h>

#include "oracles.hpp"
#include "solvstab/constructions.hpp"
#include "solvstab/errors.hpp"

using namespace solvstab;

TEST_SUITE("constructions") {
  TEST_CASE("semilinear group orders are m(p^m - 1)") {
    for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
      CHECK(semilinear_group(p, m).order() ==
            static_cast<std::uint64_t>(m) * (semilinear_group(p, m).action_size() - 1));
      CHECK(gamma0(p, m).order() ==
            static_cast<std::uint64_t>(gamma0(p, m).action_size() - 1));
    }
  }

  TEST_CASE("degenerate extension degree: scalars only") {
    CHECK(semilinear_group(7, 1).order() == 6);
    CHECK(gamma0(7, 1).order() == 6);
    CHECK(semilinear_group(2, 1).order() == 1);
  }

  TEST_CASE("gamma0 acts regularly on the nonzero vectors") {
    MatrixGroup g = gamma0(5, 3);
    CHECK(g.order() == 124);
    CHECK(is_cyclic(g.permutation_rep()));
    auto orbs = vector_orbits(g);
    REQUIRE(orbs.size() == 2);
    CHECK(orbs[1].size == 124);
    CHECK(centralizer_of_vector(g, orbs[1].representative).order() == 1);
  }

  TEST_CASE("Frobenius conjugates multiplication by w to multiplication by w^p") {
    for (auto [p, m] : {std::pair{2, 3}, {3, 2}, {5, 3}}) {
      ExtField f(p, m);
      Mat mw = multiplication_matrix(f, f.primitive_element());
      Mat mphi = frobenius_matrix(f);
      Mat lhs = mat_mul(mat_mul(*mat_inverse(mphi), mw), mphi);
      CHECK(lhs == multiplication_matrix(f, f.pow(f.primitive_element(), p)));
      CHECK(mat_pow(mphi, m) == Mat::identity(p, m));
    }
  }

  TEST_CASE("the d=4 twist over F_125 is C31:C3") {
    MatrixGroup g = semilinear_subgroup(5, 3, 4, 1, 0);
    CHECK(g.order() == 93);
    ExtField f(5, 3);
    CHECK(f.element_order(f.pow(f.primitive_element(), 4)) == 31);
    CHECK(is_irreducible(g));
    CHECK(!is_abelian(g.permutation_rep()));
  }

  TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(semilinear_subgroup(5, 3, 5, 1, 0), PreconditionError);   // 5 does not divide 124
    CHECK_THROWS_AS(semilinear_subgroup(5, 3, 4, 2, 0), PreconditionError);   // 2 does not divide 3
    CHECK_THROWS_AS(semilinear_subgroup(5, 3, 4, 1, 124), PreconditionError); // c out of range
  }

  TEST_CASE("enumerated subgroups live inside the full semilinear group") {
    MatrixGroup full = semilinear_group(3, 2);
    const PermGroup& big = full.permutation_rep();
    for (const SemilinearSubgroup& s : enumerate_semilinear_subgroups(3, 2, false)) {
      for (const Mat& gen : s.group.generators()) {
        std::vector<int> images(9);
        for (int idx = 0; idx < 9; ++idx)
          images[static_cast<size_t>(idx)] =
              vector_index(row_times_mat(index_vector(idx, 3, 2), gen), 3);
        CHECK(big.contains(Permutation(images)));
      }
      CHECK(s.group.order() == s.order);
    }
  }

  TEST_CASE("subgroup enumeration deduplicates by element set") {
    auto subs = enumerate_semilinear_subgroups(2, 3, true);
    REQUIRE(subs.size() == 2);  // C7 (= Gamma0) and the full group; <phi> is reducible
    CHECK(subs[0].is_full);
    CHECK(subs[0].order == 21);
    CHECK(subs[1].is_gamma0);
    CHECK(subs[1].order == 7);
    // full sweep: trivial, C7, the full group, and the seven order-3 twists
    auto all = enumerate_semilinear_subgroups(2, 3, false);
    CHECK(all.size() == 10);
  }

  TEST_CASE("wreath products") {
    PermGroup s2(2, {parse_permutation("(0,1)", 2)});
    MatrixGroup w = wreath_linear(gamma0(3, 1), s2);
    CHECK(w.dimension() == 2);
    CHECK(w.order() == 8);  // |H|^m * |S| = 2^2 * 2

    MatrixGroup w2 = wreath_linear(gamma0(2, 2), s2);
    CHECK(w2.order() == 18);  // 3^2 * 2
    CHECK(is_irreducible(w2));

    // trivial in, trivial out
    MatrixGroup triv(5, 1, {});
    PermGroup s1 = PermGroup::trivial(2);
    CHECK(wreath_linear(triv, s1).order() == 1);

    // order formula on a degree-3 top
    PermGroup s3(3, {parse_permutation("(0,1,2)", 3), parse_permutation("(0,1)", 3)});
    CHECK(wreath_linear(gamma0(3, 1), s3).order() == 8 * 6);  // 2^3 * 6

    CHECK_THROWS_AS(wreath_linear(gamma0(3, 3), s3), BoundError);  // 3^9 points
  }

  TEST_CASE("affine groups") {
    MatrixGroup triv(3, 2, {});
    PermGroup t = affine_group(triv);
    CHECK(t.order() == 9);
    CHECK(is_transitive(t));

    PermGroup aff = affine_group(named_group("GL(2,3)"));
    CHECK(aff.order() == 432);
    CHECK(is_primitive(aff));

    PermGroup tps = two_point_stabilizer(aff, 0, vector_index({1, 0}, 3));
    PermGroup cz = centralizer_of_vector(named_group("GL(2,3)"), vector_index({1, 0}, 3));
    CHECK(tps.order() == cz.order());
    for (const Permutation& g : cz.generators()) CHECK(tps.contains(g));
    for (const Permutation& g : tps.generators()) CHECK(cz.contains(g));
    CHECK_THROWS_AS(two_point_stabilizer(aff, 3, 3), PreconditionError);
  }

  TEST_CASE("affine group is primitive iff the linear part is irreducible") {
    PermGroup s2(2, {parse_permutation("(0,1)", 2)});
    std::vector<MatrixGroup> sample{named_group("GL(2,3)"),   semilinear_group(2, 3),
                                    gamma0(3, 2),             wreath_linear(gamma0(2, 1), s2),
                                    wreath_linear(gamma0(3, 1), s2), named_group("SL(2,3)")};
    for (const MatrixGroup& m : sample)
      CHECK(is_primitive(affine_group(m)) == is_irreducible(m));
  }

  TEST_CASE("named groups") {
    CHECK(named_group("GL(2,3)").order() == 48);
    CHECK(named_group("GL(2,2)").order() == 6);
    CHECK(named_group("GL(3,3)").order() == 11232);
    CHECK(named_group("GL(1,7)").order() == 6);
    CHECK(named_group("SL(2,3)").order() == 24);
    CHECK(named_group("Q8-in-GL(2,3)").order() == 8);
    CHECK(named_group("C31:C3-in-GL(3,5)").order() == 93);
    CHECK_THROWS_AS(named_group("M11"), ParseError);
    CHECK_THROWS_AS(named_group("GL(2,4)"), PreconditionError);  // 4 is not prime
  }

  TEST_CASE("transitive solvable groups of degree 2..5") {
    auto check_orders = [](int degree, std::vector<std::uint64_t> expected) {
      auto groups = transitive_solvable_groups(degree);
      REQUIRE(groups.size() == expected.size());
      for (std::size_t i = 0; i < groups.size(); ++i) {
        CHECK(groups[i].group.order() == expected[i]);
        CHECK(is_transitive(groups[i].group));
        CHECK(is_solvable(groups[i].group));
      }
    };
    check_orders(2, {2});
    check_orders(3, {3, 6});
    check_orders(4, {4, 4, 8, 12, 24});
    check_orders(5, {5, 10, 20});
    CHECK_THROWS_AS(transitive_solvable_groups(6), PreconditionError);
  }
}
