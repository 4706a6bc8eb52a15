#include <doctest.h>

#include <random>

#include "solvstab/errors.hpp"
#include "solvstab/ffield.hpp"

using namespace solvstab;

TEST_SUITE("ffield") {
  TEST_CASE("lex-least irreducible moduli") {
    CHECK(find_irreducible(2, 1) == std::vector<int>{0, 1});        // x
    CHECK(find_irreducible(2, 2) == std::vector<int>{1, 1, 1});     // x^2+x+1
    CHECK(find_irreducible(3, 2) == std::vector<int>{1, 0, 1});     // x^2+1
    CHECK_THROWS_AS(find_irreducible(4, 2), PreconditionError);

    // (5,3): scan all monic cubics in the documented order and take the
    // first with no root; compare against the library.
    std::vector<int> expected;
    for (int c0 = 0; c0 < 5 && expected.empty(); ++c0)
      for (int c1 = 0; c1 < 5 && expected.empty(); ++c1)
        for (int c2 = 0; c2 < 5 && expected.empty(); ++c2) {
          bool has_root = false;
          for (int x = 0; x < 5; ++x)
            if ((c0 + c1 * x + c2 * x * x + x * x * x) % 5 == 0) has_root = true;
          if (!has_root) expected = {c0, c1, c2, 1};
        }
    CHECK(find_irreducible(5, 3) == expected);
  }

  TEST_CASE("irreducibility testing beyond cubics uses trial division") {
    // x^4 + x^2 + 1 = (x^2+x+1)^2 over F_2 has no root but is reducible
    CHECK(!is_irreducible_poly(2, {1, 0, 1, 0, 1}));
    CHECK(is_irreducible_poly(2, {1, 1, 0, 0, 1}));  // x^4+x+1
    CHECK_THROWS_AS(ExtField(2, 4, {1, 0, 1, 0, 1}), PreconditionError);
  }

  TEST_CASE("prime field arithmetic") {
    ExtField f5(5, 1);
    CHECK(f5.inv(2) == 3);
    CHECK(f5.mul(2, 3) == 1);
    CHECK(f5.add(4, 3) == 2);
    CHECK_THROWS_AS(f5.inv(0), PreconditionError);
  }

  TEST_CASE("Frobenius on F_4") {
    ExtField f4(2, 2);
    int x = f4.encode({0, 1});
    CHECK(f4.frobenius(x) == f4.encode({1, 1}));  // x^2 = x + 1 mod x^2+x+1
    CHECK(f4.frobenius(f4.frobenius(x)) == x);
  }

  TEST_CASE("primitive elements") {
    CHECK(ExtField(7, 1).primitive_element() == 3);  // orders: 2 has 3, 3 has 6
    ExtField f9(3, 2);
    CHECK(f9.primitive_element() == f9.encode({1, 1}));
    CHECK(f9.element_order(f9.primitive_element()) == 8);
  }

  TEST_CASE("multiplicative order and Frobenius properties") {
    for (auto [p, m] : {std::pair{2, 2}, {2, 3}, {3, 2}, {5, 2}, {3, 5}}) {
      ExtField f(p, m);
      const int q = f.size();
      for (int a = 1; a < q; ++a) {
        CHECK(f.pow(a, q - 1) == 1);
        CHECK(f.mul(a, f.inv(a)) == 1);
      }
      // frobenius iterated m times is the identity and is F_p-linear
      for (int a = 0; a < q; ++a) {
        int x = a;
        for (int i = 0; i < m; ++i) x = f.frobenius(x);
        CHECK(x == a);
      }
      for (int a = 0; a < std::min(q, 30); ++a)
        for (int b = 0; b < std::min(q, 30); ++b)
          CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
    }
  }

  TEST_CASE("ring axioms: exhaustive up to 25, random triples above") {
    for (auto [p, m] : {std::pair{2, 2}, {3, 2}, {5, 2}}) {
      ExtField f(p, m);
      if (f.size() <= 25) {
        for (int a = 0; a < f.size(); ++a)
          for (int b = 0; b < f.size(); ++b)
            for (int c = 0; c < f.size(); ++c) {
              CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
              CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            }
      }
    }
    ExtField big(3, 5);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      int a = static_cast<int>(rng() % big.size());
      int b = static_cast<int>(rng() % big.size());
      int c = static_cast<int>(rng() % big.size());
      CHECK(big.mul(a, big.add(b, c)) == big.add(big.mul(a, b), big.mul(a, c)));
      CHECK(big.mul(big.mul(a, b), c) == big.mul(a, big.mul(b, c)));
    }
  }

  TEST_CASE("polynomial strings and coefficient lists parse back") {
    ExtField f27(3, 3);
    for (int a = 0; a < f27.size(); ++a)
      CHECK(parse_element(f27, format_element(f27, a)) == a);
    CHECK(parse_element(f27, "[1,2,0]") == f27.encode({1, 2, 0}));
    CHECK(parse_element(f27, "x^2+2x+1") == f27.encode({1, 2, 1}));
    CHECK(parse_element(f27, "2*x^2 + x") == f27.encode({0, 1, 2}));
    CHECK(format_element(f27, 0) == "0");
    CHECK_THROWS_AS(parse_element(f27, "x^9"), ParseError);
    CHECK_THROWS_AS(parse_element(f27, "q+1"), ParseError);
  }

  TEST_CASE("field size bound") {
    CHECK_THROWS_AS(ExtField(2, 13), BoundError);
    CHECK(ExtField(2, 12).size() == 4096);
  }
}
