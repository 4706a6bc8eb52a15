#include <doctest.h>

#include "solvstab/bigint.hpp"
#include "solvstab/verifier.hpp"

using namespace solvstab;

TEST_SUITE("bigint") {
  TEST_CASE("multiply and compare") {
    CHECK(big_cmp(big_from(0), big_from(0)) == 0);
    CHECK(big_cmp(big_from(1), big_from(2)) == -1);
    CHECK(big_cmp(big_mul(big_from(1u << 31), big_from(4)), big_from(1ull << 33)) == 0);
    // (2^40)^2 = 2^80 crosses several words
    BigUint x = big_mul(big_from(1ull << 40), big_from(1ull << 40));
    CHECK(big_cmp(x, big_pow(big_from(2), 80)) == 0);
  }

  TEST_CASE("power identities") {
    CHECK(big_cmp(big_pow(big_from(3), 5000), big_pow(big_from(9), 2500)) == 0);
    CHECK(big_cmp(big_mul(big_pow(big_from(2), 200), big_pow(big_from(3), 100)),
                  big_pow(big_from(12), 100)) == 0);
    CHECK(big_cmp(big_pow(big_from(10), 50),
                  big_mul(big_pow(big_from(10), 49), big_from(10))) == 0);
    CHECK(big_cmp(big_pow(big_from(7), 0), big_from(1)) == 0);
  }

  TEST_CASE("strict inequalities survive huge exponents") {
    // 2^9729 vs 2^9729 + something: compare n^9729 for adjacent n
    CHECK(big_cmp(big_pow(big_from(242), 100), big_pow(big_from(243), 100)) == -1);
    CHECK(big_cmp(big_pow(big_from(244), 100), big_pow(big_from(243), 100)) == 1);
  }

  TEST_CASE("the stabilizer-order bound at its integer boundary") {
    // 24^(-1/3) * 9^3.243 is about 431.06: 431 is inside, 432 is out.
    CHECK(palfy_wolf_exact(431, 9));
    CHECK(!palfy_wolf_exact(432, 9));
    CHECK(palfy_wolf_exact(48, 9));
    CHECK(palfy_wolf_exact(9261, 512));
    CHECK(!palfy_wolf_exact(1000000, 9));
    // n = 2: bound ~3.284
    CHECK(palfy_wolf_exact(3, 2));
    CHECK(!palfy_wolf_exact(4, 2));
  }
}
