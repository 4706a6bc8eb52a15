#pragma once

// Test-only brute-force oracles. Everything here works on explicit element
// sets with plain hash-set closures and never touches the stabilizer-chain
// machinery, so it can independently check the engine.

#include <cstdint>
#include <vector>

#include "solvstab/matrix.hpp"
#include "solvstab/perm.hpp"

namespace solvstab::oracle {

/// Closure of the generators under composition; throws if it exceeds limit.
std::vector<Permutation> closure(int degree, const std::vector<Permutation>& gens,
                                 std::size_t limit = 200000);

/// Normal closure of all generator-pair commutators, computed on raw element
/// sets (multiplicative closure interleaved with conjugation by the parent
/// generators).
std::vector<Permutation> derived_subgroup_elements(int degree,
                                                   const std::vector<Permutation>& gens,
                                                   std::size_t limit = 200000);

/// Orders of the full derived series computed with the oracle above.
std::vector<std::uint64_t> derived_series_orders(int degree,
                                                 const std::vector<Permutation>& gens,
                                                 std::size_t limit = 200000);

/// Matrix closure under multiplication.
std::vector<Mat> matrix_closure(const std::vector<Mat>& gens, std::size_t limit = 200000);

/// All invertible n x n matrices over F_p, by scanning every matrix and
/// keeping the ones with nonzero determinant.
std::vector<Mat> all_invertible(int p, int n);

/// Derived length of an explicit element set (commutator closure on sets).
int derived_length_of_elements(int degree, const std::vector<Permutation>& elements);

}  // namespace solvstab::oracle
