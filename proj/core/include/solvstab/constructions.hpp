#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "solvstab/ffield.hpp"
#include "solvstab/mat_group.hpp"
#include "solvstab/perm_group.hpp"

namespace solvstab {

/// Matrix of multiplication by the field element a, acting on F_{p^m} viewed
/// as F_p^m in the power basis {1, w, ..., w^{m-1}} of the primitive element
/// w. The power basis fixes all matrices uniquely; imported data must be
/// aligned to it.
Mat multiplication_matrix(const ExtField& F, int a);

/// Matrix of the Frobenius a -> a^p in the same basis.
Mat frobenius_matrix(const ExtField& F);

/// The Singer cycle <w>: cyclic of order p^m - 1, regular on the nonzero
/// vectors.
MatrixGroup gamma0(int p, int m);

/// <w, Frobenius>: order m * (p^m - 1). For m = 1 this is the scalar group.
MatrixGroup semilinear_group(int p, int m);

/// <w^d, phi^e w^c> where the twisted generator is the map a -> a^{p^e} * w^c.
/// Requires d | p^m - 1, e | m and 0 <= c < p^m - 1.
MatrixGroup semilinear_subgroup(int p, int m, int d, int e, int c);

struct SemilinearSubgroup {
  int d, e, c;  // first parameter triple reaching this subgroup in the sweep
  std::uint64_t order;
  bool is_gamma0;  // element set equals the full <w>
  bool is_full;    // element set equals the full semilinear group
  MatrixGroup group;
};

/// Every distinct subgroup produced by the full parameter sweep
/// d | p^m - 1 (ascending), e | m (ascending), 0 <= c < p^m - 1,
/// deduplicated by element-set equality. The sweep reaches every subgroup
/// generated by at most one element of each factor type; it is a coverage
/// tool, not a subgroup-lattice classification.
std::vector<SemilinearSubgroup> enumerate_semilinear_subgroups(int p, int m,
                                                               bool irreducible_only);

/// Imprimitive embedding: generators of H placed in the first a x a diagonal
/// block (identity elsewhere) plus a block-permutation matrix for each
/// generator of S, in dimension a * degree(S). When S is transitive the
/// generated group is the full wreath product, of order |H|^m * |S|.
MatrixGroup wreath_linear(const MatrixGroup& H, const PermGroup& S);

/// V rtimes M acting on the p^n vector indices: the linear generators as
/// permutations plus the n coordinate translations v -> v + e_i.
PermGroup affine_group(const MatrixGroup& M);

/// Pointwise stabilizer of {x, y}; for A = affine_group(M), x = 0 and
/// y = index(v) this equals centralizer_of_vector(M, v).
PermGroup two_point_stabilizer(const PermGroup& A, int x, int y);

/// Supported names: "GL(n,p)" (n <= 4, p^n within the action bound),
/// "SL(2,3)", "Q8-in-GL(2,3)", "C31:C3-in-GL(3,5)".
MatrixGroup named_group(const std::string& name);

struct NamedPermGroup {
  std::string label;
  PermGroup group;
};

/// The transitive solvable permutation groups of degree 2..5 (one per
/// conjugacy class, fixed generators): S2; C3, S3; C4, V4, D4, A4, S4;
/// C5, D5, F20.
std::vector<NamedPermGroup> transitive_solvable_groups(int degree);

}  // namespace solvstab
