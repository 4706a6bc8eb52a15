#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "solvstab/matrix.hpp"
#include "solvstab/perm_group.hpp"

namespace solvstab {

/// Vector actions enumerate all p^n vectors; this caps that count. It admits
/// the largest concrete import this library ships (2^9 = 512) with headroom.
inline constexpr std::int64_t kMaxActionSize = 4096;

/// v = (c0,...,c_{n-1}) in F_p^n encoded as sum c_i * p^i. The zero vector
/// has index 0.
int vector_index(const std::vector<int>& v, int p);
std::vector<int> index_vector(int idx, int p, int n);

/// Group of invertible n x n matrices over the prime field F_p, acting on
/// V = F_p^n by v -> v * A. Immutable after construction; the induced
/// permutation representation is built once on demand and cached.
class MatrixGroup {
 public:
  MatrixGroup(int p, int n, std::vector<Mat> generators);

  int characteristic() const { return p_; }
  int dimension() const { return n_; }
  const std::vector<Mat>& generators() const { return gens_; }
  std::int64_t action_size() const;  // p^n

  /// Permutation action on all p^n vector indices; point 0 (the zero vector)
  /// is fixed by every element. Requires p^n <= kMaxActionSize. Returned by
  /// value; copies share the cached stabilizer chain.
  PermGroup permutation_rep() const;

  std::uint64_t order() const { return permutation_rep().order(); }

 private:
  struct RepCache {
    std::once_flag once;
    std::unique_ptr<const PermGroup> rep;
  };

  int p_, n_;
  std::vector<Mat> gens_;
  std::shared_ptr<RepCache> cache_;
};

PermGroup to_permutation_rep(const MatrixGroup& M);

struct VectorOrbit {
  int representative;  // least index in the orbit
  std::uint64_t size;
};

/// One representative per orbit on V (including the zero vector), listed by
/// ascending representative; sizes sum to p^n.
std::vector<VectorOrbit> vector_orbits(const MatrixGroup& M);

/// C_G(v): the matrices fixing v, as a permutation group on the vector
/// indices (all downstream structure queries live in the permutation engine).
PermGroup centralizer_of_vector(const MatrixGroup& M, int v_index);

/// Reduced-echelon basis of the smallest G-invariant subspace containing v.
/// Throws on v = 0.
std::vector<std::vector<int>> spin(const MatrixGroup& M, int v_index);

/// True iff spin(v) = V for one representative of every nonzero orbit.
bool is_irreducible(const MatrixGroup& M);

/// Block-diagonal join acting on the direct sum of the two spaces.
MatrixGroup direct_sum(const MatrixGroup& A, const MatrixGroup& B);

}  // namespace solvstab
