#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "solvstab/perm.hpp"

namespace solvstab {

/// Base, strong generating set, basic orbits and explicit transversals for a
/// permutation group. This is the engine behind order, membership and
/// stabilizer queries.
///
/// Construction is a deterministic Schreier-Sims: base points are chosen as
/// the smallest point moved at each level (after any caller-prescribed base
/// prefix), no randomization is used, and all outputs are reproducible.
/// Transversals are stored as explicit permutations; memory is not a
/// constraint at the degrees this library supports.
class StabilizerChain {
 public:
  struct Level {
    int base_point = -1;
    std::vector<int> orbit;        // discovery order; orbit[0] == base_point
    std::vector<int> orbit_pos;    // point -> index into orbit, or -1
    std::vector<Permutation> transversal;      // u with u(base_point) == orbit[k]
    std::vector<Permutation> transversal_inv;  // inverses, kept in step
  };

  /// Build a chain for the group generated by `gens`. If `base_prefix` is
  /// nonempty, the base is forced to begin with exactly those points (they
  /// are kept even when their basic orbit is trivial), so the strong
  /// generators at level base_prefix.size() generate the pointwise
  /// stabilizer of the prefix.
  static StabilizerChain build(int degree, const std::vector<Permutation>& gens,
                               const std::vector<int>& base_prefix = {});

  int degree() const { return degree_; }
  const std::vector<int>& base() const { return base_; }
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;

  std::size_t num_levels() const { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }

  /// Strong generators fixing base[0..k-1] pointwise. k = 0 gives a
  /// generating set of the whole group.
  std::vector<Permutation> strong_generators(std::size_t k) const;

  /// Add one more generator and restore chain completeness. Returns false if
  /// the element was already a member (chain unchanged).
  bool extend(const Permutation& g);

  /// Strips p through the chain starting at `from`; returns the first level
  /// whose basic orbit does not absorb the image of its base point, together
  /// with the residue. A residue equal to the identity at level num_levels()
  /// means p is a member.
  std::pair<std::size_t, Permutation> strip(Permutation p, std::size_t from = 0) const;

 private:
  struct StrongGen {
    Permutation p;
    std::size_t level;  // first base index moved by p
  };

  explicit StabilizerChain(int degree) : degree_(degree) {}

  void append_base_point(int pt);
  void add_strong_gen(Permutation p);
  void recompute_orbit(std::size_t lvl);
  std::vector<const Permutation*> gens_at(std::size_t lvl) const;
  void complete_from(std::size_t start);

  int degree_;
  std::vector<int> base_;
  std::vector<Level> levels_;
  std::vector<StrongGen> gens_;
};

}  // namespace solvstab
