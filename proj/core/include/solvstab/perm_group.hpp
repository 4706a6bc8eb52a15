#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "solvstab/perm.hpp"
#include "solvstab/stabilizer_chain.hpp"

namespace solvstab {

/// setwise_stabilizer keeps the whole power-set orbit of the subset in
/// memory, so the degree is capped.
inline constexpr int kSetwiseDegreeBound = 24;

/// is_cyclic enumerates all elements; beyond this order it refuses rather
/// than guesses. intersection() uses the same cutoff for its element filter.
inline constexpr std::uint64_t kExhaustiveOrderBound = 10000;

/// A permutation group given by generators. The stabilizer chain is built on
/// demand, once, under a single-initialization guard; after construction the
/// object is immutable and can be shared freely across threads.
class PermGroup {
 public:
  /// Generators must share `degree`. An empty list is replaced by the
  /// identity so the generator sequence is always nonempty.
  PermGroup(int degree, std::vector<Permutation> generators);

  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  /// The cached chain. The reference lives as long as this group or any of
  /// its copies; do not call on a temporary.
  const StabilizerChain& chain() const;
  std::uint64_t order() const { return chain().order(); }
  bool contains(const Permutation& p) const { return chain().contains(p); }

 private:
  struct ChainCache {
    std::once_flag once;
    std::unique_ptr<const StabilizerChain> chain;
  };

  int degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<ChainCache> cache_;  // shared by copies; chain is immutable
};

/// Breadth-first closure of {x} under the generators, in deterministic
/// discovery order.
std::vector<int> orbit(const PermGroup& G, int x);

/// All orbits, each in discovery order, listed by ascending smallest element.
std::vector<std::vector<int>> orbits(const PermGroup& G);

int number_of_orbits(const PermGroup& G);
bool is_transitive(const PermGroup& G);

/// Subgroup fixing every point of `pts`, obtained from a chain whose base
/// begins with `pts`.
PermGroup pointwise_stabilizer(const PermGroup& G, const std::vector<int>& pts);

/// Subgroup mapping the subset (a bitmask over the domain) to itself,
/// computed by orbiting the bitmask and reading Schreier generators.
/// Requires degree <= kSetwiseDegreeBound.
PermGroup setwise_stabilizer(const PermGroup& G, std::uint32_t subset_mask);
PermGroup setwise_stabilizer(const PermGroup& G, const std::vector<int>& subset);

/// Derived subgroup: normal closure (in G) of the commutators of all ordered
/// generator pairs.
PermGroup derived_subgroup(const PermGroup& G);

/// G = G^(0) > G^(1) > ... computed until the order stabilizes; the last
/// entry is trivial exactly when G is solvable.
std::vector<PermGroup> derived_series(const PermGroup& G);

/// Number of steps the derived series needs to reach the trivial group.
/// Throws NotSolvable when it never does.
int derived_length(const PermGroup& G);

bool is_abelian(const PermGroup& G);
bool is_solvable(const PermGroup& G);

/// Searches for an element whose order equals |G|, exhaustively. Requires
/// order <= kExhaustiveOrderBound (nonabelian groups are rejected without a
/// search; a cyclic group is abelian).
bool is_cyclic(const PermGroup& G);

/// A nontrivial minimal block system, found by the union-find block
/// algorithm seeded with each pair (0, x); nullopt means primitive.
/// Requires a transitive group.
std::optional<std::vector<std::vector<int>>> minimal_blocks(const PermGroup& G);

bool is_primitive(const PermGroup& G);

/// Visit every element once (transversal products, deterministic order).
/// Stops early when fn returns false; returns false in that case.
bool visit_elements(const PermGroup& G, const std::function<bool(const Permutation&)>& fn);

/// All elements. Throws BoundError when the order exceeds `limit`.
std::vector<Permutation> elements(const PermGroup& G,
                                  std::uint64_t limit = kExhaustiveOrderBound);

/// Intersection by exhaustive element filter over the smaller group.
/// Throws BoundError when that order exceeds `order_limit`.
PermGroup intersection(const PermGroup& A, const PermGroup& B,
                       std::uint64_t order_limit = kExhaustiveOrderBound);

/// Drops generators that do not enlarge the generated group; deterministic.
std::vector<Permutation> reduce_generators(int degree, const std::vector<Permutation>& gens);

}  // namespace solvstab
