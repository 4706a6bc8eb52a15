#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "solvstab/perm_group.hpp"

namespace solvstab {

/// Power-set sweeps keep one word per subset; 2^22 entries is the ceiling.
inline constexpr int kPowersetDegreeBound = 22;

/// Orbit decomposition of the full power set of the domain under S. Subsets
/// are bitmasks; orbit representatives are the least bitmask of each orbit
/// and orbit ids follow ascending-representative order. Stabilizer orders
/// come from the orbit-stabilizer identity.
class SubsetOrbitTable {
 public:
  explicit SubsetOrbitTable(const PermGroup& S);  // degree <= kPowersetDegreeBound

  int degree() const { return degree_; }
  std::uint64_t group_order() const { return group_order_; }
  std::size_t num_orbits() const { return reps_.size(); }

  std::int32_t orbit_id(std::uint32_t mask) const { return orbit_id_[mask]; }
  std::uint32_t representative(std::size_t id) const { return reps_[id]; }
  std::uint32_t orbit_size(std::size_t id) const { return sizes_[id]; }
  std::uint64_t stabilizer_order(std::size_t id) const { return group_order_ / sizes_[id]; }
  bool regular(std::size_t id) const { return sizes_[id] == group_order_; }
  /// Orbit of the complement of this orbit's subsets.
  std::int32_t complement_orbit(std::size_t id) const { return complement_[id]; }

 private:
  int degree_;
  std::uint64_t group_order_;
  std::vector<std::int32_t> orbit_id_;
  std::vector<std::uint32_t> reps_;
  std::vector<std::uint32_t> sizes_;
  std::vector<std::int32_t> complement_;
};

/// Representatives (least bitmask per orbit, ascending) of the regular
/// power-set orbits: the subsets with trivial setwise stabilizer. Requires a
/// transitive S of degree <= kPowersetDegreeBound.
std::vector<std::uint32_t> regular_powerset_orbits(const PermGroup& S);

struct RegularOrbitWitness {
  int regular_count = 0;
  /// A regular representative whose complement lies in a different orbit.
  std::optional<std::uint32_t> witness;
};

/// Requires a primitive S. Reports the number of regular power-set orbits
/// and a regular representative not conjugate to its complement, if any.
RegularOrbitWitness regular_orbit_noncomplement(const PermGroup& S);

/// A partition of the domain into k <= 4 parts whose setwise stabilizers
/// intersect trivially. Search order: k ascending; for k = 2 the least
/// regular subset; for k >= 3 the first part ranges over orbit
/// representatives (ascending) and later parts over submasks of the rest
/// (ascending). Requires a primitive S; throws Error if nothing is found
/// with k <= 4, which would falsify either the search or the lemma it
/// mirrors.
std::vector<std::uint32_t> trivializing_partition(const PermGroup& S);

}  // namespace solvstab
