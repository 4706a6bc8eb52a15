#include "solvstab/powerset.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "solvstab/errors.hpp"

namespace solvstab {

namespace {

std::uint32_t mask_image(std::uint32_t mask, const Permutation& p) {
  std::uint32_t out = 0;
  while (mask) {
    int x = std::countr_zero(mask);
    mask &= mask - 1;
    out |= std::uint32_t{1} << p(x);
  }
  return out;
}

void check_degree(const PermGroup& S) {
  if (S.degree() > kPowersetDegreeBound)
    throw BoundError("power-set sweep: degree " + std::to_string(S.degree()) +
                     " exceeds bound " + std::to_string(kPowersetDegreeBound));
}

}  // namespace

SubsetOrbitTable::SubsetOrbitTable(const PermGroup& S) : degree_(S.degree()) {
  check_degree(S);
  group_order_ = S.order();
  const std::uint32_t count = std::uint32_t{1} << degree_;
  orbit_id_.assign(count, -1);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t start = 0; start < count; ++start) {
    if (orbit_id_[start] != -1) continue;
    const std::int32_t id = static_cast<std::int32_t>(reps_.size());
    reps_.push_back(start);
    queue.clear();
    queue.push_back(start);
    orbit_id_[start] = id;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (const Permutation& g : S.generators()) {
        std::uint32_t img = mask_image(queue[qi], g);
        if (orbit_id_[img] == -1) {
          orbit_id_[img] = id;
          queue.push_back(img);
        }
      }
    sizes_.push_back(static_cast<std::uint32_t>(queue.size()));
  }
  const std::uint32_t full = count - 1;
  complement_.reserve(reps_.size());
  for (std::uint32_t rep : reps_) complement_.push_back(orbit_id_[full ^ rep]);
}

std::vector<std::uint32_t> regular_powerset_orbits(const PermGroup& S) {
  if (!is_transitive(S))
    throw PreconditionError("regular_powerset_orbits requires a transitive group");
  SubsetOrbitTable table(S);
  std::vector<std::uint32_t> out;
  for (std::size_t id = 0; id < table.num_orbits(); ++id)
    if (table.regular(id)) out.push_back(table.representative(id));
  return out;
}

RegularOrbitWitness regular_orbit_noncomplement(const PermGroup& S) {
  if (!is_primitive(S))
    throw PreconditionError("regular_orbit_noncomplement requires a primitive group");
  SubsetOrbitTable table(S);
  RegularOrbitWitness result;
  for (std::size_t id = 0; id < table.num_orbits(); ++id) {
    if (!table.regular(id)) continue;
    ++result.regular_count;
    if (!result.witness && table.complement_orbit(id) != static_cast<std::int32_t>(id))
      result.witness = table.representative(id);
  }
  return result;
}

namespace {

// Orbit size of `mask` under H; trivial setwise stabilizer iff it equals |H|.
std::uint64_t mask_orbit_size(const PermGroup& H, std::uint32_t mask) {
  std::vector<std::uint32_t> queue{mask};
  std::vector<std::uint32_t> sorted{mask};
  for (std::size_t qi = 0; qi < queue.size(); ++qi)
    for (const Permutation& g : H.generators()) {
      std::uint32_t img = mask_image(queue[qi], g);
      auto it = std::lower_bound(sorted.begin(), sorted.end(), img);
      if (it == sorted.end() || *it != img) {
        sorted.insert(it, img);
        queue.push_back(img);
      }
    }
  return queue.size();
}

}  // namespace

std::vector<std::uint32_t> trivializing_partition(const PermGroup& S) {
  if (!is_primitive(S))
    throw PreconditionError("trivializing_partition requires a primitive group");
  check_degree(S);
  const std::uint32_t full = (std::uint32_t{1} << S.degree()) - 1;
  const std::uint64_t order = S.order();
  if (order == 1) return {full};  // degree-1 domain

  SubsetOrbitTable table(S);

  // k = 2: any subset with trivial setwise stabilizer works, because a
  // subset and its complement have the same stabilizer. Take the least one.
  for (std::uint32_t mask = 1; mask < full; ++mask)
    if (table.regular(static_cast<std::size_t>(table.orbit_id(mask))))
      return {mask, full ^ mask};

  // k = 3: first part ranges over orbit representatives, second over
  // submasks of the rest; the third part is implied (stabilizing two parts
  // of a partition stabilizes the third).
  for (std::size_t id = 0; id < table.num_orbits(); ++id) {
    std::uint32_t d1 = table.representative(id);
    if (d1 == 0 || d1 == full) continue;
    PermGroup s1 = setwise_stabilizer(S, d1);
    const std::uint32_t rest = full ^ d1;
    for (std::uint32_t d2 = 1; d2 < rest; ++d2) {
      if ((d2 & rest) != d2) continue;
      if (mask_orbit_size(s1, d2) == s1.order()) return {d1, d2, rest ^ d2};
    }
  }

  // k = 4.
  for (std::size_t id = 0; id < table.num_orbits(); ++id) {
    std::uint32_t d1 = table.representative(id);
    if (d1 == 0 || d1 == full) continue;
    PermGroup s1 = setwise_stabilizer(S, d1);
    const std::uint32_t rest1 = full ^ d1;
    for (std::uint32_t d2 = 1; d2 < rest1; ++d2) {
      if ((d2 & rest1) != d2) continue;
      PermGroup s2 = setwise_stabilizer(s1, d2);
      const std::uint32_t rest2 = rest1 ^ d2;
      for (std::uint32_t d3 = 1; d3 < rest2; ++d3) {
        if ((d3 & rest2) != d3) continue;
        if (mask_orbit_size(s2, d3) == s2.order()) return {d1, d2, d3, rest2 ^ d3};
      }
    }
  }

  throw Error("no trivializing partition with k <= 4 found for degree " +
              std::to_string(S.degree()) +
              ": this contradicts the expected bound and indicates a bug or a "
              "genuine counterexample");
}

}  // namespace solvstab
