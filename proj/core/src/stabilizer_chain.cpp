#include "solvstab/stabilizer_chain.hpp"

#include <algorithm>
#include <string>

#include "solvstab/errors.hpp"

namespace solvstab {

StabilizerChain StabilizerChain::build(int degree, const std::vector<Permutation>& gens,
                                       const std::vector<int>& base_prefix) {
  StabilizerChain chain(degree);
  for (int pt : base_prefix) {
    if (pt < 0 || pt >= degree)
      throw PreconditionError("base point " + std::to_string(pt) + " out of range");
    if (std::find(chain.base_.begin(), chain.base_.end(), pt) != chain.base_.end())
      throw PreconditionError("base prefix points must be distinct");
    chain.append_base_point(pt);
  }
  for (const Permutation& g : gens) {
    if (g.degree() != degree) throw DomainMismatch("generator degree mismatch");
    if (!g.is_identity()) chain.add_strong_gen(g);
  }
  for (std::size_t i = 0; i < chain.levels_.size(); ++i) chain.recompute_orbit(i);
  chain.complete_from(chain.levels_.empty() ? 0 : chain.levels_.size() - 1);
  return chain;
}

void StabilizerChain::append_base_point(int pt) {
  base_.push_back(pt);
  Level lvl;
  lvl.base_point = pt;
  levels_.push_back(std::move(lvl));
  recompute_orbit(levels_.size() - 1);
}

void StabilizerChain::add_strong_gen(Permutation p) {
  std::size_t lvl = 0;
  while (lvl < base_.size() && p(base_[lvl]) == base_[lvl]) ++lvl;
  if (lvl == base_.size()) {
    append_base_point(p.smallest_moved_point());
  }
  for (const StrongGen& g : gens_)
    if (g.p == p) return;  // exact duplicate, keep the set lean
  gens_.push_back(StrongGen{std::move(p), lvl});
}

std::vector<const Permutation*> StabilizerChain::gens_at(std::size_t lvl) const {
  std::vector<const Permutation*> out;
  for (const StrongGen& g : gens_)
    if (g.level >= lvl) out.push_back(&g.p);
  return out;
}

void StabilizerChain::recompute_orbit(std::size_t li) {
  Level& lvl = levels_[li];
  lvl.orbit.clear();
  lvl.transversal.clear();
  lvl.transversal_inv.clear();
  lvl.orbit_pos.assign(static_cast<size_t>(degree_), -1);

  lvl.orbit.push_back(lvl.base_point);
  lvl.orbit_pos[static_cast<size_t>(lvl.base_point)] = 0;
  lvl.transversal.push_back(Permutation(degree_));
  lvl.transversal_inv.push_back(Permutation(degree_));

  auto gens = gens_at(li);
  for (std::size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
    int pt = lvl.orbit[qi];
    for (const Permutation* g : gens) {
      int img = (*g)(pt);
      if (lvl.orbit_pos[static_cast<size_t>(img)] == -1) {
        lvl.orbit_pos[static_cast<size_t>(img)] = static_cast<int>(lvl.orbit.size());
        lvl.orbit.push_back(img);
        Permutation u = compose(lvl.transversal[qi], *g);
        lvl.transversal_inv.push_back(u.inverse());
        lvl.transversal.push_back(std::move(u));
      }
    }
  }
}

std::pair<std::size_t, Permutation> StabilizerChain::strip(Permutation p,
                                                           std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& lvl = levels_[i];
    int img = p(lvl.base_point);
    if (img == lvl.base_point) continue;
    int pos = lvl.orbit_pos[static_cast<size_t>(img)];
    if (pos == -1) return {i, std::move(p)};
    p = compose(p, lvl.transversal_inv[static_cast<size_t>(pos)]);
  }
  return {levels_.size(), std::move(p)};
}

void StabilizerChain::complete_from(std::size_t start) {
  if (levels_.empty()) return;
  int i = static_cast<int>(std::min(start, levels_.size() - 1));
  while (i >= 0) {
    const std::size_t li = static_cast<std::size_t>(i);
    recompute_orbit(li);
    const std::size_t orbit_size = levels_[li].orbit.size();
    auto gens = gens_at(li);
    bool clean = true;
    for (std::size_t oi = 0; oi < orbit_size && clean; ++oi) {
      for (const Permutation* g : gens) {
        const Level& lvl = levels_[li];
        int img = (*g)(lvl.orbit[oi]);
        int ipos = lvl.orbit_pos[static_cast<size_t>(img)];
        Permutation schreier = compose(compose(lvl.transversal[oi], *g),
                                       lvl.transversal_inv[static_cast<size_t>(ipos)]);
        if (schreier.is_identity()) continue;
        auto [j, residue] = strip(std::move(schreier), li + 1);
        if (residue.is_identity()) continue;
        // Extract everything before mutating levels_/gens_: the pointers in
        // `gens` and references into levels_ become stale afterwards.
        if (j == levels_.size()) append_base_point(residue.smallest_moved_point());
        gens_.push_back(StrongGen{std::move(residue), j});
        i = static_cast<int>(j);
        clean = false;
        break;
      }
    }
    if (clean) --i;
  }
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t n = 1;
  for (const Level& lvl : levels_) n *= static_cast<std::uint64_t>(lvl.orbit.size());
  return n;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  auto [lvl, residue] = strip(p, 0);
  return lvl == levels_.size() && residue.is_identity();
}

std::vector<Permutation> StabilizerChain::strong_generators(std::size_t k) const {
  std::vector<Permutation> out;
  for (const StrongGen& g : gens_)
    if (g.level >= k) out.push_back(g.p);
  return out;
}

bool StabilizerChain::extend(const Permutation& g) {
  if (g.degree() != degree_) throw DomainMismatch("extend: degree mismatch");
  auto [j, residue] = strip(g, 0);
  if (residue.is_identity()) return false;
  if (j == levels_.size()) append_base_point(residue.smallest_moved_point());
  gens_.push_back(StrongGen{std::move(residue), j});
  complete_from(j);
  return true;
}

}  // namespace solvstab
