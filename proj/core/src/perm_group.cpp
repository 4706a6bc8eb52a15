#include "solvstab/perm_group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

#include "solvstab/errors.hpp"

namespace solvstab {

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)), cache_(std::make_shared<ChainCache>()) {
  if (degree < 0) throw PreconditionError("degree must be nonnegative");
  for (const Permutation& g : gens_)
    if (g.degree() != degree)
      throw DomainMismatch("generator degree " + std::to_string(g.degree()) +
                           " does not match group degree " + std::to_string(degree));
  if (gens_.empty()) gens_.push_back(Permutation(degree));
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {}); }

const StabilizerChain& PermGroup::chain() const {
  std::call_once(cache_->once, [this] {
    cache_->chain =
        std::make_unique<const StabilizerChain>(StabilizerChain::build(degree_, gens_));
  });
  return *cache_->chain;
}

std::vector<int> orbit(const PermGroup& G, int x) {
  if (x < 0 || x >= G.degree()) throw PreconditionError("orbit: point out of range");
  std::vector<int> orb{x};
  std::vector<char> seen(static_cast<size_t>(G.degree()), 0);
  seen[static_cast<size_t>(x)] = 1;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const Permutation& g : G.generators()) {
      int img = g(orb[i]);
      if (!seen[static_cast<size_t>(img)]) {
        seen[static_cast<size_t>(img)] = 1;
        orb.push_back(img);
      }
    }
  return orb;
}

std::vector<std::vector<int>> orbits(const PermGroup& G) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(static_cast<size_t>(G.degree()), 0);
  for (int x = 0; x < G.degree(); ++x) {
    if (seen[static_cast<size_t>(x)]) continue;
    std::vector<int> orb{x};
    seen[static_cast<size_t>(x)] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i)
      for (const Permutation& g : G.generators()) {
        int img = g(orb[i]);
        if (!seen[static_cast<size_t>(img)]) {
          seen[static_cast<size_t>(img)] = 1;
          orb.push_back(img);
        }
      }
    out.push_back(std::move(orb));
  }
  return out;
}

int number_of_orbits(const PermGroup& G) { return static_cast<int>(orbits(G).size()); }

bool is_transitive(const PermGroup& G) {
  return G.degree() <= 1 || static_cast<int>(orbit(G, 0).size()) == G.degree();
}

PermGroup pointwise_stabilizer(const PermGroup& G, const std::vector<int>& pts) {
  if (pts.empty()) return G;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] < 0 || pts[i] >= G.degree())
      throw PreconditionError("stabilizer point out of range");
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) throw PreconditionError("stabilizer points must be distinct");
  }
  StabilizerChain chain = StabilizerChain::build(G.degree(), G.generators(), pts);
  std::vector<Permutation> gens = chain.strong_generators(pts.size());
  return PermGroup(G.degree(), reduce_generators(G.degree(), gens));
}

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

}  // namespace

PermGroup setwise_stabilizer(const PermGroup& G, std::uint32_t subset_mask) {
  if (G.degree() > kSetwiseDegreeBound)
    throw BoundError("setwise_stabilizer: degree " + std::to_string(G.degree()) +
                     " exceeds bound " + std::to_string(kSetwiseDegreeBound));
  const std::uint32_t full =
      G.degree() == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << G.degree()) - 1;
  if ((subset_mask & ~full) != 0)
    throw PreconditionError("subset mask has bits outside the domain");
  if (subset_mask == 0 || subset_mask == full) return G;

  // Orbit of the bitmask with witnesses, then Schreier generators.
  std::vector<std::uint32_t> orb{subset_mask};
  std::vector<Permutation> witness{Permutation(G.degree())};
  std::unordered_map<std::uint32_t, std::size_t> pos{{subset_mask, 0}};
  std::vector<Permutation> sgens;
  for (std::size_t i = 0; i < orb.size(); ++i) {
    for (const Permutation& g : G.generators()) {
      std::uint32_t img = mask_image(orb[i], g);
      auto it = pos.find(img);
      if (it == pos.end()) {
        pos.emplace(img, orb.size());
        orb.push_back(img);
        witness.push_back(compose(witness[i], g));
      } else {
        Permutation schreier =
            compose(compose(witness[i], g), witness[it->second].inverse());
        if (!schreier.is_identity()) sgens.push_back(std::move(schreier));
      }
    }
  }
  return PermGroup(G.degree(), reduce_generators(G.degree(), sgens));
}

PermGroup setwise_stabilizer(const PermGroup& G, const std::vector<int>& subset) {
  std::uint32_t mask = 0;
  for (int x : subset) {
    if (x < 0 || x >= G.degree()) throw PreconditionError("subset point out of range");
    mask |= std::uint32_t{1} << x;
  }
  return setwise_stabilizer(G, mask);
}

std::vector<Permutation> reduce_generators(int degree, const std::vector<Permutation>& gens) {
  StabilizerChain chain = StabilizerChain::build(degree, {});
  std::vector<Permutation> kept;
  for (const Permutation& g : gens)
    if (chain.extend(g)) kept.push_back(g);
  return kept;
}

PermGroup derived_subgroup(const PermGroup& G) {
  StabilizerChain chain = StabilizerChain::build(G.degree(), {});
  std::vector<Permutation> gens;
  std::deque<Permutation> work;
  auto add = [&](Permutation c) {
    if (chain.extend(c)) {
      gens.push_back(c);
      work.push_back(std::move(c));
    }
  };
  for (const Permutation& a : G.generators())
    for (const Permutation& b : G.generators()) add(commutator(a, b));
  while (!work.empty()) {
    Permutation h = std::move(work.front());
    work.pop_front();
    for (const Permutation& g : G.generators()) add(conjugate(h, g));
  }
  return PermGroup(G.degree(), std::move(gens));
}

std::vector<PermGroup> derived_series(const PermGroup& G) {
  std::vector<PermGroup> series{G};
  for (;;) {
    const PermGroup& cur = series.back();
    std::uint64_t cur_order = cur.order();
    if (cur_order == 1) break;
    PermGroup next = derived_subgroup(cur);
    if (next.order() == cur_order) break;  // perfect core: series stabilized above 1
    series.push_back(std::move(next));
  }
  return series;
}

int derived_length(const PermGroup& G) {
  std::vector<PermGroup> series = derived_series(G);
  if (series.back().order() != 1)
    throw NotSolvable("derived series stabilizes at order " +
                      std::to_string(series.back().order()) + " > 1: not solvable");
  return static_cast<int>(series.size()) - 1;
}

bool is_abelian(const PermGroup& G) {
  const auto& gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
  return true;
}

bool is_solvable(const PermGroup& G) { return derived_series(G).back().order() == 1; }

bool is_cyclic(const PermGroup& G) {
  std::uint64_t n = G.order();
  if (n > kExhaustiveOrderBound)
    throw BoundError("is_cyclic: order " + std::to_string(n) + " exceeds exhaustive bound " +
                     std::to_string(kExhaustiveOrderBound));
  if (!is_abelian(G)) return false;
  bool found = false;
  visit_elements(G, [&](const Permutation& p) {
    if (p.order() == n) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  }
  // Merge, keeping the smaller point as representative. Returns the absorbed
  // representative, or -1 if already merged.
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return -1;
    if (a > b) std::swap(a, b);
    parent[static_cast<size_t>(b)] = a;
    return b;
  }
};

// Finest block system in which 0 and seed lie in a common block.
std::vector<std::vector<int>> block_system_for_seed(const PermGroup& G, int seed) {
  const int n = G.degree();
  UnionFind uf(n);
  std::vector<int> queue;
  int absorbed = uf.unite(0, seed);
  if (absorbed != -1) queue.push_back(absorbed);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int gamma = queue[qi];
    int delta = uf.find(gamma);
    for (const Permutation& g : G.generators()) {
      int merged = uf.unite(g(gamma), g(delta));
      if (merged != -1) queue.push_back(merged);
    }
  }
  std::vector<std::vector<int>> blocks;
  std::unordered_map<int, std::size_t> index;
  for (int x = 0; x < n; ++x) {
    int r = uf.find(x);
    auto it = index.find(r);
    if (it == index.end()) {
      index.emplace(r, blocks.size());
      blocks.push_back({x});
    } else {
      blocks[it->second].push_back(x);
    }
  }
  return blocks;
}

}  // namespace

std::optional<std::vector<std::vector<int>>> minimal_blocks(const PermGroup& G) {
  if (!is_transitive(G))
    throw PreconditionError("minimal_blocks requires a transitive group");
  const int n = G.degree();
  std::optional<std::vector<std::vector<int>>> best;
  std::size_t best_size = static_cast<std::size_t>(n);
  for (int x = 1; x < n; ++x) {
    auto blocks = block_system_for_seed(G, x);
    std::size_t b = blocks[0].size();
    if (b < static_cast<std::size_t>(n) && b < best_size) {
      best_size = b;
      best = std::move(blocks);
    }
  }
  return best;
}

bool is_primitive(const PermGroup& G) {
  return is_transitive(G) && !minimal_blocks(G).has_value();
}

namespace {

bool visit_rec(const StabilizerChain& chain, std::size_t level, const Permutation& partial,
               const std::function<bool(const Permutation&)>& fn) {
  if (level == chain.num_levels()) return fn(partial);
  for (const Permutation& u : chain.level(level).transversal)
    if (!visit_rec(chain, level + 1, compose(u, partial), fn)) return false;
  return true;
}

}  // namespace

bool visit_elements(const PermGroup& G, const std::function<bool(const Permutation&)>& fn) {
  return visit_rec(G.chain(), 0, Permutation(G.degree()), fn);
}

std::vector<Permutation> elements(const PermGroup& G, std::uint64_t limit) {
  std::uint64_t n = G.order();
  if (n > limit)
    throw BoundError("elements: order " + std::to_string(n) + " exceeds limit " +
                     std::to_string(limit));
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(n));
  visit_elements(G, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

PermGroup intersection(const PermGroup& A, const PermGroup& B, std::uint64_t order_limit) {
  if (A.degree() != B.degree())
    throw DomainMismatch("intersection: groups live on different domains");
  const PermGroup& small = A.order() <= B.order() ? A : B;
  const PermGroup& other = A.order() <= B.order() ? B : A;
  if (small.order() > order_limit)
    throw BoundError("intersection: order " + std::to_string(small.order()) +
                     " exceeds element-filter limit " + std::to_string(order_limit));
  StabilizerChain chain = StabilizerChain::build(A.degree(), {});
  std::vector<Permutation> gens;
  visit_elements(small, [&](const Permutation& p) {
    if (other.contains(p) && chain.extend(p)) gens.push_back(p);
    return true;
  });
  return PermGroup(A.degree(), std::move(gens));
}

}  // namespace solvstab
