#include "oracles.hpp"

#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace solvstab::oracle {

namespace {

using PermSet = std::unordered_set<Permutation, PermHash>;

std::vector<Permutation> close_set(int degree, std::vector<Permutation> seed,
                                   const std::vector<Permutation>& conjugators,
                                   std::size_t limit) {
  PermSet seen;
  std::vector<Permutation> queue;
  auto push = [&](const Permutation& p) {
    if (seen.insert(p).second) queue.push_back(p);
  };
  push(Permutation(degree));
  for (const Permutation& p : seed) push(p);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    if (seen.size() > limit) throw std::runtime_error("oracle closure exceeded limit");
    for (const Permutation& s : seed) push(compose(queue[i], s));
    for (const Permutation& c : conjugators) push(conjugate(queue[i], c));
  }
  return queue;
}

}  // namespace

std::vector<Permutation> closure(int degree, const std::vector<Permutation>& gens,
                                 std::size_t limit) {
  return close_set(degree, gens, {}, limit);
}

std::vector<Permutation> derived_subgroup_elements(int degree,
                                                   const std::vector<Permutation>& gens,
                                                   std::size_t limit) {
  std::vector<Permutation> comms;
  for (const Permutation& a : gens)
    for (const Permutation& b : gens) {
      Permutation c = commutator(a, b);
      if (!c.is_identity()) comms.push_back(c);
    }
  return close_set(degree, comms, gens, limit);
}

namespace {

// Greedy generating subset of an explicit element list, found by repeated
// raw closures (no chains involved).
std::vector<Permutation> generating_subset(int degree,
                                           const std::vector<Permutation>& elements,
                                           std::size_t limit) {
  std::vector<Permutation> gens;
  PermSet current;
  current.insert(Permutation(degree));
  for (const Permutation& e : elements) {
    if (current.count(e)) continue;
    gens.push_back(e);
    for (const Permutation& p : close_set(degree, gens, {}, limit)) current.insert(p);
    if (current.size() == elements.size()) break;
  }
  return gens;
}

}  // namespace

std::vector<std::uint64_t> derived_series_orders(int degree,
                                                 const std::vector<Permutation>& gens,
                                                 std::size_t limit) {
  std::vector<std::uint64_t> orders;
  std::vector<Permutation> level_gens = gens;
  std::size_t level_order = closure(degree, level_gens, limit).size();
  orders.push_back(level_order);
  while (level_order > 1) {
    std::vector<Permutation> next = derived_subgroup_elements(degree, level_gens, limit);
    if (next.size() == level_order) break;  // stabilized above the identity
    orders.push_back(next.size());
    level_order = next.size();
    level_gens = generating_subset(degree, next, limit);
  }
  return orders;
}

std::vector<Mat> matrix_closure(const std::vector<Mat>& gens, std::size_t limit) {
  if (gens.empty()) return {};
  std::unordered_set<std::string> seen;
  std::vector<Mat> queue{Mat::identity(gens[0].p, gens[0].n)};
  seen.insert(mat_key(queue[0]));
  for (std::size_t i = 0; i < queue.size(); ++i) {
    if (seen.size() > limit) throw std::runtime_error("matrix closure exceeded limit");
    for (const Mat& g : gens) {
      Mat prod = mat_mul(queue[i], g);
      if (seen.insert(mat_key(prod)).second) queue.push_back(prod);
    }
  }
  return queue;
}

std::vector<Mat> all_invertible(int p, int n) {
  std::vector<Mat> out;
  std::int64_t count = 1;
  for (int i = 0; i < n * n; ++i) count *= p;
  for (std::int64_t k = 0; k < count; ++k) {
    Mat m(p, n);
    std::int64_t t = k;
    for (int i = 0; i < n * n; ++i) {
      m.a[static_cast<size_t>(i)] = static_cast<int>(t % p);
      t /= p;
    }
    if (mat_det(m) != 0) out.push_back(std::move(m));
  }
  return out;
}

int derived_length_of_elements(int degree, const std::vector<Permutation>& elements) {
  std::vector<Permutation> current = elements;
  int dl = 0;
  while (current.size() > 1) {
    PermSet derived_set;
    std::vector<Permutation> derived;
    auto push = [&](const Permutation& p) {
      if (derived_set.insert(p).second) derived.push_back(p);
    };
    push(Permutation(degree));
    for (const Permutation& a : current)
      for (const Permutation& b : current) push(commutator(a, b));
    // close under multiplication
    for (std::size_t i = 0; i < derived.size(); ++i)
      for (std::size_t j = 0; j < derived.size(); ++j) {
        Permutation prod = compose(derived[i], derived[j]);
        push(prod);
      }
    if (derived.size() == current.size()) throw std::runtime_error("not solvable");
    current = derived;
    ++dl;
  }
  return dl;
}

}  // namespace solvstab::oracle
