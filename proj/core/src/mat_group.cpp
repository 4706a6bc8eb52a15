#include "solvstab/mat_group.hpp"

#include <algorithm>
#include <string>

#include "solvstab/errors.hpp"
#include "solvstab/ffield.hpp"

namespace solvstab {

int vector_index(const std::vector<int>& v, int p) {
  int idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < 0 || v[i] >= p) throw PreconditionError("vector entry out of range");
    idx = idx * p + v[i];
  }
  return idx;
}

std::vector<int> index_vector(int idx, int p, int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    v[static_cast<size_t>(i)] = idx % p;
    idx /= p;
  }
  return v;
}

MatrixGroup::MatrixGroup(int p, int n, std::vector<Mat> generators)
    : p_(p), n_(n), gens_(std::move(generators)), cache_(std::make_shared<RepCache>()) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (n < 1) throw PreconditionError("dimension must be >= 1");
  for (const Mat& g : gens_) {
    if (g.p != p || g.n != n) throw DomainMismatch("generator shape mismatch");
    for (int e : g.a)
      if (e < 0 || e >= p) throw PreconditionError("matrix entry out of range");
    if (mat_det(g) == 0) throw PreconditionError("generator matrix is singular");
  }
  if (gens_.empty()) gens_.push_back(Mat::identity(p, n));
}

std::int64_t MatrixGroup::action_size() const {
  std::int64_t q = 1;
  for (int i = 0; i < n_; ++i) q *= p_;
  return q;
}

PermGroup MatrixGroup::permutation_rep() const {
  std::call_once(cache_->once, [this] {
    std::int64_t q = action_size();
    if (q > kMaxActionSize)
      throw BoundError("vector action on " + std::to_string(q) +
                       " points exceeds bound " + std::to_string(kMaxActionSize));
    std::vector<Permutation> perms;
    perms.reserve(gens_.size());
    for (const Mat& g : gens_) {
      std::vector<int> images(static_cast<size_t>(q));
      std::vector<int> v(static_cast<size_t>(n_), 0);
      for (int idx = 0; idx < q; ++idx) {
        images[static_cast<size_t>(idx)] = vector_index(row_times_mat(v, g), p_);
        // increment v as a base-p counter (keeps idx == vector_index(v))
        for (int i = 0; i < n_; ++i) {
          if (++v[static_cast<size_t>(i)] < p_) break;
          v[static_cast<size_t>(i)] = 0;
        }
      }
      perms.emplace_back(std::move(images));
    }
    cache_->rep = std::make_unique<const PermGroup>(static_cast<int>(q), std::move(perms));
  });
  return *cache_->rep;
}

PermGroup to_permutation_rep(const MatrixGroup& M) { return M.permutation_rep(); }

std::vector<VectorOrbit> vector_orbits(const MatrixGroup& M) {
  PermGroup P = M.permutation_rep();
  std::vector<VectorOrbit> out;
  for (const std::vector<int>& orb : orbits(P))
    out.push_back(VectorOrbit{orb[0], orb.size()});
  return out;  // orbits() sweeps ascending, so representatives are least indices
}

PermGroup centralizer_of_vector(const MatrixGroup& M, int v_index) {
  PermGroup P = M.permutation_rep();
  if (v_index < 0 || v_index >= P.degree())
    throw PreconditionError("vector index out of range");
  return pointwise_stabilizer(P, {v_index});
}

namespace {

// Basis kept in full reduced echelon form (mutually reduced rows, pivot 1),
// so a single reduce pass decides membership.
struct Echelon {
  int p;
  std::vector<std::vector<int>> rows;
  std::vector<int> pivots;

  std::vector<int> reduce(std::vector<int> v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int c = v[static_cast<size_t>(pivots[r])];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] = static_cast<int>(
            ((v[j] - static_cast<std::int64_t>(c) * rows[r][j]) % p + p) % p);
    }
    return v;
  }

  bool insert(std::vector<int> v) {
    v = reduce(std::move(v));
    int pivot = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        pivot = static_cast<int>(j);
        break;
      }
    if (pivot == -1) return false;
    // normalize pivot to 1
    int inv = 1, c = v[static_cast<size_t>(pivot)], e = p - 2;
    while (e > 0) {
      if (e & 1) inv = static_cast<int>(static_cast<std::int64_t>(inv) * c % p);
      c = static_cast<int>(static_cast<std::int64_t>(c) * c % p);
      e >>= 1;
    }
    for (int& x : v) x = static_cast<int>(static_cast<std::int64_t>(x) * inv % p);
    // eliminate the new pivot column from every existing row
    for (std::size_t r = 0; r < rows.size(); ++r) {
      int f = rows[r][static_cast<size_t>(pivot)];
      if (f == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        rows[r][j] = static_cast<int>(
            ((rows[r][j] - static_cast<std::int64_t>(f) * v[j]) % p + p) % p);
    }
    rows.push_back(std::move(v));
    pivots.push_back(pivot);
    return true;
  }
};

}  // namespace

std::vector<std::vector<int>> spin(const MatrixGroup& M, int v_index) {
  if (v_index == 0) throw PreconditionError("spin of the zero vector is degenerate");
  std::vector<int> v = index_vector(v_index, M.characteristic(), M.dimension());
  Echelon ech{M.characteristic(), {}, {}};
  ech.insert(v);
  for (std::size_t i = 0; i < ech.rows.size(); ++i)
    for (const Mat& g : M.generators()) ech.insert(row_times_mat(ech.rows[i], g));

  // Rows are mutually reduced already; order them by pivot for a canonical
  // reduced echelon answer.
  std::vector<std::size_t> order(ech.rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return ech.pivots[a] < ech.pivots[b]; });
  std::vector<std::vector<int>> basis;
  for (std::size_t i : order) basis.push_back(ech.rows[i]);
  return basis;
}

bool is_irreducible(const MatrixGroup& M) {
  for (const VectorOrbit& orb : vector_orbits(M)) {
    if (orb.representative == 0) continue;
    if (static_cast<int>(spin(M, orb.representative).size()) != M.dimension()) return false;
  }
  return true;
}

MatrixGroup direct_sum(const MatrixGroup& A, const MatrixGroup& B) {
  if (A.characteristic() != B.characteristic())
    throw DomainMismatch("direct_sum requires a common characteristic");
  const int p = A.characteristic();
  const int na = A.dimension(), nb = B.dimension(), n = na + nb;
  std::vector<Mat> gens;
  for (const Mat& g : A.generators()) {
    Mat m = Mat::identity(p, n);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < na; ++j) m.at(i, j) = g.at(i, j);
    gens.push_back(std::move(m));
  }
  for (const Mat& g : B.generators()) {
    Mat m = Mat::identity(p, n);
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j) m.at(na + i, na + j) = g.at(i, j);
    gens.push_back(std::move(m));
  }
  return MatrixGroup(p, n, std::move(gens));
}

}  // namespace solvstab
