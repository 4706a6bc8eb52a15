#include "solvstab/matrix.hpp"

#include <cstdint>

#include "solvstab/errors.hpp"

namespace solvstab {

Mat Mat::identity(int p, int n) {
  Mat m(p, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.p != y.p || x.n != y.n) throw DomainMismatch("matrix product: shape mismatch");
  Mat out(x.p, x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      int xik = x.at(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < x.n; ++j)
        out.at(i, j) = static_cast<int>(
            (out.at(i, j) + static_cast<std::int64_t>(xik) * y.at(k, j)) % x.p);
    }
  return out;
}

Mat mat_pow(Mat x, std::int64_t e) {
  Mat result = Mat::identity(x.p, x.n);
  while (e > 0) {
    if (e & 1) result = mat_mul(result, x);
    x = mat_mul(x, x);
    e >>= 1;
  }
  return result;
}

std::vector<int> row_times_mat(const std::vector<int>& v, const Mat& m) {
  if (static_cast<int>(v.size()) != m.n) throw DomainMismatch("vector/matrix shape mismatch");
  std::vector<int> out(static_cast<size_t>(m.n), 0);
  for (int i = 0; i < m.n; ++i) {
    int vi = v[static_cast<size_t>(i)];
    if (vi == 0) continue;
    for (int j = 0; j < m.n; ++j)
      out[static_cast<size_t>(j)] = static_cast<int>(
          (out[static_cast<size_t>(j)] + static_cast<std::int64_t>(vi) * m.at(i, j)) % m.p);
  }
  return out;
}

namespace {

int mod_inverse(int a, int p) {
  int result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = static_cast<int>(static_cast<std::int64_t>(result) * base % p);
    base = static_cast<int>(static_cast<std::int64_t>(base) * base % p);
    e >>= 1;
  }
  return result;
}

}  // namespace

int mat_det(const Mat& m) {
  Mat w = m;
  const int p = m.p;
  std::int64_t det = 1;
  for (int col = 0; col < w.n; ++col) {
    int pivot = -1;
    for (int r = col; r < w.n; ++r)
      if (w.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot == -1) return 0;
    if (pivot != col) {
      for (int j = 0; j < w.n; ++j) std::swap(w.at(pivot, j), w.at(col, j));
      det = (p - det % p) % p;
    }
    det = det * w.at(col, col) % p;
    int inv = mod_inverse(w.at(col, col), p);
    for (int r = col + 1; r < w.n; ++r) {
      int factor = static_cast<int>(static_cast<std::int64_t>(w.at(r, col)) * inv % p);
      if (factor == 0) continue;
      for (int j = col; j < w.n; ++j)
        w.at(r, j) = static_cast<int>(
            ((w.at(r, j) - static_cast<std::int64_t>(factor) * w.at(col, j)) % p + p) % p);
    }
  }
  return static_cast<int>(det % p);
}

std::optional<Mat> mat_inverse(const Mat& m) {
  const int p = m.p, n = m.n;
  Mat w = m;
  Mat inv = Mat::identity(p, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (w.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot == -1) return std::nullopt;
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(w.at(pivot, j), w.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    int piv_inv = mod_inverse(w.at(col, col), p);
    for (int j = 0; j < n; ++j) {
      w.at(col, j) = static_cast<int>(static_cast<std::int64_t>(w.at(col, j)) * piv_inv % p);
      inv.at(col, j) = static_cast<int>(static_cast<std::int64_t>(inv.at(col, j)) * piv_inv % p);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      int factor = w.at(r, col);
      if (factor == 0) continue;
      for (int j = 0; j < n; ++j) {
        w.at(r, j) = static_cast<int>(
            ((w.at(r, j) - static_cast<std::int64_t>(factor) * w.at(col, j)) % p + p) % p);
        inv.at(r, j) = static_cast<int>(
            ((inv.at(r, j) - static_cast<std::int64_t>(factor) * inv.at(col, j)) % p + p) % p);
      }
    }
  }
  return inv;
}

std::string mat_key(const Mat& m) {
  std::string key;
  key.reserve(m.a.size() * 2);
  for (int v : m.a) {
    key.push_back(static_cast<char>(v & 0xff));
    key.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return key;
}

}  // namespace solvstab
