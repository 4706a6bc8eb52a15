#pragma once

#include <optional>
#include <string>
#include <vector>

namespace solvstab {

/// Square matrix over the prime field F_p, row-major entries in [0, p).
/// The library acts with row vectors: v -> v * A, so products compose left
/// to right (v * (A*B) applies A first).
struct Mat {
  int p = 0;
  int n = 0;
  std::vector<int> a;  // row-major, size n*n

  Mat() = default;
  Mat(int p_, int n_) : p(p_), n(n_), a(static_cast<size_t>(n_) * n_, 0) {}

  static Mat identity(int p, int n);

  int at(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }
  int& at(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }

  bool operator==(const Mat& other) const = default;
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_pow(Mat x, std::int64_t e);
std::vector<int> row_times_mat(const std::vector<int>& v, const Mat& m);
int mat_det(const Mat& m);
std::optional<Mat> mat_inverse(const Mat& m);

/// Exact byte key (2 bytes per entry); used for closure sets and dedup.
std::string mat_key(const Mat& m);

}  // namespace solvstab
