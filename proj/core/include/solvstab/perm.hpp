#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace solvstab {

/// A permutation of the points {0, ..., degree-1}, stored as an image table.
///
/// The composition convention is fixed across the whole library and is part
/// of the external contract: compose(a, b) maps x to b(a(x)), i.e. a acts
/// first. All group-theoretic code (stabilizer chains, Schreier generators,
/// commutators) is written against this convention.
class Permutation {
 public:
  /// Identity permutation on `degree` points.
  explicit Permutation(int degree);

  /// Construct from an image table. Throws ParseError unless `images` is a
  /// bijection of {0, ..., images.size()-1}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  /// Smallest point x with p(x) != x, or -1 for the identity.
  int smallest_moved_point() const;

  /// Order of the permutation (lcm of cycle lengths).
  std::uint64_t order() const;

  bool operator==(const Permutation& other) const = default;
  /// Lexicographic comparison of image tables; used for deterministic sorts.
  bool operator<(const Permutation& other) const { return images_ < other.images_; }

 private:
  std::vector<int> images_;
};

/// compose(a, b): x -> b(a(x)). Throws DomainMismatch on unequal degrees.
Permutation compose(const Permutation& a, const Permutation& b);

/// conjugate(p, g) = g^-1 * p * g (apply g^-1, then p, then g).
Permutation conjugate(const Permutation& p, const Permutation& g);

/// commutator(a, b) = a^-1 * b^-1 * a * b under the library convention.
Permutation commutator(const Permutation& a, const Permutation& b);

/// Parse either an image list "[1,0,2]" or cycle notation "(0,1)(2,3)".
/// Cycle input needs the intended degree; "()" and "" denote the identity.
Permutation parse_permutation(const std::string& text, int degree);

std::string to_image_string(const Permutation& p);
std::string to_cycle_string(const Permutation& p);

struct PermHash {
  std::size_t operator()(const Permutation& p) const;
};

}  // namespace solvstab
