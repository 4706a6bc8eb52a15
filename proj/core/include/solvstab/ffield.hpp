#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace solvstab {

/// Field sizes beyond this are out of scope for the library.
inline constexpr int kMaxFieldSize = 4096;

/// F_{p^m} as coefficient vectors modulo a fixed monic irreducible polynomial.
///
/// Elements are encoded as integers: (c0, ..., c_{m-1}) <-> sum c_i * p^i,
/// so 0 encodes the zero element and 1 the unit. All lexicographic choices
/// (modulus, primitive element) compare coefficient tuples from the constant
/// term upward. The modulus is the lex-least monic irreducible of its degree
/// rather than a Conway polynomial: deterministic and dependency-free;
/// imported data keyed to another modulus must be re-based by the caller.
class ExtField {
 public:
  /// Field with the lex-least irreducible modulus. Throws unless p is prime,
  /// m >= 1 and p^m <= kMaxFieldSize.
  ExtField(int p, int m);

  /// Field with a caller-supplied monic modulus (coefficients c0..cm,
  /// constant first, cm == 1). Throws if the polynomial is not irreducible.
  ExtField(int p, int m, std::vector<int> modulus);

  int characteristic() const { return p_; }
  int extension_degree() const { return m_; }
  int size() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;  // throws on a == 0
  int pow(int a, std::int64_t e) const;

  /// The field automorphism a -> a^p; generates the Galois group over F_p.
  int frobenius(int a) const;

  /// Lex-least element of multiplicative order p^m - 1.
  int primitive_element() const { return primitive_; }

  std::uint64_t element_order(int a) const;  // throws on a == 0

  std::vector<int> decode(int a) const;          // coefficient vector c0..c_{m-1}
  int encode(const std::vector<int>& coeffs) const;

 private:
  void build_tables();

  int p_, m_, q_;
  std::vector<int> modulus_;
  int primitive_ = 0;
  std::vector<int> exp_;  // exp_[k] = primitive^k, k in [0, q-1)
  std::vector<int> log_;  // inverse of exp_ on nonzero elements
};

bool is_prime(int n);

/// Lexicographically least monic irreducible polynomial of degree m over F_p,
/// comparing coefficient tuples from the constant term upward. Returned as
/// coefficients c0..cm with cm == 1. Throws unless p is prime.
std::vector<int> find_irreducible(int p, int m);

/// Irreducibility test: root scan for degree <= 3, trial division by all
/// lower-degree monic polynomials in general.
bool is_irreducible_poly(int p, const std::vector<int>& coeffs);

/// "x^2+3" style polynomial string (descending powers, zero terms skipped).
std::string format_element(const ExtField& F, int a);

/// Accepts polynomial strings ("x^2+3", "2x+1", "x^2 + x") and coefficient
/// lists ("[3,0,1]", constant term first).
int parse_element(const ExtField& F, const std::string& text);

}  // namespace solvstab
