#pragma once

// Minimal unsigned big-integer arithmetic: multiply, power, compare. Enough
// to clear the fractional exponent out of the stabilizer-order bound and
// compare both sides exactly.

#include <cstdint>
#include <vector>

namespace solvstab {

/// Little-endian, base 2^32.
using BigUint = std::vector<std::uint32_t>;

inline BigUint big_from(std::uint64_t v) {
  BigUint b;
  while (v) {
    b.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    v >>= 32;
  }
  if (b.empty()) b.push_back(0);
  return b;
}

inline BigUint big_mul(const BigUint& a, const BigUint& b) {
  BigUint out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t cur = static_cast<std::uint64_t>(out[k]) + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

inline BigUint big_pow(BigUint base, std::uint64_t e) {
  BigUint result = big_from(1);
  while (e) {
    if (e & 1) result = big_mul(result, base);
    base = big_mul(base, base);
    e >>= 1;
  }
  return result;
}

/// -1, 0 or 1.
inline int big_cmp(const BigUint& a, const BigUint& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

}  // namespace solvstab
