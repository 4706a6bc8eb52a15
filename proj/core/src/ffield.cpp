#include "solvstab/ffield.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "solvstab/errors.hpp"

namespace solvstab {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<std::int64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Polynomials over F_p as ascending coefficient vectors (constant term first).

std::vector<int> poly_trim(std::vector<int> f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

std::vector<int> poly_mul(int p, const std::vector<int>& f, const std::vector<int>& g) {
  if (f.empty() || g.empty()) return {};
  std::vector<int> out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = static_cast<int>((out[i + j] + static_cast<std::int64_t>(f[i]) * g[j]) % p);
  return poly_trim(std::move(out));
}

int mod_inverse(int a, int p) {
  // Fermat; p prime, a != 0 mod p.
  int result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = static_cast<int>(static_cast<std::int64_t>(result) * base % p);
    base = static_cast<int>(static_cast<std::int64_t>(base) * base % p);
    e >>= 1;
  }
  return result;
}

// f mod g, g monic-normalizable (leading coefficient inverted).
std::vector<int> poly_mod(int p, std::vector<int> f, const std::vector<int>& g) {
  f = poly_trim(std::move(f));
  std::vector<int> gt = poly_trim(g);
  int lead_inv = mod_inverse(gt.back(), p);
  while (f.size() >= gt.size() && !f.empty()) {
    int factor = static_cast<int>(static_cast<std::int64_t>(f.back()) * lead_inv % p);
    std::size_t shift = f.size() - gt.size();
    for (std::size_t i = 0; i < gt.size(); ++i) {
      f[shift + i] =
          static_cast<int>(((f[shift + i] - static_cast<std::int64_t>(factor) * gt[i]) % p + p) % p);
    }
    f = poly_trim(std::move(f));
  }
  return f;
}

int poly_eval(int p, const std::vector<int>& f, int x) {
  std::int64_t acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
  return static_cast<int>(acc);
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int d = 2; static_cast<std::int64_t>(d) * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_irreducible_poly(int p, const std::vector<int>& coeffs) {
  std::vector<int> f = poly_trim(coeffs);
  if (f.size() < 2) return false;  // constants are not irreducible moduli
  const int m = static_cast<int>(f.size()) - 1;
  if (m == 1) return true;
  if (m <= 3) {
    // Degree 2 or 3: irreducible iff no root in F_p.
    for (int x = 0; x < p; ++x)
      if (poly_eval(p, f, x) == 0) return false;
    return true;
  }
  // Trial division by every monic polynomial of degree 1..m/2.
  for (int d = 1; d <= m / 2; ++d) {
    std::vector<int> g(static_cast<size_t>(d) + 1, 0);
    g[static_cast<size_t>(d)] = 1;
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t k = 0; k < count; ++k) {
      std::int64_t t = k;
      for (int i = 0; i < d; ++i) {
        g[static_cast<size_t>(i)] = static_cast<int>(t % p);
        t /= p;
      }
      if (poly_mod(p, f, g).empty()) return false;
    }
  }
  return true;
}

std::vector<int> find_irreducible(int p, int m) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (m < 1) throw PreconditionError("extension degree must be >= 1");
  // Iterate candidate lower-coefficient tuples (c0,...,c_{m-1}) in lex order,
  // constant term as the most significant comparison position.
  std::int64_t count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (std::int64_t k = 0; k < count; ++k) {
    std::vector<int> f(static_cast<size_t>(m) + 1, 0);
    f[static_cast<size_t>(m)] = 1;
    std::int64_t t = k;
    for (int i = m - 1; i >= 0; --i) {
      f[static_cast<size_t>(i)] = static_cast<int>(t % p);
      t /= p;
    }
    if (is_irreducible_poly(p, f)) return f;
  }
  throw Error("no irreducible polynomial found");  // unreachable: they always exist
}

ExtField::ExtField(int p, int m) : ExtField(p, m, find_irreducible(p, m)) {}

ExtField::ExtField(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  if (m < 1) throw PreconditionError("extension degree must be >= 1");
  std::int64_t q = 1;
  for (int i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxFieldSize)
      throw BoundError("field size exceeds " + std::to_string(kMaxFieldSize));
  }
  q_ = static_cast<int>(q);
  if (static_cast<int>(modulus_.size()) != m + 1 || modulus_[static_cast<size_t>(m)] != 1)
    throw PreconditionError("modulus must be monic of degree m");
  for (int c : modulus_)
    if (c < 0 || c >= p) throw PreconditionError("modulus coefficient out of range");
  if (!is_irreducible_poly(p_, modulus_))
    throw PreconditionError("modulus polynomial is reducible");
  build_tables();
}

std::vector<int> ExtField::decode(int a) const {
  std::vector<int> c(static_cast<size_t>(m_));
  for (int i = 0; i < m_; ++i) {
    c[static_cast<size_t>(i)] = a % p_;
    a /= p_;
  }
  return c;
}

int ExtField::encode(const std::vector<int>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > m_)
    throw PreconditionError("coefficient vector longer than extension degree");
  int a = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    int c = coeffs[i];
    if (c < 0 || c >= p_) throw PreconditionError("coefficient out of range");
    a = a * p_ + c;
  }
  return a;
}

int ExtField::add(int a, int b) const {
  int out = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    out += ((a % p_) + (b % p_)) % p_ * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

int ExtField::neg(int a) const {
  int out = 0, mult = 1;
  for (int i = 0; i < m_; ++i) {
    out += (p_ - a % p_) % p_ * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

int ExtField::sub(int a, int b) const { return add(a, neg(b)); }

void ExtField::build_tables() {
  auto slow_mul = [this](int a, int b) {
    std::vector<int> prod = poly_mul(p_, decode(a), decode(b));
    prod = poly_mod(p_, std::move(prod), modulus_);
    prod.resize(static_cast<size_t>(m_), 0);
    return encode(prod);
  };
  auto slow_pow = [&](int a, std::int64_t e) {
    int result = 1, base = a;
    while (e > 0) {
      if (e & 1) result = slow_mul(result, base);
      base = slow_mul(base, base);
      e >>= 1;
    }
    return result;
  };

  // Lex-least element (constant term as most significant position) of full
  // multiplicative order.
  const int group_order = q_ - 1;
  std::vector<int> rs = prime_factors(group_order);
  primitive_ = 1;  // correct for q == 2
  if (group_order > 1) {
    std::vector<int> p_pow(static_cast<size_t>(m_), 1);
    for (int i = 1; i < m_; ++i) p_pow[static_cast<size_t>(i)] = p_pow[static_cast<size_t>(i - 1)] * p_;
    bool found = false;
    std::int64_t count = q_;
    for (std::int64_t k = 0; k < count && !found; ++k) {
      std::int64_t t = k;
      int a = 0;
      for (int i = m_ - 1; i >= 0; --i) {
        int digit = static_cast<int>(t % p_);
        t /= p_;
        a += digit * p_pow[static_cast<size_t>(i)];
      }
      if (a == 0) continue;
      bool full = true;
      for (int r : rs)
        if (slow_pow(a, group_order / r) == 1) {
          full = false;
          break;
        }
      if (full) {
        primitive_ = a;
        found = true;
      }
    }
    if (!found) throw Error("no primitive element found");  // unreachable
  }

  exp_.assign(static_cast<size_t>(group_order), 1);
  log_.assign(static_cast<size_t>(q_), -1);
  int cur = 1;
  for (int k = 0; k < group_order; ++k) {
    exp_[static_cast<size_t>(k)] = cur;
    log_[static_cast<size_t>(cur)] = k;
    cur = slow_mul(cur, primitive_);
  }
}

int ExtField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  int k = (log_[static_cast<size_t>(a)] + log_[static_cast<size_t>(b)]) % (q_ - 1);
  return exp_[static_cast<size_t>(k)];
}

int ExtField::inv(int a) const {
  if (a == 0) throw PreconditionError("division by zero in F_" + std::to_string(q_));
  int k = (q_ - 1 - log_[static_cast<size_t>(a)]) % (q_ - 1);
  return exp_[static_cast<size_t>(k)];
}

int ExtField::pow(int a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw PreconditionError("division by zero in F_" + std::to_string(q_));
    return e == 0 ? 1 : 0;
  }
  std::int64_t k = log_[static_cast<size_t>(a)] * (e % (q_ - 1));
  k %= (q_ - 1);
  if (k < 0) k += q_ - 1;
  return exp_[static_cast<size_t>(k)];
}

int ExtField::frobenius(int a) const {
  if (a == 0) return 0;
  std::int64_t k = static_cast<std::int64_t>(log_[static_cast<size_t>(a)]) * p_ % (q_ - 1);
  return exp_[static_cast<size_t>(k)];
}

std::uint64_t ExtField::element_order(int a) const {
  if (a == 0) throw PreconditionError("zero has no multiplicative order");
  int k = log_[static_cast<size_t>(a)];
  return static_cast<std::uint64_t>((q_ - 1) / std::gcd(k == 0 ? q_ - 1 : k, q_ - 1));
}

std::string format_element(const ExtField& F, int a) {
  if (a == 0) return "0";
  std::vector<int> c = F.decode(a);
  std::ostringstream os;
  bool first = true;
  for (int i = F.extension_degree() - 1; i >= 0; --i) {
    int ci = c[static_cast<size_t>(i)];
    if (ci == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << ci;
    } else {
      if (ci != 1) os << ci;
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

int parse_element(const ExtField& F, const std::string& text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i >= text.size()) throw ParseError("empty field element");
  if (text[i] == '[') {
    ++i;
    std::vector<int> coeffs;
    skip();
    if (i < text.size() && text[i] == ']') return F.encode(coeffs);
    for (;;) {
      skip();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw ParseError("bad coefficient list '" + text + "'");
      coeffs.push_back(std::stoi(text.substr(start, i - start)) % F.characteristic());
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ']') break;
      throw ParseError("bad coefficient list '" + text + "'");
    }
    return F.encode(coeffs);
  }

  // Polynomial string: terms like "x^2", "2x", "3", separated by + or -.
  std::vector<int> coeffs(static_cast<size_t>(F.extension_degree()), 0);
  int sign = 1;
  for (;;) {
    skip();
    if (i >= text.size()) break;
    if (text[i] == '+') {
      sign = 1;
      ++i;
      continue;
    }
    if (text[i] == '-') {
      sign = -1;
      ++i;
      continue;
    }
    int coeff = 1;
    bool have_coeff = false;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) {
      coeff = std::stoi(text.substr(start, i - start));
      have_coeff = true;
    }
    skip();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    int power = 0;
    if (i < text.size() && (text[i] == 'x' || text[i] == 'X')) {
      ++i;
      power = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        std::size_t ps = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == ps) throw ParseError("missing exponent in '" + text + "'");
        power = std::stoi(text.substr(ps, i - ps));
      }
    } else if (!have_coeff) {
      throw ParseError("unexpected character in field element '" + text + "'");
    }
    if (power >= F.extension_degree())
      throw ParseError("term degree " + std::to_string(power) + " too large for field");
    const int p = F.characteristic();
    int value = ((sign * coeff) % p + p) % p;
    coeffs[static_cast<size_t>(power)] = (coeffs[static_cast<size_t>(power)] + value) % p;
    sign = 1;
  }
  return F.encode(coeffs);
}

}  // namespace solvstab
