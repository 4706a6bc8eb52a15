#include "solvstab/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "solvstab/errors.hpp"

namespace solvstab {

Permutation::Permutation(int degree) : images_(static_cast<size_t>(degree)) {
  if (degree < 0) throw ParseError("permutation degree must be nonnegative");
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)])
      throw ParseError("image table is not a bijection of {0,...," +
                       std::to_string(n - 1) + "}");
    seen[static_cast<size_t>(v)] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<size_t>(i)] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
  Permutation p(degree());
  p.images_ = std::move(inv);
  return p;
}

int Permutation::smallest_moved_point() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<size_t>(i)] != i) return i;
  return -1;
}

std::uint64_t Permutation::order() const {
  std::vector<char> done(images_.size(), 0);
  std::uint64_t ord = 1;
  for (int i = 0; i < degree(); ++i) {
    if (done[static_cast<size_t>(i)]) continue;
    std::uint64_t len = 0;
    int x = i;
    while (!done[static_cast<size_t>(x)]) {
      done[static_cast<size_t>(x)] = 1;
      x = images_[static_cast<size_t>(x)];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DomainMismatch("compose: degree mismatch (" + std::to_string(a.degree()) +
                         " vs " + std::to_string(b.degree()) + ")");
  std::vector<int> im(static_cast<size_t>(a.degree()));
  for (int x = 0; x < a.degree(); ++x) im[static_cast<size_t>(x)] = b(a(x));
  return Permutation(std::move(im));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  return compose(compose(g.inverse(), p), g);
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return compose(compose(compose(a.inverse(), b.inverse()), a), b);
}

namespace {

void skip_space(const std::string& s, size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

int parse_int(const std::string& s, size_t& i) {
  skip_space(s, i);
  size_t start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == start) throw ParseError("expected a point index in '" + s + "'");
  return std::stoi(s.substr(start, i - start));
}

Permutation parse_image_list(const std::string& text) {
  std::vector<int> im;
  size_t i = 0;
  skip_space(text, i);
  if (text[i] != '[') throw ParseError("image list must start with '['");
  ++i;
  skip_space(text, i);
  if (i < text.size() && text[i] == ']') return Permutation(std::vector<int>{});
  for (;;) {
    im.push_back(parse_int(text, i));
    skip_space(text, i);
    if (i >= text.size()) throw ParseError("unterminated image list '" + text + "'");
    if (text[i] == ',') {
      ++i;
      continue;
    }
    if (text[i] == ']') break;
    throw ParseError("unexpected character in image list '" + text + "'");
  }
  return Permutation(std::move(im));
}

Permutation parse_cycles(const std::string& text, int degree) {
  std::vector<int> im(static_cast<size_t>(degree));
  std::iota(im.begin(), im.end(), 0);
  size_t i = 0;
  skip_space(text, i);
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle string '" + text + "'");
    ++i;
    std::vector<int> cycle;
    skip_space(text, i);
    while (i < text.size() && text[i] != ')') {
      cycle.push_back(parse_int(text, i));
      skip_space(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_space(text, i);
      }
    }
    if (i >= text.size()) throw ParseError("unterminated cycle in '" + text + "'");
    ++i;  // ')'
    for (size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw ParseError("cycle point out of range in '" + text + "'");
      if (im[static_cast<size_t>(from)] != from)
        throw ParseError("point repeated across cycles in '" + text + "'");
      im[static_cast<size_t>(from)] = to;
    }
    skip_space(text, i);
  }
  return Permutation(std::move(im));
}

}  // namespace

Permutation parse_permutation(const std::string& text, int degree) {
  size_t i = 0;
  skip_space(text, i);
  if (i == text.size()) return Permutation(degree);
  if (text[i] == '[') {
    Permutation p = parse_image_list(text);
    if (p.degree() != degree)
      throw ParseError("image list has degree " + std::to_string(p.degree()) +
                       ", expected " + std::to_string(degree));
    return p;
  }
  return parse_cycles(text, degree);
}

std::string to_image_string(const Permutation& p) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < p.degree(); ++i) {
    if (i) os << ',';
    os << p(i);
  }
  os << ']';
  return os.str();
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream os;
  std::vector<char> done(static_cast<size_t>(p.degree()), 0);
  bool any = false;
  for (int i = 0; i < p.degree(); ++i) {
    if (done[static_cast<size_t>(i)] || p(i) == i) continue;
    any = true;
    os << '(';
    int x = i;
    bool first = true;
    while (!done[static_cast<size_t>(x)]) {
      done[static_cast<size_t>(x)] = 1;
      if (!first) os << ',';
      os << x;
      first = false;
      x = p(x);
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

std::size_t PermHash::operator()(const Permutation& p) const {
  // FNV-1a over the image table.
  std::size_t h = 1469598103934665603ull;
  for (int v : p.images()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace solvstab
