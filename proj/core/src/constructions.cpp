#include "solvstab/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "solvstab/errors.hpp"

namespace solvstab {

namespace {

// Change of basis between the representation basis {1, x, ..., x^{m-1}} and
// the power basis {1, w, ..., w^{m-1}} of the primitive element.
struct PowerBasis {
  Mat P;     // row i = standard coordinates of w^i
  Mat Pinv;  // standard -> power-basis coordinates

  explicit PowerBasis(const ExtField& F) {
    const int m = F.extension_degree();
    P = Mat(F.characteristic(), m);
    int w = F.primitive_element();
    int wi = 1;
    for (int i = 0; i < m; ++i) {
      std::vector<int> coords = F.decode(wi);
      for (int j = 0; j < m; ++j) P.at(i, j) = coords[static_cast<size_t>(j)];
      wi = F.mul(wi, w);
    }
    auto inv = mat_inverse(P);
    if (!inv) throw Error("power basis is singular");  // cannot happen: w is primitive
    Pinv = *inv;
  }

  // Matrix (in the power basis) of the F_p-linear map sending w^i to img(i).
  Mat matrix_of(const ExtField& F, const std::function<int(int)>& img) const {
    const int m = F.extension_degree();
    Mat R(F.characteristic(), m);
    int w = F.primitive_element();
    int wi = 1;
    for (int i = 0; i < m; ++i) {
      std::vector<int> coords = F.decode(img(wi));
      for (int j = 0; j < m; ++j) R.at(i, j) = coords[static_cast<size_t>(j)];
      wi = F.mul(wi, w);
    }
    return mat_mul(R, Pinv);
  }
};

}  // namespace

Mat multiplication_matrix(const ExtField& F, int a) {
  PowerBasis basis(F);
  return basis.matrix_of(F, [&](int x) { return F.mul(x, a); });
}

Mat frobenius_matrix(const ExtField& F) {
  PowerBasis basis(F);
  return basis.matrix_of(F, [&](int x) { return F.frobenius(x); });
}

MatrixGroup gamma0(int p, int m) {
  ExtField F(p, m);
  return MatrixGroup(p, m, {multiplication_matrix(F, F.primitive_element())});
}

MatrixGroup semilinear_group(int p, int m) {
  ExtField F(p, m);
  return MatrixGroup(
      p, m, {multiplication_matrix(F, F.primitive_element()), frobenius_matrix(F)});
}

namespace {

void validate_semilinear_params(const ExtField& F, int d, int e, int c) {
  const int go = F.size() - 1;  // multiplicative group order
  const int m = F.extension_degree();
  if (d < 1 || (go > 0 && go % d != 0) || (go == 0 && d != 1))
    throw PreconditionError("d must divide p^m - 1");
  if (e < 1 || m % e != 0) throw PreconditionError("e must divide m");
  if (c < 0 || c >= std::max(go, 1)) throw PreconditionError("c out of range");
}

}  // namespace

MatrixGroup semilinear_subgroup(int p, int m, int d, int e, int c) {
  ExtField F(p, m);
  validate_semilinear_params(F, d, e, c);
  const int w = F.primitive_element();
  Mat wd = multiplication_matrix(F, F.pow(w, d));
  Mat twist = mat_mul(mat_pow(frobenius_matrix(F), e),
                      multiplication_matrix(F, F.pow(w, c)));
  return MatrixGroup(p, m, {wd, twist});
}

std::vector<SemilinearSubgroup> enumerate_semilinear_subgroups(int p, int m,
                                                               bool irreducible_only) {
  ExtField F(p, m);
  const int go = std::max(F.size() - 1, 1);  // index arithmetic below needs >= 1

  // Elements of the semilinear group as pairs (j, k) realizing a -> a^{p^j} w^k;
  // (j1,k1)*(j2,k2) = (j1+j2, k1*p^{j2} + k2). Closures are computed in this
  // coordinate form and only the deduplicated subgroups are materialized as
  // matrix groups.
  std::vector<int> ppow(static_cast<size_t>(m));
  ppow[0] = 1 % go;
  for (int j = 1; j < m; ++j)
    ppow[static_cast<size_t>(j)] = static_cast<int>(
        static_cast<std::int64_t>(ppow[static_cast<size_t>(j - 1)]) * p % go);
  auto mult = [&](std::pair<int, int> x, std::pair<int, int> y) {
    return std::pair<int, int>(
        (x.first + y.first) % m,
        static_cast<int>((static_cast<std::int64_t>(x.second) * ppow[static_cast<size_t>(y.first)] +
                          y.second) %
                         go));
  };
  auto closure = [&](std::pair<int, int> g1, std::pair<int, int> g2) {
    std::vector<int> seen;
    std::vector<char> mark(static_cast<size_t>(m) * go, 0);
    auto id = std::pair<int, int>(0, 0);
    std::vector<std::pair<int, int>> queue{id};
    mark[0] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto g : {g1, g2}) {
        auto prod = mult(queue[i], g);
        std::size_t code = static_cast<size_t>(prod.first) * go + prod.second;
        if (!mark[code]) {
          mark[code] = 1;
          queue.push_back(prod);
        }
      }
    }
    for (std::size_t code = 0; code < mark.size(); ++code)
      if (mark[code]) seen.push_back(static_cast<int>(code));
    return seen;  // sorted by construction
  };

  std::vector<int> divisors_go, divisors_m;
  const int real_go = F.size() - 1;
  for (int d = 1; d <= std::max(real_go, 1); ++d)
    if (real_go == 0 ? d == 1 : real_go % d == 0) divisors_go.push_back(d);
  for (int e = 1; e <= m; ++e)
    if (m % e == 0) divisors_m.push_back(e);

  std::map<std::vector<int>, std::tuple<int, int, int>> first_params;
  for (int d : divisors_go)
    for (int e : divisors_m)
      for (int c = 0; c < std::max(real_go, 1); ++c) {
        auto elems = closure({0, d % go}, {e % m, c});
        first_params.emplace(std::move(elems), std::make_tuple(d, e, c));
      }

  std::vector<SemilinearSubgroup> out;
  for (const auto& [elems, params] : first_params) {
    auto [d, e, c] = params;
    MatrixGroup g = semilinear_subgroup(p, m, d, e, c);
    if (irreducible_only && !is_irreducible(g)) continue;
    bool all_linear = true;
    for (int code : elems)
      if (code / go != 0) {
        all_linear = false;
        break;
      }
    SemilinearSubgroup rec{
        d,
        e,
        c,
        static_cast<std::uint64_t>(elems.size()),
        all_linear && static_cast<int>(elems.size()) == std::max(real_go, 1),
        static_cast<int>(elems.size()) == m * std::max(real_go, 1),
        std::move(g)};
    out.push_back(std::move(rec));
  }
  // Deterministic order: by first-seen parameters.
  std::sort(out.begin(), out.end(), [](const SemilinearSubgroup& a, const SemilinearSubgroup& b) {
    return std::tie(a.d, a.e, a.c) < std::tie(b.d, b.e, b.c);
  });
  return out;
}

MatrixGroup wreath_linear(const MatrixGroup& H, const PermGroup& S) {
  const int p = H.characteristic();
  const int a = H.dimension();
  const int m = S.degree();
  if (m < 1) throw PreconditionError("wreath: permutation part must have degree >= 1");
  const int n = a * m;
  std::int64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxActionSize)
      throw BoundError("wreath dimension " + std::to_string(n) + " over F_" +
                       std::to_string(p) + " exceeds the action bound");
  }
  std::vector<Mat> gens;
  for (const Mat& h : H.generators()) {
    Mat g = Mat::identity(p, n);
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < a; ++j) g.at(i, j) = h.at(i, j);
    gens.push_back(std::move(g));
  }
  for (const Permutation& s : S.generators()) {
    Mat g(p, n);
    for (int b = 0; b < m; ++b)
      for (int r = 0; r < a; ++r) g.at(b * a + r, s(b) * a + r) = 1;
    gens.push_back(std::move(g));
  }
  return MatrixGroup(p, n, std::move(gens));
}

PermGroup affine_group(const MatrixGroup& M) {
  PermGroup linear = M.permutation_rep();
  const int p = M.characteristic();
  const int n = M.dimension();
  const int q = linear.degree();
  std::vector<Permutation> gens = linear.generators();
  for (int i = 0; i < n; ++i) {
    std::vector<int> images(static_cast<size_t>(q));
    std::vector<int> v(static_cast<size_t>(n), 0);
    for (int idx = 0; idx < q; ++idx) {
      std::vector<int> t = v;
      t[static_cast<size_t>(i)] = (t[static_cast<size_t>(i)] + 1) % p;
      images[static_cast<size_t>(idx)] = vector_index(t, p);
      for (int k = 0; k < n; ++k) {
        if (++v[static_cast<size_t>(k)] < p) break;
        v[static_cast<size_t>(k)] = 0;
      }
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(q, std::move(gens));
}

PermGroup two_point_stabilizer(const PermGroup& A, int x, int y) {
  if (x == y) throw PreconditionError("two_point_stabilizer needs two distinct points");
  return pointwise_stabilizer(A, {x, y});
}

namespace {

MatrixGroup general_linear_group(int n, int p) {
  if (n < 1) throw PreconditionError("GL dimension must be >= 1");
  ExtField prime_field(p, 1);
  const int zeta = prime_field.primitive_element();
  if (n == 1) {
    Mat s(p, 1);
    s.at(0, 0) = zeta;
    return MatrixGroup(p, 1, {s});
  }
  Mat diag = Mat::identity(p, n);
  diag.at(0, 0) = zeta;
  Mat cycle(p, n);
  for (int i = 0; i < n; ++i) cycle.at(i, (i + 1) % n) = 1;
  Mat transvection = Mat::identity(p, n);
  transvection.at(0, 1) = 1;
  return MatrixGroup(p, n, {diag, cycle, transvection});
}

}  // namespace

MatrixGroup named_group(const std::string& name) {
  if (name == "SL(2,3)") {
    Mat a = Mat::identity(3, 2);
    a.at(0, 1) = 1;
    Mat b = Mat::identity(3, 2);
    b.at(1, 0) = 1;
    return MatrixGroup(3, 2, {a, b});
  }
  if (name == "Q8-in-GL(2,3)") {
    Mat i(3, 2);
    i.at(0, 1) = 2;
    i.at(1, 0) = 1;
    Mat j(3, 2);
    j.at(0, 0) = 1;
    j.at(0, 1) = 1;
    j.at(1, 0) = 1;
    j.at(1, 1) = 2;
    return MatrixGroup(3, 2, {i, j});
  }
  if (name == "C31:C3-in-GL(3,5)") return semilinear_subgroup(5, 3, 4, 1, 0);
  if (name.rfind("GL(", 0) == 0 && name.back() == ')') {
    std::string inner = name.substr(3, name.size() - 4);
    auto comma = inner.find(',');
    if (comma != std::string::npos) {
      try {
        int n = std::stoi(inner.substr(0, comma));
        int p = std::stoi(inner.substr(comma + 1));
        if (!is_prime(p)) throw PreconditionError("GL(n,p): p must be prime");
        return general_linear_group(n, p);
      } catch (const std::invalid_argument&) {
        // fall through to the unknown-name error
      }
    }
  }
  throw ParseError("unknown group name '" + name + "'");
}

std::vector<NamedPermGroup> transitive_solvable_groups(int degree) {
  auto perm = [&](const std::string& cycles) { return parse_permutation(cycles, degree); };
  switch (degree) {
    case 2:
      return {{"S2", PermGroup(2, {perm("(0,1)")})}};
    case 3:
      return {{"C3", PermGroup(3, {perm("(0,1,2)")})},
              {"S3", PermGroup(3, {perm("(0,1,2)"), perm("(0,1)")})}};
    case 4:
      return {{"C4", PermGroup(4, {perm("(0,1,2,3)")})},
              {"V4", PermGroup(4, {perm("(0,1)(2,3)"), perm("(0,2)(1,3)")})},
              {"D4", PermGroup(4, {perm("(0,1,2,3)"), perm("(1,3)")})},
              {"A4", PermGroup(4, {perm("(0,1,2)"), perm("(0,1)(2,3)")})},
              {"S4", PermGroup(4, {perm("(0,1,2,3)"), perm("(0,1)")})}};
    case 5:
      return {{"C5", PermGroup(5, {perm("(0,1,2,3,4)")})},
              {"D5", PermGroup(5, {perm("(0,1,2,3,4)"), perm("(1,4)(2,3)")})},
              {"F20", PermGroup(5, {perm("(0,1,2,3,4)"), perm("(1,2,4,3)")})}};
    default:
      throw PreconditionError("transitive solvable list covers degrees 2..5 only");
  }
}

}  // namespace solvstab
