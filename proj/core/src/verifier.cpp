#include "solvstab/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "solvstab/bigint.hpp"
#include "solvstab/errors.hpp"
#include "solvstab/powerset.hpp"

namespace solvstab {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not_applicable";
  }
  return "?";
}

int GoodOrbitReport::good_count() const {
  int c = 0;
  for (const OrbitRow& r : rows)
    if (r.derived_length <= threshold) ++c;
  return c;
}

bool GoodOrbitReport::has_abelian_centralizer() const {
  for (const OrbitRow& r : rows)
    if (r.abelian) return true;
  return false;
}

bool GoodOrbitReport::has_cyclic_centralizer() const {
  for (const OrbitRow& r : rows)
    if (r.cyclic) return true;
  return false;
}

std::uint64_t GoodOrbitReport::regular_orbit_count() const {
  std::uint64_t c = 0;
  for (const OrbitRow& r : rows)
    if (r.centralizer_order == 1) ++c;
  return c;
}

namespace {

bool cyclic_flag(const PermGroup& C) {
  if (C.order() <= kExhaustiveOrderBound) return is_cyclic(C);
  if (!is_abelian(C)) return false;  // cyclic groups are abelian
  throw BoundError("cyclic flag would need an exhaustive search beyond the bound");
}

}  // namespace

GoodOrbitReport analyze(const MatrixGroup& M, int threshold, const std::string& label) {
  GoodOrbitReport rep;
  rep.label = label;
  rep.p = M.characteristic();
  rep.n = M.dimension();
  rep.space_size = static_cast<std::uint64_t>(M.action_size());
  rep.threshold = threshold;
  PermGroup P = M.permutation_rep();
  rep.group_order = P.order();
  rep.group_derived_length = derived_length(P);  // rejects non-solvable input
  for (const VectorOrbit& orb : vector_orbits(M)) {
    PermGroup C = centralizer_of_vector(M, orb.representative);
    OrbitRow row;
    row.representative = orb.representative;
    row.size = orb.size;
    row.centralizer_order = C.order();
    row.derived_length = derived_length(C);
    row.abelian = is_abelian(C);
    row.cyclic = cyclic_flag(C);
    rep.rows.push_back(row);
  }
  return rep;
}

Verdict check_thm_even(const GoodOrbitReport& rep) {
  const int good = rep.good_count();
  std::ostringstream os;
  os << "good_count=" << good << " dl=" << rep.group_derived_length;
  bool ok = good >= 2 && (good >= 5 || rep.group_derived_length <= 6);
  return {ok ? Status::pass : Status::fail, os.str()};
}

Verdict check_thm_mod_ii(const GoodOrbitReport& rep) {
  if (rep.p % 2 == 0 || rep.group_order % 2 == 0)
    return {Status::not_applicable, "|V||G| even"};
  for (const OrbitRow& r : rep.rows)
    if (r.abelian)
      return {Status::pass, "abelian centralizer at v=" + std::to_string(r.representative) +
                                " |C|=" + std::to_string(r.centralizer_order)};
  return {Status::fail, "no abelian centralizer"};
}

Verdict check_lem_oddqp(const GoodOrbitReport& rep, bool irreducible_semilinear) {
  if (!irreducible_semilinear)
    return {Status::not_applicable, "not an irreducible semilinear entry"};
  if (rep.p % 2 == 0 || rep.group_order % 2 == 0)
    return {Status::not_applicable, "|V||G| even"};
  for (const OrbitRow& r : rep.rows)
    if (r.cyclic)
      return {Status::pass, "cyclic centralizer at v=" + std::to_string(r.representative) +
                                " |C|=" + std::to_string(r.centralizer_order)};
  return {Status::fail, "no cyclic centralizer"};
}

Verdict check_lem_r(const GoodOrbitReport& rep) {
  const std::uint64_t r = rep.orbit_count();
  const int dl = rep.group_derived_length;
  std::ostringstream os;
  os << "r=" << r << " dl=" << dl;
  bool ok = (r > 2 || dl <= 4) && (r > 4 || dl <= 6);
  return {ok ? Status::pass : Status::fail, os.str()};
}

Verdict check_lem_five_regular(const GoodOrbitReport& rep) {
  if (rep.group_derived_length < 10)
    return {Status::not_applicable, "untested at desk scale (dl < 10)"};
  std::uint64_t regs = rep.regular_orbit_count();
  return {regs >= 5 ? Status::pass : Status::fail,
          "regular orbits: " + std::to_string(regs)};
}

Verdict check_eq21(const GoodOrbitReport& rep, int dl_H, int dl_S) {
  std::ostringstream os;
  os << "dl(G)=" << rep.group_derived_length << " dl(H)=" << dl_H << " dl(S)=" << dl_S;
  return {rep.group_derived_length <= dl_H + dl_S ? Status::pass : Status::fail, os.str()};
}

Verdict check_lemma_gt(const PermGroup& A, const std::vector<PermGroup>& J,
                       const std::vector<PermGroup>& K, int ell) {
  if (J.empty() || J.size() != K.size())
    throw PreconditionError("check_lemma_gt needs matching nonempty J and K lists");
  if (ell < 0) throw PreconditionError("ell must be nonnegative");
  for (const auto& g : J)
    if (g.degree() != A.degree())
      throw DomainMismatch("subgroup of a different parent passed to check_lemma_gt");
  for (const auto& g : K)
    if (g.degree() != A.degree())
      throw DomainMismatch("subgroup of a different parent passed to check_lemma_gt");

  for (std::size_t i = 0; i < J.size(); ++i) {
    for (const Permutation& g : J[i].generators())
      if (!A.contains(g))
        return {Status::not_applicable, "J_" + std::to_string(i) + " is not inside A"};
    std::vector<PermGroup> series = derived_series(J[i]);
    const PermGroup& DJ = series[std::min<std::size_t>(static_cast<std::size_t>(ell),
                                                       series.size() - 1)];
    for (const Permutation& g : DJ.generators())
      if (!K[i].contains(g))
        return {Status::not_applicable,
                "J_" + std::to_string(i) + "^(" + std::to_string(ell) + ") not inside K_" +
                    std::to_string(i)};
  }

  try {
    PermGroup meet_k = K[0];
    for (std::size_t i = 1; i < K.size(); ++i) meet_k = intersection(meet_k, K[i]);
    if (intersection(meet_k, A).order() != 1)
      return {Status::not_applicable, "(meet of K_i) does not intersect A trivially"};

    PermGroup meet_j = J[0];
    for (std::size_t i = 1; i < J.size(); ++i) meet_j = intersection(meet_j, J[i]);
    int dl;
    try {
      dl = derived_length(meet_j);
    } catch (const NotSolvable&) {
      return {Status::fail, "meet of J_i is not solvable"};
    }
    return {dl <= ell ? Status::pass : Status::fail,
            "dl(meet J)=" + std::to_string(dl) + " ell=" + std::to_string(ell)};
  } catch (const BoundError&) {
    return {Status::not_applicable, "intersection beyond the element-filter bound"};
  }
}

namespace {

bool seress_dfs(const PermGroup& H, std::vector<int>& pts, std::size_t limit) {
  if (H.order() == 1) return true;
  if (pts.size() >= limit) return false;
  for (const std::vector<int>& orb : orbits(H)) {
    if (orb.size() <= 1) continue;  // fixed points never shrink the stabilizer
    pts.push_back(orb[0]);
    if (seress_dfs(pointwise_stabilizer(H, {orb[0]}), pts, limit)) return true;
    pts.pop_back();
  }
  return false;
}

}  // namespace

SeressResult check_seress(const PermGroup& A, bool odd_order,
                          std::optional<std::uint64_t> seed) {
  SeressResult result;
  result.limit = odd_order ? 3 : 4;

  const int tuple_size = std::min(result.limit, A.degree());
  if (seed && A.degree() > result.limit) {
    std::mt19937_64 rng(*seed);
    std::uniform_int_distribution<int> pick(0, A.degree() - 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::vector<int> pts;
      while (static_cast<int>(pts.size()) < tuple_size) {
        int x = pick(rng);
        if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
      }
      if (pointwise_stabilizer(A, pts).order() == 1) {  // deterministic re-verification
        result.status = Status::pass;
        result.witness = std::move(pts);
        return result;
      }
    }
  }

  // Greedy minimal-orbit descent: fix a point of the smallest nontrivial
  // orbit of the current stabilizer, smallest representative on ties.
  PermGroup H = A;
  std::vector<int> pts;
  while (H.order() > 1 && pts.size() < static_cast<std::size_t>(result.limit)) {
    int pick = -1;
    std::size_t best = 0;
    for (const std::vector<int>& orb : orbits(H)) {
      if (orb.size() <= 1) continue;
      if (pick == -1 || orb.size() < best) {
        pick = orb[0];
        best = orb.size();
      }
    }
    pts.push_back(pick);
    H = pointwise_stabilizer(H, {pick});
  }
  if (H.order() == 1) {
    result.status = Status::pass;
    result.witness = std::move(pts);
    return result;
  }

  // Exhaustive fallback over orbit representatives.
  std::vector<int> stack;
  if (seress_dfs(A, stack, static_cast<std::size_t>(result.limit))) {
    result.status = Status::pass;
    result.witness = std::move(stack);
  } else {
    result.status = Status::fail;
  }
  return result;
}

bool palfy_wolf_exact(std::uint64_t stabilizer_order, std::uint64_t degree) {
  // |G_x| <= 24^(-1/3) n^3.243  <=>  |G_x|^3000 * 24^1000 <= n^9729.
  BigUint lhs =
      big_mul(big_pow(big_from(stabilizer_order), 3000), big_pow(big_from(24), 1000));
  BigUint rhs = big_pow(big_from(degree), 9729);
  return big_cmp(lhs, rhs) <= 0;
}

PalfyWolfResult check_palfy_wolf(std::uint64_t stabilizer_order, std::uint64_t degree) {
  if (degree < 2) throw PreconditionError("degree must be at least 2");
  PalfyWolfResult result;
  result.stabilizer_order = stabilizer_order;
  result.bound = std::exp(-std::log(24.0) / 3.0 +
                          3.243 * std::log(static_cast<double>(degree)));
  result.status = palfy_wolf_exact(stabilizer_order, degree) ? Status::pass : Status::fail;
  return result;
}

TwoPointResult min_two_point_dl(const PermGroup& A) {
  if (A.degree() < 2) throw PreconditionError("min_two_point_dl needs at least two points");
  if (!is_transitive(A))
    throw PreconditionError("min_two_point_dl expects a transitive group");
  TwoPointResult out;
  out.x = 0;
  out.min_derived_length = INT_MAX;
  PermGroup stab0 = pointwise_stabilizer(A, {0});
  for (const std::vector<int>& orb : orbits(stab0)) {
    int y = orb[0];
    if (y == 0) continue;
    int dl = derived_length(pointwise_stabilizer(stab0, {y}));
    out.rows.push_back(TwoPointRow{y, orb.size(), dl});
    if (dl < out.min_derived_length) {
      out.min_derived_length = dl;
      out.y = y;
    }
  }
  return out;
}

bool VerifyReport::all_pass() const {
  for (const ClaimReport& c : claims)
    if (c.failed > 0) return false;
  return true;
}

namespace {

struct EntryAnalysis {
  std::optional<GoodOrbitReport> report;
  std::string skip_reason;  // nonempty: entry excluded from every claim
  std::optional<Verdict> thm_main, mod_ii, oddqp, thm_even, lem_r, five_reg;
  std::optional<Verdict> seress, palfy, gluck1, gluck2, gluck3;
  int min_two_point = -1;
};

std::string points_to_string(const std::vector<int>& pts) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) os << ',';
    os << pts[i];
  }
  os << ']';
  return os.str();
}

EntryAnalysis analyze_entry(const CatalogEntry& entry, const VerifierConfig& cfg) {
  EntryAnalysis a;
  if (entry.is_matrix()) {
    try {
      a.report = analyze(entry.matrix(), cfg.threshold, entry.label);
    } catch (const NotSolvable&) {
      a.skip_reason = "not solvable: outside every claim's hypotheses";
      return a;
    } catch (const Error& e) {
      a.skip_reason = e.what();
      return a;
    }
    const GoodOrbitReport& rep = *a.report;
    if (entry.irreducible) {
      a.thm_even = check_thm_even(rep);
      a.lem_r = check_lem_r(rep);
    }
    a.mod_ii = check_thm_mod_ii(rep);
    a.oddqp = check_lem_oddqp(
        rep, entry.provenance == Provenance::semilinear && entry.irreducible);
    a.five_reg = check_lem_five_regular(rep);
  }

  const int degree = entry.is_matrix() ? static_cast<int>(entry.matrix().action_size())
                                       : entry.n;
  const bool wants_action = entry.primitive_affine || degree <= 16;
  if (!wants_action) return a;

  PermGroup action = entry.action();
  if (!entry.is_matrix() && !is_solvable(action)) {
    a.skip_reason = "not solvable: outside every claim's hypotheses";
    return a;
  }

  if (entry.primitive_affine) {
    TwoPointResult two = min_two_point_dl(action);
    a.min_two_point = two.min_derived_length;
    std::ostringstream os;
    os << "min_dl=" << two.min_derived_length << " at (x=" << two.x << ",y=" << two.y << ")";
    a.thm_main = Verdict{
        two.min_derived_length <= cfg.threshold ? Status::pass : Status::fail, os.str()};

    SeressResult se = check_seress(action, entry.odd_order, cfg.seress_seed);
    a.seress = Verdict{se.status, "base" + points_to_string(se.witness) +
                                      " limit=" + std::to_string(se.limit)};

    std::uint64_t gx = entry.is_matrix()
                           ? entry.order
                           : entry.order / static_cast<std::uint64_t>(action.degree());
    PalfyWolfResult pw = check_palfy_wolf(gx, static_cast<std::uint64_t>(action.degree()));
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", pw.bound);
    a.palfy = Verdict{pw.status, "|G_x|=" + std::to_string(gx) + " bound=" + buf};
  }

  if (degree <= 15 && entry.odd_order && is_transitive(action)) {
    auto regs = regular_powerset_orbits(action);
    a.gluck1 = Verdict{regs.empty() ? Status::fail : Status::pass,
                       "regular power-set orbits: " + std::to_string(regs.size())};
  }
  if (entry.primitive_affine && degree >= 10 && degree <= 16) {
    RegularOrbitWitness w = regular_orbit_noncomplement(action);
    bool ok = w.regular_count >= 8 && w.witness.has_value();
    std::ostringstream os;
    os << "regular orbits=" << w.regular_count;
    if (w.witness) os << " witness=" << *w.witness;
    a.gluck2 = Verdict{ok ? Status::pass : Status::fail, os.str()};
  }
  if (entry.primitive_affine && degree <= 16) {
    try {
      auto parts = trivializing_partition(action);
      std::ostringstream os;
      os << "k=" << parts.size() << " parts=[";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) os << ',';
        os << parts[i];
      }
      os << ']';
      a.gluck3 = Verdict{Status::pass, os.str()};
    } catch (const Error& e) {
      a.gluck3 = Verdict{Status::fail, e.what()};
    }
  }
  return a;
}

void append_row(std::map<std::string, ClaimReport>& claims, const std::string& id,
                const std::string& label, const Verdict& v) {
  ClaimReport& report = claims[id];
  report.claim_id = id;
  report.rows.push_back(ClaimRow{label, v.status, v.detail});
  switch (v.status) {
    case Status::pass: ++report.passed; break;
    case Status::fail: ++report.failed; break;
    case Status::not_applicable: ++report.inapplicable; break;
  }
}

}  // namespace

VerifyReport run_verification(const std::vector<CatalogEntry>& catalog,
                              const VerifierConfig& config) {
  std::vector<EntryAnalysis> results(catalog.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= catalog.size()) break;
      results[i] = analyze_entry(catalog[i], config);
    }
  };
  if (config.jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < config.jobs; ++j) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }

  VerifyReport report;
  report.threshold = config.threshold;

  // dl of the wreath tops, resolved by label.
  std::map<std::string, int> s_dl;
  for (int m = 2; m <= 5; ++m)
    for (const NamedPermGroup& s : transitive_solvable_groups(m))
      s_dl[s.label] = derived_length(s.group);
  std::map<std::string, std::size_t> index_by_label;
  for (std::size_t i = 0; i < catalog.size(); ++i) index_by_label[catalog[i].label] = i;

  std::map<std::string, ClaimReport> claims;
  bool any_five_reg_applicable = false;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const CatalogEntry& entry = catalog[i];
    const EntryAnalysis& a = results[i];
    if (!a.skip_reason.empty()) {
      report.notes.push_back("entry '" + entry.label + "' skipped: " + a.skip_reason);
      continue;
    }
    if (a.report) report.groups.push_back(*a.report);
    if (a.thm_main) append_row(claims, "thm-main", entry.label, *a.thm_main);
    if (a.mod_ii) append_row(claims, "thm-mod-ii", entry.label, *a.mod_ii);
    if (a.oddqp) append_row(claims, "lem-oddqp", entry.label, *a.oddqp);
    if (a.thm_even) append_row(claims, "thm-even", entry.label, *a.thm_even);
    if (a.lem_r) append_row(claims, "lem-r", entry.label, *a.lem_r);
    if (a.five_reg) {
      append_row(claims, "lem-5reg", entry.label, *a.five_reg);
      if (a.five_reg->status != Status::not_applicable) any_five_reg_applicable = true;
    }
    if (entry.wreath_parts && a.report) {
      auto h_it = index_by_label.find(entry.wreath_parts->first);
      auto s_it = s_dl.find(entry.wreath_parts->second);
      if (h_it != index_by_label.end() && results[h_it->second].report &&
          s_it != s_dl.end()) {
        append_row(claims, "eq-2.1", entry.label,
                   check_eq21(*a.report, results[h_it->second].report->group_derived_length,
                              s_it->second));
      } else {
        append_row(claims, "eq-2.1", entry.label,
                   Verdict{Status::not_applicable, "construction inputs not in catalog"});
      }
    }
    if (a.seress) append_row(claims, "seress-4", entry.label, *a.seress);
    if (a.palfy) append_row(claims, "palfy-wolf", entry.label, *a.palfy);
    if (a.gluck1) append_row(claims, "gluck-i", entry.label, *a.gluck1);
    if (a.gluck2) append_row(claims, "gluck-ii", entry.label, *a.gluck2);
    if (a.gluck3) append_row(claims, "gluck-iii", entry.label, *a.gluck3);
    if (a.min_two_point > report.max_min_two_point_dl)
      report.max_min_two_point_dl = a.min_two_point;
  }

  static const char* kClaimOrder[] = {"thm-main", "thm-mod-ii", "lem-oddqp", "thm-even",
                                      "lem-r",    "lem-5reg",   "eq-2.1",    "seress-4",
                                      "palfy-wolf", "gluck-i",  "gluck-ii",  "gluck-iii"};
  for (const char* id : kClaimOrder) {
    auto it = claims.find(id);
    if (it != claims.end()) report.claims.push_back(std::move(it->second));
  }
  if (!any_five_reg_applicable)
    report.notes.push_back(
        "lem-5reg: untested at desk scale (no catalog member reaches derived length 10)");
  return report;
}

}  // namespace solvstab
