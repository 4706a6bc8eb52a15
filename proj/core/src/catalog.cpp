#include "solvstab/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "solvstab/errors.hpp"

namespace solvstab {

using nlohmann::json;

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::semilinear: return "semilinear";
    case Provenance::wreath: return "wreath";
    case Provenance::named: return "named";
    case Provenance::imported: return "imported";
  }
  return "?";
}

PermGroup CatalogEntry::action() const {
  if (is_matrix()) return affine_group(matrix());
  return perm();
}

CatalogEntry make_entry(std::string label, Provenance provenance, MatrixGroup group) {
  CatalogEntry e;
  e.label = std::move(label);
  e.provenance = provenance;
  e.p = group.characteristic();
  e.n = group.dimension();
  e.order = group.order();
  e.irreducible = is_irreducible(group);
  e.odd_order = (e.p % 2 == 1) && (e.order % 2 == 1);
  e.primitive_affine = is_primitive(affine_group(group));
  e.group = std::move(group);
  return e;
}

CatalogEntry make_entry(std::string label, Provenance provenance, PermGroup group) {
  CatalogEntry e;
  e.label = std::move(label);
  e.provenance = provenance;
  e.p = 0;
  e.n = group.degree();
  e.order = group.order();
  e.irreducible = false;
  e.odd_order = e.order % 2 == 1;
  e.primitive_affine = is_transitive(group) && is_primitive(group);
  e.group = std::move(group);
  return e;
}

namespace {

std::string semilinear_label(int p, int m, const SemilinearSubgroup& s) {
  std::string base = "Gamma(" + std::to_string(p) + "^" + std::to_string(m) + ")";
  if (s.is_full) return base;
  if (s.is_gamma0) return "Gamma0(" + std::to_string(p) + "^" + std::to_string(m) + ")";
  return base + ":d" + std::to_string(s.d) + "e" + std::to_string(s.e) + "c" +
         std::to_string(s.c);
}

std::int64_t ipow(int p, int e) {
  std::int64_t q = 1;
  for (int i = 0; i < e; ++i) q *= p;
  return q;
}

}  // namespace

std::vector<CatalogEntry> build_catalog(const CatalogLimits& limits,
                                        const std::vector<std::string>& import_paths) {
  std::vector<CatalogEntry> catalog;
  std::set<std::string> labels;
  auto add = [&](CatalogEntry e) {
    if (!labels.insert(e.label).second)
      throw PreconditionError("duplicate catalog label '" + e.label + "'");
    catalog.push_back(std::move(e));
  };

  // Semilinear families, and the pool the wreath construction draws from.
  struct Pool {
    int p, m;
    std::string label;
    MatrixGroup group;
  };
  std::vector<Pool> pool;
  for (int p = 2; p <= limits.max_field; ++p) {
    if (!is_prime(p)) continue;
    for (int m = 1; ipow(p, m) <= std::min(limits.max_field, limits.max_degree); ++m) {
      for (const SemilinearSubgroup& s :
           enumerate_semilinear_subgroups(p, m, /*irreducible_only=*/true)) {
        std::string label = semilinear_label(p, m, s);
        pool.push_back(Pool{p, m, label, s.group});
        add(make_entry(label, Provenance::semilinear, s.group));
      }
    }
  }

  // Wreath products of the irreducible semilinear subgroups with the
  // transitive solvable groups of degree 2..5.
  for (const Pool& h : pool) {
    for (int m = 2; m <= 5; ++m) {
      int dim = h.m * m;
      if (dim > limits.max_dimension) continue;
      if (ipow(h.p, dim) > limits.max_degree) continue;
      for (const NamedPermGroup& s : transitive_solvable_groups(m)) {
        CatalogEntry e = make_entry("Wr(" + h.label + "," + s.label + ")",
                                    Provenance::wreath, wreath_linear(h.group, s.group));
        e.wreath_parts = std::make_pair(h.label, s.label);
        add(std::move(e));
      }
    }
  }

  // Named solvable groups (the named_group constructor also covers
  // non-solvable GL(n,p) instances, which stay out of the catalog).
  for (const char* name : {"GL(2,2)", "GL(2,3)", "SL(2,3)", "Q8-in-GL(2,3)",
                           "C31:C3-in-GL(3,5)"}) {
    MatrixGroup g = named_group(name);
    if (ipow(g.characteristic(), g.dimension()) > limits.max_degree) continue;
    add(make_entry(name, Provenance::named, std::move(g)));
  }

  for (const std::string& path : import_paths) add(import_group(path));

  if (limits.odd_only) {
    std::vector<CatalogEntry> odd;
    for (CatalogEntry& e : catalog)
      if (e.odd_order) odd.push_back(std::move(e));
    catalog = std::move(odd);
  }
  return catalog;
}

namespace {

json parse_json(const std::string& text, const std::string& origin) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw ParseError("malformed JSON in " + origin);
  return j;
}

}  // namespace

CatalogEntry import_group_json(const std::string& json_text, const std::string& origin) {
  json j = parse_json(json_text, origin);
  if (!j.is_object()) throw ParseError(origin + ": top level must be an object");
  if (!j.contains("label") || !j["label"].is_string())
    throw ParseError(origin + ": missing string field 'label'");
  std::string label = j["label"].get<std::string>();
  if (!j.contains("generators") || !j["generators"].is_array())
    throw ParseError(origin + ": missing array field 'generators'");

  const bool has_dim = j.contains("dimension");
  const bool has_deg = j.contains("degree");
  if (has_dim == has_deg)
    throw ParseError(origin + ": exactly one of 'dimension' (matrix group) or 'degree' "
                              "(permutation group) is required");

  if (has_dim) {
    if (!j.contains("characteristic") || !j["characteristic"].is_number_integer())
      throw ParseError(origin + ": matrix group needs integer 'characteristic'");
    int p = j["characteristic"].get<int>();
    int n = j["dimension"].get<int>();
    if (!is_prime(p)) throw ParseError(origin + ": characteristic must be prime");
    if (n < 1) throw ParseError(origin + ": dimension must be >= 1");
    std::vector<Mat> gens;
    for (const json& gj : j["generators"]) {
      if (!gj.is_array() || static_cast<int>(gj.size()) != n * n)
        throw ParseError(origin + ": matrix generators must be row-major lists of " +
                         std::to_string(n * n) + " integers");
      Mat m(p, n);
      for (int i = 0; i < n * n; ++i) {
        int v = gj[static_cast<size_t>(i)].get<int>();
        if (v < 0 || v >= p) throw ParseError(origin + ": matrix entry out of range");
        m.a[static_cast<size_t>(i)] = v;
      }
      if (mat_det(m) == 0)
        throw ParseError(origin + ": generator matrix is not invertible");
      gens.push_back(std::move(m));
    }
    return make_entry(std::move(label), Provenance::imported,
                      MatrixGroup(p, n, std::move(gens)));
  }

  int degree = j["degree"].get<int>();
  if (degree < 1) throw ParseError(origin + ": degree must be >= 1");
  std::vector<Permutation> gens;
  for (const json& gj : j["generators"]) {
    if (gj.is_string()) {
      gens.push_back(parse_permutation(gj.get<std::string>(), degree));
    } else if (gj.is_array()) {
      std::vector<int> images;
      for (const json& x : gj) images.push_back(x.get<int>());
      if (static_cast<int>(images.size()) != degree)
        throw ParseError(origin + ": image list length does not match degree");
      gens.emplace_back(std::move(images));  // bijection validated by Permutation
    } else {
      throw ParseError(origin + ": permutation generators must be image lists or "
                                "cycle strings");
    }
  }
  return make_entry(std::move(label), Provenance::imported,
                    PermGroup(degree, std::move(gens)));
}

CatalogEntry import_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open import file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return import_group_json(ss.str(), path);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string export_group_json(const std::string& label, const MatrixGroup& M) {
  json j;
  j["label"] = label;
  j["characteristic"] = M.characteristic();
  j["dimension"] = M.dimension();
  json gens = json::array();
  for (const Mat& g : M.generators()) gens.push_back(g.a);
  j["generators"] = std::move(gens);
  return j.dump(2);
}

std::string export_group_json(const std::string& label, const PermGroup& G) {
  json j;
  j["label"] = label;
  j["degree"] = G.degree();
  json gens = json::array();
  for (const Permutation& g : G.generators()) gens.push_back(g.images());
  j["generators"] = std::move(gens);
  return j.dump(2);
}

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog,
                               const std::string& label) {
  for (const CatalogEntry& e : catalog)
    if (e.label == label) return &e;
  return nullptr;
}

}  // namespace solvstab
