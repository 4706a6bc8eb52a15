#include "solvstab/report.hpp"

#include <sstream>

#include <json.hpp>

namespace solvstab {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json orbit_rows_json(const GoodOrbitReport& rep) {
  ordered_json rows = ordered_json::array();
  for (const OrbitRow& r : rep.rows) {
    ordered_json row;
    row["rep"] = r.representative;
    row["size"] = r.size;
    row["centralizer_order"] = r.centralizer_order;
    row["derived_length"] = r.derived_length;
    row["abelian"] = r.abelian;
    row["cyclic"] = r.cyclic;
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json group_json(const GoodOrbitReport& rep) {
  ordered_json g;
  g["label"] = rep.label;
  g["p"] = rep.p;
  g["n"] = rep.n;
  g["space_size"] = rep.space_size;
  g["order"] = rep.group_order;
  g["derived_length"] = rep.group_derived_length;
  g["orbit_count"] = rep.orbit_count();
  g["good_count"] = rep.good_count();
  g["threshold"] = rep.threshold;
  g["orbits"] = orbit_rows_json(rep);
  return g;
}

}  // namespace

std::string report_json(const VerifyReport& report) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["threshold"] = report.threshold;
  j["max_min_two_point_dl"] = report.max_min_two_point_dl;
  j["all_pass"] = report.all_pass();
  ordered_json groups = ordered_json::array();
  for (const GoodOrbitReport& g : report.groups) groups.push_back(group_json(g));
  j["groups"] = std::move(groups);
  ordered_json claims = ordered_json::array();
  for (const ClaimReport& c : report.claims) {
    ordered_json cj;
    cj["id"] = c.claim_id;
    cj["pass"] = c.passed;
    cj["fail"] = c.failed;
    cj["not_applicable"] = c.inapplicable;
    ordered_json rows = ordered_json::array();
    for (const ClaimRow& r : c.rows) {
      ordered_json rj;
      rj["group"] = r.group;
      rj["status"] = to_string(r.status);
      rj["detail"] = r.detail;
      rows.push_back(std::move(rj));
    }
    cj["results"] = std::move(rows);
    claims.push_back(std::move(cj));
  }
  j["claims"] = std::move(claims);
  j["notes"] = report.notes;
  return j.dump(2) + "\n";
}

std::string report_markdown(const VerifyReport& report) {
  std::ostringstream os;
  os << "# Verification report\n\n";
  os << "threshold: " << report.threshold
     << "; observed maximum of the two-point derived length: "
     << report.max_min_two_point_dl << "\n\n";
  os << "| claim | pass | fail | n/a |\n|---|---:|---:|---:|\n";
  for (const ClaimReport& c : report.claims)
    os << "| " << c.claim_id << " | " << c.passed << " | " << c.failed << " | "
       << c.inapplicable << " |\n";
  os << "\n";
  for (const ClaimReport& c : report.claims) {
    if (c.failed == 0) continue;
    os << "## failures: " << c.claim_id << "\n\n";
    for (const ClaimRow& r : c.rows)
      if (r.status == Status::fail)
        os << "- " << r.group << ": " << r.detail << "\n";
    os << "\n";
  }
  if (!report.notes.empty()) {
    os << "## notes\n\n";
    for (const std::string& n : report.notes) os << "- " << n << "\n";
  }
  return os.str();
}

std::string analyze_report_json(const GoodOrbitReport& report) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["group"] = group_json(report);
  return j.dump(2) + "\n";
}

std::string analyze_report_markdown(const GoodOrbitReport& report) {
  std::ostringstream os;
  os << "# " << report.label << "\n\n";
  os << "F_" << report.p << "^" << report.n << ", |V| = " << report.space_size
     << ", |G| = " << report.group_order << ", dl(G) = " << report.group_derived_length
     << ", orbits r = " << report.orbit_count() << ", good orbits (dl <= "
     << report.threshold << "): " << report.good_count() << "\n\n";
  os << "| v | orbit size | |C(v)| | dl | abelian | cyclic |\n";
  os << "|---:|---:|---:|---:|---|---|\n";
  for (const OrbitRow& r : report.rows)
    os << "| " << r.representative << " | " << r.size << " | " << r.centralizer_order
       << " | " << r.derived_length << " | " << (r.abelian ? "yes" : "no") << " | "
       << (r.cyclic ? "yes" : "no") << " |\n";
  return os.str();
}

std::string analyze_report_csv(const GoodOrbitReport& report) {
  std::ostringstream os;
  os << "rep,size,centralizer_order,derived_length,abelian,cyclic\n";
  for (const OrbitRow& r : report.rows)
    os << r.representative << ',' << r.size << ',' << r.centralizer_order << ','
       << r.derived_length << ',' << (r.abelian ? 1 : 0) << ',' << (r.cyclic ? 1 : 0)
       << "\n";
  return os.str();
}

namespace {

ordered_json entry_json(const CatalogEntry& e) {
  ordered_json j;
  j["label"] = e.label;
  j["provenance"] = to_string(e.provenance);
  j["kind"] = e.is_matrix() ? "matrix" : "permutation";
  j["p"] = e.p;
  j["n"] = e.n;
  j["order"] = e.order;
  j["irreducible"] = e.irreducible;
  j["odd_order"] = e.odd_order;
  j["primitive_affine"] = e.primitive_affine;
  return j;
}

}  // namespace

std::string catalog_json(const std::vector<CatalogEntry>& entries) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  ordered_json arr = ordered_json::array();
  for (const CatalogEntry& e : entries) arr.push_back(entry_json(e));
  j["entries"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string catalog_markdown(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  os << "| label | provenance | p | n | order | irreducible | odd | primitive affine |\n";
  os << "|---|---|---:|---:|---:|---|---|---|\n";
  for (const CatalogEntry& e : entries)
    os << "| " << e.label << " | " << to_string(e.provenance) << " | " << e.p << " | "
       << e.n << " | " << e.order << " | " << (e.irreducible ? "yes" : "no") << " | "
       << (e.odd_order ? "yes" : "no") << " | " << (e.primitive_affine ? "yes" : "no")
       << " |\n";
  return os.str();
}

std::string catalog_csv(const std::vector<CatalogEntry>& entries) {
  std::ostringstream os;
  os << "label,provenance,kind,p,n,order,irreducible,odd_order,primitive_affine\n";
  for (const CatalogEntry& e : entries)
    os << e.label << ',' << to_string(e.provenance) << ','
       << (e.is_matrix() ? "matrix" : "permutation") << ',' << e.p << ',' << e.n << ','
       << e.order << ',' << (e.irreducible ? 1 : 0) << ',' << (e.odd_order ? 1 : 0) << ','
       << (e.primitive_affine ? 1 : 0) << "\n";
  return os.str();
}

std::string gluck_csv(const SubsetOrbitTable& table) {
  std::ostringstream os;
  os << "bitmask,size,stabilizer_order,regular,complement_orbit\n";
  for (std::size_t id = 0; id < table.num_orbits(); ++id)
    os << table.representative(id) << ',' << table.orbit_size(id) << ','
       << table.stabilizer_order(id) << ',' << (table.regular(id) ? 1 : 0) << ','
       << table.complement_orbit(id) << "\n";
  return os.str();
}

std::string gluck_json(const SubsetOrbitTable& table, const std::string& label) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["group"] = label;
  j["degree"] = table.degree();
  j["order"] = table.group_order();
  ordered_json rows = ordered_json::array();
  for (std::size_t id = 0; id < table.num_orbits(); ++id) {
    ordered_json r;
    r["bitmask"] = table.representative(id);
    r["size"] = table.orbit_size(id);
    r["stabilizer_order"] = table.stabilizer_order(id);
    r["regular"] = table.regular(id);
    r["complement_orbit"] = table.complement_orbit(id);
    rows.push_back(std::move(r));
  }
  j["orbits"] = std::move(rows);
  return j.dump(2) + "\n";
}

std::string gluck_markdown(const SubsetOrbitTable& table, const std::string& label) {
  std::ostringstream os;
  os << "# power-set orbits of " << label << "\n\n";
  os << "degree " << table.degree() << ", order " << table.group_order() << ", "
     << table.num_orbits() << " orbits\n\n";
  os << "| bitmask | size | stab | regular | complement orbit |\n";
  os << "|---:|---:|---:|---|---:|\n";
  for (std::size_t id = 0; id < table.num_orbits(); ++id)
    os << "| " << table.representative(id) << " | " << table.orbit_size(id) << " | "
       << table.stabilizer_order(id) << " | " << (table.regular(id) ? "yes" : "no")
       << " | " << table.complement_orbit(id) << " |\n";
  return os.str();
}

std::vector<MinDlRow> min_dl_table(const std::vector<CatalogEntry>& entries) {
  std::vector<MinDlRow> rows;
  for (const CatalogEntry& e : entries) {
    if (!e.primitive_affine) continue;
    PermGroup action = e.action();
    TwoPointResult two = min_two_point_dl(action);
    MinDlRow row;
    row.label = e.label;
    row.degree = action.degree();
    row.affine_order = action.order();
    row.x = two.x;
    row.y = two.y;
    row.min_derived_length = two.min_derived_length;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string min_dl_csv(const std::vector<MinDlRow>& rows) {
  std::ostringstream os;
  os << "label,degree,affine_order,x,y,min_derived_length\n";
  for (const MinDlRow& r : rows)
    os << r.label << ',' << r.degree << ',' << r.affine_order << ',' << r.x << ',' << r.y
       << ',' << r.min_derived_length << "\n";
  return os.str();
}

std::string min_dl_json(const std::vector<MinDlRow>& rows) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  ordered_json arr = ordered_json::array();
  int max_dl = -1;
  for (const MinDlRow& r : rows) {
    ordered_json rj;
    rj["label"] = r.label;
    rj["degree"] = r.degree;
    rj["affine_order"] = r.affine_order;
    rj["x"] = r.x;
    rj["y"] = r.y;
    rj["min_derived_length"] = r.min_derived_length;
    arr.push_back(std::move(rj));
    max_dl = std::max(max_dl, r.min_derived_length);
  }
  j["rows"] = std::move(arr);
  j["max_min_two_point_dl"] = max_dl;
  return j.dump(2) + "\n";
}

std::string min_dl_markdown(const std::vector<MinDlRow>& rows) {
  std::ostringstream os;
  os << "| label | degree | affine order | x | y | min dl |\n";
  os << "|---|---:|---:|---:|---:|---:|\n";
  for (const MinDlRow& r : rows)
    os << "| " << r.label << " | " << r.degree << " | " << r.affine_order << " | " << r.x
       << " | " << r.y << " | " << r.min_derived_length << " |\n";
  return os.str();
}

}  // namespace solvstab
