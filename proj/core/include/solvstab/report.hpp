#pragma once

#include <string>
#include <vector>

#include "solvstab/catalog.hpp"
#include "solvstab/powerset.hpp"
#include "solvstab/verifier.hpp"

namespace solvstab {

/// Version of the machine-readable report schema; bumped on breaking change.
inline constexpr int kReportSchemaVersion = 1;

std::string report_json(const VerifyReport& report);
std::string report_markdown(const VerifyReport& report);

std::string analyze_report_json(const GoodOrbitReport& report);
std::string analyze_report_markdown(const GoodOrbitReport& report);
std::string analyze_report_csv(const GoodOrbitReport& report);

std::string catalog_json(const std::vector<CatalogEntry>& entries);
std::string catalog_markdown(const std::vector<CatalogEntry>& entries);
std::string catalog_csv(const std::vector<CatalogEntry>& entries);

/// Per-orbit power-set table: bitmask, size, stabilizer order, regular flag,
/// complement-orbit id. One row per orbit, ascending representative.
std::string gluck_csv(const SubsetOrbitTable& table);
std::string gluck_json(const SubsetOrbitTable& table, const std::string& label);
std::string gluck_markdown(const SubsetOrbitTable& table, const std::string& label);

struct MinDlRow {
  std::string label;
  int degree = 0;
  std::uint64_t affine_order = 0;
  int x = 0, y = 0;
  int min_derived_length = 0;
};

/// Two-point derived-length minima across the primitive affine entries.
std::vector<MinDlRow> min_dl_table(const std::vector<CatalogEntry>& entries);
std::string min_dl_csv(const std::vector<MinDlRow>& rows);
std::string min_dl_json(const std::vector<MinDlRow>& rows);
std::string min_dl_markdown(const std::vector<MinDlRow>& rows);

}  // namespace solvstab
